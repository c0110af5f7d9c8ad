//! Canonical-form arithmetic in the Leavitt path algebra of a finite graph.
//!
//! Elements are finite R-linear combinations of normal-form monomials
//! `alpha beta*` (a pair of paths meeting at a common range vertex).  The
//! normal form eliminates, for every regular vertex, the product `e e*` of
//! its designated (first-declared) edge by rewriting it through the
//! relation `v = sum of f f* over f out of v`.  A monomial carries at most
//! one redex (at its junction), so the rewriting is deterministic and
//! terminates; equality of elements is structural equality of normal forms.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Graph, Path, VertexId};
use crate::ring::{RingDescriptor, RingElement};

/// A normal-form basis monomial `alpha beta*` with `r(alpha) = r(beta)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    alpha: Path,
    beta: Path,
}

impl Monomial {
    pub fn alpha(&self) -> &Path {
        &self.alpha
    }

    pub fn beta(&self) -> &Path {
        &self.beta
    }

    /// Grading degree `|alpha| - |beta|`.
    pub fn degree(&self) -> i64 {
        self.alpha.len() as i64 - self.beta.len() as i64
    }

    /// True when the pair does not end in the designated edge on both
    /// sides, i.e. it is not a CK-relation redex.
    pub fn is_normal(g: &Graph, alpha: &Path, beta: &Path) -> bool {
        match (alpha.last_edge(), beta.last_edge()) {
            (Some(ea), Some(eb)) if ea == eb => g.designated_edge(g.source(ea)) != Some(ea),
            _ => true,
        }
    }

    fn factor_string(&self, g: &Graph) -> String {
        if self.alpha.is_empty() && self.beta.is_empty() {
            return g.vertex_name(self.alpha.source(g)).to_string();
        }
        let mut factors: Vec<String> = self
            .alpha
            .edges()
            .iter()
            .map(|&e| g.edge_name(e).to_string())
            .collect();
        for &e in self.beta.edges().iter().rev() {
            factors.push(format!("{}*", g.edge_name(e)));
        }
        factors.join(" ")
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Term order used for storage, iteration and printing:
/// (degree, alpha, beta).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.alpha.cmp(&other.alpha))
            .then_with(|| self.beta.cmp(&other.beta))
    }
}

/// Which generator of the algebra to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    Vertex,
    Edge,
    GhostEdge,
}

/// An element of `L_R(E)` in canonical form: a map from normal monomials to
/// nonzero coefficients.  The zero element is the empty map.
#[derive(Debug, Clone)]
pub struct Element {
    graph: Arc<Graph>,
    ring: RingDescriptor,
    terms: BTreeMap<Monomial, RingElement>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring
            && (Arc::ptr_eq(&self.graph, &other.graph) || self.graph == other.graph)
            && self.terms == other.terms
    }
}
impl Eq for Element {}

impl Element {
    pub fn zero(graph: &Arc<Graph>, ring: RingDescriptor) -> Self {
        Element {
            graph: graph.clone(),
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RingElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> RingElement {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    /// Coefficient of the vertex monomial `(v, v)`.
    pub fn vertex_coefficient(&self, v: VertexId) -> RingElement {
        let m = Monomial {
            alpha: Path::vertex(v),
            beta: Path::vertex(v),
        };
        self.coefficient(&m)
    }

    /// The generator `v`, `e`, or `e*` as a canonical element.
    pub fn generator(
        graph: &Arc<Graph>,
        ring: RingDescriptor,
        kind: GeneratorKind,
        name: &str,
    ) -> Result<Self> {
        let (alpha, beta) = match kind {
            GeneratorKind::Vertex => {
                let v = graph
                    .vertex_id(name)
                    .ok_or_else(|| Error::UnknownName(name.to_string()))?;
                (Path::vertex(v), Path::vertex(v))
            }
            GeneratorKind::Edge => {
                let e = graph
                    .edge_id(name)
                    .ok_or_else(|| Error::UnknownName(name.to_string()))?;
                (Path::edge(graph, e), Path::vertex(graph.range(e)))
            }
            GeneratorKind::GhostEdge => {
                let e = graph
                    .edge_id(name)
                    .ok_or_else(|| Error::UnknownName(name.to_string()))?;
                (Path::vertex(graph.range(e)), Path::edge(graph, e))
            }
        };
        Element::from_raw(graph, ring, vec![(alpha, beta, ring.one())])
    }

    /// The real path `alpha` as an element (monomial `(alpha, r(alpha))`).
    pub fn real_path(graph: &Arc<Graph>, ring: RingDescriptor, alpha: Path) -> Self {
        let beta = Path::vertex(alpha.range(graph));
        Element::from_raw(graph, ring, vec![(alpha, beta, ring.one())])
            .expect("a path with its range vertex is composable")
    }

    /// The ghost path `alpha*` as an element (monomial `(r(alpha), alpha)`).
    pub fn ghost_path(graph: &Arc<Graph>, ring: RingDescriptor, alpha: Path) -> Self {
        let a = Path::vertex(alpha.range(graph));
        Element::from_raw(graph, ring, vec![(a, alpha, ring.one())])
            .expect("a path with its range vertex is composable")
    }

    /// Normalizes an arbitrary linear combination of composable `(alpha,
    /// beta)` pairs into canonical form.  Rejects pairs with
    /// `r(alpha) != r(beta)` and coefficients from a different ring.
    pub fn from_raw(
        graph: &Arc<Graph>,
        ring: RingDescriptor,
        raw: Vec<(Path, Path, RingElement)>,
    ) -> Result<Self> {
        for (alpha, beta, coeff) in &raw {
            if alpha.range(graph) != beta.range(graph) {
                return Err(Error::NonComposablePair);
            }
            if coeff.ring() != ring {
                return Err(Error::RingMismatch(coeff.ring(), ring));
            }
        }
        let mut elem = Element::zero(graph, ring);
        elem.absorb_raw(raw)?;
        Ok(elem)
    }

    /// Rewrites the given pairs to normal form and accumulates them into
    /// `self.terms`.  Preconditions (composability, matching rings) are the
    /// caller's responsibility.
    fn absorb_raw(&mut self, raw: Vec<(Path, Path, RingElement)>) -> Result<()> {
        let graph = self.graph.clone();
        let mut work = raw;
        while let Some((alpha, beta, coeff)) = work.pop() {
            if coeff.is_zero() {
                continue;
            }
            if Monomial::is_normal(&graph, &alpha, &beta) {
                let mono = Monomial { alpha, beta };
                match self.terms.entry(mono) {
                    Entry::Occupied(mut occ) => {
                        let sum = occ.get().add(&coeff)?;
                        if sum.is_zero() {
                            occ.remove();
                        } else {
                            *occ.get_mut() = sum;
                        }
                    }
                    Entry::Vacant(vac) => {
                        vac.insert(coeff);
                    }
                }
            } else {
                // alpha = alpha' e, beta = beta' e with e the designated
                // edge of v = s(e).  Rewrite through  e e* = v - sum f f*.
                let e = alpha.last_edge().expect("redex has a last edge");
                let v = graph.source(e);
                let alpha_p = alpha.drop_last(&graph);
                let beta_p = beta.drop_last(&graph);
                for &f in graph.out_edges(v) {
                    if f != e {
                        work.push((
                            alpha_p.append(&graph, f),
                            beta_p.append(&graph, f),
                            coeff.neg(),
                        ));
                    }
                }
                work.push((alpha_p, beta_p, coeff));
            }
        }
        Ok(())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring, other.ring));
        }
        if !Arc::ptr_eq(&self.graph, &other.graph) && self.graph != other.graph {
            return Err(Error::GraphMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            match out.terms.entry(m.clone()) {
                Entry::Occupied(mut occ) => {
                    let sum = occ.get().add(c)?;
                    if sum.is_zero() {
                        occ.remove();
                    } else {
                        *occ.get_mut() = sum;
                    }
                }
                Entry::Vacant(vac) => {
                    vac.insert(c.clone());
                }
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Coefficientwise scalar action.
    pub fn scale(&self, r: &RingElement) -> Result<Self> {
        if r.ring() != self.ring {
            return Err(Error::RingMismatch(r.ring(), self.ring));
        }
        let mut out = Element::zero(&self.graph, self.ring);
        for (m, c) in &self.terms {
            let prod = c.mul(r)?;
            if !prod.is_zero() {
                out.terms.insert(m.clone(), prod);
            }
        }
        Ok(out)
    }

    /// Product of two canonical elements: the bilinear extension of the
    /// four-case rule for `(alpha beta*)(gamma delta*)`, followed by
    /// renormalization.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let g = &self.graph;
        let mut raw = Vec::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((alpha, beta)) = mono_mul(g, m1, m2) {
                    raw.push((alpha, beta, c1.mul(c2)?));
                }
            }
        }
        let mut out = Element::zero(g, self.ring);
        out.absorb_raw(raw)?;
        Ok(out)
    }

    /// The involution `(sum r alpha beta*)* = sum r beta alpha*`.  Normality
    /// is symmetric in the two paths, so no renormalization is needed.
    pub fn star(&self) -> Self {
        let mut out = Element::zero(&self.graph, self.ring);
        for (m, c) in &self.terms {
            debug_assert!(Monomial::is_normal(&self.graph, &m.beta, &m.alpha));
            out.terms.insert(
                Monomial {
                    alpha: m.beta.clone(),
                    beta: m.alpha.clone(),
                },
                c.clone(),
            );
        }
        out
    }

    /// Splits the element into its homogeneous components by degree
    /// `|alpha| - |beta|`.
    pub fn graded_components(&self) -> GradedDecomposition {
        let mut components: BTreeMap<i64, Element> = BTreeMap::new();
        for (m, c) in &self.terms {
            components
                .entry(m.degree())
                .or_insert_with(|| Element::zero(&self.graph, self.ring))
                .terms
                .insert(m.clone(), c.clone());
        }
        GradedDecomposition { components }
    }

    /// `Some(k)` when every monomial has degree `k` (zero elements report
    /// degree 0).
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = match degrees.next() {
            Some(d) => d,
            None => return Some(0),
        };
        degrees.all(|d| d == first).then_some(first)
    }

    /// True when no monomial carries a ghost part.
    pub fn is_real(&self) -> bool {
        self.terms.keys().all(|m| m.beta.is_empty())
    }

    /// Longest ghost part over all monomials.
    pub fn max_ghost_len(&self) -> usize {
        self.terms.keys().map(|m| m.beta.len()).max().unwrap_or(0)
    }

    /// Degree of a polynomial in real edges: the maximal `|alpha|`.
    pub fn real_degree(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        if !self.is_real() {
            return Err(Error::NotRealPolynomial);
        }
        Ok(self
            .terms
            .keys()
            .map(|m| m.alpha.len())
            .max()
            .expect("nonzero element has terms"))
    }

    /// The idempotent `t = sum of support vertices`, satisfying
    /// `t x = x t = x`.  Returns zero for the zero element.
    pub fn local_unit(&self) -> Self {
        let mut vertices: Vec<VertexId> = Vec::new();
        for m in self.terms.keys() {
            for v in [m.alpha.source(&self.graph), m.beta.source(&self.graph)] {
                if !vertices.contains(&v) {
                    vertices.push(v);
                }
            }
        }
        let mut out = Element::zero(&self.graph, self.ring);
        for v in vertices {
            out.terms.insert(
                Monomial {
                    alpha: Path::vertex(v),
                    beta: Path::vertex(v),
                },
                self.ring.one(),
            );
        }
        out
    }
}

/// The four-case monomial product; `None` encodes the zero product.
fn mono_mul(g: &Graph, m1: &Monomial, m2: &Monomial) -> Option<(Path, Path)> {
    let (a1, b1) = (&m1.alpha, &m1.beta);
    let (a2, b2) = (&m2.alpha, &m2.beta);
    if b1.is_prefix_of(g, a2) {
        // a2 = b1 . gamma  =>  (a1 . gamma) b2*
        let gamma = b1.strip_prefix(g, a2);
        let alpha = a1.concat(g, &gamma).expect("junction matches by prefix");
        Some((alpha, b2.clone()))
    } else if a2.is_prefix_of(g, b1) {
        // b1 = a2 . rest  =>  a1 (b2 . rest)*
        let rest = a2.strip_prefix(g, b1);
        let beta = b2.concat(g, &rest).expect("junction matches by prefix");
        Some((a1.clone(), beta))
    } else {
        None
    }
}

/// An element split into homogeneous pieces; the pieces sum back to the
/// original and no zero piece is stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDecomposition {
    components: BTreeMap<i64, Element>,
}

impl GradedDecomposition {
    pub fn components(&self) -> impl Iterator<Item = (i64, &Element)> {
        self.components.iter().map(|(d, e)| (*d, e))
    }

    pub fn component(&self, degree: i64) -> Option<&Element> {
        self.components.get(&degree)
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.components.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let factors = m.factor_string(&self.graph);
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    // keep the leading coefficient inside the expression
                    // grammar: `-1 v`, not `- v`
                    write!(f, "-{mag} {factors}")?;
                } else if mag.is_one() {
                    write!(f, "{factors}")?;
                } else {
                    write!(f, "{mag} {factors}")?;
                }
                first = false;
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
                if mag.is_one() {
                    write!(f, "{factors}")?;
                } else {
                    write!(f, "{mag} {factors}")?;
                }
            }
        }
        Ok(())
    }
}
