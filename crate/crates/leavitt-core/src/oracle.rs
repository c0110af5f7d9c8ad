//! Independent matrix representations used as correctness oracles, plus
//! coefficient base change and Laurent-polynomial ideal membership.
//!
//! Two faithful finite models are available: a single cycle of length `n`
//! maps onto `n x n` matrices over Laurent polynomials, and an acyclic
//! graph acts on the free module spanned by its paths into sinks.  Both are
//! computed entirely independently of the normal-form engine, so agreement
//! between the two routes is meaningful evidence.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::Element;
use crate::error::{Error, Result};
use crate::graph::{Graph, Path, VertexClass, VertexId};
use crate::ring::{RingDescriptor, RingElement, RingHom};

/// A Laurent polynomial with exact coefficients; the zero polynomial is the
/// empty map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    ring: RingDescriptor,
    coeffs: BTreeMap<i64, RingElement>,
}

impl LaurentPoly {
    pub fn zero(ring: RingDescriptor) -> Self {
        LaurentPoly {
            ring,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(c: RingElement) -> Self {
        LaurentPoly::monomial(0, c)
    }

    pub fn one(ring: RingDescriptor) -> Self {
        LaurentPoly::constant(ring.one())
    }

    /// `c * x^exp`.
    pub fn monomial(exp: i64, c: RingElement) -> Self {
        let ring = c.ring();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        LaurentPoly { ring, coeffs }
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, exp: i64) -> RingElement {
        self.coeffs
            .get(&exp)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &RingElement)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring, other.ring));
        }
        let mut coeffs = self.coeffs.clone();
        for (exp, c) in &other.coeffs {
            let sum = match coeffs.get(exp) {
                Some(existing) => existing.add(c)?,
                None => c.clone(),
            };
            if sum.is_zero() {
                coeffs.remove(exp);
            } else {
                coeffs.insert(*exp, sum);
            }
        }
        Ok(LaurentPoly {
            ring: self.ring,
            coeffs,
        })
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            ring: self.ring,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring, other.ring));
        }
        let mut out = LaurentPoly::zero(self.ring);
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                let term = LaurentPoly::monomial(e1 + e2, c1.mul(c2)?);
                out = out.add(&term)?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, r: &RingElement) -> Result<Self> {
        let mut out = LaurentPoly::zero(self.ring);
        for (e, c) in &self.coeffs {
            out = out.add(&LaurentPoly::monomial(*e, c.mul(r)?))?;
        }
        Ok(out)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match exp {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c} x")?,
                _ => write!(f, "{c} x^{exp}")?,
            }
        }
        Ok(())
    }
}

/// A square matrix of Laurent polynomials (constant polynomials for plain
/// matrix rings), stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRep {
    ring: RingDescriptor,
    size: usize,
    entries: Vec<LaurentPoly>,
}

impl MatrixRep {
    pub fn zero(ring: RingDescriptor, size: usize) -> Self {
        MatrixRep {
            ring,
            size,
            entries: vec![LaurentPoly::zero(ring); size * size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn entry(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.size + col]
    }

    pub fn set_entry(&mut self, row: usize, col: usize, value: LaurentPoly) {
        self.entries[row * self.size + col] = value;
    }

    /// Matrix unit `E_{row,col}` scaled by `value`.
    pub fn unit(
        ring: RingDescriptor,
        size: usize,
        row: usize,
        col: usize,
        value: LaurentPoly,
    ) -> Self {
        let mut m = MatrixRep::zero(ring, size);
        m.set_entry(row, col, value);
        m
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.size, other.size, "matrix sizes must agree");
        let mut out = MatrixRep::zero(self.ring, self.size);
        for (i, (a, b)) in self.entries.iter().zip(&other.entries).enumerate() {
            out.entries[i] = a.add(b)?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.size, other.size, "matrix sizes must agree");
        let n = self.size;
        let mut out = MatrixRep::zero(self.ring, n);
        for i in 0..n {
            for k in 0..n {
                if self.entry(i, k).is_zero() {
                    continue;
                }
                for j in 0..n {
                    if other.entry(k, j).is_zero() {
                        continue;
                    }
                    let term = self.entry(i, k).mul(other.entry(k, j))?;
                    out.entries[i * n + j] = out.entries[i * n + j].add(&term)?;
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, r: &RingElement) -> Result<Self> {
        let mut out = MatrixRep::zero(self.ring, self.size);
        for (i, a) in self.entries.iter().enumerate() {
            out.entries[i] = a.scale(r)?;
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let n = self.size;
        let mut out = MatrixRep::zero(self.ring, n);
        for i in 0..n {
            for j in 0..n {
                out.set_entry(j, i, self.entry(i, j).clone());
            }
        }
        out
    }
}

/// An assignment of matrices to every vertex, edge, and ghost edge of a
/// graph.
#[derive(Debug, Clone)]
pub struct EFamily {
    graph: Arc<Graph>,
    ring: RingDescriptor,
    size: usize,
    vertices: Vec<MatrixRep>,
    edges: Vec<MatrixRep>,
    ghosts: Vec<MatrixRep>,
}

impl EFamily {
    pub fn new(
        graph: &Arc<Graph>,
        ring: RingDescriptor,
        size: usize,
        vertices: Vec<MatrixRep>,
        edges: Vec<MatrixRep>,
        ghosts: Vec<MatrixRep>,
    ) -> Result<Self> {
        let complete = vertices.len() == graph.vertex_count()
            && edges.len() == graph.edge_count()
            && ghosts.len() == graph.edge_count()
            && vertices
                .iter()
                .chain(&edges)
                .chain(&ghosts)
                .all(|m| m.size == size && m.ring == ring);
        if !complete {
            return Err(Error::IncompleteFamily);
        }
        Ok(EFamily {
            graph: graph.clone(),
            ring,
            size,
            vertices,
            edges,
            ghosts,
        })
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn vertex_rep(&self, v: VertexId) -> &MatrixRep {
        &self.vertices[v.0]
    }

    pub fn edge_rep(&self, e: crate::graph::EdgeId) -> &MatrixRep {
        &self.edges[e.0]
    }

    pub fn ghost_rep(&self, e: crate::graph::EdgeId) -> &MatrixRep {
        &self.ghosts[e.0]
    }

    /// Checks the defining relations exactly in the matrix target:
    /// pairwise orthogonal idempotent vertices, `s(e)e = e r(e) = e`,
    /// `r(e)e* = e* s(e) = e*`, `e* f = delta r(e)`, and the CK relation
    /// `v = sum e e*` at every regular vertex.
    pub fn verify(&self) -> Result<bool> {
        let g = &self.graph;
        for v in g.vertex_ids() {
            for w in g.vertex_ids() {
                let prod = self.vertex_rep(v).mul(self.vertex_rep(w))?;
                let expect = if v == w {
                    self.vertex_rep(v).clone()
                } else {
                    MatrixRep::zero(self.ring, self.size)
                };
                if prod != expect {
                    return Ok(false);
                }
            }
        }
        for e in g.edge_ids() {
            let edge = self.edge_rep(e);
            let ghost = self.ghost_rep(e);
            if self.vertex_rep(g.source(e)).mul(edge)? != *edge
                || edge.mul(self.vertex_rep(g.range(e)))? != *edge
            {
                return Ok(false);
            }
            if self.vertex_rep(g.range(e)).mul(ghost)? != *ghost
                || ghost.mul(self.vertex_rep(g.source(e)))? != *ghost
            {
                return Ok(false);
            }
            for f in g.edge_ids() {
                let prod = self.ghost_rep(e).mul(self.edge_rep(f))?;
                let expect = if e == f {
                    self.vertex_rep(g.range(e)).clone()
                } else {
                    MatrixRep::zero(self.ring, self.size)
                };
                if prod != expect {
                    return Ok(false);
                }
            }
        }
        for v in g.vertex_ids() {
            if g.classify_vertex(v) != VertexClass::Regular {
                continue;
            }
            let mut sum = MatrixRep::zero(self.ring, self.size);
            for &e in g.out_edges(v) {
                sum = sum.add(&self.edge_rep(e).mul(self.ghost_rep(e))?)?;
            }
            if sum != *self.vertex_rep(v) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn path_rep(&self, p: &Path) -> Result<MatrixRep> {
        if p.is_empty() {
            return Ok(self.vertex_rep(p.source(&self.graph)).clone());
        }
        let mut acc = self.edge_rep(p.edges()[0]).clone();
        for &e in &p.edges()[1..] {
            acc = acc.mul(self.edge_rep(e))?;
        }
        Ok(acc)
    }

    fn ghost_path_rep(&self, p: &Path) -> Result<MatrixRep> {
        if p.is_empty() {
            return Ok(self.vertex_rep(p.source(&self.graph)).clone());
        }
        let edges = p.edges();
        let mut acc = self.ghost_rep(edges[edges.len() - 1]).clone();
        for &e in edges[..edges.len() - 1].iter().rev() {
            acc = acc.mul(self.ghost_rep(e))?;
        }
        Ok(acc)
    }

    /// The induced algebra homomorphism applied to a canonical element.
    pub fn apply(&self, x: &Element) -> Result<MatrixRep> {
        if !Arc::ptr_eq(x.graph(), &self.graph) && **x.graph() != *self.graph {
            return Err(Error::GraphMismatch);
        }
        if x.ring() != self.ring {
            return Err(Error::RingMismatch(x.ring(), self.ring));
        }
        let mut out = MatrixRep::zero(self.ring, self.size);
        for (m, c) in x.terms() {
            let term = self
                .path_rep(m.alpha())?
                .mul(&self.ghost_path_rep(m.beta())?)?
                .scale(c)?;
            out = out.add(&term)?;
        }
        Ok(out)
    }
}

/// Orders the vertices and edges of a single-cycle graph along the cycle,
/// starting from the first-declared vertex.
fn cycle_order(g: &Graph) -> Result<(Vec<VertexId>, Vec<crate::graph::EdgeId>)> {
    let n = g.vertex_count();
    if n == 0 || g.edge_count() != n {
        return Err(Error::NotACycleGraph);
    }
    for v in g.vertex_ids() {
        if g.out_edges(v).len() != 1 || g.in_edges(v).len() != 1 {
            return Err(Error::NotACycleGraph);
        }
    }
    let start = VertexId(0);
    let mut vertices = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(n);
    let mut cur = start;
    for _ in 0..n {
        vertices.push(cur);
        let e = g.out_edges(cur)[0];
        edges.push(e);
        cur = g.range(e);
    }
    if cur != start || vertices.len() != n {
        return Err(Error::NotACycleGraph);
    }
    Ok((vertices, edges))
}

/// The Leavitt family of a single `n`-cycle inside `M_n(R[x, x^-1])`:
/// vertices to diagonal units, edges to superdiagonal units with the
/// Laurent variable on the closing edge, ghosts transposed with `x^-1`.
pub fn cycle_family(g: &Arc<Graph>, ring: RingDescriptor) -> Result<EFamily> {
    let (vertices, edges) = cycle_order(g)?;
    let n = vertices.len();
    let mut vertex_reps = vec![MatrixRep::zero(ring, n); g.vertex_count()];
    let mut edge_reps = vec![MatrixRep::zero(ring, n); g.edge_count()];
    let mut ghost_reps = vec![MatrixRep::zero(ring, n); g.edge_count()];
    for (i, &v) in vertices.iter().enumerate() {
        vertex_reps[v.0] = MatrixRep::unit(ring, n, i, i, LaurentPoly::one(ring));
    }
    for (i, &e) in edges.iter().enumerate() {
        let (value, inverse) = if i + 1 == n {
            (
                LaurentPoly::monomial(1, ring.one()),
                LaurentPoly::monomial(-1, ring.one()),
            )
        } else {
            (LaurentPoly::one(ring), LaurentPoly::one(ring))
        };
        let j = (i + 1) % n;
        edge_reps[e.0] = MatrixRep::unit(ring, n, i, j, value);
        ghost_reps[e.0] = MatrixRep::unit(ring, n, j, i, inverse);
    }
    EFamily::new(g, ring, n, vertex_reps, edge_reps, ghost_reps)
}

/// Image of an element of a single-cycle graph in `M_n(R[x, x^-1])`.
pub fn cycle_representation(x: &Element) -> Result<MatrixRep> {
    cycle_family(x.graph(), x.ring())?.apply(x)
}

/// The Leavitt family of an acyclic graph acting on the free module whose
/// basis is the (finite) set of paths ending at sinks: a vertex projects
/// onto the paths starting at it, an edge prepends itself, and a ghost edge
/// strips it.
pub fn acyclic_family(g: &Arc<Graph>, ring: RingDescriptor) -> Result<EFamily> {
    if !g.simple_cycles().is_empty() {
        return Err(Error::NotAcyclic);
    }
    let longest = g.vertex_count().saturating_sub(1);
    let basis: Vec<Path> = g
        .enumerate_paths(longest)
        .into_iter()
        .filter(|p| g.classify_vertex(p.range(g)) == VertexClass::Sink)
        .collect();
    let index: HashMap<Path, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let n = basis.len();

    let mut vertex_reps = vec![MatrixRep::zero(ring, n); g.vertex_count()];
    for (i, p) in basis.iter().enumerate() {
        let v = p.source(g);
        vertex_reps[v.0].set_entry(i, i, LaurentPoly::one(ring));
    }
    let mut edge_reps = vec![MatrixRep::zero(ring, n); g.edge_count()];
    for e in g.edge_ids() {
        for (i, p) in basis.iter().enumerate() {
            if p.source(g) == g.range(e) {
                let extended = Path::edge(g, e).concat(g, p).expect("prepending composes");
                let j = index[&extended];
                edge_reps[e.0].set_entry(j, i, LaurentPoly::one(ring));
            }
        }
    }
    let ghost_reps: Vec<MatrixRep> = edge_reps.iter().map(MatrixRep::transpose).collect();
    EFamily::new(g, ring, n, vertex_reps, edge_reps, ghost_reps)
}

/// Image of an element of an acyclic graph in its path-to-sink matrix
/// model.
pub fn acyclic_representation(x: &Element) -> Result<MatrixRep> {
    acyclic_family(x.graph(), x.ring())?.apply(x)
}

/// Pushes an element along a coefficient homomorphism, dropping terms whose
/// coefficients die.  This realizes the restriction `x -> 1 (x) x` of the
/// base-change isomorphism without materializing a tensor product.
pub fn base_change(h: &RingHom, x: &Element) -> Result<Element> {
    if x.ring() != h.source() {
        return Err(Error::RingMismatch(x.ring(), h.source()));
    }
    let raw = x
        .terms()
        .map(|(m, c)| Ok((m.alpha().clone(), m.beta().clone(), h.apply(c)?)))
        .collect::<Result<Vec<_>>>()?;
    Element::from_raw(x.graph(), h.target(), raw)
}

/// Membership of `p` in the principal ideal generated by `gen` inside
/// `Q[x, x^-1]`.
///
/// Units of the Laurent ring are the monomials, so after shifting both
/// polynomials to have nonzero constant term the question reduces to
/// ordinary polynomial divisibility over `Q`.
pub fn laurent_principal_member(p: &LaurentPoly, gen: &LaurentPoly) -> Result<bool> {
    if p.ring() != RingDescriptor::Rationals || gen.ring() != RingDescriptor::Rationals {
        return Err(Error::NonFieldCoefficients);
    }
    if gen.is_zero() {
        return Ok(p.is_zero());
    }
    if p.is_zero() {
        return Ok(true);
    }
    let shifted = |q: &LaurentPoly| -> Vec<RingElement> {
        let min = q.min_exp().expect("nonzero polynomial");
        let max = q.max_exp().expect("nonzero polynomial");
        (min..=max).map(|e| q.coefficient(e)).collect()
    };
    let dividend = shifted(p);
    let divisor = shifted(gen);
    Ok(poly_remainder_is_zero(&dividend, &divisor))
}

/// Long division of polynomials over the rationals; returns whether the
/// remainder vanishes.  Coefficient vectors are little-endian with a
/// nonzero leading (last) coefficient.
fn poly_remainder_is_zero(dividend: &[RingElement], divisor: &[RingElement]) -> bool {
    let q = RingDescriptor::Rationals;
    let mut rem: Vec<RingElement> = dividend.to_vec();
    let d = divisor.len() - 1;
    let lead = &divisor[d];
    while rem.len() > d {
        let k = rem.len() - 1;
        let factor = rem[k].div(lead).expect("rational division");
        if !factor.is_zero() {
            for i in 0..=d {
                let delta = divisor[i].mul(&factor).expect("same ring");
                rem[k - d + i] = rem[k - d + i].sub(&delta).expect("same ring");
            }
        }
        debug_assert!(rem[k].is_zero());
        rem.pop();
        let _ = q;
    }
    rem.iter().all(RingElement::is_zero)
}

/// Outcome of the seeded differential suite for one graph and ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DifferentialReport {
    pub pairs: usize,
    pub family_verified: bool,
    pub additive_failures: usize,
    pub multiplicative_failures: usize,
    pub faithfulness_failures: usize,
}

impl DifferentialReport {
    pub fn all_passed(&self) -> bool {
        self.family_verified
            && self.additive_failures == 0
            && self.multiplicative_failures == 0
            && self.faithfulness_failures == 0
    }
}

/// Runs the representation-vs-normal-form differential suite on a graph
/// that is either a single cycle or acyclic.
pub fn differential_suite(
    g: &Arc<Graph>,
    ring: RingDescriptor,
    seed: u64,
    pairs: usize,
) -> Result<DifferentialReport> {
    use rand::SeedableRng;
    let family = match cycle_family(g, ring) {
        Ok(f) => f,
        Err(Error::NotACycleGraph) => acyclic_family(g, ring)?,
        Err(e) => return Err(e),
    };
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut report = DifferentialReport {
        pairs,
        family_verified: family.verify()?,
        additive_failures: 0,
        multiplicative_failures: 0,
        faithfulness_failures: 0,
    };
    for _ in 0..pairs {
        let x = crate::sample::element(&mut rng, g, ring, 4, 3);
        let y = crate::sample::element(&mut rng, g, ring, 4, 3);
        let rx = family.apply(&x)?;
        let ry = family.apply(&y)?;
        let sum = x.add(&y)?;
        let prod = x.mul(&y)?;
        if family.apply(&sum)? != rx.add(&ry)? {
            report.additive_failures += 1;
        }
        if family.apply(&prod)? != rx.mul(&ry)? {
            report.multiplicative_failures += 1;
        }
        for (elem, rep) in [(&x, &rx), (&y, &ry)] {
            if elem.is_zero() != rep.is_zero() {
                report.faithfulness_failures += 1;
            }
        }
        for elem in [&sum, &prod] {
            if elem.is_zero() != family.apply(elem)?.is_zero() {
                report.faithfulness_failures += 1;
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GeneratorKind;
    use crate::fixtures;

    const Z: RingDescriptor = RingDescriptor::Integers;
    const Q: RingDescriptor = RingDescriptor::Rationals;

    fn arc(name: &str) -> Arc<Graph> {
        Arc::new(fixtures::graph(name))
    }

    fn gen(g: &Arc<Graph>, kind: GeneratorKind, name: &str) -> Element {
        Element::generator(g, Z, kind, name).unwrap()
    }

    #[test]
    fn cycle_family_c1_verifies() {
        let c1 = arc("C1");
        let fam = cycle_family(&c1, Z).unwrap();
        assert!(fam.verify().unwrap());
        // v + e maps to 1 + x
        let x = gen(&c1, GeneratorKind::Vertex, "v")
            .add(&gen(&c1, GeneratorKind::Edge, "e"))
            .unwrap();
        let rep = fam.apply(&x).unwrap();
        let expected = LaurentPoly::one(Z)
            .add(&LaurentPoly::monomial(1, Z.one()))
            .unwrap();
        assert_eq!(rep.entry(0, 0), &expected);
        // e e* maps to x x^-1 = 1, the image of v
        let ee = gen(&c1, GeneratorKind::Edge, "e")
            .mul(&gen(&c1, GeneratorKind::GhostEdge, "e"))
            .unwrap();
        assert_eq!(
            fam.apply(&ee).unwrap(),
            fam.apply(&gen(&c1, GeneratorKind::Vertex, "v")).unwrap()
        );
    }

    #[test]
    fn broken_family_fails_verification() {
        let c1 = arc("C1");
        let good = cycle_family(&c1, Z).unwrap();
        // sabotage: e* -> x instead of x^-1, so e* e = x^2 != 1
        let bad = EFamily::new(
            &c1,
            Z,
            1,
            vec![good.vertex_rep(VertexId(0)).clone()],
            vec![good.edge_rep(crate::graph::EdgeId(0)).clone()],
            vec![MatrixRep::unit(
                Z,
                1,
                0,
                0,
                LaurentPoly::monomial(1, Z.one()),
            )],
        )
        .unwrap();
        assert!(!bad.verify().unwrap());
    }

    #[test]
    fn cycle_family_c3() {
        let c3 = arc("C3");
        let fam = cycle_family(&c3, Z).unwrap();
        assert!(fam.verify().unwrap());
        let e1 = gen(&c3, GeneratorKind::Edge, "e1");
        let rep = fam.apply(&e1).unwrap();
        assert!(rep.entry(0, 1).coefficient(0).is_one());
        assert!(!rep.is_zero());
    }

    #[test]
    fn non_cycle_graphs_rejected() {
        let r2 = arc("R2");
        assert_eq!(cycle_family(&r2, Z).unwrap_err(), Error::NotACycleGraph);
        let gl = arc("GL");
        assert_eq!(cycle_family(&gl, Z).unwrap_err(), Error::NotACycleGraph);
        assert_eq!(acyclic_family(&gl, Z).unwrap_err(), Error::NotAcyclic);
    }

    #[test]
    fn acyclic_family_e2_realizes_diagonal_pairs() {
        let e2 = arc("E2");
        let fam = acyclic_family(&e2, Z).unwrap();
        assert!(fam.verify().unwrap());
        let x = gen(&e2, GeneratorKind::Vertex, "u")
            .scale(&RingElement::from_i64(Z, 2))
            .unwrap()
            .add(
                &gen(&e2, GeneratorKind::Vertex, "w")
                    .scale(&RingElement::from_i64(Z, 3))
                    .unwrap(),
            )
            .unwrap();
        let rep = fam.apply(&x).unwrap();
        assert_eq!(rep.size(), 2);
        assert_eq!(rep.entry(0, 0).coefficient(0), RingElement::from_i64(Z, 2));
        assert_eq!(rep.entry(1, 1).coefficient(0), RingElement::from_i64(Z, 3));
        assert!(rep.entry(0, 1).is_zero() && rep.entry(1, 0).is_zero());
    }

    /// A hand-built family on the single-edge graph: plain matrix units.
    #[test]
    fn hand_built_matrix_unit_family_verifies() {
        let a2 = arc("A2");
        let unit = |r, c| MatrixRep::unit(Z, 2, r, c, LaurentPoly::one(Z));
        let fam = EFamily::new(
            &a2,
            Z,
            2,
            vec![unit(0, 0), unit(1, 1)],
            vec![unit(0, 1)],
            vec![unit(1, 0)],
        )
        .unwrap();
        assert!(fam.verify().unwrap());

        // dropping a generator makes the family incomplete
        assert_eq!(
            EFamily::new(
                &a2,
                Z,
                2,
                vec![unit(0, 0), unit(1, 1)],
                vec![],
                vec![unit(1, 0)]
            )
            .unwrap_err(),
            Error::IncompleteFamily
        );
    }

    #[test]
    fn acyclic_family_a2_matrix_units() {
        let a2 = arc("A2");
        let fam = acyclic_family(&a2, Z).unwrap();
        assert!(fam.verify().unwrap());
        // basis: the paths into the sink v2, enumerated as [v2, e]
        let v1 = gen(&a2, GeneratorKind::Vertex, "v1");
        let e = gen(&a2, GeneratorKind::Edge, "e");
        let es = gen(&a2, GeneratorKind::GhostEdge, "e");
        // CK2 at v1 with a single edge: v1 - e e* = 0 in the model
        let x = v1.sub(&e.mul(&es).unwrap()).unwrap();
        assert!(x.is_zero());
        assert!(fam.apply(&v1).unwrap() == fam.apply(&e.mul(&es).unwrap()).unwrap());
    }

    #[test]
    fn base_change_examples() {
        let r2 = arc("R2");
        let z2 = RingDescriptor::integers_mod(2).unwrap();
        let h = RingHom::new(Z, z2).unwrap();
        let v = gen(&r2, GeneratorKind::Vertex, "v");
        let e = gen(&r2, GeneratorKind::Edge, "e");
        let x = v
            .scale(&RingElement::from_i64(Z, 2))
            .unwrap()
            .add(&e)
            .unwrap();
        let image = base_change(&h, &x).unwrap();
        assert_eq!(image.to_string(), "e");

        let hq = RingHom::new(Z, Q).unwrap();
        let image = base_change(&hq, &x).unwrap();
        assert_eq!(image.ring(), Q);
        assert_eq!(image.term_count(), 2);
    }

    #[test]
    fn laurent_membership_examples() {
        let one_plus_x = LaurentPoly::one(Q)
            .add(&LaurentPoly::monomial(1, Q.one()))
            .unwrap();
        let one = LaurentPoly::one(Q);
        assert!(!laurent_principal_member(&one, &one_plus_x).unwrap());

        // x^-3 + x^-2 = x^-3 (1 + x)
        let member = LaurentPoly::monomial(-3, Q.one())
            .add(&LaurentPoly::monomial(-2, Q.one()))
            .unwrap();
        assert!(laurent_principal_member(&member, &one_plus_x).unwrap());

        assert!(laurent_principal_member(&LaurentPoly::zero(Q), &one_plus_x).unwrap());

        let z_poly = LaurentPoly::one(Z);
        assert_eq!(
            laurent_principal_member(&z_poly, &z_poly).unwrap_err(),
            Error::NonFieldCoefficients
        );
    }

    #[test]
    fn differential_suite_smoke() {
        for name in ["C1", "C3", "E2", "A2"] {
            let g = arc(name);
            let report = differential_suite(&g, Z, 0, 25).unwrap();
            assert!(report.all_passed(), "{name}: {report:?}");
        }
        let r2 = arc("R2");
        assert!(differential_suite(&r2, Z, 0, 5).is_err());
    }
}
