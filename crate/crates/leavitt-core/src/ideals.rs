//! Graded basic ideal theory for finite graphs.
//!
//! Graded basic ideals of the algebra correspond bijectively to saturated
//! hereditary vertex sets, so ideals are represented by those sets alone.
//! Membership in `I_H` is decided through the kernel of the quotient map
//! onto the algebra of the quotient graph `E \ H`; inspecting junction
//! vertices of normal forms instead would be wrong, because normalization
//! can move junctions out of `H` (for the graph `Y` with `H = {v2}`, the
//! member `a a*` normalizes to `v1 - b b*`).

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::algebra::Element;
use crate::error::{Error, Result};
use crate::graph::{Graph, Path, VertexClass, VertexId};

/// A vertex subset together with its computed hereditary/saturated status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HereditarySet {
    graph: Arc<Graph>,
    vertices: BTreeSet<VertexId>,
    is_hereditary: bool,
    is_saturated: bool,
}

impl HereditarySet {
    pub fn new(graph: &Arc<Graph>, vertices: BTreeSet<VertexId>) -> Result<Self> {
        for v in &vertices {
            if v.0 >= graph.vertex_count() {
                return Err(Error::UnknownVertex(format!("#{}", v.0)));
            }
        }
        let is_hereditary = graph
            .edge_ids()
            .all(|e| !vertices.contains(&graph.source(e)) || vertices.contains(&graph.range(e)));
        let is_saturated = graph.vertex_ids().all(|v| {
            graph.classify_vertex(v) != VertexClass::Regular
                || vertices.contains(&v)
                || !graph
                    .out_edges(v)
                    .iter()
                    .all(|&e| vertices.contains(&graph.range(e)))
        });
        Ok(HereditarySet {
            graph: graph.clone(),
            vertices,
            is_hereditary,
            is_saturated,
        })
    }

    pub fn from_names(graph: &Arc<Graph>, names: &[&str]) -> Result<Self> {
        let mut vertices = BTreeSet::new();
        for name in names {
            let v = graph
                .vertex_id(name)
                .ok_or_else(|| Error::UnknownVertex(name.to_string()))?;
            vertices.insert(v);
        }
        HereditarySet::new(graph, vertices)
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_hereditary(&self) -> bool {
        self.is_hereditary
    }

    pub fn is_saturated(&self) -> bool {
        self.is_saturated
    }

    /// `{u, w}`-style rendering in declaration order.
    pub fn display(&self) -> String {
        let names: Vec<&str> = self
            .vertices
            .iter()
            .map(|&v| self.graph.vertex_name(v))
            .collect();
        format!("{{{}}}", names.join(", "))
    }
}

/// Least hereditary superset of `seed`: everything reachable from it.
pub fn hereditary_closure(g: &Graph, seed: &BTreeSet<VertexId>) -> Result<BTreeSet<VertexId>> {
    let mut closed = BTreeSet::new();
    let mut stack = Vec::new();
    for &v in seed {
        if v.0 >= g.vertex_count() {
            return Err(Error::UnknownVertex(format!("#{}", v.0)));
        }
        if closed.insert(v) {
            stack.push(v);
        }
    }
    while let Some(v) = stack.pop() {
        for &e in g.out_edges(v) {
            let w = g.range(e);
            if closed.insert(w) {
                stack.push(w);
            }
        }
    }
    Ok(closed)
}

/// Least saturated hereditary superset of a hereditary set, by fixed-point
/// iteration: keep adding regular vertices whose edge ranges already lie
/// inside.  Terminates within `|E^0|` rounds.
pub fn saturate(graph: &Arc<Graph>, set: &HereditarySet) -> Result<HereditarySet> {
    if !set.is_hereditary {
        return Err(Error::NotHereditary);
    }
    let mut vertices = set.vertices.clone();
    loop {
        let mut grew = false;
        for v in graph.vertex_ids() {
            if vertices.contains(&v) || graph.classify_vertex(v) != VertexClass::Regular {
                continue;
            }
            if graph
                .out_edges(v)
                .iter()
                .all(|&e| vertices.contains(&graph.range(e)))
            {
                vertices.insert(v);
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    let out = HereditarySet::new(graph, vertices)?;
    debug_assert!(out.is_hereditary && out.is_saturated);
    Ok(out)
}

/// Every saturated hereditary subset, sorted by size and then by vertex
/// list.  Enumeration is by bitmask, so this is exponential in the vertex
/// count by nature (an edgeless graph really has `2^n` such subsets).
pub fn all_saturated_hereditary(graph: &Arc<Graph>) -> Vec<HereditarySet> {
    let n = graph.vertex_count();
    assert!(
        n < usize::BITS as usize,
        "graph too large to enumerate subsets"
    );
    let mut out = Vec::new();
    for mask in 0usize..(1 << n) {
        let vertices: BTreeSet<VertexId> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(VertexId)
            .collect();
        let set = HereditarySet::new(graph, vertices).expect("in-range ids");
        if set.is_hereditary && set.is_saturated {
            out.push(set);
        }
    }
    out.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.vertices.cmp(&b.vertices))
    });
    out
}

/// Meet (intersection) and join (saturation of the union) in the lattice
/// of saturated hereditary subsets.
pub fn lattice_ops(
    graph: &Arc<Graph>,
    h1: &HereditarySet,
    h2: &HereditarySet,
) -> Result<(HereditarySet, HereditarySet)> {
    for h in [h1, h2] {
        if !h.is_hereditary || !h.is_saturated {
            return Err(Error::NotSaturated);
        }
    }
    let meet_vertices: BTreeSet<VertexId> =
        h1.vertices.intersection(&h2.vertices).copied().collect();
    let meet = HereditarySet::new(graph, meet_vertices)?;
    debug_assert!(meet.is_hereditary && meet.is_saturated);
    let union_vertices: BTreeSet<VertexId> = h1.vertices.union(&h2.vertices).copied().collect();
    let union = HereditarySet::new(graph, union_vertices)?;
    let join = saturate(graph, &union)?;
    Ok((meet, join))
}

/// Cover pairs `(i, j)` of the lattice (`sets[i]` covered by `sets[j]`),
/// for the Hasse diagram in the CLI `ideals` report.
pub fn lattice_covers(sets: &[HereditarySet]) -> Vec<(usize, usize)> {
    let lt = |a: &HereditarySet, b: &HereditarySet| {
        a.len() < b.len() && a.vertices.is_subset(&b.vertices)
    };
    let mut covers = Vec::new();
    for (i, a) in sets.iter().enumerate() {
        for (j, b) in sets.iter().enumerate() {
            if !lt(a, b) {
                continue;
            }
            let strictly_between = sets.iter().any(|c| lt(a, c) && lt(c, b));
            if !strictly_between {
                covers.push((i, j));
            }
        }
    }
    covers
}

/// The quotient graph `E \ H`: drop the vertices of `H` and every edge
/// pointing into `H`.  Declaration order is inherited, which re-fixes the
/// designated edges in the quotient.
pub fn quotient_graph(g: &Graph, h: &HereditarySet) -> Result<Graph> {
    if !h.is_hereditary {
        return Err(Error::NotHereditary);
    }
    if !h.is_saturated {
        return Err(Error::NotSaturated);
    }
    let vertices: Vec<String> = g
        .vertex_ids()
        .filter(|v| !h.contains(*v))
        .map(|v| g.vertex_name(v).to_string())
        .collect();
    let edges: Vec<(String, String, String)> = g
        .edge_ids()
        .filter(|&e| !h.contains(g.range(e)))
        .map(|e| {
            (
                g.edge_name(e).to_string(),
                g.vertex_name(g.source(e)).to_string(),
                g.vertex_name(g.range(e)).to_string(),
            )
        })
        .collect();
    Graph::new(vertices, edges)
}

/// The restriction graph `E_X`: keep `X` and the edges sourced in it
/// (hereditary, so their ranges stay inside).
pub fn restriction_graph(g: &Graph, x: &HereditarySet) -> Result<Graph> {
    if !x.is_hereditary {
        return Err(Error::NotHereditary);
    }
    let vertices: Vec<String> = g
        .vertex_ids()
        .filter(|v| x.contains(*v))
        .map(|v| g.vertex_name(v).to_string())
        .collect();
    let edges: Vec<(String, String, String)> = g
        .edge_ids()
        .filter(|&e| x.contains(g.source(e)))
        .map(|e| {
            (
                g.edge_name(e).to_string(),
                g.vertex_name(g.source(e)).to_string(),
                g.vertex_name(g.range(e)).to_string(),
            )
        })
        .collect();
    Graph::new(vertices, edges)
}

/// The graded basic ideal `I_H` of a saturated hereditary set, with its
/// quotient graph cached for membership tests.
#[derive(Debug, Clone)]
pub struct IdealHandle {
    set: HereditarySet,
    quotient: Arc<Graph>,
}

impl IdealHandle {
    pub fn new(set: HereditarySet) -> Result<Self> {
        let quotient = Arc::new(quotient_graph(&set.graph, &set)?);
        Ok(IdealHandle { set, quotient })
    }

    pub fn set(&self) -> &HereditarySet {
        &self.set
    }

    pub fn quotient(&self) -> &Arc<Graph> {
        &self.quotient
    }

    /// The algebra homomorphism onto the quotient algebra: a monomial
    /// survives unchanged when its junction vertex avoids `H` and dies
    /// otherwise, after which the image is renormalized against the
    /// quotient's own designated edges.
    pub fn quotient_map(&self, x: &Element) -> Result<Element> {
        if !Arc::ptr_eq(x.graph(), &self.set.graph) && **x.graph() != *self.set.graph {
            return Err(Error::GraphMismatch);
        }
        let g = &self.set.graph;
        let mut raw = Vec::new();
        for (m, c) in x.terms() {
            if self.set.contains(m.alpha().range(g)) {
                continue;
            }
            let alpha = translate_path(g, &self.quotient, m.alpha());
            let beta = translate_path(g, &self.quotient, m.beta());
            raw.push((alpha, beta, c.clone()));
        }
        Element::from_raw(&self.quotient, x.ring(), raw)
    }

    /// Membership in `I_H`, decided as vanishing under the quotient map.
    pub fn contains_element(&self, x: &Element) -> Result<bool> {
        Ok(self.quotient_map(x)?.is_zero())
    }
}

/// Re-expresses a path over the quotient graph.  Total on surviving
/// monomials: a path whose range avoids `H` never crosses `H` (hereditary
/// sets absorb everything downstream of them).
fn translate_path(src: &Graph, dst: &Graph, p: &Path) -> Path {
    if p.is_empty() {
        let v = dst
            .vertex_id(src.vertex_name(p.source(src)))
            .expect("surviving vertex exists in the quotient");
        Path::vertex(v)
    } else {
        let edges = p
            .edges()
            .iter()
            .map(|&e| {
                dst.edge_id(src.edge_name(e))
                    .expect("surviving edge exists in the quotient")
            })
            .collect();
        Path::from_edges(dst, edges).expect("translation preserves composability")
    }
}

/// No basic ideals except 0 and the whole algebra: only the two trivial
/// saturated hereditary subsets, plus Condition (L).
pub fn is_basically_simple(graph: &Arc<Graph>) -> bool {
    all_saturated_hereditary(graph).len() == 2 && graph.check_condition_l().0
}

/// The four equivalent graph-level characterizations of basic simplicity,
/// each evaluated independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimplicityReport {
    /// Condition (L) and only trivial saturated hereditary subsets.
    pub l_and_only_trivial: bool,
    /// Condition (K) and only trivial saturated hereditary subsets.
    pub k_and_only_trivial: bool,
    /// Condition (L), cofinal, and every sink reachable from everywhere.
    pub l_cofinal_sinks: bool,
    /// Condition (K), cofinal, and every sink reachable from everywhere.
    pub k_cofinal_sinks: bool,
}

impl SimplicityReport {
    pub fn items(&self) -> [bool; 4] {
        [
            self.l_and_only_trivial,
            self.k_and_only_trivial,
            self.l_cofinal_sinks,
            self.k_cofinal_sinks,
        ]
    }

    pub fn all_agree(&self) -> bool {
        let items = self.items();
        items.iter().all(|&b| b == items[0])
    }
}

pub fn simplicity_report(graph: &Arc<Graph>) -> SimplicityReport {
    let condition_l = graph.check_condition_l().0;
    let condition_k = graph.check_condition_k().0;
    let only_trivial = all_saturated_hereditary(graph).len() == 2;
    let cofinal = graph.is_cofinal();
    let sinks_reachable = sinks_reachable_from_everywhere(graph);
    SimplicityReport {
        l_and_only_trivial: condition_l && only_trivial,
        k_and_only_trivial: condition_k && only_trivial,
        l_cofinal_sinks: condition_l && cofinal && sinks_reachable,
        k_cofinal_sinks: condition_k && cofinal && sinks_reachable,
    }
}

/// For every sink `v` and every vertex `w`, a path `w -> v` exists.
fn sinks_reachable_from_everywhere(g: &Graph) -> bool {
    for v in g.vertex_ids() {
        if g.classify_vertex(v) != VertexClass::Sink {
            continue;
        }
        // walk the in-edges backwards from the sink
        let mut seen = vec![false; g.vertex_count()];
        seen[v.0] = true;
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            for &e in g.in_edges(u) {
                let w = g.source(e);
                if !seen[w.0] {
                    seen[w.0] = true;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return false;
        }
    }
    true
}
