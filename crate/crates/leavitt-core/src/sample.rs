//! Seeded random generation of ring elements, paths, algebra elements and
//! small graphs.
//!
//! Used by the differential test suites and the CLI `oracle` subcommand;
//! everything is driven by a caller-provided RNG so runs are reproducible
//! from a seed.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::Element;
use crate::graph::{Graph, Path, VertexId};
use crate::ring::{RingDescriptor, RingElement};

/// A random element of the coefficient ring (small magnitudes).
pub fn ring_element(rng: &mut impl Rng, ring: RingDescriptor) -> RingElement {
    match ring {
        RingDescriptor::Integers => RingElement::from_i64(ring, rng.gen_range(-9..=9)),
        RingDescriptor::IntegersMod(n) => {
            RingElement::from_i64(ring, rng.gen_range(0..n.min(1 << 30)) as i64)
        }
        RingDescriptor::Rationals => {
            let num = rng.gen_range(-9..=9i64);
            let den = rng.gen_range(1..=9i64);
            RingElement::rational(num.into(), den.into()).expect("nonzero denominator")
        }
    }
}

/// A random nonzero element of the coefficient ring.
pub fn nonzero_ring_element(rng: &mut impl Rng, ring: RingDescriptor) -> RingElement {
    loop {
        let r = ring_element(rng, ring);
        if !r.is_zero() {
            return r;
        }
    }
}

/// A random forward walk of length at most `max_len` starting anywhere.
pub fn path(rng: &mut impl Rng, g: &Graph, max_len: usize) -> Path {
    let start = VertexId(rng.gen_range(0..g.vertex_count()));
    path_from(rng, g, start, max_len)
}

/// A random forward walk from `start` of length at most `max_len`
/// (shorter when a sink interrupts it).
pub fn path_from(rng: &mut impl Rng, g: &Graph, start: VertexId, max_len: usize) -> Path {
    let len = rng.gen_range(0..=max_len);
    walk(rng, g, start, len)
}

fn walk(rng: &mut impl Rng, g: &Graph, start: VertexId, len: usize) -> Path {
    let mut p = Path::vertex(start);
    for _ in 0..len {
        let out = g.out_edges(p.range(g));
        match out.choose(rng) {
            Some(&e) => p = p.append(g, e),
            None => break,
        }
    }
    p
}

/// A random backward walk ending at `end`, of length at most `max_len`.
pub fn path_into(rng: &mut impl Rng, g: &Graph, end: VertexId, max_len: usize) -> Path {
    let len = rng.gen_range(0..=max_len);
    walk_back(rng, g, end, len)
}

/// A random canonical element: up to `max_terms` monomials built from paths
/// of length at most `max_len`.  May normalize to zero.
pub fn element(
    rng: &mut impl Rng,
    g: &Arc<Graph>,
    ring: RingDescriptor,
    max_terms: usize,
    max_len: usize,
) -> Element {
    let terms = rng.gen_range(1..=max_terms.max(1));
    let mut raw = Vec::with_capacity(terms);
    for _ in 0..terms {
        let alpha = path(rng, g, max_len);
        let beta = path_into(rng, g, alpha.range(g), max_len);
        raw.push((alpha, beta, nonzero_ring_element(rng, ring)));
    }
    Element::from_raw(g, ring, raw).expect("sampled pairs share their junction")
}

/// A random nonzero canonical element.
pub fn nonzero_element(
    rng: &mut impl Rng,
    g: &Arc<Graph>,
    ring: RingDescriptor,
    max_terms: usize,
    max_len: usize,
) -> Element {
    loop {
        let x = element(rng, g, ring, max_terms, max_len);
        if !x.is_zero() {
            return x;
        }
    }
}

/// A random nonzero homogeneous element of the given degree, or `None`
/// when the graph admits none (for instance nonzero degrees on edgeless
/// graphs).  Sampling is rejection-based, so callers should stick to small
/// degrees.
pub fn homogeneous_element(
    rng: &mut impl Rng,
    g: &Arc<Graph>,
    ring: RingDescriptor,
    degree: i64,
    max_terms: usize,
) -> Option<Element> {
    let longest = 3usize;
    if degree.unsigned_abs() as usize > longest {
        return None;
    }
    for _attempt in 0..200 {
        let terms = rng.gen_range(1..=max_terms.max(1));
        let mut raw = Vec::new();
        for _ in 0..terms {
            // choose |alpha| - |beta| = degree with both within bounds;
            // lengths the graph cannot realize just skip this term
            let extra = rng.gen_range(0..=(longest - degree.unsigned_abs() as usize));
            let (alen, blen) = if degree >= 0 {
                (degree as usize + extra, extra)
            } else {
                (extra, (-degree) as usize + extra)
            };
            let Some(alpha) = exact_len_path(rng, g, alen) else {
                continue;
            };
            let Some(beta) = exact_len_path_into(rng, g, alpha.range(g), blen) else {
                continue;
            };
            raw.push((alpha, beta, nonzero_ring_element(rng, ring)));
        }
        if raw.is_empty() {
            continue;
        }
        let x = Element::from_raw(g, ring, raw).expect("sampled pairs share their junction");
        if !x.is_zero() {
            debug_assert_eq!(x.homogeneous_degree(), Some(degree));
            return Some(x);
        }
    }
    None
}

fn exact_len_path(rng: &mut impl Rng, g: &Graph, len: usize) -> Option<Path> {
    for _ in 0..50 {
        let start = VertexId(rng.gen_range(0..g.vertex_count()));
        let p = walk(rng, g, start, len);
        if p.len() == len {
            return Some(p);
        }
    }
    // fall back to systematic search
    g.paths_of_length(len).first().cloned()
}

fn exact_len_path_into(rng: &mut impl Rng, g: &Graph, end: VertexId, len: usize) -> Option<Path> {
    for _ in 0..50 {
        let p = walk_back(rng, g, end, len);
        if p.len() == len {
            return Some(p);
        }
    }
    g.paths_of_length(len)
        .into_iter()
        .find(|p| p.range(g) == end)
}

fn walk_back(rng: &mut impl Rng, g: &Graph, end: VertexId, len: usize) -> Path {
    let mut edges = Vec::new();
    let mut cur = end;
    for _ in 0..len {
        match g.in_edges(cur).choose(rng) {
            Some(&e) => {
                edges.push(e);
                cur = g.source(e);
            }
            None => break,
        }
    }
    edges.reverse();
    if edges.is_empty() {
        Path::vertex(end)
    } else {
        Path::from_edges(g, edges).expect("backward walk composes")
    }
}

/// A random graph with `1..=max_vertices` vertices and `0..=max_edges`
/// edges, names `v1, v2, ...` / `e1, e2, ...` in declaration order.
pub fn graph(rng: &mut impl Rng, max_vertices: usize, max_edges: usize) -> Graph {
    let nv = rng.gen_range(1..=max_vertices);
    let ne = rng.gen_range(0..=max_edges);
    let vertices: Vec<String> = (1..=nv).map(|i| format!("v{i}")).collect();
    let edges: Vec<(String, String, String)> = (1..=ne)
        .map(|i| {
            let src = rng.gen_range(1..=nv);
            let dst = rng.gen_range(1..=nv);
            (format!("e{i}"), format!("v{src}"), format!("v{dst}"))
        })
        .collect();
    Graph::new(vertices, edges).expect("generated names are unique and endpoints declared")
}
