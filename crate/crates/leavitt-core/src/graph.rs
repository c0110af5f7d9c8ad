//! Finite directed graphs, paths, cycles, and the decidable graph
//! conditions (L), (K), and cofinality.
//!
//! Declaration order is semantically significant: it fixes the designated
//! edge of every regular vertex (the first-declared outgoing edge) and all
//! tie-breaks in path and witness searches, so parsing preserves it.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Index of a vertex in declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

/// Index of an edge in declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub src: VertexId,
    pub dst: VertexId,
}

/// Whether a vertex emits edges.  Finite graphs have no infinite emitters,
/// so every vertex is either a sink or regular.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexClass {
    Sink,
    Regular,
}

/// A finite directed graph with named vertices and edges.
///
/// Names share one namespace: the expression language resolves a bare
/// identifier to either a vertex or an edge, so a collision would make
/// resolution ambiguous.
#[derive(Debug, Clone)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    names: HashMap<String, NameRef>,
    out_edges: Vec<Vec<EdgeId>>,
    in_edges: Vec<Vec<EdgeId>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum NameRef {
    Vertex(VertexId),
    Edge(EdgeId),
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}
impl Eq for Graph {}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Graph {
    /// Builds a graph from declaration-ordered vertex names and
    /// `(name, src, dst)` edge triples.
    ///
    /// Unlike [`Graph::parse`], this accepts an empty vertex set: quotient
    /// constructions legitimately produce the empty graph.
    pub fn new(vertices: Vec<String>, edges: Vec<(String, String, String)>) -> Result<Self> {
        let mut names = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if names
                .insert(v.clone(), NameRef::Vertex(VertexId(i)))
                .is_some()
            {
                return Err(Error::DuplicateName(v.clone()));
            }
        }
        let mut resolved = Vec::with_capacity(edges.len());
        for (i, (name, src, dst)) in edges.iter().enumerate() {
            let src = match names.get(src) {
                Some(NameRef::Vertex(v)) => *v,
                _ => {
                    return Err(Error::UndeclaredVertex {
                        edge: name.clone(),
                        vertex: src.clone(),
                    })
                }
            };
            let dst = match names.get(dst) {
                Some(NameRef::Vertex(v)) => *v,
                _ => {
                    return Err(Error::UndeclaredVertex {
                        edge: name.clone(),
                        vertex: dst.clone(),
                    })
                }
            };
            if names
                .insert(name.clone(), NameRef::Edge(EdgeId(i)))
                .is_some()
            {
                return Err(Error::DuplicateName(name.clone()));
            }
            resolved.push(Edge {
                name: name.clone(),
                src,
                dst,
            });
        }
        let mut out_edges = vec![Vec::new(); vertices.len()];
        let mut in_edges = vec![Vec::new(); vertices.len()];
        for (i, e) in resolved.iter().enumerate() {
            out_edges[e.src.0].push(EdgeId(i));
            in_edges[e.dst.0].push(EdgeId(i));
        }
        Ok(Graph {
            vertices,
            edges: resolved,
            names,
            out_edges,
            in_edges,
        })
    }

    /// Parses the line-oriented graph file format:
    ///
    /// ```text
    /// # comment
    /// vertex v
    /// edge e v w
    /// ```
    ///
    /// Names match `[A-Za-z][A-Za-z0-9_]*`.  At least one vertex is
    /// required.
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = content.split_whitespace().collect();
            match tokens[0] {
                "vertex" => {
                    if tokens.len() != 2 {
                        return Err(Error::Parse {
                            line,
                            msg: "expected `vertex <name>`".into(),
                        });
                    }
                    if !valid_name(tokens[1]) {
                        return Err(Error::Parse {
                            line,
                            msg: format!("invalid name `{}`", tokens[1]),
                        });
                    }
                    vertices.push(tokens[1].to_string());
                }
                "edge" => {
                    if tokens.len() != 4 {
                        return Err(Error::Parse {
                            line,
                            msg: "expected `edge <name> <src> <dst>`".into(),
                        });
                    }
                    if !valid_name(tokens[1]) {
                        return Err(Error::Parse {
                            line,
                            msg: format!("invalid name `{}`", tokens[1]),
                        });
                    }
                    edges.push((
                        tokens[1].to_string(),
                        tokens[2].to_string(),
                        tokens[3].to_string(),
                    ));
                }
                other => {
                    return Err(Error::Parse {
                        line,
                        msg: format!("unknown directive `{other}`"),
                    });
                }
            }
        }
        let graph = Graph::new(vertices, edges)?;
        if graph.vertex_count() == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(graph)
    }

    /// Renders the graph back into the file format, declaration order intact.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            out.push_str("vertex ");
            out.push_str(v);
            out.push('\n');
        }
        for e in &self.edges {
            out.push_str(&format!(
                "edge {} {} {}\n",
                e.name,
                self.vertex_name(e.src),
                self.vertex_name(e.dst)
            ));
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edges[e.0].name
    }

    pub fn source(&self, e: EdgeId) -> VertexId {
        self.edges[e.0].src
    }

    pub fn range(&self, e: EdgeId) -> VertexId {
        self.edges[e.0].dst
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        match self.names.get(name) {
            Some(NameRef::Vertex(v)) => Some(*v),
            _ => None,
        }
    }

    pub fn edge_id(&self, name: &str) -> Option<EdgeId> {
        match self.names.get(name) {
            Some(NameRef::Edge(e)) => Some(*e),
            _ => None,
        }
    }

    /// Outgoing edges of `v` in declaration order.
    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_edges[v.0]
    }

    /// Incoming edges of `v` in declaration order.
    pub fn in_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.in_edges[v.0]
    }

    /// The first-declared outgoing edge of `v`; `None` exactly for sinks.
    /// This is the edge whose `e e*` product the normal form eliminates.
    pub fn designated_edge(&self, v: VertexId) -> Option<EdgeId> {
        self.out_edges[v.0].first().copied()
    }

    pub fn classify_vertex(&self, v: VertexId) -> VertexClass {
        if self.out_edges[v.0].is_empty() {
            VertexClass::Sink
        } else {
            VertexClass::Regular
        }
    }

    pub fn classify_vertex_by_name(&self, name: &str) -> Result<VertexClass> {
        let v = self
            .vertex_id(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))?;
        Ok(self.classify_vertex(v))
    }

    /// All paths of length `0..=max_len`, ordered by length and then
    /// lexicographically by edge declaration order.
    pub fn enumerate_paths(&self, max_len: usize) -> Vec<Path> {
        let mut all: Vec<Path> = self.vertex_ids().map(Path::vertex).collect();
        let mut frontier: Vec<Path> = all.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            if frontier.first().is_some_and(|p| p.is_empty()) {
                // level 1 starts from the edges themselves so the order is
                // by edge id, not grouped by source vertex
                for e in self.edge_ids() {
                    next.push(Path::edge(self, e));
                }
            } else {
                for p in &frontier {
                    for &e in self.out_edges(p.range(self)) {
                        next.push(p.append(self, e));
                    }
                }
            }
            frontier = next;
            all.extend(frontier.iter().cloned());
            if frontier.is_empty() {
                break;
            }
        }
        all
    }

    /// All paths of length exactly `len`, lexicographic order.
    pub fn paths_of_length(&self, len: usize) -> Vec<Path> {
        self.enumerate_paths(len)
            .into_iter()
            .filter(|p| p.len() == len)
            .collect()
    }

    /// Vertices reachable from `start` (inclusive).
    pub fn reachable_from(&self, start: VertexId) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![start];
        seen[start.0] = true;
        while let Some(v) = stack.pop() {
            for &e in self.out_edges(v) {
                let w = self.range(e);
                if !seen[w.0] {
                    seen[w.0] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Shortest path from `v` to any vertex satisfying `target`, with ties
    /// broken by lexicographic edge order.  BFS with out-edges expanded in
    /// declaration order discovers every vertex through its (length, lex)
    /// minimal path.
    pub fn shortest_path_to(&self, v: VertexId, target: impl Fn(VertexId) -> bool) -> Option<Path> {
        if target(v) {
            return Some(Path::vertex(v));
        }
        let mut prev: Vec<Option<(VertexId, EdgeId)>> = vec![None; self.vertex_count()];
        let mut seen = vec![false; self.vertex_count()];
        seen[v.0] = true;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(v);
        while let Some(u) = queue.pop_front() {
            for &e in self.out_edges(u) {
                let w = self.range(e);
                if !seen[w.0] {
                    seen[w.0] = true;
                    prev[w.0] = Some((u, e));
                    if target(w) {
                        let mut edges = Vec::new();
                        let mut cur = w;
                        while let Some((p, pe)) = prev[cur.0] {
                            edges.push(pe);
                            cur = p;
                        }
                        edges.reverse();
                        return Some(Path::from_edges(self, edges).expect("BFS path composable"));
                    }
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Strongly connected components in declaration-deterministic order;
    /// `scc_of[v]` indexes into the returned component list.
    fn tarjan_sccs(&self) -> (Vec<Vec<VertexId>>, Vec<usize>) {
        let n = self.vertex_count();
        let mut index = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut next_index = 0;
        let mut comps: Vec<Vec<VertexId>> = Vec::new();
        let mut comp_of = vec![usize::MAX; n];

        // iterative Tarjan to keep recursion depth independent of graph size
        enum Frame {
            Enter(usize),
            Resume(usize, usize),
        }
        for root in 0..n {
            if index[root] != usize::MAX {
                continue;
            }
            let mut work = vec![Frame::Enter(root)];
            while let Some(frame) = work.pop() {
                match frame {
                    Frame::Enter(v) => {
                        index[v] = next_index;
                        low[v] = next_index;
                        next_index += 1;
                        stack.push(v);
                        on_stack[v] = true;
                        work.push(Frame::Resume(v, 0));
                    }
                    Frame::Resume(v, mut i) => {
                        let mut descended = false;
                        while i < self.out_edges[v].len() {
                            let w = self.range(self.out_edges[v][i]).0;
                            i += 1;
                            if index[w] == usize::MAX {
                                work.push(Frame::Resume(v, i));
                                work.push(Frame::Enter(w));
                                descended = true;
                                break;
                            } else if on_stack[w] {
                                low[v] = low[v].min(index[w]);
                            }
                        }
                        if descended {
                            continue;
                        }
                        if low[v] == index[v] {
                            let mut comp = Vec::new();
                            loop {
                                let w = stack.pop().expect("tarjan stack nonempty");
                                on_stack[w] = false;
                                comp.push(VertexId(w));
                                if w == v {
                                    break;
                                }
                            }
                            comp.sort();
                            for u in &comp {
                                comp_of[u.0] = comps.len();
                            }
                            comps.push(comp);
                        } else if let Some(Frame::Resume(p, _)) = work.last() {
                            low[*p] = low[*p].min(low[v]);
                        }
                    }
                }
            }
        }
        (comps, comp_of)
    }

    /// True iff every vertex reaches every strongly connected component
    /// that contains an edge.
    ///
    /// This decides cofinality for finite graphs: the tail of any infinite
    /// path eventually stays inside one such component (the condensation is
    /// a DAG, so the path can change components only finitely often), and
    /// reaching any vertex of a strongly connected component reaches all of
    /// it -- in particular some source vertex the path visits.  Conversely a
    /// component with an edge carries an infinite path that never leaves it.
    pub fn is_cofinal(&self) -> bool {
        let (comps, comp_of) = self.tarjan_sccs();
        let cyclic: Vec<usize> = (0..comps.len())
            .filter(|&c| {
                comps[c].iter().any(|&v| {
                    self.out_edges(v)
                        .iter()
                        .any(|&e| comp_of[self.range(e).0] == c)
                })
            })
            .collect();
        for v in self.vertex_ids() {
            let seen = self.reachable_from(v);
            for &c in &cyclic {
                if !comps[c].iter().any(|u| seen[u.0]) {
                    return false;
                }
            }
        }
        true
    }

    /// Vertex-simple cycles (no repeated vertices), one canonical rotation
    /// each, sorted by (base vertex, edge sequence).
    pub fn simple_cycles(&self) -> Vec<Cycle> {
        let mut found = Vec::new();
        let n = self.vertex_count();
        // cycles are collected at their least vertex: DFS from `base` may
        // only pass through vertices with a larger id
        for base in 0..n {
            let mut path_edges: Vec<EdgeId> = Vec::new();
            let mut on_path = vec![false; n];
            self.cycle_dfs(
                VertexId(base),
                VertexId(base),
                &mut path_edges,
                &mut on_path,
                &mut found,
            );
        }
        found.sort_by(|a, b| {
            (a.base(self), a.path().edges()).cmp(&(b.base(self), b.path().edges()))
        });
        found
    }

    fn cycle_dfs(
        &self,
        base: VertexId,
        cur: VertexId,
        path_edges: &mut Vec<EdgeId>,
        on_path: &mut Vec<bool>,
        found: &mut Vec<Cycle>,
    ) {
        on_path[cur.0] = true;
        for &e in self.out_edges(cur) {
            let w = self.range(e);
            if w == base {
                path_edges.push(e);
                let path = Path::from_edges(self, path_edges.clone()).expect("cycle composable");
                found.push(Cycle::canonical(self, path));
                path_edges.pop();
            } else if w.0 > base.0 && !on_path[w.0] {
                path_edges.push(e);
                self.cycle_dfs(base, w, path_edges, on_path, found);
                path_edges.pop();
            }
        }
        on_path[cur.0] = false;
    }

    /// Condition (L): every cycle has an exit.
    ///
    /// An exitless closed path forces out-degree one along it, so it is a
    /// repetition of a cycle lying entirely inside the set of out-degree-one
    /// vertices.  It therefore suffices to chase unique out-edges within
    /// that set and look for a loop.
    pub fn check_condition_l(&self) -> (bool, Option<Cycle>) {
        let n = self.vertex_count();
        // 0 = unvisited, 1 = on current walk, 2 = cleared
        let mut state = vec![0u8; n];
        for start in self.vertex_ids() {
            if state[start.0] != 0 || self.out_edges(start).len() != 1 {
                continue;
            }
            let mut walk = Vec::new();
            let mut cur = start;
            loop {
                if self.out_edges(cur).len() != 1 {
                    break;
                }
                match state[cur.0] {
                    1 => {
                        // found a loop: extract the segment of the walk from
                        // the first occurrence of `cur`
                        let pos = walk
                            .iter()
                            .position(|&(v, _)| v == cur)
                            .expect("vertex marked on-walk is on the walk");
                        let edges: Vec<EdgeId> = walk[pos..].iter().map(|&(_, e)| e).collect();
                        let path = Path::from_edges(self, edges).expect("chased edges compose");
                        return (false, Some(Cycle::canonical(self, path)));
                    }
                    2 => break,
                    _ => {}
                }
                state[cur.0] = 1;
                let e = self.out_edges(cur)[0];
                walk.push((cur, e));
                cur = self.range(e);
            }
            for &(v, _) in &walk {
                state[v.0] = 2;
            }
        }
        (true, None)
    }

    /// Number of simple closed paths (first-return paths) based at `v`,
    /// capped at 2.
    ///
    /// Let X be the set of vertices strictly between `v` and itself: those
    /// reachable from `v` and co-reaching `v` by paths avoiding `v` in the
    /// interior.  Every first-return path is a `v -> X* -> v` walk.  If the
    /// subgraph induced on X contains a cycle, splicing it into any return
    /// walk gives infinitely many first-return paths; otherwise X is a DAG
    /// and the walks can be counted exactly.
    pub fn first_return_count(&self, v: VertexId) -> usize {
        let n = self.vertex_count();
        // forward: reachable from v without v in the interior
        let mut fwd = vec![false; n];
        let mut stack: Vec<VertexId> = Vec::new();
        for &e in self.out_edges(v) {
            let w = self.range(e);
            if w != v && !fwd[w.0] {
                fwd[w.0] = true;
                stack.push(w);
            }
        }
        while let Some(u) = stack.pop() {
            for &e in self.out_edges(u) {
                let w = self.range(e);
                if w != v && !fwd[w.0] {
                    fwd[w.0] = true;
                    stack.push(w);
                }
            }
        }
        // backward: co-reaches v without v in the interior
        let mut bwd = vec![false; n];
        for &e in self.in_edges(v) {
            let u = self.source(e);
            if u != v && !bwd[u.0] {
                bwd[u.0] = true;
                stack.push(u);
            }
        }
        while let Some(u) = stack.pop() {
            for &e in self.in_edges(u) {
                let w = self.source(e);
                if w != v && !bwd[w.0] {
                    bwd[w.0] = true;
                    stack.push(w);
                }
            }
        }
        let in_x: Vec<bool> = (0..n).map(|i| fwd[i] && bwd[i]).collect();

        let self_loops = self
            .out_edges(v)
            .iter()
            .filter(|&&e| self.range(e) == v)
            .count();

        // cycle inside X => infinitely many first-return paths
        let members: Vec<usize> = (0..n).filter(|&i| in_x[i]).collect();
        if !members.is_empty() {
            let mut indegree: HashMap<usize, usize> = members.iter().map(|&u| (u, 0)).collect();
            for &u in &members {
                for &e in self.out_edges(VertexId(u)) {
                    let w = self.range(e).0;
                    if in_x[w] {
                        *indegree.get_mut(&w).expect("w in X") += 1;
                    }
                }
            }
            let mut order: Vec<usize> = Vec::new();
            let mut ready: Vec<usize> = members
                .iter()
                .copied()
                .filter(|u| indegree[u] == 0)
                .collect();
            ready.sort_unstable();
            while let Some(u) = ready.pop() {
                order.push(u);
                for &e in self.out_edges(VertexId(u)) {
                    let w = self.range(e).0;
                    if in_x[w] {
                        let d = indegree.get_mut(&w).expect("w in X");
                        *d -= 1;
                        if *d == 0 {
                            ready.push(w);
                        }
                    }
                }
            }
            if order.len() != members.len() {
                // Kahn's algorithm stalled: X has a cycle, and any u in X
                // sits on a v -> u -> v return walk, so the count is infinite
                return 2;
            }
            // X is a DAG: count return walks exactly (saturating at 2)
            let mut through_x = vec![0usize; n];
            for &u in order.iter().rev() {
                let mut total = 0usize;
                for &e in self.out_edges(VertexId(u)) {
                    let w = self.range(e);
                    if w == v {
                        total += 1;
                    } else if in_x[w.0] {
                        total += through_x[w.0];
                    }
                    if total >= 2 {
                        total = 2;
                        break;
                    }
                }
                through_x[u] = total;
            }
            let mut count = self_loops;
            for &e in self.out_edges(v) {
                let w = self.range(e);
                if w != v && in_x[w.0] {
                    count += through_x[w.0];
                }
                if count >= 2 {
                    return 2;
                }
            }
            count
        } else {
            self_loops.min(2)
        }
    }

    /// Condition (K): every vertex bases zero or at least two simple closed
    /// paths.  The witness, if any, is the first vertex basing exactly one.
    pub fn check_condition_k(&self) -> (bool, Option<VertexId>) {
        for v in self.vertex_ids() {
            if self.first_return_count(v) == 1 {
                return (false, Some(v));
            }
        }
        (true, None)
    }
}

/// A finite path: a composable sequence of edges, or a single vertex when
/// the length is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    base: VertexId,
    edges: Vec<EdgeId>,
}

impl Path {
    pub fn vertex(v: VertexId) -> Self {
        Path {
            base: v,
            edges: Vec::new(),
        }
    }

    pub fn edge(g: &Graph, e: EdgeId) -> Self {
        Path {
            base: g.source(e),
            edges: vec![e],
        }
    }

    /// Validates composability of consecutive edges.
    pub fn from_edges(g: &Graph, edges: Vec<EdgeId>) -> Result<Self> {
        let Some(&first) = edges.first() else {
            return Err(Error::NonComposablePair);
        };
        for w in edges.windows(2) {
            if g.range(w[0]) != g.source(w[1]) {
                return Err(Error::NonComposablePair);
            }
        }
        Ok(Path {
            base: g.source(first),
            edges,
        })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn source(&self, g: &Graph) -> VertexId {
        match self.edges.first() {
            Some(&e) => g.source(e),
            None => self.base,
        }
    }

    pub fn range(&self, g: &Graph) -> VertexId {
        match self.edges.last() {
            Some(&e) => g.range(e),
            None => self.base,
        }
    }

    pub fn last_edge(&self) -> Option<EdgeId> {
        self.edges.last().copied()
    }

    /// Appends one edge; the caller guarantees composability.
    pub fn append(&self, g: &Graph, e: EdgeId) -> Self {
        debug_assert_eq!(self.range(g), g.source(e));
        let mut edges = self.edges.clone();
        edges.push(e);
        Path {
            base: self.source(g),
            edges,
        }
    }

    /// The path without its final edge (the length-zero path at the source
    /// when only one edge remains).  Panics on length-zero paths.
    pub fn drop_last(&self, g: &Graph) -> Path {
        assert!(!self.is_empty(), "cannot shorten a length-zero path");
        Path {
            base: self.source(g),
            edges: self.edges[..self.edges.len() - 1].to_vec(),
        }
    }

    /// Concatenation `self . other`; errors unless `r(self) = s(other)`.
    pub fn concat(&self, g: &Graph, other: &Path) -> Result<Self> {
        if self.range(g) != other.source(g) {
            return Err(Error::NonComposablePair);
        }
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Ok(Path {
            base: self.source(g),
            edges,
        })
    }

    /// True when `self` is an initial segment of `other` (as paths, so a
    /// length-zero `self` must sit at the source of `other`).
    pub fn is_prefix_of(&self, g: &Graph, other: &Path) -> bool {
        if self.len() > other.len() {
            return false;
        }
        if self.is_empty() {
            return self.base == other.source(g);
        }
        self.edges[..] == other.edges[..self.len()]
    }

    /// The remainder `gamma` with `other = self . gamma`; only valid after
    /// `is_prefix_of` returned true.
    pub fn strip_prefix(&self, g: &Graph, other: &Path) -> Path {
        debug_assert!(self.is_prefix_of(g, other));
        if other.len() == self.len() {
            Path::vertex(other.range(g))
        } else {
            let edges = other.edges[self.len()..].to_vec();
            Path {
                base: g.source(edges[0]),
                edges,
            }
        }
    }

    pub fn display(&self, g: &Graph) -> String {
        if self.edges.is_empty() {
            g.vertex_name(self.base).to_string()
        } else {
            self.edges
                .iter()
                .map(|&e| g.edge_name(e))
                .collect::<Vec<_>>()
                .join(" ")
        }
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic by edge sequence, then by base vertex (which only matters
/// for length-zero paths).
impl Ord for Path {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.edges
            .cmp(&other.edges)
            .then_with(|| self.base.cmp(&other.base))
    }
}

/// A closed path of length >= 1 stored in its canonical rotation: the one
/// starting at the least vertex in declaration order, ties broken by the
/// lexicographically least edge sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    path: Path,
}

impl Cycle {
    pub fn canonical(g: &Graph, path: Path) -> Self {
        assert!(!path.is_empty(), "cycles have length at least one");
        assert_eq!(path.source(g), path.range(g), "cycles are closed");
        let edges = path.edges();
        let n = edges.len();
        let mut best: Option<(VertexId, Vec<EdgeId>)> = None;
        for start in 0..n {
            let rotated: Vec<EdgeId> = (0..n).map(|i| edges[(start + i) % n]).collect();
            let key = (g.source(rotated[0]), rotated);
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
        let (_, rotated) = best.expect("nonempty cycle");
        Cycle {
            path: Path::from_edges(g, rotated).expect("rotation of a closed path composes"),
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn base(&self, g: &Graph) -> VertexId {
        self.path.source(g)
    }

    /// Does any vertex on the cycle emit an edge other than the cycle's own
    /// next edge?
    pub fn has_exit(&self, g: &Graph) -> bool {
        self.path
            .edges()
            .iter()
            .any(|&e| g.out_edges(g.source(e)).iter().any(|&f| f != e))
    }

    pub fn display(&self, g: &Graph) -> String {
        self.path.display(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn parse_e2() {
        let g = fixtures::graph("E2");
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn parse_r2() {
        let g = fixtures::graph("R2");
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn parse_rejects_undeclared_vertex() {
        let err = Graph::parse("edge e a b\n").unwrap_err();
        assert!(matches!(err, Error::UndeclaredVertex { .. }));
    }

    #[test]
    fn parse_rejects_duplicates_and_empty() {
        assert!(matches!(
            Graph::parse("vertex v\nvertex v\n"),
            Err(Error::DuplicateName(_))
        ));
        assert!(matches!(
            Graph::parse("vertex v\nedge v v v\n"),
            Err(Error::DuplicateName(_))
        ));
        assert!(matches!(
            Graph::parse("# nothing\n"),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn classify() {
        let e2 = fixtures::graph("E2");
        let u = e2.vertex_id("u").unwrap();
        assert_eq!(e2.classify_vertex(u), VertexClass::Sink);
        let r2 = fixtures::graph("R2");
        let v = r2.vertex_id("v").unwrap();
        assert_eq!(r2.classify_vertex(v), VertexClass::Regular);
        let gl = fixtures::graph("GL");
        let t = gl.vertex_id("t").unwrap();
        assert_eq!(gl.classify_vertex(t), VertexClass::Sink);
        assert!(gl.classify_vertex_by_name("zzz").is_err());
    }

    fn path_names(g: &Graph, ps: &[Path]) -> Vec<String> {
        ps.iter().map(|p| p.display(g)).collect()
    }

    #[test]
    fn enumerate_paths_c1() {
        let g = fixtures::graph("C1");
        let ps = g.enumerate_paths(3);
        assert_eq!(path_names(&g, &ps), vec!["v", "e", "e e", "e e e"]);
    }

    #[test]
    fn enumerate_paths_e2_and_a2() {
        let e2 = fixtures::graph("E2");
        assert_eq!(path_names(&e2, &e2.enumerate_paths(5)), vec!["u", "w"]);
        let a2 = fixtures::graph("A2");
        assert_eq!(
            path_names(&a2, &a2.enumerate_paths(1)),
            vec!["v1", "v2", "e"]
        );
    }

    /// Adjacency-matrix power sums as an independent count oracle.
    #[test]
    fn path_counts_match_matrix_powers() {
        for name in ["R2", "GL", "C3", "A2", "Y", "C3E"] {
            let g = fixtures::graph(name);
            let n = g.vertex_count();
            let mut adj = vec![vec![0u64; n]; n];
            for e in g.edge_ids() {
                adj[g.source(e).0][g.range(e).0] += 1;
            }
            let mut power = vec![vec![0u64; n]; n];
            for (i, row) in power.iter_mut().enumerate() {
                row[i] = 1;
            }
            for len in 0..=4usize {
                let expected: u64 = power.iter().flatten().sum();
                let got = g.paths_of_length(len).len() as u64;
                assert_eq!(got, expected, "graph {name}, length {len}");
                let mut next = vec![vec![0u64; n]; n];
                for i in 0..n {
                    for j in 0..n {
                        for (k, nk) in next[i].iter_mut().enumerate() {
                            *nk += power[i][j] * adj[j][k];
                        }
                    }
                }
                power = next;
            }
        }
    }

    #[test]
    fn paths_satisfy_composability() {
        let g = fixtures::graph("GL");
        for p in g.enumerate_paths(4) {
            if !p.is_empty() {
                assert!(Path::from_edges(&g, p.edges().to_vec()).is_ok());
            }
        }
    }

    #[test]
    fn simple_cycles_fixtures() {
        let c3 = fixtures::graph("C3");
        let cycles = c3.simple_cycles();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].display(&c3), "e1 e2 e3");

        let r2 = fixtures::graph("R2");
        let cycles = r2.simple_cycles();
        assert_eq!(
            cycles.iter().map(|c| c.display(&r2)).collect::<Vec<_>>(),
            vec!["e", "f"]
        );

        assert!(fixtures::graph("E2").simple_cycles().is_empty());
    }

    #[test]
    fn condition_l_fixtures() {
        let c1 = fixtures::graph("C1");
        let (ok, witness) = c1.check_condition_l();
        assert!(!ok);
        assert_eq!(witness.unwrap().display(&c1), "e");

        assert!(fixtures::graph("R2").check_condition_l().0);
        assert!(fixtures::graph("GL").check_condition_l().0);
    }

    #[test]
    fn condition_k_fixtures() {
        let gl = fixtures::graph("GL");
        let (ok, witness) = gl.check_condition_k();
        assert!(!ok);
        assert_eq!(gl.vertex_name(witness.unwrap()), "a");

        assert!(fixtures::graph("R2").check_condition_k().0);
        assert!(fixtures::graph("E2").check_condition_k().0);
    }

    /// A self-loop feeding a longer return path: the base vertex of the
    /// two-step cycle sees infinitely many first-return paths even though
    /// only one of them is vertex-simple.
    #[test]
    fn first_return_counts_walks_not_simple_cycles() {
        let g = Graph::parse("vertex v\nvertex a\nedge e v a\nedge l a a\nedge b a v\n").unwrap();
        let v = g.vertex_id("v").unwrap();
        let a = g.vertex_id("a").unwrap();
        assert_eq!(g.first_return_count(v), 2);
        assert_eq!(g.first_return_count(a), 2);
        assert!(g.check_condition_k().0);
    }

    #[test]
    fn cofinal_fixtures() {
        assert!(fixtures::graph("C3").is_cofinal());
        assert!(!fixtures::graph("GL").is_cofinal());
        assert!(fixtures::graph("E2").is_cofinal());
    }

    #[test]
    fn shortest_path_prefers_lex_order() {
        // two length-2 routes a->t: (e h) and (f k); e declared before f
        let g = Graph::parse(
            "vertex a\nvertex b\nvertex c\nvertex t\n\
             edge e a b\nedge f a c\nedge h b t\nedge k c t\n",
        )
        .unwrap();
        let a = g.vertex_id("a").unwrap();
        let p = g
            .shortest_path_to(a, |v| g.classify_vertex(v) == VertexClass::Sink)
            .unwrap();
        assert_eq!(p.display(&g), "e h");
    }

    #[test]
    fn cycle_canonical_rotation() {
        let g = fixtures::graph("C3");
        let e2 = g.edge_id("e2").unwrap();
        let e3 = g.edge_id("e3").unwrap();
        let e1 = g.edge_id("e1").unwrap();
        let rotated = Path::from_edges(&g, vec![e2, e3, e1]).unwrap();
        let c = Cycle::canonical(&g, rotated);
        assert_eq!(c.display(&g), "e1 e2 e3");
    }
}
