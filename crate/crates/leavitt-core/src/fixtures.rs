//! Small standard graphs used throughout the test suites, benchmarks and
//! documentation.
//!
//! Declaration order matters (it fixes designated edges), so these are kept
//! as literal graph files rather than built programmatically.

use crate::graph::Graph;

/// Two vertices, no edges.
pub const E2: &str = "vertex u\nvertex w\n";

/// One vertex with a single loop.
pub const C1: &str = "vertex v\nedge e v v\n";

/// One vertex with two loops; `e` is the designated edge.
pub const R2: &str = "vertex v\nedge e v v\nedge f v v\n";

/// A 2-cycle `a <-> b` with an extra edge from `b` into the sink `t`.
pub const GL: &str = "vertex a\nvertex b\nvertex t\nedge e a b\nedge g b a\nedge h b t\n";

/// A single edge `v1 -> v2`.
pub const A2: &str = "vertex v1\nvertex v2\nedge e v1 v2\n";

/// A 3-cycle.
pub const C3: &str =
    "vertex v1\nvertex v2\nvertex v3\nedge e1 v1 v2\nedge e2 v2 v3\nedge e3 v3 v1\n";

/// A 3-cycle with an exit edge into a sink.
pub const C3E: &str = "vertex v1\nvertex v2\nvertex v3\nvertex s\n\
                       edge e1 v1 v2\nedge e2 v2 v3\nedge e3 v3 v1\nedge x1 v1 s\n";

/// One source feeding two sinks.
pub const Y: &str = "vertex v1\nvertex v2\nvertex v3\nedge a v1 v2\nedge b v1 v3\n";

/// All fixture names, in a stable order.
pub const NAMES: [&str; 8] = ["E2", "C1", "R2", "GL", "A2", "C3", "C3E", "Y"];

/// Fixture source text by name.  Panics on unknown names; fixtures are a
/// closed set.
pub fn text(name: &str) -> &'static str {
    match name {
        "E2" => E2,
        "C1" => C1,
        "R2" => R2,
        "GL" => GL,
        "A2" => A2,
        "C3" => C3,
        "C3E" => C3E,
        "Y" => Y,
        other => panic!("unknown fixture `{other}`"),
    }
}

/// Parses a fixture graph by name.
pub fn graph(name: &str) -> Graph {
    Graph::parse(text(name)).expect("fixture graphs parse")
}
