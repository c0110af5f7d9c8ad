//! Symbolic computation engine for Leavitt path algebras `L_R(E)` over
//! exact commutative coefficient rings.
//!
//! The engine provides:
//!
//! * exact arithmetic in the coefficient rings `Z`, `Z_n`, and `Q`, with
//!   the unital homomorphisms between them ([`ring`]);
//! * finite directed graphs with path enumeration, cycle analysis, and the
//!   decidable graph conditions (L), (K), and cofinality ([`graph`]);
//! * canonical-form arithmetic in `L_R(E)`: normal-form monomials, the
//!   CK-relation rewriting system, involution, and the Z-grading
//!   ([`algebra`]);
//! * constructive witnesses behind the graded and Cuntz-Krieger uniqueness
//!   theorems: every nonzero element reduces to a nonzero multiple of a
//!   vertex by explicit path conjugation ([`witness`]);
//! * the lattice of saturated hereditary vertex sets, quotient and
//!   restriction graphs, ideal membership, and basic-simplicity decision
//!   procedures ([`ideals`]);
//! * independent matrix representations used as correctness oracles, plus
//!   coefficient base change and Laurent-polynomial ideal membership
//!   ([`oracle`]).
//!
//! All values are immutable after construction and all operations are pure,
//! so everything can be shared freely across threads.
//!
//! ```
//! use std::sync::Arc;
//! use leavitt_core::{Element, GeneratorKind, Graph, RingDescriptor};
//!
//! let graph = Arc::new(Graph::parse("vertex v\nedge e v v\nedge f v v\n")?);
//! let ring = RingDescriptor::Integers;
//! let e = Element::generator(&graph, ring, GeneratorKind::Edge, "e")?;
//! let e_star = Element::generator(&graph, ring, GeneratorKind::GhostEdge, "e")?;
//!
//! // the CK relation rewrites e e* against the designated edge
//! assert_eq!(e.mul(&e_star)?.to_string(), "v - f f*");
//! assert_eq!(e_star.mul(&e)?.to_string(), "v");
//! # Ok::<(), leavitt_core::Error>(())
//! ```

pub mod algebra;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod ideals;
pub mod oracle;
pub mod ring;
pub mod sample;
pub mod witness;

pub use algebra::{Element, GeneratorKind, GradedDecomposition, Monomial};
pub use error::{Error, Result};
pub use graph::{Cycle, Edge, EdgeId, Graph, Path, VertexClass, VertexId};
pub use ideals::{HereditarySet, IdealHandle, SimplicityReport};
pub use oracle::{DifferentialReport, EFamily, LaurentPoly, MatrixRep};
pub use ring::{RingDescriptor, RingElement, RingHom};
pub use witness::{Reduction, WitnessReduction};
