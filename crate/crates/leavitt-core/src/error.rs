//! Error type shared by all engine modules.

use crate::ring::RingDescriptor;

/// Everything that can go wrong inside the engine.
///
/// Domain errors (mismatched rings, unknown names, violated graph
/// preconditions) are ordinary values; `InternalContradiction` is reserved
/// for situations the underlying theory rules out, so hitting it means the
/// engine itself is buggy.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingDescriptor, RingDescriptor),
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("no unital ring homomorphism {0} -> {1}")]
    NoSuchHom(RingDescriptor, RingDescriptor),
    #[error("operands belong to different graphs")]
    GraphMismatch,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("edge `{edge}` references undeclared vertex `{vertex}`")]
    UndeclaredVertex { edge: String, vertex: String },
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("graph declares no vertices")]
    EmptyGraph,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("paths are not composable at the junction")]
    NonComposablePair,
    #[error("element has a ghost part, not a polynomial in real edges")]
    NotRealPolynomial,
    #[error("element is zero")]
    ZeroElement,
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("element is not homogeneous of degree zero")]
    NotDegreeZero,
    #[error("element is homogeneous of degree zero; use the degree-zero reduction")]
    DegreeZeroInput,
    #[error("graph violates Condition (L): cycle `{0}` has no exit")]
    ConditionLViolated(String),
    #[error("vertex set is not hereditary")]
    NotHereditary,
    #[error("vertex set is not saturated")]
    NotSaturated,
    #[error("graph is not a single simple cycle")]
    NotACycleGraph,
    #[error("graph contains a cycle")]
    NotAcyclic,
    #[error("representation family does not cover every generator")]
    IncompleteFamily,
    #[error("operation requires field coefficients (rationals)")]
    NonFieldCoefficients,
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("bad coefficient literal `{literal}` for ring {ring}")]
    BadCoefficient {
        literal: String,
        ring: RingDescriptor,
    },
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
