use thiserror::Error;

use crate::signed::SignedSet;

/// Largest ground set the crate accepts.
pub const MAX_ELEMENTS: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OmError {
    #[error("ground set has {0} elements, the limit is {MAX_ELEMENTS}")]
    GroundSetTooLarge(usize),

    #[error("invalid uniform parameters r={r}, n={n}")]
    InvalidUniform { r: usize, n: usize },

    #[error("matrix rows have inconsistent lengths (row {row} has {found}, expected {expected})")]
    RaggedMatrix { row: usize, found: usize, expected: usize },

    #[error("element {element} out of range for a ground set of size {n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("graph edge ({0}, {1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),

    #[error("empty signed set")]
    EmptySignedSet,

    #[error("signed set has an element in both parts: {0}")]
    OverlappingSignedSet(SignedSet),

    #[error("invalid oriented matroid: {0}")]
    Invalid(String),

    #[error("element order is not a permutation of 0..{0}")]
    InvalidOrder(usize),

    #[error("restriction {restriction} is not defined for mode {mode}")]
    ModeRestrictionMismatch { mode: String, restriction: String },

    #[error("reorientation {0:#b} is not admitted by the restriction")]
    NotAdmitted(u32),

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("malformed instance: {0}")]
    Instance(String),
}

pub type Result<T> = std::result::Result<T, OmError>;
