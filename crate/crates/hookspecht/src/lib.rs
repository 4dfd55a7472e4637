//! Exact combinatorics for graded Specht modules of cyclotomic KLR algebras
//! labelled by hook bipartitions `((n-m),(1^m))`, at level two with quantum
//! characteristic `e >= 3`.
//!
//! The crate computes graded dimensions (closed form and by tableau
//! enumeration), the labels of the graded composition factors, their graded
//! dimensions, and the hook rows of the graded decomposition matrix. Every
//! closed form has a brute-force counterpart so the two can be compared
//! cell by cell; see [`sweep`].

pub mod decomp;
pub mod exec;
pub mod grdim;
pub mod hook_theory;
pub mod laurent;
pub mod partition;
pub mod signatures;
pub mod sweep;
pub mod tableaux;

pub use exec::Exec;
pub use laurent::LaurentPoly;
pub use partition::{Multipartition, Node, Partition, Quantum};

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("index {index} out of range: {reason}")]
    InvalidIndex { index: usize, reason: String },
    #[error("cannot apply {r} steps, only {available} available")]
    Capacity { r: usize, available: usize },
    #[error("restriction chain invalid: {0}")]
    ChainInvalid(String),
    #[error("polynomial {0} cannot be centered")]
    NonCenterable(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
