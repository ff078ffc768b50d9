use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while validating inputs or running a
/// computation.
///
/// Input-invariant violations and enumeration-guardrail hits are kept as
/// distinct variants so callers (the CLI in particular) can map them to
/// different exit codes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("value matrix is not symmetric at ({i}, {j})")]
    AsymmetricValues { i: usize, j: usize },
    #[error("kernel value at ({i}, {j}) is outside [0, 1]: {value}")]
    ValueOutOfRange { i: usize, j: usize, value: String },
    #[error("part {i} has nonpositive measure {value}")]
    NonpositiveMeasure { i: usize, value: String },
    #[error("part measures sum to {sum}, expected 1")]
    MeasuresDontSumToOne { sum: String },
    #[error("refinement fraction {value} must lie strictly between 0 and 1")]
    BadFraction { value: String },
    #[error("part index {i} out of range for {q} parts")]
    BadIndex { i: usize, q: usize },
    #[error("not a permutation of 0..{q}")]
    NotAPermutation { q: usize },

    #[error("bad graph size: {0}")]
    BadSize(String),
    #[error("edge ({u}, {v}) is invalid for a simple graph on {n} vertices")]
    BadEdge { u: usize, v: usize, n: usize },
    #[error("vertex {v} out of range for {n} vertices")]
    BadVertex { v: usize, n: usize },
    #[error("k = {k} out of range 0..={m}")]
    BadK { k: usize, m: usize },
    #[error("edge set is not a subset of the template's edges")]
    NotASubset,
    #[error("probability {value} is outside [0, 1]")]
    BadProbability { value: String },

    #[error("distributions have different supports: {a} vs {b} entries")]
    LengthMismatch { a: usize, b: usize },
    #[error("mass at index {k} is negative: {value}")]
    NegativeMass { k: usize, value: String },
    #[error("masses sum to {sum}, expected 1")]
    MassDoesntSumToOne { sum: String },

    #[error("enumeration needs {cost} assignment evaluations, over the limit of {limit}")]
    TooLarge { cost: u128, limit: u128 },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("parse error: {0}")]
    Parse(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    /// True for errors that report an invariant violation in otherwise
    /// well-formed input, as opposed to unparseable input or a guardrail hit.
    pub fn is_invariant_violation(&self) -> bool {
        !matches!(
            self,
            Error::TooLarge { .. } | Error::Parse(_) | Error::Io { .. }
        )
    }
}
