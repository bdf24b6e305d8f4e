use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),

    #[error("not a permutation of 1..={n}")]
    InvalidPermutation { n: usize },

    #[error("invalid Young diagram: {0}")]
    InvalidDiagram(&'static str),

    #[error("{what} index {index} out of range (limit {limit})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        limit: usize,
    },

    #[error("size mismatch: {what} ({left} vs {right})")]
    SizeMismatch {
        what: &'static str,
        left: usize,
        right: usize,
    },

    #[error("{what} = {value} exceeds the configured limit {limit}")]
    LimitExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("repeated one-particle orbitals are not supported")]
    RepeatedOrbitals,

    #[error("{0} is not Hermitian (deviation {1:e})")]
    NotHermitian(&'static str, f64),

    #[error("two-body tensor is not symmetric under particle exchange (deviation {0:e})")]
    NotExchangeSymmetric(f64),

    #[error("coefficients are not normalized: |c1|^2 + |c2|^2 = {0}")]
    NotNormalized(f64),

    #[error("negative spin value {0}")]
    NegativeSpin(i64),

    #[error("fermion count {fermions} is inconsistent with total spin 2s = {twice_spin}")]
    InconsistentComposite { fermions: u64, twice_spin: u64 },

    #[error("parastatistics rank must be at least 1")]
    InvalidRank,
}
