use thiserror::Error;

/// Errors raised by contract violations in the public API.
///
/// Internal invariant failures (a constructed map that is not equivariant, a
/// differential that does not square to zero) are bugs and panic instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("weight mismatch: {0} vs {1}")]
    WeightMismatch(u64, u64),
    #[error("parts must be weakly decreasing positive integers: {0:?}")]
    NotAPartition(Vec<u32>),
    #[error("enumeration bound exceeded: {0} > {1}")]
    EnumerationBound(u64, u64),
    #[error("bead count {0} is smaller than the partition length {1}")]
    BeadCountTooSmall(usize, usize),
    #[error("not a strictly decreasing beta-sequence")]
    NotABetaSequence,
    #[error("{0} is not a {1}-core")]
    NotACore(String, u64),
    #[error("invalid rim hook descriptor (hand row {0}, arm {1})")]
    InvalidRimHook(usize, u32),
    #[error("index {0} out of range [0, {1}]")]
    IndexRange(i64, i64),
    #[error("inner shape is not contained in the outer shape")]
    ShapeNotContained,
    #[error("evaluation dimension would be {0}, above the configured bound {1}")]
    DegreeBound(u128, u128),
    #[error("incompatible modules: {0}")]
    Incompatible(String),
    #[error("suite {0} is restricted to p <= {1}; pass a tier override to force it")]
    TierRestricted(String, u64),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
