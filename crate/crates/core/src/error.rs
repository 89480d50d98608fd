use thiserror::Error;

/// Errors raised by the exact kernels and table assemblies.
///
/// Every variant signals a structural defect (a formula transcribed wrongly,
/// an inconsistent input) rather than a numerical event: all arithmetic in
/// this crate is exact.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact division failed: the dividend is not a multiple of the divisor.
    #[error("not divisible: remainder leading term x^{p}*y^{q} is not a multiple of the divisor leading term")]
    NotDivisible { p: u32, q: u32 },

    /// A graded dimension sits in an odd degree where every class must have
    /// balanced Hodge type (p, p).
    #[error("odd degree {degree} carries dimension {dim}; no balanced Hodge type exists")]
    OddDegreePresent { degree: u32, dim: u64 },

    /// A differential rank exceeds the dimension of its source or target.
    #[error("inconsistent ranks: {context}")]
    InconsistentRanks { context: String },

    /// A dimension-level subtraction went negative while assembling a table.
    #[error("negative dimension while assembling {context}")]
    NegativeDimension { context: String },

    /// A polynomial was used as a dimension table but has a coefficient that
    /// is not a nonnegative integer.
    #[error("not a dimension table: coefficient of x^{p}*y^{q} is {value}")]
    NotATable { p: u32, q: u32, value: String },
}

pub type Result<T> = std::result::Result<T, Error>;
