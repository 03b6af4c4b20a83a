//! Sparse multivariate polynomials, truncated power series, and the
//! master-theorem expansions of `det(I − XA)^{−α}`.
//!
//! The centerpiece is the pair of generating-function identities (the
//! MacMahon master theorem and its cycle-weighted generalization)
//!
//! ```text
//! det(I − XA)^{−α}    = Σ_𝐧 per_α(A[𝐧]) · x^𝐧 / 𝐧!
//! det(I − αXA)^{−1/α} = Σ_𝐧 det_α(A[𝐧]) · x^𝐧 / 𝐧!
//! ```
//!
//! with `X = diag(x₁,…,x_m)` and `A[𝐧]` the block dilation of `A`.  Both
//! sides are computed exactly over the rationals: the left side by
//! expanding the determinant polynomial and taking a formal power
//! (`exp(e·log f)`), the right side by direct permutation sums from
//! `permanent-core`.  Each is an independent oracle for the other.
//!
//! Three layers:
//!
//! * [`SparsePoly`] — exact sparse polynomials in several variables,
//!   ordered graded-lexicographically.
//! * [`TruncatedSeries`] — power series truncated at a total degree, with
//!   ring operations plus [`TruncatedSeries::log`], [`TruncatedSeries::exp`],
//!   and [`TruncatedSeries::pow`] for arbitrary rational exponents.
//! * [`scan_first_negative`] / [`power_coeff_at`] — an integerized
//!   fixed-point-free path for *deep* expansions (total degree in the
//!   thirties), used to hunt for sign changes far beyond where the generic
//!   rational engine is practical.  Coefficient keys pack into `u64`s so
//!   that machine comparison coincides with graded-lex order.

mod json;
mod master;
mod scan;
mod series;
mod sparse;

pub use json::{coeffs_from_json, coeffs_to_json};
pub use master::{
    det_i_minus_xa, det_i_minus_xa_bounded, macmahon_det_coeffs, macmahon_per_coeffs,
    DEFAULT_MINOR_BOUND,
};
pub use scan::{power_coeff_at, scan_first_negative, DetPowerScan};
pub use series::TruncatedSeries;
pub use sparse::SparsePoly;

use numeric_core::NumericError;
use permanent_core::PermanentError;

/// Errors from series construction and manipulation.
#[derive(Debug, thiserror::Error)]
pub enum SeriesError {
    /// Principal-minor expansion requested for a matrix over the size bound.
    #[error("matrix size {size} exceeds principal-minor bound {bound}")]
    SizeOverBound { size: usize, bound: usize },
    /// `log` or `pow` of a series whose constant term is not 1.
    #[error("series constant term must be 1 for log/pow")]
    ConstantTermNotOne,
    /// `exp` of a series with a nonzero constant term.
    #[error("series constant term must be 0 for exp")]
    ConstantTermNotZero,
    /// The determinantal expansion of `det(I − αXA)^{−1/α}` needs `α ≠ 0`.
    #[error("alpha must be nonzero")]
    ZeroAlpha,
    /// Two operands live in polynomial rings with different variable counts.
    #[error("variable count mismatch: {left} vs {right}")]
    VarMismatch { left: usize, right: usize },
    /// An exponent vector has the wrong length for its ring.
    #[error("exponent vector of length {got} in a ring with {expected} variables")]
    ExponentLength { expected: usize, got: usize },
    /// The requested scan depth does not fit the packed-key encoding.
    #[error("scan of degree {degree} in {nvars} variables exceeds packed-key capacity")]
    PackedKeyOverflow { nvars: usize, degree: u32 },
    /// The determinant polynomial has a coefficient with nonzero imaginary
    /// part, so its real powers are undefined (matrix is not Hermitian).
    #[error("det(I - XA) has a non-real coefficient; A must be Hermitian")]
    NonRealCoefficient,
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    Permanent(#[from] PermanentError),
}
