//! Exact scalar arithmetic and exact linear algebra primitives.
//!
//! Everything in this crate is tolerance-free: scalars are arbitrary-precision
//! rationals (or complex rationals), determinants are computed by fraction-free
//! Bareiss elimination, positive semidefiniteness is decided from the sign
//! pattern of the characteristic polynomial, and real-rootedness is decided by
//! Sturm sequences. No floating point appears anywhere.
//!
//! The crate provides:
//!
//! * [`Rat`] / [`CRat`] — exact rational and complex-rational scalars, unified
//!   under the [`Scalar`] trait so matrix code is written once for both fields;
//! * [`RMatrix`] — a dense row-major matrix with optional symmetric/hermitian
//!   structure flags (validated when set);
//! * [`det_exact`], [`char_poly`], [`is_psd_exact`], [`sylvester_check`],
//!   [`invert`], [`rank`] — exact linear algebra;
//! * [`UniPoly`] with [`sturm_real_rooted`] and [`sturm_roots_all_negative`] —
//!   exact univariate root location for hyperbolicity checks;
//! * [`json`] — the shared bit-exact matrix JSON encoding used by every tool
//!   in the workspace.

mod error;
pub mod json;
mod linalg;
mod matrix;
mod scalar;
mod sturm;
mod unipoly;

pub use error::NumericError;
pub use linalg::{char_poly, det_exact, invert, rank, sylvester_check};
pub use matrix::{is_psd_exact, RMatrix};
pub use scalar::{CRat, Rat, Scalar};
pub use sturm::{sturm_real_rooted, sturm_roots_all_negative};
pub use unipoly::UniPoly;

/// Convenience constructor for a rational from a numerator/denominator pair.
///
/// Panics if `den == 0`; intended for literals in tests and examples.
pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "rational literal with zero denominator");
    Rat::new(num.into(), den.into())
}

/// Convenience constructor for an integer rational.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(n.into())
}
