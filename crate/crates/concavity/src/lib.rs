//! Concavity of permanent and polarization quotients, verified exactly.
//!
//! The objects under test are ratios of polarized forms with some arguments
//! frozen at fixed cone vectors `b₀, b₁, …, b_k`:
//!
//! ```text
//!          per(b₁, …, b_k, x, …, x)              H(b₁, …, b_k, x, …, x)
//! f(x) =  ───────────────────────────    resp.  ───────────────────────────
//!          per(b₀, b₁, …, b_k, x, …, x)          H(b₀, b₁, …, b_k, x, …, x)
//! ```
//!
//! the first over the positive orthant with the permanent playing the role
//! of the product form `x₁⋯x_n`, the second over the hyperbolicity cone of
//! an arbitrary certified instance (the determinant over positive definite
//! matrices being the flattened special case).  Bauschke–Güler–Lewis–Sendov
//! concavity of such quotients — degree-one homogeneous ratios of adjacent
//! polarizations — is verified, never assumed:
//!
//! * [`midpoint_concavity_scan`] samples exact rational pairs from the cone
//!   and decides `f((x+y)/2) ≥ (f(x)+f(y))/2` as an exact rational
//!   inequality, so there is no tolerance to tune and a single violation
//!   would be a genuine counterexample.
//! * [`hessian_nsd_check`] is the auxiliary float diagnostic: a
//!   central-difference Hessian at sampled interior points whose maximum
//!   eigenvalue (cyclic Jacobi) must not exceed a small tolerance.
//!
//! Both quotient paths are kept independent on purpose: the permanent form
//! evaluates Ryser sums, the polarization form evaluates pre-differentiated
//! sparse polynomials, and on the product form the two must agree exactly.

mod hessian;
mod quotient;
mod scan;

pub use hessian::{hessian_max_eigenvalue, hessian_nsd_check, jacobi_max_eigenvalue, HessianReport};
pub use quotient::{
    bapat_quotient, elementary_symmetric, hyperbolic_quotient, quotient, QuotientMode,
    QuotientSpec,
};
pub use scan::{midpoint_concavity_scan, scan_report_to_json, ScanReport};

use hyperbolic::HyperbolicError;
use numeric_core::NumericError;
use permanent_core::PermanentError;
use series_core::SeriesError;

/// Errors from quotient construction, evaluation, and scanning.
#[derive(Debug, thiserror::Error)]
pub enum ConcavityError {
    /// A fixed vector is not a member of the open cone.
    #[error("fixed vector {index} is not in the open cone")]
    NotInCone { index: usize },
    /// The quotient needs `k < d` so the denominator keeps nonnegative degree.
    #[error("{k} fixed vectors beyond the base need degree > {k}, got degree {degree}")]
    TooManyFixedVectors { k: usize, degree: u32 },
    /// Every quotient needs at least the base vector `b₀`.
    #[error("no fixed vectors: the quotient needs at least b0")]
    NoBaseVector,
    /// Point has the wrong dimension for the spec.
    #[error("point of length {got} against {expected} variables")]
    LengthMismatch { expected: usize, got: usize },
    /// Evaluation point is outside the quotient's open cone.
    #[error("evaluation point is outside the open cone")]
    OutsideDomain,
    /// The denominator vanished (impossible on the open cone).
    #[error("denominator vanished at the evaluation point")]
    ZeroDenominator,
    /// This evaluation path serves a different [`QuotientMode`].
    #[error("operation applies to {expected:?} specs, got {got:?}")]
    WrongMode { expected: QuotientMode, got: QuotientMode },
    /// `elementary_symmetric(k, x)` needs `0 ≤ k ≤ len(x)`.
    #[error("elementary symmetric index {k} out of range for {n} variables")]
    IndexOutOfRange { k: usize, n: usize },
    /// Cone rejection sampling ran out of attempts.
    #[error("cone sampling exhausted its budget of {budget} proposals")]
    SamplingExhausted { budget: u64 },
    #[error(transparent)]
    Hyperbolic(#[from] HyperbolicError),
    #[error(transparent)]
    Permanent(#[from] PermanentError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}
