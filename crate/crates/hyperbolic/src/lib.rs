//! Hyperbolic polynomials and their polarized forms.
//!
//! A homogeneous `h ∈ ℝ[x₁,…,x_n]` of degree `d` is *hyperbolic* with
//! respect to a direction `e` (with `h(e) ≠ 0`) when every univariate
//! restriction `t ↦ h(x + te)` is real-rooted.  Writing the roots as
//! `−λ₁(x), …, −λ_d(x)`, the open *hyperbolicity cone* is
//!
//! ```text
//! Λ₊₊ = { x ∈ ℝⁿ : λ₁(x) > 0 }  (all roots of h(x + te) negative)
//! ```
//!
//! Everything here is exact: restrictions are expanded over the rationals
//! and root conditions are decided by Sturm chains, so cone membership is
//! a theorem about the given point, not a numerical guess.  Hyperbolicity
//! itself is certified probabilistically — `trials` random rational lines,
//! each checked exactly — because deciding it symbolically is out of scope;
//! a failed line is returned as an exact counterexample.
//!
//! The polarization side implements the complete polarized form
//! `H(v₁,…,v_d) = (1/d!)·D_{v₁}⋯D_{v_d} h`, its partial variant with some
//! arguments left symbolic, and the mixed discriminant
//! `H(A₁,…,A_n) = (1/n!)·Σ_{S⊆[n]} (−1)^{n−|S|} det(Σ_{i∈S} Aᵢ)`.
//! For `h = x₁⋯x_n` the polarized form recovers `per(v₁,…,v_n)/n!`, the
//! bridge between permanents and hyperbolic-polynomial machinery.

mod certify;
mod json;
mod mixed;
mod polarize;

pub use certify::{
    certify_hyperbolic, cone_member, garding_lemma_test, sample_box_point, Certificate,
    GardingReport, HyperbolicInstance, DEFAULT_TRIALS,
};
pub use json::{certificate_to_json, poly_from_json, poly_to_json};
pub use mixed::{det_poly_symmetric, flatten_symmetric, mixed_discriminant, sym_matrix_from_flat};
pub use polarize::{directional_derivative, partial_polarization, polarized_form};

use numeric_core::{NumericError, Rat};
use series_core::SeriesError;

/// Errors from polarization, certification, and cone queries.
#[derive(Debug, thiserror::Error)]
pub enum HyperbolicError {
    /// A vector has the wrong length for the polynomial's variable count.
    #[error("vector of length {got} against {expected} variables")]
    LengthMismatch { expected: usize, got: usize },
    /// The complete polarized form of a degree-`d` form takes exactly `d`
    /// vector arguments.
    #[error("polarized form of a degree-{degree} form takes {degree} vectors, got {got}")]
    VectorCount { degree: u32, got: usize },
    /// Partial polarization needs strictly fewer fixed vectors than the degree.
    #[error("partial polarization with {k} fixed vectors needs degree > {k}, got degree {degree}")]
    TooManyFixedVectors { k: usize, degree: u32 },
    /// Hyperbolicity and polarization are defined for homogeneous forms only.
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    /// The zero polynomial has no degree to polarize against.
    #[error("zero polynomial")]
    ZeroPolynomial,
    /// Certification requires `h(e) ≠ 0`.
    #[error("polynomial vanishes at the proposed hyperbolicity direction")]
    VanishesAtDirection,
    /// Exact counterexample to hyperbolicity: the restriction of `h` to the
    /// line `x + te` has a non-real root.
    #[error("restriction along x = ({}) is not real-rooted", format_point(.x))]
    NotRealRooted { x: Vec<Rat> },
    /// A point that was required to lie in the open hyperbolicity cone does not.
    #[error("point ({}) is outside the hyperbolicity cone", format_point(.x))]
    OutsideCone { x: Vec<Rat> },
    /// Mixed discriminant of `n` matrices needs every factor to be `n × n`.
    #[error("matrix {index} is {rows}×{cols}, expected {expected}×{expected}")]
    WrongShape { index: usize, rows: usize, cols: usize, expected: usize },
    /// Mixed discriminant of an empty family is not defined here.
    #[error("mixed discriminant needs at least one matrix")]
    EmptyFamily,
    /// Flattening requires an exactly symmetric square matrix.
    #[error("matrix is not symmetric")]
    NotSymmetric,
    /// Malformed polynomial JSON.
    #[error("polynomial parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

fn format_point(x: &[Rat]) -> String {
    x.iter().map(Rat::to_string).collect::<Vec<_>>().join(", ")
}
