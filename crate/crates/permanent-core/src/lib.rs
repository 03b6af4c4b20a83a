//! Permanents, α-permanents, α-determinants, and block dilation.
//!
//! For an `n × n` matrix `A` and a permutation `σ` with `c(σ)` disjoint
//! cycles:
//!
//! * `per(A)      = Σ_σ Π a_{iσ(i)}`
//! * `per_α(A)    = Σ_σ α^{c(σ)} Π a_{iσ(i)}`
//! * `det_α(A)    = Σ_σ α^{n−c(σ)} Π a_{iσ(i)}`
//!
//! The third is the division-free expansion of `αⁿ·per_{1/α}(A)`, which makes
//! `α = 0` a total case (only the identity permutation survives, leaving the
//! diagonal product). Specializations: `det_{−1} = det`, `det_1 = per`,
//! `per_1 = per`.
//!
//! [`dilate`] builds the block matrix `A[𝐧]` that replaces entry `a_{ij}` by
//! a constant `nᵢ × nⱼ` block; dilation preserves positive semidefiniteness,
//! which combined with the master-theorem expansions drives every
//! nonnegativity statement verified by this workspace.
//!
//! Everything is exact; permutation sums are enumerated with Heap's algorithm
//! (naive bound 10) or Ryser's Gray-code inclusion–exclusion (bound 20). With
//! the `parallel` feature (default) large enumerations fan out over the value
//! assigned to position 0.

mod alpha;
mod dilate;
mod multi_index;
mod perm;

pub use alpha::Alpha;
pub use dilate::dilate;
pub use multi_index::MultiIndex;
pub use perm::{
    cycle_count, det_alpha, det_alpha_bounded, per_alpha, per_alpha_bounded, per_naive,
    per_naive_bounded, per_ryser, per_ryser_bounded, DEFAULT_NAIVE_BOUND, DEFAULT_RYSER_BOUND,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermanentError {
    #[error("matrix size {size} exceeds the enumeration bound {bound}")]
    SizeOverBound { size: usize, bound: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("multi-index length {got} does not match matrix size {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error(transparent)]
    Numeric(#[from] numeric_core::NumericError),
}
