//! Which α keep the α-determinant nonnegative on positive semidefinite
//! matrices — classification, exact scanning, and explicit counterexamples.
//!
//! The α-determinant `det_α(A) = αⁿ·per_{1/α}(A)` interpolates between the
//! determinant (α = −1), the diagonal product (α = 0), and the permanent
//! (α = 1). [`classify_alpha`] decides membership in the exact answer sets
//!
//! ```text
//! D_ℝ = {−1/(m+1)} ∪ {2/(m+1)} ∪ {0}      D_ℂ = {±1/(m+1)} ∪ {0}
//! ```
//!
//! and [`nonnegativity_scan`] backs the positive direction with exact
//! property tests. For non-members the sets leave a gap against the
//! conjectured answer `{−1/(m+1)} ∪ [0,2]` (real; `[0,1]` complex), and
//! [`find_witness`] closes it constructively: it builds a spanning family
//! of rank-one matrices, forms the square-root-free Gram matrix
//! `G = V*A(y)⁻¹V` of the Scott–Sokal obstruction, expands
//! `det(I − XG)^{−β}` with `β = 1/α` until a negative Taylor coefficient
//! appears at some index 𝐧, and returns the dilation `G[𝐧]` — an exact PSD
//! matrix with `det_α(G[𝐧]) < 0`, verified along two independent
//! computational paths.

use numeric_core::Rat;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

mod classify;
mod frame;
mod gram;
mod json;
mod nonneg;
mod witness;

pub use classify::{classify_alpha, c_contains, r_contains, AlphaClass, MemberReason};
pub use frame::{spanning_rank_one_frame, FrameVectors};
pub use gram::witness_gram;
pub use json::{
    alpha_class_to_json, exhaustion_to_json, nonneg_report_to_json, witness_to_json,
};
pub use nonneg::{nonnegativity_scan, NonnegReport};
pub use witness::{find_witness, ExhaustionReport, SearchOutcome, Witness};

/// Scalar field the matrices live over: real symmetric or complex hermitian.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Real,
    Complex,
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Field::Real => write!(f, "real"),
            Field::Complex => write!(f, "complex"),
        }
    }
}

impl std::str::FromStr for Field {
    type Err = WitnessError;

    fn from_str(s: &str) -> Result<Field, WitnessError> {
        match s {
            "real" => Ok(Field::Real),
            "complex" => Ok(Field::Complex),
            other => Err(WitnessError::Parse(format!(
                "unknown field {other:?} (expected \"real\" or \"complex\")"
            ))),
        }
    }
}

/// One independent ChaCha stream per trial index, identical across thread
/// counts.
pub(crate) fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut z = seed ^ trial.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^= z >> 31;
    ChaCha8Rng::seed_from_u64(z)
}

#[derive(Debug, thiserror::Error)]
pub enum WitnessError {
    #[error("exponent set C(m)/R(m) requires m ≥ 1, got {m}")]
    InvalidM { m: u64 },
    #[error("α = {alpha} is a member of D_{field}; nothing to refute")]
    AlphaIsMember { alpha: Rat, field: Field },
    #[error("α = {alpha} is not a member of D_{field}; nonnegativity does not hold")]
    AlphaNotMember { alpha: Rat, field: Field },
    #[error(
        "α = {alpha} is outside the constructive range for the {field} field \
         (the witness construction targets 0 < α ≤ 2 real, 0 < α ≤ 1 complex)"
    )]
    AlphaOutOfRange { alpha: Rat, field: Field },
    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("weight y[{index}] must be strictly positive")]
    NonPositiveWeight { index: usize },
    #[error("scan sample budget requires max_size ≥ 1")]
    InvalidSize,
    #[error("series scan requires max_degree ≥ 1")]
    InvalidDegree,
    #[error("frame outer products span a space of rank {got}, expected {expected}")]
    FrameRankDeficient { expected: usize, got: usize },
    #[error("independent {path} verification disagrees: series gave {series}, {path} gave {other}")]
    VerificationMismatch {
        path: &'static str,
        series: Rat,
        other: Rat,
    },
    #[error("constructed Gram matrix failed the exact PSD check")]
    GramNotPsd,
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Numeric(#[from] numeric_core::NumericError),
    #[error(transparent)]
    Permanent(#[from] permanent_core::PermanentError),
    #[error(transparent)]
    Series(#[from] series_core::SeriesError),
}
