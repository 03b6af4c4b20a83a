//! Exact membership tests for the α-determinant nonnegativity sets.

use num_bigint::BigInt;
use num_traits::Signed;
use numeric_core::{rint, Rat};
use permanent_core::Alpha;

use crate::{Field, WitnessError};

/// Why an α belongs to its nonnegativity set — or that it does not.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MemberReason {
    /// α = 0: `det_0` is the diagonal product.
    Zero,
    /// α = −1/(m+1) (both fields; m = 0 is the determinant itself).
    NegReciprocal(u64),
    /// α = 2/(m+1) (real field only; m = 1 is the permanent).
    TwoOver(u64),
    /// α = 1/(m+1) (complex field only; m = 0 is the permanent).
    PosReciprocal(u64),
    NonMember,
}

impl std::fmt::Display for MemberReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MemberReason::Zero => write!(f, "zero"),
            MemberReason::NegReciprocal(m) => write!(f, "neg-reciprocal({m})"),
            MemberReason::TwoOver(m) => write!(f, "two-over({m})"),
            MemberReason::PosReciprocal(m) => write!(f, "pos-reciprocal({m})"),
            MemberReason::NonMember => write!(f, "non-member"),
        }
    }
}

/// Exact classification of one α against its field's nonnegativity set.
#[derive(Clone, Debug)]
pub struct AlphaClass {
    pub alpha: Rat,
    pub field: Field,
    /// Membership in D_ℝ (real) or D_ℂ (complex).
    pub member: bool,
    /// The set clause that admits α; `NonMember` exactly when `member` is
    /// false.
    pub reason: MemberReason,
    /// Whether the conjectured (and refuted) answer — `{−1/(m+1)} ∪ [0,2]`
    /// real, `{−1/(m+1)} ∪ [0,1]` complex — would have claimed membership.
    pub conjecture4_claimed: bool,
}

impl AlphaClass {
    /// True where the conjectured set and the exact set disagree: the
    /// conjecture claims membership but α is not a member.
    pub fn conjecture4_disagreement(&self) -> bool {
        self.conjecture4_claimed && !self.member
    }
}

/// Decides membership of α in D_ℝ or D_ℂ by exact pattern matching on the
/// set forms, and records what the conjectured interval answer would have
/// said.
pub fn classify_alpha(alpha: &Rat, field: Field) -> AlphaClass {
    let a = Alpha::new(alpha.clone());
    let reason = if a.is_zero() {
        MemberReason::Zero
    } else if let Some(m) = a.neg_reciprocal_m() {
        MemberReason::NegReciprocal(m)
    } else {
        match field {
            Field::Real => a
                .two_over_m()
                .map_or(MemberReason::NonMember, MemberReason::TwoOver),
            Field::Complex => a
                .pos_reciprocal_m()
                .map_or(MemberReason::NonMember, MemberReason::PosReciprocal),
        }
    };
    let upper = match field {
        Field::Real => rint(2),
        Field::Complex => rint(1),
    };
    let conjecture4_claimed =
        a.neg_reciprocal_m().is_some() || (!alpha.is_negative() && *alpha <= upper);
    AlphaClass {
        alpha: alpha.clone(),
        field,
        member: reason != MemberReason::NonMember,
        reason,
        conjecture4_claimed,
    }
}

/// Membership in the exponent set `C(m) = ℕ ∪ [m−1, ∞)`.
pub fn c_contains(m: u64, x: &Rat) -> Result<bool, WitnessError> {
    if m < 1 {
        return Err(WitnessError::InvalidM { m });
    }
    let threshold = Rat::from_integer(BigInt::from(m) - 1);
    Ok((x.is_integer() && !x.is_negative()) || *x >= threshold)
}

/// Membership in the halved set `R(m) = {x/2 : x ∈ C(m)}`, i.e. `2x ∈ C(m)`.
pub fn r_contains(m: u64, x: &Rat) -> Result<bool, WitnessError> {
    c_contains(m, &(x * rint(2)))
}
