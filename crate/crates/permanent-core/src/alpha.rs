use std::fmt;

use num_traits::{One, Signed, Zero};
use numeric_core::Rat;

/// The weight parameter α of the α-permanent / α-determinant, stored exactly.
///
/// The classification of the nonnegativity sets needs to decide whether α has
/// one of the special shapes `−1/(m+1)`, `2/(m+1)`, `1/(m+1)` for `m ∈ ℕ`
/// (ℕ includes 0 here); the `*_m` methods decide these representations
/// exactly and return the witnessing `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alpha(Rat);

impl Alpha {
    pub fn new(value: Rat) -> Alpha {
        Alpha(value)
    }

    pub fn from_int(n: i64) -> Alpha {
        Alpha(Rat::from_integer(n.into()))
    }

    pub fn value(&self) -> &Rat {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `1/α` for nonzero α.
    pub fn reciprocal(&self) -> Option<Alpha> {
        if self.0.is_zero() {
            None
        } else {
            Some(Alpha(self.0.recip()))
        }
    }

    /// If `α = −1/(m+1)` for some `m ∈ ℕ`, returns `m`.
    pub fn neg_reciprocal_m(&self) -> Option<u64> {
        if !self.0.is_negative() {
            return None;
        }
        Self::as_positive_unit_fraction(&-self.0.clone())
    }

    /// If `α = 1/(m+1)` for some `m ∈ ℕ`, returns `m`.
    pub fn pos_reciprocal_m(&self) -> Option<u64> {
        if !self.0.is_positive() {
            return None;
        }
        Self::as_positive_unit_fraction(&self.0)
    }

    /// If `α = 2/(m+1)` for some `m ∈ ℕ`, returns `m`.
    ///
    /// Covers both parities of `m+1`: e.g. `α = 2` gives `m = 0` and
    /// `α = 1/2 = 2/4` gives `m = 3`.
    pub fn two_over_m(&self) -> Option<u64> {
        if !self.0.is_positive() {
            return None;
        }
        // α = 2/k with integer k ≥ 1 ⟺ 2/α is a positive integer.
        let k = Rat::from_integer(2.into()) / &self.0;
        if k.denom().is_one() {
            u64::try_from(k.numer().clone()).ok().map(|k| k - 1)
        } else {
            None
        }
    }

    /// Decides `x = 1/(m+1)` for positive `x`, returning `m`.
    fn as_positive_unit_fraction(x: &Rat) -> Option<u64> {
        if x.numer().is_one() {
            u64::try_from(x.denom().clone()).ok().map(|d| d - 1)
        } else {
            None
        }
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
