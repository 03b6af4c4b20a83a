use std::cmp::Ordering;
use std::fmt;

use num::BigInt;
use num_traits::One;

/// A multi-index `𝐧 = (n₁, …, n_m) ∈ ℕ^m`.
///
/// Indexes block dilations `A[𝐧]` and power-series coefficients `x^𝐧/𝐧!`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(parts: Vec<u32>) -> MultiIndex {
        MultiIndex(parts)
    }

    pub fn from_slice(parts: &[u32]) -> MultiIndex {
        MultiIndex(parts.to_vec())
    }

    /// The all-ones index of length `m` (identity dilation).
    pub fn ones(m: usize) -> MultiIndex {
        MultiIndex(vec![1; m])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|𝐧| = Σ nᵢ`.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `𝐧! = Π nᵢ!` as an exact integer.
    pub fn factorial(&self) -> BigInt {
        let mut acc = BigInt::one();
        for &p in &self.0 {
            for k in 2..=p as u64 {
                acc *= k;
            }
        }
        acc
    }

    /// Graded-lexicographic comparison: first by total degree, then
    /// lexicographically on the parts. This is the deterministic scan and
    /// serialization order used throughout the workspace.
    pub fn graded_lex_cmp(&self, other: &MultiIndex) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// `Ord` is graded-lexicographic, so ordered maps keyed by `MultiIndex`
/// iterate in the canonical coefficient order.
impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        MultiIndex::graded_lex_cmp(self, other)
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}
