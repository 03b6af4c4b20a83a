//! Permutation sums: naive enumeration (Heap's algorithm), Ryser's Gray-code
//! inclusion–exclusion, and the cycle-weighted sums behind `per_α` / `det_α`.

use num_traits::One;
use numeric_core::{RMatrix, Rat, Scalar};

use crate::{Alpha, PermanentError};

/// Default size cap for O(n!) permutation enumeration.
pub const DEFAULT_NAIVE_BOUND: usize = 10;
/// Default size cap for Ryser's O(2ⁿ·n) formula.
pub const DEFAULT_RYSER_BOUND: usize = 20;

/// Number of disjoint cycles of a permutation given in one-line notation
/// (`sigma[i]` is the image of `i`, zero-based).
pub fn cycle_count(sigma: &[usize]) -> Result<usize, PermanentError> {
    let n = sigma.len();
    let mut seen = vec![false; n];
    for &v in sigma {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(PermanentError::NotAPermutation(format!(
                "{sigma:?} is not a bijection on 0..{n}"
            )));
        }
    }
    let mut visited = vec![false; n];
    let mut cycles = 0;
    for start in 0..n {
        if visited[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !visited[i] {
            visited[i] = true;
            i = sigma[i];
        }
    }
    Ok(cycles)
}

fn cycle_count_unchecked(sigma: &[usize], visited: &mut [bool]) -> usize {
    visited.fill(false);
    let mut cycles = 0;
    for start in 0..sigma.len() {
        if visited[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !visited[i] {
            visited[i] = true;
            i = sigma[i];
        }
    }
    cycles
}

/// Iterative Heap's algorithm: calls `f` once per permutation of `arr`.
fn heap_permutations(arr: &mut [usize], f: &mut impl FnMut(&[usize])) {
    let n = arr.len();
    f(arr);
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                arr.swap(0, i);
            } else {
                arr.swap(c[i], i);
            }
            f(arr);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Sums `weight(c(σ)) · Π_i a_{i,σ(i)}` over all permutations σ with
/// `σ(0) = first`, where `weights[c]` is the weight of cycle count `c`.
fn weighted_sum_with_first<S: Scalar>(a: &RMatrix<S>, weights: &[Rat], first: usize) -> S {
    let n = a.rows();
    let mut sigma = vec![0usize; n];
    sigma[0] = first;
    let mut rest: Vec<usize> = (0..n).filter(|&v| v != first).collect();
    let mut visited = vec![false; n];
    let mut acc = S::zero();
    let a0 = a.get(0, first).clone();
    heap_permutations(&mut rest, &mut |perm| {
        sigma[1..].copy_from_slice(perm);
        let mut prod = a0.clone();
        for (i, &j) in sigma.iter().enumerate().skip(1) {
            if prod.is_zero() {
                break;
            }
            prod = prod * a.get(i, j).clone();
        }
        if !prod.is_zero() {
            let c = cycle_count_unchecked(&sigma, &mut visited);
            acc = acc.clone() + prod.mul_rat(&weights[c]);
        }
    });
    acc
}

/// The cycle-weighted permutation sum `Σ_σ weights[c(σ)] · Π a_{iσ(i)}`.
///
/// With the `parallel` feature the sum fans out over the image of position 0;
/// exact addition is associative and commutative, so the split cannot change
/// the result.
fn weighted_perm_sum<S: Scalar>(
    a: &RMatrix<S>,
    weights: &[Rat],
    bound: usize,
) -> Result<S, PermanentError> {
    if !a.is_square() {
        return Err(numeric_core::NumericError::NonSquare {
            rows: a.rows(),
            cols: a.cols(),
        }
        .into());
    }
    let n = a.rows();
    if n > bound {
        return Err(PermanentError::SizeOverBound { size: n, bound });
    }
    if n == 0 {
        // The empty permutation has zero cycles and an empty product.
        return Ok(S::from_rat(weights[0].clone()));
    }

    #[cfg(feature = "parallel")]
    {
        if n >= 9 {
            use rayon::prelude::*;
            return Ok((0..n)
                .into_par_iter()
                .map(|first| weighted_sum_with_first(a, weights, first))
                .reduce(S::zero, |x, y| x + y));
        }
    }

    let mut acc = S::zero();
    for first in 0..n {
        acc = acc + weighted_sum_with_first(a, weights, first);
    }
    Ok(acc)
}

/// Permanent by full permutation enumeration (exact; `n ≤ bound`).
pub fn per_naive_bounded<S: Scalar>(a: &RMatrix<S>, bound: usize) -> Result<S, PermanentError> {
    let weights = vec![Rat::one(); a.rows() + 1];
    weighted_perm_sum(a, &weights, bound)
}

/// Permanent by full permutation enumeration with the default bound (10).
pub fn per_naive<S: Scalar>(a: &RMatrix<S>) -> Result<S, PermanentError> {
    per_naive_bounded(a, DEFAULT_NAIVE_BOUND)
}

/// α-permanent `per_α(A) = Σ_σ α^{c(σ)} Π a_{iσ(i)}` (exact; `n ≤ bound`).
pub fn per_alpha_bounded<S: Scalar>(
    a: &RMatrix<S>,
    alpha: &Alpha,
    bound: usize,
) -> Result<S, PermanentError> {
    let weights = power_table(alpha.value(), a.rows(), false);
    weighted_perm_sum(a, &weights, bound)
}

/// α-permanent with the default enumeration bound (10).
pub fn per_alpha<S: Scalar>(a: &RMatrix<S>, alpha: &Alpha) -> Result<S, PermanentError> {
    per_alpha_bounded(a, alpha, DEFAULT_NAIVE_BOUND)
}

/// α-determinant `det_α(A) = Σ_σ α^{n−c(σ)} Π a_{iσ(i)}` (exact; `n ≤ bound`).
///
/// This division-free cycle expansion equals `αⁿ·per_{1/α}(A)` for `α ≠ 0`
/// and extends it totally to `α = 0`, where only the identity permutation
/// (the unique σ with `c(σ) = n`) survives: `det_0(A) = Π a_{ii}`.
pub fn det_alpha_bounded<S: Scalar>(
    a: &RMatrix<S>,
    alpha: &Alpha,
    bound: usize,
) -> Result<S, PermanentError> {
    let weights = power_table(alpha.value(), a.rows(), true);
    weighted_perm_sum(a, &weights, bound)
}

/// α-determinant with the default enumeration bound (10).
pub fn det_alpha<S: Scalar>(a: &RMatrix<S>, alpha: &Alpha) -> Result<S, PermanentError> {
    det_alpha_bounded(a, alpha, DEFAULT_NAIVE_BOUND)
}

/// Weight table indexed by cycle count: `α^c` or, for the determinant
/// variant, `α^{n−c}` — with the convention `0⁰ = 1` so that `α = 0` keeps
/// the diagonal term.
fn power_table(alpha: &Rat, n: usize, complement: bool) -> Vec<Rat> {
    let mut pows = Vec::with_capacity(n + 1);
    let mut p = Rat::one();
    pows.push(p.clone());
    for _ in 0..n {
        p *= alpha;
        pows.push(p.clone());
    }
    if complement {
        (0..=n).map(|c| pows[n - c].clone()).collect()
    } else {
        pows
    }
}

/// Permanent by Ryser's inclusion–exclusion over column subsets,
/// `per(A) = (−1)ⁿ Σ_{∅≠S⊆[n]} (−1)^{|S|} Π_i Σ_{j∈S} a_{ij}`,
/// walked in Gray-code order so each step updates the row sums by a single
/// column (exact; `n ≤ bound`, default 20).
pub fn per_ryser_bounded<S: Scalar>(a: &RMatrix<S>, bound: usize) -> Result<S, PermanentError> {
    if !a.is_square() {
        return Err(numeric_core::NumericError::NonSquare {
            rows: a.rows(),
            cols: a.cols(),
        }
        .into());
    }
    let n = a.rows();
    if n > bound {
        return Err(PermanentError::SizeOverBound { size: n, bound });
    }
    if n == 0 {
        return Ok(S::one());
    }
    let mut row_sums = vec![S::zero(); n];
    let mut acc = S::zero();
    let mut prev_gray: u64 = 0;
    for k in 1u64..(1u64 << n) {
        let gray = k ^ (k >> 1);
        let flipped = (gray ^ prev_gray).trailing_zeros() as usize;
        let added = gray >> flipped & 1 == 1;
        for (i, rs) in row_sums.iter_mut().enumerate() {
            let aij = a.get(i, flipped).clone();
            *rs = if added {
                rs.clone() + aij
            } else {
                rs.clone() - aij
            };
        }
        prev_gray = gray;
        let mut prod = S::one();
        for rs in &row_sums {
            if rs.is_zero() {
                prod = S::zero();
                break;
            }
            prod = prod * rs.clone();
        }
        if prod.is_zero() {
            continue;
        }
        // (−1)^{n−|S|}
        if (n as u32 - gray.count_ones()) % 2 == 0 {
            acc = acc + prod;
        } else {
            acc = acc - prod;
        }
    }
    Ok(acc)
}

/// Ryser permanent with the default bound (20).
pub fn per_ryser<S: Scalar>(a: &RMatrix<S>) -> Result<S, PermanentError> {
    per_ryser_bounded(a, DEFAULT_RYSER_BOUND)
}
