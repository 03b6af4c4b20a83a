//! Shared helpers for the numeric-core integration tests: seeded random
//! exact scalars/matrices and an independent cofactor-expansion determinant
//! oracle.

use num::BigInt;
use num_traits::{One, Zero};
use numeric_core::{CRat, RMatrix, Rat, Scalar};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rand_rat(rng: &mut impl Rng) -> Rat {
    Rat::new(
        BigInt::from(rng.gen_range(-20i64..=20)),
        BigInt::from(rng.gen_range(1i64..=10)),
    )
}

pub fn rand_crat(rng: &mut impl Rng) -> CRat {
    CRat::new(rand_rat(rng), rand_rat(rng))
}

pub fn rand_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> RMatrix<Rat> {
    let entries = (0..rows * cols).map(|_| rand_rat(rng)).collect();
    RMatrix::new(rows, cols, entries).unwrap()
}

pub fn rand_cmatrix(rng: &mut impl Rng, rows: usize, cols: usize) -> RMatrix<CRat> {
    let entries = (0..rows * cols).map(|_| rand_crat(rng)).collect();
    RMatrix::new(rows, cols, entries).unwrap()
}

/// Brute-force determinant by cofactor expansion along the first row —
/// an independent O(n!) oracle for the Bareiss implementation.
pub fn det_cofactor<S: Scalar>(a: &RMatrix<S>) -> S {
    let n = a.rows();
    assert_eq!(n, a.cols());
    if n == 0 {
        return S::one();
    }
    if n == 1 {
        return a.get(0, 0).clone();
    }
    let mut acc = S::zero();
    for j in 0..n {
        if a.get(0, j).is_zero() {
            continue;
        }
        let minor_rows: Vec<Vec<S>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(|c| a.get(i, c).clone())
                    .collect()
            })
            .collect();
        let minor = RMatrix::from_rows(minor_rows).unwrap();
        let term = a.get(0, j).clone() * det_cofactor(&minor);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}
