//! Exact nonnegativity scanning for member α.
//!
//! For α inside the answer set the α-determinant is nonnegative on every PSD
//! matrix.  [`nonnegativity_scan`] stress-tests that claim: it samples random
//! PSD matrices — both directly as `V*V` Gram products and as dilations of
//! smaller Gram products — evaluates `det_α` exactly, and counts violations.
//! A member α must always report zero.

use num_traits::Signed;
use numeric_core::{rat, CRat, RMatrix, Rat, Scalar};
use permanent_core::{det_alpha_bounded, dilate, Alpha, MultiIndex};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::classify::classify_alpha;
use crate::{trial_rng, Field, WitnessError};

/// Tally of an exact nonnegativity scan over random PSD matrices.
#[derive(Clone, Debug)]
pub struct NonnegReport {
    /// The member α that was scanned.
    pub alpha: Rat,
    /// Ground field of the sampled matrices.
    pub field: Field,
    /// Number of PSD matrices evaluated.
    pub samples: u64,
    /// How many had `det_α < 0` (must be 0 for a member α).
    pub violations: u64,
    /// Smallest α-determinant value seen, `None` when `samples == 0`.
    pub min_value: Option<Rat>,
    /// Seed the samples were drawn from.
    pub seed: u64,
}

/// Random rational in `[-5, 5]` with denominator in `[1, 4]`.
fn sample_entry(rng: &mut ChaCha8Rng) -> Rat {
    rat(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

/// Random `n×n` PSD Gram product `V*V` with `V` of shape `k×n`, `k ≤ n+1`.
fn random_gram_real(rng: &mut ChaCha8Rng, n: usize) -> Result<RMatrix<Rat>, WitnessError> {
    let k = rng.gen_range(1..=n + 1);
    let mut v = RMatrix::<Rat>::zero(k, n);
    for i in 0..k {
        for j in 0..n {
            v.set(i, j, sample_entry(rng));
        }
    }
    Ok(v.conj_transpose().mul(&v)?.into_symmetric()?)
}

/// Complex counterpart of [`random_gram_real`].
fn random_gram_complex(rng: &mut ChaCha8Rng, n: usize) -> Result<RMatrix<CRat>, WitnessError> {
    let k = rng.gen_range(1..=n + 1);
    let mut v = RMatrix::<CRat>::zero(k, n);
    for i in 0..k {
        for j in 0..n {
            let re = sample_entry(rng);
            let im = sample_entry(rng);
            v.set(i, j, CRat { re, im });
        }
    }
    Ok(v.conj_transpose().mul(&v)?.into_hermitian()?)
}

/// Random dilation multi-index for a base of size `b`, keeping the dilated
/// size at most `max_size`.
fn random_parts(rng: &mut ChaCha8Rng, b: usize, max_size: usize) -> MultiIndex {
    let cap = (max_size / b).max(1);
    let parts: Vec<u32> = (0..b).map(|_| rng.gen_range(1..=cap) as u32).collect();
    MultiIndex::from_slice(&parts)
}

/// Evaluate `det_α` of one random PSD sample, exactly.
///
/// Each trial flips between a direct Gram product of size up to `max_size`
/// and a dilation of a smaller Gram product — dilations preserve positive
/// semidefiniteness, and they are exactly the matrices where the permanental
/// series lives, so they deserve equal coverage.
fn sample_value(
    alpha: &Alpha,
    field: Field,
    max_size: usize,
    seed: u64,
    trial: u64,
) -> Result<Rat, WitnessError> {
    let mut rng = trial_rng(seed, trial);
    let direct: bool = rng.gen();
    let value = if direct {
        let n = rng.gen_range(1..=max_size);
        match field {
            Field::Real => {
                let g = random_gram_real(&mut rng, n)?;
                det_alpha_bounded(&g, alpha, max_size)?
                    .to_rat()
                    .expect("real det_alpha is rational")
            }
            Field::Complex => {
                let g = random_gram_complex(&mut rng, n)?;
                det_alpha_bounded(&g, alpha, max_size)?
                    .to_rat()
                    .ok_or(numeric_core::NumericError::NonRealValue)?
            }
        }
    } else {
        let b = rng.gen_range(1..=(max_size / 2).max(1));
        let parts = random_parts(&mut rng, b, max_size);
        match field {
            Field::Real => {
                let g = random_gram_real(&mut rng, b)?;
                let d = dilate(&g, &parts)?;
                det_alpha_bounded(&d, alpha, max_size)?
                    .to_rat()
                    .expect("real det_alpha is rational")
            }
            Field::Complex => {
                let g = random_gram_complex(&mut rng, b)?;
                let d = dilate(&g, &parts)?;
                det_alpha_bounded(&d, alpha, max_size)?
                    .to_rat()
                    .ok_or(numeric_core::NumericError::NonRealValue)?
            }
        }
    };
    Ok(value)
}

/// Exact nonnegativity scan of `det_α` over random PSD matrices.
///
/// Preconditions: α must be a member of the answer set for `field` (use
/// [`find_witness`](crate::find_witness) for non-members instead), and
/// `max_size ≥ 1` bounds the sampled matrix sizes.  Identical inputs produce
/// identical reports regardless of thread count.
pub fn nonnegativity_scan(
    alpha: &Rat,
    field: Field,
    max_size: usize,
    samples: u64,
    seed: u64,
) -> Result<NonnegReport, WitnessError> {
    let class = classify_alpha(alpha, field);
    if !class.member {
        return Err(WitnessError::AlphaNotMember {
            alpha: alpha.clone(),
            field,
        });
    }
    if max_size == 0 {
        return Err(WitnessError::InvalidSize);
    }

    let alpha_s = Alpha::new(alpha.clone());
    let run = |trial: u64| sample_value(&alpha_s, field, max_size, seed, trial);

    #[cfg(feature = "parallel")]
    let values: Vec<Rat> = (0..samples)
        .into_par_iter()
        .map(run)
        .collect::<Result<_, _>>()?;
    #[cfg(not(feature = "parallel"))]
    let values: Vec<Rat> = (0..samples).map(run).collect::<Result<_, _>>()?;

    let mut violations = 0u64;
    let mut min_value: Option<Rat> = None;
    for v in values {
        if v.is_negative() {
            violations += 1;
        }
        min_value = Some(match min_value {
            Some(cur) if cur <= v => cur,
            _ => v,
        });
    }

    Ok(NonnegReport {
        alpha: alpha.clone(),
        field,
        samples,
        violations,
        min_value,
        seed,
    })
}
