//! Search for PSD matrices with negative α-determinant.
//!
//! [`find_witness`] drives the constructive search: pick the smallest frame
//! dimension `m` for which β = 1/α falls outside the complete-monotonicity
//! set, build the spanning rank-one frame, form the Gram matrix of the frame
//! under a weight vector `y`, and scan the diagonal of `det(I - XG)^{-β}` in
//! graded-lex order for the first negative coefficient.  The coefficient at
//! multi-index 𝐧 equals `per_β(G[𝐧]) / 𝐧!`, so a negative hit pins down a PSD
//! dilation `G[𝐧]` whose α-determinant `α^{|𝐧|} · per_β(G[𝐧])` is negative.
//!
//! Every hit is re-verified through an independent box-convolution evaluation
//! of the same series coefficient, and — whenever `|𝐧|` is small enough for
//! direct permutation enumeration — through `per_α` and `det_α` on the dilated
//! matrix itself.

use std::sync::atomic::{AtomicU64, Ordering};

use num_traits::{One, Signed};
use numeric_core::json::GenMatrix;
use numeric_core::{is_psd_exact, rat, NumericError, RMatrix, Rat, Scalar};
use permanent_core::{det_alpha, dilate, per_alpha, Alpha, MultiIndex, DEFAULT_NAIVE_BOUND};
use rand::Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use series_core::{power_coeff_at, scan_first_negative};

use crate::classify::{c_contains, classify_alpha, r_contains};
use crate::frame::{spanning_rank_one_frame, FrameVectors};
use crate::gram::gram_of_frame;
use crate::{trial_rng, Field, WitnessError};

/// A fully verified witness: a PSD matrix whose α-determinant is negative.
#[derive(Clone, Debug)]
pub struct Witness {
    /// The α that the witness refutes membership for.
    pub alpha: Rat,
    /// Ground field of the construction.
    pub field: Field,
    /// Frame dimension: the ambient space is `F^m`.
    pub m: usize,
    /// β = 1/α, the exponent of the scanned power series.
    pub beta: Rat,
    /// The spanning rank-one frame vectors.
    pub frame: FrameVectors,
    /// Positive weights applied to the frame when forming `A = Σ yᵢ vᵢ vᵢ*`.
    pub y: Vec<Rat>,
    /// The Gram matrix `G = V* A⁻¹ V` (PSD, verified exactly).
    pub gram: GenMatrix,
    /// Multi-index 𝐧 of the first negative series coefficient.
    pub multi_index: MultiIndex,
    /// The dilation `G[𝐧]` — PSD with negative α-determinant.
    pub dilated: GenMatrix,
    /// Series coefficient at 𝐧, equal to `per_β(G[𝐧]) / 𝐧!`.
    pub series_coefficient: Rat,
    /// `det_α(G[𝐧]) = α^{|𝐧|} · per_β(G[𝐧])`; negative by construction.
    pub det_alpha_value: Rat,
    /// Whether `|𝐧|` was small enough to re-verify by direct permutation
    /// enumeration on the dilated matrix (in addition to the series paths).
    pub naive_verified: bool,
    /// Which weight attempt produced the witness (0 = initial weights).
    pub attempt: u64,
}

/// Outcome of an exhausted search: no negative coefficient up to the budget.
#[derive(Clone, Debug)]
pub struct ExhaustionReport {
    /// The α that was searched.
    pub alpha: Rat,
    /// Ground field of the construction.
    pub field: Field,
    /// β = 1/α.
    pub beta: Rat,
    /// Frame dimension used for every attempt.
    pub m: usize,
    /// Total-degree budget of the series scan.
    pub max_degree: u32,
    /// Number of weight vectors tried (retries + 1).
    pub attempts: u64,
    /// RNG seed for the retry weights.
    pub seed: u64,
    /// Total nonzero coefficients inspected across all attempts.
    pub coefficients_scanned: u64,
}

/// Result of [`find_witness`]: either a verified witness or an exhaustion
/// report stating exactly how much was searched.
#[derive(Clone, Debug)]
pub enum SearchOutcome {
    /// A verified witness was found.
    Found(Box<Witness>),
    /// The degree budget was exhausted on every attempt.
    Exhausted(ExhaustionReport),
}

/// What a single weight attempt produced, with the Gram enum already erased.
enum AttemptOutcome {
    Hit {
        index: MultiIndex,
        series_coefficient: Rat,
        det_alpha_value: Rat,
        dilated: GenMatrix,
        naive_verified: bool,
    },
    Miss {
        coefficients: u64,
    },
}

/// Smallest `m ≥ 1` with β outside `R(m)` (real) resp. `C(m)` (complex).
///
/// Terminates for every β reachable from a non-member α in the admissible
/// range, because the sets eventually demand `β ≥ m - 1` (resp. `2β ≥ m - 1`).
fn minimal_m(beta: &Rat, field: Field) -> Result<u64, WitnessError> {
    let mut m = 1u64;
    loop {
        let contained = match field {
            Field::Real => r_contains(m, beta)?,
            Field::Complex => c_contains(m, beta)?,
        };
        if !contained {
            return Ok(m);
        }
        m += 1;
    }
}

/// Scan one Gram matrix for a negative coefficient and verify any hit.
///
/// `wrap` lifts the typed dilation back into [`GenMatrix`] so the caller can
/// stay generic over the ground field.
fn scan_gram<S: Scalar>(
    g: &RMatrix<S>,
    wrap: fn(RMatrix<S>) -> GenMatrix,
    alpha: &Rat,
    beta: &Rat,
    max_degree: u32,
) -> Result<AttemptOutcome, WitnessError> {
    let scan = scan_first_negative(g, beta, max_degree)?;
    let Some((index, coeff)) = scan.first_negative else {
        return Ok(AttemptOutcome::Miss {
            coefficients: scan.nonzero_coeffs,
        });
    };

    // Independent verification #1: recompute the same coefficient by boxed
    // convolution of the truncated series (a disjoint code path).
    let boxed = power_coeff_at(g, beta, &index)?;
    if boxed != coeff {
        return Err(WitnessError::VerificationMismatch {
            path: "box-convolution",
            series: coeff,
            other: boxed,
        });
    }

    // The Gram matrix and its dilation must both be PSD, checked exactly.
    if !is_psd_exact(g)? {
        return Err(WitnessError::GramNotPsd);
    }
    let dilated = dilate(g, &index)?;
    if !is_psd_exact(&dilated)? {
        return Err(WitnessError::GramNotPsd);
    }

    let total = index.total() as usize;
    let per_beta = coeff.clone() * Rat::from_integer(index.factorial());
    let det_alpha_value = num_traits::pow(alpha.clone(), total) * per_beta.clone();

    // Independent verification #2: when the dilation is small enough, compare
    // against direct permutation enumeration of per_β and det_α.
    let naive_verified = total <= DEFAULT_NAIVE_BOUND;
    if naive_verified {
        let per_direct = per_alpha(&dilated, &Alpha::new(beta.clone()))?
            .to_rat()
            .ok_or(NumericError::NonRealValue)?;
        if per_direct != per_beta {
            return Err(WitnessError::VerificationMismatch {
                path: "naive per_beta",
                series: per_beta,
                other: per_direct,
            });
        }
        let det_direct = det_alpha(&dilated, &Alpha::new(alpha.clone()))?
            .to_rat()
            .ok_or(NumericError::NonRealValue)?;
        if det_direct != det_alpha_value {
            return Err(WitnessError::VerificationMismatch {
                path: "naive det_alpha",
                series: det_alpha_value,
                other: det_direct,
            });
        }
    }

    Ok(AttemptOutcome::Hit {
        index,
        series_coefficient: coeff,
        det_alpha_value,
        dilated: wrap(dilated),
        naive_verified,
    })
}

/// Search for a PSD matrix with negative α-determinant.
///
/// Preconditions: α must lie in the conjectured-membership gap — positive,
/// at most 2 (real) resp. 1 (complex) — and must not actually belong to the
/// nonnegativity set for the chosen field.  `max_degree` bounds the total
/// degree of the series scan; `y0` optionally fixes the first weight vector
/// (default all-ones); `retries` adds that many random weight attempts drawn
/// deterministically from `seed`.
///
/// Attempts are independent, so they run in parallel when the `parallel`
/// feature is enabled; the outcome is identical either way because the
/// lowest-numbered successful attempt always wins.
pub fn find_witness(
    alpha: &Rat,
    field: Field,
    max_degree: u32,
    y0: Option<Vec<Rat>>,
    retries: u64,
    seed: u64,
) -> Result<SearchOutcome, WitnessError> {
    if max_degree == 0 {
        return Err(WitnessError::InvalidDegree);
    }
    let class = classify_alpha(alpha, field);
    if class.member {
        return Err(WitnessError::AlphaIsMember {
            alpha: alpha.clone(),
            field,
        });
    }
    let upper = match field {
        Field::Real => rat(2, 1),
        Field::Complex => rat(1, 1),
    };
    if !alpha.is_positive() || *alpha > upper {
        return Err(WitnessError::AlphaOutOfRange {
            alpha: alpha.clone(),
            field,
        });
    }

    let beta = alpha.recip();
    let m = minimal_m(&beta, field)?;
    let frame = spanning_rank_one_frame(m as usize, field)?;
    let n_frame = frame.len();
    if let Some(y) = &y0 {
        if y.len() != n_frame {
            return Err(WitnessError::LengthMismatch {
                expected: n_frame,
                got: y.len(),
            });
        }
    }

    let attempts = retries + 1;
    let scanned = AtomicU64::new(0);

    let weights_for = |attempt: u64| -> Vec<Rat> {
        if attempt == 0 {
            y0.clone()
                .unwrap_or_else(|| vec![Rat::one(); n_frame])
        } else {
            let mut rng = trial_rng(seed, attempt);
            (0..n_frame)
                .map(|_| rat(rng.gen_range(1..=10), rng.gen_range(1..=6)))
                .collect()
        }
    };

    let run_attempt = |attempt: u64| -> Result<Option<Witness>, WitnessError> {
        let y = weights_for(attempt);
        let gram = gram_of_frame(&frame, &y)?;
        let outcome = match &gram {
            GenMatrix::Real(g) => scan_gram(g, GenMatrix::Real, alpha, &beta, max_degree)?,
            GenMatrix::Complex(g) => scan_gram(g, GenMatrix::Complex, alpha, &beta, max_degree)?,
        };
        match outcome {
            AttemptOutcome::Miss { coefficients } => {
                scanned.fetch_add(coefficients, Ordering::Relaxed);
                Ok(None)
            }
            AttemptOutcome::Hit {
                index,
                series_coefficient,
                det_alpha_value,
                dilated,
                naive_verified,
            } => Ok(Some(Witness {
                alpha: alpha.clone(),
                field,
                m: m as usize,
                beta: beta.clone(),
                frame: frame.clone(),
                y,
                gram,
                multi_index: index,
                dilated,
                series_coefficient,
                det_alpha_value,
                naive_verified,
                attempt,
            })),
        }
    };

    // The lowest attempt index that hits must win so results are independent
    // of scheduling; `find_first` preserves exactly that order under rayon.
    #[cfg(feature = "parallel")]
    let first = (0..attempts)
        .into_par_iter()
        .map(run_attempt)
        .find_first(|r| !matches!(r, Ok(None)));
    #[cfg(not(feature = "parallel"))]
    let first = (0..attempts)
        .map(run_attempt)
        .find(|r| !matches!(r, Ok(None)));

    match first {
        Some(Err(e)) => Err(e),
        Some(Ok(Some(w))) => Ok(SearchOutcome::Found(Box::new(w))),
        // The predicate admits only errors and hits.
        Some(Ok(None)) => unreachable!("find predicate excludes misses"),
        None => Ok(SearchOutcome::Exhausted(ExhaustionReport {
            alpha: alpha.clone(),
            field,
            beta,
            m: m as usize,
            max_degree,
            attempts,
            seed,
            coefficients_scanned: scanned.load(Ordering::SeqCst),
        })),
    }
}
