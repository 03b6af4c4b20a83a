//! Exact midpoint-concavity scanning over random domain points.

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde_json::{json, Value};

use hyperbolic::{cone_member, sample_box_point};
use numeric_core::json::rat_to_value;
use numeric_core::{rat, rint, Rat};

use crate::quotient::{quotient, QuotientMode, QuotientSpec};
use crate::ConcavityError;

/// Attempts per trial at landing a box sample inside the open cone before
/// the scan gives up.
const REJECTION_BUDGET: u64 = 200;

/// Outcome of a midpoint-concavity scan.
///
/// A trial draws `x, y` from the domain and checks the exact inequality
/// `f((x+y)/2) ≥ (f(x)+f(y))/2`; `worst_margin` is the minimum of the
/// left-hand side minus the right-hand side over all trials, so the scan
/// passes exactly when it is nonnegative (or `None`, for zero trials).
#[derive(Clone, Debug)]
pub struct ScanReport {
    pub trials: u64,
    pub violations: u64,
    pub worst_margin: Option<Rat>,
    pub seed: u64,
    /// The `(x, y)` pairs whose margin came out negative.
    pub witnesses: Vec<(Vec<Rat>, Vec<Rat>)>,
}

/// One independent ChaCha stream per trial, so trial `t` draws the same
/// points no matter how many threads run the scan.
pub(crate) fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut z = seed ^ trial.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^= z >> 31;
    ChaCha8Rng::seed_from_u64(z)
}

/// Draws an exact point from the spec's domain: the positive orthant for
/// the permanent quotient, otherwise rejection-sampled box points around
/// the hyperbolicity direction.
pub(crate) fn sample_domain_point(
    spec: &QuotientSpec,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Rat>, ConcavityError> {
    let n = spec.dimension();
    match spec.mode() {
        QuotientMode::Bapat => Ok((0..n)
            .map(|_| rat(rng.gen_range(1..=100), rng.gen_range(1..=100)))
            .collect()),
        QuotientMode::Hyperbolic | QuotientMode::MixedDiscriminant => {
            for _ in 0..REJECTION_BUDGET {
                let x = sample_box_point(rng, spec.instance().direction());
                if cone_member(spec.instance(), &x)? {
                    return Ok(x);
                }
            }
            Err(ConcavityError::SamplingExhausted { budget: REJECTION_BUDGET })
        }
    }
}

type TrialOutcome = (Rat, Option<(Vec<Rat>, Vec<Rat>)>);

fn run_trial(spec: &QuotientSpec, seed: u64, trial: u64) -> Result<TrialOutcome, ConcavityError> {
    let mut rng = trial_rng(seed, trial);
    let x = sample_domain_point(spec, &mut rng)?;
    let y = sample_domain_point(spec, &mut rng)?;
    let fx = quotient(spec, &x)?;
    let fy = quotient(spec, &y)?;
    // Both domains are convex (orthant, or the Gårding cone), so the
    // midpoint never leaves them.
    let mid: Vec<Rat> = x.iter().zip(&y).map(|(a, b)| (a + b) / rint(2)).collect();
    let fmid = quotient(spec, &mid)?;
    let margin = fmid - (fx + fy) / rint(2);
    let witness = margin.is_negative().then(|| (x, y));
    Ok((margin, witness))
}

/// Checks exact midpoint concavity of the spec's quotient at `samples`
/// random point pairs.
///
/// Every comparison is in rational arithmetic; a reported violation is a
/// counterexample, not a rounding artifact. The per-trial seeding makes the
/// report identical whether or not the scan runs in parallel.
pub fn midpoint_concavity_scan(
    spec: &QuotientSpec,
    samples: u64,
    seed: u64,
) -> Result<ScanReport, ConcavityError> {
    #[cfg(feature = "parallel")]
    let outcomes = (0..samples)
        .into_par_iter()
        .map(|trial| run_trial(spec, seed, trial))
        .collect::<Result<Vec<_>, _>>()?;
    #[cfg(not(feature = "parallel"))]
    let outcomes = (0..samples)
        .map(|trial| run_trial(spec, seed, trial))
        .collect::<Result<Vec<_>, _>>()?;

    let mut violations = 0;
    let mut worst_margin: Option<Rat> = None;
    let mut witnesses = Vec::new();
    for (margin, witness) in outcomes {
        if let Some(pair) = witness {
            violations += 1;
            witnesses.push(pair);
        }
        worst_margin = Some(match worst_margin {
            Some(old) if old <= margin => old,
            _ => margin,
        });
    }
    Ok(ScanReport { trials: samples, violations, worst_margin, seed, witnesses })
}

/// Wire form of a scan report: `trials`, `violations`, `worst_margin`
/// (exact rational, `null` for an empty scan), and `seed`.
pub fn scan_report_to_json(report: &ScanReport) -> Value {
    json!({
        "trials": report.trials,
        "violations": report.violations,
        "worst_margin": report
            .worst_margin
            .as_ref()
            .map(rat_to_value)
            .unwrap_or(Value::Null),
        "seed": report.seed,
    })
}
