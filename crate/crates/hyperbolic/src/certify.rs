//! Sturm-exact hyperbolicity certification and cone membership.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use numeric_core::{sturm_real_rooted, sturm_roots_all_negative, Rat, UniPoly};
use series_core::SparsePoly;

use crate::polarize::{degree_of, directional_derivative};
use crate::HyperbolicError;

/// Default number of random lines checked by [`certify_hyperbolic`].
pub const DEFAULT_TRIALS: u64 = 200;

/// Record of a completed certification run: how many random lines were
/// checked for real-rootedness, and under which seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub trials: u64,
    pub seed: u64,
}

/// A polynomial together with a direction it has been certified hyperbolic
/// against.
///
/// Instances are only obtainable from [`certify_hyperbolic`], so holding one
/// is proof that `h` is homogeneous, `h(e) ≠ 0`, and every sampled
/// restriction `h(x + te)` was real-rooted.  Cone queries are exact given
/// hyperbolicity; the sampling is the only probabilistic ingredient.
#[derive(Clone, Debug)]
pub struct HyperbolicInstance {
    h: SparsePoly<Rat>,
    e: Vec<Rat>,
    degree: u32,
    cert: Certificate,
}

impl HyperbolicInstance {
    pub fn h(&self) -> &SparsePoly<Rat> {
        &self.h
    }

    pub fn direction(&self) -> &[Rat] {
        &self.e
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn certificate(&self) -> &Certificate {
        &self.cert
    }
}

/// Certifies that `h` is hyperbolic with respect to `e` by checking
/// real-rootedness of `h(x + te)` along `trials` random rational points `x`,
/// each decided exactly by a Sturm chain.
///
/// Fails fast: the first non-real-rooted restriction aborts the run and the
/// offending point is returned inside [`HyperbolicError::NotRealRooted`] as
/// an exact counterexample.  A passing run yields the certified instance.
pub fn certify_hyperbolic(
    h: &SparsePoly<Rat>,
    e: &[Rat],
    trials: u64,
    seed: u64,
) -> Result<HyperbolicInstance, HyperbolicError> {
    if e.len() != h.nvars() {
        return Err(HyperbolicError::LengthMismatch { expected: h.nvars(), got: e.len() });
    }
    if h.is_zero() || h.eval(e)?.is_zero() {
        return Err(HyperbolicError::VanishesAtDirection);
    }
    let degree = degree_of(h)?;

    let check_line = |trial: u64| -> Result<Option<Vec<Rat>>, HyperbolicError> {
        let mut rng = trial_rng(seed, trial);
        let x = sample_rat_vec(&mut rng, h.nvars());
        let p = UniPoly::new(h.restrict_line(&x, e)?);
        if sturm_real_rooted(&p)? {
            Ok(None)
        } else {
            Ok(Some(x))
        }
    };

    #[cfg(feature = "parallel")]
    let first_failure = {
        use rayon::prelude::*;
        (0..trials)
            .into_par_iter()
            .map(check_line)
            .find_first(|r| !matches!(r, Ok(None)))
    };
    #[cfg(not(feature = "parallel"))]
    let first_failure = (0..trials).map(check_line).find(|r| !matches!(r, Ok(None)));

    match first_failure {
        None => Ok(HyperbolicInstance {
            h: h.clone(),
            e: e.to_vec(),
            degree,
            cert: Certificate { trials, seed },
        }),
        Some(Ok(Some(x))) => Err(HyperbolicError::NotRealRooted { x }),
        Some(Err(err)) => Err(err),
        Some(Ok(None)) => unreachable!("filtered by the failure predicate"),
    }
}

/// Exact membership of `x` in the open hyperbolicity cone `Λ₊₊`.
///
/// The roots of `p(t) = h(x + te)` are `−λ₁(x), …, −λ_d(x)`, so
/// `λ₁(x) > 0` exactly when all roots of `p` are negative — decided by a
/// Sturm count.  Boundary points (`λ₁ = 0`) are non-members: the cone is
/// open.
pub fn cone_member(inst: &HyperbolicInstance, x: &[Rat]) -> Result<bool, HyperbolicError> {
    if x.len() != inst.h.nvars() {
        return Err(HyperbolicError::LengthMismatch { expected: inst.h.nvars(), got: x.len() });
    }
    let p = UniPoly::new(inst.h.restrict_line(x, &inst.e)?);
    Ok(sturm_roots_all_negative(&p)?)
}

/// Outcome of [`garding_lemma_test`]: evidence that the directional
/// derivative `D_v h` is hyperbolic and that its cone contains `Λ₊₊(h)`.
#[derive(Clone, Debug)]
pub struct GardingReport {
    /// The derivative polynomial `D_v h` that was put under test.
    pub derivative: SparsePoly<Rat>,
    /// Exact line on which `D_v h` failed real-rootedness, if any.
    pub hyperbolicity_witness: Option<Vec<Rat>>,
    /// Points of `Λ₊₊(h)` that fell outside the cone of `D_v h` (the lemma
    /// says there are none).
    pub cone_failures: Vec<Vec<Rat>>,
    /// How many sampled points landed in `Λ₊₊(h)` and were therefore tested.
    pub points_tested: u64,
    pub trials: u64,
    pub seed: u64,
    pub passed: bool,
}

/// Tests the derivative-relaxation lemma: for `v ∈ Λ₊₊`, the polynomial
/// `D_v h` is hyperbolic in the same direction and its cone contains `Λ₊₊`.
///
/// Certifies `D_v h` by sampling (recording a counterexample line instead of
/// erroring, so a corrupted input produces a failing report), then draws
/// points from `Λ₊₊(h)` by box rejection around `e` and checks each against
/// the derivative's cone.  `v` itself must be a cone member.
pub fn garding_lemma_test(
    inst: &HyperbolicInstance,
    v: &[Rat],
    trials: u64,
    seed: u64,
) -> Result<GardingReport, HyperbolicError> {
    if !cone_member(inst, v)? {
        return Err(HyperbolicError::OutsideCone { x: v.to_vec() });
    }
    let derivative = directional_derivative(&inst.h, v)?;
    let derived = match certify_hyperbolic(&derivative, &inst.e, trials, seed) {
        Ok(d) => d,
        Err(HyperbolicError::NotRealRooted { x }) => {
            return Ok(GardingReport {
                derivative,
                hyperbolicity_witness: Some(x),
                cone_failures: Vec::new(),
                points_tested: 0,
                trials,
                seed,
                passed: false,
            });
        }
        Err(err) => return Err(err),
    };

    // Fresh stream for the cone stage so it is independent of the lines the
    // certification stage consumed.
    let mut cone_failures = Vec::new();
    let mut points_tested = 0;
    for trial in 0..trials {
        let mut rng = trial_rng(seed ^ CONE_STAGE_SALT, trial);
        let x = sample_box_point(&mut rng, &inst.e);
        if !cone_member(inst, &x)? {
            continue; // rejection: outside Λ₊₊(h)
        }
        points_tested += 1;
        if !cone_member(&derived, &x)? {
            cone_failures.push(x);
        }
    }

    let passed = cone_failures.is_empty() && points_tested > 0;
    Ok(GardingReport {
        derivative,
        hyperbolicity_witness: None,
        cone_failures,
        points_tested,
        trials,
        seed,
        passed,
    })
}

const CONE_STAGE_SALT: u64 = 0x636F6E65; // "cone"

/// Deterministic per-trial RNG stream: a SplitMix64 step decorrelates
/// consecutive trial indices so trials can run in any order (or in parallel)
/// with identical results.
fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut z = seed ^ trial.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    ChaCha8Rng::seed_from_u64(z ^ (z >> 31))
}

/// A random rational with numerator in `[−100, 100]` and denominator in
/// `[1, 100]`.
fn sample_rat(rng: &mut impl Rng) -> Rat {
    let p: i64 = rng.gen_range(-100..=100);
    let q: i64 = rng.gen_range(1..=100);
    Rat::new(p.into(), q.into())
}

fn sample_rat_vec(rng: &mut impl Rng, n: usize) -> Vec<Rat> {
    (0..n).map(|_| sample_rat(rng)).collect()
}

/// A random point in the open box `e + (−1/2, 1/2)ⁿ`, the proposal
/// distribution for rejection-sampling the cone around its certified
/// interior point `e`.
pub fn sample_box_point(rng: &mut impl Rng, e: &[Rat]) -> Vec<Rat> {
    e.iter()
        .map(|ei| {
            let p: i64 = rng.gen_range(-100..=100);
            let q: i64 = rng.gen_range(201..=400);
            ei + Rat::new(p.into(), q.into())
        })
        .collect()
}
