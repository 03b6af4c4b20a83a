//! Float-precision Hessian spot checks.
//!
//! This is the crate's auxiliary numerical path: a concave function has a
//! negative semidefinite Hessian, so a clearly positive eigenvalue of a
//! central-difference Hessian flags trouble fast. Verdicts that matter come
//! from the exact midpoint scan; this module only corroborates it.

use num_traits::ToPrimitive;

use numeric_core::Rat;

use crate::quotient::{quotient_polys_at, QuotientSpec};
use crate::scan::{sample_domain_point, trial_rng};
use crate::ConcavityError;

/// Relative step for central differences.
const H_REL: f64 = 1e-4;

/// Default eigenvalue tolerance, scaled by the Hessian's magnitude.
const TOL_REL: f64 = 1e-6;

/// Outcome of a Hessian negative-semidefiniteness check.
#[derive(Clone, Debug)]
pub struct HessianReport {
    pub points: u64,
    pub violations: u64,
    /// Largest Hessian eigenvalue seen across all points (`NaN` if any
    /// probe failed to evaluate).
    pub max_eigenvalue: f64,
    /// Largest tolerance actually applied.
    pub tol: f64,
    pub seed: u64,
}

/// Estimates the Hessian of `f` at `x` by central differences with relative
/// step `h_rel` and returns its largest eigenvalue.
pub fn hessian_max_eigenvalue(f: impl Fn(&[f64]) -> f64, x: &[f64], h_rel: f64) -> f64 {
    jacobi_max_eigenvalue(&hessian_matrix(&f, x, h_rel))
}

fn hessian_matrix(f: &impl Fn(&[f64]) -> f64, x: &[f64], h_rel: f64) -> Vec<Vec<f64>> {
    let n = x.len();
    let h: Vec<f64> = x.iter().map(|&xi| h_rel * xi.abs().max(1.0)).collect();
    let mut m = vec![vec![0.0; n]; n];
    let fx = f(x);
    let at = |steps: &[(usize, f64)]| {
        let mut p = x.to_vec();
        for &(i, s) in steps {
            p[i] += s * h[i];
        }
        f(&p)
    };
    for i in 0..n {
        m[i][i] = (at(&[(i, 1.0)]) - 2.0 * fx + at(&[(i, -1.0)])) / (h[i] * h[i]);
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let v = (at(&[(i, 1.0), (j, 1.0)]) - at(&[(i, 1.0), (j, -1.0)])
                - at(&[(i, -1.0), (j, 1.0)])
                + at(&[(i, -1.0), (j, -1.0)]))
                / (4.0 * h[i] * h[j]);
            m[i][j] = v;
            m[j][i] = v;
        }
    }
    m
}

/// Largest eigenvalue of a small symmetric matrix by cyclic Jacobi
/// rotations.
pub fn jacobi_max_eigenvalue(matrix: &[Vec<f64>]) -> f64 {
    let n = matrix.len();
    if n == 0 {
        return 0.0;
    }
    let mut a: Vec<Vec<f64>> = matrix.to_vec();
    for _ in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
            .map(|(p, q)| a[p][q] * a[p][q])
            .sum();
        if !(off > 1e-24) {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).fold(f64::NEG_INFINITY, f64::max)
}

/// Spot-checks that the spec's quotient has a negative semidefinite Hessian
/// at `points` random domain points.
///
/// Each probe evaluates the quotient exactly at the float coordinates
/// (every `f64` is a rational), then differences in `f64`. With `tol`
/// unset, each point tolerates eigenvalues up to `1e-6` times the local
/// scale — the larger of 1, the function value, and the biggest Hessian
/// entry — since the quotient is homogeneous of degree one and its exact
/// top eigenvalue sits at zero along the ray direction. A probe that fails
/// to evaluate counts as a violation rather than passing silently.
pub fn hessian_nsd_check(
    spec: &QuotientSpec,
    points: u64,
    tol: Option<f64>,
    seed: u64,
) -> Result<HessianReport, ConcavityError> {
    let f = |p: &[f64]| -> f64 {
        let xr: Option<Vec<Rat>> = p.iter().map(|&v| Rat::from_float(v)).collect();
        let Some(xr) = xr else { return f64::NAN };
        match quotient_polys_at(spec, &xr) {
            Ok(v) => v.to_f64().unwrap_or(f64::NAN),
            Err(_) => f64::NAN,
        }
    };
    let mut violations = 0;
    let mut max_eigenvalue = f64::NEG_INFINITY;
    let mut applied_tol: f64 = 0.0;
    for trial in 0..points {
        let mut rng = trial_rng(seed, trial);
        let x = sample_domain_point(spec, &mut rng)?;
        let xf: Vec<f64> = x.iter().map(|v| v.to_f64().unwrap_or(f64::NAN)).collect();
        let hess = hessian_matrix(&f, &xf, H_REL);
        let scale = hess
            .iter()
            .flatten()
            .map(|v| v.abs())
            .fold(f64::max(1.0, f(&xf).abs()), f64::max);
        let tol_point = tol.unwrap_or(TOL_REL * scale);
        let lam = jacobi_max_eigenvalue(&hess);
        // `NaN` fails the comparison and is counted as a violation.
        if !(lam <= tol_point) {
            violations += 1;
        }
        if !(lam <= max_eigenvalue) {
            max_eigenvalue = lam;
        }
        applied_tol = applied_tol.max(tol_point);
    }
    if points == 0 {
        max_eigenvalue = 0.0;
    }
    Ok(HessianReport { points, violations, max_eigenvalue, tol: applied_tol, seed })
}
