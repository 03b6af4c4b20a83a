use concavity::{hessian_max_eigenvalue, hessian_nsd_check, jacobi_max_eigenvalue, QuotientSpec};
use num_traits::One;
use numeric_core::{rat, RMatrix, Rat};

fn rv(entries: &[(i64, i64)]) -> Vec<Rat> {
    entries.iter().map(|&(p, q)| rat(p, q)).collect()
}

fn ones(n: usize) -> Vec<Rat> {
    vec![Rat::one(); n]
}

#[test]
fn jacobi_finds_the_top_eigenvalue() {
    // [[2,1],[1,2]] has eigenvalues 1 and 3.
    let top = jacobi_max_eigenvalue(&[vec![2.0, 1.0], vec![1.0, 2.0]]);
    assert!((top - 3.0).abs() < 1e-9);
    // Diagonal matrices come back exactly.
    let top = jacobi_max_eigenvalue(&[vec![-5.0, 0.0], vec![0.0, -1.0]]);
    assert!((top + 1.0).abs() < 1e-12);
}

#[test]
fn convex_control_is_detected_as_positive() {
    // f(x) = x₁² has a Hessian eigenvalue of 2: clearly not NSD.
    let top = hessian_max_eigenvalue(|x| x[0] * x[0], &[1.0, 1.0], 1e-4);
    assert!(top > 1.0);
}

#[test]
fn concave_control_stays_nonpositive() {
    // f(x) = −x₁² − 3x₂²: eigenvalues −2 and −6.
    let top = hessian_max_eigenvalue(
        |x| -x[0] * x[0] - 3.0 * x[1] * x[1],
        &[2.0, 1.0],
        1e-4,
    );
    assert!((top + 2.0).abs() < 1e-4);
}

#[test]
fn bapat_quotient_hessian_is_negative_semidefinite() {
    let fixed = vec![ones(4), rv(&[(1, 1), (2, 1), (3, 1), (4, 1)])];
    let spec = QuotientSpec::bapat(4, fixed, 40, 41).unwrap();
    let report = hessian_nsd_check(&spec, 20, None, 42).unwrap();
    assert_eq!(report.points, 20);
    assert_eq!(report.violations, 0);
    assert!(report.max_eigenvalue <= report.tol);
}

#[test]
fn linear_quotient_hessian_is_flat() {
    let spec = QuotientSpec::bapat(3, vec![ones(3); 3], 40, 43).unwrap();
    let report = hessian_nsd_check(&spec, 10, None, 44).unwrap();
    assert_eq!(report.violations, 0);
    assert!(report.max_eigenvalue.abs() < 1e-6);
}

#[test]
fn mixed_discriminant_hessian_is_negative_semidefinite() {
    let spec =
        QuotientSpec::mixed_discriminant(&[RMatrix::<Rat>::identity(2)], 40, 45).unwrap();
    let report = hessian_nsd_check(&spec, 10, None, 46).unwrap();
    assert_eq!(report.violations, 0);
}

#[test]
fn explicit_tolerance_is_honored() {
    // A generous explicit tolerance reports it back and cannot be beaten
    // by the noise floor.
    let spec = QuotientSpec::bapat(2, vec![ones(2)], 40, 47).unwrap();
    let report = hessian_nsd_check(&spec, 5, Some(1e-3), 48).unwrap();
    assert_eq!(report.tol, 1e-3);
    assert_eq!(report.violations, 0);
}
