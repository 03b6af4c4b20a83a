//! Hyperbolicity certification, cone membership, and the derivative lemma.

use num_traits::{One, Zero};
use numeric_core::{rat, rint, sturm_real_rooted, Rat, UniPoly};
use permanent_core::MultiIndex;
use series_core::SparsePoly;

use hyperbolic::{
    certify_hyperbolic, cone_member, garding_lemma_test, HyperbolicError, DEFAULT_TRIALS,
};

fn product_poly(n: usize) -> SparsePoly<Rat> {
    SparsePoly::from_terms(n, [(MultiIndex::ones(n), Rat::one())]).unwrap()
}

fn lorentz_poly(n: usize) -> SparsePoly<Rat> {
    let terms = (0..n).map(|i| {
        let mut e = vec![0u32; n];
        e[i] = 2;
        (MultiIndex::new(e), if i == 0 { rint(1) } else { rint(-1) })
    });
    SparsePoly::from_terms(n, terms).unwrap()
}

fn rv(xs: &[(i64, i64)]) -> Vec<Rat> {
    xs.iter().map(|&(p, q)| rat(p, q)).collect()
}

fn ones(n: usize) -> Vec<Rat> {
    vec![Rat::one(); n]
}

fn lorentz_dir(n: usize) -> Vec<Rat> {
    let mut e = vec![Rat::zero(); n];
    e[0] = Rat::one();
    e
}

#[test]
fn product_form_is_hyperbolic_in_any_positive_direction() {
    let inst = certify_hyperbolic(&product_poly(3), &ones(3), DEFAULT_TRIALS, 7).unwrap();
    assert_eq!(inst.degree(), 3);
    assert_eq!(inst.certificate().trials, DEFAULT_TRIALS);
    assert_eq!(inst.certificate().seed, 7);
}

#[test]
fn lorentz_form_is_hyperbolic_in_the_time_direction() {
    let inst = certify_hyperbolic(&lorentz_poly(3), &lorentz_dir(3), DEFAULT_TRIALS, 7).unwrap();
    assert_eq!(inst.degree(), 2);
}

#[test]
fn sum_of_squares_fails_with_a_verifiable_witness() {
    // x₁² + x₂² restricted along e = (1,0) is (x₁+t)² + x₂²: never
    // real-rooted once x₂ ≠ 0.
    let h = SparsePoly::from_terms(
        2,
        [
            (MultiIndex::new(vec![2, 0]), Rat::one()),
            (MultiIndex::new(vec![0, 2]), Rat::one()),
        ],
    )
    .unwrap();
    let e = rv(&[(1, 1), (0, 1)]);
    let err = certify_hyperbolic(&h, &e, DEFAULT_TRIALS, 11).unwrap_err();
    let HyperbolicError::NotRealRooted { x } = err else {
        panic!("expected a counterexample line");
    };
    // Reconfirm the witness independently of the certifier.
    let p = UniPoly::new(h.restrict_line(&x, &e).unwrap());
    assert!(!sturm_real_rooted(&p).unwrap());
}

#[test]
fn same_seed_reproduces_the_same_counterexample() {
    let h = SparsePoly::from_terms(
        2,
        [
            (MultiIndex::new(vec![2, 0]), Rat::one()),
            (MultiIndex::new(vec![0, 2]), Rat::one()),
        ],
    )
    .unwrap();
    let e = rv(&[(1, 1), (0, 1)]);
    let first = certify_hyperbolic(&h, &e, 50, 3).unwrap_err();
    let second = certify_hyperbolic(&h, &e, 50, 3).unwrap_err();
    let (HyperbolicError::NotRealRooted { x: a }, HyperbolicError::NotRealRooted { x: b }) =
        (first, second)
    else {
        panic!("expected counterexamples from both runs");
    };
    assert_eq!(a, b);
}

#[test]
fn vanishing_at_the_direction_is_rejected() {
    let err = certify_hyperbolic(&product_poly(2), &rv(&[(1, 1), (0, 1)]), 10, 0).unwrap_err();
    assert!(matches!(err, HyperbolicError::VanishesAtDirection));
}

#[test]
fn inhomogeneous_polynomials_are_rejected() {
    let mut h = product_poly(2);
    h.add_term(MultiIndex::new(vec![1, 0]), Rat::one());
    let err = certify_hyperbolic(&h, &ones(2), 10, 0).unwrap_err();
    assert!(matches!(err, HyperbolicError::NotHomogeneous));
}

#[test]
fn product_cone_is_the_open_positive_orthant() {
    let inst = certify_hyperbolic(&product_poly(3), &ones(3), 50, 1).unwrap();
    assert!(cone_member(&inst, &rv(&[(1, 1), (2, 1), (3, 5)])).unwrap());
    assert!(!cone_member(&inst, &rv(&[(1, 1), (-1, 2), (3, 1)])).unwrap());
    // Boundary (λ₁ = 0) is excluded: the cone is open.
    assert!(!cone_member(&inst, &rv(&[(0, 1), (1, 1), (1, 1)])).unwrap());
}

#[test]
fn lorentz_cone_matches_its_closed_form() {
    // x ∈ Λ₊₊ ⟺ x₁ > 0 and x₁² − x₂² − x₃² > 0, checked on a grid of
    // rational points on both sides of the boundary.
    let h = lorentz_poly(3);
    let inst = certify_hyperbolic(&h, &lorentz_dir(3), 50, 1).unwrap();
    let points = [
        rv(&[(5, 1), (3, 1), (3, 1)]),
        rv(&[(5, 4), (3, 4), (3, 4)]),
        rv(&[(1, 1), (2, 1), (0, 1)]),
        rv(&[(-5, 1), (3, 1), (3, 1)]),
        rv(&[(5, 1), (4, 1), (3, 1)]),
        rv(&[(13, 12), (1, 2), (3, 4)]),
        rv(&[(0, 1), (0, 1), (0, 1)]),
    ];
    for x in points {
        let closed_form = x[0] > Rat::zero() && h.eval(&x).unwrap() > Rat::zero();
        assert_eq!(cone_member(&inst, &x).unwrap(), closed_form, "at x = {x:?}");
    }
}

#[test]
fn the_direction_belongs_to_its_own_cone() {
    for (h, e) in [(product_poly(4), ones(4)), (lorentz_poly(4), lorentz_dir(4))] {
        let inst = certify_hyperbolic(&h, &e, 50, 2).unwrap();
        assert!(cone_member(&inst, &e).unwrap());
    }
}

#[test]
fn cone_query_length_mismatch_is_rejected() {
    let inst = certify_hyperbolic(&product_poly(3), &ones(3), 10, 0).unwrap();
    let err = cone_member(&inst, &ones(2)).unwrap_err();
    assert!(matches!(err, HyperbolicError::LengthMismatch { expected: 3, got: 2 }));
}

#[test]
fn derivative_lemma_on_the_product_form() {
    // D_𝟏(x₁x₂x₃) = x₁x₂ + x₁x₃ + x₂x₃, hyperbolic with a cone containing
    // the positive orthant.
    let inst = certify_hyperbolic(&product_poly(3), &ones(3), 100, 5).unwrap();
    let report = garding_lemma_test(&inst, &ones(3), 100, 5).unwrap();
    assert!(report.passed);
    assert!(report.hyperbolicity_witness.is_none());
    assert!(report.cone_failures.is_empty());
    assert!(report.points_tested > 0);

    let e2 = SparsePoly::from_terms(
        3,
        [
            (MultiIndex::new(vec![1, 1, 0]), Rat::one()),
            (MultiIndex::new(vec![1, 0, 1]), Rat::one()),
            (MultiIndex::new(vec![0, 1, 1]), Rat::one()),
        ],
    )
    .unwrap();
    assert_eq!(report.derivative, e2);
}

#[test]
fn derivative_lemma_on_the_lorentz_form() {
    let inst = certify_hyperbolic(&lorentz_poly(3), &lorentz_dir(3), 100, 5).unwrap();
    let report = garding_lemma_test(&inst, &lorentz_dir(3), 100, 5).unwrap();
    assert!(report.passed);
    let two_x1 = SparsePoly::from_terms(3, [(MultiIndex::new(vec![1, 0, 0]), rint(2))]).unwrap();
    assert_eq!(report.derivative, two_x1);
}

#[test]
fn derivative_lemma_requires_a_cone_direction() {
    let inst = certify_hyperbolic(&product_poly(3), &ones(3), 50, 5).unwrap();
    let v = rv(&[(-1, 1), (1, 1), (1, 1)]);
    let err = garding_lemma_test(&inst, &v, 50, 5).unwrap_err();
    assert!(matches!(err, HyperbolicError::OutsideCone { .. }));
}

#[test]
fn corrupted_quadratic_fails_certification() {
    // x₁x₂ + x₃² looks like an elementary symmetric with one term corrupted;
    // its restriction along 𝟏 has negative discriminant on an open set, so
    // sampling must find a counterexample.
    let h = SparsePoly::from_terms(
        3,
        [
            (MultiIndex::new(vec![1, 1, 0]), Rat::one()),
            (MultiIndex::new(vec![0, 0, 2]), Rat::one()),
        ],
    )
    .unwrap();
    let err = certify_hyperbolic(&h, &ones(3), DEFAULT_TRIALS, 9).unwrap_err();
    assert!(matches!(err, HyperbolicError::NotRealRooted { .. }));
}
