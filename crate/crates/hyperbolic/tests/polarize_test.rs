//! Directional derivatives and the complete/partial polarized forms.

use num_traits::One;
use numeric_core::{rat, rint, RMatrix, Rat};
use permanent_core::{per_naive, MultiIndex};
use proptest::prelude::*;
use series_core::SparsePoly;

use hyperbolic::{
    directional_derivative, partial_polarization, polarized_form, HyperbolicError,
};

/// `x₁⋯x_n`.
fn product_poly(n: usize) -> SparsePoly<Rat> {
    SparsePoly::from_terms(n, [(MultiIndex::ones(n), Rat::one())]).unwrap()
}

/// `x₁² − x₂² − ⋯ − x_n²`.
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

#[test]
fn derivative_of_product_along_first_axis() {
    let h = product_poly(2);
    let d = directional_derivative(&h, &rv(&[(1, 1), (0, 1)])).unwrap();
    // D_{e₁}(x₁x₂) = x₂.
    let x2 = SparsePoly::from_terms(2, [(MultiIndex::new(vec![0, 1]), Rat::one())]).unwrap();
    assert_eq!(d, x2);
}

#[test]
fn derivative_of_lorentz_along_time_axis() {
    let h = lorentz_poly(3);
    let d = directional_derivative(&h, &rv(&[(1, 1), (0, 1), (0, 1)])).unwrap();
    let two_x1 = SparsePoly::from_terms(3, [(MultiIndex::new(vec![1, 0, 0]), rint(2))]).unwrap();
    assert_eq!(d, two_x1);
}

#[test]
fn degree_plus_one_derivatives_annihilate() {
    let h = lorentz_poly(3); // degree 2
    let v = rv(&[(2, 3), (1, 5), (-1, 2)]);
    let mut g = h;
    for _ in 0..3 {
        g = directional_derivative(&g, &v).unwrap();
    }
    assert!(g.is_zero());
}

#[test]
fn derivative_length_mismatch_is_rejected() {
    let h = product_poly(3);
    let err = directional_derivative(&h, &rv(&[(1, 1), (1, 1)])).unwrap_err();
    assert!(matches!(err, HyperbolicError::LengthMismatch { expected: 3, got: 2 }));
}

#[test]
fn diagonal_polarization_recovers_the_form() {
    for h in [product_poly(4), lorentz_poly(4)] {
        let v = rv(&[(3, 2), (-1, 3), (5, 7), (2, 1)]);
        let d = h.homogeneous_degree().unwrap() as usize;
        let args: Vec<Vec<Rat>> = vec![v.clone(); d];
        assert_eq!(polarized_form(&h, &args).unwrap(), h.eval(&v).unwrap());
    }
}

#[test]
fn product_polarization_is_the_scaled_permanent() {
    // n!·H(v₁,…,v_n) = per(matrix with columns vⱼ)  for h = x₁⋯x_n.
    let vs = [
        rv(&[(1, 1), (2, 1), (3, 1)]),
        rv(&[(1, 2), (1, 3), (1, 5)]),
        rv(&[(-2, 1), (0, 1), (4, 3)]),
    ];
    let h = product_poly(3);
    let hval = polarized_form(&h, &vs).unwrap();

    let cols: Vec<Vec<Rat>> =
        (0..3).map(|i| vs.iter().map(|v| v[i].clone()).collect()).collect();
    let m = RMatrix::from_rows(cols).unwrap();
    assert_eq!(hval * rint(6), per_naive(&m).unwrap());
}

#[test]
fn polarization_is_symmetric_in_its_arguments() {
    let h = lorentz_poly(3);
    let a = rv(&[(1, 1), (2, 3), (-1, 4)]);
    let b = rv(&[(0, 1), (5, 2), (1, 7)]);
    let hab = polarized_form(&h, &[a.clone(), b.clone()]).unwrap();
    let hba = polarized_form(&h, &[b, a]).unwrap();
    assert_eq!(hab, hba);
}

#[test]
fn polarization_is_multilinear() {
    let h = product_poly(3);
    let a = rv(&[(1, 1), (2, 1), (3, 1)]);
    let a2 = rv(&[(1, 2), (-1, 1), (2, 5)]);
    let b = rv(&[(1, 3), (1, 1), (0, 1)]);
    let c = rv(&[(2, 1), (1, 4), (1, 1)]);
    let (s, t) = (rat(3, 7), rat(-5, 2));

    let mixed: Vec<Rat> = (0..3)
        .map(|i| &s * &a[i] + &t * &a2[i])
        .collect();
    let lhs = polarized_form(&h, &[mixed, b.clone(), c.clone()]).unwrap();
    let rhs = s * polarized_form(&h, &[a, b.clone(), c.clone()]).unwrap()
        + t * polarized_form(&h, &[a2, b, c]).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn polarization_arity_is_the_degree() {
    let h = product_poly(3);
    let v = rv(&[(1, 1), (1, 1), (1, 1)]);
    let err = polarized_form(&h, &[v.clone(), v]).unwrap_err();
    assert!(matches!(err, HyperbolicError::VectorCount { degree: 3, got: 2 }));
}

#[test]
fn polarization_rejects_inhomogeneous_input() {
    let mut h = product_poly(2);
    h.add_term(MultiIndex::new(vec![1, 0]), Rat::one());
    let err = polarized_form(&h, &[rv(&[(1, 1), (1, 1)])]).unwrap_err();
    assert!(matches!(err, HyperbolicError::NotHomogeneous));
}

#[test]
fn partial_polarization_with_no_vectors_is_identity() {
    let h = lorentz_poly(4);
    assert_eq!(partial_polarization(&h, &[]).unwrap(), h);
}

#[test]
fn partial_polarization_of_product_along_ones() {
    // ((3−1)!/3!)·D_𝟏(x₁x₂x₃) = (x₁x₂ + x₁x₃ + x₂x₃)/3.
    let h = product_poly(3);
    let g = partial_polarization(&h, &[rv(&[(1, 1), (1, 1), (1, 1)])]).unwrap();
    let third = rat(1, 3);
    let expect = SparsePoly::from_terms(
        3,
        [
            (MultiIndex::new(vec![1, 1, 0]), third.clone()),
            (MultiIndex::new(vec![1, 0, 1]), third.clone()),
            (MultiIndex::new(vec![0, 1, 1]), third),
        ],
    )
    .unwrap();
    assert_eq!(g, expect);
}

#[test]
fn partial_polarization_evaluation_round_trip() {
    // g = partial(h, b₁, b₂) evaluated at u equals H(b₁, b₂, u, u) exactly.
    let h = product_poly(4);
    let b1 = rv(&[(1, 1), (2, 1), (1, 3), (1, 1)]);
    let b2 = rv(&[(1, 2), (1, 1), (3, 1), (2, 7)]);
    let u = rv(&[(5, 3), (1, 1), (-1, 2), (4, 1)]);
    let g = partial_polarization(&h, &[b1.clone(), b2.clone()]).unwrap();
    let full = polarized_form(&h, &[b1, b2, u.clone(), u.clone()]).unwrap();
    assert_eq!(g.eval(&u).unwrap(), full);
}

#[test]
fn partial_polarization_needs_room_below_the_degree() {
    let h = lorentz_poly(3); // degree 2
    let v = rv(&[(1, 1), (0, 1), (0, 1)]);
    let err = partial_polarization(&h, &[v.clone(), v]).unwrap_err();
    assert!(matches!(err, HyperbolicError::TooManyFixedVectors { k: 2, degree: 2 }));
}

/// Random homogeneous cubics in three variables.
fn arb_cubic() -> impl Strategy<Value = SparsePoly<Rat>> {
    let exps = prop::collection::vec((0u32..=3, 0u32..=3), 1..6);
    let coefs = prop::collection::vec((-9i64..=9, 1i64..=9), 6);
    (exps, coefs).prop_map(|(es, cs)| {
        let terms = es.iter().zip(&cs).filter_map(|(&(a, b), &(p, q))| {
            (a + b <= 3).then(|| (MultiIndex::new(vec![a, b, 3 - a - b]), rat(p, q)))
        });
        SparsePoly::from_terms(3, terms).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prop_diagonal_identity_on_random_cubics(
        h in arb_cubic(),
        v in prop::collection::vec((-9i64..=9, 1i64..=9).prop_map(|(p, q)| rat(p, q)), 3),
    ) {
        prop_assume!(!h.is_zero());
        let args: Vec<Vec<Rat>> = vec![v.clone(); 3];
        prop_assert_eq!(polarized_form(&h, &args).unwrap(), h.eval(&v).unwrap());
    }
}
