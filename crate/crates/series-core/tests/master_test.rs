//! The determinant polynomial and both master-theorem identities,
//! cross-checked coefficient-by-coefficient against direct permutation
//! sums over dilated matrices.

use num::BigInt;
use num_traits::{One, Zero};
use numeric_core::{det_exact, rat, rint, CRat, RMatrix, Rat, Scalar};
use permanent_core::{det_alpha, dilate, per_alpha, Alpha, MultiIndex};
use series_core::{
    det_i_minus_xa, det_i_minus_xa_bounded, macmahon_det_coeffs, macmahon_per_coeffs, SeriesError,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn mi(parts: &[u32]) -> MultiIndex {
    MultiIndex::from_slice(parts)
}

fn rand_matrix(rng: &mut impl Rng, n: usize) -> RMatrix<Rat> {
    let entries = (0..n * n)
        .map(|_| {
            Rat::new(
                BigInt::from(rng.gen_range(-4i64..=4)),
                BigInt::from(rng.gen_range(1i64..=3)),
            )
        })
        .collect();
    RMatrix::new(n, n, entries).unwrap()
}

/// All multi-indices of the given length with total degree ≤ max.
fn indices_up_to(len: usize, max: u32) -> Vec<MultiIndex> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|head: Vec<u32>| {
                let used: u32 = head.iter().sum();
                (0..=(max - used)).map(move |e| {
                    let mut h = head.clone();
                    h.push(e);
                    h
                })
            })
            .collect();
    }
    out.into_iter().map(MultiIndex::new).collect()
}

#[test]
fn det_of_scalar_matrix() {
    let a: RMatrix<Rat> = RMatrix::from_int_rows(&[&[7]]);
    let p = det_i_minus_xa(&a).unwrap();
    assert_eq!(p.coeff(&mi(&[0])), rint(1));
    assert_eq!(p.coeff(&mi(&[1])), rint(-7));
    assert_eq!(p.num_terms(), 2);
}

#[test]
fn det_of_identity_factors() {
    // det(I − X·I₂) = (1 − x₁)(1 − x₂)
    let p = det_i_minus_xa(&RMatrix::<Rat>::identity(2)).unwrap();
    assert_eq!(p.coeff(&mi(&[0, 0])), rint(1));
    assert_eq!(p.coeff(&mi(&[1, 0])), rint(-1));
    assert_eq!(p.coeff(&mi(&[0, 1])), rint(-1));
    assert_eq!(p.coeff(&mi(&[1, 1])), rint(1));
}

#[test]
fn constant_and_linear_terms() {
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    let a = rand_matrix(&mut rng, 3);
    let p = det_i_minus_xa(&a).unwrap();
    assert_eq!(p.coeff(&mi(&[0, 0, 0])), rint(1));
    for i in 0..3 {
        let mut e = vec![0u32; 3];
        e[i] = 1;
        assert_eq!(p.coeff(&MultiIndex::new(e)), -a.get(i, i).clone());
    }
}

#[test]
fn diagonal_restriction_matches_direct_determinant() {
    // p(t,…,t) = det(I − tA) for any scalar t.
    let mut rng = ChaCha8Rng::seed_from_u64(52);
    let a = rand_matrix(&mut rng, 4);
    let p = det_i_minus_xa(&a).unwrap();
    for t in [rint(2), rat(1, 3), rat(-5, 7)] {
        let x = vec![t.clone(); 4];
        let direct = det_exact(
            &RMatrix::<Rat>::identity(4).sub(&a.scale_rat(&t)).unwrap(),
        )
        .unwrap();
        assert_eq!(p.eval(&x).unwrap(), direct);
    }
}

#[test]
fn minor_bound_is_enforced() {
    let a: RMatrix<Rat> = RMatrix::zero(13, 13);
    assert!(matches!(
        det_i_minus_xa(&a),
        Err(SeriesError::SizeOverBound { size: 13, bound: 12 })
    ));
    assert!(det_i_minus_xa_bounded(&RMatrix::<Rat>::zero(3, 3), 3).is_ok());
}

#[test]
fn per_expansion_matches_dilated_alpha_permanents() {
    // det(I−XA)^{−α} = Σ per_α(A[𝐧]) x^𝐧/𝐧!, coefficient by coefficient.
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    let a = rand_matrix(&mut rng, 3);
    let alpha = Alpha::from_int(2);
    let coeffs = macmahon_per_coeffs(&a, &alpha, 4).unwrap();
    for n in indices_up_to(3, 4) {
        let blown = dilate(&a, &n).unwrap();
        let expect = per_alpha(&blown, &alpha).unwrap()
            / Rat::from_integer(n.factorial());
        assert_eq!(coeffs.get(&n).cloned().unwrap_or_else(Rat::zero), expect, "at {n}");
    }
}

#[test]
fn per_expansion_low_order_closed_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(54);
    let a = rand_matrix(&mut rng, 3);
    let alpha = Alpha::new(rat(-3, 5));
    let coeffs = macmahon_per_coeffs(&a, &alpha, 2).unwrap();
    assert_eq!(coeffs[&mi(&[0, 0, 0])], Rat::one());
    for i in 0..3 {
        let mut e = vec![0u32; 3];
        e[i] = 1;
        // per_α of the 1×1 dilation is α·a_ii.
        assert_eq!(
            coeffs[&MultiIndex::new(e)],
            alpha.value() * a.get(i, i)
        );
    }
}

#[test]
fn det_expansion_matches_dilated_alpha_determinants() {
    // det(I−αXA)^{−1/α} = Σ det_α(A[𝐧]) x^𝐧/𝐧!.
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    let a = rand_matrix(&mut rng, 2);
    let alpha = Alpha::new(rat(1, 2));
    let coeffs = macmahon_det_coeffs(&a, &alpha, 4).unwrap();
    for n in indices_up_to(2, 4) {
        let blown = dilate(&a, &n).unwrap();
        let expect = det_alpha(&blown, &alpha).unwrap()
            / Rat::from_integer(n.factorial());
        assert_eq!(coeffs.get(&n).cloned().unwrap_or_else(Rat::zero), expect, "at {n}");
    }
}

#[test]
fn det_expansion_at_minus_one_is_ordinary_determinants() {
    let coeffs =
        macmahon_det_coeffs(&RMatrix::<Rat>::identity(2), &Alpha::from_int(-1), 2).unwrap();
    // det(I₂[(1,1)]) = det(I₂) = 1, divided by 1!·1!.
    assert_eq!(coeffs[&mi(&[1, 1])], Rat::one());
}

#[test]
fn det_expansion_at_one_is_per_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(56);
    let a = rand_matrix(&mut rng, 3);
    let one = Alpha::from_int(1);
    assert_eq!(
        macmahon_det_coeffs(&a, &one, 3).unwrap(),
        macmahon_per_coeffs(&a, &one, 3).unwrap()
    );
}

#[test]
fn det_expansion_rejects_alpha_zero() {
    let a: RMatrix<Rat> = RMatrix::identity(2);
    assert!(matches!(
        macmahon_det_coeffs(&a, &Alpha::from_int(0), 3),
        Err(SeriesError::ZeroAlpha)
    ));
}

#[test]
fn per_expansion_works_over_complex_scalars() {
    // Hermitian 2×2 with an imaginary off-diagonal entry.
    let i = CRat::i();
    let h = RMatrix::new(
        2,
        2,
        vec![
            CRat::from_int(2),
            i.clone().mul_rat(&rat(1, 2)),
            -i.clone().mul_rat(&rat(1, 2)),
            CRat::from_int(3),
        ],
    )
    .unwrap();
    let alpha = Alpha::from_int(2);
    let coeffs = macmahon_per_coeffs(&h, &alpha, 3).unwrap();
    for n in indices_up_to(2, 3) {
        let blown = dilate(&h, &n).unwrap();
        let mut expect = per_alpha(&blown, &alpha).unwrap();
        expect = expect.mul_rat(&Rat::from_integer(n.factorial()).recip());
        assert_eq!(coeffs.get(&n).cloned().unwrap_or_else(CRat::zero), expect, "at {n}");
    }
}
