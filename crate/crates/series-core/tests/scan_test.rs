//! The integerized deep scanner against the generic rational engine, the
//! box-restricted coefficient path, and a frozen small-frame oracle.

use num::BigInt;
use num_traits::Zero;
use numeric_core::{rat, rint, CRat, RMatrix, Rat, Scalar};
use permanent_core::{det_alpha, dilate, per_alpha, Alpha, MultiIndex};
use series_core::{macmahon_per_coeffs, power_coeff_at, scan_first_negative, SeriesError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn mi(parts: &[u32]) -> MultiIndex {
    MultiIndex::from_slice(parts)
}

/// Gram matrix of the frame {e₁, e₂, e₁+e₂} in the quadratic form
/// A(𝟏)⁻¹ = ([[2,1],[1,2]])⁻¹: the 3×3 PSD matrix (1/3)·[[2,−1,1],[−1,2,1],[1,1,2]].
fn small_frame_gram() -> RMatrix<Rat> {
    RMatrix::from_int_rows(&[&[2, -1, 1], &[-1, 2, 1], &[1, 1, 2]])
        .scale_rat(&rat(1, 3))
        .detect_structure()
}

fn rand_symmetric(rng: &mut impl Rng, n: usize) -> RMatrix<Rat> {
    let mut a: RMatrix<Rat> = RMatrix::zero(n, n);
    for i in 0..n {
        for j in i..n {
            let v = Rat::new(
                BigInt::from(rng.gen_range(-3i64..=3)),
                BigInt::from(rng.gen_range(1i64..=3)),
            );
            a.set(i, j, v.clone());
            a.set(j, i, v);
        }
    }
    a
}

#[test]
fn first_negative_coefficient_of_quarter_power() {
    // Expanding det(I − XG)^{−1/4} over the rank-2 frame Gram: the first
    // sign change in graded-lex order sits at (1,2,2) with value −5/3456.
    let g = small_frame_gram();
    let beta = rat(1, 4);
    let scan = scan_first_negative(&g, &beta, 6).unwrap();
    let (n, value) = scan.first_negative.expect("a negative coefficient exists by degree 5");
    assert_eq!(n, mi(&[1, 2, 2]));
    assert_eq!(value, rat(-5, 3456));

    // Independent box-restricted convolution agrees exactly.
    assert_eq!(power_coeff_at(&g, &beta, &n).unwrap(), rat(-5, 3456));

    // And the master theorem ties it to the dilated α-permanent:
    // per_{1/4}(G[(1,2,2)]) = coefficient · 𝐧! = −5/864.
    let blown = dilate(&g, &n).unwrap();
    let alpha = Alpha::new(rat(1, 4));
    assert_eq!(per_alpha(&blown, &alpha).unwrap(), rat(-5, 864));

    // Bridging to the α-determinant at α = 4: det_4 = 4^{|𝐧|}·per_{1/4}.
    assert_eq!(
        det_alpha(&blown, &Alpha::from_int(4)).unwrap(),
        rat(-160, 27)
    );
}

#[test]
fn rank_two_gram_admits_no_negative_at_two_thirds() {
    // β = 2/3 lies in the admissible half-line for rank 2, so every
    // coefficient of det(I − XG)^{−2/3} is nonnegative no matter how deep
    // the scan looks.
    let g = small_frame_gram();
    let scan = scan_first_negative(&g, &rat(2, 3), 7).unwrap();
    assert!(scan.first_negative.is_none());
    assert!(scan.nonzero_coeffs > 100, "scan must actually visit the expansion");
}

#[test]
fn scanner_agrees_with_generic_engine_on_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    for trial in 0..8 {
        let g = rand_symmetric(&mut rng, 3);
        let beta = rat(5, 3);
        let depth = 4;
        let coeffs = macmahon_per_coeffs(&g, &Alpha::new(beta.clone()), depth).unwrap();
        // Box path equals the generic engine at every index.
        for (n, c) in &coeffs {
            assert_eq!(
                power_coeff_at(&g, &beta, n).unwrap(),
                c.clone(),
                "trial {trial} at {n}"
            );
        }
        // Scan finds exactly the graded-lex-first negative of that map.
        let scan = scan_first_negative(&g, &beta, depth).unwrap();
        let expect = coeffs.iter().find(|(_, c)| c < &&Rat::zero());
        match (scan.first_negative, expect) {
            (None, None) => {}
            (Some((n, v)), Some((en, ev))) => {
                assert_eq!(&n, en, "trial {trial}");
                assert_eq!(&v, ev, "trial {trial}");
            }
            (got, want) => panic!("trial {trial}: scan {got:?} vs engine {want:?}"),
        }
    }
}

#[test]
fn hermitian_complex_scan_matches_generic_engine() {
    // G = [[1, i/2], [−i/2, 1]] is Hermitian PSD with real minors.
    let i = CRat::i();
    let g = RMatrix::new(
        2,
        2,
        vec![
            CRat::from_int(1),
            i.clone().mul_rat(&rat(1, 2)),
            -i.mul_rat(&rat(1, 2)),
            CRat::from_int(1),
        ],
    )
    .unwrap();
    let beta = rat(3, 2);
    let coeffs = macmahon_per_coeffs(&g, &Alpha::new(beta.clone()), 4).unwrap();
    for (n, c) in &coeffs {
        assert!(c.im().is_zero());
        assert_eq!(power_coeff_at(&g, &beta, n).unwrap(), c.re(), "at {n}");
    }
    let scan = scan_first_negative(&g, &beta, 4).unwrap();
    assert!(scan.first_negative.is_none());
}

#[test]
fn non_hermitian_complex_matrix_is_rejected() {
    // An imaginary diagonal entry makes det(I − XG) itself complex.
    let g = RMatrix::new(1, 1, vec![CRat::i()]).unwrap();
    assert!(matches!(
        scan_first_negative(&g, &rat(1, 2), 3),
        Err(SeriesError::NonRealCoefficient)
    ));
    assert!(matches!(
        power_coeff_at(&g, &rat(1, 2), &mi(&[2])),
        Err(SeriesError::NonRealCoefficient)
    ));
}

#[test]
fn univariate_scan_signs() {
    // (1 − 2x)^{−1/2} has all-positive coefficients; (1 − 2x)^{1/2}
    // turns negative immediately at x¹ with coefficient −1.
    let g: RMatrix<Rat> = RMatrix::from_int_rows(&[&[2]]);
    let positive = scan_first_negative(&g, &rat(1, 2), 30).unwrap();
    assert!(positive.first_negative.is_none());
    assert_eq!(positive.nonzero_coeffs, 31);

    let sqrt = scan_first_negative(&g, &rat(-1, 2), 30).unwrap();
    assert_eq!(sqrt.first_negative, Some((mi(&[1]), rint(-1))));

    // Deep univariate coefficient against the closed form
    // [x^k](1−2x)^{−1/2} = C(2k,k)/2^k, at k = 25.
    let k = mi(&[25]);
    let series_value = power_coeff_at(&g, &rat(1, 2), &k).unwrap();
    let mut expect = Rat::from_integer(1.into());
    for j in 0..25u32 {
        expect = expect * Rat::new(BigInt::from(50 - j), BigInt::from(2 * (j + 1)));
    }
    assert_eq!(series_value, expect);
}

#[test]
fn zero_and_empty_matrices_scan_clean() {
    let zero: RMatrix<Rat> = RMatrix::zero(4, 4);
    let scan = scan_first_negative(&zero, &rat(7, 2), 9).unwrap();
    assert!(scan.first_negative.is_none());
    assert_eq!(scan.nonzero_coeffs, 1);

    let empty: RMatrix<Rat> = RMatrix::zero(0, 0);
    assert!(scan_first_negative(&empty, &rat(1, 2), 5)
        .unwrap()
        .first_negative
        .is_none());
    assert_eq!(power_coeff_at(&empty, &rat(1, 2), &mi(&[])).unwrap(), rint(1));
}

#[test]
fn packed_key_capacity_is_enforced() {
    let g: RMatrix<Rat> = RMatrix::zero(16, 16);
    assert!(matches!(
        scan_first_negative(&g, &rat(1, 2), 255),
        Err(SeriesError::PackedKeyOverflow { nvars: 16, degree: 255 })
    ));
}

#[test]
fn coefficient_at_origin_is_one() {
    let g = small_frame_gram();
    assert_eq!(power_coeff_at(&g, &rat(2, 7), &mi(&[0, 0, 0])).unwrap(), rint(1));
}
