//! The α-permanent and α-determinant against their defining identities:
//! rising-factorial closed form on all-ones matrices, specializations at
//! α ∈ {1, −1, 0}, the reciprocal duality det_α = αⁿ per_{1/α}, and
//! invariance under simultaneous row/column permutation.

use num::BigInt;
use num_traits::{One, Zero};
use numeric_core::{det_exact, rat, rint, CRat, RMatrix, Rat, Scalar};
use permanent_core::{det_alpha, per_alpha, per_naive, Alpha};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rand_matrix(rng: &mut impl Rng, n: usize) -> RMatrix<Rat> {
    let entries = (0..n * n)
        .map(|_| {
            Rat::new(
                BigInt::from(rng.gen_range(-9i64..=9)),
                BigInt::from(rng.gen_range(1i64..=4)),
            )
        })
        .collect();
    RMatrix::new(n, n, entries).unwrap()
}

/// α(α+1)⋯(α+n−1).
fn rising_factorial(alpha: &Rat, n: usize) -> Rat {
    let mut out = Rat::one();
    for k in 0..n {
        out *= alpha + rint(k as i64);
    }
    out
}

#[test]
fn per_alpha_all_ones_is_rising_factorial() {
    // per_α(J_n) = α(α+1)⋯(α+n−1): the cycle-type generating function of S_n.
    for alpha in [rint(2), rat(1, 2), rat(-3, 7)] {
        let a = Alpha::new(alpha.clone());
        for n in 0..=6usize {
            let ones: RMatrix<Rat> = RMatrix::new(n, n, vec![Rat::one(); n * n]).unwrap();
            assert_eq!(
                per_alpha(&ones, &a).unwrap(),
                rising_factorial(&alpha, n),
                "α = {alpha}, n = {n}"
            );
        }
    }
}

#[test]
fn per_alpha_at_one_is_permanent() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let one = Alpha::new(Rat::one());
    for _ in 0..20 {
        let n = rng.gen_range(1..=6);
        let a = rand_matrix(&mut rng, n);
        assert_eq!(per_alpha(&a, &one).unwrap(), per_naive(&a).unwrap());
    }
}

#[test]
fn per_alpha_1x1_is_alpha_times_entry() {
    let a: RMatrix<Rat> = RMatrix::from_int_rows(&[&[5]]);
    let alpha = Alpha::new(rat(3, 2));
    assert_eq!(per_alpha(&a, &alpha).unwrap(), rat(15, 2));
}

#[test]
fn det_alpha_at_minus_one_is_determinant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let minus_one = Alpha::new(rint(-1));
    for _ in 0..20 {
        let n = rng.gen_range(1..=6);
        let a = rand_matrix(&mut rng, n);
        assert_eq!(det_alpha(&a, &minus_one).unwrap(), det_exact(&a).unwrap());
    }
}

#[test]
fn det_alpha_at_one_is_permanent() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let one = Alpha::new(Rat::one());
    for _ in 0..10 {
        let n = rng.gen_range(1..=6);
        let a = rand_matrix(&mut rng, n);
        assert_eq!(det_alpha(&a, &one).unwrap(), per_naive(&a).unwrap());
    }
}

#[test]
fn det_alpha_at_zero_is_diagonal_product() {
    // Only the identity permutation has n cycles, and 0⁰ = 1 keeps it.
    let a: RMatrix<Rat> = RMatrix::from_int_rows(&[&[2, 9, 9], &[9, 3, 9], &[9, 9, 5]]);
    assert_eq!(det_alpha(&a, &Alpha::new(Rat::zero())).unwrap(), rint(30));
}

#[test]
fn det_alpha_is_alpha_power_times_reciprocal_per_alpha() {
    // det_α(A) = αⁿ · per_{1/α}(A) for α ≠ 0.
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for alpha in [rint(2), rat(-3, 5), rat(7, 4)] {
        let a_det = Alpha::new(alpha.clone());
        let a_per = a_det.reciprocal().unwrap();
        for _ in 0..8 {
            let n = rng.gen_range(1..=5);
            let m = rand_matrix(&mut rng, n);
            let mut pow = Rat::one();
            for _ in 0..n {
                pow *= alpha.clone();
            }
            assert_eq!(
                det_alpha(&m, &a_det).unwrap(),
                pow * per_alpha(&m, &a_per).unwrap()
            );
        }
    }
}

#[test]
fn per_alpha_of_hermitian_matrix_is_real() {
    // Conjugating each permutation term pairs σ with σ⁻¹ at equal cycle count.
    let i = CRat::i();
    let h = RMatrix::new(
        3,
        3,
        vec![
            CRat::from_int(2),
            i.clone(),
            CRat::from_int(1) + i.clone(),
            -i.clone(),
            CRat::from_int(3),
            CRat::from_int(2) * i.clone(),
            CRat::from_int(1) - i.clone(),
            CRat::from_int(-2) * i.clone(),
            CRat::from_int(5),
        ],
    )
    .unwrap();
    let alpha = Alpha::new(rat(2, 3));
    let v = per_alpha(&h, &alpha).unwrap();
    assert!(v.im().is_zero(), "per_α of a Hermitian matrix must be real");
}

#[test]
fn per_alpha_invariant_under_simultaneous_permutation() {
    // per_α(PAPᵀ) = per_α(A): relabeling conjugates each σ, preserving cycles.
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let alpha = Alpha::new(rat(5, 3));
    for _ in 0..10 {
        let n = rng.gen_range(2..=5);
        let a = rand_matrix(&mut rng, n);
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let mut b: RMatrix<Rat> = RMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                b.set(i, j, a.get(perm[i], perm[j]).clone());
            }
        }
        assert_eq!(per_alpha(&a, &alpha).unwrap(), per_alpha(&b, &alpha).unwrap());
    }
}

#[test]
fn alpha_reciprocal_helpers() {
    assert_eq!(
        Alpha::new(rat(1, 3)).reciprocal().unwrap().value(),
        &rint(3)
    );
    assert!(Alpha::new(Rat::zero()).reciprocal().is_none());

    // −1/(m+1) recognition.
    assert_eq!(Alpha::new(rat(-1, 4)).neg_reciprocal_m(), Some(3));
    assert_eq!(Alpha::new(rat(-1, 1)).neg_reciprocal_m(), Some(0));
    assert_eq!(Alpha::new(rat(1, 4)).neg_reciprocal_m(), None);
    assert_eq!(Alpha::new(rat(-2, 4)).neg_reciprocal_m(), Some(1));

    // +1/(m+1) recognition.
    assert_eq!(Alpha::new(rat(1, 5)).pos_reciprocal_m(), Some(4));
    assert_eq!(Alpha::new(rat(2, 5)).pos_reciprocal_m(), None);

    // α = 2/(m+1) recognition: α = 2 → m = 0, α = 1 → m = 1, α = 1/2 → m = 3.
    assert_eq!(Alpha::new(rint(2)).two_over_m(), Some(0));
    assert_eq!(Alpha::new(rint(1)).two_over_m(), Some(1));
    assert_eq!(Alpha::new(rat(1, 2)).two_over_m(), Some(3));
    assert_eq!(Alpha::new(rat(2, 5)).two_over_m(), Some(4));
    assert_eq!(Alpha::new(rat(3, 2)).two_over_m(), None);
    assert_eq!(Alpha::new(rat(-2, 3)).two_over_m(), None);
}
