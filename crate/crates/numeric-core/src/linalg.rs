//! Exact linear algebra: fraction-free determinants, Faddeev–LeVerrier
//! characteristic polynomials, the Sylvester determinant identity, and
//! Gauss–Jordan inverse / rank over the exact scalar fields.

use num::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalar::{CRat, Rat, Scalar};
use crate::unipoly::UniPoly;
use crate::{NumericError, RMatrix};

/// Ring elements admitting the exact divisions that arise inside Bareiss
/// elimination (every division in the algorithm is exact in any integral
/// domain). Implemented for `BigInt` and for Gaussian integers.
trait BareissRing: Clone {
    fn zero_v() -> Self;
    fn one_v() -> Self;
    fn is_zero_v(&self) -> bool;
    fn mul_v(&self, rhs: &Self) -> Self;
    fn sub_v(&self, rhs: &Self) -> Self;
    fn neg_v(&self) -> Self;
    /// Division known to be exact (debug-asserted).
    fn exact_div(&self, d: &Self) -> Self;
}

impl BareissRing for BigInt {
    fn zero_v() -> Self {
        BigInt::zero()
    }
    fn one_v() -> Self {
        BigInt::one()
    }
    fn is_zero_v(&self) -> bool {
        self.is_zero()
    }
    fn mul_v(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub_v(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg_v(&self) -> Self {
        -self
    }
    fn exact_div(&self, d: &Self) -> Self {
        debug_assert!((self % d).is_zero(), "Bareiss division must be exact");
        self / d
    }
}

/// Gaussian integer a + b·i; the ring of integers of the complex rationals.
#[derive(Clone, Debug)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl BareissRing for GaussInt {
    fn zero_v() -> Self {
        GaussInt {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }
    fn one_v() -> Self {
        GaussInt {
            re: BigInt::one(),
            im: BigInt::zero(),
        }
    }
    fn is_zero_v(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn mul_v(&self, rhs: &Self) -> Self {
        GaussInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
    fn sub_v(&self, rhs: &Self) -> Self {
        GaussInt {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
    fn neg_v(&self) -> Self {
        GaussInt {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
    fn exact_div(&self, d: &Self) -> Self {
        // (a+bi)/(c+di) = (a+bi)(c−di)/(c²+d²); both component divisions are
        // exact whenever the quotient is a Gaussian integer, which Bareiss
        // elimination guarantees.
        let n = &d.re * &d.re + &d.im * &d.im;
        let re = &self.re * &d.re + &self.im * &d.im;
        let im = &self.im * &d.re - &self.re * &d.im;
        debug_assert!((&re % &n).is_zero() && (&im % &n).is_zero());
        GaussInt {
            re: re / &n,
            im: im / &n,
        }
    }
}

/// One-step Bareiss fraction-free elimination; returns the determinant of the
/// `n × n` row-major matrix `m`. All intermediate divisions are exact, so the
/// computation never leaves the ring.
fn bareiss_det<D: BareissRing>(n: usize, mut m: Vec<D>) -> D {
    if n == 0 {
        return D::one_v();
    }
    let mut sign_flip = false;
    let mut prev = D::one_v();
    for k in 0..n - 1 {
        if m[k * n + k].is_zero_v() {
            // Pivot search preserves the fraction-free invariant; a row swap
            // only flips the sign.
            match (k + 1..n).find(|&r| !m[r * n + k].is_zero_v()) {
                Some(r) => {
                    for j in 0..n {
                        m.swap(k * n + j, r * n + j);
                    }
                    sign_flip = !sign_flip;
                }
                None => return D::zero_v(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k * n + k]
                    .mul_v(&m[i * n + j])
                    .sub_v(&m[i * n + k].mul_v(&m[k * n + j]));
                m[i * n + j] = t.exact_div(&prev);
            }
        }
        prev = m[k * n + k].clone();
    }
    let det = m[(n - 1) * n + (n - 1)].clone();
    if sign_flip {
        det.neg_v()
    } else {
        det
    }
}

/// Clears denominators row-by-row, producing the integer matrix and the
/// product of the row scale factors.
fn clear_rows_rat(n: usize, entries: &[Rat]) -> (Vec<BigInt>, BigInt) {
    let mut scaled = Vec::with_capacity(n * n);
    let mut total = BigInt::one();
    for i in 0..n {
        let row = &entries[i * n..(i + 1) * n];
        let l = row
            .iter()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
        for e in row {
            scaled.push(e.numer() * (&l / e.denom()));
        }
        total *= l;
    }
    (scaled, total)
}

pub(crate) fn det_block_rat(n: usize, entries: &[Rat]) -> Rat {
    let (scaled, total) = clear_rows_rat(n, entries);
    Rat::new(bareiss_det(n, scaled), total)
}

pub(crate) fn det_block_crat(n: usize, entries: &[CRat]) -> CRat {
    let mut scaled = Vec::with_capacity(n * n);
    let mut total = BigInt::one();
    for i in 0..n {
        let row = &entries[i * n..(i + 1) * n];
        let l = row.iter().fold(BigInt::one(), |acc, e| {
            acc.lcm(e.re.denom()).lcm(e.im.denom())
        });
        for e in row {
            scaled.push(GaussInt {
                re: e.re.numer() * (&l / e.re.denom()),
                im: e.im.numer() * (&l / e.im.denom()),
            });
        }
        total *= l;
    }
    let d = bareiss_det(n, scaled);
    CRat {
        re: Rat::new(d.re, total.clone()),
        im: Rat::new(d.im, total),
    }
}

/// Exact determinant by fraction-free Bareiss elimination.
///
/// Denominators are cleared per row (tracking the scale), the elimination runs
/// over `BigInt` / Gaussian integers where every division is exact, and the
/// scale is divided back out at the end. No rounding occurs anywhere.
pub fn det_exact<S: Scalar>(a: &RMatrix<S>) -> Result<S, NumericError> {
    if !a.is_square() {
        return Err(NumericError::NonSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    Ok(S::det_block(a.rows(), a.entries()))
}

/// Exact characteristic polynomial `det(tI − A)` by the Faddeev–LeVerrier
/// recurrence:
///
/// `M₁ = A`, `c_{n−k} = −tr(A·M_k)/k`, `M_{k+1} = A·(M_k + c_{n−k}·I)`.
///
/// The only divisions are by the integers `1..=n`, so the computation is exact
/// over both scalar fields. The coefficients are returned as rationals; for a
/// complex input they must all be real (always the case for hermitian
/// matrices), otherwise `NonRealValue` is returned.
pub fn char_poly<S: Scalar>(a: &RMatrix<S>) -> Result<UniPoly, NumericError> {
    if !a.is_square() {
        return Err(NumericError::NonSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let mut mk = a.clone();
    for k in 1..=n {
        let mut tr = S::zero();
        for i in 0..n {
            tr = tr + mk.get(i, i).clone();
        }
        let ck = tr.mul_rat(&Rat::new((-1).into(), (k as i64).into()));
        coeffs[n - k] = ck.to_rat().ok_or(NumericError::NonRealValue)?;
        if k < n {
            let mut shifted = mk.clone();
            for i in 0..n {
                let v = shifted.get(i, i).clone() + ck.clone();
                shifted.set(i, i, v);
            }
            mk = a.mul(&shifted)?;
        }
    }
    Ok(UniPoly::new(coeffs))
}

/// Verifies the Sylvester determinant identity `det(I − AB) = det(I − BA)`
/// exactly for an `m×n` matrix `A` and an `n×m` matrix `B`.
pub fn sylvester_check<S: Scalar>(
    a: &RMatrix<S>,
    b: &RMatrix<S>,
) -> Result<bool, NumericError> {
    if a.cols() != b.rows() || a.rows() != b.cols() {
        return Err(NumericError::shape(
            "sylvester",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols(),
        ));
    }
    let ab = a.mul(b)?;
    let ba = b.mul(a)?;
    let lhs = det_exact(&RMatrix::identity(a.rows()).sub(&ab)?)?;
    let rhs = det_exact(&RMatrix::identity(b.rows()).sub(&ba)?)?;
    Ok(lhs == rhs)
}

/// Exact inverse by Gauss–Jordan elimination over the scalar field.
pub fn invert<S: Scalar>(a: &RMatrix<S>) -> Result<RMatrix<S>, NumericError> {
    if !a.is_square() {
        return Err(NumericError::NonSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    // Augmented [A | I], reduced in place.
    let mut m: Vec<Vec<S>> = (0..n)
        .map(|i| {
            let mut row: Vec<S> = (0..n).map(|j| a.get(i, j).clone()).collect();
            row.extend((0..n).map(|j| if i == j { S::one() } else { S::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or(NumericError::Singular)?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for j in col..2 * n {
            m[col][j] = m[col][j].try_div(&p)?;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..2 * n {
                    let sub = f.clone() * m[col][j].clone();
                    m[r][j] = m[r][j].clone() - sub;
                }
            }
        }
    }
    RMatrix::from_rows(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Exact rank by Gaussian elimination over the scalar field.
pub fn rank<S: Scalar>(a: &RMatrix<S>) -> usize {
    let rows = a.rows();
    let cols = a.cols();
    let mut m: Vec<Vec<S>> = (0..rows)
        .map(|i| (0..cols).map(|j| a.get(i, j).clone()).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let p = m[rank][col].clone();
        for r in rank + 1..rows {
            if !m[r][col].is_zero() {
                let f = m[r][col].try_div(&p).expect("pivot is nonzero");
                for j in col..cols {
                    let sub = f.clone() * m[rank][j].clone();
                    m[r][j] = m[r][j].clone() - sub;
                }
            }
        }
        rank += 1;
    }
    rank
}
