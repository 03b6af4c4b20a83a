use num_traits::Zero;

use crate::scalar::{Rat, Scalar};
use crate::{char_poly, NumericError};

/// Dense row-major matrix of exact scalars with optional structure flags.
///
/// The `symmetric` and `hermitian` flags are assertions: they are only ever
/// set by the validating constructors [`RMatrix::into_symmetric`] /
/// [`RMatrix::into_hermitian`] (or by [`RMatrix::detect_structure`]), and any
/// entrywise mutation clears them. Operations that are only meaningful for
/// symmetric/hermitian input ([`is_psd_exact`]) require a flag instead of
/// re-checking structure on every call.
#[derive(Clone, Debug)]
pub struct RMatrix<S: Scalar> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
    symmetric: bool,
    hermitian: bool,
}

/// Equality compares shape and entries; structure flags are assertions about
/// the entries, not independent data.
impl<S: Scalar> PartialEq for RMatrix<S> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl<S: Scalar> Eq for RMatrix<S> {}

impl<S: Scalar> RMatrix<S> {
    /// Builds a matrix from a row-major entry vector.
    pub fn new(rows: usize, cols: usize, entries: Vec<S>) -> Result<RMatrix<S>, NumericError> {
        if entries.len() != rows * cols {
            return Err(NumericError::Parse(format!(
                "entry count {} does not match shape {rows}x{cols}",
                entries.len()
            )));
        }
        Ok(RMatrix {
            rows,
            cols,
            entries,
            symmetric: false,
            hermitian: false,
        })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<RMatrix<S>, NumericError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(NumericError::Parse("ragged rows".into()));
        }
        RMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Builds a matrix from integer literals (test and example convenience).
    pub fn from_int_rows(rows: &[&[i64]]) -> RMatrix<S> {
        RMatrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&n| S::from_int(n)).collect())
                .collect(),
        )
        .expect("integer literal rows are rectangular")
    }

    pub fn identity(n: usize) -> RMatrix<S> {
        let mut m = RMatrix::zero(n, n);
        for i in 0..n {
            m.entries[i * n + i] = S::one();
        }
        m.symmetric = !S::IS_COMPLEX;
        m.hermitian = S::IS_COMPLEX;
        m
    }

    pub fn zero(rows: usize, cols: usize) -> RMatrix<S> {
        RMatrix {
            rows,
            cols,
            entries: vec![S::zero(); rows * cols],
            symmetric: !S::IS_COMPLEX && rows == cols,
            hermitian: S::IS_COMPLEX && rows == cols,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.cols + j]
    }

    /// Replaces one entry. Clears structure flags: they are assertions about
    /// the previous entries and must be re-validated after mutation.
    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.entries[i * self.cols + j] = v;
        self.symmetric = false;
        self.hermitian = false;
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn is_flagged_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn is_flagged_hermitian(&self) -> bool {
        self.hermitian
    }

    /// Validates `A = Aᵀ` and sets the symmetric flag.
    pub fn into_symmetric(mut self) -> Result<RMatrix<S>, NumericError> {
        if !self.is_square() {
            return Err(NumericError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self.get(i, j) != self.get(j, i) {
                    return Err(NumericError::StructureViolation("symmetric", i, j));
                }
            }
        }
        self.symmetric = true;
        Ok(self)
    }

    /// Validates `A = conj(A)ᵀ` (with real diagonal) and sets the hermitian flag.
    pub fn into_hermitian(mut self) -> Result<RMatrix<S>, NumericError> {
        if !self.is_square() {
            return Err(NumericError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        for i in 0..self.rows {
            if !self.get(i, i).im().is_zero() {
                return Err(NumericError::StructureViolation("hermitian", i, i));
            }
            for j in (i + 1)..self.cols {
                if *self.get(i, j) != self.get(j, i).conj() {
                    return Err(NumericError::StructureViolation("hermitian", i, j));
                }
            }
        }
        self.hermitian = true;
        Ok(self)
    }

    /// Sets whichever structure flags actually hold (no-op on non-square or
    /// unstructured matrices). Used after parsing external input.
    pub fn detect_structure(mut self) -> RMatrix<S> {
        if self.is_square() {
            let sym = (0..self.rows).all(|i| {
                ((i + 1)..self.cols).all(|j| self.get(i, j) == self.get(j, i))
            });
            let herm = (0..self.rows).all(|i| {
                self.get(i, i).im().is_zero()
                    && ((i + 1)..self.cols).all(|j| *self.get(i, j) == self.get(j, i).conj())
            });
            self.symmetric = sym && !S::IS_COMPLEX;
            self.hermitian = herm;
        }
        self
    }

    pub fn transpose(&self) -> RMatrix<S> {
        let mut out = RMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out.symmetric = self.symmetric;
        out.hermitian = false;
        out
    }

    pub fn conj_transpose(&self) -> RMatrix<S> {
        let mut out = RMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.get(i, j).conj();
            }
        }
        out.hermitian = self.hermitian;
        out
    }

    pub fn add(&self, rhs: &RMatrix<S>) -> Result<RMatrix<S>, NumericError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(NumericError::shape(
                "add", self.rows, self.cols, rhs.rows, rhs.cols,
            ));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Ok(RMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
            symmetric: self.symmetric && rhs.symmetric,
            hermitian: self.hermitian && rhs.hermitian,
        })
    }

    pub fn sub(&self, rhs: &RMatrix<S>) -> Result<RMatrix<S>, NumericError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(NumericError::shape(
                "sub", self.rows, self.cols, rhs.rows, rhs.cols,
            ));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Ok(RMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
            symmetric: self.symmetric && rhs.symmetric,
            hermitian: self.hermitian && rhs.hermitian,
        })
    }

    pub fn mul(&self, rhs: &RMatrix<S>) -> Result<RMatrix<S>, NumericError> {
        if self.cols != rhs.rows {
            return Err(NumericError::shape(
                "mul", self.rows, self.cols, rhs.rows, rhs.cols,
            ));
        }
        let mut out: RMatrix<S> = RMatrix::zero(self.rows, rhs.cols);
        out.symmetric = false;
        out.hermitian = false;
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if aik.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let cur = out.entries[i * rhs.cols + j].clone();
                    out.entries[i * rhs.cols + j] =
                        cur + aik.clone() * rhs.get(k, j).clone();
                }
            }
        }
        Ok(out)
    }

    /// Entrywise scaling by a rational factor; preserves structure flags
    /// (a rational scale keeps both symmetry and hermitian-ness).
    pub fn scale_rat(&self, r: &Rat) -> RMatrix<S> {
        RMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.mul_rat(r)).collect(),
            symmetric: self.symmetric,
            hermitian: self.hermitian,
        }
    }

    /// The principal submatrix on the (strictly increasing) index set `idx`.
    pub fn principal_submatrix(&self, idx: &[usize]) -> RMatrix<S> {
        let k = idx.len();
        let mut entries = Vec::with_capacity(k * k);
        for &i in idx {
            for &j in idx {
                entries.push(self.get(i, j).clone());
            }
        }
        RMatrix {
            rows: k,
            cols: k,
            entries,
            symmetric: self.symmetric,
            hermitian: self.hermitian,
        }
    }
}

/// Exact positive-semidefiniteness test.
///
/// Requires the symmetric (real) or hermitian (complex) flag to be set — PSD
/// is only meaningful for self-adjoint matrices, and the flag records that the
/// caller established structure. With the characteristic polynomial written
/// `det(tI−A) = tⁿ − c₁tⁿ⁻¹ + c₂tⁿ⁻² − …`, the `c_k` are the sums of `k×k`
/// principal minors, and a self-adjoint matrix (whose eigenvalues are real) is
/// PSD iff every `c_k ≥ 0`. This stays entirely in rational arithmetic —
/// no eigenvalue is ever computed.
pub fn is_psd_exact<S: Scalar>(a: &RMatrix<S>) -> Result<bool, NumericError> {
    if !a.is_flagged_symmetric() && !a.is_flagged_hermitian() {
        return Err(NumericError::StructureFlagRequired("symmetric/hermitian"));
    }
    let p = char_poly(a)?;
    let n = a.rows();
    for k in 1..=n {
        // c_k = (−1)^k · [tⁿ⁻ᵏ] det(tI−A)
        let mut ck = p.coeff(n - k);
        if k % 2 == 1 {
            ck = -ck;
        }
        if ck < Rat::zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
