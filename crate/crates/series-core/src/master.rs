//! The determinant polynomial `det(I − XA)` and the two master-theorem
//! coefficient maps it generates.

use std::collections::BTreeMap;

use numeric_core::{det_exact, RMatrix, Scalar};
use permanent_core::{Alpha, MultiIndex};

use crate::{SeriesError, SparsePoly, TruncatedSeries};

/// Default size cap for the 2^m principal-minor expansion.
pub const DEFAULT_MINOR_BOUND: usize = 12;

/// The exact polynomial `det(I − XA)` with `X = diag(x₁,…,x_m)`, expanded
/// over principal minors:
///
/// ```text
/// det(I − XA) = Σ_{S ⊆ [m]} (−1)^{|S|} det(A_S) Π_{i∈S} xᵢ
/// ```
///
/// Each variable appears with exponent at most one; the coefficient of the
/// squarefree monomial `x_S` is `(−1)^{|S|}` times the principal minor on
/// `S`.
pub fn det_i_minus_xa<S: Scalar>(a: &RMatrix<S>) -> Result<SparsePoly<S>, SeriesError> {
    det_i_minus_xa_bounded(a, DEFAULT_MINOR_BOUND)
}

/// [`det_i_minus_xa`] with an explicit size cap.
pub fn det_i_minus_xa_bounded<S: Scalar>(
    a: &RMatrix<S>,
    bound: usize,
) -> Result<SparsePoly<S>, SeriesError> {
    if !a.is_square() {
        return Err(SeriesError::Numeric(numeric_core::NumericError::NonSquare {
            rows: a.rows(),
            cols: a.cols(),
        }));
    }
    let m = a.rows();
    if m > bound {
        return Err(SeriesError::SizeOverBound { size: m, bound });
    }
    let mut out = SparsePoly::zero(m);
    for mask in 0u32..(1u32 << m) {
        let idx: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        let minor = det_exact(&a.principal_submatrix(&idx))?;
        let signed = if idx.len() % 2 == 1 { -minor } else { minor };
        let mut exps = vec![0u32; m];
        for &i in &idx {
            exps[i] = 1;
        }
        out.add_term(MultiIndex::new(exps), signed);
    }
    Ok(out)
}

/// Coefficients of `det(I − XA)^{−α}` up to total degree `max_deg`.
///
/// By the master theorem the value stored at key `𝐧` equals
/// `per_α(A[𝐧]) / 𝐧!` exactly.
pub fn macmahon_per_coeffs<S: Scalar>(
    a: &RMatrix<S>,
    alpha: &Alpha,
    max_deg: u32,
) -> Result<BTreeMap<MultiIndex, S>, SeriesError> {
    let f = TruncatedSeries::from_poly(&det_i_minus_xa(a)?, max_deg);
    Ok(f.pow(&-alpha.value().clone())?.into_coeffs())
}

/// Coefficients of `det(I − αXA)^{−1/α}` up to total degree `max_deg`,
/// for `α ≠ 0`.
///
/// The value stored at key `𝐧` equals `det_α(A[𝐧]) / 𝐧!` exactly.  The
/// identity degenerates at `α = 0` (the left side is a formal limit), so
/// zero is rejected rather than interpreted.
pub fn macmahon_det_coeffs<S: Scalar>(
    a: &RMatrix<S>,
    alpha: &Alpha,
    max_deg: u32,
) -> Result<BTreeMap<MultiIndex, S>, SeriesError> {
    if alpha.is_zero() {
        return Err(SeriesError::ZeroAlpha);
    }
    let scaled = a.scale_rat(alpha.value());
    let f = TruncatedSeries::from_poly(&det_i_minus_xa(&scaled)?, max_deg);
    let exponent = -alpha.value().recip();
    Ok(f.pow(&exponent)?.into_coeffs())
}
