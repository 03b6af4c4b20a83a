use numeric_core::{RMatrix, Scalar};

use crate::{MultiIndex, PermanentError};

/// Block dilation `A[𝐧]`: replaces the `(i,j)` entry of an `m × m` matrix by
/// a constant `nᵢ × nⱼ` block, producing a `|𝐧| × |𝐧|` matrix.
///
/// Rows/columns with `nᵢ = 0` vanish. Dilation preserves symmetry and
/// hermitian-ness, and it preserves positive semidefiniteness: `A[𝐧]` is the
/// Gram-like compression `Dᵀ A D` pattern of `A` along the block structure.
pub fn dilate<S: Scalar>(a: &RMatrix<S>, n: &MultiIndex) -> Result<RMatrix<S>, PermanentError> {
    if !a.is_square() {
        return Err(numeric_core::NumericError::NonSquare {
            rows: a.rows(),
            cols: a.cols(),
        }
        .into());
    }
    let m = a.rows();
    if n.len() != m {
        return Err(PermanentError::LengthMismatch {
            expected: m,
            got: n.len(),
        });
    }
    let total = n.total() as usize;
    // block_of[r] = source index of dilated row r
    let mut block_of = Vec::with_capacity(total);
    for (i, &p) in n.parts().iter().enumerate() {
        block_of.extend(std::iter::repeat(i).take(p as usize));
    }
    let mut entries = Vec::with_capacity(total * total);
    for &bi in &block_of {
        for &bj in &block_of {
            entries.push(a.get(bi, bj).clone());
        }
    }
    let out = RMatrix::new(total, total, entries)?;
    // Structure flags carry over: replication preserves A = Aᵀ / A = Aᴴ.
    let out = if a.is_flagged_symmetric() {
        out.into_symmetric()?
    } else if a.is_flagged_hermitian() {
        out.into_hermitian()?
    } else {
        out
    };
    Ok(out)
}
