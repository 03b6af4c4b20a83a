//! The square-root-free Gram matrix of a weighted rank-one family.

use num_traits::Signed;
use numeric_core::json::GenMatrix;
use numeric_core::{invert, RMatrix, Rat, Scalar};

use crate::frame::{spanning_rank_one_frame, FrameVectors};
use crate::{Field, WitnessError};

/// Gram matrix `G = V*A(y)⁻¹V` of the frame for weights `y`, where
/// `A(y) = Σ yᵢvᵢvᵢ*` and `V` collects the frame vectors as columns.
///
/// `G` equals the `UᵀU` of the obstruction argument with `uᵢ = A^{−1/2}vᵢ`,
/// but needs no matrix square root: `(uᵢ, uⱼ) = vᵢ*A⁻¹vⱼ` stays inside
/// exact rational arithmetic. The result is flagged symmetric (real) or
/// hermitian (complex) and is PSD by construction.
pub fn witness_gram(m: usize, field: Field, y: &[Rat]) -> Result<GenMatrix, WitnessError> {
    let frame = spanning_rank_one_frame(m, field)?;
    gram_of_frame(&frame, y)
}

/// Same as [`witness_gram`], reusing an already-built (and rank-verified)
/// frame.
pub(crate) fn gram_of_frame(frame: &FrameVectors, y: &[Rat]) -> Result<GenMatrix, WitnessError> {
    match frame {
        FrameVectors::Real(vs) => Ok(GenMatrix::Real(gram_from_vectors(vs, y)?)),
        FrameVectors::Complex(vs) => Ok(GenMatrix::Complex(gram_from_vectors(vs, y)?)),
    }
}

fn gram_from_vectors<S: Scalar>(
    vectors: &[Vec<S>],
    y: &[Rat],
) -> Result<RMatrix<S>, WitnessError> {
    let n = vectors.len();
    if y.len() != n {
        return Err(WitnessError::LengthMismatch { expected: n, got: y.len() });
    }
    if let Some(index) = y.iter().position(|w| !w.is_positive()) {
        return Err(WitnessError::NonPositiveWeight { index });
    }
    let m = vectors[0].len();
    // A(y) = Σ yᵢ vᵢvᵢ*, positive definite because the frame spans and the
    // weights are strictly positive; invert() still checks.
    let mut a = RMatrix::<S>::zero(m, m);
    for (vi, yi) in vectors.iter().zip(y) {
        for r in 0..m {
            for c in 0..m {
                let add = (vi[r].clone() * vi[c].conj()).mul_rat(yi);
                let sum = a.get(r, c).clone() + add;
                a.set(r, c, sum);
            }
        }
    }
    let a_inv = invert(&a)?;
    let v = RMatrix::new(
        m,
        n,
        (0..m)
            .flat_map(|r| vectors.iter().map(move |vi| vi[r].clone()))
            .collect(),
    )?;
    let g = v.conj_transpose().mul(&a_inv)?.mul(&v)?;
    let g = if S::IS_COMPLEX {
        g.into_hermitian()?
    } else {
        g.into_symmetric()?
    };
    Ok(g)
}
