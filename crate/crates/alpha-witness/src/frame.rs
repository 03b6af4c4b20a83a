//! Spanning families of rank-one PSD matrices, given as their generating
//! vectors.

use num_traits::One;
use numeric_core::{rank, CRat, RMatrix, Rat, Scalar};

use crate::{Field, WitnessError};

/// The generating vectors `v₁, …, v_n` of a rank-one family `vᵢvᵢ*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrameVectors {
    Real(Vec<Vec<Rat>>),
    Complex(Vec<Vec<CRat>>),
}

impl FrameVectors {
    /// Number of vectors in the frame.
    pub fn len(&self) -> usize {
        match self {
            FrameVectors::Real(v) => v.len(),
            FrameVectors::Complex(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Ambient dimension `m` of the vectors.
    pub fn ambient_dim(&self) -> usize {
        match self {
            FrameVectors::Real(v) => v.first().map_or(0, Vec::len),
            FrameVectors::Complex(v) => v.first().map_or(0, Vec::len),
        }
    }

    pub fn field(&self) -> Field {
        match self {
            FrameVectors::Real(_) => Field::Real,
            FrameVectors::Complex(_) => Field::Complex,
        }
    }
}

fn unit<S: Scalar>(m: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); m];
    v[i] = S::one();
    v
}

fn pair_sum<S: Scalar>(m: usize, i: usize, j: usize, scale: S) -> Vec<S> {
    let mut v = vec![S::zero(); m];
    v[i] = S::one();
    v[j] = scale;
    v
}

/// The standard spanning frame: `{eᵢ} ∪ {eᵢ+eⱼ : i<j}` over the reals
/// (`m(m+1)/2` vectors, outer products spanning the symmetric matrices),
/// plus `{eᵢ + i·eⱼ : i<j}` over the complexes (`m²` vectors, outer
/// products spanning the hermitian matrices). Spanning is not assumed: the
/// flattened outer products are rank-checked exactly before returning.
pub fn spanning_rank_one_frame(m: usize, field: Field) -> Result<FrameVectors, WitnessError> {
    if m < 1 {
        return Err(WitnessError::InvalidM { m: m as u64 });
    }
    let frame = match field {
        Field::Real => {
            let mut vs: Vec<Vec<Rat>> = (0..m).map(|i| unit(m, i)).collect();
            for i in 0..m {
                for j in (i + 1)..m {
                    vs.push(pair_sum(m, i, j, Rat::one()));
                }
            }
            FrameVectors::Real(vs)
        }
        Field::Complex => {
            let mut vs: Vec<Vec<CRat>> = (0..m).map(|i| unit(m, i)).collect();
            for i in 0..m {
                for j in (i + 1)..m {
                    vs.push(pair_sum(m, i, j, CRat::one()));
                }
            }
            for i in 0..m {
                for j in (i + 1)..m {
                    vs.push(pair_sum(m, i, j, CRat::i()));
                }
            }
            FrameVectors::Complex(vs)
        }
    };
    verify_spanning(&frame)?;
    Ok(frame)
}

/// Exact rank check: the outer products `vᵢvᵢ*`, flattened to real
/// coordinate vectors, must span Sym(m) (dimension `m(m+1)/2`) or Herm(m)
/// as a real space (dimension `m²`).
fn verify_spanning(frame: &FrameVectors) -> Result<(), WitnessError> {
    let m = frame.ambient_dim();
    let (rows, dim): (Vec<Vec<Rat>>, usize) = match frame {
        FrameVectors::Real(vs) => {
            let dim = m * (m + 1) / 2;
            (vs.iter().map(|v| flatten_outer_real(v)).collect(), dim)
        }
        FrameVectors::Complex(vs) => {
            let dim = m * m;
            (vs.iter().map(|v| flatten_outer_complex(v)).collect(), dim)
        }
    };
    let got = rank(&RMatrix::from_rows(rows)?);
    if got != dim {
        return Err(WitnessError::FrameRankDeficient { expected: dim, got });
    }
    Ok(())
}

/// Upper triangle of `vvᵀ`, row-major.
fn flatten_outer_real(v: &[Rat]) -> Vec<Rat> {
    let m = v.len();
    let mut flat = Vec::with_capacity(m * (m + 1) / 2);
    for i in 0..m {
        for j in i..m {
            flat.push(&v[i] * &v[j]);
        }
    }
    flat
}

/// Real coordinates of the hermitian matrix `vv*`: the (real) diagonal,
/// then the real and imaginary parts of the strict upper triangle.
fn flatten_outer_complex(v: &[CRat]) -> Vec<Rat> {
    let m = v.len();
    let mut flat = Vec::with_capacity(m * m);
    for vi in v {
        flat.push(vi.norm_sqr());
    }
    for i in 0..m {
        for j in (i + 1)..m {
            let h = v[i].clone() * v[j].conj();
            flat.push(h.re);
            flat.push(h.im);
        }
    }
    flat
}
