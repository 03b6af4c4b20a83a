//! Directional derivatives and polarized forms of homogeneous polynomials.

use num_bigint::BigInt;
use num_traits::Zero;

use numeric_core::Rat;
use permanent_core::MultiIndex;
use series_core::SparsePoly;

use crate::HyperbolicError;

/// `D_v h = Σᵢ vᵢ · ∂h/∂xᵢ`, the derivative of `h` in direction `v`.
///
/// Drops the degree of every term by exactly one; the derivative of a
/// nonconstant homogeneous polynomial is homogeneous again (or zero).
pub fn directional_derivative(
    h: &SparsePoly<Rat>,
    v: &[Rat],
) -> Result<SparsePoly<Rat>, HyperbolicError> {
    if v.len() != h.nvars() {
        return Err(HyperbolicError::LengthMismatch { expected: h.nvars(), got: v.len() });
    }
    let mut out = SparsePoly::zero(h.nvars());
    for (i, vi) in v.iter().enumerate() {
        if vi.is_zero() {
            continue;
        }
        out = out.add(&h.partial(i).scale(vi))?;
    }
    Ok(out)
}

/// The complete polarized form `H(v₁,…,v_d) = (1/d!)·D_{v₁}⋯D_{v_d} h` of a
/// homogeneous degree-`d` polynomial, evaluated on exactly `d` vectors.
///
/// `H` is symmetric and multilinear in its arguments and satisfies
/// `H(v,…,v) = h(v)` on the diagonal.  For the product form `h = x₁⋯x_n`
/// it equals `per(v₁,…,v_n)/n!` with the vectors as matrix columns.
pub fn polarized_form(h: &SparsePoly<Rat>, vs: &[Vec<Rat>]) -> Result<Rat, HyperbolicError> {
    let d = degree_of(h)?;
    if vs.len() != d as usize {
        return Err(HyperbolicError::VectorCount { degree: d, got: vs.len() });
    }
    let mut g = h.clone();
    for v in vs {
        g = directional_derivative(&g, v)?;
    }
    // After d directional derivatives of a degree-d form only the constant
    // term can survive.
    let c = g.coeff(&MultiIndex::new(vec![0; h.nvars()]));
    Ok(c / Rat::from_integer(factorial(d)))
}

/// The partial polarization `((d−k)!/d!)·D_{b₁}⋯D_{b_k} h`, a homogeneous
/// polynomial of degree `d − k` in the original variables (`k < d`).
///
/// Evaluating the result at `u` equals [`polarized_form`] with `u` repeated
/// in the remaining `d − k` slots; `k = 0` returns `h` unchanged.
pub fn partial_polarization(
    h: &SparsePoly<Rat>,
    bs: &[Vec<Rat>],
) -> Result<SparsePoly<Rat>, HyperbolicError> {
    let d = degree_of(h)?;
    let k = bs.len();
    if k as u32 >= d {
        return Err(HyperbolicError::TooManyFixedVectors { k, degree: d });
    }
    let mut g = h.clone();
    for b in bs {
        g = directional_derivative(&g, b)?;
    }
    let scale = Rat::new(factorial(d - k as u32), factorial(d));
    Ok(g.scale(&scale))
}

/// Degree of a nonzero homogeneous polynomial.
pub(crate) fn degree_of(h: &SparsePoly<Rat>) -> Result<u32, HyperbolicError> {
    if h.is_zero() {
        return Err(HyperbolicError::ZeroPolynomial);
    }
    h.homogeneous_degree().ok_or(HyperbolicError::NotHomogeneous)
}

pub(crate) fn factorial(d: u32) -> BigInt {
    (1..=i64::from(d)).map(BigInt::from).product()
}
