//! Mixed discriminants and the determinant as a hyperbolic polynomial in
//! symmetric-matrix variables.

use num_traits::One;

use numeric_core::{det_exact, rint, RMatrix, Rat, Scalar};
use permanent_core::{cycle_count, MultiIndex};
use series_core::SparsePoly;

use crate::polarize::factorial;
use crate::HyperbolicError;

/// The mixed discriminant
/// `H(A₁,…,A_n) = (1/n!)·∂ⁿ/∂x₁⋯∂x_n det(x₁A₁ + ⋯ + x_nA_n)`,
/// computed exactly through the polarization identity
///
/// ```text
/// H(A₁,…,A_n) = (1/n!)·Σ_{S⊆[n]} (−1)^{n−|S|} det(Σ_{i∈S} Aᵢ).
/// ```
///
/// Takes `n` matrices, each `n × n` (symmetric or hermitian data both work;
/// the identity itself is algebraic).  `H(A,…,A) = det(A)`, and `H` is
/// multilinear in every slot.
pub fn mixed_discriminant<S: Scalar>(mats: &[RMatrix<S>]) -> Result<S, HyperbolicError> {
    let n = mats.len();
    if n == 0 {
        return Err(HyperbolicError::EmptyFamily);
    }
    for (index, m) in mats.iter().enumerate() {
        if m.rows() != n || m.cols() != n {
            return Err(HyperbolicError::WrongShape {
                index,
                rows: m.rows(),
                cols: m.cols(),
                expected: n,
            });
        }
    }
    let mut acc = S::zero();
    for mask in 0u64..(1 << n) {
        let mut sum = RMatrix::<S>::zero(n, n);
        for (i, m) in mats.iter().enumerate() {
            if mask >> i & 1 == 1 {
                sum = sum.add(m)?;
            }
        }
        let d = det_exact(&sum)?;
        if (n - (mask.count_ones() as usize)) % 2 == 0 {
            acc = acc + d;
        } else {
            acc = acc - d;
        }
    }
    Ok(acc.mul_rat(&Rat::new(One::one(), factorial(n as u32))))
}

/// Number of distinct entries of a symmetric `m × m` matrix.
fn sym_dim(m: usize) -> usize {
    m * (m + 1) / 2
}

/// Flat index of entry `(i, j)`, `i ≤ j`, in row-major upper-triangle order:
/// `(0,0), (0,1), …, (0,m−1), (1,1), …, (m−1,m−1)`.
fn sym_index(m: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    // Rows 0..i contribute m, m−1, … entries: i·(2m − i + 1)/2 in total.
    i * (2 * m - i + 1) / 2 + (j - i)
}

/// `det(X)` as a polynomial in the `m(m+1)/2` distinct entries of a
/// symmetric `m × m` matrix of variables, with the convention
/// `x_{ij} = x_{ji}` (both positions read the same flattened variable).
///
/// Homogeneous of degree `m`; hyperbolic with respect to
/// [`flatten_symmetric`]`(I)`, with hyperbolicity cone the positive definite
/// matrices — the textbook example of a hyperbolic polynomial alongside
/// `x₁⋯x_n` and the Lorentz form.
pub fn det_poly_symmetric(m: usize) -> SparsePoly<Rat> {
    use itertools::Itertools;

    let nv = sym_dim(m);
    let mut poly = SparsePoly::zero(nv);
    if m == 0 {
        poly.add_term(MultiIndex::new(Vec::new()), Rat::one());
        return poly;
    }
    for sigma in (0..m).permutations(m) {
        let cycles = cycle_count(&sigma).expect("permutations() yields valid permutations");
        let sign = if (m - cycles) % 2 == 0 { 1 } else { -1 };
        let mut exp = vec![0u32; nv];
        for (i, &j) in sigma.iter().enumerate() {
            exp[sym_index(m, i, j)] += 1;
        }
        poly.add_term(MultiIndex::new(exp), rint(sign));
    }
    poly
}

/// The upper triangle of a symmetric matrix in the row-major order of
/// [`det_poly_symmetric`]'s variables.  Rejects non-symmetric input exactly.
pub fn flatten_symmetric(a: &RMatrix<Rat>) -> Result<Vec<Rat>, HyperbolicError> {
    let m = a.rows();
    if a.cols() != m {
        return Err(HyperbolicError::NotSymmetric);
    }
    let mut flat = Vec::with_capacity(sym_dim(m));
    for i in 0..m {
        for j in i..m {
            if a.get(i, j) != a.get(j, i) {
                return Err(HyperbolicError::NotSymmetric);
            }
            flat.push(a.get(i, j).clone());
        }
    }
    Ok(flat)
}

/// Inverse of [`flatten_symmetric`]: rebuilds the symmetric `m × m` matrix
/// from its flattened upper triangle (`v` must have length `m(m+1)/2`).
pub fn sym_matrix_from_flat(m: usize, v: &[Rat]) -> Result<RMatrix<Rat>, HyperbolicError> {
    if v.len() != sym_dim(m) {
        return Err(HyperbolicError::LengthMismatch { expected: sym_dim(m), got: v.len() });
    }
    let mut a = RMatrix::<Rat>::zero(m, m);
    for i in 0..m {
        for j in i..m {
            let x = v[sym_index(m, i, j)].clone();
            a.set(i, j, x.clone());
            a.set(j, i, x);
        }
    }
    Ok(a)
}
