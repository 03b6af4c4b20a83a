//! Quotient specifications and their two exact evaluation paths.

use num_traits::{One, Signed, Zero};

use hyperbolic::{
    certify_hyperbolic, cone_member, det_poly_symmetric, flatten_symmetric, partial_polarization,
    polarized_form, HyperbolicInstance,
};
use numeric_core::{RMatrix, Rat};
use permanent_core::{per_ryser, MultiIndex};
use series_core::SparsePoly;

use crate::ConcavityError;

/// Which cone and which evaluation path a [`QuotientSpec`] uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientMode {
    /// Product form `x₁⋯x_n` on the positive orthant; quotients of permanents.
    Bapat,
    /// Arbitrary certified hyperbolic instance; quotients of polarizations.
    Hyperbolic,
    /// Determinant over symmetric matrices, flattened; cone of positive
    /// definite matrices.
    MixedDiscriminant,
}

/// A concavity-test target: a certified hyperbolic instance together with
/// fixed cone vectors `b₀, b₁, …, b_k`, `k < d`.
///
/// Construction validates every fixed vector as an exact member of the open
/// cone and pre-differentiates the two polarization polynomials
/// `H(b₁,…,b_k, x,…,x)` and `H(b₀,…,b_k, x,…,x)`, so evaluations during a
/// scan are plain sparse-polynomial work.
#[derive(Clone, Debug)]
pub struct QuotientSpec {
    mode: QuotientMode,
    inst: HyperbolicInstance,
    fixed: Vec<Vec<Rat>>,
    num_poly: SparsePoly<Rat>,
    den_poly: SparsePoly<Rat>,
}

impl QuotientSpec {
    /// Permanent quotient on the positive orthant: the implicit form is
    /// `x₁⋯x_n` with direction `𝟏`, certified on construction.
    pub fn bapat(
        n: usize,
        fixed: Vec<Vec<Rat>>,
        trials: u64,
        seed: u64,
    ) -> Result<QuotientSpec, ConcavityError> {
        let h = SparsePoly::from_terms(n, [(MultiIndex::ones(n), Rat::one())])?;
        let e = vec![Rat::one(); n];
        let inst = certify_hyperbolic(&h, &e, trials, seed)?;
        QuotientSpec::with_instance(QuotientMode::Bapat, inst, fixed)
    }

    /// Polarization quotient on the cone of an already-certified instance.
    pub fn hyperbolic(
        inst: HyperbolicInstance,
        fixed: Vec<Vec<Rat>>,
    ) -> Result<QuotientSpec, ConcavityError> {
        QuotientSpec::with_instance(QuotientMode::Hyperbolic, inst, fixed)
    }

    /// Mixed-discriminant quotient: `det` in flattened symmetric-matrix
    /// variables, direction the identity, fixed vectors the flattened
    /// positive definite matrices `A₀, …, A_k`.
    pub fn mixed_discriminant(
        mats: &[RMatrix<Rat>],
        trials: u64,
        seed: u64,
    ) -> Result<QuotientSpec, ConcavityError> {
        let m = mats.first().ok_or(ConcavityError::NoBaseVector)?.rows();
        let h = det_poly_symmetric(m);
        let e = flatten_symmetric(&RMatrix::<Rat>::identity(m))?;
        let inst = certify_hyperbolic(&h, &e, trials, seed)?;
        let fixed = mats
            .iter()
            .map(flatten_symmetric)
            .collect::<Result<Vec<_>, _>>()?;
        QuotientSpec::with_instance(QuotientMode::MixedDiscriminant, inst, fixed)
    }

    fn with_instance(
        mode: QuotientMode,
        inst: HyperbolicInstance,
        fixed: Vec<Vec<Rat>>,
    ) -> Result<QuotientSpec, ConcavityError> {
        if fixed.is_empty() {
            return Err(ConcavityError::NoBaseVector);
        }
        let d = inst.degree();
        let k = fixed.len() - 1;
        if k as u32 >= d {
            return Err(ConcavityError::TooManyFixedVectors { k, degree: d });
        }
        for (index, b) in fixed.iter().enumerate() {
            if !cone_member(&inst, b)? {
                return Err(ConcavityError::NotInCone { index });
            }
        }
        let num_poly = partial_polarization(inst.h(), &fixed[1..])?;
        let den_poly = if (k + 1) as u32 == d {
            // All slots fixed: the denominator is the complete polarization,
            // a constant (the k = d−1 degenerate case, where f is linear).
            let c = polarized_form(inst.h(), &fixed)?;
            let mut p = SparsePoly::zero(inst.h().nvars());
            p.add_term(MultiIndex::new(vec![0; inst.h().nvars()]), c);
            p
        } else {
            partial_polarization(inst.h(), &fixed)?
        };
        Ok(QuotientSpec { mode, inst, fixed, num_poly, den_poly })
    }

    pub fn mode(&self) -> QuotientMode {
        self.mode
    }

    pub fn instance(&self) -> &HyperbolicInstance {
        &self.inst
    }

    /// The fixed vectors `b₀, …, b_k`.
    pub fn fixed(&self) -> &[Vec<Rat>] {
        &self.fixed
    }

    /// Number of variables of the underlying form.
    pub fn dimension(&self) -> usize {
        self.inst.h().nvars()
    }
}

/// The permanent quotient
/// `per(b₁,…,b_k, x,…,x) / per(b₀,b₁,…,b_k, x,…,x)` at a strictly positive
/// `x`, with the fixed vectors and the copies of `x` as matrix columns.
///
/// Only valid on [`QuotientMode::Bapat`] specs; this path never touches the
/// polarization machinery, so it can serve as its independent oracle.
pub fn bapat_quotient(spec: &QuotientSpec, x: &[Rat]) -> Result<Rat, ConcavityError> {
    if spec.mode != QuotientMode::Bapat {
        return Err(ConcavityError::WrongMode {
            expected: QuotientMode::Bapat,
            got: spec.mode,
        });
    }
    let n = spec.dimension();
    if x.len() != n {
        return Err(ConcavityError::LengthMismatch { expected: n, got: x.len() });
    }
    if x.iter().any(|v| !v.is_positive()) {
        return Err(ConcavityError::OutsideDomain);
    }
    let k = spec.fixed.len() - 1;
    let num = per_of_columns(&spec.fixed[1..], x, n - k)?;
    let den = per_of_columns(&spec.fixed, x, n - k - 1)?;
    if den.is_zero() {
        return Err(ConcavityError::ZeroDenominator);
    }
    Ok(num / den)
}

/// Permanent of the `n × n` matrix whose columns are the fixed vectors
/// followed by `copies` copies of `x`.
fn per_of_columns(fixed: &[Vec<Rat>], x: &[Rat], copies: usize) -> Result<Rat, ConcavityError> {
    let n = x.len();
    let rows: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            fixed
                .iter()
                .map(|b| b[i].clone())
                .chain(std::iter::repeat(x[i].clone()).take(copies))
                .collect()
        })
        .collect();
    Ok(per_ryser(&RMatrix::from_rows(rows)?)?)
}

/// The polarization quotient `H(b₁,…,b_k,x,…,x) / H(b₀,…,b_k,x,…,x)` at an
/// exact cone member `x`, using the spec's pre-differentiated polynomials.
///
/// Valid on every mode; specialized to the product form it agrees exactly
/// with [`bapat_quotient`].
pub fn hyperbolic_quotient(spec: &QuotientSpec, x: &[Rat]) -> Result<Rat, ConcavityError> {
    if x.len() != spec.dimension() {
        return Err(ConcavityError::LengthMismatch { expected: spec.dimension(), got: x.len() });
    }
    if !cone_member(&spec.inst, x)? {
        return Err(ConcavityError::OutsideDomain);
    }
    quotient_polys_at(spec, x)
}

/// Evaluates the pre-differentiated numerator/denominator pair without the
/// cone-membership gate — for callers that stay near a known interior point
/// (the float Hessian probe steps).
pub(crate) fn quotient_polys_at(spec: &QuotientSpec, x: &[Rat]) -> Result<Rat, ConcavityError> {
    let num = spec.num_poly.eval(x)?;
    let den = spec.den_poly.eval(x)?;
    if den.is_zero() {
        return Err(ConcavityError::ZeroDenominator);
    }
    Ok(num / den)
}

/// Mode-dispatched quotient value: the permanent path for Bapat specs, the
/// polarization path otherwise.
pub fn quotient(spec: &QuotientSpec, x: &[Rat]) -> Result<Rat, ConcavityError> {
    match spec.mode {
        QuotientMode::Bapat => bapat_quotient(spec, x),
        QuotientMode::Hyperbolic | QuotientMode::MixedDiscriminant => {
            hyperbolic_quotient(spec, x)
        }
    }
}

/// The elementary symmetric polynomial `e_k(x)`, exactly
/// (`e₀ = 1`, `e_n = Πxᵢ`).
pub fn elementary_symmetric(k: usize, x: &[Rat]) -> Result<Rat, ConcavityError> {
    if k > x.len() {
        return Err(ConcavityError::IndexOutOfRange { k, n: x.len() });
    }
    // Coefficients of Π(1 + xᵢt) up to degree k.
    let mut dp = vec![Rat::zero(); k + 1];
    dp[0] = Rat::one();
    for xi in x {
        for j in (1..=k).rev() {
            dp[j] = &dp[j] + &dp[j - 1] * xi;
        }
    }
    Ok(dp[k].clone())
}
