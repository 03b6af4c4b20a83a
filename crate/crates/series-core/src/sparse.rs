//! Exact sparse polynomials in several variables.

use std::collections::BTreeMap;

use numeric_core::Scalar;
use permanent_core::MultiIndex;

use crate::SeriesError;

/// A sparse polynomial with scalar coefficients, terms keyed by exponent
/// vector in graded-lexicographic order.  Zero coefficients are never
/// stored, so equality of maps is equality of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly<S: Scalar> {
    nvars: usize,
    terms: BTreeMap<MultiIndex, S>,
}

impl<S: Scalar> SparsePoly<S> {
    /// The zero polynomial in `nvars` variables.
    pub fn zero(nvars: usize) -> SparsePoly<S> {
        SparsePoly { nvars, terms: BTreeMap::new() }
    }

    /// The constant polynomial 1.
    pub fn one(nvars: usize) -> SparsePoly<S> {
        let mut p = SparsePoly::zero(nvars);
        p.terms.insert(MultiIndex::new(vec![0; nvars]), S::one());
        p
    }

    /// Builds from `(exponents, coefficient)` pairs, summing duplicates and
    /// dropping zeros.
    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (MultiIndex, S)>,
    ) -> Result<SparsePoly<S>, SeriesError> {
        let mut p = SparsePoly::zero(nvars);
        for (n, c) in terms {
            if n.len() != nvars {
                return Err(SeriesError::ExponentLength { expected: nvars, got: n.len() });
            }
            p.add_term(n, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Term iteration in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &S)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient at `n` (zero when absent).
    pub fn coeff(&self, n: &MultiIndex) -> S {
        self.terms.get(n).cloned().unwrap_or_else(S::zero)
    }

    /// Adds `c · x^n` in place.
    pub fn add_term(&mut self, n: MultiIndex, c: S) {
        debug_assert_eq!(n.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(n) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Largest total degree of any term, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|n| n.total()).max()
    }

    /// `Some(d)` when every term has total degree exactly `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut deg = None;
        for n in self.terms.keys() {
            match deg {
                None => deg = Some(n.total()),
                Some(d) if d == n.total() => {}
                Some(_) => return None,
            }
        }
        deg
    }

    pub fn add(&self, rhs: &SparsePoly<S>) -> Result<SparsePoly<S>, SeriesError> {
        self.check_vars(rhs)?;
        let mut out = self.clone();
        for (n, c) in rhs.terms() {
            out.add_term(n.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> SparsePoly<S> {
        let terms = self.terms.iter().map(|(n, c)| (n.clone(), -c.clone())).collect();
        SparsePoly { nvars: self.nvars, terms }
    }

    pub fn scale(&self, s: &S) -> SparsePoly<S> {
        if s.is_zero() {
            return SparsePoly::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(n, c)| (n.clone(), c.clone() * s.clone()))
            .collect();
        SparsePoly { nvars: self.nvars, terms }
    }

    pub fn mul(&self, rhs: &SparsePoly<S>) -> Result<SparsePoly<S>, SeriesError> {
        self.check_vars(rhs)?;
        let mut out = SparsePoly::zero(self.nvars);
        for (n, c) in self.terms() {
            for (m, d) in rhs.terms() {
                let sum: Vec<u32> =
                    n.parts().iter().zip(m.parts()).map(|(a, b)| a + b).collect();
                out.add_term(MultiIndex::new(sum), c.clone() * d.clone());
            }
        }
        Ok(out)
    }

    /// Exact evaluation at a point.
    pub fn eval(&self, x: &[S]) -> Result<S, SeriesError> {
        if x.len() != self.nvars {
            return Err(SeriesError::ExponentLength { expected: self.nvars, got: x.len() });
        }
        let mut acc = S::zero();
        for (n, c) in self.terms() {
            let mut t = c.clone();
            for (xi, &e) in x.iter().zip(n.parts()) {
                for _ in 0..e {
                    t = t * xi.clone();
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> SparsePoly<S> {
        let mut out = SparsePoly::zero(self.nvars);
        for (n, c) in self.terms() {
            let e = n.parts()[i];
            if e == 0 {
                continue;
            }
            let mut parts = n.parts().to_vec();
            parts[i] = e - 1;
            out.add_term(MultiIndex::new(parts), c.mul_rat(&numeric_core::rint(i64::from(e))));
        }
        out
    }

    /// Coefficients of the univariate restriction `t ↦ p(base + t·dir)`,
    /// ascending in `t`.  The vector has length `total_degree + 1` (a single
    /// `[0]` for the zero polynomial).
    pub fn restrict_line(&self, base: &[S], dir: &[S]) -> Result<Vec<S>, SeriesError> {
        if base.len() != self.nvars {
            return Err(SeriesError::ExponentLength { expected: self.nvars, got: base.len() });
        }
        if dir.len() != self.nvars {
            return Err(SeriesError::ExponentLength { expected: self.nvars, got: dir.len() });
        }
        let deg = self.total_degree().unwrap_or(0) as usize;
        let mut out = vec![S::zero(); deg + 1];
        for (n, c) in self.terms() {
            // Expand Π (baseᵢ + t·dirᵢ)^{eᵢ} one factor at a time.
            let mut poly = vec![c.clone()];
            for (i, &e) in n.parts().iter().enumerate() {
                for _ in 0..e {
                    let mut next = vec![S::zero(); poly.len() + 1];
                    for (k, coef) in poly.iter().enumerate() {
                        next[k] = next[k].clone() + coef.clone() * base[i].clone();
                        next[k + 1] = next[k + 1].clone() + coef.clone() * dir[i].clone();
                    }
                    poly = next;
                }
            }
            for (k, coef) in poly.into_iter().enumerate() {
                out[k] = out[k].clone() + coef;
            }
        }
        Ok(out)
    }

    fn check_vars(&self, rhs: &SparsePoly<S>) -> Result<(), SeriesError> {
        if self.nvars == rhs.nvars {
            Ok(())
        } else {
            Err(SeriesError::VarMismatch { left: self.nvars, right: rhs.nvars })
        }
    }
}
