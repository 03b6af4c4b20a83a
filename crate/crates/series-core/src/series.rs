//! Power series truncated at a fixed total degree, with exact rational
//! coefficients and formal `log` / `exp` / rational powers.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use numeric_core::{Rat, Scalar};
use permanent_core::MultiIndex;

use crate::{SeriesError, SparsePoly};

/// A formal power series in `nvars` variables, stored up to (and
/// including) total degree `max_deg`.  Ring operations discard every term
/// of higher total degree, so results are exact truncations of the exact
/// series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<S: Scalar> {
    nvars: usize,
    max_deg: u32,
    terms: BTreeMap<MultiIndex, S>,
}

impl<S: Scalar> TruncatedSeries<S> {
    pub fn zero(nvars: usize, max_deg: u32) -> TruncatedSeries<S> {
        TruncatedSeries { nvars, max_deg, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize, max_deg: u32) -> TruncatedSeries<S> {
        let mut s = TruncatedSeries::zero(nvars, max_deg);
        s.terms.insert(MultiIndex::new(vec![0; nvars]), S::one());
        s
    }

    /// Truncates a polynomial to a series.
    pub fn from_poly(p: &SparsePoly<S>, max_deg: u32) -> TruncatedSeries<S> {
        let mut s = TruncatedSeries::zero(p.nvars(), max_deg);
        for (n, c) in p.terms() {
            if n.total() <= max_deg {
                s.terms.insert(n.clone(), c.clone());
            }
        }
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn max_total_degree(&self) -> u32 {
        self.max_deg
    }

    /// Term iteration in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &S)> {
        self.terms.iter()
    }

    /// Consumes the series, yielding its coefficient map.
    pub fn into_coeffs(self) -> BTreeMap<MultiIndex, S> {
        self.terms
    }

    pub fn coeff(&self, n: &MultiIndex) -> S {
        self.terms.get(n).cloned().unwrap_or_else(S::zero)
    }

    pub fn constant_term(&self) -> S {
        self.coeff(&MultiIndex::new(vec![0; self.nvars]))
    }

    fn add_term(&mut self, n: MultiIndex, c: S) {
        if c.is_zero() || n.total() > self.max_deg {
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

    pub fn add(&self, rhs: &TruncatedSeries<S>) -> Result<TruncatedSeries<S>, SeriesError> {
        self.check_compat(rhs)?;
        let mut out = self.clone();
        for (n, c) in rhs.terms() {
            out.add_term(n.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &TruncatedSeries<S>) -> Result<TruncatedSeries<S>, SeriesError> {
        self.check_compat(rhs)?;
        let mut out = self.clone();
        for (n, c) in rhs.terms() {
            out.add_term(n.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn scale_rat(&self, r: &Rat) -> TruncatedSeries<S> {
        if r.is_zero() {
            return TruncatedSeries::zero(self.nvars, self.max_deg);
        }
        let terms =
            self.terms.iter().map(|(n, c)| (n.clone(), c.mul_rat(r))).collect();
        TruncatedSeries { nvars: self.nvars, max_deg: self.max_deg, terms }
    }

    /// Truncating product.
    pub fn mul(&self, rhs: &TruncatedSeries<S>) -> Result<TruncatedSeries<S>, SeriesError> {
        self.check_compat(rhs)?;
        let mut out = TruncatedSeries::zero(self.nvars, self.max_deg);
        for (n, c) in self.terms() {
            let dn = n.total();
            if dn > self.max_deg {
                continue;
            }
            for (m, d) in rhs.terms() {
                if dn + m.total() > self.max_deg {
                    // rhs iterates in graded order: every later term is at
                    // least as deep, so the whole tail is out of range.
                    break;
                }
                let sum: Vec<u32> =
                    n.parts().iter().zip(m.parts()).map(|(a, b)| a + b).collect();
                out.add_term(MultiIndex::new(sum), c.clone() * d.clone());
            }
        }
        Ok(out)
    }

    /// Formal logarithm of a series with constant term 1:
    /// `log(1 + u) = Σ_{k≥1} (−1)^{k+1} u^k / k`.
    pub fn log(&self) -> Result<TruncatedSeries<S>, SeriesError> {
        if !self.constant_term().is_one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let mut u = self.clone();
        u.add_term(MultiIndex::new(vec![0; self.nvars]), -S::one());
        let mut out = TruncatedSeries::zero(self.nvars, self.max_deg);
        let mut upow = u.clone();
        for k in 1..=self.max_deg {
            if upow.terms.is_empty() {
                break;
            }
            let w = Rat::new(
                if k % 2 == 1 { 1.into() } else { (-1).into() },
                i64::from(k).into(),
            );
            out = out.add(&upow.scale_rat(&w))?;
            if k < self.max_deg {
                upow = upow.mul(&u)?;
            }
        }
        Ok(out)
    }

    /// Formal exponential of a series with constant term 0:
    /// `exp(u) = Σ_{k≥0} u^k / k!`.
    pub fn exp(&self) -> Result<TruncatedSeries<S>, SeriesError> {
        if !self.constant_term().is_zero() {
            return Err(SeriesError::ConstantTermNotZero);
        }
        let mut out = TruncatedSeries::one(self.nvars, self.max_deg);
        let mut upow = self.clone();
        let mut kfact = Rat::one();
        for k in 1..=self.max_deg {
            if upow.terms.is_empty() {
                break;
            }
            kfact *= numeric_core::rint(i64::from(k));
            out = out.add(&upow.scale_rat(&kfact.recip()))?;
            if k < self.max_deg {
                upow = upow.mul(self)?;
            }
        }
        Ok(out)
    }

    /// `f^e = exp(e · log f)` for a rational exponent and constant term 1.
    pub fn pow(&self, e: &Rat) -> Result<TruncatedSeries<S>, SeriesError> {
        if !self.constant_term().is_one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        if e.is_zero() {
            return Ok(TruncatedSeries::one(self.nvars, self.max_deg));
        }
        self.log()?.scale_rat(e).exp()
    }

    fn check_compat(&self, rhs: &TruncatedSeries<S>) -> Result<(), SeriesError> {
        if self.nvars != rhs.nvars {
            return Err(SeriesError::VarMismatch { left: self.nvars, right: rhs.nvars });
        }
        debug_assert_eq!(self.max_deg, rhs.max_deg, "mixed truncation depths");
        Ok(())
    }
}
