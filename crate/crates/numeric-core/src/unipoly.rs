use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::scalar::Rat;
use crate::NumericError;

/// Univariate polynomial with exact rational coefficients, ascending degree.
///
/// The zero polynomial is represented by an empty coefficient vector; all
/// constructors trim trailing zeros so the leading coefficient of a nonzero
/// polynomial is always nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> UniPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> UniPoly {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> UniPoly {
        UniPoly::new(vec![c])
    }

    /// `Π (t − rᵢ)` for the given roots.
    pub fn from_roots(roots: &[Rat]) -> UniPoly {
        let mut p = UniPoly::new(vec![Rat::one()]);
        for r in roots {
            p = p.mul(&UniPoly::new(vec![-r.clone(), Rat::one()]));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rat::from_integer((k as i64).into()))
            .collect();
        UniPoly::new(coeffs)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn add(&self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }

    pub fn sub(&self, rhs: &UniPoly) -> UniPoly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + a * b;
            }
        }
        UniPoly::new(coeffs)
    }

    pub fn scale(&self, f: &Rat) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c * f).collect())
    }

    /// Euclidean division: returns `(q, r)` with `self = q·rhs + r` and
    /// `deg r < deg rhs`. Exact over the rationals.
    pub fn divmod(&self, rhs: &UniPoly) -> Result<(UniPoly, UniPoly), NumericError> {
        if rhs.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        let mut rem = self.coeffs.clone();
        let d = rhs.coeffs.len() - 1;
        let lead = rhs.leading().expect("nonzero divisor");
        if rem.len() <= d {
            return Ok((UniPoly::zero(), UniPoly::new(rem)));
        }
        let mut quot = vec![Rat::zero(); rem.len() - d];
        for k in (d..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / lead;
            quot[k - d] = q.clone();
            for j in 0..=d {
                let sub = &q * &rhs.coeffs[j];
                rem[k - d + j] = &rem[k - d + j] - sub;
            }
        }
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, rhs: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b).expect("nonzero divisor in gcd loop");
            a = b;
            b = r;
        }
        match a.leading() {
            Some(l) if !l.is_one() => {
                let inv = Rat::one() / l;
                a.scale(&inv)
            }
            _ => a,
        }
    }

    /// The squarefree part `self / gcd(self, self′)`: same distinct roots,
    /// all with multiplicity one.
    pub fn squarefree_part(&self) -> Result<UniPoly, NumericError> {
        if self.is_zero() {
            return Err(NumericError::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        let (q, r) = self.divmod(&g)?;
        debug_assert!(r.is_zero(), "gcd must divide the polynomial exactly");
        Ok(q)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}·")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
