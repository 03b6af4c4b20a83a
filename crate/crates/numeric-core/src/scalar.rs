use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::BigRational;
use num_traits::{One, Zero};

use crate::NumericError;

/// Exact rational scalar: arbitrary-precision numerator and denominator,
/// always stored in lowest terms with positive denominator (enforced by
/// `num::BigRational` on every operation).
pub type Rat = BigRational;

/// Exact complex-rational scalar `re + im·i`.
///
/// Conjugation is an involution and `|z|² = re² + im²` is a nonnegative
/// [`Rat`], so hermitian Gram constructions stay inside exact arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CRat {
    pub re: Rat,
    pub im: Rat,
}

impl CRat {
    pub fn new(re: Rat, im: Rat) -> CRat {
        CRat { re, im }
    }

    pub fn from_rat(re: Rat) -> CRat {
        CRat {
            re,
            im: Rat::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> CRat {
        CRat {
            re: Rat::zero(),
            im: Rat::one(),
        }
    }

    pub fn conj(&self) -> CRat {
        CRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `|z|² = re² + im²`, an exact nonnegative rational.
    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Display for CRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -self.im.clone())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

use num_traits::Signed;

impl Add for CRat {
    type Output = CRat;
    fn add(self, rhs: CRat) -> CRat {
        CRat {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for CRat {
    type Output = CRat;
    fn sub(self, rhs: CRat) -> CRat {
        CRat {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul for CRat {
    type Output = CRat;
    fn mul(self, rhs: CRat) -> CRat {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        CRat { re, im }
    }
}

impl Neg for CRat {
    type Output = CRat;
    fn neg(self) -> CRat {
        CRat {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Zero for CRat {
    fn zero() -> CRat {
        CRat {
            re: Rat::zero(),
            im: Rat::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for CRat {
    fn one() -> CRat {
        CRat {
            re: Rat::one(),
            im: Rat::zero(),
        }
    }
}

/// The scalar interface shared by [`Rat`] and [`CRat`].
///
/// All matrix and polynomial code in this workspace is generic over `Scalar`,
/// so the real and complex-hermitian pipelines are the same code. The trait
/// deliberately exposes only exact operations; `try_div` is the sole partial
/// operation (division by zero).
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Whether this scalar type carries an imaginary part.
    const IS_COMPLEX: bool;

    fn from_rat(r: Rat) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(n.into()))
    }

    fn re(&self) -> Rat;
    fn im(&self) -> Rat;

    /// The value as a rational, if its imaginary part is zero.
    fn to_rat(&self) -> Option<Rat> {
        if self.im().is_zero() {
            Some(self.re())
        } else {
            None
        }
    }

    /// Complex conjugate (identity on rationals).
    fn conj(&self) -> Self;

    /// Multiplication by a rational scale factor.
    fn mul_rat(&self, r: &Rat) -> Self;

    /// Exact field division; errors on a zero divisor.
    fn try_div(&self, d: &Self) -> Result<Self, NumericError>;

    /// Exact determinant of an `n × n` row-major block.
    ///
    /// Internal hook used by [`crate::det_exact`]: each scalar type routes to
    /// a fraction-free Bareiss elimination over its ring of integers
    /// (`BigInt` for rationals, Gaussian integers for complex rationals).
    fn det_block(n: usize, entries: &[Self]) -> Self;
}

impl Scalar for Rat {
    const IS_COMPLEX: bool = false;

    fn from_rat(r: Rat) -> Rat {
        r
    }

    fn re(&self) -> Rat {
        self.clone()
    }

    fn im(&self) -> Rat {
        Rat::zero()
    }

    fn conj(&self) -> Rat {
        self.clone()
    }

    fn mul_rat(&self, r: &Rat) -> Rat {
        self * r
    }

    fn try_div(&self, d: &Rat) -> Result<Rat, NumericError> {
        if d.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        Ok(self / d)
    }

    fn det_block(n: usize, entries: &[Rat]) -> Rat {
        crate::linalg::det_block_rat(n, entries)
    }
}

impl Scalar for CRat {
    const IS_COMPLEX: bool = true;

    fn from_rat(r: Rat) -> CRat {
        CRat::from_rat(r)
    }

    fn re(&self) -> Rat {
        self.re.clone()
    }

    fn im(&self) -> Rat {
        self.im.clone()
    }

    fn conj(&self) -> CRat {
        CRat::conj(self)
    }

    fn mul_rat(&self, r: &Rat) -> CRat {
        CRat {
            re: &self.re * r,
            im: &self.im * r,
        }
    }

    fn try_div(&self, d: &CRat) -> Result<CRat, NumericError> {
        let n = d.norm_sqr();
        if n.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        // (a+bi)/(c+di) = (a+bi)(c-di)/|c+di|²
        let prod = self.clone() * d.conj();
        Ok(CRat {
            re: prod.re / &n,
            im: prod.im / &n,
        })
    }

    fn det_block(n: usize, entries: &[CRat]) -> CRat {
        crate::linalg::det_block_crat(n, entries)
    }
}
