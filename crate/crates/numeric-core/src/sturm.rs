//! Exact real-root counting via Sturm sequences.
//!
//! The polynomial is first reduced to its squarefree part (Sturm's theorem
//! counts *distinct* roots), then sign variations of the canonical Sturm chain
//! are compared at the interval endpoints. Signs at ±∞ come from leading
//! coefficients and degrees, so the whole computation is exact.

use num_traits::{Signed, Zero};

use crate::scalar::Rat;
use crate::unipoly::UniPoly;
use crate::NumericError;

/// Scales a polynomial by a positive rational so its coefficients are
/// coprime integers. Positive scaling preserves every sign in a Sturm chain
/// while keeping coefficient growth under control.
fn primitive_scale(p: UniPoly) -> UniPoly {
    use num::BigInt;
    use num_integer::Integer;
    if p.is_zero() {
        return p;
    }
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let gcd = p.coeffs().iter().fold(BigInt::from(0), |acc, c| {
        acc.gcd(&(c.numer() * (&lcm / c.denom())))
    });
    p.scale(&Rat::new(lcm, gcd))
}

/// Canonical Sturm chain `p, p′, −rem(...), …` of a squarefree polynomial.
fn sturm_chain(p: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![p.clone(), primitive_scale(p.derivative())];
    loop {
        let k = chain.len();
        if chain[k - 1].is_zero() {
            chain.pop();
            break;
        }
        if chain[k - 1].degree() == Some(0) {
            break;
        }
        let (_, r) = chain[k - 2]
            .divmod(&chain[k - 1])
            .expect("nonzero divisor in Sturm chain");
        if r.is_zero() {
            break;
        }
        chain.push(primitive_scale(r.neg()));
    }
    chain
}

#[derive(Clone, Copy, PartialEq)]
enum Sign {
    Neg,
    Zero,
    Pos,
}

fn sign_of(r: &Rat) -> Sign {
    if r.is_zero() {
        Sign::Zero
    } else if r.is_positive() {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

/// Counts sign variations in a sequence, skipping zeros.
fn variations(signs: impl Iterator<Item = Sign>) -> usize {
    let mut count = 0;
    let mut last: Option<Sign> = None;
    for s in signs {
        if s == Sign::Zero {
            continue;
        }
        if let Some(prev) = last {
            if prev != s {
                count += 1;
            }
        }
        last = Some(s);
    }
    count
}

fn variations_at(chain: &[UniPoly], t: &Rat) -> usize {
    variations(chain.iter().map(|p| sign_of(&p.eval(t))))
}

fn variations_at_pos_inf(chain: &[UniPoly]) -> usize {
    variations(chain.iter().map(|p| match p.leading() {
        None => Sign::Zero,
        Some(l) => sign_of(l),
    }))
}

fn variations_at_neg_inf(chain: &[UniPoly]) -> usize {
    variations(chain.iter().map(|p| match (p.leading(), p.degree()) {
        (Some(l), Some(d)) if d % 2 == 1 => sign_of(&-l.clone()),
        (Some(l), Some(_)) => sign_of(l),
        _ => Sign::Zero,
    }))
}

/// Exactly decides whether every complex root of `p` is real.
///
/// Computes the squarefree part `p / gcd(p, p′)` — so repeated roots are
/// handled — then compares the Sturm count of real roots over `(−∞, ∞)`
/// with the degree.
pub fn sturm_real_rooted(p: &UniPoly) -> Result<bool, NumericError> {
    if p.is_zero() {
        return Err(NumericError::ZeroPolynomial);
    }
    let q = p.squarefree_part()?;
    let Some(deg) = q.degree() else {
        return Err(NumericError::ZeroPolynomial);
    };
    if deg == 0 {
        return Ok(true);
    }
    let chain = sturm_chain(&q);
    let real_roots = variations_at_neg_inf(&chain) - variations_at_pos_inf(&chain);
    Ok(real_roots == deg)
}

/// Exactly decides whether all real roots of `p` lie in `(−∞, 0)`.
///
/// A root at zero fails (open-cone semantics), and roots in `(0, ∞)` are
/// counted by the Sturm variation difference `V(0) − V(∞)` on the squarefree
/// part. The caller is responsible for real-rootedness; this predicate only
/// inspects real roots.
pub fn sturm_roots_all_negative(p: &UniPoly) -> Result<bool, NumericError> {
    if p.is_zero() {
        return Err(NumericError::ZeroPolynomial);
    }
    if p.eval(&Rat::zero()).is_zero() {
        return Ok(false);
    }
    let q = p.squarefree_part()?;
    if q.degree() == Some(0) {
        return Ok(true);
    }
    let chain = sturm_chain(&q);
    let positive_roots = variations_at(&chain, &Rat::zero()) - variations_at_pos_inf(&chain);
    Ok(positive_roots == 0)
}
