//! Deep expansion of `det(I − XG)^{−β}` in exact integer arithmetic.
//!
//! The generic [`TruncatedSeries`](crate::TruncatedSeries) engine carries a
//! `BigRational` per coefficient and is comfortable to total degree six or
//! so.  Hunting for the first *negative* coefficient can require total
//! degrees in the thirties, where two things must change:
//!
//! * **Keys**: exponent vectors pack into a single `u64` with the total
//!   degree in the topmost field, so unsigned comparison of keys coincides
//!   with graded-lexicographic comparison of monomials, and a sorted vector
//!   replaces the tree map.
//! * **Arithmetic**: all coefficients are pre-scaled to integers.  With
//!   `λ` the lcm of the entry denominators of `G` and `β = b/a`, the scaled
//!   coefficient `F_𝐧 = f_𝐧 · λ^{|𝐧|} a^{|𝐧|} |𝐧|!` of `f = det(I−XG)^{−β}`
//!   is an integer with the same sign as `f_𝐧`.
//!
//! Rather than powering the determinant polynomial, the scan uses the
//! Euler-operator recurrence.  Applying `θ = Σ xᵢ∂ᵢ` to `f = p^{−β}` gives
//! `p·θf = −β(θp)·f`; comparing coefficients at `x^𝐧` with `|𝐧| = d` yields
//!
//! ```text
//! F_𝐧 = − Σ_{s ≤ 𝐧} c_s · a^{|s|−1} (a(d−|s|) + b|s|) (d−1)!/(d−|s|)! · F_{𝐧−s}
//! ```
//!
//! where `c_s = (−1)^{|s|} det(G_S) λ^{|s|}` are the (integer) coefficients
//! of `p(λx) − 1`, supported on squarefree exponents of size at most
//! `rank G`.  Every bracket is a precomputable integer, so one layer of
//! total degree `d` is produced from the previous `rank G` layers by a
//! k-way merge of shifted streams — one stream per term of the determinant
//! polynomial — and scanned for a sign change before the next layer is
//! built.  Work is linear in the number of nonzero coefficients times the
//! number of determinant terms.
//!
//! [`power_coeff_at`] is a deliberately independent second path for single
//! coefficients: it convolves the binomial-weight expansion
//! `Σ_k C(−β,k) u^k` over the finite box `{𝐞 ≤ 𝐧}`, sharing no code with
//! the layer recurrence beyond the subset-coefficient setup.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use itertools::Itertools;
use num::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use numeric_core::{det_exact, rank, NumericError, RMatrix, Rat, Scalar};
use permanent_core::MultiIndex;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::SeriesError;

/// Outcome of a graded coefficient scan of `det(I − XG)^{−β}`.
#[derive(Clone, Debug)]
pub struct DetPowerScan {
    /// Number of series variables (the order of `G`).
    pub nvars: usize,
    /// The series is `det(I − XG)^{−β}` for this `β`.
    pub beta: Rat,
    /// Total degree through which coefficients were generated.
    pub max_total_degree: u32,
    /// Nonzero coefficients produced up to and including any hit.
    pub nonzero_coeffs: u64,
    /// The graded-lex-first index with a negative coefficient, with the
    /// exact coefficient value, or `None` if the scan exhausted its depth.
    pub first_negative: Option<(MultiIndex, Rat)>,
}

/// Packed exponent keys: total degree in the top field, then the exponents
/// in variable order, each in a `bits`-wide field.  Unsigned comparison of
/// keys is graded-lex comparison of monomials, and adding two keys adds
/// exponent vectors (no field overflows once both totals are ≤ `max_deg`).
#[derive(Clone, Copy, Debug)]
struct KeyCodec {
    nvars: usize,
    bits: u32,
}

impl KeyCodec {
    fn new(nvars: usize, max_deg: u32) -> Result<KeyCodec, SeriesError> {
        let bits = (32 - max_deg.leading_zeros()).max(1);
        if (nvars as u32 + 1) * bits > 64 {
            return Err(SeriesError::PackedKeyOverflow { nvars, degree: max_deg });
        }
        Ok(KeyCodec { nvars, bits })
    }

    fn pack(&self, exps: &[u32]) -> u64 {
        let mut key = 0u64;
        let mut total = 0u64;
        for &e in exps {
            key = key << self.bits | u64::from(e);
            total += u64::from(e);
        }
        key | total << (self.bits as usize * self.nvars)
    }

    fn unpack(&self, key: u64) -> MultiIndex {
        let mask = (1u64 << self.bits) - 1;
        let mut exps = vec![0u32; self.nvars];
        for (i, e) in exps.iter_mut().rev().enumerate() {
            *e = ((key >> (self.bits as usize * i)) & mask) as u32;
        }
        MultiIndex::new(exps)
    }
}

fn factorial(n: u32) -> BigInt {
    let mut f = BigInt::one();
    for k in 2..=i64::from(n) {
        f *= BigInt::from(k);
    }
    f
}

/// The integer coefficients of `p(λx) − 1` where `p(x) = det(I − XG)` and
/// `λ` is the lcm of the entry denominators of `G`: for every nonempty
/// `S ⊆ [m]` with `|S| ≤ rank G`, the coefficient
/// `c_S = (−1)^{|S|} det(G_S) λ^{|S|}` at the squarefree exponent `1_S`.
/// Larger subsets have singular principal submatrices and vanish.
fn integer_subset_terms<S: Scalar>(
    g: &RMatrix<S>,
) -> Result<(BigInt, Vec<(Vec<u32>, BigInt)>), SeriesError> {
    let m = g.rows();
    let mut lambda = BigInt::one();
    for c in g.entries() {
        lambda = lambda.lcm(c.re().denom());
        if S::IS_COMPLEX {
            lambda = lambda.lcm(c.im().denom());
        }
    }
    let r = rank(g);
    let mut terms = Vec::new();
    let mut lam_pow = BigInt::one();
    for size in 1..=r {
        lam_pow *= &lambda;
        for idx in (0..m).combinations(size) {
            let minor = det_exact(&g.principal_submatrix(&idx))?;
            if S::IS_COMPLEX && !minor.im().is_zero() {
                return Err(SeriesError::NonRealCoefficient);
            }
            let scaled = minor.re() * Rat::from_integer(lam_pow.clone());
            if scaled.is_zero() {
                continue;
            }
            assert!(scaled.is_integer(), "minor denominators must divide λ^|S|");
            let mut c = scaled.to_integer();
            if size % 2 == 1 {
                c = -c;
            }
            let mut exps = vec![0u32; m];
            for &i in &idx {
                exps[i] = 1;
            }
            terms.push((exps, c));
        }
    }
    Ok((lambda, terms))
}

/// One merge stream: a source layer shifted by a subset key and scaled by
/// an integer weight.
type Stream<'a> = (u64, BigInt, &'a [(u64, BigInt)]);

/// Merges all streams over the output key interval `[lo, hi)`, summing
/// collisions and dropping exact zeros.  Streams are sorted by source key,
/// and shifting preserves order, so a heap of per-stream cursors emits
/// output keys in nondecreasing order with equal keys adjacent.
fn merge_range(streams: &[Stream<'_>], lo: u64, hi: u64) -> Vec<(u64, BigInt)> {
    let mut pos: Vec<usize> = Vec::with_capacity(streams.len());
    let mut end: Vec<usize> = Vec::with_capacity(streams.len());
    let mut heap: BinaryHeap<Reverse<(u64, usize)>> = BinaryHeap::new();
    for (i, (shift, _, src)) in streams.iter().enumerate() {
        let start = src.partition_point(|(k, _)| k + shift < lo);
        let stop = src.partition_point(|(k, _)| k + shift < hi);
        pos.push(start);
        end.push(stop);
        if start < stop {
            heap.push(Reverse((src[start].0 + shift, i)));
        }
    }
    let mut out: Vec<(u64, BigInt)> = Vec::new();
    while let Some(Reverse((key, i))) = heap.pop() {
        let (shift, weight, src) = &streams[i];
        let val = weight * &src[pos[i]].1;
        pos[i] += 1;
        if pos[i] < end[i] {
            heap.push(Reverse((src[pos[i]].0 + shift, i)));
        }
        match out.last_mut() {
            Some((k, acc)) if *k == key => *acc += val,
            _ => out.push((key, val)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// Splits the output key space into up to `nchunks` disjoint intervals
/// using quantiles of the longest stream, so chunks can be merged
/// independently (and in parallel) without splitting any key.
#[cfg(feature = "parallel")]
fn chunk_ranges(streams: &[Stream<'_>], nchunks: usize) -> Vec<(u64, u64)> {
    let longest = streams.iter().max_by_key(|s| s.2.len());
    let (shift, _, src) = match longest {
        Some(s) if nchunks > 1 && s.2.len() >= 2 * nchunks => s,
        _ => return vec![(0, u64::MAX)],
    };
    let mut bounds = vec![0u64];
    for j in 1..nchunks {
        let key = src[j * src.len() / nchunks].0 + shift;
        if key > *bounds.last().unwrap() {
            bounds.push(key);
        }
    }
    bounds.push(u64::MAX);
    bounds.windows(2).map(|w| (w[0], w[1])).collect()
}

fn merge_layer(streams: &[Stream<'_>]) -> Vec<(u64, BigInt)> {
    #[cfg(feature = "parallel")]
    {
        let nchunks = rayon::current_num_threads().max(1) * 2;
        let ranges = chunk_ranges(streams, nchunks);
        if ranges.len() > 1 {
            let parts: Vec<Vec<(u64, BigInt)>> = ranges
                .par_iter()
                .map(|&(lo, hi)| merge_range(streams, lo, hi))
                .collect();
            return parts.concat();
        }
    }
    merge_range(streams, 0, u64::MAX)
}

/// Scans the coefficients of `det(I − XG)^{−β}` in graded-lexicographic
/// order through total degree `max_deg`, stopping at the first negative
/// one.  `G` must be square with real principal minors (symmetric real or
/// Hermitian complex matrices qualify); `β` is an arbitrary rational.
///
/// All arithmetic is exact; the returned coefficient is the true rational
/// value `per_β(G[𝐧])/𝐧!` of the expansion at the returned index.
pub fn scan_first_negative<S: Scalar>(
    g: &RMatrix<S>,
    beta: &Rat,
    max_deg: u32,
) -> Result<DetPowerScan, SeriesError> {
    if !g.is_square() {
        return Err(SeriesError::Numeric(NumericError::NonSquare {
            rows: g.rows(),
            cols: g.cols(),
        }));
    }
    let m = g.rows();
    let codec = KeyCodec::new(m, max_deg)?;
    let (lambda, raw) = integer_subset_terms(g)?;
    let mut scan = DetPowerScan {
        nvars: m,
        beta: beta.clone(),
        max_total_degree: max_deg,
        nonzero_coeffs: 1, // the constant term, which is 1
        first_negative: None,
    };
    if raw.is_empty() || max_deg == 0 {
        return Ok(scan);
    }
    let subsets: Vec<(u64, u32, BigInt)> = raw
        .iter()
        .map(|(exps, c)| (codec.pack(exps), exps.iter().sum(), c.clone()))
        .sorted_by_key(|t| t.0)
        .collect();
    let a = beta.denom().clone();
    let b = beta.numer().clone();
    let rmax = subsets.iter().map(|t| t.1).max().unwrap();
    let mut a_pows = vec![BigInt::one()];
    for _ in 1..rmax {
        a_pows.push(a_pows.last().unwrap() * &a);
    }
    // Ring buffer of the last rank+1 layers of integerized coefficients.
    let ring_len = rmax as usize + 1;
    let mut ring: Vec<Vec<(u64, BigInt)>> = vec![Vec::new(); ring_len];
    ring[0] = vec![(0u64, BigInt::one())];
    let mut empty_run = 0u32;
    for d in 1..=max_deg {
        let mut streams: Vec<Stream<'_>> = Vec::with_capacity(subsets.len());
        for (key_s, sz, c_s) in &subsets {
            let sz = *sz;
            if sz > d {
                continue;
            }
            let src = &ring[(d - sz) as usize % ring_len];
            if src.is_empty() {
                continue;
            }
            // −c̃_{s,d} = −c_s · a^{|s|−1} (a(d−|s|) + b|s|) Π_{j=1}^{|s|−1}(d−j)
            let mut w = &a * BigInt::from(d - sz) + &b * BigInt::from(sz);
            if w.is_zero() {
                continue;
            }
            w *= &a_pows[sz as usize - 1];
            for j in 1..sz {
                w *= BigInt::from(d - j);
            }
            streams.push((*key_s, -(w * c_s), src));
        }
        let layer = merge_layer(&streams);
        for (key, v) in &layer {
            scan.nonzero_coeffs += 1;
            if v.is_negative() {
                // Undo the integerizing scale F = f · (λ a)^d · d!.
                let scale = num_traits::pow(&lambda * &a, d as usize) * factorial(d);
                scan.first_negative = Some((codec.unpack(*key), Rat::new(v.clone(), scale)));
                return Ok(scan);
            }
        }
        if layer.is_empty() {
            empty_run += 1;
            // Every deeper layer draws only on the last `rmax` layers; once
            // that whole window is empty the series has terminated.
            if empty_run >= rmax {
                break;
            }
        } else {
            empty_run = 0;
        }
        ring[d as usize % ring_len] = layer;
    }
    Ok(scan)
}

/// The exact coefficient of `x^𝐧` in `det(I − XG)^{−β}`, by convolving the
/// binomial expansion `Σ_k C(−β,k)(p(x)−1)^k` over the finite box of
/// exponents `≤ 𝐧`.  An independent cross-check for [`scan_first_negative`]:
/// no packed keys, no layer recurrence — dense mixed-radix arrays and the
/// integer weight recurrence `w_k = w_{k−1} · (−(b+a(k−1)))/(ak)` with
/// `w_0 = a^{|𝐧|}|𝐧|!`.
pub fn power_coeff_at<S: Scalar>(
    g: &RMatrix<S>,
    beta: &Rat,
    n: &MultiIndex,
) -> Result<Rat, SeriesError> {
    if !g.is_square() {
        return Err(SeriesError::Numeric(NumericError::NonSquare {
            rows: g.rows(),
            cols: g.cols(),
        }));
    }
    let m = g.rows();
    if n.len() != m {
        return Err(SeriesError::ExponentLength { expected: m, got: n.len() });
    }
    let (lambda, raw) = integer_subset_terms(g)?;
    let dims: Vec<usize> = n.parts().iter().map(|&e| e as usize + 1).collect();
    let size: usize = dims.iter().product();
    let dtot = n.total();
    let mut strides = vec![1usize; m];
    for i in (0..m.saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * dims[i + 1];
    }
    // Keep only subset terms inside the box, as (member axes, linear offset, c_S).
    let terms: Vec<(Vec<usize>, usize, BigInt)> = raw
        .into_iter()
        .filter_map(|(exps, c)| {
            let axes: Vec<usize> = (0..m).filter(|&i| exps[i] == 1).collect();
            if axes.iter().any(|&i| n.parts()[i] == 0) {
                return None;
            }
            let off = axes.iter().map(|&i| strides[i]).sum();
            Some((axes, off, c))
        })
        .collect();
    let a = beta.denom().clone();
    let b = beta.numer().clone();
    let q = num_traits::pow(a.clone(), dtot as usize) * factorial(dtot);
    let mut acc = vec![BigInt::zero(); size];
    acc[0] = q.clone();
    let mut upow = vec![BigInt::zero(); size];
    upow[0] = BigInt::one();
    let mut w = q.clone();
    for k in 1..=dtot {
        let t = w * -(&b + &a * BigInt::from(k - 1));
        let (quo, rem) = t.div_rem(&(&a * BigInt::from(k)));
        assert!(rem.is_zero(), "weight recurrence must divide exactly");
        w = quo;
        let mut next = vec![BigInt::zero(); size];
        let mut exps = vec![0u32; m];
        for e in 0..size {
            if !upow[e].is_zero() {
                for (axes, off, c) in &terms {
                    if axes.iter().all(|&i| exps[i] < n.parts()[i]) {
                        next[e + off] += c * &upow[e];
                    }
                }
            }
            for i in (0..m).rev() {
                exps[i] += 1;
                if exps[i] < dims[i] as u32 {
                    break;
                }
                exps[i] = 0;
            }
        }
        upow = next;
        if !w.is_zero() {
            for (ac, up) in acc.iter_mut().zip(&upow) {
                if !up.is_zero() {
                    *ac += up * &w;
                }
            }
        }
        if upow.iter().all(|v| v.is_zero()) {
            break;
        }
    }
    let denom = q * num_traits::pow(lambda, dtot as usize);
    Ok(Rat::new(acc[size - 1].clone(), denom))
}
