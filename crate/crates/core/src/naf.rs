//! Non-adjacent form arithmetic and the threshold `g(k)`.

use alloc::format;
use alloc::vec::Vec;

use hashbrown::HashSet;
use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Signed binary digits with no two adjacent nonzero entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NafForm {
    pub value: BigInt,
    /// Least significant first; empty for zero.
    pub digits: Vec<i8>,
}

impl NafForm {
    pub fn weight(&self) -> usize {
        self.digits.iter().filter(|&&d| d != 0).count()
    }

    /// Re-evaluates `Σ d_i 2^i`.
    pub fn evaluate(&self) -> BigInt {
        self.digits
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, &d| (acc << 1usize) + BigInt::from(d))
    }
}

/// Reitwiesner's algorithm.
pub fn naf(k: &BigInt) -> NafForm {
    let mut digits = Vec::new();
    let mut x = k.clone();
    let four = BigInt::from(4);
    while !x.is_zero() {
        let d: i8 = if x.is_odd() {
            let m = x.mod_floor(&four);
            if m == BigInt::one() {
                1
            } else {
                -1
            }
        } else {
            0
        };
        x -= BigInt::from(d);
        x >>= 1usize;
        digits.push(d);
    }
    NafForm { value: k.clone(), digits }
}

pub fn naf_weight(k: &BigInt) -> usize {
    naf(k).weight()
}

pub fn naf_weight_i64(k: i64) -> usize {
    naf_weight(&BigInt::from(k))
}

/// Least positive integer of NAF weight `w`: `(2^{2w-1}+1)/3`.
pub fn least_of_weight(w: u32) -> Result<BigUint> {
    if w == 0 {
        return Err(Error::input("weight must be positive"));
    }
    Ok(((BigUint::one() << (2 * w - 1) as usize) + 1u32) / 3u32)
}

/// `W(k)`: the largest `w` with `2^{2w-1} ≤ 12k - 1`.
pub fn big_w(k: u64) -> Result<u32> {
    if k == 0 {
        return Err(Error::input("k must be at least 1"));
    }
    let target = BigUint::from(k) * 12u32 - 1u32;
    let mut w = 0u32;
    while BigUint::one() << (2 * (w + 1) - 1) as usize <= target {
        w += 1;
    }
    Ok(w)
}

/// `g(k) = (4^{3k+W(k)+1} - 1) / 3`, the sum of `4^i` for `i ≤ 3k + W(k)`.
pub fn g_of_k(k: u64) -> Result<BigUint> {
    let w = big_w(k)? as u64;
    let e = 3 * k + w + 1;
    if e > 1 << 20 {
        return Err(Error::limit(format!("g({k}) has more than 2^21 bits")));
    }
    Ok(((BigUint::one() << (2 * e) as usize) - 1u32) / 3u32)
}

/// Outcome of [`naf_lemma_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NafLemmaReport {
    pub k: u64,
    pub g: BigUint,
    /// Every `c` with `|c| ≤ 4k` has `w(g + c) > 3k`.
    pub sufficient: bool,
    /// Brute-force search found no representable integer near `g`; `None` when not run.
    pub brute: Option<bool>,
}

impl NafLemmaReport {
    pub fn passed(&self) -> bool {
        self.sufficient && self.brute != Some(false)
    }
}

/// Checks that no integer in `[g(k)-k, g(k)+k]` is a sum of at most `3k` terms `±(2^ℓ-1)`.
///
/// The weight check is exact. With `brute_cap = Some(cap)` an independent
/// meet-in-the-middle enumeration over exponents `ℓ ≤ ⌈log₂(g+k)⌉ + 6k + 2`
/// also runs, failing with a resource error past `cap` partial sums.
pub fn naf_lemma_check(k: u64, brute_cap: Option<usize>) -> Result<NafLemmaReport> {
    let g = g_of_k(k)?;
    let gi = BigInt::from_biguint(Sign::Plus, g.clone());
    let span = 4 * k as i64;
    let sufficient = (-span..=span).all(|c| naf_weight(&(&gi + c)) as u64 > 3 * k);
    let brute = match brute_cap {
        None => None,
        Some(cap) => Some(brute_oracle(k, &g, cap)?),
    };
    Ok(NafLemmaReport { k, g, sufficient, brute })
}

fn brute_oracle(k: u64, g: &BigUint, cap: usize) -> Result<bool> {
    let top = (g + k).bits();
    let max_exp = top + 6 * k + 2;
    if max_exp > 120 {
        return Err(Error::limit("brute oracle exponent bound exceeds 120 bits"));
    }
    let g = g.to_i128().ok_or_else(|| Error::limit("g(k) exceeds i128"))?;
    let mut terms: Vec<i128> = Vec::new();
    terms.push(0);
    for l in 1..=max_exp as u32 {
        let t = (1i128 << l) - 1;
        terms.push(t);
        terms.push(-t);
    }
    terms.sort_unstable();
    let total = 3 * k as usize;
    let left = total.div_ceil(2);
    let right = total - left;
    let big = multiset_sums(&terms, left, cap)?;
    let small = multiset_sums(&terms, right, cap)?;
    let k = k as i128;
    for s in &small {
        for target in g - k..=g + k {
            if big.contains(&(target - s)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All sums of exactly `count` terms (with repetition); `terms` contains 0.
fn multiset_sums(terms: &[i128], count: usize, cap: usize) -> Result<HashSet<i128>> {
    fn rec(terms: &[i128], from: usize, left: usize, acc: i128, out: &mut HashSet<i128>, cap: usize) -> Result<()> {
        if left == 0 {
            out.insert(acc);
            if out.len() > cap {
                return Err(Error::limit(format!("brute oracle exceeded {cap} partial sums")));
            }
            return Ok(());
        }
        for i in from..terms.len() {
            rec(terms, i, left - 1, acc + terms[i], out, cap)?;
        }
        Ok(())
    }
    let mut out = HashSet::new();
    rec(terms, 0, count, 0, &mut out, cap)?;
    Ok(out)
}

/// `w(x + y) ≥ w(x) - w(y)`, the triangle inequality for NAF weights.
pub fn weight_triangle_holds(x: &BigInt, y: &BigInt) -> bool {
    naf_weight(&(x + y)) + naf_weight(y) >= naf_weight(x)
}
