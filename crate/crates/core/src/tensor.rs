//! Index arithmetic for tensor powers `A^{⊗n}` in lexicographic order: the
//! tuple `(a_1, …, a_n)` has code `Σ a_k · d^{n-k}` (first factor most
//! significant).

use crate::error::{Error, Result};

/// `d^n`, or `None` on overflow.
pub fn checked_pow(d: usize, n: usize) -> Option<usize> {
    let mut acc: usize = 1;
    for _ in 0..n {
        acc = acc.checked_mul(d)?;
    }
    Some(acc)
}

/// `d^n`; panics on overflow (callers check sizes through the coordinate guard first).
pub fn pow(d: usize, n: usize) -> usize {
    checked_pow(d, n).expect("tensor power overflows usize")
}

pub fn encode(d: usize, digits: &[usize]) -> usize {
    digits.iter().fold(0, |acc, &a| acc * d + a)
}

pub fn decode(d: usize, n: usize, mut code: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for slot in out.iter_mut().rev() {
        *slot = code % d;
        code /= d;
    }
    out
}

/// Guard against oversized coordinate spaces: returns `r · d^n` if it does not
/// exceed `cap`.
pub fn guarded_dim(r: usize, d: usize, n: usize, cap: usize) -> Result<usize> {
    match checked_pow(d, n).and_then(|p| p.checked_mul(r)) {
        Some(v) if v <= cap => Ok(v),
        Some(v) => Err(Error::ResourceGuard { requested: v, cap }),
        None => Err(Error::ResourceGuard { requested: usize::MAX, cap }),
    }
}
