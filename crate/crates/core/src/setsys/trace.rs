use std::collections::BTreeSet;

use itertools::Itertools;
use num_integer::Integer;

use super::family::Signature;
use crate::error::{Error, Result};

/// A set `C ⊆ 2^T` of 0/1 patterns over an index set `T = 0..width`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceSet {
    width: usize,
    patterns: BTreeSet<Signature>,
}

impl TraceSet {
    /// Fails if some pattern has the wrong length. Duplicates collapse.
    pub fn new<I: IntoIterator<Item = Signature>>(width: usize, patterns: I) -> Result<Self> {
        let patterns: BTreeSet<Signature> = patterns.into_iter().collect();
        if let Some(bad) = patterns.iter().find(|p| p.len() != width) {
            return Err(Error::InvalidParams(format!(
                "pattern {bad} has length {}, expected {width}",
                bad.len()
            )));
        }
        Ok(TraceSet { width, patterns })
    }

    /// Parses words such as `["000", "011"]`.
    pub fn from_words<S: AsRef<str>>(width: usize, words: &[S]) -> Result<Self> {
        let patterns = words
            .iter()
            .map(|w| {
                Signature::parse(w.as_ref())
                    .ok_or_else(|| Error::InvalidParams(format!("bad pattern {:?}", w.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(width, patterns)
    }

    pub(crate) fn from_patterns_unchecked<I: IntoIterator<Item = Signature>>(
        width: usize,
        patterns: I,
    ) -> Self {
        TraceSet {
            width,
            patterns: patterns.into_iter().collect(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn patterns(&self) -> impl Iterator<Item = &Signature> {
        self.patterns.iter()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.patterns.iter().map(|p| p.to_string()).collect()
    }

    /// `{f|_S : f ∈ C}`.
    pub fn restrict(&self, indices: &[usize]) -> BTreeSet<Signature> {
        self.patterns.iter().map(|p| p.restrict(indices)).collect()
    }

    /// True iff every 0/1 pattern on `indices` is realized. Repeated indices
    /// can never be shattered.
    pub fn shatters(&self, indices: &[usize]) -> bool {
        let k = indices.len();
        if indices.iter().any(|&i| i >= self.width) || !indices.iter().all_unique() {
            return false;
        }
        if k >= usize::BITS as usize || self.patterns.len() < 1usize << k {
            return false;
        }
        self.restrict(indices).len() == 1usize << k
    }
}

/// `C(n,0) + C(n,1) + … + C(n,d)`; equals `2^n` when `d >= n`.
///
/// ```
/// use freedim::setsys::binomial_bound;
/// assert_eq!(binomial_bound(5, 2).unwrap(), 16);
/// assert_eq!(binomial_bound(4, 9).unwrap(), 16);
/// ```
pub fn binomial_bound(n: u64, d: u64) -> Result<u128> {
    if d >= n {
        return u32::try_from(n)
            .ok()
            .and_then(|n| 1u128.checked_shl(n))
            .ok_or(Error::Overflow("binomial bound"));
    }
    let mut term: u128 = 1;
    let mut sum: u128 = 1;
    for i in 1..=u128::from(d) {
        // C(n,i) = C(n,i-1)·(n-i+1)/i; dividing out gcd(C(n,i-1), i) first
        // leaves a divisor of (n-i+1), so only the result itself can overflow.
        let g = term.gcd(&i);
        let factor = (u128::from(n) - i + 1) / (i / g);
        term = (term / g)
            .checked_mul(factor)
            .ok_or(Error::Overflow("binomial bound"))?;
        sum = sum.checked_add(term).ok_or(Error::Overflow("binomial bound"))?;
    }
    Ok(sum)
}

/// Looks for a set `S ⊆ T` with `|S| = d + 1` that `trace` shatters.
///
/// Returns the lexicographically smallest such set. When
/// `|trace| > binomial_bound(width, d)` one always exists. For `d >= width`
/// there is no candidate and the result is `None`.
pub fn sauer_shelah_find(trace: &TraceSet, d: usize) -> Option<Vec<usize>> {
    if d >= trace.width() {
        return None;
    }
    let k = d + 1;
    if k >= usize::BITS as usize || trace.len() < 1usize << k {
        return None;
    }
    (0..trace.width())
        .combinations(k)
        .find(|s| trace.shatters(s))
}
