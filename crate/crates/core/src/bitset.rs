//! Fixed-width subsets of a finite ground set `0..N`.

use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

/// A subset of the ground set `0..len`, stored as a characteristic bit vector.
///
/// Two sets are equal only if they live on the same ground size and contain
/// the same points. Ordering is lexicographic on the sorted point lists, which
/// is what the deterministic witness rules in this crate rely on.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    len: usize,
    words: Vec<u64>,
}

impl PointSet {
    pub fn empty(len: usize) -> Self {
        PointSet {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for w in s.words.iter_mut() {
            *w = !0;
        }
        s.trim();
        s
    }

    /// Builds a set from point indices; panics if a point is `>= len`.
    pub fn from_points<I: IntoIterator<Item = usize>>(len: usize, points: I) -> Self {
        let mut s = Self::empty(len);
        for p in points {
            s.insert(p);
        }
        s
    }

    /// Like [`PointSet::from_points`] but reports the first out-of-range point.
    pub fn try_from_points<I: IntoIterator<Item = usize>>(
        len: usize,
        points: I,
    ) -> Result<Self, usize> {
        let mut s = Self::empty(len);
        for p in points {
            if p >= len {
                return Err(p);
            }
            s.insert(p);
        }
        Ok(s)
    }

    /// Contiguous range `[lo, hi]` (inclusive).
    pub fn interval(len: usize, lo: usize, hi: usize) -> Self {
        Self::from_points(len, lo..=hi)
    }

    /// Size of the ground set this subset lives in.
    pub fn ground_len(&self) -> usize {
        self.len
    }

    pub fn contains(&self, p: usize) -> bool {
        p < self.len && self.words[p / WORD] >> (p % WORD) & 1 == 1
    }

    pub fn insert(&mut self, p: usize) {
        assert!(p < self.len, "point {p} outside ground of size {}", self.len);
        self.words[p / WORD] |= 1 << (p % WORD);
    }

    pub fn remove(&mut self, p: usize) {
        if p < self.len {
            self.words[p / WORD] &= !(1 << (p % WORD));
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + b)
            })
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        let mut s = Self {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.trim();
        s
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_len(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_len(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_len(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    /// Points in increasing order.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn zip(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        self.check_len(other);
        PointSet {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    fn check_len(&self, other: &Self) {
        assert_eq!(self.len, other.len, "point sets over different ground sets");
    }

    fn trim(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}
