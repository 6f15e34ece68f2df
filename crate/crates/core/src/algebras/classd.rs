use std::collections::BTreeSet;

use rand::seq::index::sample;
use rand::Rng;

use crate::error::{Error, Result};
use crate::setsys::{atoms, binomial_bound, find_independent_subset, SetFamily};

/// Outcome of testing a generator family for membership in `I(d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassDCertificate {
    pub family: SetFamily,
    pub d: usize,
    pub verified: bool,
    /// Lexicographically smallest independent `(d+1)`-subset, when one exists.
    pub counterexample: Option<Vec<usize>>,
}

/// Verified iff no `d + 1` members are independent.
pub fn certify_class_d(family: &SetFamily, d: usize) -> ClassDCertificate {
    let counterexample = find_independent_subset(family, d + 1);
    ClassDCertificate {
        family: family.clone(),
        d,
        verified: counterexample.is_none(),
        counterexample,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthRow {
    pub indices: Vec<usize>,
    pub size: usize,
    pub atoms: usize,
    pub binomial: u128,
    /// `(d+1)·|F|^d`.
    pub polynomial: u128,
    /// `atoms <= binomial`, and `binomial <= polynomial` for nonempty `F`.
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthReport {
    pub d: usize,
    /// Whether the family is in `I(d)`; the bounds are only claimed if so.
    pub certified: bool,
    pub rows: Vec<GrowthRow>,
}

impl GrowthReport {
    /// Rows that break a bound the certificate claims.
    pub fn violations(&self) -> impl Iterator<Item = &GrowthRow> {
        self.rows.iter().filter(move |r| self.certified && !r.holds)
    }
}

/// Atom counts of the subfamilies at `subsets` against
/// `C(|F|,0) + … + C(|F|,d)` and `(d+1)|F|^d`.
///
/// Index lists are deduplicated and sorted. For `|F| = 0` the polynomial term
/// is `0` for `d >= 1`, so only the binomial bound is compared there.
pub fn growth_bound_report(
    family: &SetFamily,
    d: usize,
    subsets: &[Vec<usize>],
) -> Result<GrowthReport> {
    let certified = certify_class_d(family, d).verified;
    let rows = subsets
        .iter()
        .map(|subset| {
            let indices: Vec<usize> = subset.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
            let sub = family.subfamily(&indices)?;
            let size = indices.len();
            let atoms = atoms(&sub).len();
            let binomial = binomial_bound(size as u64, d as u64)?;
            let polynomial = (size as u128)
                .checked_pow(u32::try_from(d).map_err(|_| Error::Overflow("(d+1)|F|^d"))?)
                .and_then(|p| p.checked_mul(d as u128 + 1))
                .ok_or(Error::Overflow("(d+1)|F|^d"))?;
            let holds = atoms as u128 <= binomial && (size == 0 || binomial <= polynomial);
            Ok(GrowthRow {
                indices,
                size,
                atoms,
                binomial,
                polynomial,
                holds,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GrowthReport {
        d,
        certified,
        rows,
    })
}

/// Sizes `8, 16, 32, …` below `len`, then `len` itself.
///
/// The sample schedule used for exponent fits: starting at 8 keeps the
/// additive constants of small subfamilies from dominating the log-log slope.
pub fn doubling_schedule(len: usize) -> Vec<usize> {
    let mut sizes: Vec<usize> = std::iter::successors(Some(8usize), |s| s.checked_mul(2))
        .take_while(|&s| s < len)
        .collect();
    if len > 0 {
        sizes.push(len);
    }
    sizes
}

/// One uniformly random index subset of each requested size (clamped to
/// `len`), sorted.
pub fn sample_subsets<R: Rng + ?Sized>(len: usize, sizes: &[usize], rng: &mut R) -> Vec<Vec<usize>> {
    sizes
        .iter()
        .map(|&s| {
            let mut v = sample(rng, len, s.min(len)).into_vec();
            v.sort_unstable();
            v
        })
        .collect()
}

/// `(|F|, |Atom(F)|)` for each subset, the raw material of an exponent fit.
pub fn growth_samples(family: &SetFamily, subsets: &[Vec<usize>]) -> Result<Vec<(u64, u64)>> {
    subsets
        .iter()
        .map(|s| {
            let sub = family.subfamily(s)?;
            Ok((s.len() as u64, atoms(&sub).len() as u64))
        })
        .collect()
}
