use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::cover::{atoms_refinement, interval_joint_refinement, Cover};
use super::separated::Rational;
use crate::error::{Error, Result};

/// A finite candidate for the growth bound `|C| <= M·(χ(C_1) + … + χ(C_k))^d`
/// on joint refinements of covers drawn from `family`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthWitness {
    d: u32,
    m: Rational,
    chi: Vec<u64>,
    family: Vec<Cover>,
    interval: bool,
}

impl GrowthWitness {
    /// `interval` selects the endpoint construction for joint refinements
    /// (all covers must then be interval covers of the chain `0..ground`);
    /// otherwise the atom partition of the pooled cells is used.
    pub fn new(d: u32, m: Rational, chi: Vec<u64>, family: Vec<Cover>, interval: bool) -> Result<Self> {
        if !m.is_positive() {
            return Err(Error::NonPositiveM);
        }
        if chi.len() != family.len() {
            return Err(Error::ChiLength {
                expected: family.len(),
                found: chi.len(),
            });
        }
        if let Some(i) = chi.iter().position(|&c| c == 0) {
            return Err(Error::NonPositiveChi(i));
        }
        if let Some(first) = family.first() {
            if let Some(c) = family.iter().find(|c| c.ground() != first.ground()) {
                return Err(Error::GroundMismatch {
                    left: first.ground(),
                    right: c.ground(),
                });
            }
            if interval {
                for (ci, c) in family.iter().enumerate() {
                    if let Some(cell) = c.cells().iter().position(|s| Cover::interval_bounds(s).is_none()) {
                        return Err(Error::NotAnInterval { cover: ci, cell });
                    }
                }
            }
        }
        Ok(GrowthWitness {
            d,
            m,
            chi,
            family,
            interval,
        })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn m(&self) -> Rational {
        self.m
    }

    pub fn chi(&self) -> &[u64] {
        &self.chi
    }

    pub fn family(&self) -> &[Cover] {
        &self.family
    }

    pub fn is_interval(&self) -> bool {
        self.interval
    }

    /// The canonical joint refinement of the covers at `tuple`.
    pub fn joint_refinement(&self, tuple: &[usize]) -> Result<Cover> {
        let covers = tuple
            .iter()
            .map(|&i| {
                self.family.get(i).cloned().ok_or(Error::CoverOutOfRange {
                    index: i,
                    len: self.family.len(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if self.interval {
            let ground = covers.first().ok_or(Error::NoCovers)?.ground();
            interval_joint_refinement(ground, &covers)
        } else {
            atoms_refinement(&covers)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessRow {
    pub tuple: Vec<usize>,
    pub joint_size: usize,
    pub chi_sum: u64,
    /// `M·(Σχ)^d`.
    pub budget: BigRational,
    pub pass: bool,
}

/// Compares each tuple's joint refinement with its budget.
///
/// A failing row only says that this witness does not work on this tuple.
pub fn witness_check(w: &GrowthWitness, tuples: &[Vec<usize>]) -> Result<Vec<WitnessRow>> {
    let m = BigRational::new(BigInt::from(*w.m.numer()), BigInt::from(*w.m.denom()));
    tuples
        .iter()
        .enumerate()
        .map(|(ti, tuple)| {
            if tuple.is_empty() {
                return Err(Error::EmptyTuple(ti));
            }
            let joint_size = w.joint_refinement(tuple)?.len();
            let chi_sum = tuple
                .iter()
                .try_fold(0u64, |acc, &i| acc.checked_add(w.chi[i]))
                .ok_or(Error::Overflow("chi sum"))?;
            let budget = &m * BigRational::from_integer(num_traits::pow(BigInt::from(chi_sum), w.d as usize));
            let pass = BigRational::from_integer(BigInt::from(joint_size)) <= budget;
            Ok(WitnessRow {
                tuple: tuple.clone(),
                joint_size,
                chi_sum,
                budget,
                pass,
            })
        })
        .collect()
}

/// Least-squares slope of `ln(joint)` against `ln(budget)`.
pub fn exponent_fit(samples: &[(f64, f64)]) -> Result<f64> {
    if samples.len() < 3 {
        return Err(Error::DegenerateSamples("at least three samples are needed"));
    }
    if samples.iter().any(|&(b, j)| b.is_nan() || b < 2.0 || j.is_nan() || j < 1.0) {
        return Err(Error::DegenerateSamples("budgets must be >= 2 and sizes >= 1"));
    }
    let xs: Vec<f64> = samples.iter().map(|s| s.0.ln()).collect();
    let ys: Vec<f64> = samples.iter().map(|s| s.1.ln()).collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx.is_zero() || samples.iter().all(|s| s.0 == samples[0].0) {
        return Err(Error::DegenerateSamples("all budgets are equal"));
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    Ok(sxy / sxx)
}
