use std::collections::BTreeSet;

use crate::algebras::{decode, product_size};
use crate::bitset::PointSet;
use crate::error::{Error, Result};
use crate::setsys::{atoms, SetFamily};

/// A finite cover of `0..ground` by nonempty, possibly overlapping cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    ground: usize,
    cells: Vec<PointSet>,
}

impl Cover {
    pub fn new(ground: usize, cells: Vec<PointSet>) -> Result<Self> {
        let mut union = PointSet::empty(ground);
        for (i, c) in cells.iter().enumerate() {
            if c.ground_len() != ground {
                return Err(Error::GroundMismatch {
                    left: ground,
                    right: c.ground_len(),
                });
            }
            if c.is_empty() {
                return Err(Error::EmptyCell(i));
            }
            union.union_with(c);
        }
        match union.complement().first() {
            Some(p) => Err(Error::Uncovered(p)),
            None => Ok(Cover { ground, cells }),
        }
    }

    pub fn from_lists<L: AsRef<[usize]>>(ground: usize, lists: &[L]) -> Result<Self> {
        let cells = lists
            .iter()
            .map(|l| {
                PointSet::try_from_points(ground, l.as_ref().iter().copied())
                    .map_err(|point| Error::PointOutOfRange { point, ground })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ground, cells)
    }

    /// `{ {0}, {1}, … }`.
    pub fn singletons(ground: usize) -> Self {
        Cover {
            ground,
            cells: (0..ground).map(|p| PointSet::from_points(ground, [p])).collect(),
        }
    }

    /// `{ ground }`; no cells when the ground set is empty.
    pub fn trivial(ground: usize) -> Self {
        Cover {
            ground,
            cells: if ground == 0 { vec![] } else { vec![PointSet::full(ground)] },
        }
    }

    /// Cover of the chain `0..length` by closed intervals `[lo, hi]`.
    pub fn intervals(length: usize, bounds: &[(usize, usize)]) -> Result<Self> {
        let cells = bounds
            .iter()
            .map(|&(lo, hi)| {
                if hi >= length {
                    Err(Error::PointOutOfRange { point: hi, ground: length })
                } else if lo > hi {
                    Err(Error::InvalidParams(format!("interval [{lo},{hi}] is reversed")))
                } else {
                    Ok(PointSet::interval(length, lo, hi))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(length, cells)
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[PointSet] {
        &self.cells
    }

    /// Same cells as a set, ignoring order and repetition.
    pub fn same_cells(&self, other: &Cover) -> bool {
        self.ground == other.ground
            && self.cells.iter().collect::<BTreeSet<_>>() == other.cells.iter().collect::<BTreeSet<_>>()
    }

    /// True if the cells are pairwise disjoint.
    pub fn is_partition(&self) -> bool {
        let mut seen = PointSet::empty(self.ground);
        self.cells.iter().all(|c| {
            let ok = c.is_disjoint(&seen);
            seen.union_with(c);
            ok
        })
    }

    /// `(lo, hi)` if the cell is a contiguous run of points.
    pub fn interval_bounds(cell: &PointSet) -> Option<(usize, usize)> {
        let lo = cell.first()?;
        let hi = lo + cell.count() - 1;
        (cell.iter().last() == Some(hi)).then_some((lo, hi))
    }
}

fn check_ground(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::GroundMismatch { left: a, right: b })
    }
}

/// `fine ≺ coarse`: every cell of `fine` lies inside some cell of `coarse`.
pub fn is_refinement(fine: &Cover, coarse: &Cover) -> Result<bool> {
    check_ground(fine.ground, coarse.ground)?;
    Ok(fine
        .cells
        .iter()
        .all(|c| coarse.cells.iter().any(|d| c.is_subset(d))))
}

/// Canonical joint refinement: the atoms of the family of all input cells.
///
/// Every input cell is a union of output cells. For partitions this is their
/// common refinement (the meet); for overlapping covers it is the coarsest
/// partition that resolves every cell.
pub fn atoms_refinement(covers: &[Cover]) -> Result<Cover> {
    let first = covers.first().ok_or(Error::NoCovers)?;
    let mut pooled = SetFamily::empty(first.ground);
    for c in covers {
        check_ground(first.ground, c.ground)?;
        for cell in &c.cells {
            pooled.push(cell.clone())?;
        }
    }
    Ok(Cover {
        ground: first.ground,
        cells: atoms(&pooled).into_cells(),
    })
}

/// Joint refinement of interval covers of the chain `0..length`, built from
/// the sorted list of all endpoints.
///
/// Consecutive endpoints `e < e'` give the closed interval `[e, e']` unless
/// some input cover breaks between two adjacent points `e, e+1 = e'`; any
/// endpoint left uncovered becomes a singleton. Each output cell can be
/// charged to a distinct endpoint, so the size is at most `Σ 2|C_i|`.
///
/// ```
/// use freedim::coverlab::{interval_joint_refinement, Cover};
/// let c1 = Cover::intervals(10, &[(0, 4), (4, 9)]).unwrap();
/// let c2 = Cover::intervals(10, &[(0, 6), (6, 9)]).unwrap();
/// let joint = interval_joint_refinement(10, &[c1, c2]).unwrap();
/// let expect = Cover::intervals(10, &[(0, 4), (4, 6), (6, 9)]).unwrap();
/// assert_eq!(joint, expect);
/// ```
pub fn interval_joint_refinement(length: usize, covers: &[Cover]) -> Result<Cover> {
    if covers.is_empty() {
        return Err(Error::NoCovers);
    }
    let mut intervals: Vec<Vec<(usize, usize)>> = Vec::with_capacity(covers.len());
    for (ci, c) in covers.iter().enumerate() {
        check_ground(length, c.ground)?;
        let bounds = c
            .cells
            .iter()
            .enumerate()
            .map(|(cell, s)| {
                Cover::interval_bounds(s).ok_or(Error::NotAnInterval { cover: ci, cell })
            })
            .collect::<Result<Vec<_>>>()?;
        intervals.push(bounds);
    }
    let endpoints: Vec<usize> = intervals
        .iter()
        .flatten()
        .flat_map(|&(lo, hi)| [lo, hi])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    // Adjacent points p, p+1 that no single cell of some cover contains.
    let broken = |p: usize| {
        intervals
            .iter()
            .any(|cover| !cover.iter().any(|&(lo, hi)| lo <= p && p < hi))
    };

    let mut out = Vec::new();
    let mut covered = PointSet::empty(length);
    for w in endpoints.windows(2) {
        let (e, f) = (w[0], w[1]);
        if f == e + 1 && broken(e) {
            continue;
        }
        let cell = PointSet::interval(length, e, f);
        covered.union_with(&cell);
        out.push(cell);
    }
    for &e in &endpoints {
        if !covered.contains(e) {
            covered.insert(e);
            out.push(PointSet::from_points(length, [e]));
        }
    }
    out.sort();
    Cover::new(length, out)
}

/// All rectangles `C_1 × C_2`, on the product ground encoded as
/// `x_1 + N_1·x_2`.
pub fn product_cover(c1: &Cover, c2: &Cover) -> Result<Cover> {
    let radices = [c1.ground, c2.ground];
    let ground = product_size(&radices)?;
    let coords: Vec<Vec<usize>> = (0..ground).map(|p| decode(&radices, p)).collect();
    let mut cells = Vec::with_capacity(c1.len() * c2.len());
    for b in &c2.cells {
        for a in &c1.cells {
            cells.push(PointSet::from_points(
                ground,
                (0..ground).filter(|&p| a.contains(coords[p][0]) && b.contains(coords[p][1])),
            ));
        }
    }
    Ok(Cover { ground, cells })
}

/// Image cover `{g[C] : C ∈ c}` under a surjection `g: 0..c.ground → 0..target`.
///
/// Cells with equal images are merged, first occurrence first.
pub fn push_cover(map: &[usize], target: usize, c: &Cover) -> Result<Cover> {
    if map.len() != c.ground {
        return Err(Error::MapLength {
            expected: c.ground,
            found: map.len(),
        });
    }
    let image = PointSet::try_from_points(target, map.iter().copied())
        .map_err(|point| Error::PointOutOfRange { point, ground: target })?;
    if let Some(p) = image.complement().first() {
        return Err(Error::NotSurjective(p));
    }
    let mut cells: Vec<PointSet> = Vec::new();
    for cell in &c.cells {
        let img = PointSet::from_points(target, cell.iter().map(|p| map[p]));
        if !cells.contains(&img) {
            cells.push(img);
        }
    }
    Ok(Cover { ground: target, cells })
}

/// Traces `{C ∩ L : C ∈ c}` on a nonempty subset `L`, empty traces dropped and
/// equal traces merged.
///
/// The result lives on `0..|L|`: the `k`-th smallest point of `L` becomes `k`
/// (see [`subset_points`]).
pub fn restrict_cover(c: &Cover, subset: &PointSet) -> Result<Cover> {
    check_ground(c.ground, subset.ground_len())?;
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let points = subset.to_vec();
    let mut cells: Vec<PointSet> = Vec::new();
    for cell in &c.cells {
        let trace = PointSet::from_points(
            points.len(),
            points.iter().enumerate().filter(|(_, &p)| cell.contains(p)).map(|(k, _)| k),
        );
        if !trace.is_empty() && !cells.contains(&trace) {
            cells.push(trace);
        }
    }
    Ok(Cover {
        ground: points.len(),
        cells,
    })
}

/// Original labels of a restricted cover's points.
pub fn subset_points(subset: &PointSet) -> Vec<usize> {
    subset.to_vec()
}
