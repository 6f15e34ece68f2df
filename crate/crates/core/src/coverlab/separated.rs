use std::collections::HashSet;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use super::cover::Cover;
use crate::algebras::{decode, product_size};
use crate::bitset::PointSet;
use crate::error::{Error, Result};

pub type Rational = Rational64;

/// Separation gap: every two points differ by at least this much in some function.
pub fn separation_gap() -> Rational {
    Rational::new(1, 2)
}

/// Largest oscillation a good cover tolerates on a cell.
pub fn goodness_threshold() -> Rational {
    Rational::new(1, 3)
}

/// `max f − min f` over a nonempty cell.
pub fn oscillation(f: &[Rational], cell: &PointSet) -> Result<Rational> {
    let mut values = cell.iter().map(|p| {
        f.get(p).copied().ok_or(Error::PointOutOfRange {
            point: p,
            ground: f.len(),
        })
    });
    let first = values.next().ok_or(Error::EmptyCell(0))??;
    let (mut lo, mut hi) = (first, first);
    for v in values {
        let v = v?;
        lo = lo.min(v);
        hi = hi.max(v);
    }
    Ok(hi - lo)
}

/// Every function has oscillation at most 1/3 on every cell.
pub fn is_good(cover: &Cover, functions: &[Vec<Rational>]) -> bool {
    let theta = goodness_threshold();
    functions.iter().all(|f| {
        cover
            .cells()
            .iter()
            .all(|cell| matches!(oscillation(f, cell), Ok(o) if o <= theta))
    })
}

/// A finite point set with `[0,1]`-valued functions that separate every two
/// points by at least 1/2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatedInstance {
    points: usize,
    functions: Vec<Vec<Rational>>,
    /// Mixed-radix shape of the point set, factor 0 least significant; a
    /// single radix for unstructured instances.
    radices: Vec<usize>,
}

impl SeparatedInstance {
    /// Validates value ranges and the separation property.
    pub fn new(points: usize, functions: Vec<Vec<Rational>>) -> Result<Self> {
        Self::with_radices(points, functions, vec![points])
    }

    fn with_radices(points: usize, functions: Vec<Vec<Rational>>, radices: Vec<usize>) -> Result<Self> {
        for (i, f) in functions.iter().enumerate() {
            if f.len() != points {
                return Err(Error::FunctionLength {
                    function: i,
                    expected: points,
                    found: f.len(),
                });
            }
            if let Some((p, v)) = f
                .iter()
                .enumerate()
                .find(|(_, v)| **v < Rational::zero() || **v > Rational::one())
            {
                return Err(Error::ValueOutOfRange {
                    function: i,
                    point: p,
                    value: v.to_string(),
                });
            }
        }
        if let Some((a, b)) = first_unseparated_pair(points, &functions) {
            return Err(Error::NotSeparated(a, b));
        }
        Ok(SeparatedInstance {
            points,
            functions,
            radices,
        })
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn functions(&self) -> &[Vec<Rational>] {
        &self.functions
    }

    pub fn radices(&self) -> &[usize] {
        &self.radices
    }

    pub fn coordinates(&self, point: usize) -> Vec<usize> {
        decode(&self.radices, point)
    }

    pub fn separates(&self, a: usize, b: usize) -> bool {
        separated(&self.functions, a, b)
    }
}

fn separated(functions: &[Vec<Rational>], a: usize, b: usize) -> bool {
    let gap = separation_gap();
    functions.iter().any(|f| (f[a] - f[b]).abs() >= gap)
}

fn first_unseparated_pair(points: usize, functions: &[Vec<Rational>]) -> Option<(usize, usize)> {
    let binary = functions
        .iter()
        .flatten()
        .all(|v| v.is_zero() || v.is_one());
    if binary {
        // 0/1 values differ by 0 or 1, so separation is distinctness of columns.
        let mut seen = HashSet::new();
        let mut clash = None;
        for p in 0..points {
            let column: Vec<bool> = functions.iter().map(|f| f[p].is_one()).collect();
            if !seen.insert(column) {
                clash = Some(p);
                break;
            }
        }
        let b = clash?;
        let a = (0..b).find(|&a| !separated(functions, a, b))?;
        return Some((a, b));
    }
    (0..points)
        .flat_map(|b| (0..b).map(move |a| (a, b)))
        .find(|&(a, b)| !separated(functions, a, b))
}

fn indicator(points: usize, at: usize) -> Vec<Rational> {
    (0..points)
        .map(|p| if p == at { Rational::one() } else { Rational::zero() })
        .collect()
}

/// `n` functions on `n + 1` points: `f_k` is the indicator of `x_k`.
///
/// For `j < j'` the function `f_j` separates `x_j` from `x_{j'}` by 1.
pub fn separated_family(n: usize) -> Result<SeparatedInstance> {
    if n == 0 {
        return Err(Error::InvalidParams("separated_family needs n >= 1".into()));
    }
    let functions = (0..n).map(|k| indicator(n + 1, k)).collect();
    SeparatedInstance::new(n + 1, functions)
}

/// The grid `D = X_1 × … × X_d × Y` with `|X_i| = n + 1`, `|Y| = p + 1`.
///
/// Functions: for each coordinate `i < d` the separated family on `X_i`
/// composed with the projection (`d·n` functions), then `h_i ∘ π_Y` for
/// `i < p` with `h_i(y_i) = 1` and `h_i = 0` elsewhere. Points are encoded in
/// mixed radix with coordinate 0 least significant and `Y` last.
pub fn build_grid_instance(d: usize, n: usize, p: usize) -> Result<SeparatedInstance> {
    if d == 0 || n == 0 || p == 0 {
        return Err(Error::InvalidParams("grid needs d, n, p >= 1".into()));
    }
    let mut radices = vec![n + 1; d];
    radices.push(p + 1);
    let points = product_size(&radices)?;
    let coords: Vec<Vec<usize>> = (0..points).map(|x| decode(&radices, x)).collect();
    let on_coordinate = |axis: usize, value: usize| -> Vec<Rational> {
        coords
            .iter()
            .map(|c| if c[axis] == value { Rational::one() } else { Rational::zero() })
            .collect()
    };
    let mut functions = Vec::with_capacity(d * n + p);
    for axis in 0..d {
        for k in 0..n {
            functions.push(on_coordinate(axis, k));
        }
    }
    for i in 0..p {
        functions.push(on_coordinate(d, i));
    }
    SeparatedInstance::with_radices(points, functions, radices)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FloorCheck {
    pub good: bool,
    /// Most instance points found in one cell.
    pub max_points_per_cell: usize,
    /// For a good cover: every cell holds at most one point and the cover has
    /// at least `|D|` cells. Vacuously true for covers that are not good.
    pub floor_respected: bool,
}

/// Checks the lower bound `|c| >= |D|` that separation forces on good covers.
pub fn good_cover_floor(inst: &SeparatedInstance, c: &Cover) -> Result<FloorCheck> {
    if c.ground() != inst.points {
        return Err(Error::GroundMismatch {
            left: inst.points,
            right: c.ground(),
        });
    }
    let good = is_good(c, &inst.functions);
    let max_points_per_cell = c.cells().iter().map(PointSet::count).max().unwrap_or(0);
    let floor_respected = !good || (max_points_per_cell <= 1 && c.len() >= inst.points);
    Ok(FloorCheck {
        good,
        max_points_per_cell,
        floor_respected,
    })
}
