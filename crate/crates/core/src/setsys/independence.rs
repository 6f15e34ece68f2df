use super::family::SetFamily;
use super::trace::TraceSet;
use crate::bitset::PointSet;
use crate::error::Result;

/// A 0/1 matrix viewed column-wise: column `j` is the set of rows carrying a 1.
///
/// A set of columns is shattered when the rows restricted to it realize all
/// patterns. Independence of members (rows = points) and shattering of index
/// sets by a trace (rows = patterns) are both this question.
struct Columns<'a> {
    rows: usize,
    cols: &'a [PointSet],
}

impl Columns<'_> {
    /// Row codes after appending column `j`, or `None` if the enlarged column
    /// set is not shattered.
    fn extend(&self, codes: &[u64], k: usize, j: usize) -> Option<Vec<u64>> {
        let k = k + 1;
        if k >= 64 || (1u128 << k) > self.rows as u128 {
            return None;
        }
        let col = &self.cols[j];
        let next: Vec<u64> = codes
            .iter()
            .enumerate()
            .map(|(r, &c)| c << 1 | u64::from(col.contains(r)))
            .collect();
        let mut seen = vec![false; 1 << k];
        let mut distinct = 0usize;
        for &c in &next {
            if !std::mem::replace(&mut seen[c as usize], true) {
                distinct += 1;
            }
        }
        (distinct == 1 << k).then_some(next)
    }

    fn is_shattered(&self, set: &[usize]) -> bool {
        if self.rows == 0 {
            return false;
        }
        let mut codes = vec![0u64; self.rows];
        for (k, &j) in set.iter().enumerate() {
            match self.extend(&codes, k, j) {
                Some(next) => codes = next,
                None => return false,
            }
        }
        true
    }

    /// Lexicographically smallest shattered column set of maximum size.
    fn largest(&self) -> Vec<usize> {
        let mut best = Vec::new();
        if self.rows > 0 {
            let mut current = Vec::new();
            self.search_largest(&vec![0; self.rows], 0, &mut current, &mut best);
        }
        best
    }

    fn search_largest(
        &self,
        codes: &[u64],
        start: usize,
        current: &mut Vec<usize>,
        best: &mut Vec<usize>,
    ) {
        if current.len() > best.len() {
            best.clone_from(current);
        }
        for j in start..self.cols.len() {
            if current.len() + (self.cols.len() - j) <= best.len() {
                return;
            }
            if let Some(next) = self.extend(codes, current.len(), j) {
                current.push(j);
                self.search_largest(&next, j + 1, current, best);
                current.pop();
            }
        }
    }

    /// Lexicographically smallest shattered column set of exactly `size` columns.
    fn first_of_size(&self, size: usize) -> Option<Vec<usize>> {
        if self.rows == 0 {
            return None;
        }
        let mut current = Vec::new();
        self.search_size(&vec![0; self.rows], 0, size, &mut current)
    }

    fn search_size(
        &self,
        codes: &[u64],
        start: usize,
        size: usize,
        current: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        if current.len() == size {
            return Some(current.clone());
        }
        let need = size - current.len();
        for j in start..self.cols.len() {
            if self.cols.len() - j < need {
                break;
            }
            if let Some(next) = self.extend(codes, current.len(), j) {
                current.push(j);
                if let Some(found) = self.search_size(&next, j + 1, size, current) {
                    return Some(found);
                }
                current.pop();
            }
        }
        None
    }
}

fn family_columns(family: &SetFamily) -> Columns<'_> {
    Columns {
        rows: family.ground(),
        cols: family.members(),
    }
}

/// True iff every cell `⋂_{i∈S1} a_i ∩ ⋂_{j∈S2} a_j^c` over disjoint
/// `S1 ∪ S2 = indices` is nonempty. An index listed twice makes the set
/// dependent. Errors on out-of-range indices.
pub fn is_independent(family: &SetFamily, indices: &[usize]) -> Result<bool> {
    family.check_indices(indices)?;
    Ok(family_columns(family).is_shattered(indices))
}

/// Size of the largest independent set of members, with the
/// lexicographically smallest witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceNumber {
    pub size: usize,
    pub witness: Vec<usize>,
}

/// Exhaustive search over member subsets in lexicographic order, extending
/// only independent sets.
pub fn independence_number(family: &SetFamily) -> IndependenceNumber {
    let witness = family_columns(family).largest();
    IndependenceNumber {
        size: witness.len(),
        witness,
    }
}

/// Lexicographically smallest independent set of exactly `size` members.
pub fn find_independent_subset(family: &SetFamily, size: usize) -> Option<Vec<usize>> {
    family_columns(family).first_of_size(size)
}

/// Largest index set shattered by a trace, lexicographically smallest
/// among maximizers.
pub fn vc_dimension(trace: &TraceSet) -> IndependenceNumber {
    let rows: Vec<_> = trace.patterns().collect();
    let cols: Vec<PointSet> = (0..trace.width())
        .map(|t| PointSet::from_points(rows.len(), (0..rows.len()).filter(|&r| rows[r].bit(t))))
        .collect();
    let witness = Columns {
        rows: rows.len(),
        cols: &cols,
    }
    .largest();
    IndependenceNumber {
        size: witness.len(),
        witness,
    }
}
