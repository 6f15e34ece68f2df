use crate::bitset::PointSet;
use crate::error::{Error, Result};
use crate::setsys::SetFamily;

/// Initial segments `[0, c]` of the chain `0 < 1 < … < length-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCuts {
    length: usize,
    cuts: Vec<usize>,
}

impl ChainCuts {
    pub fn new(length: usize, cuts: Vec<usize>) -> Result<Self> {
        if let Some(&cut) = cuts.iter().find(|&&c| c >= length) {
            return Err(Error::CutOutOfRange { cut, length });
        }
        Ok(ChainCuts { length, cuts })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn cuts(&self) -> &[usize] {
        &self.cuts
    }
}

/// The family `[[0, c] : c ∈ cuts]` on the chain's points.
pub fn chain_initial_segments(cuts: &ChainCuts) -> SetFamily {
    let members = cuts
        .cuts
        .iter()
        .map(|&c| PointSet::interval(cuts.length, 0, c))
        .collect();
    SetFamily::new(cuts.length, members).expect("segments live on the chain")
}

/// First pair `(i, j)`, `i < j`, of members that overlap without being
/// comparable. `None` means every two members are comparable or disjoint.
pub fn heindorf_violation(family: &SetFamily) -> Option<(usize, usize)> {
    let m = family.members();
    (0..m.len())
        .flat_map(|i| (i + 1..m.len()).map(move |j| (i, j)))
        .find(|&(i, j)| {
            let (a, b) = (&m[i], &m[j]);
            a.intersects(b) && !a.is_subset(b) && !b.is_subset(a)
        })
}

pub fn heindorf_check(family: &SetFamily) -> bool {
    heindorf_violation(family).is_none()
}
