use std::fmt;

use crate::bitset::PointSet;
use crate::error::{Error, Result};

/// An indexed list of subsets of the ground set `0..ground`.
///
/// Members are addressed by position. Duplicates are allowed: witnesses refer
/// to indices, so collapsing them would change meaning. Use
/// [`SetFamily::duplicates`] to find them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    ground: usize,
    members: Vec<PointSet>,
}

impl SetFamily {
    pub fn new(ground: usize, members: Vec<PointSet>) -> Result<Self> {
        for (index, m) in members.iter().enumerate() {
            if m.ground_len() != ground {
                return Err(Error::MemberGround {
                    index,
                    expected: ground,
                    found: m.ground_len(),
                });
            }
        }
        Ok(SetFamily { ground, members })
    }

    /// Family with no members; generates the two-element algebra `{∅, ground}`.
    pub fn empty(ground: usize) -> Self {
        SetFamily {
            ground,
            members: Vec::new(),
        }
    }

    /// Builds a family from point lists, e.g. `SetFamily::from_lists(3, &[vec![0, 1]])`.
    pub fn from_lists<L: AsRef<[usize]>>(ground: usize, lists: &[L]) -> Result<Self> {
        let members = lists
            .iter()
            .map(|l| {
                PointSet::try_from_points(ground, l.as_ref().iter().copied())
                    .map_err(|point| Error::PointOutOfRange { point, ground })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SetFamily { ground, members })
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[PointSet] {
        &self.members
    }

    pub fn member(&self, index: usize) -> Result<&PointSet> {
        self.members.get(index).ok_or(Error::MemberOutOfRange {
            index,
            len: self.members.len(),
        })
    }

    pub fn push(&mut self, member: PointSet) -> Result<()> {
        if member.ground_len() != self.ground {
            return Err(Error::MemberGround {
                index: self.members.len(),
                expected: self.ground,
                found: member.ground_len(),
            });
        }
        self.members.push(member);
        Ok(())
    }

    /// Pairs `(first, later)` of indices whose members are equal as sets.
    pub fn duplicates(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 0..self.members.len() {
            if let Some(i) = (0..j).find(|&i| self.members[i] == self.members[j]) {
                out.push((i, j));
            }
        }
        out
    }

    /// The members at `indices`, in the given order.
    pub fn subfamily(&self, indices: &[usize]) -> Result<SetFamily> {
        let members = indices
            .iter()
            .map(|&i| self.member(i).cloned())
            .collect::<Result<Vec<_>>>()?;
        Ok(SetFamily {
            ground: self.ground,
            members,
        })
    }

    /// Membership pattern of a point across all members.
    pub fn point_signature(&self, point: usize) -> Signature {
        Signature(self.members.iter().map(|m| m.contains(point)).collect())
    }

    pub(crate) fn check_indices(&self, indices: &[usize]) -> Result<()> {
        match indices.iter().find(|&&i| i >= self.members.len()) {
            Some(&index) => Err(Error::MemberOutOfRange {
                index,
                len: self.members.len(),
            }),
            None => Ok(()),
        }
    }
}

/// A 0/1 word indexed by member positions: the pattern `f ∈ 2^T`.
///
/// Ordered lexicographically with member 0 as the most significant letter
/// and `0 < 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Signature(pub Vec<bool>);

impl Signature {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bit(&self, index: usize) -> bool {
        self.0[index]
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    /// Restriction to the listed coordinates, in the given order.
    pub fn restrict(&self, indices: &[usize]) -> Signature {
        Signature(indices.iter().map(|&i| self.0[i]).collect())
    }

    /// Parses a word of `0`/`1` characters.
    pub fn parse(word: &str) -> Option<Signature> {
        word.chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Signature)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}
