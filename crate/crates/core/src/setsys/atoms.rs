use std::collections::{BTreeMap, HashMap};

use super::family::{SetFamily, Signature};
use super::trace::TraceSet;
use crate::bitset::PointSet;

/// One atom of a generated subalgebra together with its membership pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atom {
    pub cell: PointSet,
    pub signature: Signature,
}

/// The atoms of the Boolean subalgebra of `2^ground` generated by a family.
///
/// Cells are nonempty, pairwise disjoint, cover the ground set, and are
/// sorted by signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomPartition {
    ground: usize,
    atoms: Vec<Atom>,
}

impl AtomPartition {
    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn cells(&self) -> impl Iterator<Item = &PointSet> {
        self.atoms.iter().map(|a| &a.cell)
    }

    pub fn into_cells(self) -> Vec<PointSet> {
        self.atoms.into_iter().map(|a| a.cell).collect()
    }

    /// Index of the atom containing `point`.
    pub fn atom_of(&self, point: usize) -> Option<usize> {
        self.atoms.iter().position(|a| a.cell.contains(point))
    }
}

/// Atoms of the subalgebra generated by `family`: the classes of points that
/// share a membership pattern.
///
/// ```
/// use freedim::setsys::{atoms, SetFamily};
/// let f = SetFamily::from_lists(4, &[vec![0, 1], vec![1, 2]]).unwrap();
/// let sigs: Vec<String> = atoms(&f).atoms().iter().map(|a| a.signature.to_string()).collect();
/// assert_eq!(sigs, ["00", "01", "10", "11"]);
/// ```
pub fn atoms(family: &SetFamily) -> AtomPartition {
    let ground = family.ground();
    let mut classes: BTreeMap<Signature, PointSet> = BTreeMap::new();
    for p in 0..ground {
        classes
            .entry(family.point_signature(p))
            .or_insert_with(|| PointSet::empty(ground))
            .insert(p);
    }
    AtomPartition {
        ground,
        atoms: classes
            .into_iter()
            .map(|(signature, cell)| Atom { cell, signature })
            .collect(),
    }
}

/// Patterns `f ∈ 2^T` whose cell `a_1^{f(1)} ∩ … ∩ a_N^{f(N)}` is nonempty.
pub fn realized_trace(family: &SetFamily) -> TraceSet {
    TraceSet::from_patterns_unchecked(
        family.len(),
        atoms(family).atoms.into_iter().map(|a| a.signature),
    )
}

/// True if `set` is a union of atoms of `family`, i.e. lies in the
/// subalgebra the family generates.
pub fn in_generated_algebra(family: &SetFamily, set: &PointSet) -> bool {
    let mut seen: HashMap<Signature, bool> = HashMap::new();
    (0..family.ground()).all(|p| {
        let inside = set.contains(p);
        *seen.entry(family.point_signature(p)).or_insert(inside) == inside
    })
}

/// Smallest index `i` such that member `i` lies in the subalgebra generated
/// by the other members, or `None` if the family is irredundant.
pub fn irredundancy_violation(family: &SetFamily) -> Option<usize> {
    (0..family.len()).find(|&i| {
        let rest: Vec<usize> = (0..family.len()).filter(|&j| j != i).collect();
        let others = family.subfamily(&rest).expect("indices in range");
        in_generated_algebra(&others, &family.members()[i])
    })
}

pub fn is_irredundant(family: &SetFamily) -> bool {
    irredundancy_violation(family).is_none()
}
