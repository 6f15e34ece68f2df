use crate::bitset::PointSet;
use crate::error::{Error, Result};
use crate::setsys::{atoms, SetFamily};

/// A finite pseudotree encoded by a parent map.
///
/// `s ≤ t` iff `s` lies on the parent path from `t` (inclusive), so every
/// down-set `(-∞, t]` is the chain of ancestors of `t`. Several roots are
/// allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pseudotree {
    parent: Vec<Option<usize>>,
}

impl Pseudotree {
    /// Rejects out-of-range parents and cycles.
    pub fn new(parent: Vec<Option<usize>>) -> Result<Self> {
        let n = parent.len();
        if let Some(node) = parent.iter().flatten().copied().find(|&p| p >= n) {
            return Err(Error::NodeOutOfRange { node, len: n });
        }
        // 0 = unvisited, 1 = on the current path, 2 = known to reach a root.
        let mut state = vec![0u8; n];
        for start in 0..n {
            let mut path = Vec::new();
            let mut v = Some(start);
            while let Some(u) = v {
                match state[u] {
                    2 => break,
                    1 => {
                        let from = path.iter().position(|&x| x == u).unwrap_or(0);
                        return Err(Error::Cycle(path[from..].to_vec()));
                    }
                    _ => {
                        state[u] = 1;
                        path.push(u);
                        v = parent[u];
                    }
                }
            }
            for u in path {
                state[u] = 2;
            }
        }
        Ok(Pseudotree { parent })
    }

    pub fn empty() -> Self {
        Pseudotree { parent: Vec::new() }
    }

    /// The chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Self {
        Pseudotree {
            parent: (0..n).map(|i| i.checked_sub(1)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn parent(&self, node: usize) -> Option<usize> {
        self.parent[node]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn roots(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.parent[v].is_none()).collect()
    }

    /// Ancestors of `node`, from `node` itself down to its root.
    pub fn ancestors(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        std::iter::successors(Some(node), move |&v| self.parent[v])
    }

    pub fn le(&self, s: usize, t: usize) -> bool {
        self.ancestors(t).any(|v| v == s)
    }

    /// `(-∞, t]`.
    pub fn down_set(&self, t: usize) -> Result<PointSet> {
        self.check_node(t)?;
        Ok(PointSet::from_points(self.len(), self.ancestors(t)))
    }

    fn check_node(&self, node: usize) -> Result<()> {
        if node < self.len() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node,
                len: self.len(),
            })
        }
    }
}

/// Makes the pseudotree well-met.
///
/// In a finite pseudotree any two elements with a common lower bound have a
/// greatest one (the lower bounds form a finite chain), so the only defect is
/// a pair living under different roots. With two or more roots a new node
/// `len()` is adjoined below all of them; otherwise the input is returned.
pub fn wellmet_closure(tree: &Pseudotree) -> Pseudotree {
    let roots = tree.roots();
    if roots.len() < 2 {
        return tree.clone();
    }
    let bottom = tree.len();
    let mut parent = tree.parent.clone();
    for r in roots {
        parent[r] = Some(bottom);
    }
    parent.push(None);
    Pseudotree { parent }
}

/// Members `(-∞, picks[i]]`, on the pseudotree's own nodes.
pub fn initial_chains(tree: &Pseudotree, picks: &[usize]) -> Result<SetFamily> {
    let members = picks
        .iter()
        .map(|&t| tree.down_set(t))
        .collect::<Result<Vec<_>>>()?;
    SetFamily::new(tree.len(), members)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IcaReport {
    pub atoms: usize,
    /// `2·|picks|`.
    pub budget: usize,
    /// `atoms <= budget`, or the empty-pick convention.
    pub holds: bool,
    /// No picks: `Atom(∅)` is the single ground cell and the bound is not
    /// claimed.
    pub vacuous: bool,
}

/// Counts atoms of the initial chains at `picks`, taken in the well-met
/// closure of `tree`, against the budget `2·|picks|`.
///
/// ```
/// use freedim::algebras::{ica_bound_report, Pseudotree};
/// let star = Pseudotree::new(vec![None, Some(0), Some(0), Some(0)]).unwrap();
/// let r = ica_bound_report(&star, &[1, 2, 3]).unwrap();
/// assert_eq!((r.atoms, r.budget, r.holds), (4, 6, true));
/// ```
pub fn ica_bound_report(tree: &Pseudotree, picks: &[usize]) -> Result<IcaReport> {
    for &t in picks {
        tree.check_node(t)?;
    }
    let closed = wellmet_closure(tree);
    let family = initial_chains(&closed, picks)?;
    let atoms = atoms(&family).len();
    let budget = 2 * picks.len();
    let vacuous = picks.is_empty();
    Ok(IcaReport {
        atoms,
        budget,
        holds: vacuous || atoms <= budget,
        vacuous,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: usize) -> Pseudotree {
        let mut parent = vec![None];
        parent.extend((0..leaves).map(|_| Some(0)));
        Pseudotree::new(parent).unwrap()
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            Pseudotree::new(vec![Some(1), Some(0)]),
            Err(Error::Cycle(vec![0, 1]))
        );
        assert_eq!(
            Pseudotree::new(vec![None, Some(7)]),
            Err(Error::NodeOutOfRange { node: 7, len: 2 })
        );
        assert_eq!(Pseudotree::new(vec![Some(0)]), Err(Error::Cycle(vec![0])));
        assert!(Pseudotree::new(vec![]).unwrap().is_empty());
    }

    #[test]
    fn down_sets_are_chains() {
        let t = Pseudotree::new(vec![None, Some(0), Some(0), Some(1), Some(1), None, Some(5)]).unwrap();
        for v in 0..t.len() {
            let down: Vec<usize> = t.down_set(v).unwrap().to_vec();
            for &a in &down {
                for &b in &down {
                    assert!(t.le(a, b) || t.le(b, a));
                }
            }
        }
    }

    #[test]
    fn closure_examples() {
        let s = star(3);
        assert_eq!(wellmet_closure(&s), s);
        let two = Pseudotree::new(vec![None, None]).unwrap();
        let closed = wellmet_closure(&two);
        assert_eq!(closed.parents(), &[Some(2), Some(2), None]);
        assert_eq!(wellmet_closure(&Pseudotree::empty()), Pseudotree::empty());
        assert_eq!(wellmet_closure(&closed), closed);
    }

    #[test]
    fn initial_chain_examples() {
        let chain = Pseudotree::chain(3);
        let f = initial_chains(&chain, &[0, 1]).unwrap();
        assert_eq!(f.members()[0].to_vec(), vec![0]);
        assert_eq!(f.members()[1].to_vec(), vec![0, 1]);

        let s = star(3);
        let f = initial_chains(&s, &[1, 2, 3]).unwrap();
        assert_eq!(f.members()[2].to_vec(), vec![0, 3]);
        assert!(initial_chains(&s, &[4]).is_err());
    }

    #[test]
    fn ica_examples() {
        let r = ica_bound_report(&Pseudotree::chain(3), &[0, 1]).unwrap();
        assert_eq!((r.atoms, r.budget, r.holds), (3, 4, true));
        let r = ica_bound_report(&star(3), &[1, 2, 3]).unwrap();
        assert_eq!((r.atoms, r.budget, r.holds), (4, 6, true));
        let r = ica_bound_report(&star(3), &[2]).unwrap();
        assert_eq!((r.atoms, r.budget, r.holds), (2, 2, true));
        let r = ica_bound_report(&star(3), &[]).unwrap();
        assert_eq!(
            r,
            IcaReport { atoms: 1, budget: 0, holds: true, vacuous: true }
        );
        assert!(ica_bound_report(&star(3), &[9]).is_err());
    }
}
