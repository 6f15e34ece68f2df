use freedim::coverlab::{
    atoms_refinement, build_grid_instance, exponent_fit, find_min_n, good_cover_floor,
    interval_joint_refinement, is_good, is_refinement, product_cover, push_cover, restrict_cover,
    witness_check, Cover, CountingParams, GrowthWitness, Rational,
};
use freedim::PointSet;
use proptest::prelude::*;
use proptest::strategy::ValueTree;

/// Covers of `0..n` built from random cells, with each point patched into
/// some cell so the union is complete.
fn cover_on(n: usize) -> impl Strategy<Value = Cover> {
    (
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), n), 1..5),
        proptest::collection::vec(0usize..5, n),
    )
        .prop_map(move |(rows, home)| {
            let k = rows.len();
            let mut cells: Vec<PointSet> = rows
                .iter()
                .map(|r| PointSet::from_points(n, (0..n).filter(|&p| r[p])))
                .collect();
            for (p, h) in home.iter().enumerate() {
                cells[h % k].insert(p);
            }
            cells.retain(|c| !c.is_empty());
            Cover::new(n, cells).unwrap()
        })
}

/// A partition of `0..n` from a block label per point.
fn partition_on(n: usize) -> impl Strategy<Value = Cover> {
    proptest::collection::vec(0usize..4, n).prop_map(move |labels| {
        let cells = (0..4)
            .map(|b| PointSet::from_points(n, (0..n).filter(|&p| labels[p] == b)))
            .filter(|c| !c.is_empty())
            .collect();
        Cover::new(n, cells).unwrap()
    })
}

/// Interval cover of the chain `0..len` from sorted cut points; `overlap`
/// decides whether neighbouring intervals share their endpoint.
fn interval_cover(len: usize) -> impl Strategy<Value = Cover> {
    (proptest::collection::btree_set(1..len.max(2), 0..6), proptest::collection::vec(any::<bool>(), 6)).prop_map(
        move |(cuts, overlap)| {
            let mut bounds = Vec::new();
            let mut lo = 0;
            for (i, &c) in cuts.iter().filter(|&&c| c < len).enumerate() {
                bounds.push((lo, if overlap[i] { c } else { c - 1 }));
                lo = c;
            }
            bounds.push((lo, len - 1));
            Cover::intervals(len, &bounds).unwrap()
        },
    )
}

/// Every partition of `0..n` as a block-label vector in restricted growth form.
fn all_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, n: usize, labels: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(labels.clone());
            return;
        }
        let next = labels.iter().copied().max().map_or(0, |m| m + 1);
        for b in 0..=next {
            labels.push(b);
            go(i + 1, n, labels, out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

fn labels_to_cover(n: usize, labels: &[usize]) -> Cover {
    let blocks = labels.iter().max().map_or(0, |m| m + 1);
    let cells = (0..blocks)
        .map(|b| PointSet::from_points(n, (0..n).filter(|&p| labels[p] == b)))
        .collect();
    Cover::new(n, cells).unwrap()
}

proptest! {
    #[test]
    fn refinement_is_reflexive_and_transitive(
        (a, b, c) in (1usize..9).prop_flat_map(|n| (cover_on(n), cover_on(n), cover_on(n)))
    ) {
        prop_assert!(is_refinement(&a, &a).unwrap());
        if is_refinement(&a, &b).unwrap() && is_refinement(&b, &c).unwrap() {
            prop_assert!(is_refinement(&a, &c).unwrap());
        }
        // Chains built through the joint refinement exercise the transitive case.
        let ab = atoms_refinement(&[a.clone(), b.clone()]).unwrap();
        prop_assert!(is_refinement(&ab, &a).unwrap() && is_refinement(&ab, &b).unwrap());
        let abc = atoms_refinement(&[ab.clone(), c.clone()]).unwrap();
        prop_assert!(is_refinement(&abc, &ab).unwrap());
        prop_assert!(is_refinement(&abc, &a).unwrap());
    }

    #[test]
    fn atoms_refinement_resolves_every_cell(covers in (1usize..9).prop_flat_map(|n| proptest::collection::vec(cover_on(n), 1..4))) {
        let joint = atoms_refinement(&covers).unwrap();
        prop_assert!(joint.is_partition());
        for c in &covers {
            prop_assert!(is_refinement(&joint, c).unwrap());
            for cell in c.cells() {
                for j in joint.cells() {
                    prop_assert!(j.is_subset(cell) || j.is_disjoint(cell));
                }
            }
        }
    }

    #[test]
    fn interval_refinement_budget(covers in (1usize..30).prop_flat_map(|l| proptest::collection::vec(interval_cover(l), 1..5))) {
        let len = covers[0].ground();
        let joint = interval_joint_refinement(len, &covers).unwrap();
        let budget: usize = covers.iter().map(|c| 2 * c.len()).sum();
        prop_assert!(joint.len() <= budget);
        for c in &covers {
            prop_assert!(is_refinement(&joint, c).unwrap());
        }
        for cell in joint.cells() {
            prop_assert!(Cover::interval_bounds(cell).is_some());
        }
    }

    #[test]
    fn push_is_monotone_and_shrinks(
        (a, b, map, target) in (1usize..9).prop_flat_map(|n| {
            (cover_on(n), cover_on(n), proptest::collection::vec(0usize..n, n), 1..=n)
        })
    ) {
        // Force surjectivity onto 0..target.
        let mut map: Vec<usize> = map.iter().map(|&x| x % target).collect();
        for (t, slot) in map.iter_mut().enumerate().take(target) {
            *slot = t;
        }
        let fine = atoms_refinement(&[a.clone(), b]).unwrap();
        let pa = push_cover(&map, target, &a).unwrap();
        let pf = push_cover(&map, target, &fine).unwrap();
        prop_assert!(pa.len() <= a.len());
        prop_assert!(pf.len() <= fine.len());
        prop_assert!(is_refinement(&pf, &pa).unwrap());
    }

    #[test]
    fn restrict_is_monotone_and_shrinks(
        (a, b, keep) in (1usize..9).prop_flat_map(|n| (cover_on(n), cover_on(n), proptest::collection::vec(any::<bool>(), n)))
    ) {
        let n = a.ground();
        let mut subset = PointSet::from_points(n, (0..n).filter(|&p| keep[p]));
        if subset.is_empty() {
            subset.insert(0);
        }
        let fine = atoms_refinement(&[a.clone(), b]).unwrap();
        let ra = restrict_cover(&a, &subset).unwrap();
        let rf = restrict_cover(&fine, &subset).unwrap();
        prop_assert_eq!(ra.ground(), subset.count());
        prop_assert!(ra.len() <= a.len());
        prop_assert!(rf.len() <= fine.len());
        prop_assert!(is_refinement(&rf, &ra).unwrap());
    }

    #[test]
    fn good_covers_respect_the_floor(cover in cover_on(12)) {
        // build_grid_instance(1, 2, 3) has 3 * 4 = 12 points.
        let inst = build_grid_instance(1, 2, 3).unwrap();
        let check = good_cover_floor(&inst, &cover).unwrap();
        prop_assert!(check.floor_respected);
        if check.good {
            prop_assert!(check.max_points_per_cell <= 1);
        }
    }

    #[test]
    fn zero_dimensional_witness_is_a_size_cap(
        covers in (1usize..7).prop_flat_map(|n| proptest::collection::vec(cover_on(n), 1..4)),
        m in 1i64..8,
    ) {
        let k = covers.len();
        let w = GrowthWitness::new(0, Rational::from_integer(m), vec![1; k], covers.clone(), false).unwrap();
        let tuples: Vec<Vec<usize>> = (1u32..1 << k).map(|mask| (0..k).filter(|i| mask >> i & 1 == 1).collect()).collect();
        let rows = witness_check(&w, &tuples).unwrap();
        for (row, t) in rows.iter().zip(&tuples) {
            let size = atoms_refinement(&t.iter().map(|&i| covers[i].clone()).collect::<Vec<_>>()).unwrap().len();
            prop_assert_eq!(row.pass, size as i64 <= m);
        }
    }
}

#[test]
fn atoms_refinement_is_the_meet_of_partitions() {
    for n in 1..=6 {
        let parts = all_partitions(n);
        let covers: Vec<Cover> = parts.iter().map(|l| labels_to_cover(n, l)).collect();
        // All pairs for n <= 5, a stride through them for n = 6.
        let stride = if n == 6 { 7 } else { 1 };
        for a in covers.iter().step_by(stride) {
            for b in covers.iter().step_by(stride) {
                let joint = atoms_refinement(&[a.clone(), b.clone()]).unwrap();
                // Among all partitions refining both, joint is refined by each
                // of them, i.e. it is the coarsest.
                for c in &covers {
                    if is_refinement(c, a).unwrap() && is_refinement(c, b).unwrap() {
                        assert!(is_refinement(c, &joint).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn meet_of_random_partitions_on_eight_points() {
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    let strat = (partition_on(8), partition_on(8));
    let all: Vec<Cover> = all_partitions(8).iter().map(|l| labels_to_cover(8, l)).collect();
    for _ in 0..20 {
        let (a, b) = strat.new_tree(&mut runner).unwrap().current();
        let joint = atoms_refinement(&[a.clone(), b.clone()]).unwrap();
        for c in &all {
            if is_refinement(c, &a).unwrap() && is_refinement(c, &b).unwrap() {
                assert!(is_refinement(c, &joint).unwrap());
            }
        }
    }
}

#[test]
fn product_of_interval_witnesses_passes_with_max_chi() {
    let len = 6;
    let factor_covers = [
        Cover::intervals(len, &[(0, 2), (2, 5)]).unwrap(),
        Cover::intervals(len, &[(0, 0), (1, 3), (3, 5)]).unwrap(),
        Cover::intervals(len, &[(0, 4), (5, 5)]).unwrap(),
    ];
    let mut family = Vec::new();
    let mut chi = Vec::new();
    for a in &factor_covers {
        for b in &factor_covers {
            family.push(product_cover(a, b).unwrap());
            chi.push(2 * a.len().max(b.len()) as u64);
        }
    }
    let w = GrowthWitness::new(2, Rational::from_integer(1), chi, family.clone(), false).unwrap();
    let k = family.len();
    let tuples: Vec<Vec<usize>> = (1u32..1 << k).step_by(3).map(|mask| (0..k).filter(|i| mask >> i & 1 == 1).collect()).collect();
    let rows = witness_check(&w, &tuples).unwrap();
    assert!(rows.iter().all(|r| r.pass));
}

#[test]
fn counting_soundness_grid() {
    for d in 1..=3u64 {
        for m in 1..=3u64 {
            for m1 in 1..=3u64 {
                for p in 1..=30u64 {
                    let params = CountingParams::new(d, m, m1, p, 1).unwrap();
                    if params.p_is_large_enough().unwrap() {
                        let n = find_min_n(d, m, m1, p, 1_000_000).unwrap();
                        assert!(n.is_some(), "d={d} m={m} m1={m1} p={p}");
                    }
                }
            }
        }
    }
}

#[test]
fn good_candidates_on_small_grid() {
    let inst = build_grid_instance(1, 1, 1).unwrap();
    assert!(is_good(&Cover::singletons(4), inst.functions()));
    assert!(!is_good(&Cover::trivial(4), inst.functions()));
}

#[test]
fn exponent_of_square_law_with_offset() {
    let samples: Vec<(f64, f64)> = [8.0, 16.0, 32.0, 64.0]
        .iter()
        .map(|&b: &f64| (b, (b / 2.0 + 1.0).powi(2)))
        .collect();
    let e = exponent_fit(&samples).unwrap();
    assert!((e - 2.0).abs() < 0.25, "{e}");
}
