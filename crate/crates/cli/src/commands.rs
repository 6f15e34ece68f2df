use std::path::{Path, PathBuf};

use freedim::algebras::{
    certify_class_d, chain_initial_segments, doubling_schedule, free_product, growth_bound_report,
    growth_samples, heindorf_violation, ica_bound_report, sample_subsets,
};
use freedim::coverlab::{
    atoms_refinement, build_grid_instance, counting_check, exponent_fit, find_min_n,
    good_cover_floor, interval_joint_refinement, is_refinement, push_cover, restrict_cover,
    separated_family, witness_check, Cover, CountingParams, GrowthWitness, Rational,
};
use freedim::setsys::{
    atoms, binomial_bound, independence_number, is_independent, realized_trace,
    sauer_shelah_find, vc_dimension, SetFamily, Signature, TraceSet,
};
use freedim::PointSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::docs::{
    ChainCutsDoc, CoverFamilyDoc, InstanceParamsDoc, ParsedCoverFamily, PseudotreeDoc,
    SetSystemDoc,
};
use crate::{read_input, Command, Ctx, Failure, Report};

type Out = Result<Report, Failure>;

fn list(items: &[usize]) -> String {
    let parts: Vec<String> = items.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn located(path: &Path, e: impl std::fmt::Display) -> Failure {
    Failure(format!("{}: {e}", path.display()))
}

/// Reads a set family from either a `setsystem` or a `chaincuts` document;
/// documents with a `cuts` field are read as chain cuts.
fn load_family(path: &Path, ctx: &mut Ctx) -> Result<SetFamily, Failure> {
    let text = read_input(path)?;
    let is_chain = serde_json::from_str::<serde_json::Value>(&text)
        .map(|v| v.get("cuts").is_some())
        .unwrap_or(false);
    if is_chain {
        let cuts = ChainCutsDoc::parse(&text)
            .and_then(|d| d.validate())
            .map_err(|e| located(path, e))?;
        return Ok(chain_initial_segments(&cuts));
    }
    let parsed = SetSystemDoc::parse(&text)
        .and_then(|d| d.validate())
        .map_err(|e| located(path, e))?;
    ctx.warnings
        .extend(parsed.warnings.into_iter().map(|w| format!("{}: {w}", path.display())));
    Ok(parsed.family)
}

fn load_covers(path: &Path) -> Result<ParsedCoverFamily, Failure> {
    let text = read_input(path)?;
    CoverFamilyDoc::parse(&text)
        .and_then(|d| d.validate())
        .map_err(|e| located(path, e))
}

fn load_params(path: &Option<PathBuf>) -> Result<InstanceParamsDoc, Failure> {
    match path {
        Some(p) => InstanceParamsDoc::parse(&read_input(p)?).map_err(|e| located(p, e)),
        None => Ok(InstanceParamsDoc::default()),
    }
}

fn need(flag: Option<u64>, file: Option<u64>, name: &str) -> Result<u64, Failure> {
    flag.or(file)
        .ok_or_else(|| Failure(format!("missing parameter `{name}` (pass --{name} or a params file)")))
}

fn pick_cover(family: &ParsedCoverFamily, index: usize) -> Result<&Cover, Failure> {
    family.covers.get(index).ok_or_else(|| {
        Failure(format!("--cover {index} is out of range for {} covers", family.covers.len()))
    })
}

fn cover_rows(report: &mut Report, cover: &Cover) {
    for (i, cell) in cover.cells().iter().enumerate() {
        report.row(vec![i.to_string(), cell.count().to_string(), cell.to_string()]);
    }
}

pub(crate) fn dispatch(command: &Command, ctx: &mut Ctx) -> Out {
    match command {
        Command::Atoms { input } => {
            let f = load_family(input, ctx)?;
            let mut r = Report::new("atoms", &["atom", "signature", "size", "points"]);
            let part = atoms(&f);
            for (i, a) in part.atoms().iter().enumerate() {
                r.row(vec![i.to_string(), a.signature.to_string(), a.cell.count().to_string(), a.cell.to_string()]);
            }
            r.note("ground_size", f.ground());
            r.note("members", f.len());
            r.note("atoms", part.len());
            Ok(r)
        }
        Command::Indep { input, indices } => {
            let f = load_family(input, ctx)?;
            match indices {
                Some(idx) => {
                    let mut r = Report::new("indep", &["indices", "independent"]);
                    let ind = is_independent(&f, idx)?;
                    r.row(vec![list(idx), ind.to_string()]);
                    Ok(r)
                }
                None => {
                    let mut r = Report::new("indep", &["independence_number", "witness"]);
                    let n = independence_number(&f);
                    r.row(vec![n.size.to_string(), list(&n.witness)]);
                    Ok(r)
                }
            }
        }
        Command::Vc { input } => {
            let f = load_family(input, ctx)?;
            let patterns = f
                .members()
                .iter()
                .map(|m| Signature((0..f.ground()).map(|p| m.contains(p)).collect()));
            let trace = TraceSet::new(f.ground(), patterns)?;
            let vc = vc_dimension(&trace);
            let mut r = Report::new("vc", &["vc_dimension", "shattered_points"]);
            r.row(vec![vc.size.to_string(), list(&vc.witness)]);
            Ok(r)
        }
        Command::Sauer { input, d } => {
            let f = load_family(input, ctx)?;
            let trace = realized_trace(&f);
            let bound = binomial_bound(trace.width() as u64, *d as u64)?;
            let found = sauer_shelah_find(&trace, *d);
            let above = trace.len() as u128 > bound;
            let mut r = Report::new("sauer", &["width", "d", "trace_size", "bound", "shattered"]);
            r.row(vec![
                trace.width().to_string(),
                d.to_string(),
                trace.len().to_string(),
                bound.to_string(),
                found.as_deref().map_or_else(|| "none".to_string(), list),
            ]);
            if above {
                r.verdict(found.is_some());
            }
            Ok(r)
        }
        Command::Heindorf { input } => {
            let f = load_family(input, ctx)?;
            let violation = heindorf_violation(&f);
            let mut r = Report::new("heindorf", &["members", "violation"]);
            r.row(vec![
                f.len().to_string(),
                violation.map_or_else(|| "none".to_string(), |(i, j)| list(&[i, j])),
            ]);
            r.verdict(violation.is_none());
            Ok(r)
        }
        Command::IcaCheck { input, picks } => {
            let tree = PseudotreeDoc::parse(&read_input(input)?)
                .and_then(|d| d.validate())
                .map_err(|e| located(input, e))?;
            let rep = ica_bound_report(&tree, picks)?;
            let mut r = Report::new("ica-check", &["picks", "atoms", "budget", "holds", "vacuous"]);
            r.row(vec![
                list(picks),
                rep.atoms.to_string(),
                rep.budget.to_string(),
                rep.holds.to_string(),
                rep.vacuous.to_string(),
            ]);
            r.verdict(rep.holds);
            Ok(r)
        }
        Command::FreeProduct { inputs } => {
            let factors = inputs
                .iter()
                .map(|p| load_family(p, ctx))
                .collect::<Result<Vec<_>, _>>()?;
            let prod = free_product(&factors)?;
            let mut r = Report::new("free-product", &["cylinder", "factor", "member", "size", "points"]);
            for (j, m) in prod.family().members().iter().enumerate() {
                let (fi, mi) = prod.origin(j);
                r.row(vec![j.to_string(), fi.to_string(), mi.to_string(), m.count().to_string(), m.to_string()]);
            }
            let radices: Vec<usize> = prod.radices().to_vec();
            r.note("radices", list(&radices));
            r.note("ground_size", prod.ground());
            r.note("atoms", atoms(prod.family()).len());
            let factor_atoms: Vec<usize> = factors.iter().map(|f| atoms(f).len()).collect();
            r.note("factor_atoms", list(&factor_atoms));
            Ok(r)
        }
        Command::Certify { input, d } => {
            let f = load_family(input, ctx)?;
            let cert = certify_class_d(&f, *d);
            let mut r = Report::new("certify", &["d", "members", "verified", "counterexample"]);
            r.row(vec![
                d.to_string(),
                f.len().to_string(),
                cert.verified.to_string(),
                cert.counterexample.as_deref().map_or_else(|| "none".to_string(), list),
            ]);
            r.verdict(cert.verified);
            Ok(r)
        }
        Command::GrowthReport { input, d, samples } => {
            let f = load_family(input, ctx)?;
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
            let mut subsets = Vec::new();
            if !f.is_empty() {
                let sizes: Vec<usize> = (0..*samples).map(|_| rng.gen_range(1..=f.len())).collect();
                subsets = sample_subsets(f.len(), &sizes, &mut rng);
                subsets.push((0..f.len()).collect());
            }
            let rep = growth_bound_report(&f, *d, &subsets)?;
            let mut r = Report::new("growth-report", &["indices", "size", "atoms", "binomial", "polynomial", "holds"]);
            for row in &rep.rows {
                r.row(vec![
                    list(&row.indices),
                    row.size.to_string(),
                    row.atoms.to_string(),
                    row.binomial.to_string(),
                    row.polynomial.to_string(),
                    row.holds.to_string(),
                ]);
            }
            let violations = rep.violations().count();
            r.note("d", d);
            r.note("certified", rep.certified);
            r.note("violations", violations);
            r.verdict(rep.certified && violations == 0);
            Ok(r)
        }
        Command::Refine { input, covers } => {
            let fam = load_covers(input)?;
            let chosen: Vec<Cover> = match covers {
                Some(idx) => idx.iter().map(|&i| pick_cover(&fam, i).cloned()).collect::<Result<_, _>>()?,
                None => fam.covers.clone(),
            };
            let joint = if fam.interval {
                interval_joint_refinement(fam.ground, &chosen)?
            } else {
                atoms_refinement(&chosen)?
            };
            let mut r = Report::new("refine", &["cell", "size", "points"]);
            cover_rows(&mut r, &joint);
            let refines = chosen
                .iter()
                .map(|c| is_refinement(&joint, c))
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .all(|b| b);
            r.note("method", if fam.interval { "interval endpoints" } else { "atoms of pooled cells" });
            r.note("cells", joint.len());
            r.note("refines_inputs", refines);
            if fam.interval {
                let budget: usize = chosen.iter().map(|c| 2 * c.len()).sum();
                r.note("budget", budget);
                r.verdict(refines && joint.len() <= budget);
            } else {
                r.verdict(refines);
            }
            Ok(r)
        }
        Command::Push { input, map, cover } => {
            let fam = load_covers(input)?;
            let c = pick_cover(&fam, *cover)?;
            let target = map.iter().max().map_or(0, |&m| m + 1);
            let pushed = push_cover(map, target, c)?;
            let mut r = Report::new("push", &["cell", "size", "points"]);
            cover_rows(&mut r, &pushed);
            r.note("target_size", target);
            r.note("source_cells", c.len());
            r.note("image_cells", pushed.len());
            Ok(r)
        }
        Command::Restrict { input, subset, cover } => {
            let fam = load_covers(input)?;
            let c = pick_cover(&fam, *cover)?;
            let sub = PointSet::try_from_points(fam.ground, subset.iter().copied()).map_err(|p| {
                Failure(format!("--subset point {p} is outside ground_size {}", fam.ground))
            })?;
            let restricted = restrict_cover(c, &sub)?;
            let mut r = Report::new("restrict", &["cell", "size", "points"]);
            cover_rows(&mut r, &restricted);
            r.note("subset", list(&sub.to_vec()));
            r.note("source_cells", c.len());
            r.note("restricted_cells", restricted.len());
            Ok(r)
        }
        Command::WitnessCheck { input, m, d, tuple } => {
            let fam = load_covers(input)?;
            let m: Rational = m
                .trim()
                .parse()
                .map_err(|_| Failure(format!("--m {m:?} is not a rational p/q")))?;
            let chi = fam.chi.clone().unwrap_or_else(|| {
                let scale = if fam.interval { 2 } else { 1 };
                fam.covers.iter().map(|c| scale * c.len() as u64).collect()
            });
            let k = fam.covers.len();
            let tuples: Vec<Vec<usize>> = if tuple.is_empty() {
                default_tuples(k)
            } else {
                tuple.iter().map(|t| parse_list(t, "--tuple")).collect::<Result<_, _>>()?
            };
            let w = GrowthWitness::new(*d, m, chi, fam.covers, fam.interval)?;
            let rows = witness_check(&w, &tuples)?;
            let mut r = Report::new("witness-check", &["tuple", "joint_size", "chi_sum", "budget", "pass"]);
            for row in &rows {
                r.row(vec![
                    list(&row.tuple),
                    row.joint_size.to_string(),
                    row.chi_sum.to_string(),
                    row.budget.to_string(),
                    row.pass.to_string(),
                ]);
            }
            r.note("d", d);
            r.note("m", w.m());
            r.note("chi", format!("{:?}", w.chi()).replace(' ', ""));
            r.verdict(rows.iter().all(|row| row.pass));
            Ok(r)
        }
        Command::Separated { n } => {
            let inst = separated_family(*n)?;
            let mut r = Report::new("separated", &["function", "values"]);
            for (k, f) in inst.functions().iter().enumerate() {
                r.row(vec![k.to_string(), rational_list(f)]);
            }
            let all = all_pairs_separated(inst.points(), |a, b| inst.separates(a, b));
            r.note("points", inst.points());
            r.note("separation_gap", freedim::coverlab::separation_gap());
            r.verdict(all);
            Ok(r)
        }
        Command::GridDemo { params, d, n, p } => {
            let file = load_params(params)?;
            let d = need(*d, file.d, "d")? as usize;
            let n = need(*n, file.n, "n")? as usize;
            let p = need(*p, file.p, "p")? as usize;
            let inst = build_grid_instance(d, n, p)?;
            let points = inst.points();
            let mut r = Report::new(
                "grid-demo",
                &["cover", "cells", "good", "max_points_per_cell", "floor_respected"],
            );
            let candidates = [
                ("singletons", Cover::singletons(points)),
                ("whole", Cover::trivial(points)),
                ("pairs", pairs_cover(points)),
            ];
            let mut ok = true;
            for (name, cover) in &candidates {
                let check = good_cover_floor(&inst, cover)?;
                ok &= check.floor_respected;
                r.row(vec![
                    name.to_string(),
                    cover.len().to_string(),
                    check.good.to_string(),
                    check.max_points_per_cell.to_string(),
                    check.floor_respected.to_string(),
                ]);
            }
            r.note("points", points);
            r.note("functions", inst.functions().len());
            r.note("radices", list(inst.radices()));
            r.note("goodness_threshold", freedim::coverlab::goodness_threshold());
            r.verdict(ok);
            Ok(r)
        }
        Command::Counting { params, d, m, m1, p, n } => {
            let file = load_params(params)?;
            let cp = CountingParams::new(
                need(*d, file.d, "d")?,
                need(*m, file.m, "m")?,
                need(*m1, file.m1, "m1")?,
                need(*p, file.p, "p")?,
                need(*n, file.n, "n")?,
            )?;
            let rep = counting_check(&cp)?;
            let mut r = Report::new("counting", &["d", "m", "m1", "p", "n", "lhs", "rhs", "holds"]);
            r.row(
                [cp.d, cp.m, cp.m1, cp.p, cp.n]
                    .iter()
                    .map(u64::to_string)
                    .chain([rep.lhs.to_string(), rep.rhs.to_string(), rep.holds.to_string()])
                    .collect(),
            );
            r.note("p_large_enough", cp.p_is_large_enough()?);
            r.verdict(rep.holds);
            Ok(r)
        }
        Command::FindN { params, d, m, m1, p } => {
            let file = load_params(params)?;
            let (d, m, m1, p) = (
                need(*d, file.d, "d")?,
                need(*m, file.m, "m")?,
                need(*m1, file.m1, "m1")?,
                need(*p, file.p, "p")?,
            );
            let limit = ctx.limit.unwrap_or(1_000_000);
            let found = find_min_n(d, m, m1, p, limit)?;
            let mut r = Report::new("find-n", &["d", "m", "m1", "p", "limit", "n"]);
            r.row(
                [d, m, m1, p, limit]
                    .iter()
                    .map(u64::to_string)
                    .chain([found.map_or_else(|| "none".to_string(), |n| n.to_string())])
                    .collect(),
            );
            if let Some(n) = found {
                let rep = counting_check(&CountingParams::new(d, m, m1, p, n)?)?;
                r.note("lhs", rep.lhs);
                r.note("rhs", rep.rhs);
            }
            r.verdict(found.is_some());
            Ok(r)
        }
        Command::Exponent { inputs } => {
            let factors = inputs
                .iter()
                .map(|p| load_family(p, ctx))
                .collect::<Result<Vec<_>, _>>()?;
            let f = if factors.len() == 1 {
                factors.into_iter().next().expect("one factor")
            } else {
                free_product(&factors)?.into_family()
            };
            let sizes = doubling_schedule(f.len());
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
            let subsets = sample_subsets(f.len(), &sizes, &mut rng);
            let samples = growth_samples(&f, &subsets)?;
            let mut r = Report::new("exponent", &["size", "atoms"]);
            for (b, j) in &samples {
                r.row(vec![b.to_string(), j.to_string()]);
            }
            let pairs: Vec<(f64, f64)> = samples.iter().map(|&(b, j)| (b as f64, j as f64)).collect();
            let e = exponent_fit(&pairs)?;
            r.note("members", f.len());
            r.note("schedule", list(&sizes));
            r.note("exponent", format!("{e:.6}"));
            Ok(r)
        }
    }
}

fn parse_list(text: &str, flag: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Failure(format!("{flag} {text:?}: {s:?} is not an index")))
        })
        .collect()
}

/// Every nonempty subset of up to ten covers; otherwise singletons plus the full tuple.
fn default_tuples(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return Vec::new();
    }
    if k <= 10 {
        let mut out: Vec<Vec<usize>> = (1u32..1 << k)
            .map(|mask| (0..k).filter(|i| mask >> i & 1 == 1).collect())
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    } else {
        let mut out: Vec<Vec<usize>> = (0..k).map(|i| vec![i]).collect();
        out.push((0..k).collect());
        out
    }
}

fn rational_list(values: &[Rational]) -> String {
    let parts: Vec<String> = values.iter().map(Rational::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn all_pairs_separated(points: usize, separates: impl Fn(usize, usize) -> bool) -> bool {
    (0..points).all(|a| (a + 1..points).all(|b| separates(a, b)))
}

/// Consecutive points paired up; the last cell is a singleton when `points` is odd.
fn pairs_cover(points: usize) -> Cover {
    let cells: Vec<Vec<usize>> = (0..points)
        .step_by(2)
        .map(|a| (a..(a + 2).min(points)).collect())
        .collect();
    Cover::from_lists(points, &cells).expect("consecutive pairs cover the ground")
}
