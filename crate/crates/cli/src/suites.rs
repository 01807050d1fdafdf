//! `vrhom verify`: axiom checks on fixed and seeded random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use vrhom::closure::Cover;
use vrhom::field::Coefficients;
use vrhom::instances::{all_symmetric_relations, random_cover, random_edges, random_metric, random_subset};
use vrhom::io::ResultDocument;
use vrhom::relations::{graph_relation, scale_base, FiniteSpace, IndexSet, SemiUniformBase};
use vrhom::semiuniform::{
    check_excision_hypothesis, check_interval_acyclic, verify_dimension, verify_dowker, verify_excision,
    verify_functoriality, verify_homotopy_cylinder, AxiomVerdict,
};

use crate::{document_outcome, InputError, Outcome, Suite, VerifyArgs};

const MAX_DIM: usize = 3;

type Verdicts = Vec<AxiomVerdict>;

fn graph_base(n: usize, edges: &[(usize, usize)]) -> Result<SemiUniformBase, InputError> {
    Ok(SemiUniformBase::single(graph_relation(edges, FiniteSpace::indexed(n), false)?)?)
}

fn cycle(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

fn dimension(out: &mut Verdicts) -> Result<(), InputError> {
    for c in [Coefficients::Integers, Coefficients::Rationals, Coefficients::Prime(2), Coefficients::Prime(3)] {
        out.push(verify_dimension(c)?);
    }
    Ok(())
}

fn interval(out: &mut Verdicts) -> Result<(), InputError> {
    for n in 2..=8 {
        out.push(check_interval_acyclic(n, 1.5 / (n - 1) as f64, MAX_DIM)?);
    }
    Ok(())
}

/// Returns how many random instances failed the hypothesis and were skipped.
fn excision(rng: &mut ChaCha8Rng, trials: usize, out: &mut Verdicts) -> Result<usize, InputError> {
    let set = |v: &[usize]| v.iter().copied().collect::<IndexSet>();
    out.push(verify_excision(&graph_base(6, &cycle(6))?, &set(&[0, 1, 2, 3]), &set(&[1, 2]), Coefficients::Integers, MAX_DIM)?);
    let mut skipped = 0;
    for t in 0..trials {
        let n = rng.gen_range(3..=7);
        let base = if t % 2 == 0 {
            graph_base(n, &random_edges(rng, n, 0.5))?
        } else {
            let d = random_metric(rng, n, 4);
            scale_base(&d, 1.0, &[0.5, 1.0, 1.5])?
        };
        let a = random_subset(rng, n, 0.7);
        let b: IndexSet = a.iter().copied().filter(|_| rng.gen_bool(0.4)).collect();
        if a.is_empty() || !check_excision_hypothesis(&base, &a, &b)?.holds {
            skipped += 1;
            continue;
        }
        out.push(verify_excision(&base, &a, &b, Coefficients::Integers, MAX_DIM)?);
    }
    Ok(skipped)
}

fn homotopy(rng: &mut ChaCha8Rng, trials: usize, out: &mut Verdicts) -> Result<(), InputError> {
    for u in all_symmetric_relations(3) {
        out.push(verify_homotopy_cylinder(&u, 3, 0.6, Coefficients::Rationals, MAX_DIM)?);
    }
    let u = graph_relation(&cycle(4), FiniteSpace::indexed(4), false)?;
    out.push(verify_homotopy_cylinder(&u, 4, 0.4, Coefficients::Prime(2), MAX_DIM)?);
    for _ in 0..trials.div_ceil(5) {
        let n = rng.gen_range(2..=5);
        let u = graph_relation(&random_edges(rng, n, 0.5), FiniteSpace::indexed(n), false)?;
        out.push(verify_homotopy_cylinder(&u, 3, 0.6, Coefficients::Rationals, MAX_DIM)?);
    }
    Ok(())
}

fn dowker(rng: &mut ChaCha8Rng, trials: usize, out: &mut Verdicts) -> Result<(), InputError> {
    let arcs = [vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 0]];
    let cover = Cover::new(FiniteSpace::indexed(6), arcs.iter().map(|s| s.iter().copied().collect()).collect())?;
    out.push(verify_dowker(&cover, Coefficients::Rationals, MAX_DIM)?);
    for _ in 0..trials {
        let n = rng.gen_range(2..=7);
        let sets = rng.gen_range(1..=4);
        out.push(verify_dowker(&random_cover(rng, n, sets, 0.3), Coefficients::Rationals, MAX_DIM)?);
    }
    Ok(())
}

/// A random graph on `n` points that makes `f` (from a graph with `edges`)
/// continuous.
fn target_graph(
    rng: &mut ChaCha8Rng,
    n: usize,
    f: &[usize],
    edges: &[(usize, usize)],
) -> Vec<(usize, usize)> {
    let mut out = random_edges(rng, n, 0.3);
    out.extend(edges.iter().map(|&(x, y)| (f[x], f[y])).filter(|(a, b)| a != b));
    out
}

fn functoriality(rng: &mut ChaCha8Rng, trials: usize, out: &mut Verdicts) -> Result<(), InputError> {
    let rotate: Vec<usize> = (0..5).map(|i| (i + 1) % 5).collect();
    let c5 = graph_base(5, &cycle(5))?;
    out.push(verify_functoriality(&rotate, &rotate, [&c5, &c5, &c5], Coefficients::Rationals, MAX_DIM)?);
    for _ in 0..trials {
        let (nx, ny, nz) = (rng.gen_range(1..=5), rng.gen_range(1..=5), rng.gen_range(1..=5));
        let ex = random_edges(rng, nx, 0.5);
        let f: Vec<usize> = (0..nx).map(|_| rng.gen_range(0..ny)).collect();
        let ey = target_graph(rng, ny, &f, &ex);
        let g: Vec<usize> = (0..ny).map(|_| rng.gen_range(0..nz)).collect();
        let ez = target_graph(rng, nz, &g, &ey);
        let bases = [&graph_base(nx, &ex)?, &graph_base(ny, &ey)?, &graph_base(nz, &ez)?];
        out.push(verify_functoriality(&f, &g, bases, Coefficients::Rationals, MAX_DIM)?);
    }
    Ok(())
}

pub(crate) fn verify(a: VerifyArgs) -> Result<Outcome, InputError> {
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let wanted = |s: Suite| a.suite == Suite::All || a.suite == s;
    let mut verdicts = Vec::new();
    let mut doc = ResultDocument::new("verify");
    if wanted(Suite::Dimension) {
        dimension(&mut verdicts)?;
    }
    if wanted(Suite::Interval) {
        interval(&mut verdicts)?;
    }
    if wanted(Suite::Excision) {
        let skipped = excision(&mut rng, a.trials, &mut verdicts)?;
        doc.details.insert("excision_skipped".into(), json!(skipped));
    }
    if wanted(Suite::Homotopy) {
        homotopy(&mut rng, a.trials, &mut verdicts)?;
    }
    if wanted(Suite::Dowker) {
        dowker(&mut rng, a.trials, &mut verdicts)?;
    }
    if wanted(Suite::Functoriality) {
        functoriality(&mut rng, a.trials, &mut verdicts)?;
    }
    let failed = verdicts.iter().filter(|v| !v.pass).count();
    doc.request.insert("suite".into(), json!(format!("{:?}", a.suite).to_lowercase()));
    doc.request.insert("seed".into(), json!(a.seed));
    doc.request.insert("trials".into(), json!(a.trials));
    doc.details.insert("checked".into(), json!(verdicts.len()));
    doc.details.insert("failed".into(), json!(failed));
    doc.verdicts = verdicts;
    Ok(document_outcome(&doc))
}
