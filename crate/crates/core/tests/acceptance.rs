//! Acceptance criteria, one line per criterion. Exits non-zero if any fails.
#![allow(clippy::needless_range_loop)]

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vrhom::complex::{clique_complex, pair_complex, Simplex, SimplicialComplex};
use vrhom::field::Coefficients;
use vrhom::homology::{check_les_exactness, homology, HomologyResult};
use vrhom::instances::{all_symmetric_relations, random_cover, random_edges, random_metric, random_subset};
use vrhom::relations::{
    graph_relation, metric_relation, scale_base, FiniteSpace, IndexSet, ScaleMode, SemiPseudometric, SemiUniformBase,
};
use vrhom::semiuniform::{
    check_excision_hypothesis, check_interval_acyclic, limit_homology, verify_dimension, verify_dowker,
    verify_excision, verify_homotopy_cylinder,
};
use vrhom::snf::{smith_normal_form, IntegerMatrix};

const Z: Coefficients = Coefficients::Integers;
const Q: Coefficients = Coefficients::Rationals;
const F2: Coefficients = Coefficients::Prime(2);

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn graph(n: usize, edges: &[(usize, usize)]) -> vrhom::relations::Relation {
    graph_relation(edges, FiniteSpace::indexed(n), false).unwrap()
}

fn low(h: &HomologyResult, dims: usize) -> (Vec<usize>, Vec<Vec<BigInt>>) {
    (h.betti().into_iter().take(dims).collect(), h.torsion().into_iter().take(dims).collect())
}

fn dimension_axiom() -> Check {
    let point = SimplicialComplex::from_simplices(FiniteSpace::indexed(1), [Simplex::vertex(0)], 3).unwrap();
    for c in [Z, Q, F2] {
        let h = homology(&point, c, false).unwrap();
        ensure(h.betti()[..3] == [1, 0, 0] && !h.has_torsion(), || format!("{c}: betti {:?}", h.betti()))?;
        let v = verify_dimension(c).unwrap();
        ensure(v.pass, || format!("{c}: {v:?}"))?;
    }
    Ok("β = (1,0,0), no torsion over z, q, zp:2".into())
}

fn graph_theorem() -> Check {
    let mut r = rng(2);
    for t in 0..20 {
        let n = r.gen_range(1..=10);
        let p = r.gen_range(0.1..0.8);
        let u = graph(n, &random_edges(&mut r, n, p));
        let lim = limit_homology(&SemiUniformBase::single(u.clone()).unwrap(), None, Z, 4).unwrap();
        let direct = homology(&clique_complex(&u, 4).unwrap(), Z, false).unwrap();
        ensure(lim.homology == direct, || format!("graph {t} on {n} vertices: limit differs from clique homology"))?;
    }
    let k4: Vec<(usize, usize)> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
    let lim = limit_homology(&SemiUniformBase::single(graph(4, &k4)).unwrap(), None, Z, 3).unwrap();
    ensure(lim.homology.betti()[..3] == [1, 0, 0], || format!("K4: {:?}", lim.homology.betti()))?;
    Ok("20 random graphs match, K4 gives (1,0,0)".into())
}

fn unit_square() -> SemiPseudometric {
    let coords = vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![1.0, 1.0], vec![0.0, 1.0]];
    SemiPseudometric::euclidean(FiniteSpace::indexed(4), &coords).unwrap()
}

fn finite_metric_theorem() -> Check {
    let d = unit_square();
    for (q, want) in [(0.5, [4, 0]), (1.0, [1, 1]), (1.5, [1, 0])] {
        let u = metric_relation(&d, q, ScaleMode::Closed).unwrap();
        let h = homology(&clique_complex(&u, 2).unwrap(), Z, false).unwrap();
        ensure(h.betti()[..2] == want && !h.has_torsion(), || format!("square at {q}: {:?}", h.betti()))?;
    }
    let mut r = rng(3);
    for t in 0..20 {
        let n = r.gen_range(1..=8);
        let d = random_metric(&mut r, n, 8);
        for _ in 0..3 {
            let q = r.gen_range(0..=8) as f64 / 2.0;
            let gap = d.gap_above(q).unwrap_or(1.0);
            let base = scale_base(&d, q, &[gap / 3.0, gap / 2.0, gap, 2.0 * gap]).unwrap();
            let lim = limit_homology(&base, None, Z, 3).unwrap();
            let closed = metric_relation(&d, q, ScaleMode::Closed).unwrap();
            let direct = homology(&clique_complex(&closed, 3).unwrap(), Z, false).unwrap();
            ensure(lim.homology == direct, || format!("metric {t} at q = {q}: limit differs from U_≤q"))?;
        }
    }
    Ok("square sweep (4,0) (1,1) (1,0); 60 limits equal U_≤q homology".into())
}

fn excision() -> Check {
    let set = |v: &[usize]| v.iter().copied().collect::<IndexSet>();
    let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
    let base = SemiUniformBase::single(c4.clone()).unwrap();
    let (a, b) = (set(&[0, 1, 2]), set(&[1]));
    let v = verify_excision(&base, &a, &b, Z, 2).unwrap();
    ensure(v.pass, || format!("4-cycle: {v:?}"))?;
    let h = homology(&pair_complex(&c4, &a, 2).unwrap(), Z, false).unwrap();
    ensure(h.betti()[..2] == [0, 1], || format!("4-cycle pair: {:?}", h.betti()))?;

    let mut r = rng(4);
    let (mut trials, mut attempts) = (0, 0);
    while trials < 200 && attempts < 20_000 {
        attempts += 1;
        let n = r.gen_range(2..=8);
        let p = r.gen_range(0.1..0.6);
        let base = SemiUniformBase::single(graph(n, &random_edges(&mut r, n, p))).unwrap();
        let a = random_subset(&mut r, n, 0.75);
        let b: IndexSet = a.iter().copied().filter(|_| r.gen_bool(0.4)).collect();
        if b.is_empty() || !check_excision_hypothesis(&base, &a, &b).unwrap().holds {
            continue;
        }
        trials += 1;
        let v = verify_excision(&base, &a, &b, Z, 3).unwrap();
        ensure(v.pass, || format!("fuzz trial {trials}: {v:?}"))?;
    }
    ensure(trials >= 200, || format!("only {trials} instances met the hypothesis"))?;
    Ok(format!("4-cycle pair β = (0,1) on both sides; {trials} fuzzed instances agree"))
}

fn exactness() -> Check {
    let mut r = rng(5);
    for t in 0..50 {
        let n = r.gen_range(1..=8);
        let p = r.gen_range(0.2..0.8);
        let u = graph(n, &random_edges(&mut r, n, p));
        let mut a = random_subset(&mut r, n, 0.5);
        if a.is_empty() {
            a.insert(0);
        }
        let report = check_les_exactness(&pair_complex(&u, &a, 3).unwrap(), Q, 2).unwrap();
        ensure(report.exact, || format!("pair {t}: {report:?}"))?;
    }
    Ok("50 random pairs exact over q through degree 2".into())
}

fn homotopy() -> Check {
    for n in 2..=8 {
        let r = 1.5 / (n - 1) as f64;
        let v = check_interval_acyclic(n, r, 3).unwrap();
        ensure(v.pass && v.hypothesis_met, || format!("interval n = {n}: {v:?}"))?;
    }
    let mut count = 0;
    for n in 1..=4 {
        for u in all_symmetric_relations(n) {
            let v = verify_homotopy_cylinder(&u, 4, 0.4, Q, 3).unwrap();
            ensure(v.pass && v.hypothesis_met, || format!("{v:?}"))?;
            count += 1;
        }
    }
    let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
    let v = verify_homotopy_cylinder(&c4, 5, 0.3, Q, 3).unwrap();
    ensure(v.pass && v.hypothesis_met, || format!("4-cycle: {v:?}"))?;
    Ok(format!("intervals n ≤ 8 acyclic; g0* = g1* on {count} relations and the 4-cycle"))
}

fn dowker() -> Check {
    let mut r = rng(7);
    for t in 0..100 {
        let n = r.gen_range(1..=7);
        let sets = r.gen_range(1..=5);
        let p = r.gen_range(0.1..0.5);
        let cover = random_cover(&mut r, n, sets, p);
        let v = verify_dowker(&cover, Z, 4).unwrap();
        ensure(v.pass, || format!("cover {t}: {v:?}"))?;
    }
    Ok("nerve and Vietoris betti numbers agree on 100 covers".into())
}

fn circle() -> Check {
    let coords: Vec<Vec<f64>> = (0..12)
        .map(|k| {
            let t = std::f64::consts::TAU * k as f64 / 12.0;
            vec![t.cos(), t.sin()]
        })
        .collect();
    let d = SemiPseudometric::euclidean(FiniteSpace::indexed(12), &coords).unwrap();
    let u = metric_relation(&d, 0.6, ScaleMode::Closed).unwrap();
    let k = clique_complex(&u, 3).unwrap();
    ensure(k.count(1) == 12 && k.count(2) == 0, || format!("expected a 12-cycle, got {} edges", k.count(1)))?;
    let h = homology(&k, Z, false).unwrap();
    ensure(h.betti()[..2] == [1, 1] && !h.has_torsion(), || format!("betti {:?}", h.betti()))?;
    Ok("12 points at q = 0.6 give the 12-cycle, β = (1,1)".into())
}

const RP2: [[usize; 3]; 10] = [
    [0, 1, 2],
    [0, 2, 3],
    [0, 3, 4],
    [0, 4, 5],
    [0, 1, 5],
    [1, 2, 4],
    [2, 3, 5],
    [1, 3, 4],
    [2, 4, 5],
    [1, 3, 5],
];

/// `∂₂` of the projective plane built directly from the triangle list.
fn rp2_boundary() -> Vec<Vec<i64>> {
    let mut edges: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for t in RP2 {
        for e in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            let next = edges.len();
            edges.entry(e).or_insert(next);
        }
    }
    let mut m = vec![vec![0i64; RP2.len()]; edges.len()];
    for (j, t) in RP2.iter().enumerate() {
        m[edges[&(t[1], t[2])]][j] += 1;
        m[edges[&(t[0], t[2])]][j] -= 1;
        m[edges[&(t[0], t[1])]][j] += 1;
    }
    m
}

fn rank_mod(rows: &[Vec<i64>], p: i64) -> usize {
    let mut m: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|v| v.rem_euclid(p)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        let inv = (1..p).find(|x| x * m[rank][c] % p == 1).unwrap();
        for k in 0..cols {
            m[rank][k] = m[rank][k] * inv % p;
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for k in 0..cols {
                    m[r][k] = (m[r][k] - f * m[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn torsion() -> Check {
    let space = FiniteSpace::indexed(6);
    let k = SimplicialComplex::from_simplices(space, RP2.iter().map(|t| Simplex::new(t.to_vec()).unwrap()), 3).unwrap();
    let hz = homology(&k, Z, false).unwrap();
    let h2 = homology(&k, F2, false).unwrap();
    let (betti, tors) = low(&hz, 3);
    ensure(betti == [1, 0, 0] && tors[1] == [BigInt::from(2)] && tors[0].is_empty() && tors[2].is_empty(), || {
        format!("over z: betti {betti:?}, torsion {tors:?}")
    })?;
    ensure(h2.betti()[..3] == [1, 1, 1], || format!("over zp:2: {:?}", h2.betti()))?;

    // Oracle: ∂₂ is injective over ℚ, and a prime p divides the H₁ torsion
    // exactly when ∂₂ loses rank mod p.
    let d2 = rp2_boundary();
    let big = 1_000_003;
    let rank_q = rank_mod(&d2, big);
    let drops: Vec<(i64, usize)> = [2, 3, 5, 7, 11].iter().map(|&p| (p, rank_q - rank_mod(&d2, p))).collect();
    ensure(rank_q == RP2.len() && drops.iter().all(|&(p, d)| d == usize::from(p == 2)), || {
        format!("oracle: rank {rank_q}, drops {drops:?}")
    })?;
    let product: BigInt = vrhom::snf::smith_invariants(&IntegerMatrix::from_rows(&d2)).iter().filter(|d| !d.is_zero()).product();
    ensure(product == BigInt::from(2), || format!("oracle: invariant product {product}"))?;
    Ok("H1 torsion [2] over z, β1 = 1 over zp:2, matching mod-p rank drops".into())
}

fn snf_kernel() -> Check {
    let mut r = rng(10);
    for t in 0..500 {
        let (rows, cols) = (r.gen_range(1..=12), r.gen_range(1..=12));
        let m: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| r.gen_range(-9..=9)).collect()).collect();
        let m = IntegerMatrix::from_rows(&m);
        let s = smith_normal_form(&m);
        ensure(s.left.mul(&m).mul(&s.right) == s.diagonal_matrix(), || format!("matrix {t}: reconstruction"))?;
        ensure(s.left.determinant().abs().is_one() && s.right.determinant().abs().is_one(), || {
            format!("matrix {t}: transforms not unimodular")
        })?;
        for w in s.diagonal.windows(2) {
            let ok = !w[0].is_negative() && if w[0].is_zero() { w[1].is_zero() } else { w[1].is_multiple_of(&w[0]) };
            ensure(ok, || format!("matrix {t}: diagonal {:?}", s.diagonal))?;
        }
    }
    Ok("500 random matrices up to 12×12".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("dimension axiom", dimension_axiom),
        ("graph homology as a limit", graph_theorem),
        ("finite metric spaces", finite_metric_theorem),
        ("excision", excision),
        ("long exact sequence", exactness),
        ("homotopy invariance", homotopy),
        ("nerve and Vietoris complex", dowker),
        ("circle recovery", circle),
        ("torsion", torsion),
        ("Smith normal form", snf_kernel),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
