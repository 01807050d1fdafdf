//! Generators shared by the property suites.
#![allow(dead_code, clippy::needless_range_loop)]

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vrhom::complex::{vr_complex, SimplicialComplex};
use vrhom::instances::{random_edges, random_metric};
use vrhom::relations::{graph_relation, FiniteSpace, IndexSet, Relation, SemiPseudometric};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn set(v: &[usize]) -> IndexSet {
    v.iter().copied().collect()
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Relation {
    graph_relation(edges, FiniteSpace::indexed(n), false).unwrap()
}

pub fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

/// A symmetric relation on `1..=max_n` points.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Relation> {
    (1..=max_n, any::<u64>(), 0.1f64..0.9).prop_map(|(n, seed, p)| graph(n, &random_edges(&mut rng(seed), n, p)))
}

/// A directed relation on `1..=max_n` points.
pub fn arb_digraph(max_n: usize) -> impl Strategy<Value = Relation> {
    (1..=max_n, any::<u64>(), 0.1f64..0.9).prop_map(|(n, seed, p)| {
        let mut r = rng(seed);
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|_| r.gen_bool(p)).collect();
        Relation::from_pairs(FiniteSpace::indexed(n), pairs).unwrap()
    })
}

/// Half-integer distances in `[0.5, max/2]`.
pub fn arb_metric(max_n: usize) -> impl Strategy<Value = SemiPseudometric> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| random_metric(&mut rng(seed), n, 8))
}

pub fn complex_of(u: &Relation, max_dim: usize) -> SimplicialComplex {
    vr_complex(u, max_dim)
}

/// A random graph on `n` points containing the image of `edges` under `f`,
/// so that `f` is simplicial into its clique complex.
pub fn target_edges<R: Rng>(rng: &mut R, n: usize, f: &[usize], edges: &[(usize, usize)], p: f64) -> Vec<(usize, usize)> {
    let mut out = random_edges(rng, n, p);
    out.extend(edges.iter().map(|&(x, y)| (f[x], f[y])).filter(|(a, b)| a != b));
    out
}

pub fn edges_of(u: &Relation) -> Vec<(usize, usize)> {
    u.pairs().filter(|(i, j)| i < j).collect()
}

/// Dense rank over ℚ by fraction-free elimination on i128; only for small
/// matrices with small entries.
pub fn dense_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let (a, b) = (m[rank][c], m[r][c]);
                for k in 0..cols {
                    m[r][k] = m[r][k] * a - m[rank][k] * b;
                }
                let g = m[r].iter().fold(0i128, |g, &v| gcd(g, v.abs()));
                if g > 1 {
                    m[r].iter_mut().for_each(|v| *v /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
