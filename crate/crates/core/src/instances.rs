//! Seedable random instances for fuzzing the axiom checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::closure::Cover;
use crate::relations::{graph_relation, FiniteSpace, IndexSet, Relation, SemiPseudometric};

/// Each of the `n(n−1)/2` possible edges independently with probability `p`.
pub fn random_edges<R: Rng>(rng: &mut R, n: usize, p: f64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    edges
}

pub fn random_graph_relation<R: Rng>(rng: &mut R, n: usize, p: f64) -> Relation {
    graph_relation(&random_edges(rng, n, p), FiniteSpace::indexed(n), false).expect("edges in range")
}

/// A symmetric table with small integer distances, so ties are common.
#[allow(clippy::needless_range_loop)]
pub fn random_metric<R: Rng>(rng: &mut R, n: usize, max_distance: u32) -> SemiPseudometric {
    let mut rows = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let d = f64::from(rng.gen_range(1..=max_distance)) / 2.0;
            rows[i][j] = d;
            rows[j][i] = d;
        }
    }
    SemiPseudometric::new(FiniteSpace::indexed(n), rows).expect("valid table")
}

/// Points in the unit square, Euclidean distances.
pub fn random_planar<R: Rng>(rng: &mut R, n: usize) -> SemiPseudometric {
    let coords: Vec<Vec<f64>> = (0..n).map(|_| vec![rng.gen::<f64>(), rng.gen::<f64>()]).collect();
    SemiPseudometric::euclidean(FiniteSpace::indexed(n), &coords).expect("finite coordinates")
}

/// Each point independently with probability `p`.
pub fn random_subset<R: Rng>(rng: &mut R, n: usize, p: f64) -> IndexSet {
    (0..n).filter(|_| rng.gen_bool(p)).collect()
}

/// `sets` non-empty sets covering `n` points: every point lands in one
/// random set, then joins others with probability `p`.
pub fn random_cover<R: Rng>(rng: &mut R, n: usize, sets: usize, p: f64) -> Cover {
    let sets = sets.clamp(1, n);
    let mut members: Vec<IndexSet> = vec![IndexSet::new(); sets];
    let mut points: Vec<usize> = (0..n).collect();
    points.shuffle(rng);
    for (k, &x) in points.iter().enumerate() {
        let home = if k < sets { k } else { rng.gen_range(0..sets) };
        members[home].insert(x);
        for (s, m) in members.iter_mut().enumerate() {
            if s != home && rng.gen_bool(p) {
                m.insert(x);
            }
        }
    }
    Cover::new(FiniteSpace::indexed(n), members).expect("every point is placed")
}

/// All symmetric reflexive relations on `n` points, `2^(n(n−1)/2)` of them.
pub fn all_symmetric_relations(n: usize) -> impl Iterator<Item = Relation> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, &e)| e).collect();
        graph_relation(&edges, FiniteSpace::indexed(n), false).expect("edges in range")
    })
}
