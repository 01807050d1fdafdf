use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::*;
use crate::complex::{
    clique_complex, simplicial_map, ComplexPair, PairMap, Simplex, SimplicialComplex,
};
use crate::error::Error;
use crate::relations::{graph_relation, FiniteSpace};

const Q: Coefficients = Coefficients::Rationals;
const Z: Coefficients = Coefficients::Integers;

fn complex(n: usize, faces: &[&[usize]], max_dim: usize) -> SimplicialComplex {
    SimplicialComplex::from_simplices(
        FiniteSpace::indexed(n),
        faces.iter().map(|f| Simplex::new(f.to_vec()).unwrap()),
        max_dim,
    )
    .unwrap()
}

fn cycle(n: usize) -> SimplicialComplex {
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    clique_complex(&graph_relation(&edges, FiniteSpace::indexed(n), false).unwrap(), 2).unwrap()
}

fn rp2() -> SimplicialComplex {
    let faces: [&[usize]; 10] = [
        &[0, 1, 2], &[0, 2, 3], &[0, 3, 4], &[0, 4, 5], &[0, 1, 5],
        &[1, 2, 4], &[2, 3, 5], &[1, 3, 4], &[2, 4, 5], &[1, 3, 5],
    ];
    complex(6, &faces, 3)
}

/// Rank by dense Gaussian elimination over the rationals.
fn dense_rank(m: &IntegerMatrix) -> usize {
    let mut a: Vec<Vec<BigRational>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| BigRational::from_integer(m.get(i, j).clone())).collect())
        .collect();
    let mut rank = 0;
    for c in 0..m.cols() {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        for r in 0..a.len() {
            if r != rank && !a[r][c].is_zero() {
                let factor = &a[r][c] / &a[rank][c];
                let pivot = a[rank].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot) {
                    *x -= &factor * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn oracle_betti(k: &SimplicialComplex) -> Vec<usize> {
    let ds = boundary_matrices(k);
    let ranks: Vec<usize> = ds.iter().map(dense_rank).chain([0]).collect();
    (0..ds.len()).map(|d| k.count(d) - ranks[d] - ranks[d + 1]).collect()
}

#[test]
fn edge_boundary() {
    let ds = boundary_matrices(&complex(2, &[&[0, 1]], 1));
    assert_eq!(ds[1], IntegerMatrix::from_rows(&[vec![-1], vec![1]]));
    assert_eq!((ds[0].rows(), ds[0].cols()), (0, 2));
}

#[test]
fn boundary_squares_to_zero() {
    for k in [cycle(4), rp2(), complex(4, &[&[0, 1, 2, 3]], 3)] {
        let ds = boundary_matrices(&k);
        for w in ds.windows(2).skip(1) {
            assert!(w[0].mul(&w[1]).is_zero());
        }
    }
}

#[test]
fn filled_triangle_rel_boundary() {
    let tri = complex(3, &[&[0, 1, 2]], 2);
    let boundary = complex(3, &[&[0, 1], &[1, 2], &[0, 2]], 2);
    let pair = ComplexPair::new(tri, boundary).unwrap();
    let ds = boundary_matrices(&pair);
    assert_eq!((ds[2].rows(), ds[2].cols()), (0, 1));
    assert_eq!(homology(&pair, Z, false).unwrap().betti(), vec![0, 0, 1]);
}

#[test]
fn point_and_cycle() {
    let pt = complex(1, &[&[0]], 2);
    let h = homology(&pt, Z, false).unwrap();
    assert_eq!(h.betti(), vec![1, 0, 0]);
    assert!(!h.has_torsion());
    assert_eq!(h.truncated_from, None);
    assert_eq!(cohomology(&pt, Q).unwrap().betti(), vec![1, 0, 0]);

    let c4 = cycle(4);
    assert_eq!(homology(&c4, Z, false).unwrap().betti(), vec![1, 1, 0]);
    assert_eq!(oracle_betti(&c4), vec![1, 1, 0]);
    assert_eq!(cohomology(&c4, Q).unwrap().betti(), vec![1, 1, 0]);
    assert_eq!(homology(&c4, Q, true).unwrap().betti(), vec![0, 1, 0]);
    assert_eq!(homology(&c4, Z, true).unwrap().betti(), vec![0, 1, 0]);

    let tri = complex(3, &[&[0, 1, 2]], 2);
    assert_eq!(cohomology(&tri, Q).unwrap().betti(), vec![1, 0, 0]);
    assert_eq!(cohomology(&tri, Z), Err(Error::FieldRequired));
}

#[test]
fn projective_plane() {
    let k = rp2();
    let z = homology(&k, Z, false).unwrap();
    assert_eq!(z.betti(), vec![1, 0, 0, 0]);
    assert_eq!(z.torsion(), vec![vec![], vec![BigInt::from(2)], vec![], vec![]]);
    assert_eq!(homology(&k, Q, false).unwrap().betti(), vec![1, 0, 0, 0]);
    assert_eq!(oracle_betti(&k), vec![1, 0, 0, 0]);
    let f2 = homology(&k, Coefficients::Prime(2), false).unwrap();
    assert_eq!(f2.betti(), vec![1, 1, 1, 0]);
    assert_eq!(cohomology(&k, Coefficients::Prime(2)).unwrap().betti(), vec![1, 1, 1, 0]);
    assert_eq!(homology(&k, Coefficients::Prime(3), false).unwrap().betti(), vec![1, 0, 0, 0]);
    assert_eq!(k.euler_characteristic(), 1);
}

#[test]
fn truncation_is_flagged() {
    let k4 = complex(4, &[&[0, 1, 2, 3]], 1);
    assert!(!k4.is_complete());
    let h = homology(&k4, Q, false).unwrap();
    assert_eq!(h.truncated_from, Some(1));
    assert_eq!(h.exact_betti(), vec![1]);
}

#[test]
fn generators_are_cycles() {
    let h = homology_with_generators(&cycle(4), Z, false).unwrap();
    let g1 = h.groups[1].generators.as_ref().unwrap();
    assert_eq!(g1.len(), 1);
    assert_eq!(g1[0].len(), 4);
    assert!(g1[0].iter().all(|(_, c)| c.is_integer() && (c.is_one() || (-c).is_one())));
    let g0 = h.groups[0].generators.as_ref().unwrap();
    assert_eq!(g0.len(), 1);
    let reduced = homology_with_generators(&cycle(4), Q, true).unwrap();
    assert!(reduced.groups[0].generators.as_ref().unwrap().is_empty());
}

#[test]
fn induced_examples() {
    let c4 = cycle(4);
    let id = simplicial_map((0..4).collect(), &c4, &c4).unwrap();
    let m = induced_map(&id, Q).unwrap();
    assert_eq!(m.degrees.len(), 3);
    assert!(m.is_identity());

    let rot = simplicial_map(vec![1, 2, 3, 0], &c4, &c4).unwrap();
    assert_eq!(induced_map(&rot, Q).unwrap().degrees[1], LinearMap::identity(1));
    let flip = simplicial_map(vec![0, 3, 2, 1], &c4, &c4).unwrap();
    assert_eq!(induced_map(&flip, Q).unwrap().degrees[1].entries, vec![vec![-BigRational::one()]]);

    let pt = complex(4, &[&[2]], 2);
    let inc = simplicial_map(vec![0, 1, 2, 3], &pt, &c4).unwrap();
    let m = induced_map(&inc, Q).unwrap();
    assert_eq!(m.degrees[0], LinearMap::identity(1));
    assert_eq!((m.degrees[1].rows, m.degrees[1].cols), (1, 0));

    assert_eq!(induced_map(&rot, Z), Err(Error::FieldRequired));
}

#[test]
fn composition_law() {
    let c4 = cycle(4);
    let rot = simplicial_map(vec![1, 2, 3, 0], &c4, &c4).unwrap();
    let flip = simplicial_map(vec![0, 3, 2, 1], &c4, &c4).unwrap();
    let both = rot.then(&flip).unwrap();
    for coeffs in [Q, Coefficients::Prime(3)] {
        let lhs = induced_map(&both, coeffs).unwrap();
        let rhs = induced_map(&flip, coeffs).unwrap().compose(&induced_map(&rot, coeffs).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn pair_inclusion_map() {
    let c4 = cycle(4);
    let abs = ComplexPair::absolute(c4.clone());
    let rel = ComplexPair::new(c4.clone(), complex(4, &[&[0]], 2)).unwrap();
    let j = PairMap::inclusion(&abs, &rel).unwrap();
    let m = induced_pair_map(&j, Q).unwrap();
    assert_eq!(m.degrees[0].rows, 0);
    assert_eq!(m.degrees[1], LinearMap::identity(1));
}

#[test]
fn les_examples() {
    let c4 = cycle(4);
    let same = ComplexPair::new(c4.clone(), c4.clone()).unwrap();
    let r = check_les_exactness(&same, Q, 1).unwrap();
    assert!(r.exact);
    assert!(r.slots.iter().filter(|s| s.group.ends_with("(X,A)")).all(|s| s.rank == 0));

    let tri = complex(3, &[&[0, 1, 2]], 3);
    let bd = complex(3, &[&[0, 1], &[1, 2], &[0, 2]], 3);
    let pair = ComplexPair::new(tri, bd).unwrap();
    let r = check_les_exactness(&pair, Q, 2).unwrap();
    assert!(r.exact, "{r:?}");
    let h2 = r.slots.iter().find(|s| s.group == "H_2(X,A)").unwrap();
    assert_eq!((h2.rank, h2.outgoing_rank), (1, 1));

    let c4 = complex(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]], 3);
    let pair = ComplexPair::new(c4, complex(4, &[&[0]], 3)).unwrap();
    let r = check_les_exactness(&pair, Coefficients::Prime(2), 2).unwrap();
    assert!(r.exact);
    let h1 = r.slots.iter().find(|s| s.group == "H_1(X)").unwrap();
    assert_eq!((h1.rank, h1.outgoing_rank), (1, 1));

    assert!(check_les_exactness(&pair, Q, 3).is_err());
    assert_eq!(check_les_exactness(&pair, Z, 1), Err(Error::FieldRequired));
}
