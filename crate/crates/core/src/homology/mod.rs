//! Simplicial (co)homology of complexes and pairs.
//!
//! Integer coefficients go through the Smith normal form; field
//! coefficients through sparse column reduction.

mod chains;
mod induced;
mod les;
pub(crate) mod linalg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::complex::Simplex;
use crate::error::Result;
use crate::field::{primitive_integer, Coefficients, Field, PrimeField, Rationals};
use crate::snf::{smith_invariants, IntegerMatrix};

pub use chains::ChainSource;
pub(crate) use chains::{oriented_image, Chains};
pub use induced::{induced_map, induced_pair_map, InducedMapResult, LinearMap};
pub(crate) use induced::induced_between;
pub use les::{check_les_exactness, LesReport, LesSlot};
use linalg::{from_integers, reduce_columns, transpose, Echelon, SparseVec};

/// Runs `$body` with `$f` bound to the field for `$coeffs`, or returns
/// [`crate::Error::FieldRequired`] for the integers.
macro_rules! with_field {
    ($coeffs:expr, $f:ident => $body:expr) => {
        match $coeffs {
            $crate::field::Coefficients::Rationals => {
                let $f = &$crate::field::Rationals;
                $body
            }
            $crate::field::Coefficients::Prime(p) => {
                let $f = &$crate::field::PrimeField::new(p)?;
                $body
            }
            $crate::field::Coefficients::Integers => return Err($crate::error::Error::FieldRequired),
        }
    };
}
pub(crate) use with_field;

/// A chain as simplex–coefficient terms.
pub type Cycle = Vec<(Simplex, BigRational)>;

#[derive(Clone, Debug, PartialEq)]
pub struct HomologyGroup {
    pub dim: usize,
    pub betti: usize,
    /// Invariant factors greater than one; integer coefficients only.
    pub torsion: Vec<BigInt>,
    pub generators: Option<Vec<Cycle>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomologyResult {
    pub coefficients: Coefficients,
    pub reduced: bool,
    /// Indexed by dimension, `0..=max_dim` of the complex.
    pub groups: Vec<HomologyGroup>,
    /// The first dimension that may be wrong because simplices above the
    /// enumeration cap are missing.
    pub truncated_from: Option<usize>,
}

impl HomologyResult {
    pub fn betti(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.betti).collect()
    }

    /// Betti numbers of the dimensions that are not truncated.
    pub fn exact_betti(&self) -> Vec<usize> {
        let end = self.truncated_from.unwrap_or(self.groups.len());
        self.groups[..end].iter().map(|g| g.betti).collect()
    }

    pub fn torsion(&self) -> Vec<Vec<BigInt>> {
        self.groups.iter().map(|g| g.torsion.clone()).collect()
    }

    pub fn has_torsion(&self) -> bool {
        self.groups.iter().any(|g| !g.torsion.is_empty())
    }

    /// All betti numbers and torsion vanish.
    pub fn is_trivial(&self) -> bool {
        self.groups.iter().all(|g| g.betti == 0 && g.torsion.is_empty())
    }
}

/// `∂_k` for `k` in `0..=max_dim` in the relative quotient basis. `∂₀` has
/// no rows.
pub fn boundary_matrices(k: &dyn ChainSource) -> Vec<IntegerMatrix> {
    let chains = Chains::new(k, false);
    (0..=chains.max_dim).map(|d| dense(&chains.boundary(d), chains.boundary_rows(d))).collect()
}

fn dense(cols: &[Vec<(usize, i64)>], rows: usize) -> IntegerMatrix {
    let mut m = IntegerMatrix::zeros(rows, cols.len());
    for (j, col) in cols.iter().enumerate() {
        for &(i, v) in col {
            m.set(i, j, BigInt::from(v));
        }
    }
    m
}

pub fn homology(k: &dyn ChainSource, coeffs: Coefficients, reduced: bool) -> Result<HomologyResult> {
    compute(k, coeffs, reduced, false)
}

/// Like [`homology`] with reduced cycle representatives for each group.
/// Over the integers the representatives are primitive integer cycles of
/// the free part.
pub fn homology_with_generators(k: &dyn ChainSource, coeffs: Coefficients, reduced: bool) -> Result<HomologyResult> {
    compute(k, coeffs, reduced, true)
}

fn compute(k: &dyn ChainSource, coeffs: Coefficients, reduced: bool, generators: bool) -> Result<HomologyResult> {
    let chains = Chains::new(k, reduced);
    let mut groups = match coeffs {
        Coefficients::Integers => integer_groups(&chains),
        Coefficients::Rationals => field_groups(&Rationals, &chains),
        Coefficients::Prime(p) => field_groups(&PrimeField::new(p)?, &chains),
    };
    if generators {
        let gens = match coeffs {
            Coefficients::Prime(p) => field_generators(&PrimeField::new(p)?, &chains),
            _ => field_generators(&Rationals, &chains),
        };
        for (g, mut cycles) in groups.iter_mut().zip(gens) {
            if coeffs == Coefficients::Integers {
                for c in &mut cycles {
                    let coeffs: Vec<BigRational> = c.iter().map(|(_, x)| x.clone()).collect();
                    for ((_, x), n) in c.iter_mut().zip(primitive_integer(&coeffs)) {
                        *x = BigRational::from_integer(n);
                    }
                }
            }
            g.generators = Some(cycles);
        }
    }
    Ok(HomologyResult {
        coefficients: coeffs,
        reduced: chains.augmented,
        groups,
        truncated_from: if chains.complete { None } else { Some(chains.max_dim) },
    })
}

fn integer_groups(chains: &Chains) -> Vec<HomologyGroup> {
    let invariants: Vec<Vec<BigInt>> = (0..=chains.max_dim + 1)
        .map(|d| {
            let cols = chains.boundary(d);
            smith_invariants(&dense(&cols, chains.boundary_rows(d)))
        })
        .collect();
    let rank = |d: usize| invariants[d].iter().filter(|x| !x.is_zero()).count();
    (0..=chains.max_dim)
        .map(|d| HomologyGroup {
            dim: d,
            betti: chains.rank(d) - rank(d) - rank(d + 1),
            torsion: invariants[d + 1].iter().filter(|x| !x.is_zero() && !x.is_one()).cloned().collect(),
            generators: None,
        })
        .collect()
}

fn boundary_rank<F: Field>(f: &F, chains: &Chains, d: usize) -> usize {
    linalg::rank(f, chains.boundary(d).iter().map(|c| from_integers(f, c)).collect())
}

fn field_groups<F: Field>(f: &F, chains: &Chains) -> Vec<HomologyGroup> {
    let ranks: Vec<usize> = (0..=chains.max_dim + 1).map(|d| boundary_rank(f, chains, d)).collect();
    (0..=chains.max_dim)
        .map(|d| HomologyGroup {
            dim: d,
            betti: chains.rank(d) - ranks[d] - ranks[d + 1],
            torsion: Vec::new(),
            generators: None,
        })
        .collect()
}

fn field_generators<F: Field>(f: &F, chains: &Chains) -> Vec<Vec<Cycle>> {
    (0..=chains.max_dim)
        .map(|d| {
            HomologyBasis::new(f, chains, d)
                .reps
                .iter()
                .map(|r| r.iter().map(|(i, x)| (chains.basis[d][*i].clone(), f.to_rational(x))).collect())
                .collect()
        })
        .collect()
}

/// Cohomology over a field from ranks of transposed boundaries:
/// `dim H^k = dim C_k − rank ∂_kᵀ − rank ∂_{k+1}ᵀ`.
pub fn cohomology(k: &dyn ChainSource, coeffs: Coefficients) -> Result<HomologyResult> {
    let chains = Chains::new(k, false);
    let groups = with_field!(coeffs, f => cohomology_groups(f, &chains));
    Ok(HomologyResult {
        coefficients: coeffs,
        reduced: false,
        groups,
        truncated_from: if chains.complete { None } else { Some(chains.max_dim) },
    })
}

fn cohomology_groups<F: Field>(f: &F, chains: &Chains) -> Vec<HomologyGroup> {
    let ranks: Vec<usize> = (0..=chains.max_dim + 1)
        .map(|d| {
            let t = transpose(&chains.boundary(d), chains.boundary_rows(d));
            linalg::rank(f, t.iter().map(|c| from_integers(f, c)).collect())
        })
        .collect();
    (0..=chains.max_dim)
        .map(|d| HomologyGroup {
            dim: d,
            betti: chains.rank(d) - ranks[d] - ranks[d + 1],
            torsion: Vec::new(),
            generators: None,
        })
        .collect()
}

/// A basis of `H_k` by reduced cycle representatives, with a solver for
/// the coordinates of any cycle.
pub(crate) struct HomologyBasis<E> {
    pub reps: Vec<SparseVec<E>>,
    echelon: Echelon<E>,
}

impl<E: Clone> HomologyBasis<E> {
    pub fn new<F: Field<Elem = E>>(f: &F, chains: &Chains, k: usize) -> Self {
        let dk = reduce_columns(f, chains.boundary(k).iter().map(|c| from_integers(f, c)).collect(), true);
        let bk = reduce_columns(f, chains.boundary(k + 1).iter().map(|c| from_integers(f, c)).collect(), false);
        let mut echelon = Echelon::new();
        for b in bk.columns.into_iter().filter(|c| !c.is_empty()) {
            echelon.insert(b, Vec::new());
        }
        let mut reps = Vec::new();
        for z in dk.kernel() {
            let (r, _) = echelon.reduce(f, z.clone());
            if !r.is_empty() {
                let t = reps.len();
                reps.push(r.clone());
                echelon.insert(r, vec![(t, f.one())]);
            }
        }
        Self { reps, echelon }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    /// Coordinates of the class of `cycle`; `None` if it is not in the
    /// span of cycles and boundaries.
    pub fn coordinates<F: Field<Elem = E>>(&self, f: &F, cycle: SparseVec<E>) -> Option<Vec<E>> {
        let (residual, coords) = self.echelon.reduce(f, cycle);
        residual.is_empty().then(|| linalg::to_dense(f, &coords, self.reps.len()))
    }
}

#[cfg(test)]
mod tests;
