//! Maps on homology induced by simplicial maps.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::linalg::{axpy, from_dense, SparseVec};
use super::{oriented_image, with_field, Chains, ChainSource, HomologyBasis};
use crate::complex::{PairMap, SimplicialVertexMap};
use crate::error::{Error, Result};
use crate::field::{Coefficients, Field};

/// A matrix `rows × cols` acting on column vectors of basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<BigRational>>,
}

impl LinearMap {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![vec![BigRational::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries[i][i] = BigRational::one();
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows)
    }

    /// `self ∘ first` with entries reduced in `coeffs`.
    pub fn after(&self, first: &LinearMap, coeffs: Coefficients) -> Result<LinearMap> {
        if self.cols != first.rows {
            return Err(Error::MapMismatch);
        }
        with_field!(coeffs, f => Ok(self.after_in(f, first)))
    }

    pub(crate) fn after_in<F: Field>(&self, f: &F, first: &LinearMap) -> LinearMap {
        let a = self.to_field(f);
        let b = first.to_field(f);
        let mut out = Self::zero(self.rows, first.cols);
        for (row, ai) in out.entries.iter_mut().zip(&a) {
            for (j, cell) in row.iter_mut().enumerate() {
                let acc = ai.iter().zip(&b).fold(f.zero(), |acc, (x, bk)| f.add(&acc, &f.mul(x, &bk[j])));
                *cell = f.to_rational(&acc);
            }
        }
        out
    }

    pub fn rank(&self, coeffs: Coefficients) -> Result<usize> {
        with_field!(coeffs, f => Ok(self.rank_in(f)))
    }

    pub(crate) fn rank_in<F: Field>(&self, f: &F) -> usize {
        let a = self.to_field(f);
        let cols = (0..self.cols).map(|j| from_dense(f, &a.iter().map(|r| r[j].clone()).collect::<Vec<_>>())).collect();
        super::linalg::rank(f, cols)
    }

    fn to_field<F: Field>(&self, f: &F) -> Vec<Vec<F::Elem>> {
        self.entries.iter().map(|r| r.iter().map(|x| f.embed_rational(x)).collect()).collect()
    }

    pub(crate) fn from_columns<F: Field>(f: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Self {
        let mut m = Self::zero(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m.entries[i][j] = f.to_rational(x);
            }
        }
        m
    }
}

/// Per-degree matrices of an induced map in the chosen homology bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMapResult {
    pub coefficients: Coefficients,
    /// Indexed by degree, up to the highest degree exact on both sides.
    pub degrees: Vec<LinearMap>,
}

impl InducedMapResult {
    /// `self ∘ first`, over the degrees both cover.
    pub fn compose(&self, first: &InducedMapResult) -> Result<InducedMapResult> {
        if self.coefficients != first.coefficients {
            return Err(Error::MapMismatch);
        }
        let degrees = self
            .degrees
            .iter()
            .zip(&first.degrees)
            .map(|(g, f)| g.after(f, self.coefficients))
            .collect::<Result<_>>()?;
        Ok(Self { coefficients: self.coefficients, degrees })
    }

    pub fn is_identity(&self) -> bool {
        self.degrees.iter().all(LinearMap::is_identity)
    }
}

pub fn induced_map(f: &SimplicialVertexMap<'_>, coeffs: Coefficients) -> Result<InducedMapResult> {
    induced_between(f.domain(), f.codomain(), f.assignment(), coeffs)
}

pub fn induced_pair_map(f: &PairMap<'_>, coeffs: Coefficients) -> Result<InducedMapResult> {
    induced_between(f.domain(), f.codomain(), f.assignment(), coeffs)
}

/// The assignment must already be validated as a simplicial map.
pub(crate) fn induced_between(
    dom: &dyn ChainSource,
    cod: &dyn ChainSource,
    assignment: &[usize],
    coeffs: Coefficients,
) -> Result<InducedMapResult> {
    let dom = Chains::new(dom, false);
    let cod = Chains::new(cod, false);
    let top = match (dom.exact_top(), cod.exact_top()) {
        (Some(a), Some(b)) => Some(a.min(b)),
        _ => None,
    };
    let degrees = with_field!(coeffs, f => {
        top.map_or_else(Vec::new, |top| (0..=top).map(|k| {
            let src = HomologyBasis::new(f, &dom, k);
            let dst = HomologyBasis::new(f, &cod, k);
            map_matrix(f, &src, &dst, |c| chain_map(f, &dom, &cod, assignment, k, c))
        }).collect())
    });
    Ok(InducedMapResult { coefficients: coeffs, degrees })
}

/// Matrix of `[z] ↦ [g(z)]` on homology bases.
pub(crate) fn map_matrix<F: Field>(
    f: &F,
    src: &HomologyBasis<F::Elem>,
    dst: &HomologyBasis<F::Elem>,
    g: impl Fn(&SparseVec<F::Elem>) -> SparseVec<F::Elem>,
) -> LinearMap {
    let columns: Vec<Vec<F::Elem>> = src
        .reps
        .iter()
        .map(|z| dst.coordinates(f, g(z)).expect("chain maps send cycles to cycles"))
        .collect();
    LinearMap::from_columns(f, dst.len(), &columns)
}

/// The chain map in degree `k`; simplices landing in the target
/// subcomplex or collapsing map to zero.
pub(crate) fn chain_map<F: Field>(
    f: &F,
    dom: &Chains,
    cod: &Chains,
    assignment: &[usize],
    k: usize,
    c: &SparseVec<F::Elem>,
) -> SparseVec<F::Elem> {
    let mut out: SparseVec<F::Elem> = Vec::new();
    for (i, a) in c {
        let Some((img, sign)) = oriented_image(&dom.basis[k][*i], assignment) else { continue };
        let Some(p) = cod.position(&img) else { continue };
        out = axpy(f, &out, &f.mul(a, &f.embed_i64(sign)), &[(p, f.one())]);
    }
    out
}
