//! Relative chain groups in the quotient basis and their boundaries.

use std::collections::HashMap;

use crate::complex::{ComplexPair, Simplex, SimplicialComplex};

/// Anything with a total complex and an optional subcomplex.
pub trait ChainSource {
    fn total(&self) -> &SimplicialComplex;
    fn sub(&self) -> Option<&SimplicialComplex>;
}

impl ChainSource for SimplicialComplex {
    fn total(&self) -> &SimplicialComplex {
        self
    }
    fn sub(&self) -> Option<&SimplicialComplex> {
        None
    }
}

impl ChainSource for ComplexPair {
    fn total(&self) -> &SimplicialComplex {
        ComplexPair::total(self)
    }
    fn sub(&self) -> Option<&SimplicialComplex> {
        Some(ComplexPair::sub(self)).filter(|s| !s.is_empty())
    }
}

impl<T: ChainSource + ?Sized> ChainSource for &T {
    fn total(&self) -> &SimplicialComplex {
        (**self).total()
    }
    fn sub(&self) -> Option<&SimplicialComplex> {
        (**self).sub()
    }
}

/// Chain bases for degrees `0..=max_dim`: simplices of the total complex
/// not in the subcomplex, in the complex's own order.
pub(crate) struct Chains {
    pub basis: Vec<Vec<Simplex>>,
    pos: Vec<HashMap<Simplex, usize>>,
    pub max_dim: usize,
    pub complete: bool,
    /// `∂₀` is the augmentation `C₀ → ℤ` (reduced homology).
    pub augmented: bool,
}

impl Chains {
    pub fn new(k: &dyn ChainSource, augmented: bool) -> Self {
        let total = k.total();
        let sub = k.sub();
        let max_dim = total.max_dim();
        let basis: Vec<Vec<Simplex>> = (0..=max_dim)
            .map(|d| total.simplices(d).iter().filter(|s| sub.is_none_or(|a| !a.contains(s))).cloned().collect())
            .collect();
        let pos = basis.iter().map(|b| b.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect()).collect();
        let complete = total.is_complete() && sub.is_none_or(SimplicialComplex::is_complete);
        Self { basis, pos, max_dim, complete, augmented: augmented && sub.is_none() }
    }

    /// Rank of `C_k`; zero outside `0..=max_dim`.
    pub fn rank(&self, k: usize) -> usize {
        self.basis.get(k).map_or(0, Vec::len)
    }

    pub fn position(&self, s: &Simplex) -> Option<usize> {
        self.pos.get(s.dim())?.get(s).copied()
    }

    /// Highest degree whose homology is exact: `max_dim`, or one less
    /// when simplices above the cap were dropped.
    pub fn exact_top(&self) -> Option<usize> {
        if self.complete {
            Some(self.max_dim)
        } else {
            self.max_dim.checked_sub(1)
        }
    }

    /// Rows of `∂_k`: `rank(k-1)`, or 1 for the augmentation.
    pub fn boundary_rows(&self, k: usize) -> usize {
        match k {
            0 if self.augmented => 1,
            0 => 0,
            _ => self.rank(k - 1),
        }
    }

    /// Columns of `∂_k` as sparse integer vectors.
    pub fn boundary(&self, k: usize) -> Vec<Vec<(usize, i64)>> {
        let Some(basis) = self.basis.get(k) else { return Vec::new() };
        if k == 0 {
            let col = if self.augmented { vec![(0, 1)] } else { Vec::new() };
            return vec![col; basis.len()];
        }
        basis
            .iter()
            .map(|s| {
                let mut col: Vec<(usize, i64)> = s
                    .facets()
                    .enumerate()
                    .filter_map(|(i, f)| self.position(&f).map(|p| (p, if i % 2 == 0 { 1 } else { -1 })))
                    .collect();
                col.sort_unstable();
                col
            })
            .collect()
    }
}

/// `f(σ)` with orientation: `None` when `f` collapses `σ`, otherwise the
/// sorted image and the sign of the sorting permutation.
pub(crate) fn oriented_image(s: &Simplex, f: &[usize]) -> Option<(Simplex, i64)> {
    let mut img: Vec<usize> = s.vertices().iter().map(|&v| f[v]).collect();
    let mut sign = 1;
    for i in 1..img.len() {
        let mut j = i;
        while j > 0 && img[j - 1] > img[j] {
            img.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if img.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((Simplex::from_sorted(img), sign))
}
