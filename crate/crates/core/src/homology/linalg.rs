//! Sparse column reduction over a field.

use std::collections::HashMap;

use crate::field::Field;

/// Sorted by row index, no explicit zeros.
pub(crate) type SparseVec<E> = Vec<(usize, E)>;

/// `y + a·x`.
pub(crate) fn axpy<F: Field>(f: &F, y: &[(usize, F::Elem)], a: &F::Elem, x: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(y.len() + x.len());
    let (mut i, mut j) = (0, 0);
    while i < y.len() || j < x.len() {
        let take_y = j == x.len() || (i < y.len() && y[i].0 < x[j].0);
        let take_x = i == y.len() || (j < x.len() && x[j].0 < y[i].0);
        if take_y {
            out.push(y[i].clone());
            i += 1;
        } else if take_x {
            out.push((x[j].0, f.mul(a, &x[j].1)));
            j += 1;
        } else {
            let v = f.add(&y[i].1, &f.mul(a, &x[j].1));
            if !f.is_zero(&v) {
                out.push((y[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub(crate) fn from_integers<F: Field>(f: &F, col: &[(usize, i64)]) -> SparseVec<F::Elem> {
    col.iter().map(|&(i, v)| (i, f.embed_i64(v))).filter(|(_, v)| !f.is_zero(v)).collect()
}

pub(crate) fn to_dense<F: Field>(f: &F, v: &[(usize, F::Elem)], len: usize) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

pub(crate) fn from_dense<F: Field>(f: &F, v: &[F::Elem]) -> SparseVec<F::Elem> {
    v.iter().enumerate().filter(|(_, x)| !f.is_zero(x)).map(|(i, x)| (i, x.clone())).collect()
}

/// Transposes integer columns of a matrix with `rows` rows.
pub(crate) fn transpose(cols: &[Vec<(usize, i64)>], rows: usize) -> Vec<Vec<(usize, i64)>> {
    let mut out = vec![Vec::new(); rows];
    for (j, col) in cols.iter().enumerate() {
        for &(i, v) in col {
            out[i].push((j, v));
        }
    }
    out
}

/// Result of left-to-right column reduction: `columns = original · V`,
/// with the nonzero columns having distinct lowest rows.
pub(crate) struct Reduction<E> {
    pub columns: Vec<SparseVec<E>>,
    /// Columns of `V`, present only when tracked.
    pub transforms: Vec<SparseVec<E>>,
}

impl<E> Reduction<E> {
    pub fn rank(&self) -> usize {
        self.columns.iter().filter(|c| !c.is_empty()).count()
    }

    /// Columns of `V` whose reduced column vanished: a kernel basis.
    pub fn kernel(&self) -> impl Iterator<Item = &SparseVec<E>> {
        self.columns.iter().zip(&self.transforms).filter(|(c, _)| c.is_empty()).map(|(_, v)| v)
    }
}

pub(crate) fn reduce_columns<F: Field>(f: &F, mut columns: Vec<SparseVec<F::Elem>>, track: bool) -> Reduction<F::Elem> {
    let mut transforms: Vec<SparseVec<F::Elem>> =
        if track { (0..columns.len()).map(|j| vec![(j, f.one())]).collect() } else { Vec::new() };
    let mut pivot_of: HashMap<usize, usize> = HashMap::new();
    for j in 0..columns.len() {
        while let Some((low, val)) = columns[j].last().cloned() {
            match pivot_of.get(&low) {
                Some(&i) => {
                    let factor = f.neg(&f.mul(&val, &f.inv(&columns[i].last().expect("pivot column").1)));
                    columns[j] = axpy(f, &columns[j], &factor, &columns[i]);
                    if track {
                        transforms[j] = axpy(f, &transforms[j], &factor, &transforms[i]);
                    }
                }
                None => {
                    pivot_of.insert(low, j);
                    break;
                }
            }
        }
    }
    Reduction { columns, transforms }
}

pub(crate) fn rank<F: Field>(f: &F, columns: Vec<SparseVec<F::Elem>>) -> usize {
    reduce_columns(f, columns, false).rank()
}

/// Vectors with distinct lowest rows, each tagged with coordinates in
/// some external basis; reduction accumulates those coordinates.
pub(crate) struct Echelon<E> {
    pivot_of: HashMap<usize, usize>,
    vectors: Vec<SparseVec<E>>,
    coords: Vec<SparseVec<E>>,
}

impl<E: Clone> Echelon<E> {
    pub fn new() -> Self {
        Self { pivot_of: HashMap::new(), vectors: Vec::new(), coords: Vec::new() }
    }

    /// `v` must be nonzero with a lowest row that is not yet a pivot.
    pub fn insert(&mut self, v: SparseVec<E>, coords: SparseVec<E>) {
        let low = v.last().expect("nonzero vector").0;
        let prev = self.pivot_of.insert(low, self.vectors.len());
        debug_assert!(prev.is_none());
        self.vectors.push(v);
        self.coords.push(coords);
    }

    /// Subtracts stored vectors until the lowest row is not a pivot.
    /// Returns the residual and the coordinates of `v − residual`.
    pub fn reduce<F: Field<Elem = E>>(&self, f: &F, mut v: SparseVec<E>) -> (SparseVec<E>, SparseVec<E>) {
        let mut coords = Vec::new();
        while let Some((low, val)) = v.last().cloned() {
            let Some(&i) = self.pivot_of.get(&low) else { break };
            let factor = f.mul(&val, &f.inv(&self.vectors[i].last().expect("nonzero").1));
            v = axpy(f, &v, &f.neg(&factor), &self.vectors[i]);
            coords = axpy(f, &coords, &factor, &self.coords[i]);
        }
        (v, coords)
    }
}
