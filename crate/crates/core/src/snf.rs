//! Dense integer matrices and the Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self { rows: rows.len(), cols, data: rows.iter().flatten().map(|&v| BigInt::from(v)).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    /// Panics on a dimension mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Determinant by fraction-free (Bareiss) elimination. Panics if not square.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += factor * row[src]`, restricted to columns `from..`.
    fn add_row(&mut self, dst: usize, src: usize, factor: &BigInt, from: usize) {
        for j in from..self.cols {
            let v = self.get(src, j);
            if !v.is_zero() {
                let add = factor * v;
                self.data[dst * self.cols + j] += add;
            }
        }
    }

    /// `col[dst] += factor * col[src]`, restricted to rows `from..`.
    fn add_col(&mut self, dst: usize, src: usize, factor: &BigInt, from: usize) {
        for i in from..self.rows {
            let v = self.get(i, src);
            if !v.is_zero() {
                let add = factor * v;
                self.data[i * self.cols + dst] += add;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = -v;
        }
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect()).collect();
        write!(f, "IntegerMatrix{rows:?}")
    }
}

/// `left · m · right = diag(diagonal)` with `left`, `right` unimodular and
/// each diagonal entry dividing the next.
#[derive(Clone, Debug, PartialEq)]
pub struct SnfResult {
    /// Length `min(rows, cols)`, non-negative, zeros last.
    pub diagonal: Vec<BigInt>,
    pub left: IntegerMatrix,
    pub right: IntegerMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// The rectangular diagonal matrix with the invariant factors.
    pub fn diagonal_matrix(&self) -> IntegerMatrix {
        let mut d = IntegerMatrix::zeros(self.left.rows, self.right.rows);
        for (i, v) in self.diagonal.iter().enumerate() {
            d.set(i, i, v.clone());
        }
        d
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SnfResult {
    let mut a = m.clone();
    let mut left = IntegerMatrix::identity(m.rows);
    let mut right = IntegerMatrix::identity(m.cols);
    let diagonal = reduce(&mut a, Some((&mut left, &mut right)));
    SnfResult { diagonal, left, right }
}

/// The invariant factors alone, skipping the transforms.
pub fn smith_invariants(m: &IntegerMatrix) -> Vec<BigInt> {
    let mut a = m.clone();
    reduce(&mut a, None)
}

fn reduce(a: &mut IntegerMatrix, mut transforms: Option<(&mut IntegerMatrix, &mut IntegerMatrix)>) -> Vec<BigInt> {
    let (m, n) = (a.rows, a.cols);
    let steps = m.min(n);
    for t in 0..steps {
        loop {
            let Some((pi, pj)) = min_entry(a, t) else {
                return (0..steps).map(|i| a.get(i, i).clone()).collect();
            };
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);
            if let Some((l, r)) = transforms.as_mut() {
                l.swap_rows(t, pi);
                r.swap_cols(t, pj);
            }
            let pivot = a.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..m {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = -a.get(i, t).div_floor(&pivot);
                a.add_row(i, t, &q, t);
                if let Some((l, _)) = transforms.as_mut() {
                    l.add_row(i, t, &q, 0);
                }
                clean &= a.get(i, t).is_zero();
            }
            for j in t + 1..n {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = -a.get(t, j).div_floor(&pivot);
                a.add_col(j, t, &q, t);
                if let Some((_, r)) = transforms.as_mut() {
                    r.add_col(j, t, &q, 0);
                }
                clean &= a.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a.get(i, j).is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    a.add_row(t, i, &BigInt::one(), t);
                    if let Some((l, _)) = transforms.as_mut() {
                        l.add_row(t, i, &BigInt::one(), 0);
                    }
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            if let Some((l, _)) = transforms.as_mut() {
                l.negate_row(t);
            }
        }
    }
    (0..steps).map(|i| a.get(i, i).clone()).collect()
}

/// Position of a nonzero entry of least absolute value in the lower-right
/// block starting at `(t, t)`.
fn min_entry(a: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let v = a.get(i, j);
            if v.is_zero() {
                continue;
            }
            if v.is_one() || (-v).is_one() {
                return Some((i, j));
            }
            let abs = v.abs();
            if best.as_ref().is_none_or(|(_, b)| abs < *b) {
                best = Some(((i, j), abs));
            }
        }
    }
    best.map(|(p, _)| p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check(m: &IntegerMatrix) -> SnfResult {
        let r = smith_normal_form(m);
        assert_eq!(r.left.mul(m).mul(&r.right), r.diagonal_matrix());
        assert!(r.left.determinant().abs().is_one());
        assert!(r.right.determinant().abs().is_one());
        for w in r.diagonal.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]) || w[0].is_zero() && w[1].is_zero());
        }
        assert_eq!(smith_invariants(m), r.diagonal);
        r
    }

    /// Invariant factors from determinantal divisors: `d_k = D_k / D_{k-1}`
    /// where `D_k` is the gcd of all k×k minors.
    fn determinantal_oracle(m: &IntegerMatrix) -> Vec<BigInt> {
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            (0u32..1 << n).filter(|x| x.count_ones() as usize == k).map(|x| (0..n).filter(|i| x & (1 << i) != 0).collect()).collect()
        }
        let mut out = Vec::new();
        let mut prev = BigInt::one();
        for k in 1..=m.rows().min(m.cols()) {
            let mut g = BigInt::zero();
            for rs in subsets(m.rows(), k) {
                for cs in subsets(m.cols(), k) {
                    let minor: Vec<Vec<i64>> = rs
                        .iter()
                        .map(|&i| cs.iter().map(|&j| i64::try_from(m.get(i, j)).unwrap()).collect())
                        .collect();
                    g = g.gcd(&IntegerMatrix::from_rows(&minor).determinant());
                }
            }
            if g.is_zero() {
                out.push(BigInt::zero());
                prev = BigInt::zero();
            } else {
                out.push(&g / &prev);
                prev = g;
            }
        }
        out
    }

    #[test]
    fn diag_two_three() {
        let m = IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(determinantal_oracle(&m), ints(&[1, 6]));
        assert_eq!(check(&m).diagonal, ints(&[1, 6]));
    }

    #[test]
    fn zero_and_identity() {
        assert_eq!(check(&IntegerMatrix::zeros(3, 2)).diagonal, ints(&[0, 0]));
        assert_eq!(check(&IntegerMatrix::identity(4)).diagonal, ints(&[1, 1, 1, 1]));
        assert_eq!(check(&IntegerMatrix::zeros(0, 3)).diagonal, ints(&[]));
    }

    #[test]
    fn agrees_with_determinantal_divisors() {
        let cases = [
            vec![vec![4, 6], vec![6, 4]],
            vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]],
            vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]],
            vec![vec![6, 0, 0], vec![0, 10, 0]],
            vec![vec![0, 3], vec![0, 9], vec![5, 0]],
        ];
        for rows in cases {
            let m = IntegerMatrix::from_rows(&rows);
            assert_eq!(check(&m).diagonal, determinantal_oracle(&m), "{rows:?}");
        }
    }

    #[test]
    fn bareiss_determinant() {
        assert_eq!(IntegerMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).determinant(), BigInt::from(-1));
        assert_eq!(
            IntegerMatrix::from_rows(&[vec![2, -3, 1], vec![2, 0, -1], vec![1, 4, 5]]).determinant(),
            BigInt::from(49)
        );
    }
}
