//! The long exact sequence of a pair over a field.

use serde::Serialize;

use super::induced::{chain_map, map_matrix, LinearMap};
use super::linalg::{axpy, SparseVec};
use super::{with_field, Chains, HomologyBasis};
use crate::complex::ComplexPair;
use crate::error::{Error, Result};
use crate::field::{Coefficients, Field};

/// One group of `… → H_k(A) → H_k(X) → H_k(X,A) → H_{k−1}(A) → …`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LesSlot {
    /// `H_k(A)`, `H_k(X)` or `H_k(X,A)`.
    pub group: String,
    pub dim: usize,
    pub rank: usize,
    pub incoming_rank: usize,
    pub outgoing_rank: usize,
    pub composite_zero: bool,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LesReport {
    pub exact: bool,
    /// In sequence order, from `H_top(A)` down to `H_0(X,A)`.
    pub slots: Vec<LesSlot>,
}

/// Checks image = kernel at every slot with `k ≤ top_dim`. The connecting
/// map lifts a relative cycle to the total complex and takes its boundary.
pub fn check_les_exactness(pair: &ComplexPair, coeffs: Coefficients, top_dim: usize) -> Result<LesReport> {
    if pair.total().max_dim() < top_dim + 1 {
        return Err(Error::InvalidParameter(format!(
            "exactness up to degree {top_dim} needs complexes enumerated to dimension {}",
            top_dim + 1
        )));
    }
    with_field!(coeffs, f => Ok(les_in(f, pair, top_dim)))
}

struct Maps {
    i: Vec<LinearMap>,
    j: Vec<LinearMap>,
    /// `connecting[k]: H_k(X,A) → H_{k−1}(A)`; index 0 unused.
    connecting: Vec<LinearMap>,
    dims: [Vec<usize>; 3],
}

fn les_in<F: Field>(f: &F, pair: &ComplexPair, top: usize) -> LesReport {
    let a = Chains::new(pair.sub(), false);
    let x = Chains::new(pair.total(), false);
    let rel = Chains::new(pair, false);
    let id: Vec<usize> = (0..pair.total().space().size()).collect();

    let ha: Vec<_> = (0..=top).map(|k| HomologyBasis::new(f, &a, k)).collect();
    let hx: Vec<_> = (0..=top).map(|k| HomologyBasis::new(f, &x, k)).collect();
    let hrel: Vec<_> = (0..=top + 1).map(|k| HomologyBasis::new(f, &rel, k)).collect();

    let maps = Maps {
        i: (0..=top).map(|k| map_matrix(f, &ha[k], &hx[k], |c| chain_map(f, &a, &x, &id, k, c))).collect(),
        j: (0..=top).map(|k| map_matrix(f, &hx[k], &hrel[k], |c| chain_map(f, &x, &rel, &id, k, c))).collect(),
        connecting: (0..=top + 1)
            .map(|k| match k {
                0 => LinearMap::zero(0, hrel[0].len()),
                _ => map_matrix(f, &hrel[k], &ha[k - 1], |c| connecting(f, &rel, &a, k, c)),
            })
            .collect(),
        dims: [
            ha.iter().map(HomologyBasis::len).collect(),
            hx.iter().map(HomologyBasis::len).collect(),
            hrel.iter().map(HomologyBasis::len).collect(),
        ],
    };

    let mut slots = Vec::new();
    for k in (0..=top).rev() {
        slots.push(slot(f, format!("H_{k}(A)"), k, maps.dims[0][k], &maps.connecting[k + 1], &maps.i[k]));
        slots.push(slot(f, format!("H_{k}(X)"), k, maps.dims[1][k], &maps.i[k], &maps.j[k]));
        slots.push(slot(f, format!("H_{k}(X,A)"), k, maps.dims[2][k], &maps.j[k], &maps.connecting[k]));
    }
    LesReport { exact: slots.iter().all(|s| s.exact), slots }
}

fn slot<F: Field>(f: &F, group: String, dim: usize, rank: usize, incoming: &LinearMap, outgoing: &LinearMap) -> LesSlot {
    let incoming_rank = incoming.rank_in(f);
    let outgoing_rank = outgoing.rank_in(f);
    let composite_zero = outgoing.after_in(f, incoming).is_zero();
    LesSlot {
        group,
        dim,
        rank,
        incoming_rank,
        outgoing_rank,
        composite_zero,
        exact: composite_zero && incoming_rank + outgoing_rank == rank,
    }
}

/// Boundary of the lift of a relative `k`-cycle, read in `C_{k−1}(A)`.
fn connecting<F: Field>(f: &F, rel: &Chains, a: &Chains, k: usize, c: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
    let mut out: SparseVec<F::Elem> = Vec::new();
    for (i, coeff) in c {
        for (n, face) in rel.basis[k][*i].facets().enumerate() {
            if let Some(p) = a.position(&face) {
                let sign = f.embed_i64(if n % 2 == 0 { 1 } else { -1 });
                out = axpy(f, &out, &f.mul(coeff, &sign), &[(p, f.one())]);
            }
        }
    }
    out
}
