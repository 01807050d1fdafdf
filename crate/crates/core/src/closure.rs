//! Finite additive Čech closure spaces.
//!
//! An additive closure operator is determined by the closures of singletons:
//! `c(A) = ⋃_{x ∈ A} N(x)`. Interiors are `i(A) = X − c(X − A)`.

use crate::error::{Error, Result};
use crate::relations::{FiniteSpace, IndexSet, Relation, SemiPseudometric};

#[derive(Clone, Debug, PartialEq)]
pub struct AdditiveClosure {
    space: FiniteSpace,
    nbhd: Vec<IndexSet>,
}

impl AdditiveClosure {
    /// `nbhd[x]` is the closure of `{x}` and must contain `x`.
    pub fn new(space: FiniteSpace, nbhd: Vec<IndexSet>) -> Result<Self> {
        if nbhd.len() != space.size() {
            return Err(Error::InvalidParameter(format!(
                "{} neighborhoods for {} points",
                nbhd.len(),
                space.size()
            )));
        }
        for (x, n) in nbhd.iter().enumerate() {
            space.check_set(n)?;
            if !n.contains(&x) {
                return Err(Error::NotReflexive(x));
            }
        }
        Ok(Self { space, nbhd })
    }

    /// `N(x) = {x}` for all points.
    pub fn discrete(space: FiniteSpace) -> Self {
        let nbhd = (0..space.size()).map(|x| IndexSet::from([x])).collect();
        Self { space, nbhd }
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn neighborhood(&self, x: usize) -> &IndexSet {
        &self.nbhd[x]
    }

    pub fn neighborhoods(&self) -> &[IndexSet] {
        &self.nbhd
    }

    pub fn closure_of(&self, a: &IndexSet) -> Result<IndexSet> {
        self.space.check_set(a)?;
        Ok(a.iter().flat_map(|&x| self.nbhd[x].iter().copied()).collect())
    }

    pub fn interior_of(&self, a: &IndexSet) -> Result<IndexSet> {
        self.space.check_set(a)?;
        let complement: IndexSet = (0..self.space.size()).filter(|x| !a.contains(x)).collect();
        let closed = self.closure_of(&complement)?;
        Ok((0..self.space.size()).filter(|x| !closed.contains(x)).collect())
    }

    /// `c(c(A)) = c(A)` for every singleton, hence for every set.
    pub fn is_topological(&self) -> bool {
        self.nbhd.iter().all(|n| self.closure_of(n).map(|c| &c == n).unwrap_or(false))
    }

    /// Points lying in no interior of a cover member; empty iff the cover is
    /// an interior cover.
    pub fn uncovered_by_interiors(&self, cover: &Cover) -> Result<IndexSet> {
        if cover.space != self.space {
            return Err(Error::SpaceMismatch);
        }
        let mut covered = IndexSet::new();
        for s in &cover.sets {
            covered.extend(self.interior_of(s)?);
        }
        Ok((0..self.space.size()).filter(|x| !covered.contains(x)).collect())
    }

    pub fn is_interior_cover(&self, cover: &Cover) -> Result<InteriorCoverVerdict> {
        let uncovered = self.uncovered_by_interiors(cover)?;
        Ok(InteriorCoverVerdict { interior_cover: uncovered.is_empty(), uncovered })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InteriorCoverVerdict {
    pub interior_cover: bool,
    pub uncovered: IndexSet,
}

/// A family of subsets whose union is the whole space.
#[derive(Clone, Debug, PartialEq)]
pub struct Cover {
    space: FiniteSpace,
    sets: Vec<IndexSet>,
}

impl Cover {
    pub fn new(space: FiniteSpace, sets: Vec<IndexSet>) -> Result<Self> {
        for s in &sets {
            space.check_set(s)?;
        }
        let missing: IndexSet = (0..space.size()).filter(|x| !sets.iter().any(|s| s.contains(x))).collect();
        if !missing.is_empty() {
            return Err(Error::NotACover { missing });
        }
        Ok(Self { space, sets })
    }

    /// The cover by singletons.
    pub fn singletons(space: FiniteSpace) -> Self {
        let sets = (0..space.size()).map(|x| IndexSet::from([x])).collect();
        Self { space, sets }
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn sets(&self) -> &[IndexSet] {
        &self.sets
    }

    /// Every member of `self` lies inside some member of `coarse`.
    pub fn refines(&self, coarse: &Cover) -> Result<bool> {
        cover_refines(coarse, self)
    }
}

pub fn cover_refines(coarse: &Cover, fine: &Cover) -> Result<bool> {
    if coarse.space != fine.space {
        return Err(Error::SpaceMismatch);
    }
    Ok(fine.sets.iter().all(|f| coarse.sets.iter().any(|c| f.is_subset(c))))
}

/// `V_𝒰 = {(x, y) | x, y ∈ U for some U ∈ 𝒰}`.
pub fn vietoris_relation(cover: &Cover) -> Relation {
    let pairs = cover.sets.iter().flat_map(|s| s.iter().flat_map(move |&x| s.iter().map(move |&y| (x, y))));
    Relation::from_pairs(cover.space.clone(), pairs).expect("cover members are range-checked")
}

/// The interior-inclusion relation: `(x, y)` is related when one of the two
/// lies in the interior of a cover member containing the other.
pub fn ii_relation(c: &AdditiveClosure, cover: &Cover) -> Result<Relation> {
    let uncovered = c.uncovered_by_interiors(cover)?;
    if !uncovered.is_empty() {
        return Err(Error::NotInteriorCover { uncovered });
    }
    let mut pairs = Vec::new();
    for s in &cover.sets {
        for x in c.interior_of(s)? {
            for &y in s {
                pairs.push((x, y));
                pairs.push((y, x));
            }
        }
    }
    Relation::from_pairs(c.space.clone(), pairs)
}

/// `c_r(A) = {x | d(x, A) ≤ r}`.
pub fn metric_closure_space(d: &SemiPseudometric, r: f64) -> Result<AdditiveClosure> {
    if r.is_nan() || r < 0.0 {
        return Err(Error::NegativeScale(r));
    }
    let n = d.space().size();
    let nbhd = (0..n).map(|x| (0..n).filter(|&y| d.dist(x, y) <= r).collect()).collect();
    AdditiveClosure::new(d.space().clone(), nbhd)
}

/// `c_G(A) = A ∪ {w | ∃ v ∈ A: (v, w) ∈ E}` for an undirected edge list.
pub fn graph_closure_space(edges: &[(usize, usize)], space: FiniteSpace) -> Result<AdditiveClosure> {
    let mut nbhd: Vec<IndexSet> = (0..space.size()).map(|x| IndexSet::from([x])).collect();
    for &(u, v) in edges {
        space.check_index(u)?;
        space.check_index(v)?;
        nbhd[u].insert(v);
        nbhd[v].insert(u);
    }
    AdditiveClosure::new(space, nbhd)
}
