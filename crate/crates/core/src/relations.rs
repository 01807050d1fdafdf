//! Finite point sets, relations `U ⊆ X × X`, and finite bases of
//! semi-uniform structures.
//!
//! Every relation built here contains the diagonal. Constructors adjoin it
//! when the raw pairs omit it, so membership of `(x, x)` is unconditional.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A set of point indices, kept sorted.
pub type IndexSet = BTreeSet<usize>;

/// A finite, index-based point set. Labels are for display only.
#[derive(Clone)]
pub struct FiniteSpace {
    labels: Arc<[String]>,
}

impl FiniteSpace {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptySpace);
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Self { labels: labels.into() })
    }

    /// Points labelled `0`, `1`, ... `n - 1`.
    ///
    /// Panics if `n == 0`.
    pub fn indexed(n: usize) -> Self {
        assert!(n > 0, "a finite space needs at least one point");
        Self { labels: (0..n).map(|i| i.to_string()).collect() }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index < self.size() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index, size: self.size() })
        }
    }

    pub fn check_set(&self, set: &IndexSet) -> Result<()> {
        match set.iter().next_back() {
            Some(&max) => self.check_index(max),
            None => Ok(()),
        }
    }

    pub fn all(&self) -> IndexSet {
        (0..self.size()).collect()
    }

    /// The points of `subset`, in increasing index order, as a space of their own.
    pub fn subspace(&self, subset: &IndexSet) -> Result<Self> {
        self.check_set(subset)?;
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        Ok(Self { labels: subset.iter().map(|&i| self.labels[i].clone()).collect() })
    }

    /// Cartesian product with row-major indexing: `(x, y) ↦ x * |Y| + y`.
    pub fn product(&self, other: &Self) -> Self {
        let mut labels = Vec::with_capacity(self.size() * other.size());
        for x in self.labels.iter() {
            for y in other.labels.iter() {
                labels.push(format!("({x},{y})"));
            }
        }
        Self { labels: labels.into() }
    }
}

impl PartialEq for FiniteSpace {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.labels, &other.labels) || self.labels == other.labels
    }
}

impl Eq for FiniteSpace {}

impl fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels.iter()).finish()
    }
}

/// A symmetric, zero-on-diagonal, non-negative distance table. The triangle
/// inequality is not required and distinct points may be at distance zero.
#[derive(Clone, Debug, PartialEq)]
pub struct SemiPseudometric {
    space: FiniteSpace,
    dist: Vec<f64>,
}

impl SemiPseudometric {
    pub fn new(space: FiniteSpace, rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = space.size();
        if rows.len() != n {
            return Err(Error::NotSquare { row: rows.len(), expected: n, found: rows.len() });
        }
        let mut dist = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare { row: i, expected: n, found: row.len() });
            }
            dist.extend(row);
        }
        for i in 0..n {
            for j in 0..n {
                let v = dist[i * n + j];
                if v.is_nan() || v < 0.0 || v.is_infinite() {
                    return Err(Error::InvalidDistance { i, j, value: v });
                }
            }
            if dist[i * n + i] != 0.0 {
                return Err(Error::NonzeroDiagonal { index: i, value: dist[i * n + i] });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if dist[i * n + j] != dist[j * n + i] {
                    return Err(Error::Asymmetric { i, j });
                }
            }
        }
        Ok(Self { space, dist })
    }

    /// Euclidean distances between the given coordinate tuples.
    pub fn euclidean(space: FiniteSpace, coords: &[Vec<f64>]) -> Result<Self> {
        let n = space.size();
        if coords.len() != n {
            return Err(Error::InvalidParameter(format!(
                "{} coordinate tuples for {n} points",
                coords.len()
            )));
        }
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            0.0
                        } else {
                            coords[i]
                                .iter()
                                .zip(&coords[j])
                                .map(|(a, b)| (a - b) * (a - b))
                                .sum::<f64>()
                                .sqrt()
                        }
                    })
                    .collect()
            })
            .collect();
        Self::new(space, rows)
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn dist(&self, i: usize, j: usize) -> f64 {
        self.dist[i * self.space.size() + j]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.dist.chunks(self.space.size()).map(<[f64]>::to_vec).collect()
    }

    /// The shifted semi-pseudometric `d_q`: `d - q` above `q`, zero otherwise.
    pub fn shifted(&self, q: f64) -> Result<Self> {
        check_scale(q)?;
        let dist = self.dist.iter().map(|&d| if d > q { d - q } else { 0.0 }).collect();
        Ok(Self { space: self.space.clone(), dist })
    }

    /// `d_{≤q}`: distances up to `q` collapse to zero, the rest are kept.
    pub fn closed_at(&self, q: f64) -> Result<Self> {
        check_scale(q)?;
        let dist = self.dist.iter().map(|&d| if d > q { d } else { 0.0 }).collect();
        Ok(Self { space: self.space.clone(), dist })
    }

    /// Distinct off-diagonal distance values, ascending.
    pub fn distance_values(&self) -> Vec<f64> {
        let n = self.space.size();
        let mut vals: Vec<f64> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| self.dist(i, j)).collect();
        vals.sort_by(f64::total_cmp);
        vals.dedup();
        vals
    }

    /// Smallest `d - q` over distances strictly above `q`; `None` when no
    /// distance exceeds `q`. Any offset below this value gives
    /// `{d < q + δ} = {d ≤ q}`.
    pub fn gap_above(&self, q: f64) -> Option<f64> {
        self.distance_values().into_iter().find(|&d| d > q).map(|d| d - q)
    }

    pub fn diameter(&self) -> f64 {
        self.distance_values().last().copied().unwrap_or(0.0)
    }
}

fn check_scale(q: f64) -> Result<()> {
    if q.is_nan() || q < 0.0 {
        Err(Error::NegativeScale(q))
    } else {
        Ok(())
    }
}

/// Whether a metric relation keeps the boundary `d = q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScaleMode {
    /// `d < q`
    Strict,
    /// `d ≤ q`
    Closed,
}

/// A relation on a finite space, always containing the diagonal.
#[derive(Clone, PartialEq, Eq)]
pub struct Relation {
    space: FiniteSpace,
    bits: Vec<bool>,
}

impl Relation {
    pub fn diagonal(space: FiniteSpace) -> Self {
        let n = space.size();
        let mut bits = vec![false; n * n];
        for i in 0..n {
            bits[i * n + i] = true;
        }
        Self { space, bits }
    }

    pub fn full(space: FiniteSpace) -> Self {
        let n = space.size();
        Self { space, bits: vec![true; n * n] }
    }

    /// The given pairs together with the diagonal.
    pub fn from_pairs(space: FiniteSpace, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut rel = Self::diagonal(space);
        let n = rel.space.size();
        for (i, j) in pairs {
            rel.space.check_index(i)?;
            rel.space.check_index(j)?;
            rel.bits[i * n + j] = true;
        }
        Ok(rel)
    }

    fn from_predicate(space: FiniteSpace, mut pred: impl FnMut(usize, usize) -> bool) -> Self {
        let n = space.size();
        let mut bits = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                bits[i * n + j] = i == j || pred(i, j);
            }
        }
        Self { space, bits }
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        let n = self.space.size();
        i < n && j < n && self.bits[i * n + j]
    }

    /// All pairs in lexicographic order, diagonal included.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.space.size();
        self.bits.iter().enumerate().filter(|(_, &b)| b).map(move |(k, _)| (k / n, k % n))
    }

    pub fn len(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Never true: the diagonal is always present.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_symmetric(&self) -> bool {
        self.asymmetric_pair().is_none()
    }

    pub(crate) fn asymmetric_pair(&self) -> Option<(usize, usize)> {
        self.pairs().find(|&(i, j)| !self.contains(j, i))
    }

    /// `self ⊆ other`; false when the spaces differ.
    pub fn is_subset(&self, other: &Self) -> bool {
        self.space == other.space && self.bits.iter().zip(&other.bits).all(|(&a, &b)| !a || b)
    }

    /// Points `j ≠ i` with `(i, j)` in the relation.
    pub fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.space.size();
        (0..n).filter(move |&j| j != i && self.bits[i * n + j])
    }

    /// `U⁻¹ = {(y, x) | (x, y) ∈ U}`.
    pub fn inverse(&self) -> Self {
        Self::from_predicate(self.space.clone(), |i, j| self.contains(j, i))
    }

    /// `U[A] = {y | ∃ a ∈ A: (a, y) ∈ U}`.
    pub fn image(&self, a: &IndexSet) -> Result<IndexSet> {
        self.space.check_set(a)?;
        let n = self.space.size();
        Ok((0..n).filter(|&y| a.iter().any(|&x| self.contains(x, y))).collect())
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        let bits = self.bits.iter().zip(&other.bits).map(|(&a, &b)| a && b).collect();
        Ok(Self { space: self.space.clone(), bits })
    }

    /// `U ∩ U⁻¹`.
    pub fn symmetric_part(&self) -> Self {
        Self::from_predicate(self.space.clone(), |i, j| self.contains(i, j) && self.contains(j, i))
    }

    /// `U_A = U ∩ (A × A)`, reindexed onto the subspace `A` (points in
    /// increasing index order).
    pub fn relativize(&self, a: &IndexSet) -> Result<Self> {
        let sub = self.space.subspace(a)?;
        let idx: Vec<usize> = a.iter().copied().collect();
        Ok(Self::from_predicate(sub, |i, j| self.contains(idx[i], idx[j])))
    }

    /// `((x, y), (x', y'))` is related iff `(x, x') ∈ self` and `(y, y') ∈ other`.
    /// Points of the product are indexed row-major.
    pub fn product(&self, other: &Self) -> Self {
        let m = other.space.size();
        Self::from_predicate(self.space.product(&other.space), |p, q| {
            self.contains(p / m, q / m) && other.contains(p % m, q % m)
        })
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let off: Vec<(usize, usize)> = self.pairs().filter(|(i, j)| i != j).collect();
        write!(f, "Relation(n={}, Δ ∪ {:?})", self.space.size(), off)
    }
}

/// `{d < q} ∪ Δ` (strict) or `{d ≤ q} ∪ Δ` (closed). Values are compared
/// exactly; a distance equal to `q` is only in the closed relation.
pub fn metric_relation(d: &SemiPseudometric, q: f64, mode: ScaleMode) -> Result<Relation> {
    check_scale(q)?;
    Ok(Relation::from_predicate(d.space.clone(), |i, j| match mode {
        ScaleMode::Strict => d.dist(i, j) < q,
        ScaleMode::Closed => d.dist(i, j) <= q,
    }))
}

/// Undirected edges are adjoined in both directions.
pub fn graph_relation(edges: &[(usize, usize)], space: FiniteSpace, directed: bool) -> Result<Relation> {
    let pairs = edges.iter().flat_map(|&(u, v)| {
        let back = if directed { None } else { Some((v, u)) };
        std::iter::once((u, v)).chain(back)
    });
    Relation::from_pairs(space, pairs)
}

/// A finite base of a semi-uniform structure.
///
/// Construction closes the member list under pairwise intersection, so the
/// family is directed by reverse inclusion and has a least member.
#[derive(Clone, Debug, PartialEq)]
pub struct SemiUniformBase {
    space: FiniteSpace,
    members: Vec<Relation>,
}

impl SemiUniformBase {
    pub fn new(space: FiniteSpace, members: Vec<Relation>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::EmptyBase);
        }
        for (k, m) in members.iter().enumerate() {
            if m.space != space {
                return Err(Error::SpaceMismatch);
            }
            if !(0..space.size()).all(|i| m.contains(i, i)) {
                return Err(Error::MissingDiagonal { member: k });
            }
        }
        let mut members = members;
        let mut start = 0;
        loop {
            let mut added = Vec::new();
            for i in 0..members.len() {
                for j in (i + 1).max(start)..members.len() {
                    let meet = members[i].intersect(&members[j])?;
                    if !members.contains(&meet) && !added.contains(&meet) {
                        added.push(meet);
                    }
                }
            }
            if added.is_empty() {
                break;
            }
            start = members.len();
            members.extend(added);
        }
        let base = Self { space, members };
        for (k, m) in base.members.iter().enumerate() {
            let inv = m.inverse();
            if !base.members.iter().any(|v| v.is_subset(&inv)) {
                return Err(Error::InverseAxiom { member: k });
            }
        }
        Ok(base)
    }

    /// The base `{U}` generated by one relation.
    pub fn single(u: Relation) -> Result<Self> {
        Self::new(u.space.clone(), vec![u])
    }

    #[cfg(test)]
    pub(crate) fn unchecked(space: FiniteSpace, members: Vec<Relation>) -> Self {
        Self { space, members }
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn members(&self) -> &[Relation] {
        &self.members
    }

    /// Index of a member contained in every other member.
    pub fn minimum(&self) -> Option<usize> {
        (0..self.members.len()).find(|&i| self.members.iter().all(|m| self.members[i].is_subset(m)))
    }

    /// All pairs `(i, j)` with member `i` strictly contained in member `j`.
    pub fn inclusion_order(&self) -> Vec<(usize, usize)> {
        let n = self.members.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.members[i].is_subset(&self.members[j]) && self.members[i] != self.members[j] {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// Base `{ {d < q + δ} ∪ Δ | δ ∈ deltas }` of the semi-uniformity induced by
/// `d` at scale `q`. Members with `δ` below [`SemiPseudometric::gap_above`]
/// coincide with the closed relation at `q`.
pub fn scale_base(d: &SemiPseudometric, q: f64, deltas: &[f64]) -> Result<SemiUniformBase> {
    check_scale(q)?;
    if deltas.is_empty() || deltas.iter().any(|&e| e.is_nan() || e <= 0.0) {
        return Err(Error::InvalidDeltas);
    }
    let members = deltas
        .iter()
        .map(|&e| metric_relation(d, q + e, ScaleMode::Strict))
        .collect::<Result<Vec<_>>>()?;
    SemiUniformBase::new(d.space.clone(), members)
}

/// Evidence that a map fails to be uniformly continuous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuityViolation {
    /// Index of the codomain member `V` with no domain member mapping into it.
    pub target_member: usize,
    /// For each domain member `U`, a pair of `U` whose image leaves `V`.
    pub witnesses: Vec<(usize, (usize, usize))>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuityVerdict {
    pub continuous: bool,
    pub violation: Option<ContinuityViolation>,
}

pub(crate) fn check_vertex_map(f: &[usize], domain: &FiniteSpace, codomain: &FiniteSpace) -> Result<()> {
    if f.len() != domain.size() {
        return Err(Error::MapArity { expected: domain.size(), found: f.len() });
    }
    f.iter().try_for_each(|&y| codomain.check_index(y))
}

/// For every member `V` of `by` some member `U` of `bx` satisfies
/// `(x, y) ∈ U ⟹ (f(x), f(y)) ∈ V`.
pub fn check_uniform_continuity(
    f: &[usize],
    bx: &SemiUniformBase,
    by: &SemiUniformBase,
) -> Result<ContinuityVerdict> {
    check_vertex_map(f, &bx.space, &by.space)?;
    for (vi, v) in by.members.iter().enumerate() {
        let mut witnesses = Vec::with_capacity(bx.members.len());
        for (ui, u) in bx.members.iter().enumerate() {
            match u.pairs().find(|&(x, y)| !v.contains(f[x], f[y])) {
                Some(pair) => witnesses.push((ui, pair)),
                None => {
                    witnesses.clear();
                    break;
                }
            }
        }
        if !witnesses.is_empty() {
            return Ok(ContinuityVerdict {
                continuous: false,
                violation: Some(ContinuityViolation { target_member: vi, witnesses }),
            });
        }
    }
    Ok(ContinuityVerdict { continuous: true, violation: None })
}

/// (p, q)-continuity on finite spaces, which reduces to
/// `d_X(x, y) ≤ p ⟹ d_Y(f(x), f(y)) ≤ q` for all pairs.
pub fn check_pq_continuity(
    f: &[usize],
    dx: &SemiPseudometric,
    dy: &SemiPseudometric,
    p: f64,
    q: f64,
) -> Result<bool> {
    check_scale(p)?;
    check_scale(q)?;
    check_vertex_map(f, &dx.space, &dy.space)?;
    let n = dx.space.size();
    Ok((0..n).all(|i| (0..n).all(|j| dx.dist(i, j) > p || dy.dist(f[i], f[j]) <= q)))
}
