//! Vietoris-Rips (clique) complexes of relations, pairs of complexes,
//! nerves of covers, and simplicial vertex maps.
//!
//! Every complex carries an enumeration cap `max_dim`. Homology in degree
//! `k` needs the `(k + 1)`-simplices, so callers asking for `H_k` must build
//! with `max_dim ≥ k + 1`. A complex knows whether anything was cut off by
//! the cap ([`SimplicialComplex::is_complete`]).

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::closure::Cover;
use crate::error::{Error, Result};
use crate::relations::{check_vertex_map, FiniteSpace, IndexSet, Relation};

/// A simplex as its strictly increasing list of vertex indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    /// Sorts and deduplicates the vertices. Errors on an empty list.
    pub fn new(mut vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidParameter("a simplex needs at least one vertex".into()));
        }
        vertices.sort_unstable();
        vertices.dedup();
        Ok(Self(vertices))
    }

    pub(crate) fn from_sorted(vertices: Vec<usize>) -> Self {
        debug_assert!(!vertices.is_empty() && vertices.windows(2).all(|w| w[0] < w[1]));
        Self(vertices)
    }

    pub fn vertex(v: usize) -> Self {
        Self(vec![v])
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// The facet opposite vertex position `i`, for `i` in `0..=dim`.
    /// A vertex has no facets.
    pub fn facet(&self, i: usize) -> Option<Self> {
        if self.0.len() < 2 {
            return None;
        }
        let mut v = self.0.clone();
        v.remove(i);
        Some(Self(v))
    }

    pub fn facets(&self) -> impl Iterator<Item = Self> + '_ {
        (0..self.0.len()).filter_map(|i| self.facet(i))
    }

    /// Vertex set of the image under `f`, with duplicates collapsed.
    pub fn image(&self, f: &[usize]) -> Self {
        let mut v: Vec<usize> = self.0.iter().map(|&x| f[x]).collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }

    /// All faces of dimension `k`.
    fn faces_of_dim(&self, k: usize) -> Vec<Self> {
        let n = self.0.len();
        let mut out = Vec::new();
        if k + 1 > n {
            return out;
        }
        let mut idx: Vec<usize> = (0..=k).collect();
        loop {
            out.push(Self(idx.iter().map(|&i| self.0[i]).collect()));
            let mut i = k + 1;
            while i > 0 && idx[i - 1] == n - (k + 1) + (i - 1) {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..=k {
                idx[j] = idx[j - 1] + 1;
            }
        }
        out
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A face-closed set of simplices over a finite space, stored per
/// dimension in lexicographic order.
#[derive(Clone)]
pub struct SimplicialComplex {
    space: FiniteSpace,
    layers: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
    max_dim: usize,
    complete: bool,
}

impl SimplicialComplex {
    fn from_layers(space: FiniteSpace, mut layers: Vec<Vec<Simplex>>, max_dim: usize, complete: bool) -> Self {
        while layers.last().is_some_and(Vec::is_empty) {
            layers.pop();
        }
        let index = layers
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        Self { space, layers, index, max_dim, complete }
    }

    pub fn empty(space: FiniteSpace, max_dim: usize) -> Self {
        Self::from_layers(space, Vec::new(), max_dim, true)
    }

    /// The face closure of the given simplices, truncated at `max_dim`.
    pub fn from_simplices(
        space: FiniteSpace,
        simplices: impl IntoIterator<Item = Simplex>,
        max_dim: usize,
    ) -> Result<Self> {
        let mut sets: Vec<BTreeSet<Simplex>> = vec![BTreeSet::new(); max_dim + 1];
        let mut complete = true;
        for s in simplices {
            if let Some(&v) = s.0.last() {
                space.check_index(v)?;
            }
            if s.dim() > max_dim {
                complete = false;
            }
            for (k, set) in sets.iter_mut().enumerate().take(s.dim().min(max_dim) + 1) {
                set.extend(s.faces_of_dim(k));
            }
        }
        let layers = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        Ok(Self::from_layers(space, layers, max_dim, complete))
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    /// False when simplices above `max_dim` exist but were not enumerated.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Highest dimension with a stored simplex; `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.layers.len().checked_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.layers.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn count(&self, k: usize) -> usize {
        self.simplices(k).len()
    }

    pub fn len(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.layers.iter().flatten()
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s.dim())?.get(s).copied()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index_of(s).is_some()
    }

    /// Whether `s` is a simplex, treating simplices above the cap as
    /// present when all their `max_dim`-faces are (exact for flag complexes).
    pub(crate) fn admits(&self, s: &Simplex) -> bool {
        if s.dim() <= self.max_dim {
            self.contains(s)
        } else {
            !self.complete && s.faces_of_dim(self.max_dim).iter().all(|f| self.contains(f))
        }
    }

    pub fn is_subcomplex_of(&self, other: &Self) -> bool {
        self.space == other.space && self.iter().all(|s| other.contains(s))
    }

    /// Simplices that are not a facet of any stored simplex.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut covered: BTreeSet<Simplex> = BTreeSet::new();
        for s in self.iter() {
            covered.extend(s.facets());
        }
        self.iter().filter(|s| !covered.contains(s)).cloned().collect()
    }

    /// The full subcomplex spanned by `vertices`.
    pub fn induced(&self, vertices: &IndexSet) -> Self {
        let layers = self
            .layers
            .iter()
            .map(|l| l.iter().filter(|s| s.0.iter().all(|v| vertices.contains(v))).cloned().collect())
            .collect();
        Self::from_layers(self.space.clone(), layers, self.max_dim, self.complete)
    }

    /// `Σ (-1)^k · #k-simplices`.
    pub fn euler_characteristic(&self) -> i64 {
        self.layers.iter().enumerate().map(|(k, l)| if k % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) }).sum()
    }

    /// Every facet of every stored simplex is stored.
    pub fn is_face_closed(&self) -> bool {
        self.iter().all(|s| s.facets().all(|f| self.contains(&f)))
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.layers == other.layers
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts: Vec<usize> = self.layers.iter().map(Vec::len).collect();
        write!(f, "SimplicialComplex(counts={counts:?}, max_dim={}, complete={})", self.max_dim, self.complete)
    }
}

/// Grows simplices one vertex at a time: `σ ∪ {v}` with `v > max σ`,
/// `v` adjacent to every vertex of `σ`, and `accept` passing on the result.
/// Face-closed whenever `accept` is inherited by subsets.
fn enumerate_flag(
    space: &FiniteSpace,
    vertices: &IndexSet,
    adjacent: impl Fn(usize, usize) -> bool,
    accept: impl Fn(&[usize]) -> bool,
    max_dim: usize,
) -> SimplicialComplex {
    let n = space.size();
    let adj: Vec<Vec<bool>> =
        (0..n).map(|i| (0..n).map(|j| i != j && vertices.contains(&i) && vertices.contains(&j) && adjacent(i, j)).collect()).collect();
    let extensions = |s: &Simplex| -> Vec<Simplex> {
        let last = *s.0.last().expect("non-empty");
        (last + 1..n)
            .filter(|&v| s.0.iter().all(|&x| adj[x][v]))
            .filter_map(|v| {
                let mut t = s.0.clone();
                t.push(v);
                accept(&t).then_some(Simplex(t))
            })
            .collect()
    };
    let mut layers = vec![vertices.iter().map(|&v| Simplex::vertex(v)).collect::<Vec<_>>()];
    let mut complete = true;
    for k in 1..=max_dim + 1 {
        let prev = &layers[k - 1];
        if prev.is_empty() {
            break;
        }
        if k == max_dim + 1 {
            complete = !prev.iter().any(|s| !extensions(s).is_empty());
            break;
        }
        let next: Vec<Simplex> = prev.iter().flat_map(&extensions).collect();
        layers.push(next);
    }
    SimplicialComplex::from_layers(space.clone(), layers, max_dim, complete)
}

/// Whether some ordering of `vertices` makes every forward pair an edge of
/// `u`. Repeatedly removes a vertex with edges to all remaining ones.
pub fn is_directed_simplex(u: &Relation, vertices: &[usize]) -> bool {
    let mut remaining = vertices.to_vec();
    while remaining.len() > 1 {
        let source = remaining
            .iter()
            .position(|&x| remaining.iter().all(|&y| y == x || u.contains(x, y)));
        match source {
            Some(p) => {
                remaining.swap_remove(p);
            }
            None => return false,
        }
    }
    true
}

/// The clique complex of a symmetric relation: a vertex set is a simplex iff
/// all of its pairs are related.
pub fn clique_complex(u: &Relation, max_dim: usize) -> Result<SimplicialComplex> {
    if let Some((i, j)) = u.asymmetric_pair() {
        return Err(Error::NotSymmetric { i, j });
    }
    Ok(enumerate_flag(u.space(), &u.space().all(), |i, j| u.contains(i, j), |_| true, max_dim))
}

/// The directed clique complex: a vertex set is a simplex iff some ordering
/// makes every forward pair an edge. Agrees with [`clique_complex`] on
/// symmetric relations.
pub fn directed_clique_complex(u: &Relation, max_dim: usize) -> SimplicialComplex {
    directed_on(u, &u.space().all(), max_dim)
}

fn directed_on(u: &Relation, vertices: &IndexSet, max_dim: usize) -> SimplicialComplex {
    enumerate_flag(
        u.space(),
        vertices,
        |i, j| u.contains(i, j) || u.contains(j, i),
        |s| is_directed_simplex(u, s),
        max_dim,
    )
}

/// The Vietoris-Rips complex of a relation: the clique complex when the
/// relation is symmetric, the directed clique complex otherwise.
pub fn vr_complex(u: &Relation, max_dim: usize) -> SimplicialComplex {
    if u.is_symmetric() {
        enumerate_flag(u.space(), &u.space().all(), |i, j| u.contains(i, j), |_| true, max_dim)
    } else {
        directed_clique_complex(u, max_dim)
    }
}

/// The nerve: one vertex per cover member, a simplex for every family of
/// members with a common point.
pub fn nerve_of_cover(cover: &Cover, max_dim: usize) -> Result<SimplicialComplex> {
    let sets = cover.sets();
    if let Some(k) = sets.iter().position(BTreeSet::is_empty) {
        return Err(Error::EmptyCoverSet(k));
    }
    let space = FiniteSpace::new((0..sets.len()).map(|k| format!("U{k}"))).map_err(|_| Error::EmptyBase)?;
    let meet = |s: &[usize]| -> bool {
        let mut it = s.iter();
        let first = sets[*it.next().expect("non-empty")].clone();
        !it.fold(first, |acc, &k| acc.intersection(&sets[k]).copied().collect()).is_empty()
    };
    Ok(enumerate_flag(&space, &space.all(), |i, j| !sets[i].is_disjoint(&sets[j]), meet, max_dim))
}

/// Dowker's Vietoris complex of a cover: vertex sets contained in a single
/// cover member. A subcomplex of the clique complex of the Vietoris relation.
pub fn cover_vietoris_complex(cover: &Cover, max_dim: usize) -> SimplicialComplex {
    let sets = cover.sets();
    let inside = |s: &[usize]| sets.iter().any(|m| s.iter().all(|v| m.contains(v)));
    let space = cover.space();
    enumerate_flag(space, &space.all(), |i, j| inside(&[i, j]), inside, max_dim)
}

/// A pair `(total, sub)` with `sub` a subcomplex of `total`. The
/// subcomplex may be empty, giving absolute chains.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexPair {
    total: SimplicialComplex,
    sub: SimplicialComplex,
}

impl ComplexPair {
    pub fn new(total: SimplicialComplex, sub: SimplicialComplex) -> Result<Self> {
        if total.space != sub.space {
            return Err(Error::SpaceMismatch);
        }
        if let Some(s) = sub.iter().find(|s| !total.contains(s)) {
            return Err(Error::NotSubcomplex(s.0.clone()));
        }
        Ok(Self { total, sub })
    }

    /// `(K, ∅)`.
    pub fn absolute(total: SimplicialComplex) -> Self {
        let sub = SimplicialComplex::empty(total.space.clone(), total.max_dim);
        Self { total, sub }
    }

    pub fn total(&self) -> &SimplicialComplex {
        &self.total
    }

    pub fn sub(&self) -> &SimplicialComplex {
        &self.sub
    }

    pub fn is_absolute(&self) -> bool {
        self.sub.is_empty()
    }
}

/// `(Σ^X_U, Σ^A_{U_A})`, the subcomplex kept on the ambient indices.
pub fn pair_complex(u: &Relation, a: &IndexSet, max_dim: usize) -> Result<ComplexPair> {
    u.space().check_set(a)?;
    if a.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(relative_pair(u, a, max_dim))
}

/// Like [`pair_complex`] but allows an empty `a`.
pub(crate) fn relative_pair(u: &Relation, a: &IndexSet, max_dim: usize) -> ComplexPair {
    let total = vr_complex(u, max_dim);
    let sub = if u.is_symmetric() {
        enumerate_flag(u.space(), a, |i, j| u.contains(i, j), |_| true, max_dim)
    } else {
        directed_on(u, a, max_dim)
    };
    ComplexPair { total, sub }
}

/// A vertex map between complexes whose simplex images are simplices.
#[derive(Clone, Debug)]
pub struct SimplicialVertexMap<'a> {
    domain: &'a SimplicialComplex,
    codomain: &'a SimplicialComplex,
    assignment: Vec<usize>,
}

impl<'a> SimplicialVertexMap<'a> {
    pub fn domain(&self) -> &'a SimplicialComplex {
        self.domain
    }

    pub fn codomain(&self) -> &'a SimplicialComplex {
        self.codomain
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &SimplicialVertexMap<'a>) -> Result<SimplicialVertexMap<'a>> {
        if self.codomain != g.domain {
            return Err(Error::MapMismatch);
        }
        let assignment = self.assignment.iter().map(|&y| g.assignment[y]).collect();
        simplicial_map(assignment, self.domain, g.codomain)
    }
}

/// Validates that `f` sends every simplex of `dom` to a simplex of `cod`.
/// Degenerate images collapse to their vertex set.
pub fn simplicial_map<'a>(
    f: Vec<usize>,
    dom: &'a SimplicialComplex,
    cod: &'a SimplicialComplex,
) -> Result<SimplicialVertexMap<'a>> {
    check_vertex_map(&f, &dom.space, &cod.space)?;
    if let Some(s) = dom.iter().find(|s| !cod.admits(&s.image(&f))) {
        return Err(Error::NotSimplicial { simplex: s.0.clone(), image: s.image(&f).0 });
    }
    Ok(SimplicialVertexMap { domain: dom, codomain: cod, assignment: f })
}

/// A simplicial map of pairs: simplicial on the totals, sub into sub.
#[derive(Clone, Debug)]
pub struct PairMap<'a> {
    domain: &'a ComplexPair,
    codomain: &'a ComplexPair,
    assignment: Vec<usize>,
}

impl<'a> PairMap<'a> {
    pub fn new(f: Vec<usize>, dom: &'a ComplexPair, cod: &'a ComplexPair) -> Result<Self> {
        simplicial_map(f.clone(), &dom.total, &cod.total)?;
        if let Some(s) = dom.sub.iter().find(|s| !cod.sub.admits(&s.image(&f))) {
            return Err(Error::PairNotPreserved { simplex: s.0.clone() });
        }
        Ok(Self { domain: dom, codomain: cod, assignment: f })
    }

    /// The identity on vertices, e.g. `(Σ_U, Σ_{U_A}) → (Σ_{U'}, Σ_{U'_A})`
    /// for `U ⊆ U'`.
    pub fn inclusion(dom: &'a ComplexPair, cod: &'a ComplexPair) -> Result<Self> {
        Self::new((0..dom.total.space.size()).collect(), dom, cod)
    }

    pub fn domain(&self) -> &'a ComplexPair {
        self.domain
    }

    pub fn codomain(&self) -> &'a ComplexPair {
        self.codomain
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContiguityVerdict {
    pub contiguous: bool,
    /// A domain simplex `σ` with `f(σ) ∪ g(σ)` not a simplex.
    pub witness: Option<Simplex>,
}

/// `f` and `g` are contiguous iff `f(σ) ∪ g(σ)` is a codomain simplex for
/// every domain simplex `σ`.
pub fn are_contiguous(f: &SimplicialVertexMap<'_>, g: &SimplicialVertexMap<'_>) -> Result<ContiguityVerdict> {
    if f.domain != g.domain || f.codomain != g.codomain {
        return Err(Error::MapMismatch);
    }
    let witness = f
        .domain
        .iter()
        .find(|s| {
            let mut v: Vec<usize> = s.0.iter().flat_map(|&x| [f.assignment[x], g.assignment[x]]).collect();
            v.sort_unstable();
            v.dedup();
            !f.codomain.admits(&Simplex(v))
        })
        .cloned();
    Ok(ContiguityVerdict { contiguous: witness.is_none(), witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::{graph_relation, metric_relation, ScaleMode, SemiPseudometric};

    fn cycle(n: usize) -> Relation {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        graph_relation(&edges, FiniteSpace::indexed(n), false).unwrap()
    }

    fn counts(k: &SimplicialComplex) -> Vec<usize> {
        (0..=k.dim().unwrap_or(0)).map(|d| k.count(d)).collect()
    }

    fn brute_cliques(u: &Relation, max_dim: usize) -> Vec<Vec<usize>> {
        let n = u.space().size();
        let mut out = Vec::new();
        for mask in 1u32..(1 << n) {
            let v: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            if v.len() <= max_dim + 1 && v.iter().all(|&a| v.iter().all(|&b| u.contains(a, b))) {
                out.push(v);
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    fn listed(k: &SimplicialComplex) -> Vec<Vec<usize>> {
        k.iter().map(|s| s.vertices().to_vec()).collect()
    }

    #[test]
    fn triangle_and_square() {
        let tri = graph_relation(&[(0, 1), (1, 2), (0, 2)], FiniteSpace::indexed(3), false).unwrap();
        let k = clique_complex(&tri, 2).unwrap();
        assert_eq!(counts(&k), vec![3, 3, 1]);
        assert_eq!(listed(&k), brute_cliques(&tri, 2));
        assert!(k.is_complete());

        let diag = Relation::diagonal(FiniteSpace::indexed(4));
        assert_eq!(counts(&clique_complex(&diag, 2).unwrap()), vec![4]);

        let coords = vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![1.0, 1.0], vec![0.0, 1.0]];
        let d = SemiPseudometric::euclidean(FiniteSpace::indexed(4), &coords).unwrap();
        let sq = clique_complex(&metric_relation(&d, 1.0, ScaleMode::Closed).unwrap(), 2).unwrap();
        assert_eq!(counts(&sq), vec![4, 4]);
    }

    #[test]
    fn clique_rejects_asymmetric() {
        let u = Relation::from_pairs(FiniteSpace::indexed(2), [(0, 1)]).unwrap();
        assert_eq!(clique_complex(&u, 1).unwrap_err(), Error::NotSymmetric { i: 0, j: 1 });
    }

    #[test]
    fn truncation_is_flagged() {
        let full = Relation::full(FiniteSpace::indexed(4));
        let k = clique_complex(&full, 2).unwrap();
        assert_eq!(counts(&k), vec![4, 6, 4]);
        assert!(!k.is_complete());
        assert!(clique_complex(&full, 3).unwrap().is_complete());
    }

    #[test]
    fn directed_examples() {
        let s = FiniteSpace::indexed(3);
        let tt = Relation::from_pairs(s.clone(), [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(counts(&directed_clique_complex(&tt, 2)), vec![3, 3, 1]);
        let cyc = Relation::from_pairs(s, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let k = directed_clique_complex(&cyc, 2);
        assert_eq!(counts(&k), vec![3, 3]);
    }

    #[test]
    fn pair_examples() {
        let c = cycle(4);
        let p = pair_complex(&c, &c.space().all(), 2).unwrap();
        assert_eq!(p.sub(), p.total());
        let p = pair_complex(&c, &[0, 1].into(), 2).unwrap();
        assert_eq!(listed(p.sub()), vec![vec![0], vec![1], vec![0, 1]]);
        let p = pair_complex(&c, &[2].into(), 2).unwrap();
        assert_eq!(listed(p.sub()), vec![vec![2]]);
        assert_eq!(pair_complex(&c, &IndexSet::new(), 2).unwrap_err(), Error::EmptySubset);
    }

    #[test]
    fn nerve_examples() {
        let s = FiniteSpace::indexed(4);
        let u = Cover::new(s.clone(), vec![[0, 1, 3].into(), [1, 2].into()]).unwrap();
        let n = nerve_of_cover(&u, 2).unwrap();
        assert_eq!(counts(&n), vec![2, 1]);
        let disjoint = Cover::singletons(s);
        assert_eq!(counts(&nerve_of_cover(&disjoint, 2).unwrap()), vec![4]);

        let circle = Cover::new(FiniteSpace::indexed(6), vec![[0, 1, 2].into(), [2, 3, 4].into(), [4, 5, 0].into()])
            .unwrap();
        assert_eq!(counts(&nerve_of_cover(&circle, 2).unwrap()), vec![3, 3]);
    }

    #[test]
    fn cover_vietoris_complex_sits_inside_flag_complex() {
        let circle = Cover::new(FiniteSpace::indexed(6), vec![[0, 1, 2].into(), [2, 3, 4].into(), [4, 5, 0].into()])
            .unwrap();
        let v = cover_vietoris_complex(&circle, 3);
        assert_eq!(counts(&v), vec![6, 9, 3]);
        let flag = clique_complex(&crate::closure::vietoris_relation(&circle), 3).unwrap();
        assert!(v.is_subcomplex_of(&flag));
        // {0, 2, 4} is pairwise related but lies in no single arc
        assert_eq!(counts(&flag), vec![6, 9, 4]);
    }

    #[test]
    fn maps_and_contiguity() {
        let c = cycle(4);
        let k = clique_complex(&c, 2).unwrap();
        let id = simplicial_map((0..4).collect(), &k, &k).unwrap();
        let rot = simplicial_map(vec![1, 2, 3, 0], &k, &k).unwrap();
        simplicial_map(vec![2; 4], &k, &k).unwrap();
        assert!(matches!(simplicial_map(vec![0, 2, 1, 3], &k, &k), Err(Error::NotSimplicial { .. })));

        assert!(are_contiguous(&id, &id).unwrap().contiguous);
        let v = are_contiguous(&rot, &id).unwrap();
        assert!(!v.contiguous);
        assert_eq!(v.witness, Some(Simplex::from_sorted(vec![0, 1])));

        let full = clique_complex(&Relation::full(FiniteSpace::indexed(4)), 3).unwrap();
        let f = simplicial_map(vec![0, 1, 2, 3], &k, &full).unwrap();
        let g = simplicial_map(vec![3, 3, 0, 1], &k, &full).unwrap();
        assert!(are_contiguous(&f, &g).unwrap().contiguous);
    }

    #[test]
    fn from_simplices_closes_faces() {
        let k = SimplicialComplex::from_simplices(
            FiniteSpace::indexed(4),
            vec![Simplex::new(vec![2, 0, 1]).unwrap(), Simplex::new(vec![3]).unwrap()],
            2,
        )
        .unwrap();
        assert_eq!(counts(&k), vec![4, 3, 1]);
        assert!(k.is_face_closed());
        assert_eq!(k.maximal_simplices(), vec![Simplex::vertex(3), Simplex::from_sorted(vec![0, 1, 2])]);
        let cut =
            SimplicialComplex::from_simplices(FiniteSpace::indexed(3), vec![Simplex::new(vec![0, 1, 2]).unwrap()], 1)
                .unwrap();
        assert!(!cut.is_complete());
    }
}
