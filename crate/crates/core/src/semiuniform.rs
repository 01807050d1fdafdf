//! Limits of homology over semi-uniform bases and checks of the homology
//! axioms on concrete instances.
//!
//! Every finite base closed under intersection has a least member, and the
//! inverse (and direct) systems are constant from there on, so the limit is
//! the group at that member.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::closure::{vietoris_relation, Cover};
use crate::complex::{
    clique_complex, cover_vietoris_complex, nerve_of_cover, relative_pair, simplicial_map, vr_complex, ComplexPair,
    SimplicialComplex,
};
use crate::error::{Error, Result};
use crate::field::Coefficients;
use crate::homology::{cohomology, homology, induced_between, induced_map, HomologyResult, InducedMapResult};
use crate::relations::{
    check_uniform_continuity, metric_relation, FiniteSpace, IndexSet, Relation, ScaleMode, SemiPseudometric,
    SemiUniformBase,
};

#[derive(Clone, Debug, PartialEq)]
pub struct LimitReport {
    pub members: usize,
    pub inclusion_order: Vec<(usize, usize)>,
    /// Index of the least member.
    pub minimum: usize,
    pub homology: HomologyResult,
    /// Field coefficients only.
    pub cohomology: Option<HomologyResult>,
    /// For each member, whether the inclusion from the least member
    /// induces an isomorphism (over ℚ when the coefficients are ℤ).
    pub stabilization: Vec<bool>,
}

impl LimitReport {
    /// The system is constant over the whole base, not just eventually.
    pub fn is_stable(&self) -> bool {
        self.stabilization.iter().all(|&s| s)
    }
}

/// Homology of `(X, A : U)` at the least member `U` of the base.
pub fn limit_homology(
    b: &SemiUniformBase,
    a: Option<&IndexSet>,
    coeffs: Coefficients,
    max_dim: usize,
) -> Result<LimitReport> {
    let minimum = b.minimum().ok_or(Error::NoMinimum)?;
    let empty = IndexSet::new();
    let a = a.unwrap_or(&empty);
    b.space().check_set(a)?;
    let pairs: Vec<ComplexPair> = b.members().iter().map(|u| relative_pair(u, a, max_dim)).collect();
    let base = &pairs[minimum];
    let map_coeffs = if coeffs.is_field() { coeffs } else { Coefficients::Rationals };
    let id: Vec<usize> = (0..b.space().size()).collect();
    let stabilization = pairs
        .iter()
        .map(|p| Ok(is_isomorphism(&induced_between(base, p, &id, map_coeffs)?)))
        .collect::<Result<_>>()?;
    Ok(LimitReport {
        members: b.members().len(),
        inclusion_order: b.inclusion_order(),
        minimum,
        homology: homology(base, coeffs, false)?,
        cohomology: if coeffs.is_field() { Some(cohomology(base, coeffs)?) } else { None },
        stabilization,
    })
}

fn is_isomorphism(m: &InducedMapResult) -> bool {
    m.degrees.iter().all(|d| d.rows == d.cols && d.rank(m.coefficients).is_ok_and(|r| r == d.rows))
}

/// Homology of the VR complex of `d` at scale `q`.
pub fn homology_at_scale(
    d: &SemiPseudometric,
    q: f64,
    mode: ScaleMode,
    coeffs: Coefficients,
    max_dim: usize,
) -> Result<HomologyResult> {
    let u = metric_relation(d, q, mode)?;
    homology(&vr_complex(&u, max_dim), coeffs, false)
}

/// Outcome of one axiom check on one instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AxiomVerdict {
    pub axiom: String,
    pub instance: String,
    pub pass: bool,
    /// False when the instance falls outside the hypotheses of the
    /// statement being checked; `pass` then reports the raw outcome.
    pub hypothesis_met: bool,
    pub notes: Vec<String>,
    /// Non-null on failure.
    pub witness: Value,
}

impl AxiomVerdict {
    fn new(axiom: &str, instance: impl Into<String>) -> Self {
        Self {
            axiom: axiom.into(),
            instance: instance.into(),
            pass: true,
            hypothesis_met: true,
            notes: Vec::new(),
            witness: Value::Null,
        }
    }

    fn fail(mut self, witness: Value) -> Self {
        self.pass = false;
        self.witness = witness;
        self
    }
}

fn betti_below(h: &HomologyResult, max_dim: usize) -> Vec<usize> {
    h.betti().into_iter().take(max_dim).collect()
}

fn torsion_below(h: &HomologyResult, max_dim: usize) -> Vec<Vec<String>> {
    h.torsion().into_iter().take(max_dim).map(|t| t.iter().map(ToString::to_string).collect()).collect()
}

/// The one-point space has the homology of a point.
pub fn verify_dimension(coeffs: Coefficients) -> Result<AxiomVerdict> {
    let space = FiniteSpace::new(["*"])?;
    let base = SemiUniformBase::single(Relation::diagonal(space))?;
    let report = limit_homology(&base, None, coeffs, 3)?;
    let mut v = AxiomVerdict::new("dimension", format!("one-point space, coefficients {coeffs}"));
    let expected = vec![1, 0, 0, 0];
    let mut bad = Vec::new();
    if report.homology.betti() != expected || report.homology.has_torsion() {
        bad.push(json!({"homology": report.homology.betti(), "torsion": torsion_below(&report.homology, 4)}));
    }
    match &report.cohomology {
        Some(c) if c.betti() != expected => bad.push(json!({"cohomology": c.betti()})),
        Some(_) => {}
        None => v.notes.push("cohomology not computed over the integers".into()),
    }
    if !bad.is_empty() {
        v = v.fail(Value::Array(bad));
    }
    Ok(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExcisionHypothesis {
    pub holds: bool,
    /// A member `W` such that `U[B] ⊆ A` for every member `U ⊆ W`.
    pub member: Option<usize>,
    /// On failure: a member `U` and a point of `U[B]` outside `A`.
    pub failure: Option<(usize, usize)>,
}

/// Whether some member `W` has `U[B] ⊆ A` for all members `U ⊆ W`.
pub fn check_excision_hypothesis(b: &SemiUniformBase, a: &IndexSet, bset: &IndexSet) -> Result<ExcisionHypothesis> {
    b.space().check_set(a)?;
    b.space().check_set(bset)?;
    if let Some(&x) = bset.difference(a).next() {
        return Err(Error::NotNested(x));
    }
    let members = b.members();
    let failure_of = |u: usize| -> Result<Option<(usize, usize)>> {
        Ok(members[u].image(bset)?.into_iter().find(|p| !a.contains(p)).map(|p| (u, p)))
    };
    let mut first_failure = None;
    for w in order_by_size(members) {
        let mut failed = None;
        for u in (0..members.len()).filter(|&u| members[u].is_subset(&members[w])) {
            if let Some(f) = failure_of(u)? {
                failed = Some(f);
                break;
            }
        }
        match failed {
            None => return Ok(ExcisionHypothesis { holds: true, member: Some(w), failure: None }),
            Some(f) => {
                first_failure.get_or_insert(f);
            }
        }
    }
    Ok(ExcisionHypothesis { holds: false, member: None, failure: first_failure })
}

fn order_by_size(members: &[Relation]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..members.len()).collect();
    order.sort_by_key(|&i| members[i].len());
    order
}

/// Compares `(X − B, A − B : U_{X−B})` with `(X, A : U)` for every
/// symmetric member `U` below the member found by the hypothesis check.
pub fn verify_excision(
    b: &SemiUniformBase,
    a: &IndexSet,
    bset: &IndexSet,
    coeffs: Coefficients,
    max_dim: usize,
) -> Result<AxiomVerdict> {
    let hyp = check_excision_hypothesis(b, a, bset)?;
    let Some(w) = hyp.member else {
        let (u, p) = hyp.failure.expect("failure recorded");
        return Err(Error::ExcisionHypothesis(format!(
            "member {u} relates a point of B to {}, which is outside A",
            b.space().label(p)
        )));
    };
    let space = b.space();
    let mut v = AxiomVerdict::new(
        "excision",
        format!("{} points, |A| = {}, |B| = {}, {} base members", space.size(), a.len(), bset.len(), b.members().len()),
    );
    let rest: IndexSet = (0..space.size()).filter(|x| !bset.contains(x)).collect();
    let positions: Vec<usize> = rest.iter().copied().collect();
    let a_rest: IndexSet = a.difference(bset).map(|x| positions.binary_search(x).expect("in rest")).collect();
    let members = b.members();
    let mut mismatches = Vec::new();
    for (k, u) in members.iter().enumerate().filter(|(_, u)| u.is_subset(&members[w])) {
        if !u.is_symmetric() {
            v.notes.push(format!("member {k} is not symmetric; skipped"));
            continue;
        }
        let whole = homology(&relative_pair(u, a, max_dim), coeffs, false)?;
        let (betti, torsion) = if rest.is_empty() {
            (vec![0; max_dim], vec![Vec::new(); max_dim])
        } else {
            let excised = homology(&relative_pair(&u.relativize(&rest)?, &a_rest, max_dim), coeffs, false)?;
            (betti_below(&excised, max_dim), torsion_below(&excised, max_dim))
        };
        if betti != betti_below(&whole, max_dim) || torsion != torsion_below(&whole, max_dim) {
            mismatches.push(json!({
                "member": k,
                "excised": {"betti": betti, "torsion": torsion},
                "whole": {"betti": betti_below(&whole, max_dim), "torsion": torsion_below(&whole, max_dim)},
            }));
        } else {
            v.notes.push(format!("member {k}: betti {betti:?} on both sides"));
        }
    }
    if !mismatches.is_empty() {
        v = v.fail(Value::Array(mismatches));
    }
    Ok(v)
}

/// The `n` points `i / (n − 1)` with the strict relation at `r`.
pub fn interval_relation(n: usize, r: f64) -> Result<Relation> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("an interval needs at least 2 points, got {n}")));
    }
    if r.is_nan() || r <= 0.0 {
        return Err(Error::NegativeScale(r));
    }
    let labels = (0..n).map(|i| format!("t{i}"));
    let coords: Vec<Vec<f64>> = (0..n).map(|i| vec![i as f64 / (n - 1) as f64]).collect();
    let d = SemiPseudometric::euclidean(FiniteSpace::new(labels)?, &coords)?;
    metric_relation(&d, r, ScaleMode::Strict)
}

/// Reduced homology of the discretized interval vanishes below `max_dim`.
pub fn check_interval_acyclic(n: usize, r: f64, max_dim: usize) -> Result<AxiomVerdict> {
    let u = interval_relation(n, r)?;
    let spacing = 1.0 / (n - 1) as f64;
    let h = homology(&clique_complex(&u, max_dim)?, Coefficients::Integers, true)?;
    let mut v = AxiomVerdict::new("interval", format!("n = {n}, r = {r}"));
    v.hypothesis_met = r > spacing;
    let betti = betti_below(&h, max_dim);
    v.notes.push(format!("reduced betti {betti:?}"));
    if !v.hypothesis_met {
        v.notes.push(format!("r = {r} does not exceed the spacing {spacing}; the complex need not be connected"));
    }
    if betti.iter().any(|&b| b > 0) || h.has_torsion() {
        v = v.fail(json!({"reduced_betti": betti, "torsion": torsion_below(&h, max_dim)}));
    }
    Ok(v)
}

/// `g₀, g₁ : Σ_u → Σ_{u × I}` at the two ends of the discretized interval
/// induce the same maps below `max_dim`; also checks that `S(σ)`, the
/// full subcomplex on `σ × I`, is acyclic for every maximal simplex `σ`.
pub fn verify_homotopy_cylinder(
    u: &Relation,
    n: usize,
    r: f64,
    coeffs: Coefficients,
    max_dim: usize,
) -> Result<AxiomVerdict> {
    if !coeffs.is_field() {
        return Err(Error::FieldRequired);
    }
    let interval = interval_relation(n, r)?;
    let base = clique_complex(u, max_dim)?;
    let cylinder_rel = u.product(&interval);
    let cylinder = clique_complex(&cylinder_rel, max_dim)?;
    let size = u.space().size();
    let g0 = simplicial_map((0..size).map(|x| x * n).collect(), &base, &cylinder)?;
    let g1 = simplicial_map((0..size).map(|x| x * n + n - 1).collect(), &base, &cylinder)?;
    let m0 = induced_map(&g0, coeffs)?;
    let m1 = induced_map(&g1, coeffs)?;

    let spacing = 1.0 / (n - 1) as f64;
    let mut v = AxiomVerdict::new("homotopy", format!("{size} points, {} pairs, n = {n}, r = {r}", u.len()));
    v.hypothesis_met = r > spacing;
    if !v.hypothesis_met {
        v.notes.push(format!("r = {r} does not exceed the spacing {spacing}"));
    }
    let mut witness = serde_json::Map::new();
    let degrees = m0.degrees.len().min(max_dim);
    let unequal: Vec<usize> = (0..degrees).filter(|&k| m0.degrees[k] != m1.degrees[k]).collect();
    if !unequal.is_empty() {
        witness.insert("unequal_degrees".into(), json!(unequal));
    }
    v.notes.push(format!("compared induced maps in degrees 0..{degrees}"));

    let mut carriers = Vec::new();
    for sigma in base.maximal_simplices() {
        let verts: IndexSet = sigma.vertices().iter().flat_map(|&x| (0..n).map(move |t| x * n + t)).collect();
        let h = homology(&cylinder.induced(&verts), coeffs, true)?;
        let betti = betti_below(&h, max_dim);
        if betti.iter().any(|&b| b > 0) {
            carriers.push(json!({"simplex": sigma.vertices(), "reduced_betti": betti}));
        }
    }
    v.notes.push(format!("checked S(σ) for {} maximal simplices", base.maximal_simplices().len()));
    if !carriers.is_empty() {
        witness.insert("non_acyclic_carriers".into(), Value::Array(carriers));
    }
    if !witness.is_empty() {
        v = v.fail(Value::Object(witness));
    }
    Ok(v)
}

/// The nerve of a cover and its Vietoris complex (simplices lying in one
/// member) have equal betti numbers below `max_dim`.
pub fn verify_dowker(cover: &Cover, coeffs: Coefficients, max_dim: usize) -> Result<AxiomVerdict> {
    let nerve = nerve_of_cover(cover, max_dim)?;
    let vietoris = cover_vietoris_complex(cover, max_dim);
    let hn = homology(&nerve, coeffs, false)?;
    let hv = homology(&vietoris, coeffs, false)?;
    let mut v = AxiomVerdict::new(
        "dowker",
        format!("{} points, {} cover sets", cover.space().size(), cover.sets().len()),
    );
    let flag = homology(&clique_complex(&vietoris_relation(cover), max_dim)?, coeffs, false)?;
    v.notes.push(format!(
        "flag complex of the Vietoris relation: betti {:?}, contains the Vietoris complex",
        betti_below(&flag, max_dim)
    ));
    let (bn, bv) = (betti_below(&hn, max_dim), betti_below(&hv, max_dim));
    if bn != bv {
        v = v.fail(json!({"nerve": bn, "vietoris": bv}));
    } else {
        v.notes.push(format!("betti {bn:?} on both sides"));
    }
    Ok(v)
}

/// `(g ∘ f)_* = g_* ∘ f_*` and identities induce identities, on the
/// complexes of the least members. Both maps must be uniformly continuous.
pub fn verify_functoriality(
    f: &[usize],
    g: &[usize],
    bases: [&SemiUniformBase; 3],
    coeffs: Coefficients,
    max_dim: usize,
) -> Result<AxiomVerdict> {
    let [bx, by, bz] = bases;
    for (name, map, src, dst) in [("f", f, bx, by), ("g", g, by, bz)] {
        let verdict = check_uniform_continuity(map, src, dst)?;
        if let Some(viol) = verdict.violation {
            return Err(Error::NotContinuous(format!(
                "{name} fails on codomain member {} (witnesses {:?})",
                viol.target_member, viol.witnesses
            )));
        }
    }
    let complex_of = |b: &SemiUniformBase| -> Result<SimplicialComplex> {
        Ok(vr_complex(&b.members()[b.minimum().ok_or(Error::NoMinimum)?], max_dim))
    };
    let (kx, ky, kz) = (complex_of(bx)?, complex_of(by)?, complex_of(bz)?);
    let fm = simplicial_map(f.to_vec(), &kx, &ky)?;
    let gm = simplicial_map(g.to_vec(), &ky, &kz)?;
    let gf = fm.then(&gm)?;

    let truncate = |m: InducedMapResult| InducedMapResult {
        degrees: m.degrees.into_iter().take(max_dim).collect(),
        coefficients: m.coefficients,
    };
    let lhs = truncate(induced_map(&gf, coeffs)?);
    let rhs = truncate(induced_map(&gm, coeffs)?.compose(&induced_map(&fm, coeffs)?)?);
    let mut v = AxiomVerdict::new(
        "functoriality",
        format!("{} → {} → {} points", bx.space().size(), by.space().size(), bz.space().size()),
    );
    let mut witness = serde_json::Map::new();
    if lhs != rhs {
        let unequal: Vec<usize> = (0..lhs.degrees.len()).filter(|&k| lhs.degrees.get(k) != rhs.degrees.get(k)).collect();
        witness.insert("composite_mismatch_degrees".into(), json!(unequal));
    }
    for (name, k) in [("X", &kx), ("Y", &ky), ("Z", &kz)] {
        let id = simplicial_map((0..k.space().size()).collect(), k, k)?;
        if !truncate(induced_map(&id, coeffs)?).is_identity() {
            witness.insert(format!("identity_{name}"), json!("not the identity"));
        }
    }
    v.notes.push(format!("compared degrees 0..{}", lhs.degrees.len()));
    if !witness.is_empty() {
        v = v.fail(Value::Object(witness));
    }
    Ok(v)
}
