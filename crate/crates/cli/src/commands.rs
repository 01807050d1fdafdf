//! The `homology`, `graph`, `closure` and `sweep` commands.

use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;
use serde_json::{json, Value};
use vrhom::closure::{ii_relation, vietoris_relation};
use vrhom::complex::{nerve_of_cover, pair_complex, vr_complex, ComplexPair};
use vrhom::homology::{cohomology, homology, homology_with_generators, HomologyResult};
use vrhom::io::{parse_scale_range, parse_space, ResultDocument, SpaceDocument, SpaceFormat};
use vrhom::relations::{metric_relation, FiniteSpace, IndexSet, Relation, SemiUniformBase};
use vrhom::semiuniform::limit_homology;

use crate::{ClosureArgs, CoverRelation, GraphArgs, HomologyArgs, Input, InputError, Outcome, SweepArgs};

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn load(path: &Path, format: Option<&str>, default: Option<SpaceFormat>) -> Result<SpaceDocument, InputError> {
    let format = match format {
        Some(f) => f.parse()?,
        None => SpaceFormat::from_extension(&path.to_string_lossy()).or(default).ok_or_else(|| {
            InputError(format!("{}: cannot tell the format from the extension; pass --format", path.display()))
        })?,
    };
    let text = read(path)?;
    parse_space(&text, format).map_err(|e| InputError(format!("{}: {e} [{}]", path.display(), e.category())))
}

fn load_input(input: &Input) -> Result<(String, SpaceDocument), InputError> {
    match (&input.dist, &input.space) {
        (Some(p), _) => Ok((p.display().to_string(), load(p, Some(input.format.as_deref().unwrap_or("csv-dist")), None)?)),
        (None, Some(p)) => Ok((p.display().to_string(), load(p, input.format.as_deref(), None)?)),
        (None, None) => Err(InputError("an input file is required (--dist or --space)".into())),
    }
}

fn parse_subset(space: &FiniteSpace, s: &str) -> Result<IndexSet, InputError> {
    let set: IndexSet = s
        .split(',')
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| space.index_of(l).ok_or_else(|| InputError(format!("--subset: unknown point `{l}`"))))
        .collect::<Result<_, _>>()?;
    if set.is_empty() {
        return Err(InputError("--subset must name at least one point".into()));
    }
    Ok(set)
}

fn pair_of(u: &Relation, subset: Option<&IndexSet>, max_dim: usize) -> Result<ComplexPair, InputError> {
    Ok(match subset {
        Some(a) => pair_complex(u, a, max_dim)?,
        None => ComplexPair::absolute(vr_complex(u, max_dim)),
    })
}

fn simplex_counts(pair: &ComplexPair) -> Value {
    let total = pair.total();
    json!((0..=total.max_dim()).map(|k| total.count(k)).collect::<Vec<_>>())
}

pub(crate) fn homology_cmd(a: HomologyArgs) -> Result<Outcome, InputError> {
    let (path, doc) = load_input(&a.input)?;
    let k = a.algebra.max_dim as usize;
    let coeffs = a.algebra.coeffs;
    let space = doc.space().clone();
    let subset = a.subset.as_deref().map(|s| parse_subset(&space, s)).transpose()?;
    if a.reduced && subset.is_some() {
        return Err(InputError("--reduced applies to absolute homology only".into()));
    }
    if a.scale.is_some() && !matches!(doc, SpaceDocument::Distance(_)) {
        return Err(InputError(format!("--scale applies to distance matrices, not {} documents", doc.kind())));
    }
    let pair = match &doc {
        SpaceDocument::Distance(d) => {
            let q = a.scale.ok_or_else(|| InputError("--scale is required for a distance matrix".into()))?;
            pair_of(&metric_relation(d, q, a.mode.into())?, subset.as_ref(), k)?
        }
        SpaceDocument::Graph(g) => pair_of(&g.relation(), subset.as_ref(), k)?,
        SpaceDocument::Complex(c) => {
            let total = c.complex(k);
            match &subset {
                Some(s) => {
                    let sub = total.induced(s);
                    ComplexPair::new(total, sub)?
                }
                None => ComplexPair::absolute(total),
            }
        }
        SpaceDocument::Closure(_) => {
            return Err(InputError("closure documents are handled by `vrhom closure`".into()));
        }
    };
    let h = if a.generators {
        homology_with_generators(&pair, coeffs, a.reduced)?
    } else {
        homology(&pair, coeffs, a.reduced)?
    };
    let mut out = ResultDocument::new("homology").with_homology(&h, &space, k);
    let r = &mut out.request;
    r.insert("input".into(), json!(path));
    r.insert("kind".into(), json!(doc.kind()));
    r.insert("scale".into(), json!(a.scale));
    r.insert("mode".into(), json!(format!("{:?}", a.mode).to_lowercase()));
    r.insert("max_dim".into(), json!(k));
    r.insert("subset".into(), json!(subset.as_ref().map(|s| labels(&space, s))));
    r.insert("reduced".into(), json!(a.reduced));
    r.insert("generators".into(), json!(a.generators));
    out.details.insert("simplices".into(), simplex_counts(&pair));
    if a.cohomology {
        let c = cohomology(&pair, coeffs)?;
        out.details.insert("cohomology_betti".into(), json!(c.betti().into_iter().take(k).collect::<Vec<_>>()));
    }
    Ok(Outcome::Done(out.to_json()))
}

fn labels(space: &FiniteSpace, s: &IndexSet) -> Vec<String> {
    s.iter().map(|&i| space.label(i).to_owned()).collect()
}

pub(crate) fn graph(a: GraphArgs) -> Result<Outcome, InputError> {
    let doc = load(&a.edges, a.format.as_deref(), Some(SpaceFormat::EdgeList))?;
    let SpaceDocument::Graph(g) = doc else {
        return Err(InputError(format!("expected a graph, found a {} document", doc.kind())));
    };
    let k = a.algebra.max_dim as usize;
    let coeffs = a.algebra.coeffs;
    let u = g.relation();
    let report = limit_homology(&SemiUniformBase::single(u.clone())?, None, coeffs, k)?;
    let h = if a.generators {
        homology_with_generators(&ComplexPair::absolute(vr_complex(&u, k)), coeffs, false)?
    } else {
        report.homology.clone()
    };
    let mut out = ResultDocument::new("graph").with_homology(&h, &g.space, k);
    out.request.insert("input".into(), json!(a.edges.display().to_string()));
    out.request.insert("max_dim".into(), json!(k));
    out.request.insert("generators".into(), json!(a.generators));
    out.details.insert("directed".into(), json!(g.directed));
    out.details.insert("edges".into(), json!(g.edges.len()));
    out.details.insert("stable".into(), json!(report.is_stable()));
    Ok(Outcome::Done(out.to_json()))
}

pub(crate) fn closure(a: ClosureArgs) -> Result<Outcome, InputError> {
    let doc = load(&a.space, Some("json"), None)?;
    let SpaceDocument::Closure(c) = doc else {
        return Err(InputError(format!("expected a closure document, found a {} document", doc.kind())));
    };
    let cover = c.covers.get(a.cover).ok_or_else(|| {
        InputError(format!("--cover {} out of range; the document has {} covers", a.cover, c.covers.len()))
    })?;
    let k = a.algebra.max_dim as usize;
    let coeffs = a.algebra.coeffs;
    let u = match a.relation {
        CoverRelation::Vietoris => vietoris_relation(cover),
        CoverRelation::Ii => ii_relation(&c.closure, cover)?,
    };
    let h = homology(&vr_complex(&u, k), coeffs, false)?;
    let space = c.closure.space();
    let mut out = ResultDocument::new("closure").with_homology(&h, space, k);
    out.request.insert("input".into(), json!(a.space.display().to_string()));
    out.request.insert("cover".into(), json!(a.cover));
    out.request.insert("relation".into(), json!(format!("{:?}", a.relation).to_lowercase()));
    out.request.insert("max_dim".into(), json!(k));
    let interior = c.closure.is_interior_cover(cover)?;
    out.details.insert("interior_cover".into(), json!(interior.interior_cover));
    out.details.insert("relation_pairs".into(), json!(u.len()));
    let nerve = homology(&nerve_of_cover(cover, k)?, coeffs, false)?;
    out.details.insert("nerve_betti".into(), json!(nerve.betti().into_iter().take(k).collect::<Vec<_>>()));
    Ok(Outcome::Done(out.to_json()))
}

fn torsion_cell(h: &HomologyResult, dims: usize) -> String {
    let parts: Vec<String> = h
        .groups
        .iter()
        .take(dims)
        .filter(|g| !g.torsion.is_empty())
        .map(|g| format!("{}:{}", g.dim, g.torsion.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    if parts.is_empty() {
        "-".into()
    } else {
        parts.join(";")
    }
}

pub(crate) fn sweep(a: SweepArgs) -> Result<Outcome, InputError> {
    let (_, doc) = load_input(&a.input)?;
    let SpaceDocument::Distance(d) = doc else {
        return Err(InputError(format!("sweep needs a distance matrix, found a {} document", doc.kind())));
    };
    let scales = parse_scale_range(&a.scales)?;
    let k = a.algebra.max_dim as usize;
    let coeffs = a.algebra.coeffs;
    let mode = a.mode.into();
    let rows: Vec<(String, HomologyResult)> = scales
        .par_iter()
        .map(|(label, q)| {
            let u = metric_relation(&d, *q, mode)?;
            Ok((label.clone(), homology(&vr_complex(&u, k), coeffs, false)?))
        })
        .collect::<Result<_, vrhom::Error>>()?;
    let mut text = String::from("scale");
    for i in 0..k {
        write!(text, "\tb{i}").unwrap();
    }
    text.push_str("\ttorsion\n");
    for (label, h) in &rows {
        text.push_str(label);
        for b in h.betti().iter().take(k) {
            write!(text, "\t{b}").unwrap();
        }
        writeln!(text, "\t{}", torsion_cell(h, k)).unwrap();
    }
    Ok(Outcome::Done(text))
}
