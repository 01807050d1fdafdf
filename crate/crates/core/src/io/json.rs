//! JSON space documents, schema `"1"`. Vertices may be given by label or
//! by zero-based index.

use serde::{Deserialize, Serialize};

use super::{ClosureDocument, ComplexDocument, GraphDocument, ParseError, ParseErrorKind, SpaceDocument, SCHEMA_VERSION};
use crate::closure::{AdditiveClosure, Cover};
use crate::complex::Simplex;
use crate::error::Error;
use crate::relations::{FiniteSpace, IndexSet, SemiPseudometric};

#[derive(Serialize, Deserialize)]
struct Envelope {
    schema: String,
    #[serde(flatten)]
    body: Body,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum Body {
    Distance {
        labels: Vec<String>,
        distances: Vec<Vec<f64>>,
    },
    Graph {
        labels: Vec<String>,
        edges: Vec<(Vertex, Vertex)>,
        #[serde(default)]
        directed: bool,
    },
    Closure {
        labels: Vec<String>,
        neighborhoods: Vec<Vec<Vertex>>,
        #[serde(default)]
        covers: Vec<Vec<Vec<Vertex>>>,
    },
    Complex {
        labels: Vec<String>,
        simplices: Vec<Vec<Vertex>>,
    },
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Vertex {
    Index(usize),
    Label(String),
}

fn space_of(labels: Vec<String>) -> Result<FiniteSpace, ParseError> {
    for (k, l) in labels.iter().enumerate() {
        if labels[..k].contains(l) {
            return Err(ParseError::at_pointer(format!("/labels/{k}"), ParseErrorKind::DuplicateLabel(l.clone())));
        }
    }
    FiniteSpace::new(labels).map_err(|e| ParseError::at_pointer("/labels", ParseErrorKind::Invalid(e)))
}

fn resolve(space: &FiniteSpace, v: &Vertex, pointer: &str) -> Result<usize, ParseError> {
    match v {
        Vertex::Index(i) if *i < space.size() => Ok(*i),
        Vertex::Index(i) => Err(ParseError::at_pointer(pointer, ParseErrorKind::OutOfRange(i.to_string()))),
        Vertex::Label(l) => space
            .index_of(l)
            .ok_or_else(|| ParseError::at_pointer(pointer, ParseErrorKind::OutOfRange(format!("`{l}`")))),
    }
}

fn resolve_set(space: &FiniteSpace, vs: &[Vertex], pointer: &str) -> Result<IndexSet, ParseError> {
    vs.iter().enumerate().map(|(k, v)| resolve(space, v, &format!("{pointer}/{k}"))).collect()
}

pub(crate) fn parse(text: &str) -> Result<SpaceDocument, ParseError> {
    let env: Envelope = serde_json::from_str(text).map_err(|e| {
        ParseError::at(e.line().max(1), e.column().max(1), ParseErrorKind::Syntax(e.to_string()))
    })?;
    if env.schema != SCHEMA_VERSION {
        return Err(ParseError::at_pointer("/schema", ParseErrorKind::Schema(env.schema)));
    }
    match env.body {
        Body::Distance { labels, distances } => {
            let space = space_of(labels)?;
            let n = space.size();
            if distances.len() != n {
                return Err(ParseError::at_pointer(
                    "/distances",
                    ParseErrorKind::NotSquare { expected: n, found: distances.len() },
                ));
            }
            for (i, row) in distances.iter().enumerate() {
                let at = |j: usize| format!("/distances/{i}/{j}");
                if row.len() != n {
                    return Err(ParseError::at_pointer(
                        format!("/distances/{i}"),
                        ParseErrorKind::NotSquare { expected: n, found: row.len() },
                    ));
                }
                for (j, &v) in row.iter().enumerate() {
                    if !v.is_finite() || v < 0.0 {
                        return Err(ParseError::at_pointer(at(j), ParseErrorKind::InvalidDistance(v.to_string())));
                    }
                    if i == j && v != 0.0 {
                        return Err(ParseError::at_pointer(at(j), ParseErrorKind::NonzeroDiagonal(v)));
                    }
                    if j < i && distances[j][i] != v {
                        return Err(ParseError::at_pointer(
                            at(j),
                            ParseErrorKind::Asymmetric { value: v, transpose: distances[j][i] },
                        ));
                    }
                }
            }
            let rows = distances.into_iter().map(|r| r.into_iter().map(|v| v + 0.0).collect()).collect();
            SemiPseudometric::new(space, rows)
                .map(SpaceDocument::Distance)
                .map_err(|e| ParseError::at_pointer("/distances", ParseErrorKind::Invalid(e)))
        }
        Body::Graph { labels, edges, directed } => {
            let space = space_of(labels)?;
            let edges = edges
                .iter()
                .enumerate()
                .map(|(k, (a, b))| {
                    Ok((resolve(&space, a, &format!("/edges/{k}/0"))?, resolve(&space, b, &format!("/edges/{k}/1"))?))
                })
                .collect::<Result<_, ParseError>>()?;
            Ok(SpaceDocument::Graph(GraphDocument { space, edges, directed }))
        }
        Body::Closure { labels, neighborhoods, covers } => {
            let space = space_of(labels)?;
            let nbhd = neighborhoods
                .iter()
                .enumerate()
                .map(|(x, n)| resolve_set(&space, n, &format!("/neighborhoods/{x}")))
                .collect::<Result<Vec<_>, _>>()?;
            let closure = AdditiveClosure::new(space.clone(), nbhd).map_err(|e| {
                let pointer = match e {
                    Error::NotReflexive(x) => format!("/neighborhoods/{x}"),
                    _ => "/neighborhoods".into(),
                };
                ParseError::at_pointer(pointer, ParseErrorKind::Invalid(e))
            })?;
            let covers = covers
                .iter()
                .enumerate()
                .map(|(c, sets)| {
                    let sets = sets
                        .iter()
                        .enumerate()
                        .map(|(k, s)| resolve_set(&space, s, &format!("/covers/{c}/{k}")))
                        .collect::<Result<Vec<_>, _>>()?;
                    Cover::new(space.clone(), sets)
                        .map_err(|e| ParseError::at_pointer(format!("/covers/{c}"), ParseErrorKind::Invalid(e)))
                })
                .collect::<Result<_, _>>()?;
            Ok(SpaceDocument::Closure(ClosureDocument { closure, covers }))
        }
        Body::Complex { labels, simplices } => {
            let space = space_of(labels)?;
            let simplices = simplices
                .iter()
                .enumerate()
                .map(|(k, s)| {
                    let pointer = format!("/simplices/{k}");
                    let verts = resolve_set(&space, s, &pointer)?;
                    Simplex::new(verts.into_iter().collect())
                        .map_err(|e| ParseError::at_pointer(pointer, ParseErrorKind::Invalid(e)))
                })
                .collect::<Result<_, _>>()?;
            Ok(SpaceDocument::Complex(ComplexDocument { space, simplices }))
        }
    }
}

fn labels_of(space: &FiniteSpace) -> Vec<String> {
    space.labels().to_vec()
}

fn named(space: &FiniteSpace, set: impl IntoIterator<Item = usize>) -> Vec<Vertex> {
    set.into_iter().map(|i| Vertex::Label(space.label(i).to_owned())).collect()
}

pub(crate) fn serialize(doc: &SpaceDocument) -> String {
    let body = match doc {
        SpaceDocument::Distance(d) => Body::Distance { labels: labels_of(d.space()), distances: d.rows() },
        SpaceDocument::Graph(g) => Body::Graph {
            labels: labels_of(&g.space),
            edges: g
                .edges
                .iter()
                .map(|&(i, j)| (Vertex::Label(g.space.label(i).into()), Vertex::Label(g.space.label(j).into())))
                .collect(),
            directed: g.directed,
        },
        SpaceDocument::Closure(c) => {
            let space = c.closure.space();
            Body::Closure {
                labels: labels_of(space),
                neighborhoods: c.closure.neighborhoods().iter().map(|n| named(space, n.iter().copied())).collect(),
                covers: c
                    .covers
                    .iter()
                    .map(|cover| cover.sets().iter().map(|s| named(space, s.iter().copied())).collect())
                    .collect(),
            }
        }
        SpaceDocument::Complex(c) => Body::Complex {
            labels: labels_of(&c.space),
            simplices: c.simplices.iter().map(|s| named(&c.space, s.vertices().iter().copied())).collect(),
        },
    };
    let mut out = serde_json::to_string_pretty(&Envelope { schema: SCHEMA_VERSION.into(), body })
        .expect("documents serialize");
    out.push('\n');
    out
}
