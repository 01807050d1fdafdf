//! Input documents, result documents and their text formats.
//!
//! Three space formats are read: a CSV distance matrix, a whitespace edge
//! list, and JSON documents for every kind of space. Diagnostics carry a
//! line and column (or a JSON pointer) and a category.

mod csv_dist;
mod edges;
mod json;
mod result;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::closure::{AdditiveClosure, Cover};
use crate::complex::{Simplex, SimplicialComplex};
use crate::error::Error;
use crate::relations::{graph_relation, FiniteSpace, Relation, SemiPseudometric};

pub use result::{parse_result_document, GeneratorTerm, ResultDocument, TorsionEntry, SCHEMA_VERSION};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpaceFormat {
    CsvDist,
    EdgeList,
    Json,
}

impl FromStr for SpaceFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "csv-dist" | "csv" => Ok(Self::CsvDist),
            "edge-list" | "edges" => Ok(Self::EdgeList),
            "json" => Ok(Self::Json),
            _ => Err(Error::InvalidParameter(format!("unknown format `{s}` (use csv-dist, edge-list or json)"))),
        }
    }
}

impl SpaceFormat {
    /// Guesses the format from a file extension.
    pub fn from_extension(path: &str) -> Option<Self> {
        let ext = path.rsplit_once('.')?.1.to_ascii_lowercase();
        match ext.as_str() {
            "csv" => Some(Self::CsvDist),
            "edges" | "txt" | "el" => Some(Self::EdgeList),
            "json" => Some(Self::Json),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GraphDocument {
    pub space: FiniteSpace,
    pub edges: Vec<(usize, usize)>,
    pub directed: bool,
}

impl GraphDocument {
    /// `E ∪ Δ`, symmetrized unless the graph is directed.
    pub fn relation(&self) -> Relation {
        graph_relation(&self.edges, self.space.clone(), self.directed).expect("edges are range-checked at parse")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClosureDocument {
    pub closure: AdditiveClosure,
    pub covers: Vec<Cover>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComplexDocument {
    pub space: FiniteSpace,
    /// As listed in the input; faces are implied.
    pub simplices: Vec<Simplex>,
}

impl ComplexDocument {
    pub fn complex(&self, max_dim: usize) -> SimplicialComplex {
        SimplicialComplex::from_simplices(self.space.clone(), self.simplices.iter().cloned(), max_dim)
            .expect("vertices are range-checked at parse")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SpaceDocument {
    Distance(SemiPseudometric),
    Graph(GraphDocument),
    Closure(ClosureDocument),
    Complex(ComplexDocument),
}

impl SpaceDocument {
    pub fn space(&self) -> &FiniteSpace {
        match self {
            Self::Distance(d) => d.space(),
            Self::Graph(g) => &g.space,
            Self::Closure(c) => c.closure.space(),
            Self::Complex(c) => &c.space,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::Distance(_) => "distance",
            Self::Graph(_) => "graph",
            Self::Closure(_) => "closure",
            Self::Complex(_) => "complex",
        }
    }
}

/// Where a diagnostic points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Location {
    /// 1-based; for CSV the column is the field number.
    Text { line: usize, column: usize },
    /// A JSON pointer into the document.
    Pointer(String),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Text { line, column } => write!(f, "line {line}, column {column}"),
            Self::Pointer(p) if p.is_empty() => f.write_str("document root"),
            Self::Pointer(p) => write!(f, "at {p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("asymmetric matrix: {value} here but {transpose} at the transposed entry")]
    Asymmetric { value: f64, transpose: f64 },
    #[error("nonzero diagonal entry {0}")]
    NonzeroDiagonal(f64),
    #[error("invalid distance `{0}`: expected a finite non-negative decimal")]
    InvalidDistance(String),
    #[error("out-of-range vertex {0}")]
    OutOfRange(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("matrix is not square: expected {expected} entries, found {found}")]
    NotSquare { expected: usize, found: usize },
    #[error("unsupported schema version `{0}`")]
    Schema(String),
    #[error(transparent)]
    Invalid(Error),
}

impl ParseErrorKind {
    /// A stable category name for diagnostics and tests.
    pub fn category(&self) -> &'static str {
        match self {
            Self::Syntax(_) => "syntax",
            Self::Asymmetric { .. } => "asymmetric",
            Self::NonzeroDiagonal(_) => "nonzero-diagonal",
            Self::InvalidDistance(_) => "invalid-distance",
            Self::OutOfRange(_) => "out-of-range",
            Self::DuplicateLabel(_) => "duplicate-label",
            Self::NotSquare { .. } => "not-square",
            Self::Schema(_) => "schema",
            Self::Invalid(_) => "invalid",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Error)]
#[error("{location}: {kind}")]
pub struct ParseError {
    pub location: Location,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub(crate) fn at(line: usize, column: usize, kind: ParseErrorKind) -> Self {
        Self { location: Location::Text { line, column }, kind }
    }

    pub(crate) fn at_pointer(pointer: impl Into<String>, kind: ParseErrorKind) -> Self {
        Self { location: Location::Pointer(pointer.into()), kind }
    }

    pub fn category(&self) -> &'static str {
        self.kind.category()
    }
}

pub fn parse_space(text: &str, format: SpaceFormat) -> Result<SpaceDocument, ParseError> {
    match format {
        SpaceFormat::CsvDist => csv_dist::parse(text).map(SpaceDocument::Distance),
        SpaceFormat::EdgeList => edges::parse(text).map(SpaceDocument::Graph),
        SpaceFormat::Json => json::parse(text),
    }
}

/// Writes `doc` in `format`. Only distance documents have a CSV form and
/// only graphs an edge-list form.
pub fn serialize_space(doc: &SpaceDocument, format: SpaceFormat) -> Result<String, Error> {
    match (format, doc) {
        (SpaceFormat::Json, _) => Ok(json::serialize(doc)),
        (SpaceFormat::CsvDist, SpaceDocument::Distance(d)) => Ok(csv_dist::serialize(d)),
        (SpaceFormat::EdgeList, SpaceDocument::Graph(g)) => edges::serialize(g),
        _ => Err(Error::InvalidParameter(format!("a {} document has no {format:?} form", doc.kind()))),
    }
}

/// `LO:HI:STEP` as the decimal scales `LO, LO+STEP, …, ≤ HI`. The values
/// are the ones the decimal strings would parse to, so `0.1:0.3:0.1`
/// yields exactly `0.1, 0.2, 0.3`.
pub fn parse_scale_range(s: &str) -> Result<Vec<(String, f64)>, Error> {
    const MAX_STEPS: i128 = 100_000;
    let bad = |why: &str| Error::InvalidParameter(format!("scale range `{s}`: {why}"));
    let parts: Vec<&str> = s.split(':').map(str::trim).collect();
    let [lo, hi, step] = parts[..] else { return Err(bad("expected LO:HI:STEP")) };
    let places = [lo, hi, step].iter().map(|p| p.split_once('.').map_or(0, |(_, f)| f.len())).max().unwrap_or(0);
    if places > 12 {
        return Err(bad("too many decimal places"));
    }
    let fixed = |p: &str| -> Result<i128, Error> {
        let valid = !p.is_empty()
            && p.chars().all(|c| c.is_ascii_digit() || c == '.')
            && p.matches('.').count() <= 1
            && p.chars().any(|c| c.is_ascii_digit());
        if !valid {
            return Err(bad("bounds and step must be plain non-negative decimals"));
        }
        let (int, frac) = p.split_once('.').unwrap_or((p, ""));
        let digits = format!("{int}{frac:0<places$}");
        digits.parse::<i128>().map_err(|_| bad("number too large"))
    };
    let (lo, hi, step) = (fixed(lo)?, fixed(hi)?, fixed(step)?);
    if step == 0 {
        return Err(bad("step must be positive"));
    }
    if hi < lo {
        return Err(bad("upper bound below lower bound"));
    }
    if (hi - lo) / step >= MAX_STEPS {
        return Err(bad("too many scales"));
    }
    let scale = 10i128.pow(places as u32);
    let mut out = Vec::new();
    let mut v = lo;
    while v <= hi {
        let text = if places == 0 {
            v.to_string()
        } else {
            format!("{}.{:0places$}", v / scale, v % scale)
        };
        let value = text.parse::<f64>().map_err(|_| bad("unrepresentable scale"))?;
        out.push((text, value));
        v += step;
    }
    Ok(out)
}
