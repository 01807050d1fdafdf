use std::collections::BTreeSet;

use thiserror::Error;

/// Errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("point index {index} out of range for a space of {size} points")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("operands live on different point sets")]
    SpaceMismatch,

    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),

    #[error("a finite space needs at least one point")]
    EmptySpace,

    #[error("subset must be non-empty")]
    EmptySubset,

    #[error("distance table is not square: expected {expected} entries in row {row}, found {found}")]
    NotSquare { row: usize, expected: usize, found: usize },

    #[error("distance table has nonzero diagonal entry {value} at point {index}")]
    NonzeroDiagonal { index: usize, value: f64 },

    #[error("distance table is asymmetric at ({i}, {j})")]
    Asymmetric { i: usize, j: usize },

    #[error("distance ({i}, {j}) = {value} is negative or not a number")]
    InvalidDistance { i: usize, j: usize, value: f64 },

    #[error("scale parameter {0} must be a non-negative number")]
    NegativeScale(f64),

    #[error("scale offsets must be a non-empty list of positive numbers")]
    InvalidDeltas,

    #[error("relation is not symmetric: ({i}, {j}) present without ({j}, {i}); use the directed complex or take the symmetric part")]
    NotSymmetric { i: usize, j: usize },

    #[error("base member {member} does not contain the diagonal")]
    MissingDiagonal { member: usize },

    #[error("base member {member}: its inverse contains no member of the base")]
    InverseAxiom { member: usize },

    #[error("a base needs at least one member")]
    EmptyBase,

    #[error("neighborhood of point {0} does not contain the point itself")]
    NotReflexive(usize),

    #[error("sets do not cover the space; missing points {missing:?}")]
    NotACover { missing: BTreeSet<usize> },

    #[error("not an interior cover; points outside every interior: {uncovered:?}")]
    NotInteriorCover { uncovered: BTreeSet<usize> },

    #[error("cover member {0} is empty")]
    EmptyCoverSet(usize),

    #[error("vertex map is not simplicial: image of {simplex:?} is {image:?}, which is not a simplex of the codomain")]
    NotSimplicial { simplex: Vec<usize>, image: Vec<usize> },

    #[error("vertex map sends subcomplex simplex {simplex:?} outside the codomain subcomplex")]
    PairNotPreserved { simplex: Vec<usize> },

    #[error("vertex map has {found} entries but the domain has {expected} points")]
    MapArity { expected: usize, found: usize },

    #[error("maps have different domains or codomains")]
    MapMismatch,

    #[error("simplex {0:?} of the subcomplex is missing from the total complex")]
    NotSubcomplex(Vec<usize>),

    #[error("coefficient field required; integer coefficients are not supported here")]
    FieldRequired,

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("base has no inclusion-minimum member; limit not evaluated")]
    NoMinimum,

    #[error("excision hypothesis fails: {0}")]
    ExcisionHypothesis(String),

    #[error("B must be a subset of A (point {0} is in B but not in A)")]
    NotNested(usize),

    #[error("map is not uniformly continuous: {0}")]
    NotContinuous(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
