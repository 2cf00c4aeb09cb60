use thiserror::Error;

use crate::polynomial::Variable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable mismatch: {left:?} vs {right:?}")]
    VariableMismatch { left: Variable, right: Variable },
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("exponent {0} (quarter units) is not a whole power of t")]
    NonIntegralExponent(i64),
    #[error("polynomial parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("empty diagram (use Diagram::unknot for the crossingless unknot)")]
    Empty,
    #[error("malformed PD text at `{0}`")]
    Malformed(String),
    #[error("edge label {label} appears {count} times (expected exactly twice)")]
    EdgeMultiplicity { label: u32, count: usize },
    #[error("edge labels must be dense 1..={expected}; found {found}")]
    SparseLabels { expected: u32, found: u32 },
    #[error("universe is disconnected")]
    Disconnected,
    #[error("Euler check failed: {faces} faces for {crossings} crossings (expected {expected})")]
    NonPlanar { crossings: usize, faces: usize, expected: usize },
    #[error("operation requires a single-component diagram, found {0} components")]
    NotAKnot(usize),
    #[error("edge {0} is not neutral")]
    SignedEdge(u32),
    #[error("edge {0} does not exist")]
    UnknownEdge(u32),
    #[error("diagram is not alternating")]
    NotAlternating,
    #[error("no Reidemeister move site: {0}")]
    NoMoveSite(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BracketError {
    #[error("{crossings} crossings exceeds the state-sum limit of {limit}")]
    LimitExceeded { crossings: usize, limit: usize },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeletonError {
    #[error("skeleton signs do not alternate around the vertex in face {0}")]
    SignAlternation(usize),
    #[error("diagram is alternating; the skeleton is empty")]
    Alternating,
    #[error(transparent)]
    Bracket(#[from] BracketError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{0} describes a link with more than one component")]
    NotAKnot(String),
    #[error("invalid family parameters: {0}")]
    InvalidSpec(String),
    #[error("gcd({n}, {m}) = {gcd}, cable would not be a knot")]
    NotCoprime { n: usize, m: i64, gcd: i64 },
    #[error("companion has no neutral edge for the clasp")]
    NoNeutralEdge,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("line {line}: expected `<name> : <data>`")]
    Syntax { line: usize },
    #[error("line {line} ({name}): {source}")]
    Diagram { line: usize, name: String, source: DiagramError },
    #[error("line {line} ({name}): {source}")]
    Poly { line: usize, name: String, source: PolyError },
    #[error("duplicate name {0}")]
    Duplicate(String),
}
