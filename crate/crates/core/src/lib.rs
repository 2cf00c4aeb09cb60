//! Knot diagrams, Kauffman brackets and extreme-coefficient bounds.

pub mod bracket;
pub mod corpus;
pub mod diagram;
pub mod error;
pub mod families;
pub mod graph;
pub mod harness;
pub mod polynomial;
pub mod skeleton;
mod unionfind;

pub use diagram::{parse_pd, Diagram, EdgeId, EdgeSign, Orientation};
pub use error::{BracketError, CorpusError, DiagramError, FamilyError, PolyError, SkeletonError};
pub use polynomial::{LaurentPoly, Variable};
