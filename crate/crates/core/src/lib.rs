//! Graphs represented by connected vertex subsets of subdivided multigraph
//! frameworks, with validators for proper and non-crossing families, width
//! certificates (thinness, proper thinness, mixed-thinness, twin-width) and
//! the constructive pipelines between them: non-crossing representations to
//! proper mixed-thin certificates, tree representations to thinness
//! orderings, properization of arbitrary representations, framework-derived
//! vertex orders, and a small first-order model checker for demos.

pub mod builder;
pub mod error;
pub mod fixtures;
pub mod fo;
pub mod framework;
pub mod graph;
pub mod json;
pub mod limits;
pub mod order;
pub mod patterns;
pub mod properize;
pub mod tree_thin;
pub mod twinwidth;
pub mod width;

pub use error::{Error, Result};
pub use framework::{FwVertex, HRepresentation, SubdivisionFramework};
pub use graph::{EdgeId, Multigraph, SimpleGraph, VertexId};
pub use limits::Limits;
pub use width::{MixedThinRepresentation, ThinRepresentation};
