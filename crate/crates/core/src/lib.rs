//! Deciding whether a graph can be turned into a path or a tree by at most
//! `k` edge contractions.

pub mod cvc;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod kernel;
pub mod oracle;
pub mod path;
pub mod reductions;
pub mod tree;
pub mod universal;
pub mod witness;

pub use error::{Error, Result};
pub use graph::{Color, Graph, TwoColoring, Vertex, VertexMapping};
pub use witness::{Mode, Target, Verdict, WitnessStructure};
