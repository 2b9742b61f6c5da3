pub mod completion;
pub mod cycles;
pub mod deletion;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod obstructions;
pub mod oracle;
pub mod props;
pub mod record;
pub mod recognition;
pub mod search;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{Edge, EdgeSet, Graph, VertexId, VertexSet};
