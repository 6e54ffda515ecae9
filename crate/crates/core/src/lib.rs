//! Palette-index edge coloring.
//!
//! The palette of a vertex under a proper edge coloring is the set of colors
//! on its incident edges; the palette index of a graph is the least number of
//! distinct palettes over all proper edge colorings. This crate provides the
//! decompositions and explicit colorings that bound it for bipartite and
//! biregular families, grids and complete bipartite graphs, exact search for
//! small graphs, and a reproduction suite over all of them.

pub mod analysis;
pub mod coloring;
pub mod constructions;
pub mod decompose;
pub mod error;
pub mod exact;
pub mod graph;
pub mod io;
pub mod suite;

pub use analysis::{palette_summary, verify_proper, BoundReport, Palette, PaletteSummary};
pub use coloring::{Color, EdgeColoring};
pub use constructions::{Construction, ConstructionResult};
pub use error::{AnalysisError, ConstructionError, DecomposeError, ExactError, GraphError, ParseError};
pub use exact::{ExactOutcome, SearchLimits};
pub use graph::{Bipartition, BiregularProfile, EdgeId, Graph, Side, VertexId};
