use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {edge}: endpoint {vertex} out of range for {vertex_count} vertices")]
    EndpointOutOfRange {
        edge: EdgeId,
        vertex: VertexId,
        vertex_count: usize,
    },
    #[error("edge {edge}: loop at vertex {vertex} not allowed")]
    ForbiddenLoop { edge: EdgeId, vertex: VertexId },
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no simple graph found after {attempts} attempts")]
    GenerationFailed { attempts: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("vertex {vertex} has odd degree {degree}")]
    OddDegree { vertex: VertexId, degree: usize },
    #[error("graph is not {expected}-regular")]
    NotRegular { expected: String },
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("vertex {vertex} has degree {degree}, not divisible by {target}")]
    Indivisible {
        vertex: VertexId,
        degree: usize,
        target: usize,
    },
    #[error("component containing vertex {vertex} has an odd number of edges")]
    OddComponent { vertex: VertexId },
    #[error("matching does not saturate vertex {vertex}")]
    Unsaturated { vertex: VertexId },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("input graph is not bipartite")]
    NotBipartite,
    #[error("vertex {vertex} has odd degree")]
    OddDegree { vertex: VertexId },
    #[error("vertex {vertex} is isolated")]
    IsolatedVertex { vertex: VertexId },
    #[error("expected {expected}, found {found}")]
    ProfileMismatch { expected: String, found: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("interval coloring search gave up after {nodes} node expansions")]
    SearchBudgetExhausted { nodes: u64 },
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Decompose(#[from] DecomposeError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },
    #[error("graph has loops")]
    Loops,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("edge {edge} has no color")]
    PartialColoring { edge: EdgeId },
    #[error("coloring is not proper at vertex {vertex}")]
    ImproperColoring { vertex: VertexId },
    #[error("coloring has {found} entries but the graph has {expected} edges")]
    LengthMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} is isolated")]
    IsolatedVertex { vertex: VertexId },
    #[error("graph has loops or parallel edges")]
    NotSimple,
    #[error("palette search budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },
    #[error("certificate extraction failed: {0}")]
    Certificate(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: endpoint {vertex} out of range 1..={vertex_count}")]
    Range {
        line: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("header declares {declared} entries but {found} were given")]
    CountMismatch { declared: usize, found: usize },
    #[error("missing header line")]
    MissingHeader,
}
