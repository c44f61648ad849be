use thiserror::Error;

/// Errors produced by graph ingestion and the algebraic routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("edge index {index} out of range (graph has {edges} edges)")]
    InvalidEdge { index: usize, edges: usize },

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph is not connected ({components} components)")]
    Disconnected { components: usize },

    #[error("{0}")]
    Domain(String),

    #[error("resource limit exceeded: {0}")]
    Resource(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
