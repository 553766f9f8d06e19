use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("{0} vertices requested; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("canonical forms are limited to {limit} vertices, got {n}")]
    CanonTooLarge { n: usize, limit: usize },
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("empty graph6 line")]
    Empty,
    #[error("graph6 header byte {0:#04x} is not a short-form vertex count")]
    BadHeader(u8),
    #[error("graph6 byte {0:#04x} outside the printable range 63..=126")]
    BadByte(u8),
    #[error("graph6 body has {got} bytes, expected {expected}")]
    Length { expected: usize, got: usize },
    #[error("graph6 padding bits are not zero")]
    Padding,
    #[error("graph6 short form holds at most 62 vertices, got {0}")]
    TooLarge(usize),
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error)]
pub enum ComplexError {
    #[error("{0} is not a face of the complex")]
    NotAFace(String),
    #[error("cannot parse symbol line {0:?}")]
    Parse(String),
    #[error("f-vector of length {len} does not fit dimension bound d = {d}")]
    InconsistentDimension { len: usize, d: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("block index {index} out of range ({count} blocks)")]
    BlockIndex { index: usize, count: usize },
    #[error("invalid chain specification: {0}")]
    Spec(String),
    #[error("not a chain of cycles: {0}")]
    NotAChain(String),
    #[error("helm graphs need k >= 3, got {0}")]
    HelmSize(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("the internal generator covers n <= {max}; pass a graph6 file for n = {n}")]
    GeneratorLimit { n: usize, max: usize },
    #[error("input graph {graph6} has {got} vertices, expected {expected}")]
    WrongOrder {
        graph6: String,
        got: usize,
        expected: usize,
    },
    #[error("theorem contradiction on {graph6}: {detail}")]
    Contradiction { graph6: String, detail: String },
    #[error("checkpoint does not match this run: {0}")]
    Checkpoint(String),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
