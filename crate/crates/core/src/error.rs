use thiserror::Error;

/// Errors produced by instance handling and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("expected {expected} layers, found {found}")]
    LayerCount { expected: usize, found: usize },
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("layer {layer} is not a unit interval layer: {reason}")]
    UnitViolated { layer: usize, reason: String },
    #[error("delta {delta} outside [1, {tau}]")]
    DeltaOutOfRange { delta: usize, tau: usize },
    #[error("layer index {index} outside [1, {tau}]")]
    LayerOutOfRange { index: usize, tau: usize },
    #[error("vertex count mismatch: {left} vs {right}")]
    VertexCountMismatch { left: usize, right: usize },
    #[error("negative weight on vertex {0}")]
    NegativeWeight(usize),
    #[error("interval of vertex {vertex} has left endpoint above right endpoint")]
    InvertedInterval { vertex: usize },
    #[error("layer {0} is not an interval graph")]
    NotInterval(usize),
    #[error("instance is not a unit interval instance")]
    NotUnit,
    #[error("ordering incompatible: vertices {u} and {v} violate agreement in layer {layer}")]
    OrderingIncompatible { layer: usize, u: usize, v: usize },
    #[error("ordering does not cover the vertex set ({expected} vertices, got {found})")]
    OrderingSize { expected: usize, found: usize },
    #[error("interval models are not normalized to a common ordering (vertex {0})")]
    NotNormalized(usize),
    #[error("no order preserving deletion set within budget {0}")]
    ExceedsBudget(usize),
    #[error("instance size {n} exceeds the oracle limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("`{0}` is not a permutation of the common alphabet")]
    NotPermutation(String),
    #[error("the given set is not an order preserving vertex deletion set")]
    NotOpvdSet,
    #[error("the instance is not order preserving")]
    NotOrderPreserving,
}

pub type Result<T> = std::result::Result<T, Error>;
