use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error("relation `{relation}` used with arity {found}, expected {expected}")]
    ArityMismatch {
        relation: String,
        expected: usize,
        found: usize,
    },
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex `{0}` is not covered by any edge")]
    UncoverableVertex(String),
    #[error("hypergraph has an empty edge `{0}`")]
    EmptyEdge(String),
    #[error("not a homomorphism: edge `{0}` has no image edge")]
    NotAHomomorphism(String),
    #[error("hypergraph is not reduced: {0}")]
    NotReduced(String),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("not a generalized hypertree decomposition: {0}")]
    InvalidGhd(String),
    #[error("{kind} limited to {limit} vertices, got {vertices}")]
    SizeLimit {
        kind: &'static str,
        vertices: usize,
        limit: usize,
    },
    #[error("relation name `{0}` already exists")]
    NameCollision(String),
    #[error("`{0}` is not an edge of the hypergraph")]
    NotAnEdge(String),
    #[error("hypergraph mismatch: {0}")]
    HypergraphMismatch(String),
    #[error("invalid mapping: {0}")]
    InvalidMapping(String),
    #[error("empty union of conjunctive queries")]
    EmptyUcq,
}
