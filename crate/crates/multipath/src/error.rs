//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {edge} is a self-loop")]
    SelfLoop { edge: usize },
    #[error("edge {edge} duplicates an earlier edge (simple mode)")]
    DuplicateEdge { edge: usize },
    #[error("edge {edge} has an endpoint out of range")]
    VertexOutOfRange { edge: usize },
    #[error("graph has {edges} edges, more than the supported maximum of {max}")]
    TooManyEdges { edges: usize, max: usize },
    #[error("bad family parameters: {0}")]
    BadParameters(String),
    #[error("gluing map is not a regular morphism: {0}")]
    NotRegularMorphism(String),
    #[error("path poset would exceed the size cap ({cap} multipaths)")]
    SizeLimitExceeded { cap: usize },
    #[error("sign assignment is missing covers: expected {expected}, got {got}")]
    MissingCover { expected: usize, got: usize },
    #[error("d^{degree+1} ∘ d^{degree} is nonzero; not a cochain complex")]
    NotAComplex { degree: usize },
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("algebra carries no grading")]
    UngradedAlgebra,
    #[error("vertex {vertex} is not the target or source of at least two edges")]
    NotDecomposable { vertex: usize },
    #[error("vertex {vertex} is not univalent")]
    NotUnivalent { vertex: usize },
    #[error("not an oriented linear graph: {0}")]
    NotLinear(String),
    #[error("leaf configuration mismatch: {0}")]
    ConfigurationMismatch(String),
    #[error("characteristic {p} divides a denominator in the complex")]
    BadCharacteristic { p: u64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
