use thiserror::Error;

use crate::diagram::Violation;
use crate::family::FamilyId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MutationError {
    #[error("vertex {0} is not part of the diagram")]
    UnknownVertex(usize),
    #[error("diagram is malformed; run validate() for details")]
    Malformed,
    #[error("weight product {product} at ({i}, {j}) is not a perfect square")]
    NotSquare { i: usize, j: usize, product: u128 },
    #[error("mutation produced a negative weight at ({i}, {j})")]
    NegativeWeight { i: usize, j: usize },
    #[error("weight overflow while mutating at ({i}, {j})")]
    Overflow { i: usize, j: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("diagram has {size} vertices, canonical labeling is limited to {limit}")]
    SizeLimitExceeded { size: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Mutation(#[from] MutationError),
    #[error("seed is not a valid connected diagram")]
    InvalidSeed,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HostError {
    #[error("{0} is assembled by gluing and has no host graph")]
    UnsupportedFamily(FamilyId),
    #[error("invalid parameters for {0}")]
    InvalidParams(FamilyId),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("rank {rank} is not valid for type {ty}")]
    InvalidRank { ty: String, rank: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("enumeration hit its limits before exhausting the class")]
    LimitExceeded,
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Mutation(#[from] MutationError),
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid document field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error("diagram is invalid: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Validation(Vec<Violation>),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
