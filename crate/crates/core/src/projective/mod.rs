//! Finite group actions on the projective line: `PGL2` matrices, binary forms
//! and self-maps, the embedding catalog, equivariance and quotient maps.

pub mod catalog;
pub mod map;
pub mod matrix;
pub mod quotient;

use thiserror::Error;

use crate::arith::ArithError;
use crate::brauer::BrauerError;

pub use catalog::{
    alpha_in, embedding_catalog, equivariant_check, find_lambda, omega_in, roots_in, verify_relations, EmbeddingInstance,
    EmbeddingSpec, GroupId, GroupPresentation, RelationCheck,
};
pub use map::{BinaryForm, ProjectiveMap};
pub use matrix::{closure, ProjMatrix};
pub use quotient::{chart_change, conjugated_compression, invariant_quotient_map, is_invariant, Compression};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ProjectiveError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Brauer(#[from] BrauerError),
    #[error("singular matrix")]
    Singular,
    #[error("{0}")]
    Missing(String),
    #[error("(a,b) not split: {0}")]
    NotSplit(String),
    #[error("no lambda with lambda^2 - a in the class of b within the search bounds")]
    NoLambda,
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("internal check failed: {0}")]
    Internal(String),
    #[error("{0}")]
    Invalid(String),
}
