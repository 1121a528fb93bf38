//! Trace forms of étale algebras, symmetric diagonalization, discriminants,
//! the Stiefel-Whitney class `w2` and Serre's invariant.

pub mod delta;
pub mod diag;
pub mod etale;
pub mod invariant;
pub mod symbol_algebra;

use thiserror::Error;

use crate::arith::ArithError;
use crate::brauer::BrauerError;

pub use delta::{klein_delta, z2_delta};
pub use diag::{diagonalize, diagonalize_in_order, Diagonalization, QuadForm};
pub use etale::EtaleAlgebra;
pub use invariant::{
    compare_invariants, concrete_class, formal_image, same_square_class, serre_invariant, w2, InvariantComparison,
    SerreData, SquareClass,
};
pub use symbol_algebra::{etale_from_symbol, DiscVariant, SymbolAlgebra};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FormsError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Brauer(#[from] BrauerError),
    #[error("polynomial is not separable: {0}")]
    NotSeparable(String),
    #[error("singular Gram matrix")]
    Singular,
    #[error("degenerate parameters")]
    Degenerate,
    #[error("{0}")]
    Invalid(String),
}
