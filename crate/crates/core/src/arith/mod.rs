//! Exact arithmetic: rationals, polynomials, rational functions, number fields,
//! quadratic extensions, prime fields and certified square testing.

pub mod absolute;
pub mod crt;
pub mod cyclotomic;
pub mod factor;
pub mod field;
pub mod linalg;
pub mod modp;
pub mod numfield;
pub mod parse;
pub mod poly;
pub mod quadext;
pub mod ratfunc;
pub mod rational;
pub mod square;
pub mod tower;

use thiserror::Error;

pub use field::Field;
pub use numfield::{NfElem, NumberField};
pub use poly::Poly;
pub use quadext::{QuadElem, QuadField};
pub use ratfunc::RatFunc;
pub use rational::Rational;
pub use square::{is_square_in_field, NonSquareWitness, SquareConfig, SquareOracle, SquareVerdict};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("polynomial is reducible: {0}")]
    Reducible(String),
    #[error("extension parameter is a square in the base field: {0}")]
    SquareD(String),
    #[error("moduli are not coprime: {0} and {1}")]
    NotCoprime(String, String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}
