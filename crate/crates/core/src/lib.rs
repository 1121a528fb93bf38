//! Exact algebra for equivariant curves: certified square classes, quaternion
//! symbols over rational function fields, trace forms of étale algebras,
//! finite subgroups of PGL2 with equivariant compressions, explicit curve
//! models, and polynomials with prescribed ramification.

pub mod arith;
pub mod brauer;
pub mod curves;
pub mod forms;
pub mod projective;
pub mod ramify;
