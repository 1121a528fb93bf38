//! Explicit curves with prescribed group actions: hyperelliptic models with
//! cyclic and dihedral symmetry, Klein curves as intersections of two
//! quadrics with a blow-up chart, and two invariant-map computations (an
//! octahedral quadric and an `A4`-invariant map on an elliptic curve).

pub mod dihedral;
pub mod elliptic;
pub mod hyperelliptic;
pub mod klein;
pub mod mpoly;
pub mod octahedral;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::arith::{ArithError, Field, Poly};
use crate::brauer::BrauerError;
use crate::forms::FormsError;
use crate::projective::ProjectiveError;

pub use dihedral::{chebyshev, chebyshev_identity, even_dihedral_curve, EvenDihedralCurve, XI_RESCALE_BOUND};
pub use elliptic::{a4_elliptic_computation, EllipticReport};
pub use hyperelliptic::{even_cyclic_curve, first_admissible_a, ActionMap, EvenCyclicCurve, HyperellipticModel};
pub use klein::{klein_construction_polys, klein_curve, BlowupChart, KleinCurve, KleinPolys};
pub use mpoly::MPoly;
pub use octahedral::{octahedral_quadric_computation, ConicFieldElem, OctahedralReport};

/// Search bound for the auxiliary parameters of the constructions.
pub const PARAM_SEARCH_BOUND: i64 = 50;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CurveError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Brauer(#[from] BrauerError),
    #[error(transparent)]
    Projective(#[from] ProjectiveError),
    #[error(transparent)]
    Forms(#[from] FormsError),
    #[error("{0}")]
    Inadmissible(String),
    #[error("condition {0} fails: {1}")]
    Condition(&'static str, String),
    #[error("not squarefree: {0}")]
    NotSquarefree(String),
    #[error("search exhausted: {0}")]
    Exhausted(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("internal check failed: {0}")]
    Internal(String),
    #[error("{0}")]
    Invalid(String),
}

/// One named verification with its outcome.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.to_string(), passed, detail: detail.into() }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "CHECK {} {} {}", self.name, verdict, self.detail)
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

/// Genus of `y^2 = s(x)` for squarefree `s` of degree at least 3.
pub fn genus<F: Field>(s: &Poly<F>) -> Result<usize, CurveError> {
    let d = s.deg0();
    if s.is_zero() || d < 3 {
        return Err(CurveError::Invalid(format!("degree {d} is below 3")));
    }
    if !s.is_squarefree() {
        return Err(CurveError::NotSquarefree(s.to_string_var("x")));
    }
    Ok((d - 1) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;

    #[test]
    fn genus_by_degree() {
        let p = |c: &[i64]| Poly::<Rational>::from_i64s(c);
        assert_eq!(genus(&p(&[0, -1, 0, 0, 0, 1])).unwrap(), 2);
        assert_eq!(genus(&p(&[1, 0, 0, 1])).unwrap(), 1);
        assert_eq!(genus(&p(&[1, 0, 0, 0, 0, 0, 1])).unwrap(), 2);
        assert!(matches!(genus(&p(&[0, 0, 1, 1])), Err(CurveError::NotSquarefree(_))));
        assert!(genus(&p(&[1, 0, 1])).is_err());
    }
}
