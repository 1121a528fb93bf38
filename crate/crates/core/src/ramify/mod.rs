//! Polynomials `P` over Q whose fibres over prescribed branch values have
//! prescribed multiplicity patterns, and the `S_p` cover used to realize
//! every cycle type of `S_m` as an inertia type.

pub mod build;
pub mod cover;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{ArithError, Rational};

pub use build::{build_ramified_poly, choose_c, multiplicity_pattern, verify_local_decomposition, RamifiedPoly};
pub use cover::{partitions, sm_cover, SmCoverReport};

/// Safety net for the search over `c`.
pub const C_SEARCH_BOUND: u64 = 10_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RamifyError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("invalid specification: {0}")]
    Invalid(String),
    #[error("decomposition mismatch at {beta}: {detail}")]
    Mismatch { beta: String, detail: String },
    #[error("no c <= {0} avoids stray multiple roots")]
    CBound(u64),
}

/// Multiplicities `(b_1, ..., b_l)`, each at least 2, of the ramified points
/// in one fibre.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct RamificationCondition(Vec<u32>);

impl RamificationCondition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self, RamifyError> {
        if parts.is_empty() {
            return Err(RamifyError::Invalid("empty ramification condition".into()));
        }
        if let Some(b) = parts.iter().find(|b| **b < 2) {
            return Err(RamifyError::Invalid(format!("entry {b} is below 2")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(RamificationCondition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of roots absorbed by the condition.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl TryFrom<Vec<u32>> for RamificationCondition {
    type Error = RamifyError;
    fn try_from(v: Vec<u32>) -> Result<Self, RamifyError> {
        Self::new(v)
    }
}

impl From<RamificationCondition> for Vec<u32> {
    fn from(c: RamificationCondition) -> Self {
        c.0
    }
}

impl fmt::Display for RamificationCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Conditions at distinct rational branch values, with an optional degree.
#[derive(Clone, Debug, PartialEq)]
pub struct RamificationSpec {
    pub entries: Vec<(RamificationCondition, Rational)>,
    pub target_degree: Option<usize>,
}

impl RamificationSpec {
    pub fn new(entries: Vec<(RamificationCondition, Rational)>, target_degree: Option<usize>) -> Result<Self, RamifyError> {
        if entries.is_empty() {
            return Err(RamifyError::Invalid("no branch values".into()));
        }
        for (i, (_, b)) in entries.iter().enumerate() {
            if entries[..i].iter().any(|(_, c)| c == b) {
                return Err(RamifyError::Invalid(format!("branch value {b} repeated")));
            }
        }
        Ok(RamificationSpec { entries, target_degree })
    }

    /// `deg H = sum (b_ij + 1)`; a requested degree must exceed it.
    pub fn crt_bound(&self) -> usize {
        self.entries.iter().flat_map(|(c, _)| c.parts()).map(|b| *b as usize + 1).sum()
    }
}

/// Roots of `P - beta` at the chosen base points with their multiplicities,
/// and `gcd(P - beta, P')` as the certificate that there are no others.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalDecomposition {
    pub beta: Rational,
    pub points: Vec<(Rational, u32)>,
    pub certificate: crate::arith::Poly<Rational>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conditions_are_validated_and_sorted() {
        assert!(RamificationCondition::new(vec![]).is_err());
        assert!(RamificationCondition::new(vec![2, 1]).is_err());
        let c = RamificationCondition::new(vec![2, 3]).unwrap();
        assert_eq!(c.parts(), &[3, 2]);
        assert_eq!(c.to_string(), "(3,2)");
        let parsed: RamificationCondition = serde_json::from_str("[2, 2]").unwrap();
        assert_eq!(parsed.weight(), 4);
        assert!(serde_json::from_str::<RamificationCondition>("[0]").is_err());
    }

    #[test]
    fn repeated_branch_values_are_rejected() {
        let c = RamificationCondition::new(vec![2]).unwrap();
        let r = RamificationSpec::new(vec![(c.clone(), Rational::from_integer(1.into())), (c, Rational::from_integer(1.into()))], None);
        assert!(r.is_err());
    }
}
