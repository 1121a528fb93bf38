//! Quaternion symbols in Br2: a formal calculus, Hilbert symbols over Q,
//! residue maps over `K(x)` and certified splitting decisions.

pub mod concrete;
pub mod formal;
pub mod hilbert;
pub mod residue;
pub mod split;

use std::sync::Arc;

use thiserror::Error;

use crate::arith::absolute::{factor_over, residue_field, Absolute};
use crate::arith::factor::factor;
use crate::arith::{ArithError, Field, NfElem, NumberField, Poly, Rational};

pub use concrete::{poly_word, BrauerClass, ConcreteClass};
pub use formal::{formal_w2, FormalClass, FormalSum, Word};
pub use hilbert::{hilbert_symbol, is_split_q, Place};
pub use residue::{residue_symbol, Residue, ResidueWitness};
pub use split::{
    is_split_kx, square_criterion_check, verify_split_certificate, SplitCertificate, SplitDecision, SplitProof,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BrauerError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("symbol entry is zero")]
    ZeroEntry,
    #[error("unsupported constant field: {0}")]
    UnsupportedField(String),
    #[error("no certificate")]
    NoCertificate,
    #[error("input is not separable: repeated factor {0}")]
    NotSeparable(String),
    #[error("use concrete decision procedures")]
    NotFormal,
    #[error("{0}")]
    Invalid(String),
}

/// The constant field `K` of `K(x)`: Q or a number field. Polynomials over it
/// are `Poly<NfElem>` in both cases.
#[derive(Clone, Debug, Default)]
pub struct ConstField {
    nf: Option<Arc<NumberField>>,
}

impl ConstField {
    pub fn rationals() -> Self {
        ConstField { nf: None }
    }

    pub fn number_field(k: &Arc<NumberField>) -> Self {
        ConstField { nf: Some(k.clone()) }
    }

    pub fn from_option(k: Option<&Arc<NumberField>>) -> Self {
        ConstField { nf: k.cloned() }
    }

    pub fn nf(&self) -> Option<&Arc<NumberField>> {
        self.nf.as_ref()
    }

    pub fn degree(&self) -> usize {
        self.nf.as_ref().map_or(1, |k| k.degree())
    }

    pub fn name(&self) -> String {
        match &self.nf {
            None => "Q".into(),
            Some(k) => format!("Q({})", k.name()),
        }
    }

    /// Discriminant of the defining quadratic, for quadratic constant fields.
    pub fn quadratic_disc(&self) -> Option<Rational> {
        let k = self.nf.as_ref()?;
        if k.degree() != 2 {
            return None;
        }
        let m = k.min_poly();
        Some(m.coeff(1).square() - Rational::from_i64(4) * m.coeff(0))
    }

    pub fn attach(&self, p: &Poly<NfElem>) -> Poly<NfElem> {
        match &self.nf {
            Some(k) => p.map(|c| c.with_field(k)),
            None => p.clone(),
        }
    }

    pub fn rational_poly(&self, p: &Poly<Rational>) -> Poly<NfElem> {
        self.attach(&p.map(NfElem::from_rational))
    }

    /// Monic irreducible factors over `K` with multiplicities.
    pub fn factor(&self, p: &Poly<NfElem>) -> Vec<(Poly<NfElem>, usize)> {
        if p.deg0() == 0 {
            return Vec::new();
        }
        match &self.nf {
            Some(k) => factor_over(k, &self.attach(p)),
            None => {
                let q = p.to_rational_poly().expect("rational coefficients");
                factor(&q).factors.into_iter().map(|(g, m)| (g.map(NfElem::from_rational), m)).collect()
            }
        }
    }

    /// `K[x]/(pi)` as an absolute number field.
    pub fn residue_field(&self, pi: &Poly<NfElem>, name: &str) -> Result<Absolute, ArithError> {
        residue_field(self.nf.as_ref(), &self.attach(pi), name)
    }
}
