//! Residues of quaternion symbols over `K(x)` at finite places.
//!
//! For `f = pi^a u`, `g = pi^b v` the residue of `(f, g)` at `pi` is the class
//! of `(-1)^(ab) u^b v^(-a)` in `K[x]/(pi)` modulo squares; the symbol is
//! unramified at `pi` exactly when that class is trivial.

use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Value};

use super::{BrauerError, ConstField};
use crate::arith::absolute::Absolute;
use crate::arith::rational::{format_rational, squarefree_kernel};
use crate::arith::{Field, NfElem, Poly, Rational, SquareConfig, SquareOracle, SquareVerdict};

/// `(e, p / pi^e)` with `pi` not dividing the cofactor.
pub fn split_valuation(p: &Poly<NfElem>, pi: &Poly<NfElem>) -> (usize, Poly<NfElem>) {
    let mut e = 0;
    let mut p = p.clone();
    while let Some(q) = p.exact_div(pi) {
        p = q;
        e += 1;
    }
    (e, p)
}

#[derive(Clone, Debug)]
pub struct Residue {
    pub place: Poly<NfElem>,
    pub field: Absolute,
    pub value: NfElem,
    pub verdict: SquareVerdict<NfElem>,
}

impl Residue {
    pub fn is_trivial(&self) -> Option<bool> {
        self.verdict.decided()
    }
}

/// Residue at `place` of the sum of the given symbols.
pub fn residue_of_sum(
    k: &ConstField,
    symbols: &[(Poly<NfElem>, Poly<NfElem>)],
    place: &Poly<NfElem>,
    cfg: &SquareConfig,
) -> Result<Residue, BrauerError> {
    let place = k.attach(&place.monic());
    if place.deg0() == 0 {
        return Err(BrauerError::Invalid("place must be a nonconstant polynomial".into()));
    }
    let field = k.residue_field(&place, "z")?;
    let mut value = field.field.from_rational(Rational::one());
    for (f, g) in symbols {
        if f.is_zero() || g.is_zero() {
            return Err(BrauerError::ZeroEntry);
        }
        let (a, u) = split_valuation(&k.attach(f), &place);
        let (b, v) = split_valuation(&k.attach(g), &place);
        // v^(-a) has the square class of v^a.
        let mut term = field.field.from_rational(Rational::one());
        if a * b % 2 == 1 {
            term = term.neg_ref();
        }
        if b % 2 == 1 {
            term = term.mul_ref(&field.embed(&u));
        }
        if a % 2 == 1 {
            term = term.mul_ref(&field.embed(&v));
        }
        value = value.mul_ref(&term);
    }
    let verdict = value.square_verdict(cfg)?;
    Ok(Residue { place, field, value, verdict })
}

pub fn residue_symbol(
    k: &ConstField,
    f: &Poly<NfElem>,
    g: &Poly<NfElem>,
    place: &Poly<NfElem>,
    cfg: &SquareConfig,
) -> Result<Residue, BrauerError> {
    residue_of_sum(k, &[(f.clone(), g.clone())], place, cfg)
}

/// `a + b sqrt(d)` for an element of a quadratic field over Q, `d` a squarefree integer.
pub fn quadratic_coordinates(value: &NfElem) -> Option<(Rational, Rational, BigInt)> {
    let k = value.field()?;
    if k.degree() != 2 {
        return None;
    }
    let m = k.min_poly();
    let (b, c) = (m.coeff(1), m.coeff(0));
    let disc = b.square() - Rational::from_i64(4) * c;
    let d = squarefree_kernel(&disc);
    // sqrt(disc) = s sqrt(d) with s rational.
    let s = crate::arith::rational::rational_sqrt(&(disc / Rational::from_integer(d.clone())))?;
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    // generator = -b/2 + (s/2) sqrt(d)
    let (x0, x1) = (value.coords().coeff(0), value.coords().coeff(1));
    let a = x0 - &x1 * &b * &half;
    let bb = x1 * s * half;
    Some((a, bb, d))
}

pub fn format_quadratic(a: &Rational, b: &Rational, d: &BigInt) -> String {
    let root = format!("sqrt({d})");
    let bterm = |sign_first: bool| -> String {
        let mag = b.abs();
        let body = if mag.is_one() { root.clone() } else { format!("{}*{root}", format_rational(&mag)) };
        match (sign_first, b.is_negative()) {
            (true, true) => format!("-{body}"),
            (true, false) => body,
            (false, true) => format!(" - {body}"),
            (false, false) => format!(" + {body}"),
        }
    };
    if b.is_zero() {
        format_rational(a)
    } else if a.is_zero() {
        bterm(true)
    } else {
        format!("{}{}", format_rational(a), bterm(false))
    }
}

fn describe_field(field: &Absolute) -> String {
    let k = &field.field;
    if k.degree() == 1 {
        return "Q".into();
    }
    if let Some((_, _, d)) = quadratic_coordinates(&k.generator()) {
        return format!("Q(sqrt({d}))");
    }
    format!("Q[{}]/({})", k.name(), k.min_poly().to_string_var(k.name()))
}

fn describe_value(field: &Absolute, value: &NfElem) -> String {
    if field.field.degree() == 1 {
        return format_rational(&value.coords().coeff(0));
    }
    match quadratic_coordinates(value) {
        Some((a, b, d)) => format_quadratic(&a, &b, &d),
        None => value.to_string(),
    }
}

/// Non-split evidence: a place where the residue is a certified non-square.
#[derive(Clone, Debug)]
pub struct ResidueWitness {
    pub place: Poly<NfElem>,
    pub residue_field: String,
    pub residue: String,
    pub evidence: String,
}

impl ResidueWitness {
    /// `None` unless the residue is a certified non-square.
    pub fn from_residue(r: &Residue) -> Option<Self> {
        let SquareVerdict::NonSquare(w) = &r.verdict else {
            return None;
        };
        let mut evidence = w.to_string();
        if r.field.field.degree() == 2 {
            evidence = format!("norm {}; {evidence}", format_rational(&r.value.norm()));
        }
        Some(ResidueWitness {
            place: r.place.clone(),
            residue_field: describe_field(&r.field),
            residue: describe_value(&r.field, &r.value),
            evidence,
        })
    }

    /// One-line summary such as `2 + sqrt(2) non-square in Q(sqrt(2)), norm 2`.
    pub fn summary(&self, var: &str) -> String {
        let norm = self
            .evidence
            .strip_prefix("norm ")
            .and_then(|s| s.split(';').next())
            .map(|n| format!(", norm {n}"))
            .unwrap_or_default();
        format!(
            "{} non-square in {}{} at {}",
            self.residue,
            self.residue_field,
            norm,
            self.place.to_string_var(var)
        )
    }

    /// Recomputes the residue of `symbols` at the recorded place.
    pub fn verify(&self, k: &ConstField, symbols: &[(Poly<NfElem>, Poly<NfElem>)], cfg: &SquareConfig) -> bool {
        let Ok(r) = residue_of_sum(k, symbols, &self.place, cfg) else {
            return false;
        };
        let SquareVerdict::NonSquare(w) = &r.verdict else {
            return false;
        };
        r.value.verify_nonsquare(w, cfg) && describe_value(&r.field, &r.value) == self.residue
    }

    pub fn to_json(&self, var: &str) -> Value {
        json!({
            "place": self.place.to_string_var(var),
            "residue_field": self.residue_field,
            "residue": self.residue,
            "evidence": self.evidence,
        })
    }
}
