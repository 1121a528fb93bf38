//! Splitting of quaternion symbols `(f, g)` over `K(x)`.
//!
//! A `Split` answer carries either an explicit certificate
//! `f p^2 + g q^2 = r^2` or a constant-class proof: every finite residue is a
//! certified square, so the class comes from `Br(K)` and equals its value at a
//! specialization point, which is then decided by Hilbert symbols.
//! A `NotSplit` answer carries a non-square residue or a failing specialization.

use serde_json::{json, Value};

use super::hilbert::{class_vanishes, Place};
use super::residue::{residue_of_sum, ResidueWitness};
use super::{BrauerError, ConstField};
use crate::arith::rational::format_rational;
use crate::arith::{Field, NfElem, Poly, Rational, SquareConfig, SquareOracle, SquareVerdict};

pub type Symbol = (Poly<NfElem>, Poly<NfElem>);

#[derive(Clone, Debug, PartialEq)]
pub struct SplitCertificate {
    pub p: Poly<NfElem>,
    pub q: Poly<NfElem>,
    pub r: Poly<NfElem>,
}

fn token(s: String) -> String {
    if s.contains(' ') {
        format!("({s})")
    } else {
        s
    }
}

impl SplitCertificate {
    pub fn new(p: Poly<NfElem>, q: Poly<NfElem>, r: Poly<NfElem>) -> Self {
        SplitCertificate { p, q, r }
    }

    /// `CERT p q r`.
    pub fn line(&self, var: &str) -> String {
        format!(
            "CERT {} {} {}",
            token(self.p.to_string_var(var)),
            token(self.q.to_string_var(var)),
            token(self.r.to_string_var(var))
        )
    }

    pub fn to_json(&self, var: &str) -> Value {
        json!({"p": self.p.to_string_var(var), "q": self.q.to_string_var(var), "r": self.r.to_string_var(var)})
    }
}

/// `f p^2 + g q^2 = r^2` exactly, with `p, q, r` coprime and not all zero.
pub fn verify_split_certificate(f: &Poly<NfElem>, g: &Poly<NfElem>, c: &SplitCertificate) -> bool {
    if c.p.is_zero() && c.q.is_zero() && c.r.is_zero() {
        return false;
    }
    let lhs = &(f * &(&c.p * &c.p)) + &(g * &(&c.q * &c.q));
    if lhs != &c.r * &c.r {
        return false;
    }
    let d = Poly::gcd(&Poly::gcd(&c.p, &c.q), &c.r);
    d.deg0() == 0
}

/// Exact square root of a polynomial over `K`, if it is a square.
pub fn poly_sqrt(k: &ConstField, h: &Poly<NfElem>, cfg: &SquareConfig) -> Result<Option<Poly<NfElem>>, BrauerError> {
    if h.is_zero() {
        return Ok(Some(Poly::zero()));
    }
    let h = k.attach(h);
    let mut root = Poly::one();
    for (a, m) in h.squarefree_decomposition() {
        if m % 2 == 1 {
            return Ok(None);
        }
        root = &root * &a.pow(m as u64 / 2);
    }
    let c = h.exact_div(&(&root * &root)).expect("square part divides");
    let c = match k.nf() {
        Some(kk) => c.coeff(0).with_field(kk),
        None => c.coeff(0),
    };
    Ok(match c.square_verdict(cfg)? {
        SquareVerdict::Square(s) => {
            let r = root.scale(&s);
            debug_assert!(&r * &r == h);
            Some(r)
        }
        _ => None,
    })
}

/// Small constants tried for `p` and `q` in the certificate search.
fn constant_candidates(k: &ConstField) -> Vec<NfElem> {
    let mut out = Vec::new();
    match k.nf() {
        None => {
            for c in 0..=3 {
                out.push(NfElem::from_i64(c));
            }
        }
        Some(kk) => {
            let theta = kk.generator();
            for c1 in [0i64, 1, 2, 3, -1, -2, -3] {
                for c0 in [0i64, 1, 2, 3, -1, -2, -3] {
                    out.push(NfElem::from_i64(c0).add_ref(&theta.mul_ref(&NfElem::from_i64(c1))).with_field(kk));
                }
            }
        }
    }
    out
}

/// Looks for a certificate with constant `p`, `q`.
pub fn find_constant_certificate(
    k: &ConstField,
    f: &Poly<NfElem>,
    g: &Poly<NfElem>,
    cfg: &SquareConfig,
) -> Result<Option<SplitCertificate>, BrauerError> {
    let (f, g) = (k.attach(f), k.attach(g));
    let qs = constant_candidates(k);
    for pc in 0..=3i64 {
        let p = NfElem::from_i64(pc);
        for q in &qs {
            if pc == 0 && q.is_zero() {
                continue;
            }
            // Only primitive pairs: both even rational constants repeat a smaller pair.
            if let (Some(a), Some(b)) = (p.to_rational(), q.to_rational()) {
                if num_integer::Integer::gcd(a.numer(), b.numer()) > 1.into() {
                    continue;
                }
            }
            let h = &f.scale(&p.square()) + &g.scale(&q.square());
            if let Some(r) = poly_sqrt(k, &h, cfg)? {
                let c = SplitCertificate::new(Poly::constant(p.clone()), Poly::constant(q.clone()), r);
                if verify_split_certificate(&f, &g, &c) {
                    return Ok(Some(c));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug)]
pub enum SplitProof {
    Certificate(SplitCertificate),
    /// All finite residues are squares and the constant class vanishes at `point`.
    ConstantClass { point: Rational, values: Vec<(Rational, Rational)> },
}

#[derive(Clone, Debug)]
pub enum NonSplitProof {
    /// Every place with a certified non-square residue.
    Residue(Vec<ResidueWitness>),
    /// All finite residues are squares but the constant class is nonzero:
    /// its value at `point` is ramified at `places`.
    Specialization { point: Rational, values: Vec<(Rational, Rational)>, places: Vec<Place> },
}

#[derive(Clone, Debug)]
pub enum SplitDecision {
    Split(SplitProof),
    NotSplit(NonSplitProof),
    Inconclusive(String),
}

const CONSTANT_CLASS_NOTE: &str =
    "all finite residues are squares, so the class is constant; it equals its specialization";

fn show_values(values: &[(Rational, Rational)]) -> String {
    let parts: Vec<String> =
        values.iter().map(|(a, b)| format!("({},{})", format_rational(a), format_rational(b))).collect();
    parts.join(" + ")
}

impl SplitDecision {
    pub fn is_split(&self) -> Option<bool> {
        match self {
            SplitDecision::Split(_) => Some(true),
            SplitDecision::NotSplit(_) => Some(false),
            SplitDecision::Inconclusive(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<&SplitCertificate> {
        match self {
            SplitDecision::Split(SplitProof::Certificate(c)) => Some(c),
            _ => None,
        }
    }

    pub fn residue_witnesses(&self) -> &[ResidueWitness] {
        match self {
            SplitDecision::NotSplit(NonSplitProof::Residue(w)) => w,
            _ => &[],
        }
    }

    /// `SPLIT ...`, `NOTSPLIT ...` or `INCONCLUSIVE ...`.
    pub fn line(&self, var: &str) -> String {
        match self {
            SplitDecision::Split(SplitProof::Certificate(c)) => format!("SPLIT {}", c.line(var)),
            SplitDecision::Split(SplitProof::ConstantClass { point, values }) => {
                format!("SPLIT CONSTANT {var}={} {} split over the constants", format_rational(point), show_values(values))
            }
            SplitDecision::NotSplit(NonSplitProof::Residue(ws)) => {
                let parts: Vec<String> = ws.iter().map(|w| w.summary(var)).collect();
                format!("NOTSPLIT RESIDUE {}", parts.join("; "))
            }
            SplitDecision::NotSplit(NonSplitProof::Specialization { point, values, places }) => {
                let ps: Vec<String> = places.iter().map(Place::to_string).collect();
                format!(
                    "NOTSPLIT SPECIALIZATION {var}={} {} ramified at {}",
                    format_rational(point),
                    show_values(values),
                    ps.join(",")
                )
            }
            SplitDecision::Inconclusive(why) => format!("INCONCLUSIVE {why}"),
        }
    }

    /// Proof object as structured text.
    pub fn to_json(&self, var: &str) -> Value {
        let vals = |values: &[(Rational, Rational)]| -> Value {
            values.iter().map(|(a, b)| json!([format_rational(a), format_rational(b)])).collect()
        };
        match self {
            SplitDecision::Split(SplitProof::Certificate(c)) => {
                json!({"decision": "split", "proof": "certificate", "certificate": c.to_json(var)})
            }
            SplitDecision::Split(SplitProof::ConstantClass { point, values }) => json!({
                "decision": "split",
                "proof": "constant-class",
                "note": CONSTANT_CLASS_NOTE,
                "point": format_rational(point),
                "values": vals(values),
            }),
            SplitDecision::NotSplit(NonSplitProof::Residue(ws)) => json!({
                "decision": "not-split",
                "proof": "residue",
                "witnesses": ws.iter().map(|w| w.to_json(var)).collect::<Vec<_>>(),
            }),
            SplitDecision::NotSplit(NonSplitProof::Specialization { point, values, places }) => json!({
                "decision": "not-split",
                "proof": "specialization",
                "note": CONSTANT_CLASS_NOTE,
                "point": format_rational(point),
                "values": vals(values),
                "ramified_places": places.iter().map(Place::to_string).collect::<Vec<_>>(),
            }),
            SplitDecision::Inconclusive(why) => json!({"decision": "inconclusive", "reason": why}),
        }
    }

    /// Re-checks the attached proof against the symbols it was produced for.
    pub fn verify(&self, k: &ConstField, symbols: &[Symbol], cfg: &SquareConfig) -> bool {
        match self {
            SplitDecision::Split(SplitProof::Certificate(c)) => {
                symbols.len() == 1 && verify_split_certificate(&k.attach(&symbols[0].0), &k.attach(&symbols[0].1), c)
            }
            SplitDecision::NotSplit(NonSplitProof::Residue(ws)) => {
                !ws.is_empty() && ws.iter().all(|w| w.verify(k, symbols, cfg))
            }
            SplitDecision::Split(SplitProof::ConstantClass { .. })
            | SplitDecision::NotSplit(NonSplitProof::Specialization { .. }) => {
                let again = decide_class_zero(k, symbols, cfg);
                matches!(again, Ok(d) if d.is_split() == self.is_split())
            }
            SplitDecision::Inconclusive(_) => false,
        }
    }
}

fn check_entries(symbols: &[Symbol]) -> Result<(), BrauerError> {
    if symbols.iter().any(|(f, g)| f.is_zero() || g.is_zero()) {
        return Err(BrauerError::ZeroEntry);
    }
    Ok(())
}

/// Smallest non-negative integer at which no entry vanishes.
fn specialization_point(symbols: &[Symbol]) -> Rational {
    let mut x0 = 0i64;
    loop {
        let x = NfElem::from_i64(x0);
        if symbols.iter().all(|(f, g)| !f.eval(&x).is_zero() && !g.eval(&x).is_zero()) {
            return Rational::from_i64(x0);
        }
        x0 += 1;
    }
}

/// Decides whether the sum of `symbols` vanishes in `Br(K(x))`.
pub fn decide_class_zero(k: &ConstField, symbols: &[Symbol], cfg: &SquareConfig) -> Result<SplitDecision, BrauerError> {
    check_entries(symbols)?;
    let symbols: Vec<Symbol> = symbols.iter().map(|(f, g)| (k.attach(f), k.attach(g))).collect();
    let mut places: Vec<Poly<NfElem>> = Vec::new();
    for (f, g) in &symbols {
        for (pi, _) in k.factor(&(f * g)) {
            if pi.deg0() > 0 && !places.contains(&pi) {
                places.push(pi);
            }
        }
    }
    let mut witnesses = Vec::new();
    let mut undecided = Vec::new();
    for pi in &places {
        let r = residue_of_sum(k, &symbols, pi, cfg)?;
        match r.is_trivial() {
            Some(true) => {}
            Some(false) => witnesses.push(ResidueWitness::from_residue(&r).expect("non-square residue")),
            None => undecided.push(pi.to_string_var("x")),
        }
    }
    if !witnesses.is_empty() {
        return Ok(SplitDecision::NotSplit(NonSplitProof::Residue(witnesses)));
    }
    if !undecided.is_empty() {
        return Ok(SplitDecision::Inconclusive(format!("residue square test undecided at {}", undecided.join(", "))));
    }
    let point = specialization_point(&symbols);
    let x0 = NfElem::from_rational(&point);
    let mut values = Vec::new();
    for (f, g) in &symbols {
        match (f.eval(&x0).to_rational(), g.eval(&x0).to_rational()) {
            (Some(a), Some(b)) => values.push((a, b)),
            _ => {
                return Err(BrauerError::UnsupportedField(format!(
                    "specialization over {} with values outside Q",
                    k.name()
                )))
            }
        }
    }
    let d = match k.degree() {
        1 => None,
        2 => k.quadratic_disc(),
        _ => return Err(BrauerError::UnsupportedField(k.name())),
    };
    let (zero, places) = class_vanishes(&values, d.as_ref());
    Ok(if zero {
        SplitDecision::Split(SplitProof::ConstantClass { point, values })
    } else {
        SplitDecision::NotSplit(NonSplitProof::Specialization { point, values, places })
    })
}

/// Decides whether `(f, g)` splits over `K(x)`.
pub fn is_split_kx(
    k: &ConstField,
    f: &Poly<NfElem>,
    g: &Poly<NfElem>,
    cfg: &SquareConfig,
) -> Result<SplitDecision, BrauerError> {
    if f.is_zero() || g.is_zero() {
        return Err(BrauerError::ZeroEntry);
    }
    if let Some(c) = find_constant_certificate(k, f, g, cfg)? {
        return Ok(SplitDecision::Split(SplitProof::Certificate(c)));
    }
    decide_class_zero(k, &[(f.clone(), g.clone())], cfg)
}

/// Result of the square criterion at one irreducible factor of `g`.
#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub place: Poly<NfElem>,
    /// `f` modulo the place; `None` when it vanishes there.
    pub value: Option<NfElem>,
    pub square: Option<bool>,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.square == Some(true)
    }
}

/// For a certified split symbol with separable entries, checks that `f` is a
/// square in `K[x]/(pi)` for every irreducible factor `pi` of `g`.
pub fn square_criterion_check(
    k: &ConstField,
    f: &Poly<NfElem>,
    g: &Poly<NfElem>,
    cert: Option<&SplitCertificate>,
    cfg: &SquareConfig,
) -> Result<Vec<CriterionReport>, BrauerError> {
    let (f, g) = (k.attach(f), k.attach(g));
    let cert = cert.ok_or(BrauerError::NoCertificate)?;
    if !verify_split_certificate(&f, &g, cert) {
        return Err(BrauerError::NoCertificate);
    }
    for h in [&f, &g] {
        if let Some((a, _)) = h.squarefree_decomposition().into_iter().find(|(a, m)| *m > 1 && a.deg0() > 0) {
            return Err(BrauerError::NotSeparable(a.to_string_var("x")));
        }
    }
    let mut out = Vec::new();
    for (pi, _) in k.factor(&g) {
        let field = k.residue_field(&pi, "z")?;
        let v = field.embed(&f);
        if v.is_zero() {
            out.push(CriterionReport { place: pi, value: None, square: Some(true) });
            continue;
        }
        let square = v.square_verdict(cfg)?.decided();
        out.push(CriterionReport { place: pi, value: Some(v), square });
    }
    Ok(out)
}
