//! Brauer classes as mod-2 sums of symbols, either formal or over a concrete
//! field `K(x)`, with translation of concrete classes into the formal calculus.

use std::collections::BTreeMap;
use std::fmt;

use super::formal::{FormalClass, Word};
use super::split::{decide_class_zero, verify_split_certificate, SplitCertificate, SplitDecision, Symbol};
use super::{BrauerError, ConstField};
use crate::arith::factor::factor;
use crate::arith::rational::squarefree_kernel;
use crate::arith::tower::TowerFunc;
use crate::arith::{Field, NfElem, Poly, Rational, SquareConfig};

/// A sum of symbols `(f_i, g_i)` over `K(x)`, entries cleared of denominators
/// (`(a/b)` has the square class of `ab`). Repeated symbols cancel on insertion.
#[derive(Clone, Debug)]
pub struct ConcreteClass {
    field: ConstField,
    var: String,
    symbols: Vec<Symbol>,
}

fn same_symbol(a: &Symbol, b: &Symbol) -> bool {
    (a.0 == b.0 && a.1 == b.1) || (a.0 == b.1 && a.1 == b.0)
}

/// Square class of a polynomial with rational coefficients as a formal word:
/// sign, rational primes and monic irreducible factors over Q named by their
/// text in `var`.
pub fn poly_word(p: &Poly<NfElem>, var: &str) -> Result<Word, BrauerError> {
    if p.is_zero() {
        return Err(BrauerError::ZeroEntry);
    }
    let q = p
        .to_rational_poly()
        .ok_or_else(|| BrauerError::Invalid(format!("entry {} has coefficients outside Q", p.to_string_var(var))))?;
    let fz = factor(&q);
    let mut w = Word::from_rational(&fz.unit);
    for (g, m) in fz.factors {
        if m % 2 == 1 {
            w.toggle(&g.to_string_var(var));
        }
    }
    Ok(w)
}

impl ConcreteClass {
    pub fn new(field: ConstField, var: &str) -> Self {
        ConcreteClass { field, var: var.to_string(), symbols: Vec::new() }
    }

    pub fn field(&self) -> &ConstField {
        &self.field
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn push_poly(&mut self, f: Poly<NfElem>, g: Poly<NfElem>) -> Result<(), BrauerError> {
        if f.is_zero() || g.is_zero() {
            return Err(BrauerError::ZeroEntry);
        }
        let s = (self.field.attach(&f), self.field.attach(&g));
        if let Some(i) = self.symbols.iter().position(|t| same_symbol(t, &s)) {
            self.symbols.remove(i);
        } else {
            self.symbols.push(s);
        }
        Ok(())
    }

    pub fn push(&mut self, f: &TowerFunc, g: &TowerFunc) -> Result<(), BrauerError> {
        let clear = |h: &TowerFunc| h.num() * h.den();
        self.push_poly(clear(f), clear(g))
    }

    pub fn add(&self, o: &ConcreteClass) -> Result<ConcreteClass, BrauerError> {
        let mut c = self.clone();
        for (f, g) in &o.symbols {
            c.push_poly(f.clone(), g.clone())?;
        }
        Ok(c)
    }

    /// Decides vanishing in `Br(K(x))` by residues and specialization.
    pub fn decide_zero(&self, cfg: &SquareConfig) -> Result<SplitDecision, BrauerError> {
        if self.symbols.is_empty() {
            return Ok(SplitDecision::Split(super::split::SplitProof::ConstantClass {
                point: Rational::from_i64(0),
                values: Vec::new(),
            }));
        }
        decide_class_zero(&self.field, &self.symbols, cfg)
    }

    fn entry_word(&self, p: &Poly<NfElem>) -> Result<Word, BrauerError> {
        poly_word(p, &self.var)
    }

    /// Relations of the constant field that hold among formal generators: for
    /// `Q(sqrt d)`, the word of `d` becomes trivial.
    fn constant_field_relations(&self) -> BTreeMap<String, Word> {
        let mut map = BTreeMap::new();
        if let Some(d) = self.field.quadratic_disc() {
            let w = Word::from_rational(&Rational::from_integer(squarefree_kernel(&d)));
            // Solve for the largest generator: g = product of the others.
            if let Some(g) = w.gens().last().map(str::to_string) {
                let mut rest = w.clone();
                rest.toggle(&g);
                map.insert(g, rest);
            }
        }
        map
    }

    /// The image in the formal calculus. Equal formal images imply equal
    /// classes; the converse need not hold.
    pub fn to_formal(&self) -> Result<FormalClass, BrauerError> {
        if self.field.degree() > 2 {
            return Err(BrauerError::UnsupportedField(self.field.name()));
        }
        let rel = self.constant_field_relations();
        let mut c = FormalClass::zero();
        for (f, g) in &self.symbols {
            c.add_symbol(&self.entry_word(f)?.substitute(&rel), &self.entry_word(g)?.substitute(&rel));
        }
        Ok(c)
    }

    /// Formal image after adding a subset of certified split symbols, chosen to
    /// minimize the number of formal pairs. Certificates are verified first;
    /// returns the class and the indices of the symbols used.
    pub fn simplify_with(
        &self,
        split: &[(Symbol, SplitCertificate)],
    ) -> Result<(FormalClass, Vec<usize>), BrauerError> {
        for ((f, g), c) in split {
            if !verify_split_certificate(&self.field.attach(f), &self.field.attach(g), c) {
                return Err(BrauerError::Invalid(format!(
                    "certificate for ({}, {}) does not verify",
                    f.to_string_var(&self.var),
                    g.to_string_var(&self.var)
                )));
            }
        }
        if split.len() > 12 {
            return Err(BrauerError::Invalid("too many split symbols to search".into()));
        }
        let mut best: Option<(FormalClass, Vec<usize>)> = None;
        for mask in 0u32..(1 << split.len()) {
            let mut c = self.clone();
            let used: Vec<usize> = (0..split.len()).filter(|i| mask >> i & 1 == 1).collect();
            for &i in &used {
                c.push_poly(split[i].0 .0.clone(), split[i].0 .1.clone())?;
            }
            let f = c.to_formal()?;
            if best.as_ref().is_none_or(|(b, _)| f.len() < b.len()) {
                best = Some((f, used));
            }
        }
        Ok(best.expect("at least the empty subset"))
    }
}

impl fmt::Display for ConcreteClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.symbols.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .symbols
            .iter()
            .map(|(a, b)| format!("({}, {})", a.to_string_var(&self.var), b.to_string_var(&self.var)))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Clone, Debug)]
pub enum BrauerClass {
    Formal(FormalClass),
    Concrete(ConcreteClass),
}

impl BrauerClass {
    pub fn formal_normalize(&self) -> Result<FormalClass, BrauerError> {
        match self {
            BrauerClass::Formal(c) => Ok(c.clone()),
            BrauerClass::Concrete(_) => Err(BrauerError::NotFormal),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::cyclotomic::omega_field;
    use crate::arith::numfield::NumberField;

    fn p(c: &[i64]) -> Poly<NfElem> {
        Poly::from_i64s(c)
    }

    #[test]
    fn eager_cancellation_and_formal_image() {
        let mut c = ConcreteClass::new(ConstField::rationals(), "t");
        c.push_poly(p(&[0, -3]), p(&[0, 27, 1])).unwrap();
        c.push_poly(p(&[0, 27, 1]), p(&[0, -3])).unwrap();
        assert!(c.is_empty());
        c.push_poly(p(&[-2]), p(&[0, 2])).unwrap();
        assert_eq!(c.to_formal().unwrap(), FormalClass::parse("(-1,t) + (2,t) + (2,-1) + (2,2)").unwrap());
        assert_eq!(c.to_formal().unwrap().to_string(), "(-1,t) + (2,t)");
        assert_eq!(BrauerClass::Concrete(c).formal_normalize().unwrap_err().to_string(), "use concrete decision procedures");
    }

    #[test]
    fn polynomial_generators_are_named_by_text() {
        let mut c = ConcreteClass::new(ConstField::rationals(), "t");
        c.push_poly(p(&[-3]), p(&[54, 2])).unwrap();
        assert_eq!(c.to_formal().unwrap().to_string(), "(-1,2) + (-1,[t + 27]) + (2,3) + (3,[t + 27])");
    }

    #[test]
    fn quadratic_constant_field_relation() {
        let (k, _) = omega_field(3);
        let mut c = ConcreteClass::new(ConstField::number_field(&k), "t");
        c.push_poly(p(&[3]), p(&[0, 1])).unwrap();
        c.push_poly(p(&[-1]), p(&[0, 1])).unwrap();
        assert!(c.to_formal().unwrap().is_zero());
        let cubic = NumberField::new(Poly::from_i64s(&[-2, 0, 0, 1]), "c").unwrap();
        let c = ConcreteClass::new(ConstField::number_field(&cubic), "t");
        assert!(c.to_formal().is_err());
    }

    #[test]
    fn simplification_uses_only_verified_symbols() {
        let mut c = ConcreteClass::new(ConstField::rationals(), "t");
        c.push_poly(p(&[0, -3]), p(&[0, 27, 1])).unwrap();
        c.push_poly(p(&[-1]), p(&[-1])).unwrap();
        let cert = SplitCertificate::new(p(&[3]), p(&[1]), p(&[0, 1]));
        let sym = (p(&[0, -3]), p(&[0, 27, 1]));
        let (f, used) = c.simplify_with(&[(sym.clone(), cert)]).unwrap();
        assert_eq!(used, vec![0]);
        assert_eq!(f.to_string(), "(-1,-1)");
        let bad = SplitCertificate::new(p(&[1]), p(&[1]), p(&[0, 1]));
        assert!(c.simplify_with(&[(sym, bad)]).is_err());
    }
}
