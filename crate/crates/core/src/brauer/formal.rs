//! Formal symbol calculus: entries are words in a free F2-vector space of square
//! classes with a distinguished generator `-1`, and classes are F2-combinations
//! of unordered generator pairs.
//!
//! Only bilinearity, symmetry and `(g, g) = (g, -1)` are imposed, so equality of
//! canonical forms implies equality in every field where the generators are
//! interpreted.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::rational::{factor_integer, Rational};

pub const MINUS_ONE: &str = "-1";

/// A square class written as a product of generators (each to the power 0 or 1).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Word(BTreeSet<String>);

impl Word {
    pub fn one() -> Self {
        Word(BTreeSet::new())
    }

    pub fn gen(name: &str) -> Self {
        let mut w = Word::one();
        w.toggle(name);
        w
    }

    pub fn minus_one() -> Self {
        Word::gen(MINUS_ONE)
    }

    pub fn toggle(&mut self, name: &str) {
        if !self.0.remove(name) {
            self.0.insert(name.to_string());
        }
    }

    pub fn mul(&self, o: &Word) -> Word {
        let mut w = self.clone();
        for g in &o.0 {
            w.toggle(g);
        }
        w
    }

    pub fn neg(&self) -> Word {
        self.mul(&Word::minus_one())
    }

    pub fn gens(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// The square class of a nonzero rational: its sign and odd-exponent primes.
    pub fn from_rational(q: &Rational) -> Word {
        let n: BigInt = q.numer() * q.denom();
        let mut w = if n.is_negative() { Word::minus_one() } else { Word::one() };
        if !n.abs().is_one() {
            for (p, e) in factor_integer(&n) {
                if e % 2 == 1 {
                    w.toggle(&p.to_string());
                }
            }
        }
        w
    }

    /// Parses `"-a*b"`, `"-1"`, `"1"`, `"2*t"`. Integers are factored.
    pub fn parse(s: &str) -> Result<Word, String> {
        let mut s = s.trim();
        let mut w = Word::one();
        if let Some(rest) = s.strip_prefix('-') {
            w = w.neg();
            s = rest.trim();
        }
        for part in s.split('*') {
            let part = part.trim();
            if part.is_empty() {
                return Err(format!("empty factor in word {s:?}"));
            }
            if part.chars().all(|c| c.is_ascii_digit()) {
                let n: BigInt = part.parse().map_err(|e| format!("{e}"))?;
                if n.is_zero() {
                    return Err("zero has no square class".into());
                }
                w = w.mul(&Word::from_rational(&Rational::from_integer(n)));
            } else if part.chars().all(|c| c.is_alphanumeric() || c == '_') {
                w.toggle(part);
            } else {
                return Err(format!("bad generator {part:?}"));
            }
        }
        Ok(w)
    }

    /// Replaces each generator by a word.
    pub fn substitute(&self, map: &BTreeMap<String, Word>) -> Word {
        self.0.iter().fold(Word::one(), |acc, g| acc.mul(map.get(g).unwrap_or(&Word::gen(g))))
    }
}

fn show_gen(g: &str) -> String {
    if g == MINUS_ONE || g.chars().all(|c| c.is_alphanumeric() || c == '_') {
        g.to_string()
    } else {
        format!("[{g}]")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|g| show_gen(g)).collect();
        f.write_str(&parts.join("*"))
    }
}

/// An element of the F2-span of unordered generator pairs: the canonical form of
/// a formal Brauer class. Pairs are stored with the smaller name first and never
/// as `(g, g)` unless `g = -1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FormalClass {
    pairs: BTreeSet<(String, String)>,
}

impl FormalClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Number of generator pairs in the canonical form.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    fn toggle_pair(&mut self, a: &str, b: &str) {
        let (a, b) = if a == b && a != MINUS_ONE { (a, MINUS_ONE) } else { (a, b) };
        let key = if a <= b { (a.to_string(), b.to_string()) } else { (b.to_string(), a.to_string()) };
        if !self.pairs.remove(&key) {
            self.pairs.insert(key);
        }
    }

    /// The symbol `(u, v)` expanded bilinearly.
    pub fn symbol(u: &Word, v: &Word) -> Self {
        let mut c = FormalClass::zero();
        c.add_symbol(u, v);
        c
    }

    pub fn add_symbol(&mut self, u: &Word, v: &Word) {
        for a in u.gens() {
            for b in v.gens() {
                self.toggle_pair(a, b);
            }
        }
    }

    pub fn add(&self, o: &FormalClass) -> FormalClass {
        let mut c = self.clone();
        for (a, b) in &o.pairs {
            c.toggle_pair(a, b);
        }
        c
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&str, &str)> {
        self.pairs.iter().map(|(a, b)| (a.as_str(), b.as_str()))
    }

    /// Image under a substitution of generators by words.
    pub fn substitute(&self, map: &BTreeMap<String, Word>) -> FormalClass {
        let mut c = FormalClass::zero();
        for (a, b) in &self.pairs {
            c.add_symbol(&Word::gen(a).substitute(map), &Word::gen(b).substitute(map));
        }
        c
    }

    /// Parses `"(a,b) + (-1,-a*b)"`; `"0"` is the zero class.
    pub fn parse(s: &str) -> Result<FormalClass, String> {
        let s = s.trim();
        let mut c = FormalClass::zero();
        if s == "0" || s.is_empty() {
            return Ok(c);
        }
        for term in s.split('+') {
            let t = term.trim();
            let inner = t
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| format!("expected (u,v), got {t:?}"))?;
            let (u, v) = inner.split_once(',').ok_or_else(|| format!("expected a comma in {t:?}"))?;
            c.add_symbol(&Word::parse(u)?, &Word::parse(v)?);
        }
        Ok(c)
    }
}

impl fmt::Display for FormalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> =
            self.pairs.iter().map(|(a, b)| format!("({},{})", show_gen(a), show_gen(b))).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// A formal class as a list of symbols, before canonicalization.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct FormalSum {
    pub symbols: Vec<(Word, Word)>,
}

impl FormalSum {
    pub fn push(&mut self, u: Word, v: Word) {
        self.symbols.push((u, v));
    }

    pub fn normalize(&self) -> FormalClass {
        let mut c = FormalClass::zero();
        for (u, v) in &self.symbols {
            c.add_symbol(u, v);
        }
        c
    }
}

/// `sum_{i<j} (a_i, a_j)` for a diagonal form with formal entries.
pub fn formal_w2(entries: &[Word]) -> FormalClass {
    let mut c = FormalClass::zero();
    for i in 0..entries.len() {
        for j in i + 1..entries.len() {
            c.add_symbol(&entries[i], &entries[j]);
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn c(s: &str) -> FormalClass {
        FormalClass::parse(s).unwrap()
    }

    #[test]
    fn basic_relations() {
        assert!(c("(a,-a)").is_zero());
        assert!(c("(a,b) + (a,b)").is_zero());
        assert_eq!(c("(a,b)"), c("(b,a)"));
        assert!(c("(a,b*c) + (a,b) + (a,c)").is_zero());
        assert!(c("(a,a) + (a,-1)").is_zero());
        assert_eq!(c("(-1,-1)").to_string(), "(-1,-1)");
        assert_eq!(c("(4,a)"), FormalClass::zero());
        assert_eq!(c("(-2,a)"), c("(-1,a) + (2,a)"));
    }

    #[test]
    fn stiefel_whitney_of_pfister_like_forms() {
        let q = [w("1"), w("a"), w("b"), w("a*b")];
        assert_eq!(formal_w2(&q), c("(-a,-b) + (-1,-1)"));
        let q5 = [w("1"), w("a"), w("b"), w("c"), w("a*b*c")];
        assert_eq!(formal_w2(&q5), c("(-a*c,-b*c) + (-1,-1)"));
        assert_eq!(formal_w2(&[w("1")]), FormalClass::zero());
    }

    #[test]
    fn substitution_is_a_homomorphism() {
        let mut m = BTreeMap::new();
        m.insert("3".to_string(), Word::minus_one());
        let x = c("(3,t) + (-1,t)");
        assert!(x.substitute(&m).is_zero());
        assert_eq!(w("-6"), w("-1*2*3"));
    }
}
