//! A small infix parser for field elements written in terms of named symbols,
//! e.g. `"t*(t+27)"`, `"-3*t"`, `"(x^2 - 1)/(2*x)"`, `"2 + a"`.
//!
//! The target field and the meaning of every symbol are supplied by the caller,
//! so the same grammar serves rationals, number fields, function fields and
//! quadratic extensions.

use num_bigint::BigInt;

use super::field::Field;
use super::rational::Rational;
use super::ArithError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>, ArithError> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let j = (i..cs.len()).find(|&j| !cs[j].is_ascii_digit()).unwrap_or(cs.len());
            let text: String = cs[i..j].iter().collect();
            out.push(Tok::Num(text.parse().expect("digits")));
            i = j;
        } else if c.is_alphabetic() || c == '_' {
            let j = (i..cs.len()).find(|&j| !(cs[j].is_alphanumeric() || cs[j] == '_')).unwrap_or(cs.len());
            out.push(Tok::Ident(cs[i..j].iter().collect()));
            i = j;
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(ArithError::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a, E> {
    toks: Vec<Tok>,
    pos: usize,
    symbols: &'a [(&'a str, E)],
}

impl<E: Field> Parser<'_, E> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<E, ArithError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add_ref(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub_ref(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<E, ArithError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul_ref(&self.unary()?);
            } else if self.eat('/') {
                let d = self.unary()?;
                acc = acc.div_checked(&d).ok_or(ArithError::DivisionByZero)?;
            } else if matches!(self.peek(), Some(Tok::Ident(_)) | Some(Tok::Op('('))) {
                // implicit multiplication: "2t", "3(t+1)"
                acc = acc.mul_ref(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<E, ArithError> {
        if self.eat('-') {
            return Ok(self.unary()?.neg_ref());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<E, ArithError> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let Some(Tok::Num(n)) = self.peek().cloned() else {
                return Err(ArithError::Parse("exponent must be an integer".into()));
            };
            self.pos += 1;
            let e: i64 = n.try_into().map_err(|_| ArithError::Parse("exponent too large".into()))?;
            let e = if neg { -e } else { e };
            return base.powi(e).ok_or(ArithError::DivisionByZero);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<E, ArithError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(E::from_rational(&Rational::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.symbols
                    .iter()
                    .find(|(s, _)| *s == name)
                    .map(|(_, v)| v.clone())
                    .ok_or_else(|| ArithError::Parse(format!("unknown symbol {name:?}")))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(ArithError::Parse("missing ')'".into()));
                }
                Ok(v)
            }
            other => Err(ArithError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses `s` as an element of `E`, resolving identifiers through `symbols`.
pub fn parse_expr<E: Field>(s: &str, symbols: &[(&str, E)]) -> Result<E, ArithError> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(ArithError::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0, symbols };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(ArithError::Parse(format!("trailing input in {s:?}")));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::Poly;
    use crate::arith::ratfunc::RatFunc;
    use crate::arith::rational::{int, rat};

    type R = RatFunc<Rational>;

    #[test]
    fn rational_function_expressions() {
        let syms = [("t", R::x())];
        let a: R = parse_expr("t*(t+27)", &syms).unwrap();
        assert_eq!(a, R::from_poly(Poly::from_i64s(&[0, 27, 1])));
        let b: R = parse_expr("-3t", &syms).unwrap();
        assert_eq!(b, R::from_poly(Poly::from_i64s(&[0, -3])));
        let c: R = parse_expr("(t^2 - 1)/(2*t)", &syms).unwrap();
        assert_eq!(c.eval(&int(2)), Some(rat(3, 4)));
        let d: R = parse_expr("t^-2", &syms).unwrap();
        assert_eq!(d.eval(&int(2)), Some(rat(1, 4)));
        assert!(parse_expr::<R>("1/0", &syms).is_err());
        assert!(parse_expr::<R>("y + 1", &syms).is_err());
        assert!(parse_expr::<R>("(t + 1", &syms).is_err());
    }

    #[test]
    fn rationals() {
        let q: Rational = parse_expr("-22/7 + 1", &[]).unwrap();
        assert_eq!(q, rat(-15, 7));
    }
}
