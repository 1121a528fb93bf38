//! Sparse polynomials in a fixed number of variables, enough to write down
//! affine charts and evaluate Jacobians.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{Field, Poly};

#[derive(Clone, Debug, PartialEq)]
pub struct MPoly<F> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, F>,
}

impl<F: Field> MPoly<F> {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::monomial(nvars, c, vec![0; nvars])
    }

    pub fn monomial(nvars: usize, c: F, exps: Vec<u32>) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, F::one(), e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &F)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: Vec<u32>, c: F) {
        let sum = match self.terms.remove(&e) {
            Some(old) => old.add_ref(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(e, sum);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&F::from_i64(-1)))
    }

    pub fn scale(&self, a: &F) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            r.add_term(e.clone(), c.mul_ref(a));
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1.mul_ref(c2));
            }
        }
        r
    }

    /// `p(m)` for a univariate `p` and a polynomial `m`.
    pub fn univariate_at(p: &Poly<F>, m: &Self) -> Self {
        p.coeffs()
            .iter()
            .rev()
            .fold(Self::zero(m.nvars), |acc, c| acc.mul(m).add(&Self::constant(m.nvars, c.clone())))
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                r.add_term(e2, c.mul_ref(&F::from_i64(e[i] as i64)));
            }
        }
        r
    }

    /// Substitution `x_i -> signs[i] x_i` with `signs[i] = +-1`.
    pub fn flip_signs(&self, negate: &[bool]) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let odd = e.iter().zip(negate).filter(|(k, n)| **n && *k % 2 == 1).count();
            let c = if odd % 2 == 1 { c.neg_ref() } else { c.clone() };
            r.add_term(e.clone(), c);
        }
        r
    }

    pub fn eval_with<E: Field>(&self, pt: &[E], embed: impl Fn(&F) -> E) -> E {
        assert_eq!(pt.len(), self.nvars);
        self.terms.iter().fold(E::zero(), |acc, (e, c)| {
            let m = e.iter().zip(pt).fold(embed(c), |m, (k, x)| m.mul_ref(&x.pow(*k as u64)));
            acc.add_ref(&m)
        })
    }

    pub fn to_string_vars(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .zip(names)
                .filter(|(k, _)| **k > 0)
                .map(|(k, v)| if *k == 1 { v.to_string() } else { format!("{v}^{k}") })
                .collect();
            let cs = c.to_string();
            let term = match (mono.is_empty(), cs.as_str()) {
                (true, _) => cs,
                (false, "1") => mono.join("*"),
                (false, "-1") => format!("-{}", mono.join("*")),
                _ => format!("{cs}*{}", mono.join("*")),
            };
            parts.push(term);
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl<F: Field> fmt::Display for MPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        write!(f, "{}", self.to_string_vars(&refs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;

    type M = MPoly<Rational>;

    #[test]
    fn arithmetic_and_derivatives() {
        let (x, y) = (M::var(2, 0), M::var(2, 1));
        let p = x.mul(&x).sub(&y.mul(&y).scale(&Rational::from_i64(3)));
        assert_eq!(p.to_string_vars(&["x", "y"]), "x^2 - 3*y^2");
        assert_eq!(p.derivative(1), y.scale(&Rational::from_i64(-6)));
        let pt = [Rational::from_i64(2), Rational::from_i64(1)];
        assert_eq!(p.eval_with(&pt, |c| c.clone()), Rational::from_i64(1));
        assert_eq!(p.flip_signs(&[true, false]), p);
        assert_eq!(x.mul(&y).flip_signs(&[true, false]), x.mul(&y).scale(&Rational::from_i64(-1)));
        // (xy)^2 + 1 through a univariate
        let u = M::univariate_at(&Poly::from_i64s(&[1, 0, 1]), &x.mul(&y));
        assert_eq!(u.to_string_vars(&["x", "y"]), "x^2*y^2 + 1");
    }
}
