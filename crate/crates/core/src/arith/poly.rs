//! Dense univariate polynomials over any [`Field`], lowest degree first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;
use super::rational::Rational;
use super::ArithError;

/// Dense polynomial; the coefficient vector never ends in a zero, so the zero
/// polynomial is the empty vector and has no degree.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<F> {
    c: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(a: F) -> Self {
        Self::from_coeffs(vec![a])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn monomial(a: F, k: usize) -> Self {
        let mut c = vec![F::zero(); k];
        c.push(a);
        Self::from_coeffs(c)
    }

    pub fn from_coeffs(c: Vec<F>) -> Self {
        let mut p = Poly { c };
        p.trim();
        p
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&a| F::from_i64(a)).collect())
    }

    pub fn from_rationals(c: &[Rational]) -> Self {
        Self::from_coeffs(c.iter().map(F::from_rational).collect())
    }

    /// Monic linear polynomial `x - a`.
    pub fn linear_root(a: &F) -> Self {
        Self::from_coeffs(vec![a.neg_ref(), F::one()])
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(|a| a.is_zero()) {
            self.c.pop();
        }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.c
    }

    pub fn coeff(&self, i: usize) -> F {
        self.c.get(i).cloned().unwrap_or_else(F::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn leading(&self) -> Option<&F> {
        self.c.last()
    }

    pub fn lc(&self) -> F {
        self.leading().cloned().unwrap_or_else(F::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|a| a.is_one())
    }

    pub fn scale(&self, a: &F) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.c.iter().map(|b| b.mul_ref(a)).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![F::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn divrem(&self, d: &Self) -> Result<(Self, Self), ArithError> {
        let dd = d.degree().ok_or(ArithError::DivisionByZero)?;
        let linv = d.lc().inv().ok_or(ArithError::DivisionByZero)?;
        let mut r = self.c.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![F::zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            if r[i].is_zero() {
                continue;
            }
            let f = r[i].mul_ref(&linv);
            for (j, dj) in d.c.iter().enumerate() {
                let idx = i - dd + j;
                r[idx] = r[idx].sub_ref(&f.mul_ref(dj));
            }
            q[i - dd] = f;
        }
        r.truncate(dd);
        Ok((Self::from_coeffs(q), Self::from_coeffs(r)))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).expect("nonzero divisor").1
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.rem(self).is_zero()
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if let Some(g) = F::poly_gcd(a, b) {
            return g;
        }
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic gcd of `p` and `q` together with the squarefree part of `p`.
    pub fn gcd_squarefree(p: &Self, q: &Self) -> Result<(Self, Self), ArithError> {
        if p.is_zero() && q.is_zero() {
            return Err(ArithError::Invalid("undefined gcd".into()));
        }
        Ok((Self::gcd(p, q), p.squarefree_part()))
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g` and `g` the monic gcd.
    pub fn ext_gcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r2) = r0.divrem(&r1).expect("nonzero");
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r2);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.leading() {
            None => (r0, s0, t0),
            Some(l) => {
                let li = l.inv().expect("nonzero");
                (r0.scale(&li), s0.scale(&li), t0.scale(&li))
            }
        }
    }

    /// Inverse of `self` modulo `m`, if they are coprime.
    pub fn inverse_mod(&self, m: &Self) -> Option<Self> {
        let (g, s, _) = Self::ext_gcd(&self.rem(m), m);
        g.is_one().then(|| s.rem(m))
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a.mul_ref(&F::from_i64(i as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &F) -> F {
        self.c.iter().rev().fold(F::zero(), |acc, a| acc.mul_ref(x).add_ref(a))
    }

    /// Evaluates at a point of another field via a coefficient embedding.
    pub fn eval_with<E: Field>(&self, x: &E, embed: impl Fn(&F) -> E) -> E {
        self.c.iter().rev().fold(E::zero(), |acc, a| acc.mul_ref(x).add_ref(&embed(a)))
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.c
            .iter()
            .rev()
            .fold(Self::zero(), |acc, a| &(&acc * inner) + &Self::constant(a.clone()))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn map<E: Field>(&self, f: impl Fn(&F) -> E) -> Poly<E> {
        Poly::from_coeffs(self.c.iter().map(f).collect())
    }

    /// Rational-coefficient view, when every coefficient lies in Q.
    pub fn to_rational_poly(&self) -> Option<Poly<Rational>> {
        let c: Option<Vec<Rational>> = self.c.iter().map(|a| a.to_rational()).collect();
        Some(Poly::from_coeffs(c?))
    }

    pub fn is_squarefree(&self) -> bool {
        Self::gcd(self, &self.derivative()).is_constant()
    }

    /// Monic polynomial with the same roots as `self`, each simple.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = Self::gcd(self, &self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Yun's algorithm: monic squarefree, pairwise coprime `(factor, multiplicity)`
    /// pairs whose product times `lc` is `self`.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = Self::gcd(&f, &df);
        let mut b = f.exact_div(&a0).expect("divides");
        let mut c = df.exact_div(&a0).expect("divides");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let a = Self::gcd(&b, &d);
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a).expect("divides");
            c = d.exact_div(&a).expect("divides");
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Product of the factors of odd multiplicity, times the leading coefficient.
    /// Equal to `self` up to a square factor.
    pub fn square_class_part(&self) -> Self {
        let mut acc = Self::constant(self.lc());
        for (f, m) in self.squarefree_decomposition() {
            if m % 2 == 1 {
                acc = &acc * &f;
            }
        }
        acc
    }

    /// Resultant, with `res(a, b) = lc(a)^deg(b) * prod b(roots of a)`.
    pub fn resultant(a: &Self, b: &Self) -> F {
        let (Some(mut m), Some(mut n)) = (a.degree(), b.degree()) else {
            return F::zero();
        };
        let (mut a, mut b) = (a.clone(), b.clone());
        let mut acc = F::one();
        loop {
            if n == 0 {
                return acc.mul_ref(&b.lc().pow(m as u64));
            }
            let r = a.rem(&b);
            let Some(k) = r.degree() else {
                return F::zero();
            };
            if (m * n) % 2 == 1 {
                acc = acc.neg_ref();
            }
            acc = acc.mul_ref(&b.lc().pow((m - k) as u64));
            a = b;
            b = r;
            m = n;
            n = k;
        }
    }

    pub fn discriminant(&self) -> F {
        let n = self.deg0();
        let r = Self::resultant(self, &self.derivative());
        let sign = if (n * (n.saturating_sub(1)) / 2) % 2 == 1 { F::from_i64(-1) } else { F::one() };
        sign.mul_ref(&r).div_checked(&self.lc()).unwrap_or_else(F::zero)
    }

    /// Lagrange interpolation through distinct abscissae.
    pub fn interpolate(points: &[(F, F)]) -> Self {
        // Newton divided differences.
        let n = points.len();
        let mut coef: Vec<F> = points.iter().map(|p| p.1.clone()).collect();
        for j in 1..n {
            for i in (j..n).rev() {
                let num = coef[i].sub_ref(&coef[i - 1]);
                let den = points[i].0.sub_ref(&points[i - j].0);
                coef[i] = num.div_checked(&den).expect("distinct abscissae");
            }
        }
        let mut acc = Self::zero();
        for i in (0..n).rev() {
            acc = &(&acc * &Self::linear_root(&points[i].0)) + &Self::constant(coef[i].clone());
        }
        acc
    }

    /// Pretty form in the given variable name, highest degree first.
    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<String> = Vec::new();
        for (k, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let s = a.to_string();
            let simple = !s[1..].contains(['+', '-', ' ']);
            let term = if k == 0 {
                if simple { s } else { format!("({s})") }
            } else if a.is_one() {
                mono
            } else if a.neg_ref().is_one() {
                format!("-{mono}")
            } else if simple {
                format!("{s}*{mono}")
            } else {
                format!("({s})*{mono}")
            };
            terms.push(term);
        }
        let mut out = String::new();
        for (i, t) in terms.iter().enumerate() {
            if i == 0 {
                out.push_str(t);
            } else if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
        out
    }
}

impl Poly<Rational> {
    /// Primitive integer polynomial with positive leading coefficient, and the
    /// rational factor `self = factor * primitive`.
    pub fn primitive_integer(&self) -> (Rational, Vec<num_bigint::BigInt>) {
        use num_integer::Integer;
        use num_traits::{Signed, Zero};
        if self.is_zero() {
            return (<Rational as Zero>::zero(), Vec::new());
        }
        let den = super::rational::common_denominator(self.c.iter());
        let ints: Vec<num_bigint::BigInt> =
            self.c.iter().map(|a| (a * Rational::from_integer(den.clone())).to_integer()).collect();
        let mut g = ints.iter().fold(num_bigint::BigInt::zero(), |g, a| g.gcd(a));
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim: Vec<_> = ints.iter().map(|a| a / &g).collect();
        (Rational::new(g, den), prim)
    }

    /// Monic gcd through the primitive remainder sequence over Z, which keeps
    /// coefficients near the size of the subresultants.
    pub fn primitive_gcd(a: &Self, b: &Self) -> Self {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::Zero;
        fn primitive(mut r: Vec<BigInt>) -> Vec<BigInt> {
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
            let g = r.iter().fold(BigInt::zero(), |g, a| g.gcd(a));
            if !g.is_zero() {
                r.iter_mut().for_each(|a| *a = &*a / &g);
            }
            r
        }
        if a.is_zero() || b.is_zero() {
            return if a.is_zero() { b.monic() } else { a.monic() };
        }
        let (mut u, mut v) = (a.primitive_integer().1, b.primitive_integer().1);
        if u.len() < v.len() {
            std::mem::swap(&mut u, &mut v);
        }
        while !v.is_empty() {
            // pseudo-remainder of u by v
            let lv = v.last().unwrap().clone();
            let mut r = u;
            while r.len() >= v.len() {
                let lr = r.last().unwrap().clone();
                let shift = r.len() - v.len();
                for c in r.iter_mut() {
                    *c *= &lv;
                }
                for (i, c) in v.iter().enumerate() {
                    r[shift + i] -= &lr * c;
                }
                r.pop();
                while r.last().is_some_and(|c| c.is_zero()) {
                    r.pop();
                }
            }
            u = v;
            v = primitive(r);
        }
        Self::from_integers(&u).monic()
    }

    pub fn from_integers(c: &[num_bigint::BigInt]) -> Self {
        Self::from_coeffs(c.iter().map(|a| Rational::from_integer(a.clone())).collect())
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_var("x"))
    }
}

impl<F: Field> Add<&Poly<F>> for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, o: &Poly<F>) -> Poly<F> {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => a.add_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::from_coeffs(c)
    }
}

impl<F: Field> Sub<&Poly<F>> for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, o: &Poly<F>) -> Poly<F> {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => a.sub_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg_ref(),
                (None, None) => unreachable!(),
            });
        }
        Poly::from_coeffs(c)
    }
}

impl<F: Field> Mul<&Poly<F>> for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, o: &Poly<F>) -> Poly<F> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![F::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = c[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Poly::from_coeffs(c)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly { c: self.c.iter().map(|a| a.neg_ref()).collect() }
    }
}

macro_rules! by_value {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr<Poly<F>> for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, o: Poly<F>) -> Poly<F> {
                (&self).$m(&o)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        -&self
    }
}
