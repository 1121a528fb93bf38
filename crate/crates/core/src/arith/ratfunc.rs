//! Rational functions `num/den` over a field, kept reduced with a monic denominator.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;
use super::poly::Poly;
use super::rational::Rational;
use super::ArithError;

#[derive(Clone, PartialEq, Debug)]
pub struct RatFunc<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFunc<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly<F>, den: Poly<F>) -> Self {
        if num.is_zero() {
            return RatFunc { num, den: Poly::one() };
        }
        let g = Poly::gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).expect("gcd"), den.exact_div(&g).expect("gcd"))
        };
        let l = den.lc();
        if !l.is_one() {
            let li = l.inv().expect("nonzero");
            num = num.scale(&li);
            den = den.scale(&li);
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(a: F) -> Self {
        Self::from_poly(Poly::constant(a))
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<F> {
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.coeff(0))
    }

    /// `max(deg num, deg den)`, the degree of the map to the projective line.
    pub fn map_degree(&self) -> usize {
        self.num.deg0().max(self.den.deg0())
    }

    pub fn eval(&self, x: &F) -> Option<F> {
        self.num.eval(x).div_checked(&self.den.eval(x))
    }

    /// Substitutes `inner` for the variable.
    pub fn compose(&self, inner: &Self) -> Self {
        eval_poly_at(&self.num, inner)
            .div_checked(&eval_poly_at(&self.den, inner))
            .expect("composition with a constant at a pole")
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::reduce(n, &self.den * &self.den)
    }

    pub fn map<E: Field>(&self, f: impl Fn(&F) -> E) -> RatFunc<E> {
        RatFunc::new(self.num.map(&f), self.den.map(&f)).expect("nonzero denominator")
    }

    pub fn to_string_var(&self, var: &str) -> String {
        if self.den.is_one() {
            return self.num.to_string_var(var);
        }
        let wrap = |p: &Poly<F>| {
            let s = p.to_string_var(var);
            if p.coeffs().iter().filter(|a| !a.is_zero()).count() > 1 { format!("({s})") } else { s }
        };
        format!("{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

/// `p(r)` for a polynomial `p` and a rational function `r`.
pub fn eval_poly_at<F: Field>(p: &Poly<F>, r: &RatFunc<F>) -> RatFunc<F> {
    // Homogenize to avoid intermediate reductions: sum p_i n^i d^(k-i) / d^k.
    let Some(k) = p.degree() else {
        return RatFunc::zero();
    };
    let mut acc = Poly::zero();
    let mut npow = Poly::one();
    let dpows: Vec<Poly<F>> =
        std::iter::successors(Some(Poly::one()), |q| Some(q * r.den())).take(k + 1).collect();
    for (i, a) in p.coeffs().iter().enumerate() {
        if !a.is_zero() {
            acc = &acc + &(&npow * &dpows[k - i]).scale(a);
        }
        npow = &npow * r.num();
    }
    RatFunc::reduce(acc, dpows[k].clone())
}

impl<F: Field> Field for RatFunc<F> {
    fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }
    fn one() -> Self {
        Self::constant(F::one())
    }
    fn from_rational(q: &Rational) -> Self {
        Self::constant(F::from_rational(q))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(Self::reduce(self.den.clone(), self.num.clone()))
    }
    fn to_rational(&self) -> Option<Rational> {
        self.as_constant()?.to_rational()
    }
    fn add_ref(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::reduce(&self.num + &o.num, self.den.clone());
        }
        Self::reduce(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }
    fn mul_ref(&self, o: &Self) -> Self {
        Self::reduce(&self.num * &o.num, &self.den * &o.den)
    }
    fn neg_ref(&self) -> Self {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl<F: Field> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_var("x"))
    }
}

impl<F: Field> Add for RatFunc<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.add_ref(&o)
    }
}
impl<F: Field> Sub for RatFunc<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.sub_ref(&o)
    }
}
impl<F: Field> Mul for RatFunc<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.mul_ref(&o)
    }
}
impl<F: Field> Neg for RatFunc<F> {
    type Output = Self;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}
