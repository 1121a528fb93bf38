//! Quadratic extensions `F(sqrt D)` of any field, elements `u + v sqrt D`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::field::Field;
use super::rational::Rational;
use super::square::{SquareConfig, SquareOracle, SquareVerdict};
use super::ArithError;

#[derive(Debug, PartialEq)]
pub struct QuadField<F> {
    d: F,
    name: String,
}

impl<F: Field> QuadField<F> {
    /// Certifies that `d` is not a square in the base field before building.
    pub fn new(d: F, name: &str, cfg: &SquareConfig) -> Result<Arc<Self>, ArithError>
    where
        F: SquareOracle,
    {
        match d.square_verdict(cfg)? {
            SquareVerdict::NonSquare(_) => Ok(Self::new_unchecked(d, name)),
            SquareVerdict::Square(r) => Err(ArithError::SquareD(format!("{d} = ({r})^2"))),
            SquareVerdict::ProbablySquare { .. } => {
                Err(ArithError::Inconclusive(format!("could not certify {d} as a non-square")))
            }
        }
    }

    /// Formal ring `F[z]/(z^2 - d)`; a field only if `d` is a non-square.
    pub fn new_unchecked(d: F, name: &str) -> Arc<Self> {
        Arc::new(QuadField { d, name: name.to_string() })
    }

    pub fn d(&self) -> &F {
        &self.d
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn sqrt_d(self: &Arc<Self>) -> QuadElem<F> {
        self.elem(F::zero(), F::one())
    }

    pub fn elem(self: &Arc<Self>, u: F, v: F) -> QuadElem<F> {
        QuadElem { ext: Some(self.clone()), u, v }
    }

    pub fn embed(self: &Arc<Self>, u: F) -> QuadElem<F> {
        self.elem(u, F::zero())
    }
}

#[derive(Clone, Debug)]
pub struct QuadElem<F> {
    ext: Option<Arc<QuadField<F>>>,
    u: F,
    v: F,
}

impl<F: Field> QuadElem<F> {
    /// Element of the base field.
    pub fn base(u: F) -> Self {
        QuadElem { ext: None, u, v: F::zero() }
    }

    pub fn u(&self) -> &F {
        &self.u
    }

    pub fn v(&self) -> &F {
        &self.v
    }

    pub fn ext(&self) -> Option<&Arc<QuadField<F>>> {
        self.ext.as_ref()
    }

    pub fn in_base(&self) -> Option<F> {
        self.v.is_zero().then(|| self.u.clone())
    }

    pub fn conj(&self) -> Self {
        QuadElem { ext: self.ext.clone(), u: self.u.clone(), v: self.v.neg_ref() }
    }

    pub fn norm(&self) -> F {
        let uu = self.u.square();
        if self.v.is_zero() {
            return uu;
        }
        let d = self.d().expect("extension present when v != 0");
        uu.sub_ref(&d.mul_ref(&self.v.square()))
    }

    pub fn trace(&self) -> F {
        self.u.add_ref(&self.u)
    }

    fn d(&self) -> Option<&F> {
        self.ext.as_ref().map(|e| &e.d)
    }

    fn merge(&self, o: &Self) -> Option<Arc<QuadField<F>>> {
        match (&self.ext, &o.ext) {
            (Some(a), Some(b)) => {
                assert!(Arc::ptr_eq(a, b) || a.d == b.d, "mixing different quadratic extensions");
                Some(a.clone())
            }
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (None, None) => None,
        }
    }

    pub fn map_base(&self, f: impl Fn(&F) -> F) -> Self {
        QuadElem { ext: self.ext.clone(), u: f(&self.u), v: f(&self.v) }
    }
}

impl<F: Field> PartialEq for QuadElem<F> {
    fn eq(&self, o: &Self) -> bool {
        self.u == o.u && self.v == o.v
    }
}

impl<F: Field> Field for QuadElem<F> {
    fn zero() -> Self {
        Self::base(F::zero())
    }
    fn one() -> Self {
        Self::base(F::one())
    }
    fn from_rational(q: &Rational) -> Self {
        Self::base(F::from_rational(q))
    }
    fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm().inv()?;
        Some(QuadElem { ext: self.ext.clone(), u: self.u.mul_ref(&n), v: self.v.neg_ref().mul_ref(&n) })
    }
    fn to_rational(&self) -> Option<Rational> {
        self.in_base()?.to_rational()
    }
    fn add_ref(&self, o: &Self) -> Self {
        QuadElem { ext: self.merge(o), u: self.u.add_ref(&o.u), v: self.v.add_ref(&o.v) }
    }
    fn sub_ref(&self, o: &Self) -> Self {
        QuadElem { ext: self.merge(o), u: self.u.sub_ref(&o.u), v: self.v.sub_ref(&o.v) }
    }
    fn mul_ref(&self, o: &Self) -> Self {
        let ext = self.merge(o);
        let mut u = self.u.mul_ref(&o.u);
        if !self.v.is_zero() && !o.v.is_zero() {
            let d = &ext.as_ref().unwrap().d;
            u = u.add_ref(&d.mul_ref(&self.v.mul_ref(&o.v)));
        }
        let v = self.u.mul_ref(&o.v).add_ref(&self.v.mul_ref(&o.u));
        QuadElem { ext, u, v }
    }
    fn neg_ref(&self) -> Self {
        QuadElem { ext: self.ext.clone(), u: self.u.neg_ref(), v: self.v.neg_ref() }
    }
}

impl<F: Field> fmt::Display for QuadElem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            return write!(f, "{}", self.u);
        }
        let name = self.ext.as_ref().map_or("s", |e| e.name.as_str());
        if self.u.is_zero() {
            write!(f, "({})*{name}", self.v)
        } else {
            write!(f, "{} + ({})*{name}", self.u, self.v)
        }
    }
}

impl<F: Field> Add for QuadElem<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.add_ref(&o)
    }
}
impl<F: Field> Sub for QuadElem<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.sub_ref(&o)
    }
}
impl<F: Field> Mul for QuadElem<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.mul_ref(&o)
    }
}
impl<F: Field> Neg for QuadElem<F> {
    type Output = Self;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}
