//! Number fields `Q[x]/(m)` presented by a monic irreducible polynomial.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::factor::is_irreducible;
use super::field::Field;
use super::poly::Poly;
use super::rational::Rational;
use super::ArithError;

#[derive(Debug, PartialEq)]
pub struct NumberField {
    min_poly: Poly<Rational>,
    name: String,
}

impl NumberField {
    /// Validates irreducibility; the polynomial is made monic.
    pub fn new(min_poly: Poly<Rational>, name: &str) -> Result<Arc<Self>, ArithError> {
        if min_poly.deg0() == 0 {
            return Err(ArithError::Invalid("minimal polynomial must have positive degree".into()));
        }
        if !is_irreducible(&min_poly) {
            return Err(ArithError::Reducible(min_poly.to_string_var("x")));
        }
        Ok(Self::new_unchecked(min_poly, name))
    }

    /// For polynomials already known to be irreducible.
    pub fn new_unchecked(min_poly: Poly<Rational>, name: &str) -> Arc<Self> {
        Arc::new(NumberField { min_poly: min_poly.monic(), name: name.to_string() })
    }

    pub fn min_poly(&self) -> &Poly<Rational> {
        &self.min_poly
    }

    pub fn degree(&self) -> usize {
        self.min_poly.deg0()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generator(self: &Arc<Self>) -> NfElem {
        self.elem(Poly::x())
    }

    /// Element with the given coordinates in the power basis, reduced.
    pub fn elem(self: &Arc<Self>, coords: Poly<Rational>) -> NfElem {
        NfElem { field: Some(self.clone()), coords: coords.rem(&self.min_poly) }
    }

    pub fn from_rational(self: &Arc<Self>, q: Rational) -> NfElem {
        self.elem(Poly::constant(q))
    }

    pub fn same_as(&self, other: &NumberField) -> bool {
        std::ptr::eq(self, other) || self.min_poly == other.min_poly
    }
}

/// Element of a number field; rational constants may omit the field.
#[derive(Clone, Debug)]
pub struct NfElem {
    field: Option<Arc<NumberField>>,
    coords: Poly<Rational>,
}

fn merge(a: &Option<Arc<NumberField>>, b: &Option<Arc<NumberField>>) -> Option<Arc<NumberField>> {
    match (a, b) {
        (Some(x), Some(y)) => {
            assert!(x.same_as(y), "mixing elements of different number fields");
            Some(x.clone())
        }
        (Some(x), None) | (None, Some(x)) => Some(x.clone()),
        (None, None) => None,
    }
}

impl NfElem {
    pub fn field(&self) -> Option<&Arc<NumberField>> {
        self.field.as_ref()
    }

    /// Power-basis coordinates, degree below the field degree.
    pub fn coords(&self) -> &Poly<Rational> {
        &self.coords
    }

    pub fn with_field(&self, k: &Arc<NumberField>) -> NfElem {
        k.elem(self.coords.clone())
    }

    fn build(field: Option<Arc<NumberField>>, coords: Poly<Rational>) -> Self {
        match &field {
            Some(k) if coords.deg0() >= k.degree() => {
                let c = coords.rem(&k.min_poly);
                NfElem { field, coords: c }
            }
            None => {
                assert!(coords.is_constant(), "non-constant element without a field");
                NfElem { field, coords }
            }
            _ => NfElem { field, coords },
        }
    }

    /// Norm to Q: resultant of the minimal polynomial and the coordinates.
    pub fn norm(&self) -> Rational {
        match &self.field {
            None => self.coords.coeff(0),
            Some(k) => Poly::resultant(&k.min_poly, &self.coords),
        }
    }

    pub fn trace(&self) -> Rational {
        self.char_poly().coeff(self.degree_of_field() - 1).neg_ref()
    }

    fn degree_of_field(&self) -> usize {
        self.field.as_ref().map_or(1, |k| k.degree())
    }

    /// Characteristic polynomial of multiplication by `self`, over Q.
    pub fn char_poly(&self) -> Poly<Rational> {
        let Some(k) = &self.field else {
            return Poly::linear_root(&self.coords.coeff(0));
        };
        // res_y(m(y), x - a(y)) interpolated in x.
        let n = k.degree();
        let pts: Vec<(Rational, Rational)> = (0..=n as i64)
            .map(|i| {
                let xi = Rational::from_i64(i);
                let h = &Poly::constant(xi.clone()) - &self.coords;
                (xi, Poly::resultant(&k.min_poly, &h))
            })
            .collect();
        Poly::interpolate(&pts)
    }

    /// Minimal polynomial over Q (monic irreducible).
    pub fn min_poly(&self) -> Poly<Rational> {
        self.char_poly().squarefree_part()
    }

    /// Evaluates a rational polynomial at this element.
    pub fn eval_rational_poly(&self, p: &Poly<Rational>) -> NfElem {
        p.eval_with(self, NfElem::from_rational)
    }
}

impl PartialEq for NfElem {
    fn eq(&self, o: &Self) -> bool {
        if let (Some(a), Some(b)) = (&self.field, &o.field) {
            if !a.same_as(b) {
                return false;
            }
        }
        self.coords == o.coords
    }
}

impl Field for NfElem {
    fn zero() -> Self {
        NfElem { field: None, coords: Poly::zero() }
    }
    fn one() -> Self {
        NfElem { field: None, coords: Poly::one() }
    }
    fn from_rational(q: &Rational) -> Self {
        NfElem { field: None, coords: Poly::constant(q.clone()) }
    }
    fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        if self.coords.is_zero() {
            return None;
        }
        match &self.field {
            None => Some(Self::from_rational(&self.coords.coeff(0).inv()?)),
            Some(k) => {
                let i = self.coords.inverse_mod(&k.min_poly)?;
                Some(NfElem { field: self.field.clone(), coords: i })
            }
        }
    }
    fn to_rational(&self) -> Option<Rational> {
        self.coords.is_constant().then(|| self.coords.coeff(0))
    }
    fn add_ref(&self, o: &Self) -> Self {
        NfElem { field: merge(&self.field, &o.field), coords: &self.coords + &o.coords }
    }
    fn sub_ref(&self, o: &Self) -> Self {
        NfElem { field: merge(&self.field, &o.field), coords: &self.coords - &o.coords }
    }
    fn mul_ref(&self, o: &Self) -> Self {
        Self::build(merge(&self.field, &o.field), &self.coords * &o.coords)
    }
    fn neg_ref(&self) -> Self {
        NfElem { field: self.field.clone(), coords: -&self.coords }
    }
}

impl fmt::Display for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.field.as_ref().map_or("w", |k| k.name());
        f.write_str(&self.coords.to_string_var(name))
    }
}

impl Add for NfElem {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.add_ref(&o)
    }
}
impl Sub for NfElem {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.sub_ref(&o)
    }
}
impl Mul for NfElem {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.mul_ref(&o)
    }
}
impl Neg for NfElem {
    type Output = Self;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;

    #[test]
    fn construction_validates() {
        assert!(NumberField::new(Poly::from_i64s(&[-2, 0, 1]), "r").is_ok());
        let e = NumberField::new(Poly::from_i64s(&[-4, 0, 1]), "r").unwrap_err();
        assert!(matches!(e, ArithError::Reducible(_)));
    }

    #[test]
    fn arithmetic_in_quadratic_field() {
        let k = NumberField::new(Poly::from_i64s(&[-2, 0, 1]), "r").unwrap();
        let r = k.generator();
        let a = NfElem::from_i64(2) + r.clone();
        assert_eq!(a.norm(), int(2));
        assert_eq!(a.trace(), int(4));
        assert_eq!(r.clone() * r.clone(), NfElem::from_i64(2));
        let ai = a.inv().unwrap();
        assert_eq!(ai * a.clone(), NfElem::one());
        assert_eq!(a.min_poly(), Poly::from_i64s(&[2, -4, 1]));
        assert_eq!(a.to_string(), "r + 2");
    }
}
