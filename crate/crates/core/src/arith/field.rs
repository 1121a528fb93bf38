use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::Rational;

/// A field of characteristic zero whose constants can be written down without
/// a context object.
///
/// Elements of extension fields carry their defining data with them, so
/// `zero()`, `one()` and `from_rational` can embed rational constants
/// and later combine with any element of the right field.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(q: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;
    /// The element as a rational number, when it lies in the prime field.
    fn to_rational(&self) -> Option<Rational>;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn add_ref(&self, o: &Self) -> Self {
        self.clone() + o.clone()
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.clone() - o.clone()
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self.clone() * o.clone()
    }
    fn neg_ref(&self) -> Self {
        -self.clone()
    }
    fn div_checked(&self, o: &Self) -> Option<Self> {
        Some(self.mul_ref(&o.inv()?))
    }
    fn square(&self) -> Self {
        self.mul_ref(self)
    }
    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }
    /// A faster gcd for polynomials over this field, when one is available.
    fn poly_gcd(_a: &Poly<Self>, _b: &Poly<Self>) -> Option<Poly<Self>> {
        None
    }
    /// Integer power, allowing negative exponents for nonzero elements.
    fn powi(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow(e as u64))
        } else {
            Some(self.inv()?.pow(e.unsigned_abs()))
        }
    }
}

impl Field for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Option<Poly<Self>> {
        Some(Poly::primitive_gcd(a, b))
    }
}
