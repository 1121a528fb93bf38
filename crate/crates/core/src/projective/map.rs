//! Binary forms and rational self-maps of the projective line.

use std::fmt;

use crate::arith::{Field, Poly, RatFunc};

use super::matrix::ProjMatrix;
use super::ProjectiveError;

/// A homogeneous form of degree `deg` in `(x, y)`, stored as its
/// dehomogenization `F(x, 1)`. The coefficient of `x^i y^(deg-i)` is
/// `poly.coeff(i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryForm<F> {
    poly: Poly<F>,
    deg: usize,
}

impl<F: Field> BinaryForm<F> {
    pub fn new(poly: Poly<F>, deg: usize) -> Result<Self, ProjectiveError> {
        if poly.degree().is_some_and(|d| d > deg) {
            return Err(ProjectiveError::Invalid(format!("form of degree {deg} with x-degree {}", poly.deg0())));
        }
        Ok(BinaryForm { poly, deg })
    }

    /// From coefficients of `x^i y^(d-i)`, `i = 0..=d`.
    pub fn from_coeffs(c: Vec<F>) -> Self {
        assert!(!c.is_empty(), "a form needs at least one coefficient");
        let deg = c.len() - 1;
        BinaryForm { poly: Poly::from_coeffs(c), deg }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&a| F::from_i64(a)).collect())
    }

    pub fn x() -> Self {
        BinaryForm { poly: Poly::x(), deg: 1 }
    }

    pub fn y() -> Self {
        BinaryForm { poly: Poly::one(), deg: 1 }
    }

    pub fn constant(a: F) -> Self {
        BinaryForm { poly: Poly::constant(a), deg: 0 }
    }

    pub fn degree(&self) -> usize {
        self.deg
    }

    pub fn dehomogenized(&self) -> &Poly<F> {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn coeffs(&self) -> Vec<F> {
        (0..=self.deg).map(|i| self.poly.coeff(i)).collect()
    }

    /// Exponent of the largest power of `y` dividing the form.
    fn y_valuation(&self) -> usize {
        self.deg - self.poly.deg0()
    }

    pub fn scale(&self, a: &F) -> Self {
        BinaryForm { poly: self.poly.scale(a), deg: self.deg }
    }

    pub fn mul(&self, o: &Self) -> Self {
        BinaryForm { poly: &self.poly * &o.poly, deg: self.deg + o.deg }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.deg, o.deg, "adding forms of different degrees");
        BinaryForm { poly: &self.poly + &o.poly, deg: self.deg }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&F::from_i64(-1)))
    }

    pub fn pow(&self, e: usize) -> Self {
        BinaryForm { poly: self.poly.pow(e as u64), deg: self.deg * e }
    }

    /// `F(g0, g1)` for forms `g0`, `g1` of a common degree.
    pub fn substitute(&self, g0: &Self, g1: &Self) -> Self {
        assert_eq!(g0.deg, g1.deg, "substituting forms of different degrees");
        let d = self.deg;
        let p0: Vec<Self> = std::iter::successors(Some(Self::constant(F::one())), |p| Some(p.mul(g0))).take(d + 1).collect();
        let p1: Vec<Self> = std::iter::successors(Some(Self::constant(F::one())), |p| Some(p.mul(g1))).take(d + 1).collect();
        let mut acc = BinaryForm { poly: Poly::zero(), deg: d * g0.deg };
        for i in 0..=d {
            let c = self.poly.coeff(i);
            if !c.is_zero() {
                acc = acc.add(&p0[i].mul(&p1[d - i]).scale(&c));
            }
        }
        acc
    }

    /// Monic gcd (in the dehomogenized chart) of two forms, not both zero.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        let g = Poly::gcd(&a.poly, &b.poly);
        let v = a.y_valuation().min(b.y_valuation());
        let deg = g.deg0() + v;
        BinaryForm { poly: g, deg }
    }

    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let q = self.poly.exact_div(&d.poly)?;
        let deg = self.deg.checked_sub(d.deg)?;
        Self::new(q, deg).ok()
    }

    pub fn eval(&self, x: &F, y: &F) -> F {
        self.coeffs()
            .iter()
            .enumerate()
            .fold(F::zero(), |acc, (i, c)| acc.add_ref(&c.mul_ref(&x.pow(i as u64)).mul_ref(&y.pow((self.deg - i) as u64))))
    }

    pub fn map_coeffs<E: Field>(&self, f: impl Fn(&F) -> E) -> BinaryForm<E> {
        BinaryForm { poly: self.poly.map(f), deg: self.deg }
    }

    pub fn to_string_vars(&self, x: &str, y: &str) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let j = self.deg - i;
            let mono = [(x, i), (y, j)]
                .iter()
                .filter(|(_, e)| *e > 0)
                .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect::<Vec<_>>()
                .join("*");
            let cs = c.to_string();
            let term = match (mono.is_empty(), cs.as_str()) {
                (true, _) => cs.clone(),
                (false, "1") => mono,
                (false, "-1") => format!("-{mono}"),
                _ if cs.contains(['+', ' ']) || cs[1..].contains('-') => format!("({cs})*{mono}"),
                _ => format!("{cs}*{mono}"),
            };
            parts.push(term);
        }
        if parts.is_empty() {
            return "0".into();
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

/// `(x:y) -> (F0(x,y) : F1(x,y))` with coprime forms of a common degree `>= 1`.
#[derive(Clone, Debug)]
pub struct ProjectiveMap<F> {
    f0: BinaryForm<F>,
    f1: BinaryForm<F>,
}

impl<F: Field> ProjectiveMap<F> {
    /// Reduces by the gcd of the two forms.
    pub fn new(f0: BinaryForm<F>, f1: BinaryForm<F>) -> Result<Self, ProjectiveError> {
        if f0.deg != f1.deg {
            return Err(ProjectiveError::Invalid(format!("form degrees {} and {} differ", f0.deg, f1.deg)));
        }
        if f0.is_zero() && f1.is_zero() {
            return Err(ProjectiveError::Invalid("both forms are zero".into()));
        }
        let g = BinaryForm::gcd(&f0, &f1);
        let (f0, f1) = if g.deg == 0 {
            (f0, f1)
        } else {
            (f0.exact_div(&g).expect("gcd divides"), f1.exact_div(&g).expect("gcd divides"))
        };
        if f0.deg == 0 {
            return Err(ProjectiveError::Invalid("constant map".into()));
        }
        Ok(ProjectiveMap { f0, f1 })
    }

    pub fn identity() -> Self {
        ProjectiveMap { f0: BinaryForm::x(), f1: BinaryForm::y() }
    }

    pub fn from_matrix(m: &ProjMatrix<F>) -> Self {
        let [a, b, c, d] = m.entries();
        ProjectiveMap {
            f0: BinaryForm::from_coeffs(vec![b.clone(), a.clone()]),
            f1: BinaryForm::from_coeffs(vec![d.clone(), c.clone()]),
        }
    }

    /// `(x^e : y^e)`.
    pub fn power_map(e: usize) -> Self {
        ProjectiveMap { f0: BinaryForm::x().pow(e), f1: BinaryForm::y().pow(e) }
    }

    pub fn forms(&self) -> (&BinaryForm<F>, &BinaryForm<F>) {
        (&self.f0, &self.f1)
    }

    pub fn degree(&self) -> usize {
        self.f0.deg
    }

    /// `self o inner`.
    pub fn compose(&self, inner: &Self) -> Self {
        let a = self.f0.substitute(&inner.f0, &inner.f1);
        let b = self.f1.substitute(&inner.f0, &inner.f1);
        Self::new(a, b).expect("composition of nonconstant maps")
    }

    /// The map in the chart `x = X/Y`.
    pub fn affine(&self) -> RatFunc<F> {
        RatFunc::new(self.f0.poly.clone(), self.f1.poly.clone()).expect("coprime forms are not both zero")
    }

    /// Whether the forms have no common zero on the projective line.
    pub fn resultant_nonzero(&self) -> bool {
        self.f0.y_valuation().min(self.f1.y_valuation()) == 0
            && !Poly::resultant(&self.f0.poly, &self.f1.poly).is_zero()
    }

    pub fn map_coeffs<E: Field>(&self, f: impl Fn(&F) -> E) -> Result<ProjectiveMap<E>, ProjectiveError> {
        ProjectiveMap::new(self.f0.map_coeffs(&f), self.f1.map_coeffs(&f))
    }
}

impl<F: Field> PartialEq for ProjectiveMap<F> {
    /// Equality up to a common scalar, by cross-multiplication.
    fn eq(&self, o: &Self) -> bool {
        self.f0.deg == o.f0.deg && self.f0.mul(&o.f1).sub(&self.f1.mul(&o.f0)).is_zero()
    }
}

impl<F: Field> fmt::Display for ProjectiveMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {})", self.f0.to_string_vars("x", "y"), self.f1.to_string_vars("x", "y"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;

    type B = BinaryForm<Rational>;
    type P = ProjectiveMap<Rational>;

    #[test]
    fn gcd_handles_the_point_at_infinity() {
        // x^2 y and x y^2 share x y
        let a = B::from_i64s(&[0, 0, 1, 0]);
        let b = B::from_i64s(&[0, 1, 0, 0]);
        let g = B::gcd(&a, &b);
        assert_eq!(g, B::from_i64s(&[0, 1, 0]));
        let m = P::new(a, b).unwrap();
        assert_eq!(m, P::new(B::x(), B::y()).unwrap());
        assert!(P::new(B::from_i64s(&[0, 1]), B::from_i64s(&[0, 2])).is_err());
    }

    #[test]
    fn composition_and_equality() {
        let sq = P::power_map(2);
        let cube = P::power_map(3);
        assert_eq!(sq.compose(&cube), P::power_map(6));
        let m = ProjMatrix::from_i64s(1, 2, 3, 4).unwrap();
        let n = ProjMatrix::from_i64s(0, 1, 1, 5).unwrap();
        let lhs = P::from_matrix(&m).compose(&P::from_matrix(&n));
        assert_eq!(lhs, P::from_matrix(&m.mul(&n)));
        assert_eq!(sq.affine(), RatFunc::from_poly(Poly::from_i64s(&[0, 0, 1])));
        let scaled = P::new(sq.forms().0.scale(&Rational::from_i64(3)), sq.forms().1.scale(&Rational::from_i64(3))).unwrap();
        assert_eq!(scaled, sq);
        assert_ne!(sq, P::identity());
    }

    #[test]
    fn display_and_evaluation() {
        let f = B::from_i64s(&[1, 0, 0, 0, 7, 0, 0, 0]);
        assert_eq!(f.to_string_vars("x", "y"), "7*x^4*y^3 + y^7");
        assert_eq!(f.eval(&Rational::from_i64(1), &Rational::from_i64(2)), Rational::from_i64(7 * 8 + 128));
    }
}
