//! Polynomials over a number field: norms, factorization (Trager), roots, and
//! absolute presentations of relative extensions `K[x]/(pi)`.

use std::sync::Arc;

use super::factor::factor_squarefree;
use super::field::Field;
use super::linalg::{inverse, Matrix};
use super::numfield::{NfElem, NumberField};
use super::poly::Poly;
use super::rational::Rational;
use super::ArithError;

type Q = Rational;

pub fn embed_poly(k: &Arc<NumberField>, p: &Poly<Q>) -> Poly<NfElem> {
    p.map(|c| k.from_rational(c.clone()))
}

/// `N_{K/Q}(g)`, the product of the conjugates of `g`, by interpolation.
pub fn poly_norm(k: &Arc<NumberField>, g: &Poly<NfElem>) -> Poly<Q> {
    let deg = g.deg0() * k.degree();
    let pts: Vec<(Q, Q)> = (0..=deg as i64)
        .map(|i| {
            let x = Q::from_i64(i);
            let v = g.eval(&NfElem::from_rational(&x)).with_field(k);
            (x, v.norm())
        })
        .collect();
    Poly::interpolate(&pts)
}

/// Monic irreducible factors over `K` with multiplicities.
pub fn factor_over(k: &Arc<NumberField>, f: &Poly<NfElem>) -> Vec<(Poly<NfElem>, usize)> {
    let mut out = Vec::new();
    for (sf, m) in f.squarefree_decomposition() {
        for g in trager(k, &sf) {
            out.push((g, m));
        }
    }
    out
}

pub fn factor_rational_over(k: &Arc<NumberField>, f: &Poly<Q>) -> Vec<(Poly<NfElem>, usize)> {
    factor_over(k, &embed_poly(k, f))
}

fn shifts() -> impl Iterator<Item = i64> {
    (0i64..).flat_map(|s| if s == 0 { vec![0] } else { vec![s, -s] })
}

fn trager(k: &Arc<NumberField>, g: &Poly<NfElem>) -> Vec<Poly<NfElem>> {
    let g = g.monic();
    if g.deg0() <= 1 {
        return vec![g];
    }
    let theta = k.generator();
    for s in shifts().take(64) {
        let st = theta.mul_ref(&NfElem::from_i64(s));
        let back = Poly::from_coeffs(vec![st.neg_ref(), NfElem::one()]);
        let fwd = Poly::from_coeffs(vec![st, NfElem::one()]);
        let gs = g.compose(&back);
        let norm = poly_norm(k, &gs);
        if !norm.is_squarefree() {
            continue;
        }
        let facs = factor_squarefree(&norm);
        if facs.len() == 1 {
            return vec![g];
        }
        return facs
            .iter()
            .map(|ni| Poly::gcd(&gs, &embed_poly(k, ni)).compose(&fwd).monic())
            .collect();
    }
    unreachable!("some shift gives a squarefree norm")
}

pub fn is_irreducible_over(k: &Arc<NumberField>, f: &Poly<NfElem>) -> bool {
    let fs = factor_over(k, f);
    fs.len() == 1 && fs[0].1 == 1 && f.deg0() > 0
}

/// Distinct roots in `K` of a polynomial over `K`.
pub fn roots_over(k: &Arc<NumberField>, f: &Poly<NfElem>) -> Vec<NfElem> {
    factor_over(k, f)
        .into_iter()
        .filter(|(g, _)| g.deg0() == 1)
        .map(|(g, _)| g.coeff(0).neg_ref().with_field(k))
        .collect()
}

pub fn rational_poly_roots_in(k: &Arc<NumberField>, f: &Poly<Q>) -> Vec<NfElem> {
    roots_over(k, &embed_poly(k, f))
}

/// `K[x]/(pi)` presented as `Q[z]/(M)`, with the images of the generator of `K`
/// and of `x`.
#[derive(Clone, Debug)]
pub struct Absolute {
    pub field: Arc<NumberField>,
    pub base_image: NfElem,
    pub top_image: NfElem,
}

impl Absolute {
    pub fn embed_base(&self, a: &NfElem) -> NfElem {
        a.coords().eval_with(&self.base_image, |c| self.field.from_rational(c.clone()))
    }

    /// Image of the class of `p` in `K[x]/(pi)`.
    pub fn embed(&self, p: &Poly<NfElem>) -> NfElem {
        p.eval_with(&self.top_image, |c| self.embed_base(c))
    }

    pub fn embed_rational_poly(&self, p: &Poly<Q>) -> NfElem {
        self.top_image.eval_rational_poly(p)
    }
}

fn flatten(k: &Arc<NumberField>, a: &Poly<NfElem>, e: usize) -> Vec<Q> {
    let d = k.degree();
    let mut v = Vec::with_capacity(d * e);
    for j in 0..e {
        let c = a.coeff(j);
        for i in 0..d {
            v.push(c.coords().coeff(i));
        }
    }
    v
}

/// Absolute presentation of `K[x]/(pi)` for `pi` irreducible over `K` via the
/// primitive element `x + s*theta`. Reducible `pi` is reported as an error.
pub fn absolutize(k: &Arc<NumberField>, pi: &Poly<NfElem>, name: &str) -> Result<Absolute, ArithError> {
    let pi = pi.monic();
    let e = pi.deg0();
    if e == 0 {
        return Err(ArithError::Invalid("constant modulus".into()));
    }
    let n = e * k.degree();
    let theta = Poly::constant(k.generator());
    let x = Poly::x();
    for s in shifts().take(64) {
        let z = &x + &theta.scale(&NfElem::from_i64(s));
        let mut pows = vec![Poly::one()];
        for _ in 0..n {
            let next = (pows.last().unwrap() * &z).rem(&pi);
            pows.push(next);
        }
        // Columns are the power-basis coordinates of z^0, ..., z^(n-1).
        let cols: Vec<Vec<Q>> = pows[..n].iter().map(|p| flatten(k, p, e)).collect();
        let c: Matrix<Q> = (0..n).map(|r| (0..n).map(|j| cols[j][r].clone()).collect()).collect();
        let Some(ci) = inverse(&c) else {
            continue;
        };
        let solve = |target: &Poly<NfElem>| -> Poly<Q> {
            let t = flatten(k, target, e);
            Poly::from_coeffs(
                ci.iter().map(|row| row.iter().zip(&t).fold(Q::zero(), |a, (u, v)| a + u * v)).collect(),
            )
        };
        let low = solve(&pows[n]);
        let m = &Poly::monomial(Q::one(), n) - &low;
        if !super::factor::is_irreducible(&m) {
            return Err(ArithError::Reducible(format!("{}", pi)));
        }
        let field = NumberField::new_unchecked(m, name);
        let base_image = field.elem(solve(&theta));
        let top_image = field.elem(solve(&x.rem(&pi)));
        return Ok(Absolute { field, base_image, top_image });
    }
    Err(ArithError::Invalid("no primitive element found".into()))
}

/// `Q[x]/(pi)` as a number field, or `K[x]/(pi)` absolutized when `K` is given.
pub fn residue_field(
    k: Option<&Arc<NumberField>>,
    pi: &Poly<NfElem>,
    name: &str,
) -> Result<Absolute, ArithError> {
    match k {
        Some(k) => absolutize(k, pi, name),
        None => {
            let m = pi.to_rational_poly().ok_or_else(|| ArithError::Invalid("coefficients outside Q".into()))?;
            let field = NumberField::new(m, name)?;
            let g = field.generator();
            Ok(Absolute { base_image: field.from_rational(Q::one()), top_image: g, field })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;

    fn qi() -> Arc<NumberField> {
        NumberField::new(Poly::from_i64s(&[1, 0, 1]), "i").unwrap()
    }

    #[test]
    fn factor_over_gaussian() {
        let k = qi();
        // x^4 + 1 = (x^2 - i)(x^2 + i) over Q(i)
        let f = embed_poly(&k, &Poly::from_i64s(&[1, 0, 0, 0, 1]));
        let fs = factor_over(&k, &f);
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|(g, m)| g.deg0() == 2 && *m == 1));
        let prod = fs.iter().fold(Poly::one(), |a, (g, _)| &a * g);
        assert_eq!(prod, f);
        // x^2 + 1 has roots +-i
        let r = rational_poly_roots_in(&k, &Poly::from_i64s(&[1, 0, 1]));
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|z| (z.square() + NfElem::one()).is_zero()));
        // x^2 - 2 stays irreducible
        assert!(is_irreducible_over(&k, &embed_poly(&k, &Poly::from_i64s(&[-2, 0, 1]))));
    }

    #[test]
    fn compositum_of_quadratics() {
        let k = qi();
        let pi = embed_poly(&k, &Poly::from_i64s(&[-2, 0, 1]));
        let a = absolutize(&k, &pi, "z").unwrap();
        assert_eq!(a.field.degree(), 4);
        let i = &a.base_image;
        let r2 = &a.top_image;
        assert!((i.square() + NfElem::one()).is_zero());
        assert!((r2.square() - NfElem::from_i64(2)).is_zero());
        // (1 + i)^2 = 2i, so 2i = r2^2 * i
        let lhs = (i.clone() + NfElem::one()).square();
        assert_eq!(lhs, r2.square() * i.clone());
        let reducible = embed_poly(&k, &Poly::from_i64s(&[4, 0, 1]));
        assert!(absolutize(&k, &reducible, "z").is_err());
        assert_eq!(a.embed_base(&k.from_rational(int(3))), a.field.from_rational(int(3)));
        // Linear places: x maps to the root.
        let lin = Poly::from_coeffs(vec![k.generator().neg_ref() - NfElem::from_i64(2), NfElem::one()]);
        let a = absolutize(&k, &lin, "z").unwrap();
        assert_eq!(a.top_image, a.base_image.clone() + a.field.from_rational(int(2)));
    }
}
