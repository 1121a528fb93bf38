//! Cyclotomic polynomials and the real-cyclotomic constants `alpha_n = cos(2 pi / n)`,
//! `beta_n = alpha_n^2 - 1`, with explicit number-field presentations.

use std::sync::Arc;

use super::factor::factor;
use super::field::Field;
use super::numfield::{NfElem, NumberField};
use super::poly::Poly;
use super::rational::Rational;

type Q = Rational;

/// `Phi_n`, by exact division of `x^n - 1` by the lower cyclotomic factors.
pub fn cyclotomic_poly(n: usize) -> Poly<Q> {
    assert!(n >= 1);
    let mut p = &Poly::monomial(Q::one(), n) - &Poly::one();
    for d in 1..n {
        if n % d == 0 {
            p = p.exact_div(&cyclotomic_poly(d)).expect("cyclotomic factor divides");
        }
    }
    p
}

pub fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count()
}

/// Minimal polynomial of `cos(2 pi / n)`, from `Res_w(Phi_n(w), 2 x w - w^2 - 1)`.
pub fn half_cos_minpoly(n: usize) -> Poly<Q> {
    let phi = cyclotomic_poly(n);
    let deg = phi.deg0();
    // The resultant has x-degree deg(Phi_n); interpolate it.
    let pts: Vec<(Q, Q)> = (0..=deg as i64)
        .map(|i| {
            let x = Q::from_i64(i);
            let lin = Poly::from_coeffs(vec![Q::from_i64(-1), x.mul_ref(&Q::from_i64(2)), Q::from_i64(-1)]);
            (x, Poly::resultant(&phi, &lin))
        })
        .collect();
    let res = Poly::interpolate(&pts);
    let want = if n <= 2 { 1 } else { euler_phi(n) / 2 };
    factor(&res)
        .factors
        .into_iter()
        .map(|(f, _)| f)
        .find(|f| f.deg0() == want)
        .expect("resultant has the real cyclotomic factor")
}

/// `alpha_n` and `beta_n` in `Q(alpha_n)`; the field is `None` when `alpha_n` is rational.
#[derive(Clone, Debug)]
pub struct RealCyclotomic {
    pub n: usize,
    pub field: Option<Arc<NumberField>>,
    pub alpha: NfElem,
    pub beta: NfElem,
}

pub fn real_cyclotomic(n: usize) -> RealCyclotomic {
    let m = half_cos_minpoly(n);
    let (field, alpha) = if m.deg0() == 1 {
        (None, NfElem::from_rational(&-m.coeff(0)))
    } else {
        let k = NumberField::new_unchecked(m, &format!("a{n}"));
        let g = k.generator();
        (Some(k), g)
    };
    let beta = alpha.square() - NfElem::one();
    RealCyclotomic { n, field, alpha, beta }
}

/// `Q(omega_n)` presented by `Phi_n`, with `omega_n` its generator.
pub fn omega_field(n: usize) -> (Arc<NumberField>, NfElem) {
    let k = NumberField::new_unchecked(cyclotomic_poly(n), &format!("w{n}"));
    let w = k.generator();
    (k, w)
}

/// `alpha_n = (w + 1/w) / 2` inside `Q(omega_n)`.
pub fn alpha_in_omega_field(w: &NfElem, n: usize) -> NfElem {
    let _ = n;
    (w.clone() + w.inv().expect("root of unity")).mul_ref(&NfElem::from_rational(&Rational::new(1.into(), 2.into())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic_poly(1), Poly::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic_poly(4), Poly::from_i64s(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), Poly::from_i64s(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), Poly::from_i64s(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_poly(5).deg0(), 4);
    }

    #[test]
    fn half_cosines() {
        // cos(2pi/3) = -1/2, cos(pi/2) = 0, cos(pi/3) = 1/2
        assert_eq!(real_cyclotomic(3).alpha.to_rational(), Some(rat(-1, 2)));
        assert_eq!(real_cyclotomic(4).alpha.to_rational(), Some(rat(0, 1)));
        assert_eq!(real_cyclotomic(4).beta.to_rational(), Some(rat(-1, 1)));
        assert_eq!(real_cyclotomic(6).alpha.to_rational(), Some(rat(1, 2)));
        // cos(pi/4)^2 = 1/2
        assert_eq!(half_cos_minpoly(8), Poly::from_coeffs(vec![rat(-1, 2), rat(0, 1), rat(1, 1)]));
        // cos(2pi/5): 4x^2 + 2x - 1
        assert_eq!(half_cos_minpoly(5), Poly::from_coeffs(vec![rat(-1, 4), rat(1, 2), rat(1, 1)]));
        assert_eq!(half_cos_minpoly(7).deg0(), 3);
    }

    #[test]
    fn alpha_inside_omega_field() {
        for n in [5usize, 7, 8] {
            let (_, w) = omega_field(n);
            let a = alpha_in_omega_field(&w, n);
            let m = half_cos_minpoly(n);
            assert!(a.eval_rational_poly(&m).is_zero(), "n = {n}");
        }
    }
}
