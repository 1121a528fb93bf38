//! Chinese remaindering for polynomial congruences.

use super::field::Field;
use super::poly::Poly;
use super::ArithError;

/// The unique polynomial of degree below `prod deg m_i` with `P = r_i mod m_i`.
pub fn crt_poly<F: Field>(congruences: &[(Poly<F>, Poly<F>)]) -> Result<Poly<F>, ArithError> {
    for (i, (_, mi)) in congruences.iter().enumerate() {
        if mi.is_zero() {
            return Err(ArithError::Invalid("zero modulus".into()));
        }
        for (_, mj) in &congruences[i + 1..] {
            if Poly::gcd(mi, mj).deg0() > 0 {
                return Err(ArithError::NotCoprime(mi.to_string(), mj.to_string()));
            }
        }
    }
    let mut acc = Poly::zero();
    let mut modulus = Poly::one();
    for (r, m) in congruences {
        let inv = modulus.rem(m).inverse_mod(m).expect("coprime moduli");
        let lift = (&(r - &acc) * &inv).rem(m);
        acc = &acc + &(&modulus * &lift);
        modulus = &modulus * m;
    }
    Ok(acc.rem(&modulus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::Rational;

    type P = Poly<Rational>;

    #[test]
    fn small_systems() {
        let x = P::x();
        assert_eq!(crt_poly(&[(P::one(), x.clone())]).unwrap(), P::one());
        let r = crt_poly(&[(P::one(), x.clone()), (P::from_i64s(&[2]), P::from_i64s(&[-1, 1]))]).unwrap();
        assert_eq!(r, P::from_i64s(&[1, 1]));
    }

    #[test]
    fn prime_power_moduli() {
        // r = 5 + x^2 mod x^3 and r = 7 + (x-1)^3 mod (x-1)^4
        let m1 = P::x().pow(3);
        let xm1 = P::from_i64s(&[-1, 1]);
        let m2 = xm1.pow(4);
        let r1 = P::from_i64s(&[5, 0, 1]);
        let r2 = &P::from_i64s(&[7]) + &xm1.pow(3);
        let r = crt_poly(&[(r1.clone(), m1.clone()), (r2.clone(), m2.clone())]).unwrap();
        assert!(r.deg0() < 7);
        assert_eq!(r.rem(&m1), r1);
        assert_eq!(r.rem(&m2), r2);
    }

    #[test]
    fn rejects_common_factor() {
        let a = P::from_i64s(&[0, 1, 1]);
        let b = P::from_i64s(&[0, 2]);
        assert!(matches!(crt_poly(&[(P::one(), a), (P::zero(), b)]), Err(ArithError::NotCoprime(_, _))));
    }
}
