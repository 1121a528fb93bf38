//! Exact rationals and the integer helpers the rest of the crate leans on.
//!
//! `Rational` is `num_rational::BigRational`; it is always stored reduced with a
//! positive denominator, which is the invariant every caller relies on.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ArithError;

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Parses `"n"` or `"n/d"`; zero denominators are rejected.
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let s = s.trim();
    let bad = || ArithError::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(ArithError::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Inverse of `parse_rational`: `"n"` for integers, `"n/d"` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Exact integer square root, if `n` is a perfect square.
pub fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Exact square root of a rational, if it is a square in Q.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    let n = exact_isqrt(q.numer())?;
    let d = exact_isqrt(q.denom())?;
    Some(Rational::new(n, d))
}

/// Lcm of the denominators of a list of rationals.
pub fn common_denominator<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    qs.into_iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

pub fn is_probable_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigInt::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let nm1 = n - &one;
    let mut d = nm1.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    // These bases are deterministic below 3.3e24 and a strong test above.
    'outer: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let a = BigInt::from(a) % n;
        if a.is_zero() {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigInt) -> BigInt {
    if n.is_even() {
        return BigInt::from(2);
    }
    let mut c = BigInt::one();
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let (mut x, mut y, mut d) = (BigInt::from(2), BigInt::from(2), BigInt::one());
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1;
    }
}

/// Prime factorization of |n| as sorted (prime, exponent) pairs. `n` must be nonzero.
pub fn factor_integer(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    let push = |p: BigInt, out: &mut Vec<(BigInt, u32)>| match out.iter_mut().find(|(q, _)| *q == p) {
        Some(e) => e.1 += 1,
        None => out.push((p, 1)),
    };
    for p in 2u32..10_000 {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        while (&n % &bp).is_zero() {
            n /= &bp;
            push(bp.clone(), &mut out);
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            push(m, &mut out);
        } else {
            let d = pollard_rho(&m);
            stack.push(&m / &d);
            stack.push(d);
        }
    }
    out.sort();
    out
}

/// The squarefree integer in the square class of a nonzero rational.
pub fn squarefree_kernel(q: &Rational) -> BigInt {
    let n = q.numer() * q.denom();
    let mut k = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    for (p, e) in factor_integer(&n) {
        if e % 2 == 1 {
            k *= p;
        }
    }
    k
}

/// p-adic valuation of a nonzero rational.
pub fn valuation(q: &Rational, p: &BigInt) -> i64 {
    let count = |n: &BigInt| {
        let mut n = n.clone();
        let mut v = 0i64;
        while !n.is_zero() && (&n % p).is_zero() {
            n /= p;
            v += 1;
        }
        v
    };
    count(q.numer()) - count(q.denom())
}

/// Least nonnegative residue of a rational modulo `m`, if the denominator is invertible.
pub fn rational_mod(q: &Rational, m: &BigInt) -> Option<BigInt> {
    let d = q.denom().mod_floor(m);
    let inv = mod_inverse(&d, m)?;
    Some((q.numer().mod_floor(m) * inv).mod_floor(m))
}

pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Rational reconstruction: finds n/d with |n|, d <= sqrt(m/2) and n = d*a mod m.
pub fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<Rational> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rational::new(r1, t1))
}

pub fn to_u64(n: &BigInt) -> Option<u64> {
    n.to_u64()
}

pub fn biguint_bits(n: &BigUint) -> u64 {
    n.bits()
}

pub fn sign_of(q: &Rational) -> Sign {
    if q.is_zero() {
        Sign::NoSign
    } else if q.is_negative() {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "-7", "3/4", "-22/7"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(format_rational(&parse_rational("6/-4").unwrap()), "-3/2");
        assert!(matches!(parse_rational("1/0"), Err(ArithError::DivisionByZero)));
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn kernels_and_factoring() {
        assert_eq!(squarefree_kernel(&rat(-12, 1)), BigInt::from(-3));
        assert_eq!(squarefree_kernel(&rat(8, 27)), BigInt::from(6));
        // Primes equal to a Miller-Rabin base.
        for p in [41u32, 37, 43] {
            assert!(is_probable_prime(&BigInt::from(p)));
        }
        assert_eq!(factor_integer(&BigInt::from(2460)).len(), 4);
        let brute = |n: u32| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
        for n in 0u32..3000 {
            assert_eq!(is_probable_prime(&BigInt::from(n)), brute(n), "{n}");
        }
        let big = BigInt::from(1_000_003u64) * BigInt::from(998_244_353u64);
        assert_eq!(factor_integer(&big).len(), 2);
        assert_eq!(factor_integer(&BigInt::from(360)), vec![
            (BigInt::from(2), 3),
            (BigInt::from(3), 2),
            (BigInt::from(5), 1)
        ]);
    }

    #[test]
    fn reconstruction_recovers_small_fractions() {
        let m = BigInt::from(1_000_000_007u64) * BigInt::from(998_244_353u64);
        let q = rat(-355, 113);
        let a = rational_mod(&q, &m).unwrap();
        assert_eq!(rational_reconstruct(&a, &m), Some(q));
    }

    #[test]
    fn sqrt_and_valuation() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(valuation(&rat(12, 5), &BigInt::from(2)), 2);
        assert_eq!(valuation(&rat(12, 25), &BigInt::from(5)), -2);
        assert_eq!(binomial(7, 3), BigInt::from(35));
    }
}
