//! Hilbert symbols over Q and local-global decisions for classes in Br2(Q),
//! including their restriction to quadratic fields.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::rational::{factor_integer, Rational};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Infinity,
    Prime(BigInt),
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinity => f.write_str("inf"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

/// An integer in the square class of `q`.
fn integral(q: &Rational) -> BigInt {
    q.numer() * q.denom()
}

fn split_off(n: &BigInt, p: &BigInt) -> (u64, BigInt) {
    let mut n = n.clone();
    let mut v = 0;
    while (&n % p).is_zero() {
        n /= p;
        v += 1;
    }
    (v, n)
}

fn legendre(a: &BigInt, p: &BigInt) -> i32 {
    let e = (p - 1u32) / 2u32;
    let r = a.mod_floor(p).modpow(&e, p);
    if r.is_one() {
        1
    } else {
        -1
    }
}

/// `(a, b)_v` in {+1, -1}; `a`, `b` nonzero.
pub fn hilbert_symbol(a: &Rational, b: &Rational, place: &Place) -> i32 {
    assert!(!a.is_zero() && !b.is_zero(), "Hilbert symbol of zero");
    let (a, b) = (integral(a), integral(b));
    match place {
        Place::Infinity => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Prime(p) if *p == BigInt::from(2) => {
            let (al, u) = split_off(&a, p);
            let (be, v) = split_off(&b, p);
            let eps = |x: &BigInt| -> u64 { (((x.mod_floor(&BigInt::from(4))) - 1u32) / 2u32).try_into().unwrap() };
            let omega = |x: &BigInt| -> u64 {
                let r: u64 = x.mod_floor(&BigInt::from(8)).try_into().unwrap();
                ((r * r - 1) / 8) % 2
            };
            let e = eps(&u) * eps(&v) + al * omega(&v) + be * omega(&u);
            if e % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Place::Prime(p) => {
            let (al, u) = split_off(&a, p);
            let (be, v) = split_off(&b, p);
            let eps: BigInt = (p - 1u32) / 2u32;
            let mut s = if (al * be) % 2 == 1 && eps.is_odd() { -1 } else { 1 };
            if be % 2 == 1 {
                s *= legendre(&u, p);
            }
            if al % 2 == 1 {
                s *= legendre(&v, p);
            }
            s
        }
    }
}

/// Places where some symbol among `entries` can be ramified: infinity, 2 and
/// the odd primes dividing numerators or denominators.
pub fn relevant_places<'a>(entries: impl IntoIterator<Item = &'a Rational>) -> Vec<Place> {
    let mut primes: BTreeSet<BigInt> = BTreeSet::new();
    primes.insert(BigInt::from(2));
    for q in entries {
        let n = integral(q).abs();
        if n > BigInt::one() {
            for (p, _) in factor_integer(&n) {
                primes.insert(p);
            }
        }
    }
    let mut out = vec![Place::Infinity];
    out.extend(primes.into_iter().map(Place::Prime));
    out
}

/// True iff `(a, b)` splits over Q.
pub fn is_split_q(a: &Rational, b: &Rational) -> bool {
    relevant_places([a, b]).iter().all(|v| hilbert_symbol(a, b, v) == 1)
}

/// Places where the sum of the given symbols has nonzero local invariant.
pub fn ramified_places(symbols: &[(Rational, Rational)]) -> Vec<Place> {
    let places = relevant_places(symbols.iter().flat_map(|(a, b)| [a, b]));
    places
        .into_iter()
        .filter(|v| symbols.iter().map(|(a, b)| hilbert_symbol(a, b, v)).product::<i32>() == -1)
        .collect()
}

/// Whether `d` is a square in the completion `Q_v`.
pub fn is_local_square(d: &Rational, place: &Place) -> bool {
    let n = integral(d);
    match place {
        Place::Infinity => n.is_positive(),
        Place::Prime(p) => {
            let (v, u) = split_off(&n, p);
            if v % 2 == 1 {
                return false;
            }
            if *p == BigInt::from(2) {
                u.mod_floor(&BigInt::from(8)) == BigInt::one()
            } else {
                legendre(&u, p) == 1
            }
        }
    }
}

/// Whether a sum of rational symbols becomes zero over `Q(sqrt d)`: every
/// ramified place of the sum must be non-split in the quadratic field.
/// `d = None` means over Q itself.
pub fn class_vanishes(symbols: &[(Rational, Rational)], d: Option<&Rational>) -> (bool, Vec<Place>) {
    let bad: Vec<Place> = ramified_places(symbols)
        .into_iter()
        .filter(|v| d.is_none_or(|d| is_local_square(d, v)))
        .collect();
    (bad.is_empty(), bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;

    fn two() -> Place {
        Place::Prime(BigInt::from(2))
    }

    #[test]
    fn classical_values() {
        assert_eq!(hilbert_symbol(&int(-1), &int(-1), &Place::Infinity), -1);
        assert_eq!(hilbert_symbol(&int(-1), &int(-1), &two()), -1);
        for v in relevant_places([&int(17)]) {
            assert_eq!(hilbert_symbol(&int(1), &int(17), &v), 1);
        }
        assert!(!is_split_q(&int(-1), &int(-1)));
        assert!(is_split_q(&int(-1), &int(2)));
        assert!(is_split_q(&int(1), &int(17)));
        // (3, 5): 5 is not a square mod 3, so ramified at 3 and 5.
        assert_eq!(ramified_places(&[(int(3), int(5))]), vec![
            Place::Prime(BigInt::from(3)),
            Place::Prime(BigInt::from(5))
        ]);
    }

    #[test]
    fn restriction_to_quadratic_fields() {
        // (-1,-1) is ramified at inf and 2; both are inert in Q(sqrt -1).
        assert!(class_vanishes(&[(int(-1), int(-1))], Some(&int(-1))).0);
        assert!(!class_vanishes(&[(int(-1), int(-1))], Some(&int(2))).0);
        // -3 is a square neither in R nor in Q_2 (-3 = 5 mod 8)
        assert!(class_vanishes(&[(int(-1), int(-1))], Some(&int(-3))).0);
        assert!(!class_vanishes(&[(int(-1), int(-1))], None).0);
        assert!(is_local_square(&int(17), &two()));
        assert!(!is_local_square(&int(5), &two()));
    }
}
