//! Factorization in Q[x]: squarefree decomposition, factorization modulo a
//! well-chosen prime, multifactor Hensel lifting and subset recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::{odd_primes, ModPoly, PrimeField};
use super::poly::Poly;
use super::rational::Rational;

type Q = Rational;

/// `unit * prod factor^mult`, factors monic irreducible and sorted by degree.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub unit: Q,
    pub factors: Vec<(Poly<Q>, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> Poly<Q> {
        self.factors
            .iter()
            .fold(Poly::constant(self.unit.clone()), |acc, (f, m)| &acc * &f.pow(*m as u64))
    }
}

pub fn factor(p: &Poly<Q>) -> Factorization {
    let unit = p.lc();
    let mut factors = Vec::new();
    for (sf, m) in p.squarefree_decomposition() {
        for g in factor_squarefree(&sf) {
            factors.push((g, m));
        }
    }
    factors.sort_by(|a, b| {
        (a.0.deg0(), a.1).cmp(&(b.0.deg0(), b.1)).then_with(|| format!("{}", a.0).cmp(&format!("{}", b.0)))
    });
    Factorization { unit, factors }
}

/// True when `p` has positive degree and no nontrivial factorization over Q.
pub fn is_irreducible(p: &Poly<Q>) -> bool {
    if p.deg0() == 0 {
        return false;
    }
    let f = factor(p);
    f.factors.len() == 1 && f.factors[0].1 == 1
}

/// Distinct rational roots, ascending.
pub fn rational_roots(p: &Poly<Q>) -> Vec<Q> {
    if p.is_zero() {
        return Vec::new();
    }
    let mut out: Vec<Q> = factor(p)
        .factors
        .into_iter()
        .filter(|(f, _)| f.deg0() == 1)
        .map(|(f, _)| -f.coeff(0))
        .collect();
    out.sort();
    out
}

fn symmetric(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a.mod_floor(m);
    if &r * 2 > *m { r - m } else { r }
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    c
}

fn zmod(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut c: Vec<BigInt> = a.iter().map(|x| x.mod_floor(m)).collect();
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    c
}

fn to_z(p: &ModPoly) -> Vec<BigInt> {
    p.c.iter().map(|&a| BigInt::from(a)).collect()
}

/// Lifts `f = g h (mod p)` with `g` monic to `f = G H (mod p^k)`.
fn hensel_pair(f: &[BigInt], g: &ModPoly, h: &ModPoly, pk: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    let fp = g.f;
    let p = BigInt::from(fp.p);
    let (one, s, t) = ModPoly::ext_gcd(g, h);
    debug_assert_eq!(one.c, vec![1]);
    let (mut gz, mut hz) = (to_z(g), to_z(h));
    let mut m = p.clone();
    while &m < pk {
        let gh = zmul(&gz, &hz);
        let n = f.len().max(gh.len());
        let e: Vec<BigInt> = (0..n)
            .map(|i| {
                let d = f.get(i).cloned().unwrap_or_default() - gh.get(i).cloned().unwrap_or_default();
                debug_assert!((&d % &m).is_zero());
                d / &m
            })
            .collect();
        let e = ModPoly::from_bigints(fp, &e);
        let (q, sigma) = e.mul(&t).divrem(g);
        let tau = e.mul(&s).add(&q.mul(h));
        let next = &m * &p;
        let add = |a: &[BigInt], d: &ModPoly| {
            let n = a.len().max(d.c.len());
            let v: Vec<BigInt> = (0..n)
                .map(|i| a.get(i).cloned().unwrap_or_default() + &m * BigInt::from(*d.c.get(i).unwrap_or(&0)))
                .collect();
            zmod(&v, &next)
        };
        gz = add(&gz, &sigma);
        hz = add(&hz, &tau);
        m = next;
    }
    (zmod(&gz, pk), zmod(&hz, pk))
}

/// Lifts monic modular factors of `f` (leading coefficient `lc`) to monic factors mod `pk`.
fn hensel_multi(f: &[BigInt], factors: &[ModPoly], pk: &BigInt) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        let lc = f.last().unwrap();
        let inv = super::rational::mod_inverse(lc, pk).expect("lc invertible");
        return vec![zmod(&f.iter().map(|a| a * &inv).collect::<Vec<_>>(), pk)];
    }
    let fp = factors[0].f;
    let (a, b) = factors.split_at(factors.len() / 2);
    let g = a.iter().fold(ModPoly::one(fp), |x, y| x.mul(y));
    let lcp = ModPoly::from_bigints(fp, &[f.last().unwrap().clone()]).c[0];
    let h = b.iter().fold(ModPoly::one(fp), |x, y| x.mul(y)).scale(lcp);
    let (gz, hz) = hensel_pair(f, &g, &h, pk);
    let mut out = hensel_multi(&gz, a, pk);
    out.extend(hensel_multi(&hz, b, pk));
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Monic irreducible factors of a squarefree polynomial.
pub fn factor_squarefree(p: &Poly<Q>) -> Vec<Poly<Q>> {
    let n = p.deg0();
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![p.monic()];
    }
    let (_, f) = p.primitive_integer();
    // x | f is common enough to peel off cheaply.
    if f[0].is_zero() {
        let mut out = vec![Poly::x()];
        out.extend(factor_squarefree(&Poly::from_integers(&f[1..])));
        return out;
    }
    let lc = f.last().unwrap().clone();

    // Pick the prime with the fewest modular factors among a few good ones.
    let mut best: Option<(PrimeField, Vec<ModPoly>)> = None;
    let mut good = 0;
    for prime in odd_primes() {
        if (&lc % BigInt::from(prime)).is_zero() {
            continue;
        }
        let fp = PrimeField::new(prime);
        let fm = ModPoly::from_bigints(fp, &f);
        if !fm.is_squarefree() {
            continue;
        }
        let fs = fm.monic().factor_squarefree();
        if fs.len() == 1 {
            return vec![p.monic()];
        }
        if best.as_ref().is_none_or(|(_, b)| fs.len() < b.len()) {
            best = Some((fp, fs));
        }
        good += 1;
        if good >= 5 {
            break;
        }
    }
    let (fp, modular) = best.expect("some prime is good");

    let norm2 = f.iter().map(|a| a * a).fold(BigInt::zero(), |x, y| x + y).sqrt() + 1;
    let bound = BigInt::from(2) * lc.abs() * (BigInt::one() << n) * norm2;
    let p = BigInt::from(fp.p);
    let mut pk = p.clone();
    while pk <= bound {
        pk *= &p;
    }
    let mut lifted = hensel_multi(&f, &modular, &pk);

    let mut out = Vec::new();
    let mut rest = Poly::from_integers(&f);
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut found = false;
        let lcr = rest.primitive_integer().1.last().unwrap().clone();
        for subset in combinations(lifted.len(), s) {
            let prod = subset.iter().fold(vec![lcr.clone()], |acc, &i| zmod(&zmul(&acc, &lifted[i]), &pk));
            let cand: Vec<BigInt> = prod.iter().map(|a| symmetric(a, &pk)).collect();
            let cand = Poly::from_integers(&cand);
            let prim = Poly::from_integers(&cand.primitive_integer().1);
            if let Some(q) = rest.exact_div(&prim) {
                if q.coeffs().iter().all(|c| c.is_integer()) {
                    out.push(prim.monic());
                    rest = q;
                    let keep: Vec<Vec<BigInt>> = lifted
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| !subset.contains(i))
                        .map(|(_, v)| v.clone())
                        .collect();
                    lifted = keep;
                    found = true;
                    break;
                }
            }
        }
        if !found {
            s += 1;
        }
    }
    if rest.deg0() > 0 {
        out.push(rest.monic());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};

    type P = Poly<Q>;

    #[test]
    fn swinnerton_dyer_is_irreducible() {
        // Minimal polynomial of sqrt2 + sqrt3: splits into quadratics mod every prime.
        let p = P::from_i64s(&[1, 0, -10, 0, 1]);
        assert!(is_irreducible(&p));
        let p8 = P::from_i64s(&[576, 0, -960, 0, 352, 0, -40, 0, 1]);
        assert!(is_irreducible(&p8));
    }

    #[test]
    fn factors_reassemble() {
        let a = P::from_i64s(&[-2, 0, 1]);
        let b = P::from_i64s(&[1, 1, 1]);
        let c = P::from_coeffs(vec![rat(1, 2), int(3)]);
        let p = &(&(&a * &b) * &c.pow(2)) * &P::from_i64s(&[0, 1]);
        let fz = factor(&p);
        assert_eq!(fz.expand(), p);
        assert_eq!(fz.factors.len(), 4);
        assert!(fz.factors.iter().all(|(f, _)| is_irreducible(f)));
        assert_eq!(rational_roots(&p), vec![rat(-1, 6), int(0)]);
    }

    #[test]
    fn cyclotomic_like() {
        let p = P::from_i64s(&[-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        let fz = factor(&p);
        assert_eq!(fz.factors.len(), 6);
        assert_eq!(fz.expand(), p);
    }
}
