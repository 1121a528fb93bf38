//! Arithmetic modulo a word-sized prime: scalars, dense polynomials, and
//! factorization by distinct-degree plus Cantor-Zassenhaus splitting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::Poly;
use super::rational::{rational_mod, Rational};

/// The prime field F_p for an odd prime `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        debug_assert!(p > 2 && p < (1 << 32) && is_prime_u64(p));
        PrimeField { p }
    }
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }
    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }
    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }
    pub fn inv(&self, a: u64) -> Option<u64> {
        (a % self.p != 0).then(|| self.pow(a, self.p - 2))
    }
    /// Legendre symbol: 0, 1 or -1.
    pub fn legendre(&self, a: u64) -> i8 {
        match self.pow(a, (self.p - 1) / 2) {
            0 => 0,
            1 => 1,
            _ => -1,
        }
    }
    /// Tonelli-Shanks square root of a residue.
    pub fn sqrt(&self, a: u64) -> Option<u64> {
        let p = self.p;
        let a = a % p;
        if a == 0 {
            return Some(0);
        }
        if self.legendre(a) != 1 {
            return None;
        }
        let (mut q, mut s) = (p - 1, 0u32);
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let mut z = 2;
        while self.legendre(z) != -1 {
            z += 1;
        }
        let (mut m, mut c, mut t, mut r) = (s, self.pow(z, q), self.pow(a, q), self.pow(a, (q + 1) / 2));
        while t != 1 {
            let mut i = 0;
            let mut tt = t;
            while tt != 1 {
                tt = self.mul(tt, tt);
                i += 1;
            }
            let b = self.pow(c, 1 << (m - i - 1));
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        Some(r)
    }
    pub fn from_rational(&self, q: &Rational) -> Option<u64> {
        rational_mod(q, &BigInt::from(self.p)).map(|v| v.to_u64().unwrap())
    }
    pub fn from_i64(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }
    /// Symmetric lift to (-p/2, p/2].
    pub fn lift(&self, a: u64) -> i64 {
        if a > self.p / 2 { a as i64 - self.p as i64 } else { a as i64 }
    }
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Odd primes in increasing order starting at 3.
pub fn odd_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| is_prime_u64(n))
}

/// Dense polynomial over F_p, lowest degree first, trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModPoly {
    pub f: PrimeField,
    pub c: Vec<u64>,
}

impl ModPoly {
    pub fn new(f: PrimeField, mut c: Vec<u64>) -> Self {
        for a in c.iter_mut() {
            *a %= f.p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        ModPoly { f, c }
    }
    pub fn zero(f: PrimeField) -> Self {
        ModPoly { f, c: vec![] }
    }
    pub fn one(f: PrimeField) -> Self {
        Self::new(f, vec![1])
    }
    pub fn x(f: PrimeField) -> Self {
        Self::new(f, vec![0, 1])
    }
    /// Reduction of a rational polynomial; `None` if a denominator vanishes mod p.
    pub fn from_rational(f: PrimeField, p: &Poly<Rational>) -> Option<Self> {
        let c: Option<Vec<u64>> = p.coeffs().iter().map(|a| f.from_rational(a)).collect();
        Some(Self::new(f, c?))
    }
    pub fn from_bigints(f: PrimeField, c: &[BigInt]) -> Self {
        let p = BigInt::from(f.p);
        Self::new(f, c.iter().map(|a| a.mod_floor(&p).to_u64().unwrap()).collect())
    }
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    pub fn lc(&self) -> u64 {
        *self.c.last().unwrap_or(&0)
    }
    pub fn eval(&self, x: u64) -> u64 {
        self.c.iter().rev().fold(0, |acc, &a| self.f.add(self.f.mul(acc, x), a))
    }
    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|i| self.f.add(*self.c.get(i).unwrap_or(&0), *o.c.get(i).unwrap_or(&0)))
            .collect();
        Self::new(self.f, c)
    }
    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|i| self.f.sub(*self.c.get(i).unwrap_or(&0), *o.c.get(i).unwrap_or(&0)))
            .collect();
        Self::new(self.f, c)
    }
    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.f);
        }
        let p = self.f.p as u128;
        let mut acc = vec![0u128; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in o.c.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u128 * b as u128) % p;
            }
        }
        Self::new(self.f, acc.into_iter().map(|a| a as u64).collect())
    }
    pub fn scale(&self, a: u64) -> Self {
        Self::new(self.f, self.c.iter().map(|&b| self.f.mul(a, b)).collect())
    }
    pub fn monic(&self) -> Self {
        match self.f.inv(self.lc()) {
            Some(i) => self.scale(i),
            None => self.clone(),
        }
    }
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("nonzero divisor");
        let li = self.f.inv(d.lc()).unwrap();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Self::zero(self.f), self.clone());
        }
        let mut q = vec![0; r.len() - dd];
        for i in (dd..r.len()).rev() {
            let k = self.f.mul(r[i], li);
            if k == 0 {
                continue;
            }
            for (j, &dj) in d.c.iter().enumerate() {
                r[i - dd + j] = self.f.sub(r[i - dd + j], self.f.mul(k, dj));
            }
            q[i - dd] = k;
        }
        r.truncate(dd);
        (Self::new(self.f, q), Self::new(self.f, r))
    }
    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
    /// `(g, s, t)` with `s a + t b = g` monic.
    pub fn ext_gcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let f = a.f;
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(f), Self::zero(f));
        let (mut t0, mut t1) = (Self::zero(f), Self::one(f));
        while !r1.is_zero() {
            let (q, r2) = r0.divrem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r2);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let li = f.inv(r0.lc()).unwrap_or(1);
        (r0.scale(li), s0.scale(li), t0.scale(li))
    }
    pub fn derivative(&self) -> Self {
        let c = self.c.iter().enumerate().skip(1).map(|(i, &a)| self.f.mul(a, i as u64 % self.f.p)).collect();
        Self::new(self.f, c)
    }
    pub fn is_squarefree(&self) -> bool {
        Self::gcd(self, &self.derivative()).degree() == Some(0)
    }
    /// `base^e mod m`.
    pub fn powmod(base: &Self, mut e: u128, m: &Self) -> Self {
        let mut acc = Self::one(base.f).rem(m);
        let mut b = base.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b).rem(m);
            }
            b = b.mul(&b).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Distinct roots in F_p.
    pub fn roots(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .factor_squarefree_part()
            .into_iter()
            .filter(|g| g.degree() == Some(1))
            .map(|g| self.f.neg(self.f.mul(g.c[0], self.f.inv(g.c[1]).unwrap())))
            .collect();
        out.sort();
        out
    }

    fn factor_squarefree_part(&self) -> Vec<Self> {
        let g = Self::gcd(self, &self.derivative());
        let sf = if g.degree().unwrap_or(0) > 0 { self.divrem(&g).0 } else { self.clone() };
        sf.factor_squarefree()
    }

    /// Monic irreducible factors of a squarefree polynomial.
    pub fn factor_squarefree(&self) -> Vec<Self> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.f.p);
        for (d, g) in self.monic().distinct_degree() {
            g.equal_degree(d, &mut rng, &mut out);
        }
        out.sort_by(|a, b| (a.c.len(), &a.c).cmp(&(b.c.len(), &b.c)));
        out
    }

    fn distinct_degree(&self) -> Vec<(usize, Self)> {
        let mut out = Vec::new();
        let mut f = self.clone();
        let x = Self::x(self.f);
        let mut h = x.clone();
        let mut d = 0;
        while f.degree().unwrap_or(0) >= 2 * (d + 1) {
            d += 1;
            h = Self::powmod(&h, self.f.p as u128, &f);
            let g = Self::gcd(&h.sub(&x), &f);
            if g.degree().unwrap_or(0) > 0 {
                f = f.divrem(&g).0;
                h = h.rem(&f);
                out.push((d, g));
            }
        }
        if let Some(k) = f.degree() {
            if k > 0 {
                out.push((k, f.monic()));
            }
        }
        out
    }

    fn equal_degree(&self, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Self>) {
        let n = self.degree().unwrap();
        if n == d {
            out.push(self.monic());
            return;
        }
        let p = self.f.p as u128;
        loop {
            let a = Self::new(self.f, (0..n).map(|_| rng.gen_range(0..self.f.p)).collect());
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            // a^((p^d - 1)/2) computed as (a * a^p * ... * a^(p^(d-1)))^((p-1)/2)
            let mut t = a.clone();
            let mut fr = a.clone();
            for _ in 1..d {
                fr = Self::powmod(&fr, p, self);
                t = t.mul(&fr).rem(self);
            }
            let b = Self::powmod(&t, (p - 1) / 2, self).sub(&Self::one(self.f));
            let g = Self::gcd(&b, self);
            let k = g.degree().unwrap_or(0);
            if k > 0 && k < n {
                g.equal_degree(d, rng, out);
                self.divrem(&g).0.monic().equal_degree(d, rng, out);
                return;
            }
        }
    }
}
