//! Certified square testing.
//!
//! A `Square` verdict always carries a root that has been checked by squaring.
//! A `NonSquare` verdict carries a witness that can be re-checked: for number
//! fields it is a degree-one prime `(p, x - r)` at which the element reduces
//! to a quadratic non-residue. Anything else is reported as `ProbablySquare`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::field::Field;
use super::modp::{odd_primes, ModPoly, PrimeField};
use super::numfield::NfElem;
use super::poly::Poly;
use super::quadext::QuadElem;
use super::ratfunc::RatFunc;
use super::rational::{common_denominator, format_rational, rational_mod, rational_reconstruct, rational_sqrt, Rational};
use super::ArithError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SquareConfig {
    /// Number of primes with a root of the defining polynomial to try before giving up.
    pub witness_primes: usize,
    /// Bits of p-adic precision used when reconstructing a square root.
    pub lift_bits: u64,
    /// Largest field degree for which all sign patterns of a root are tried.
    pub max_sign_degree: usize,
    /// Hard cap on primes examined in one test.
    pub prime_cap: usize,
}

impl Default for SquareConfig {
    fn default() -> Self {
        SquareConfig { witness_primes: 25, lift_bits: 512, max_sign_degree: 14, prime_cap: 20_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum NonSquareWitness {
    /// The element is `value` modulo `p` after sending the generator to `root`,
    /// and `value` is a non-residue.
    Residue { p: u64, root: Option<u64>, value: u64 },
    /// A squarefree factor of the numerator times denominator occurs to an odd power.
    OddValuation { place: String, exponent: usize },
    /// Only even powers occur but the leading constant is a non-square.
    LeadingConstant { constant: String, inner: Box<NonSquareWitness> },
    /// The norm to the base field is a non-square.
    Norm { norm: String, inner: Box<NonSquareWitness> },
    /// Norm is `n^2` but neither `(u + n)/2` nor `(u - n)/2` is a square.
    HalfTraces { plus: Box<NonSquareWitness>, minus: Box<NonSquareWitness> },
    /// Element of the base field with neither `u` nor `u D` a square.
    BaseAndTwist { base: Box<NonSquareWitness>, twisted: Box<NonSquareWitness> },
}

impl fmt::Display for NonSquareWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NonSquareWitness::Residue { p, root: None, value } => {
                write!(f, "non-residue {value} mod {p}")
            }
            NonSquareWitness::Residue { p, root: Some(r), value } => {
                write!(f, "non-residue {value} mod ({p}, gen={r})")
            }
            NonSquareWitness::OddValuation { place, exponent } => {
                write!(f, "odd valuation {exponent} at {place}")
            }
            NonSquareWitness::LeadingConstant { constant, inner } => {
                write!(f, "leading constant {constant}: {inner}")
            }
            NonSquareWitness::Norm { norm, inner } => write!(f, "norm {norm}: {inner}"),
            NonSquareWitness::HalfTraces { plus, minus } => write!(f, "half traces [{plus}] [{minus}]"),
            NonSquareWitness::BaseAndTwist { base, twisted } => write!(f, "base [{base}] twist [{twisted}]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SquareVerdict<F> {
    Square(F),
    NonSquare(NonSquareWitness),
    ProbablySquare { primes_tried: usize },
}

impl<F> SquareVerdict<F> {
    pub fn is_square(&self) -> bool {
        matches!(self, SquareVerdict::Square(_))
    }
    pub fn is_nonsquare(&self) -> bool {
        matches!(self, SquareVerdict::NonSquare(_))
    }
    pub fn root(self) -> Option<F> {
        match self {
            SquareVerdict::Square(r) => Some(r),
            _ => None,
        }
    }
    /// `Some(true)` square, `Some(false)` non-square, `None` undecided.
    pub fn decided(&self) -> Option<bool> {
        match self {
            SquareVerdict::Square(_) => Some(true),
            SquareVerdict::NonSquare(_) => Some(false),
            SquareVerdict::ProbablySquare { .. } => None,
        }
    }
}

pub trait SquareOracle: Field {
    fn square_verdict(&self, cfg: &SquareConfig) -> Result<SquareVerdict<Self>, ArithError>;

    /// Re-checks a non-square witness against this element.
    fn verify_nonsquare(&self, w: &NonSquareWitness, cfg: &SquareConfig) -> bool {
        matches!(self.square_verdict(cfg), Ok(SquareVerdict::NonSquare(v)) if &v == w)
    }

    /// Whether `self / other` is a square; both must be nonzero.
    fn same_square_class(&self, other: &Self, cfg: &SquareConfig) -> Result<Option<bool>, ArithError> {
        let q = self.div_checked(other).ok_or(ArithError::DivisionByZero)?;
        Ok(q.square_verdict(cfg)?.decided())
    }
}

fn rational_witness(q: &Rational) -> NonSquareWitness {
    for p in odd_primes() {
        let f = PrimeField::new(p);
        if let Some(v) = f.from_rational(q) {
            if v != 0 && f.legendre(v) == -1 {
                return NonSquareWitness::Residue { p, root: None, value: v };
            }
        }
    }
    unreachable!("a non-square rational is a non-residue modulo some prime")
}

impl SquareOracle for Rational {
    fn square_verdict(&self, _cfg: &SquareConfig) -> Result<SquareVerdict<Self>, ArithError> {
        if let Some(r) = rational_sqrt(self) {
            return Ok(SquareVerdict::Square(r));
        }
        Ok(SquareVerdict::NonSquare(rational_witness(self)))
    }

    fn verify_nonsquare(&self, w: &NonSquareWitness, _cfg: &SquareConfig) -> bool {
        match w {
            NonSquareWitness::Residue { p, root: None, value } => {
                let f = PrimeField::new(*p);
                f.from_rational(self) == Some(*value) && f.legendre(*value) == -1
            }
            _ => false,
        }
    }
}

/// Data needed to reduce an element of `Q[x]/(m)` at degree-one primes.
struct Reducer {
    bad: BigInt,
}

impl Reducer {
    fn new(m: &Poly<Rational>, beta: &Poly<Rational>) -> Self {
        let disc = m.discriminant();
        let mut bad = disc.numer() * disc.denom();
        bad *= common_denominator(m.coeffs().iter());
        bad *= common_denominator(beta.coeffs().iter());
        Reducer { bad }
    }

    fn good(&self, p: u64) -> bool {
        !(&self.bad % BigInt::from(p)).is_zero()
    }
}

/// Witness check for a number-field element given by coordinates `beta` mod `m`.
pub fn check_residue_witness(m: &Poly<Rational>, beta: &Poly<Rational>, w: &NonSquareWitness) -> bool {
    let NonSquareWitness::Residue { p, root: Some(r), value } = w else {
        return false;
    };
    let red = Reducer::new(m, beta);
    if !red.good(*p) {
        return false;
    }
    let f = PrimeField::new(*p);
    let (Some(mm), Some(bb)) = (ModPoly::from_rational(f, m), ModPoly::from_rational(f, beta)) else {
        return false;
    };
    mm.eval(*r) == 0 && bb.eval(*r) == *value && f.legendre(*value) == -1
}

fn pow_big(p: u64, k: u64) -> BigInt {
    num_traits::pow(BigInt::from(p), k as usize)
}

fn eval_mod(c: &Poly<Rational>, x: &BigInt, m: &BigInt) -> BigInt {
    c.coeffs().iter().rev().fold(BigInt::zero(), |acc, a| {
        (acc * x + rational_mod(a, m).expect("denominator coprime")).mod_floor(m)
    })
}

fn inv_mod(a: &BigInt, m: &BigInt) -> BigInt {
    super::rational::mod_inverse(a, m).expect("invertible")
}

/// Attempts to write `beta` as an exact square using the totally split prime `p`.
fn reconstruct_root(
    m: &Poly<Rational>,
    beta: &Poly<Rational>,
    p: u64,
    roots: &[u64],
    cfg: &SquareConfig,
) -> Option<Poly<Rational>> {
    let f = PrimeField::new(p);
    let n = roots.len();
    if n > cfg.max_sign_degree {
        return None;
    }
    let k = cfg.lift_bits.div_ceil(63 - (p.leading_zeros() as u64).min(62)).max(1) + 1;
    let pk = pow_big(p, k);
    let dm = m.derivative();
    let newton_iters = (64 - k.leading_zeros()) as usize + 2;
    let mut lifted_roots = Vec::with_capacity(n);
    let mut lifted_sqrts = Vec::with_capacity(n);
    for &r in roots {
        let mut x = BigInt::from(r);
        for _ in 0..newton_iters {
            let num = eval_mod(m, &x, &pk);
            let den = eval_mod(&dm, &x, &pk);
            x = (&x - num * inv_mod(&den, &pk)).mod_floor(&pk);
        }
        let b = eval_mod(beta, &x, &pk);
        let b0 = (&b % BigInt::from(p)).to_u64().unwrap();
        let s0 = f.sqrt(b0)?;
        if s0 == 0 {
            return None;
        }
        let mut s = BigInt::from(s0);
        for _ in 0..newton_iters {
            let num = (&s * &s - &b).mod_floor(&pk);
            s = (&s - num * inv_mod(&(BigInt::from(2) * &s), &pk)).mod_floor(&pk);
        }
        lifted_roots.push(x);
        lifted_sqrts.push(s);
    }
    // Newton basis interpolation weights are sign independent; precompute them.
    for mask in 0u64..(1u64 << (n - 1)) {
        let vals: Vec<BigInt> = (0..n)
            .map(|j| {
                let neg = j > 0 && (mask >> (j - 1)) & 1 == 1;
                if neg { (&pk - &lifted_sqrts[j]).mod_floor(&pk) } else { lifted_sqrts[j].clone() }
            })
            .collect();
        let coeffs = interpolate_mod(&lifted_roots, &vals, &pk);
        let rec: Option<Vec<Rational>> = coeffs.iter().map(|c| rational_reconstruct(c, &pk)).collect();
        let Some(rec) = rec else { continue };
        let cand = Poly::from_coeffs(rec);
        if (&cand * &cand).rem(m) == *beta {
            return Some(cand);
        }
    }
    None
}

fn interpolate_mod(xs: &[BigInt], ys: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = (&coef[i] - &coef[i - 1]).mod_floor(m);
            let den = (&xs[i] - &xs[i - j]).mod_floor(m);
            coef[i] = (num * inv_mod(&den, m)).mod_floor(m);
        }
    }
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); n];
    for i in (0..n).rev() {
        // acc = acc * (x - xs[i]) + coef[i]
        let mut next = vec![BigInt::zero(); n];
        for d in 0..n {
            if d + 1 < n {
                next[d + 1] = (&next[d + 1] + &acc[d]).mod_floor(m);
            }
            next[d] = (&next[d] - &acc[d] * &xs[i]).mod_floor(m);
        }
        next[0] = (&next[0] + &coef[i]).mod_floor(m);
        acc = next;
    }
    acc
}

/// Square test for `beta` in `Q[x]/(m)`, `m` monic irreducible of degree >= 2.
pub fn number_field_square(
    m: &Poly<Rational>,
    beta: &Poly<Rational>,
    cfg: &SquareConfig,
) -> SquareVerdict<Poly<Rational>> {
    let red = Reducer::new(m, beta);
    let n = m.deg0();
    let mut witness_primes = 0;
    let mut reconstructions = 0;
    for (examined, p) in odd_primes().enumerate() {
        if examined >= cfg.prime_cap {
            break;
        }
        if !red.good(p) {
            continue;
        }
        let f = PrimeField::new(p);
        let mm = ModPoly::from_rational(f, m).expect("good prime");
        let bb = ModPoly::from_rational(f, beta).expect("good prime");
        let roots = mm.roots();
        if roots.is_empty() {
            continue;
        }
        let mut all_nonzero = true;
        for &r in &roots {
            let v = bb.eval(r);
            if v == 0 {
                all_nonzero = false;
                continue;
            }
            if f.legendre(v) == -1 {
                return SquareVerdict::NonSquare(NonSquareWitness::Residue { p, root: Some(r), value: v });
            }
        }
        witness_primes += 1;
        if roots.len() == n && all_nonzero && reconstructions < 3 {
            reconstructions += 1;
            if let Some(root) = reconstruct_root(m, beta, p, &roots, cfg) {
                return SquareVerdict::Square(root);
            }
        }
        if witness_primes >= cfg.witness_primes && reconstructions > 0 {
            break;
        }
    }
    SquareVerdict::ProbablySquare { primes_tried: witness_primes }
}

impl SquareOracle for NfElem {
    fn square_verdict(&self, cfg: &SquareConfig) -> Result<SquareVerdict<Self>, ArithError> {
        if let Some(q) = self.to_rational() {
            let k = self.field().cloned();
            let lift = |r: Rational| match &k {
                Some(k) => k.from_rational(r),
                None => NfElem::from_rational(&r),
            };
            if let Some(r) = rational_sqrt(&q) {
                return Ok(SquareVerdict::Square(lift(r)));
            }
            if k.as_ref().is_none_or(|k| k.degree() == 1) {
                return Ok(SquareVerdict::NonSquare(rational_witness(&q)));
            }
        }
        let k = self.field().expect("non-rational element has a field").clone();
        if k.degree() == 1 {
            let q = self.to_rational().unwrap();
            return Ok(SquareVerdict::NonSquare(rational_witness(&q)));
        }
        Ok(match number_field_square(k.min_poly(), self.coords(), cfg) {
            SquareVerdict::Square(r) => SquareVerdict::Square(k.elem(r)),
            SquareVerdict::NonSquare(w) => SquareVerdict::NonSquare(w),
            SquareVerdict::ProbablySquare { primes_tried } => SquareVerdict::ProbablySquare { primes_tried },
        })
    }

    fn verify_nonsquare(&self, w: &NonSquareWitness, cfg: &SquareConfig) -> bool {
        match (self.field(), w) {
            (Some(k), NonSquareWitness::Residue { root: Some(_), .. }) if k.degree() > 1 => {
                check_residue_witness(k.min_poly(), self.coords(), w)
            }
            _ => self.to_rational().is_some_and(|q| q.verify_nonsquare(w, cfg)),
        }
    }
}

impl<F: SquareOracle> SquareOracle for RatFunc<F> {
    fn square_verdict(&self, cfg: &SquareConfig) -> Result<SquareVerdict<Self>, ArithError> {
        if self.is_zero() {
            return Ok(SquareVerdict::Square(Self::zero()));
        }
        let g = self.num() * self.den();
        let mut root = Poly::one();
        for (a, mult) in g.squarefree_decomposition() {
            if mult % 2 == 1 {
                return Ok(SquareVerdict::NonSquare(NonSquareWitness::OddValuation {
                    place: a.to_string(),
                    exponent: mult,
                }));
            }
            root = &root * &a.pow(mult as u64 / 2);
        }
        let c = g.lc();
        Ok(match c.square_verdict(cfg)? {
            SquareVerdict::Square(s) => {
                let r = RatFunc::new(root.scale(&s), self.den().clone())?;
                debug_assert!(r.square() == *self);
                SquareVerdict::Square(r)
            }
            SquareVerdict::NonSquare(w) => SquareVerdict::NonSquare(NonSquareWitness::LeadingConstant {
                constant: c.to_string(),
                inner: Box::new(w),
            }),
            SquareVerdict::ProbablySquare { primes_tried } => SquareVerdict::ProbablySquare { primes_tried },
        })
    }
}

impl<F: SquareOracle> SquareOracle for QuadElem<F> {
    fn square_verdict(&self, cfg: &SquareConfig) -> Result<SquareVerdict<Self>, ArithError> {
        let Some(ext) = self.ext().cloned() else {
            return Ok(match self.u().square_verdict(cfg)? {
                SquareVerdict::Square(r) => SquareVerdict::Square(QuadElem::base(r)),
                SquareVerdict::NonSquare(w) => SquareVerdict::NonSquare(w),
                SquareVerdict::ProbablySquare { primes_tried } => SquareVerdict::ProbablySquare { primes_tried },
            });
        };
        let (u, v) = (self.u(), self.v());
        if v.is_zero() {
            if u.is_zero() {
                return Ok(SquareVerdict::Square(Self::zero()));
            }
            let base = u.square_verdict(cfg)?;
            if let SquareVerdict::Square(r) = base {
                return Ok(SquareVerdict::Square(ext.embed(r)));
            }
            let tw = u.div_checked(ext.d()).unwrap().square_verdict(cfg)?;
            return Ok(match (base, tw) {
                (_, SquareVerdict::Square(t)) => SquareVerdict::Square(ext.elem(F::zero(), t)),
                (SquareVerdict::NonSquare(b), SquareVerdict::NonSquare(t)) => {
                    SquareVerdict::NonSquare(NonSquareWitness::BaseAndTwist { base: Box::new(b), twisted: Box::new(t) })
                }
                _ => SquareVerdict::ProbablySquare { primes_tried: 0 },
            });
        }
        let norm = self.norm();
        let n = match norm.square_verdict(cfg)? {
            SquareVerdict::Square(n) => n,
            SquareVerdict::NonSquare(w) => {
                return Ok(SquareVerdict::NonSquare(NonSquareWitness::Norm {
                    norm: norm.to_string(),
                    inner: Box::new(w),
                }))
            }
            SquareVerdict::ProbablySquare { primes_tried } => {
                return Ok(SquareVerdict::ProbablySquare { primes_tried })
            }
        };
        let half = F::from_rational(&Rational::new(BigInt::one(), BigInt::from(2)));
        let mut wits = Vec::new();
        let mut undecided = false;
        for cand in [u.add_ref(&n).mul_ref(&half), u.sub_ref(&n).mul_ref(&half)] {
            match cand.square_verdict(cfg)? {
                SquareVerdict::Square(s) if !s.is_zero() => {
                    let t = v.div_checked(&s.add_ref(&s)).unwrap();
                    let r = ext.elem(s, t);
                    if r.square() == *self {
                        return Ok(SquareVerdict::Square(r));
                    }
                }
                SquareVerdict::NonSquare(w) => wits.push(w),
                SquareVerdict::ProbablySquare { .. } => undecided = true,
                _ => {}
            }
        }
        if undecided || wits.len() < 2 {
            return Ok(SquareVerdict::ProbablySquare { primes_tried: 0 });
        }
        let minus = Box::new(wits.pop().unwrap());
        let plus = Box::new(wits.pop().unwrap());
        Ok(SquareVerdict::NonSquare(NonSquareWitness::HalfTraces { plus, minus }))
    }
}

/// Square test for a nonzero element; zero has no square class and is rejected.
pub fn is_square_in_field<F: SquareOracle>(beta: &F, cfg: &SquareConfig) -> Result<SquareVerdict<F>, ArithError> {
    if beta.is_zero() {
        return Err(ArithError::Invalid("square class of zero is undefined".into()));
    }
    let v = beta.square_verdict(cfg)?;
    if let SquareVerdict::Square(r) = &v {
        assert!(r.square() == *beta, "square root failed re-verification");
    }
    Ok(v)
}

/// Formats a rational for witness text.
pub fn show(q: &Rational) -> String {
    format_rational(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::numfield::NumberField;
    use crate::arith::quadext::QuadField;
    use crate::arith::rational::{int, rat};

    #[test]
    fn rationals() {
        let cfg = SquareConfig::default();
        assert_eq!(rat(9, 4).square_verdict(&cfg).unwrap(), SquareVerdict::Square(rat(3, 2)));
        let v = int(-1).square_verdict(&cfg).unwrap();
        let SquareVerdict::NonSquare(w) = v else { panic!() };
        assert!(int(-1).verify_nonsquare(&w, &cfg));
        assert!(!int(4).verify_nonsquare(&w, &cfg));
    }

    #[test]
    fn quadratic_number_field() {
        let cfg = SquareConfig::default();
        let k = NumberField::new(Poly::from_i64s(&[-2, 0, 1]), "r").unwrap();
        let r = k.generator();
        let a = NfElem::from_i64(3) + NfElem::from_i64(2) * r.clone();
        let root = a.square_verdict(&cfg).unwrap().root().unwrap();
        assert_eq!(root.square(), a);
        let b = NfElem::from_i64(2) + r.clone();
        let v = b.square_verdict(&cfg).unwrap();
        let SquareVerdict::NonSquare(w) = v else { panic!("{v:?}") };
        assert!(b.verify_nonsquare(&w, &cfg));
        assert!(!a.verify_nonsquare(&w, &cfg));
    }

    #[test]
    fn quartic_field_roots() {
        let cfg = SquareConfig::default();
        // Q(zeta_5)
        let k = NumberField::new(Poly::from_i64s(&[1, 1, 1, 1, 1]), "z").unwrap();
        let z = k.generator();
        let s = z.clone() * z.clone() - NfElem::from_rational(&rat(7, 3)) * z.clone() + NfElem::from_i64(5);
        let sq = s.square();
        let root = sq.square_verdict(&cfg).unwrap().root().unwrap();
        assert!(root == s || root == -s.clone());
        assert!(s.square_verdict(&cfg).unwrap().is_nonsquare() || s.square_verdict(&cfg).unwrap().is_square());
        assert!(z.square_verdict(&cfg).unwrap().is_square());
    }

    #[test]
    fn function_field_and_quadratic_extension() {
        let cfg = SquareConfig::default();
        type R = RatFunc<Rational>;
        let x = R::x();
        let sq = (x.clone() + R::one()).square() * R::from_i64(4);
        assert!(sq.square_verdict(&cfg).unwrap().is_square());
        assert!(x.square_verdict(&cfg).unwrap().is_nonsquare());
        let k = QuadField::new(int(2), "s", &cfg).unwrap();
        let a = k.elem(int(3), int(2));
        assert_eq!(a.square_verdict(&cfg).unwrap().root().unwrap().square(), a);
        let b = k.elem(int(2), int(1));
        assert!(b.square_verdict(&cfg).unwrap().is_nonsquare());
        assert!(k.embed(int(2)).square_verdict(&cfg).unwrap().is_square());
    }
}
