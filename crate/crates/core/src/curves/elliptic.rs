//! An `A4`-invariant map of degree 12 on `y^2 = x^3 + b` over a field with a
//! primitive cube root of unity.

use crate::arith::tower::{TowerElem, TowerFunc};
use crate::arith::{Field, NfElem, Poly, QuadElem, QuadField, RatFunc, Rational, SquareConfig};
use crate::brauer::split::{verify_split_certificate, SplitCertificate};
use crate::brauer::ConstField;
use crate::forms::{compare_invariants, serre_invariant, EtaleAlgebra, QuadForm};
use crate::projective::{omega_in, roots_in};

use super::{Check, CurveError};

#[derive(Clone, Debug)]
pub struct EllipticReport {
    pub b: Rational,
    /// `t` in the function field of the curve.
    pub t: TowerElem,
    /// Minimal polynomial of `y` over `k(t)`.
    pub minimal_poly: Poly<TowerFunc>,
    /// `3t^2 - 144b`.
    pub a_form: TowerFunc,
    /// `(192b - 3t^2)(144b - 3t^2)`.
    pub b_form: TowerFunc,
    pub degree: usize,
    pub checks: Vec<Check>,
}

/// `u(ix) + v(ix) iy` for `u + v y`.
fn substitute(e: &TowerElem, ix: &TowerElem, iy: &TowerElem) -> TowerElem {
    let at = |r: &TowerFunc| {
        let lift = |c: &NfElem| QuadElem::base(RatFunc::constant(c.clone()));
        r.num().eval_with(ix, lift).div_checked(&r.den().eval_with(ix, lift)).expect("denominator stays nonzero")
    };
    at(e.u()).add_ref(&at(e.v()).mul_ref(iy))
}

pub fn a4_elliptic_computation(b: &Rational, k: &ConstField, cfg: &SquareConfig) -> Result<EllipticReport, CurveError> {
    if b.is_zero() {
        return Err(CurveError::Invalid("b = 0 gives a singular curve".into()));
    }
    let omega = omega_in(k, 3)?;
    let cubic = Poly::from_coeffs(vec![b.clone(), Rational::from_i64(0), Rational::from_i64(0), Rational::from_i64(1)]);
    let torsion = roots_in(k, &cubic);
    if torsion.len() != 3 {
        return Err(CurveError::Invalid(format!("2-torsion not rational: x^3 + {b} has {} roots in {}", torsion.len(), k.name())));
    }
    let bk = NfElem::from_rational(b);
    let c = |v: &NfElem| TowerFunc::constant(v.clone());
    let ext = QuadField::new(TowerFunc::from_poly(k.rational_poly(&cubic)), "y", cfg)?;
    let x = ext.embed(TowerFunc::x());
    let y = ext.sqrt_d();
    let kc = |v: &NfElem| ext.embed(c(v));
    let tfun = |y: &TowerElem| {
        let y2 = y.square();
        let num = y2.square().add_ref(&y2.mul_ref(&kc(&bk.mul_ref(&NfElem::from_i64(18))))).sub_ref(&kc(&bk.square().mul_ref(&NfElem::from_i64(27))));
        num.div_checked(&y2.mul_ref(y)).expect("y is nonzero")
    };
    let t = tfun(&y);

    let mut checks = Vec::new();
    // alpha: (x, y) -> (omega x, y)
    let ax = x.mul_ref(&kc(&omega));
    let on_curve = |ix: &TowerElem, iy: &TowerElem| iy.square() == ix.square().mul_ref(ix).add_ref(&kc(&bk));
    checks.push(Check::new("alpha-fixes-t", on_curve(&ax, &y) && substitute(&t, &ax, &y) == t, "(x, y) -> (omega x, y)"));
    for e in &torsion {
        // P + (e, 0) by the chord through P and (e, 0)
        let lambda = y.div_checked(&x.sub_ref(&kc(e))).expect("x - e is nonzero");
        let x3 = lambda.square().sub_ref(&x).sub_ref(&kc(e));
        let y3 = lambda.mul_ref(&x3.sub_ref(&kc(e))).neg_ref();
        let ok = on_curve(&x3, &y3) && substitute(&t, &x3, &y3) == t;
        checks.push(Check::new(&format!("translation-({e},0)-fixes-t"), ok, "chord addition"));
    }

    // p(Y) = Y^4 - t Y^3 + 18b Y^2 - 27b^2 kills y; it is linear in t with
    // coprime coefficients in Y, so irreducible over k(t).
    let y3 = y.square().mul_ref(&y);
    let p_at_y = y3.mul_ref(&y).sub_ref(&t.mul_ref(&y3)).add_ref(&y.square().mul_ref(&kc(&bk.mul_ref(&NfElem::from_i64(18)))))
        .sub_ref(&kc(&bk.square().mul_ref(&NfElem::from_i64(27))));
    let rest = k.rational_poly(&Poly::from_coeffs(vec![
        -(b * b * Rational::from_i64(27)),
        Rational::from_i64(0),
        b * Rational::from_i64(18),
        Rational::from_i64(0),
        Rational::from_i64(1),
    ]));
    let coprime = Poly::gcd(&rest, &Poly::monomial(NfElem::one(), 3)).deg0() == 0;
    checks.push(Check::new("minimal-polynomial-of-y", p_at_y.is_zero() && coprime, "Y^4 - tY^3 + 18bY^2 - 27b^2"));
    // x^3 = y^2 - b with y^2 - b not a cube in k(y)
    let y2_minus_b = Poly::from_coeffs(vec![-b.clone(), Rational::from_i64(0), Rational::from_i64(1)]);
    let x_degree = if y2_minus_b.is_squarefree() { 3 } else { 1 };
    let degree = 4 * x_degree;
    checks.push(Check::new("degree-12", degree == 12, format!("[k(E) : k(t)] = 4 * {x_degree}")));

    let tk = |v: &[Rational]| TowerFunc::from_poly(k.rational_poly(&Poly::from_coeffs(v.to_vec())));
    let q = |n: i64| Rational::from_i64(n);
    let minimal_poly = Poly::from_coeffs(vec![
        tk(&[-(b * b * q(27))]),
        tk(&[q(0)]),
        tk(&[b * q(18)]),
        tk(&[q(0), q(-1)]),
        tk(&[q(1)]),
    ]);
    let a_form = tk(&[-(b * q(144)), q(0), q(3)]);
    let f144 = tk(&[b * q(144), q(0), q(-3)]);
    let f192 = tk(&[b * q(192), q(0), q(-3)]);
    let b_form = f192.mul_ref(&f144);
    let serre = serre_invariant(&EtaleAlgebra::new(minimal_poly.clone())?)?;
    let target = QuadForm::new(vec![TowerFunc::one(), a_form.clone(), b_form.clone(), a_form.mul_ref(&b_form)])?;
    let cmp = compare_invariants(k, "t", &serre.form, &target, cfg)?;
    checks.push(Check::new("trace-form", cmp.passed(), "<1, A, B, AB>, A = 3t^2 - 144b, B = (192b - 3t^2)(144b - 3t^2)"));

    // (144b - 3t^2) 2^2 + (192b - 3t^2) (sqrt(-3))^2 = (sqrt(-3) t)^2
    let sqrt_m3 = omega.add_ref(&omega).add_ref(&NfElem::one());
    let is_root = sqrt_m3.square() == NfElem::from_i64(-3);
    let cert = SplitCertificate::new(
        Poly::constant(NfElem::from_i64(2)),
        Poly::constant(sqrt_m3.clone()),
        Poly::from_coeffs(vec![NfElem::zero(), sqrt_m3]),
    );
    let ok = is_root && verify_split_certificate(f144.num(), f192.num(), &cert);
    checks.push(Check::new("split-certificate", ok, cert.line("t")));

    Ok(EllipticReport { b: b.clone(), t, minimal_poly, a_form, b_form, degree, checks })
}
