//! The octahedral computation on the conic `a^2 + b^2 + 1 = 0`: an invariant
//! of the order-6 subgroup and its characteristic polynomial over the Klein
//! four-group of sign changes.

use crate::arith::tower::TowerFunc;
use crate::arith::{Field, Poly, QuadElem, QuadField, RatFunc, Rational, SquareConfig};
use crate::brauer::ConstField;
use crate::forms::{compare_invariants, serre_invariant, EtaleAlgebra, QuadForm};

use super::{Check, CurveError};

type Q = Rational;

/// `u + v b` in `Q(a)[b]/(b^2 + a^2 + 1)`.
pub type ConicFieldElem = QuadElem<RatFunc<Q>>;

fn apoly(c: &[i64]) -> RatFunc<Q> {
    RatFunc::from_poly(Poly::from_i64s(c))
}

/// The function field of the conic with `a` and `b`.
pub fn conic_field(cfg: &SquareConfig) -> Result<(ConicFieldElem, ConicFieldElem), CurveError> {
    let ext = QuadField::new(apoly(&[-1, 0, -1]), "b", cfg)?;
    Ok((ext.embed(RatFunc::x()), ext.sqrt_d()))
}

/// Image of `e` under the automorphism `a -> ia`, `b -> ib`.
pub fn substitute(e: &ConicFieldElem, ia: &ConicFieldElem, ib: &ConicFieldElem) -> ConicFieldElem {
    let at = |r: &RatFunc<Q>| {
        let lift = |c: &Q| QuadElem::base(RatFunc::constant(c.clone()));
        r.num().eval_with(ia, lift).div_checked(&r.den().eval_with(ia, lift)).expect("denominator stays nonzero")
    };
    at(e.u()).add_ref(&at(e.v()).mul_ref(ib))
}

#[derive(Clone, Debug)]
pub struct OctahedralReport {
    pub alpha: ConicFieldElem,
    /// `t` as a function of `a`.
    pub t: RatFunc<Q>,
    /// `Y^4 - 6 Y^2 + 8 Y + t + 24` over `Q(t)`.
    pub minimal_poly: Poly<TowerFunc>,
    pub checks: Vec<Check>,
}

/// `(a-1)^2 (a+1)^2 (2a^2+1)^2 (a^2+2)^2 / (a^4 (a^2+1)^2)`.
pub fn t_formula() -> RatFunc<Q> {
    let num = [apoly(&[-1, 1]), apoly(&[1, 1]), apoly(&[1, 0, 2]), apoly(&[2, 0, 1])]
        .iter()
        .fold(RatFunc::one(), |acc, f| acc.mul_ref(&f.square()));
    let den = apoly(&[0, 0, 0, 0, 1]).mul_ref(&apoly(&[1, 0, 1]).square());
    num.div_checked(&den).expect("nonzero")
}

pub fn octahedral_quadric_computation(cfg: &SquareConfig) -> Result<OctahedralReport, CurveError> {
    let (a, b) = conic_field(cfg)?;
    let inv = |x: &ConicFieldElem| x.inv().expect("nonzero");
    let alpha = [a.clone(), b.mul_ref(&inv(&a)), inv(&b), inv(&a), b.clone(), a.mul_ref(&inv(&b))]
        .iter()
        .fold(ConicFieldElem::zero(), |acc, x| acc.add_ref(x));
    let on_conic = |ia: &ConicFieldElem, ib: &ConicFieldElem| ia.square().add_ref(&ib.square()).add_ref(&ConicFieldElem::one()).is_zero();

    let mut checks = Vec::new();
    let sigma = (b.mul_ref(&inv(&a)), inv(&a));
    let tau = (inv(&a), b.mul_ref(&inv(&a)));
    for (name, (ia, ib)) in [("sigma", &sigma), ("tau", &tau)] {
        let ok = on_conic(ia, ib) && substitute(&alpha, ia, ib) == alpha;
        checks.push(Check::new(&format!("{name}-fixes-alpha"), ok, format!("{name} preserves the conic and fixes alpha")));
    }

    // Sign matrices diag(e1, e2, e3) of determinant 1 on (x : y : z), a = x/z, b = y/z.
    let signs = [(1, 1, 1), (-1, -1, 1), (-1, 1, -1), (1, -1, -1)];
    let mut prod: Poly<ConicFieldElem> = Poly::one();
    for (e1, e2, e3) in signs {
        let ia = a.mul_ref(&ConicFieldElem::from_i64(e1 * e3));
        let ib = b.mul_ref(&ConicFieldElem::from_i64(e2 * e3));
        let g_alpha = substitute(&alpha, &ia, &ib);
        prod = &prod * &Poly::from_coeffs(vec![g_alpha.neg_ref(), ConicFieldElem::one()]);
    }
    let t = t_formula();
    let coeffs: Option<Vec<RatFunc<Q>>> = prod.coeffs().iter().map(QuadElem::in_base).collect();
    let coeffs = coeffs.ok_or_else(|| CurveError::Internal("a coefficient involves b".into()))?;
    let expect = [t.add_ref(&apoly(&[24])), apoly(&[8]), apoly(&[-6]), apoly(&[0]), apoly(&[1])];
    checks.push(Check::new("product-expansion", coeffs == expect, "prod (Y - g(alpha)) = Y^4 - 6Y^2 + 8Y + t + 24"));

    let tp = |c: &[i64]| TowerFunc::from_poly(Poly::from_i64s(c));
    let minimal_poly = Poly::from_coeffs(vec![tp(&[24, 1]), tp(&[8]), tp(&[-6]), tp(&[0]), tp(&[1])]);
    let serre = serre_invariant(&EtaleAlgebra::new(minimal_poly.clone())?)?;
    let target = QuadForm::new(vec![tp(&[1]), tp(&[3]), tp(&[-27, -1]), tp(&[0, -81, -3])])?;
    let cmp = compare_invariants(&ConstField::rationals(), "t", &serre.form, &target, cfg)?;
    checks.push(Check::new("trace-form", cmp.passed(), "<1, 3, -(t+27), -3t(t+27)> at the level of disc and w2"));
    Ok(OctahedralReport { alpha, t, minimal_poly, checks })
}
