//! Curves `y^2 = x P(x)`, `z^2 = x Q(x)` with the Klein four-group acting by
//! sign changes of `y` and `z`, their fixed points, and the chart of the
//! blow-up over `x = 0`.

use std::sync::Arc;

use crate::arith::factor::factor;
use crate::arith::linalg::rank;
use crate::arith::rational::rational_sqrt;
use crate::arith::{is_square_in_field, Field, NfElem, NumberField, Poly, Rational, SquareConfig, SquareVerdict};

use super::mpoly::MPoly;
use super::{Check, CurveError, PARAM_SEARCH_BOUND};

type Q = Rational;

fn q(n: i64) -> Q {
    Q::from_i64(n)
}

fn rational_roots(p: &Poly<Q>) -> Vec<Q> {
    let mut r: Vec<Q> = factor(p).factors.iter().filter(|(f, _)| f.deg0() == 1).map(|(f, _)| -f.coeff(0) / f.coeff(1)).collect();
    r.sort();
    r
}

/// Whether `xi`, a root of the irreducible `h`, is a non-square in `Q(xi)`.
pub fn certify_xi_nonsquare(h: &Poly<Q>, cfg: &SquareConfig) -> Result<(), CurveError> {
    let verdict = if h.deg0() == 1 {
        let xi = -h.coeff(0) / h.coeff(1);
        is_square_in_field(&xi, cfg)?.decided()
    } else {
        let k = NumberField::new(h.monic(), "xi")?;
        is_square_in_field(&k.generator(), cfg)?.decided()
    };
    match verdict {
        Some(false) => Ok(()),
        Some(true) => Err(CurveError::Invalid(format!("xi is a square for h = {}", h.to_string_var("x")))),
        None => Err(CurveError::Inconclusive(format!("square test for a root of {}", h.to_string_var("x")))),
    }
}

/// `P` and `Q` for the root `xi` of `h` and the shift `alpha`, with the
/// conditions of the construction verified.
#[derive(Clone, Debug)]
pub struct KleinPolys {
    pub h: Poly<Q>,
    pub alpha: Q,
    pub p: Poly<Q>,
    pub q: Poly<Q>,
    pub checks: Vec<Check>,
}

fn shifted_polys(h: &Poly<Q>, alpha: &Q) -> Option<(Poly<Q>, Poly<Q>)> {
    let x = Poly::<Q>::x();
    let shift = |c: &Q| &x - &Poly::constant(c.clone());
    let hs = h.compose(&shift(alpha));
    let a1 = alpha + q(1);
    let h_neg = h.eval(&-alpha.clone());
    let scale = &a1 * &h_neg;
    if scale.is_zero() {
        return None;
    }
    let inner = &(&shift(&a1) * &hs) + &Poly::constant(scale.clone());
    let num = &shift(alpha) * &inner;
    let p = num.exact_div(&Poly::from_coeffs(vec![q(0), scale]))?;
    let lin = Poly::from_coeffs(vec![a1, q(-1)]);
    let qq = (&lin * &hs).scale(&(alpha * h.eval(&q(0))));
    Some((p, qq))
}

/// Searches `alpha = 1, 2, 3, ...` for the first shift meeting all conditions.
pub fn klein_construction_polys(h: &Poly<Q>, cfg: &SquareConfig) -> Result<KleinPolys, CurveError> {
    if h.deg0() == 0 {
        return Err(CurveError::Invalid("h must be non-constant".into()));
    }
    let h = h.monic();
    certify_xi_nonsquare(&h, cfg)?;
    for a in 1..=PARAM_SEARCH_BOUND {
        let alpha = q(a);
        let Some((p, qq)) = shifted_polys(&h, &alpha) else { continue };
        let Ok(c) = conditions(&p, &qq, cfg) else { continue };
        let a1 = &alpha + q(1);
        let mut checks = c.checks;
        let at_alpha = &alpha * &qq.eval(&alpha);
        let at_next = &a1 * &p.eval(&a1);
        checks.push(Check::new(
            "x1=alpha",
            p.eval(&alpha).is_zero() && rational_sqrt(&at_alpha).is_some(),
            format!("alpha Q(alpha) = {at_alpha}"),
        ));
        checks.push(Check::new(
            "x2=alpha+1",
            qq.eval(&a1).is_zero() && rational_sqrt(&at_next).is_some(),
            format!("(alpha+1) P(alpha+1) = {at_next}"),
        ));
        if checks.iter().all(|c| c.passed) {
            return Ok(KleinPolys { h, alpha, p, q: qq, checks });
        }
    }
    Err(CurveError::Exhausted(format!("no admissible alpha <= {PARAM_SEARCH_BOUND}")))
}

struct Conditions {
    x1: Q,
    z1: Q,
    x2: Q,
    y2: Q,
    checks: Vec<Check>,
}

fn square_root(c: &Q, cfg: &SquareConfig) -> Result<Option<Q>, CurveError> {
    Ok(match is_square_in_field(c, cfg)? {
        SquareVerdict::Square(r) => Some(r),
        _ => None,
    })
}

/// A root `r` of `f` with `r g(r)` a square, and that square root.
fn root_with_square(f: &Poly<Q>, g: &Poly<Q>, cfg: &SquareConfig) -> Result<Option<(Q, Q)>, CurveError> {
    for r in rational_roots(f) {
        if let Some(s) = square_root(&(&r * &g.eval(&r)), cfg)? {
            return Ok(Some((r, s)));
        }
    }
    Ok(None)
}

fn conditions(p: &Poly<Q>, qq: &Poly<Q>, cfg: &SquareConfig) -> Result<Conditions, CurveError> {
    if !p.is_squarefree() || !qq.is_squarefree() {
        return Err(CurveError::Invalid("P and Q must be separable".into()));
    }
    if Poly::gcd(p, qq).deg0() > 0 {
        return Err(CurveError::Condition("(i)", "P and Q have a common root".into()));
    }
    let (p0, q0) = (p.eval(&q(0)), qq.eval(&q(0)));
    if p0.is_zero() || q0.is_zero() {
        return Err(CurveError::Condition("(ii)", format!("P(0) = {p0}, Q(0) = {q0}")));
    }
    let (x1, z1) = root_with_square(p, qq, cfg)?
        .ok_or_else(|| CurveError::Condition("(iii)", "no rational root x1 of P with x1 Q(x1) a square".into()))?;
    let (x2, y2) = root_with_square(qq, p, cfg)?
        .ok_or_else(|| CurveError::Condition("(iii)", "no rational root x2 of Q with x2 P(x2) a square".into()))?;
    let checks = vec![
        Check::new("condition-(i)", true, "gcd(P, Q) = 1"),
        Check::new("condition-(ii)", true, format!("P(0) = {p0}, Q(0) = {q0}")),
        Check::new("condition-(iii)", true, format!("x1 = {x1}, x2 = {x2}")),
    ];
    Ok(Conditions { x1, z1, x2, y2, checks })
}

/// The affine chart `x = y u`, `z = y v` of the blow-up at the origin.
#[derive(Clone, Debug)]
pub struct BlowupChart {
    /// Polynomials in `(y, u, v)`.
    pub generators: Vec<MPoly<Q>>,
    /// `v^2` at the exceptional points, `Q(0)/P(0)`.
    pub v_squared: Q,
    /// Field of definition of the exceptional points, when not Q.
    pub field: Option<Arc<NumberField>>,
    pub exceptional: Vec<[NfElem; 3]>,
}

impl BlowupChart {
    pub fn describe(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.to_string_vars(&["y", "u", "v"])).collect()
    }
}

#[derive(Clone, Debug)]
pub struct KleinCurve {
    pub p: Poly<Q>,
    pub q: Poly<Q>,
    /// Fixed by `(x, y, z) -> (x, -y, z)`.
    pub fixed_a: [Q; 3],
    /// Fixed by `(x, y, z) -> (x, y, -z)`.
    pub fixed_b: [Q; 3],
    pub chart: BlowupChart,
    pub checks: Vec<Check>,
}

impl KleinCurve {
    pub fn equations(&self) -> [String; 2] {
        [
            format!("y^2 = x*({})", self.p.to_string_var("x")),
            format!("z^2 = x*({})", self.q.to_string_var("x")),
        ]
    }
}

fn nf(c: &Q) -> NfElem {
    NfElem::from_rational(c)
}

fn jacobian_rank<E: Field>(gens: &[MPoly<Q>], pt: &[E], embed: impl Fn(&Q) -> E + Copy) -> usize {
    let m: Vec<Vec<E>> =
        gens.iter().map(|g| (0..pt.len()).map(|i| g.derivative(i).eval_with(pt, embed)).collect()).collect();
    rank(&m)
}

fn vanish<E: Field>(gens: &[MPoly<Q>], pt: &[E], embed: impl Fn(&Q) -> E + Copy) -> bool {
    gens.iter().all(|g| g.eval_with(pt, embed).is_zero())
}

/// Verifies the conditions, the two smooth fixed points and the blow-up chart.
pub fn klein_curve(p: &Poly<Q>, qq: &Poly<Q>, cfg: &SquareConfig) -> Result<KleinCurve, CurveError> {
    let c = conditions(p, qq, cfg)?;
    let mut checks = c.checks;

    // (x, y, z)
    let [x, y, z] = [0, 1, 2].map(|i| MPoly::<Q>::var(3, i));
    let xp = MPoly::univariate_at(&(&Poly::x() * p), &x);
    let xq = MPoly::univariate_at(&(&Poly::x() * qq), &x);
    let eqs = [y.mul(&y).sub(&xp), z.mul(&z).sub(&xq)];
    let id = |a: &Q| a.clone();
    let fixed_a = [c.x1.clone(), q(0), c.z1.clone()];
    let fixed_b = [c.x2.clone(), c.y2.clone(), q(0)];
    for (name, pt) in [("fixed-point-A", &fixed_a), ("fixed-point-B", &fixed_b)] {
        let ok = vanish(&eqs, pt, id) && jacobian_rank(&eqs, pt, id) == 2;
        checks.push(Check::new(name, ok, format!("({}, {}, {}) smooth", pt[0], pt[1], pt[2])));
    }
    let sign_fixed = |pt: &[Q; 3], neg_y: bool, neg_z: bool| {
        let moved = [pt[0].clone(), if neg_y { -pt[1].clone() } else { pt[1].clone() }, if neg_z { -pt[2].clone() } else { pt[2].clone() }];
        moved == *pt
    };
    checks.push(Check::new("e1-fixes-A", sign_fixed(&fixed_a, true, false), "(x, -y, z)"));
    checks.push(Check::new("e2-fixes-B", sign_fixed(&fixed_b, false, true), "(x, y, -z)"));

    let chart = blowup_chart(p, qq)?;
    let one = |a: &Q| nf(a);
    for (i, pt) in chart.exceptional.iter().enumerate() {
        let ok = vanish(&chart.generators, pt, one) && jacobian_rank(&chart.generators, pt, one) == 2;
        checks.push(Check::new(&format!("exceptional-point-{}", i + 1), ok, format!("(0, 0, {})", pt[2])));
    }
    // e1 e2 acts on the chart by (y, u, v) -> (-y, -u, v)
    let stable = chart.generators.iter().all(|g| {
        let h = g.flip_signs(&[true, true, false]);
        h == *g || h == g.scale(&q(-1))
    });
    checks.push(Check::new("e1e2-preserves-chart", stable, "(y, u, v) -> (-y, -u, v) fixes the exceptional points"));
    Ok(KleinCurve { p: p.clone(), q: qq.clone(), fixed_a, fixed_b, chart, checks })
}

fn blowup_chart(p: &Poly<Q>, qq: &Poly<Q>) -> Result<BlowupChart, CurveError> {
    let [y, u, v] = [0, 1, 2].map(|i| MPoly::<Q>::var(3, i));
    let yu = y.mul(&u);
    let (p0, q0) = (p.eval(&q(0)), qq.eval(&q(0)));
    let drop_constant = |f: &Poly<Q>| (f - &Poly::constant(f.coeff(0))).exact_div(&Poly::x()).expect("x divides f - f(0)");
    let (p1, q1) = (drop_constant(p), drop_constant(qq));
    let g1 = y.sub(&u.mul(&MPoly::univariate_at(p, &yu)));
    let g2 = y.mul(&v).mul(&v).sub(&u.mul(&MPoly::univariate_at(qq, &yu)));
    let uu = u.mul(&u);
    let g3 = MPoly::constant(3, q0.clone())
        .sub(&v.mul(&v).scale(&p0))
        .sub(&uu.mul(&MPoly::univariate_at(&p1, &yu)).scale(&q0))
        .add(&uu.mul(&MPoly::univariate_at(&q1, &yu)).scale(&p0));
    let v_squared = &q0 / &p0;
    let (field, v0) = match rational_sqrt(&v_squared) {
        Some(r) => (None, nf(&r)),
        None => {
            let k = NumberField::new(Poly::from_coeffs(vec![-v_squared.clone(), q(0), q(1)]), "v")?;
            let g = k.generator();
            (Some(k), g)
        }
    };
    let zero = NfElem::zero();
    let exceptional = vec![[zero.clone(), zero.clone(), v0.clone()], [zero.clone(), zero, v0.neg_ref()]];
    Ok(BlowupChart { generators: vec![g1, g2, g3], v_squared, field, exceptional })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_for_sqrt_two() {
        let cfg = SquareConfig::default();
        let k = klein_construction_polys(&Poly::from_i64s(&[-2, 0, 1]), &cfg).unwrap();
        assert!(k.checks.iter().all(|c| c.passed));
        // Q has the root alpha + 1 and P the root alpha
        assert!(k.p.eval(&k.alpha).is_zero());
        assert!(k.q.eval(&(&k.alpha + q(1))).is_zero());
        let c = klein_curve(&k.p, &k.q, &cfg).unwrap();
        assert!(c.checks.iter().all(|c| c.passed), "{:?}", c.checks);
    }

    #[test]
    fn displayed_formula_by_hand() {
        // h = x - 5, alpha = 1: h(x - 1) = x - 6, h(-1) = -6
        // P = (x-1)((x-2)(x-6) - 12)/(-12 x) = -(x-1)(x-8)/12, Q = 1 (2 - x) (-5) (x - 6)
        let (p, qq) = shifted_polys(&Poly::from_i64s(&[-5, 1]), &q(1)).unwrap();
        let want_p = Poly::from_i64s(&[8, -9, 1]).scale(&Q::new((-1).into(), 12.into()));
        assert_eq!(p, want_p);
        assert_eq!(qq, Poly::from_i64s(&[60, -40, 5]));
    }

    #[test]
    fn rational_xi() {
        let cfg = SquareConfig::default();
        let k = klein_construction_polys(&Poly::from_i64s(&[-5, 1]), &cfg).unwrap();
        klein_curve(&k.p, &k.q, &cfg).unwrap();
        assert!(klein_construction_polys(&Poly::from_i64s(&[-4, 1]), &cfg).is_err());
    }

    #[test]
    fn reducible_h_is_rejected() {
        assert!(klein_construction_polys(&Poly::from_i64s(&[-1, 0, 1]), &SquareConfig::default()).is_err());
    }

    #[test]
    fn condition_three_screens_roots() {
        let e = klein_curve(&Poly::from_i64s(&[-1, 1]), &Poly::from_i64s(&[-2, 1]), &SquareConfig::default()).unwrap_err();
        assert!(matches!(e, CurveError::Condition("(iii)", _)), "{e}");
    }

    #[test]
    fn chart_generators_in_coordinates() {
        let chart = blowup_chart(&Poly::from_i64s(&[-1, 1]), &Poly::from_i64s(&[3, 1])).unwrap();
        let d = chart.describe();
        // y - u P(yu) = y - y u^2 + u
        assert_eq!(d[0], "-y*u^2 + y + u");
        assert_eq!(chart.v_squared, q(-3));
        assert!(chart.field.is_some());
    }
}
