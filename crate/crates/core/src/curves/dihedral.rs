//! Hyperelliptic curves `y^2 = x f((x^m + x^-m)/2)` with an action of the
//! dihedral group of order `2n`, `n = 2m`, and their Brauer class.

use crate::arith::factor::factor;
use crate::arith::ratfunc::eval_poly_at;
use crate::arith::tower::TowerFunc;
use crate::arith::{is_square_in_field, Field, NfElem, NumberField, Poly, QuadElem, QuadField, RatFunc, Rational, SquareConfig, SquareVerdict};
use crate::brauer::concrete::poly_word;
use crate::brauer::formal::{FormalClass, Word};
use crate::brauer::ConstField;
use crate::projective::{omega_in, roots_in, GroupId};

use super::hyperelliptic::{small_integers, sqrt_func, square_class_normalized, ActionMap, HyperellipticModel};
use super::klein::certify_xi_nonsquare;
use super::{Check, CurveError};

type Q = Rational;

/// Attempts at replacing `xi` by `c^2 xi` when `(s+1) f(T_m(s))` is not separable.
pub const XI_RESCALE_BOUND: i64 = 10;

/// `T_m` from `T_0 = 1`, `T_1 = s`, `T_(k+1) = 2 s T_k - T_(k-1)`.
pub fn chebyshev(m: usize) -> Poly<Q> {
    let s = Poly::<Q>::x();
    let two_s = s.scale(&Q::from_i64(2));
    let (mut a, mut b) = (Poly::one(), s);
    for _ in 0..m {
        let c = &(&two_s * &b) - &a;
        a = b;
        b = c;
    }
    a
}

/// `(x^m + x^-m)/2` as a rational function of `x`.
fn half_power_sum(m: usize) -> RatFunc<Q> {
    let num = &Poly::monomial(Q::from_i64(1), 2 * m) + &Poly::one();
    RatFunc::new(num, Poly::monomial(Q::from_i64(2), m)).expect("nonzero")
}

fn half_x_plus_inverse() -> RatFunc<Q> {
    half_power_sum(1)
}

/// Whether `T_m((x + 1/x)/2) = (x^m + x^-m)/2`.
pub fn chebyshev_identity(m: usize) -> bool {
    eval_poly_at(&chebyshev(m), &half_x_plus_inverse()) == half_power_sum(m)
}

/// `x^d h(1/x)`.
fn reversed(h: &Poly<Q>) -> Poly<Q> {
    Poly::from_coeffs(h.coeffs().iter().rev().cloned().collect())
}

/// `Res_z(H(z), w - T(z))` as a polynomial in `w`, by interpolation.
fn eliminate(hz: &Poly<Q>, t: &Poly<Q>) -> Poly<Q> {
    let d = hz.deg0();
    let pts: Vec<(Q, Q)> = (0..=d as i64)
        .map(|w| {
            let lin = &Poly::constant(Q::from_i64(w)) - t;
            (Q::from_i64(w), Poly::resultant(hz, &lin))
        })
        .collect();
    Poly::interpolate(&pts)
}

/// The base field `Q(xi)` and `xi` in it.
fn xi_field(h: &Poly<Q>) -> Result<(Option<std::sync::Arc<NumberField>>, NfElem), CurveError> {
    if h.deg0() == 1 {
        return Ok((None, NfElem::from_rational(&(-h.coeff(0) / h.coeff(1)))));
    }
    let k = NumberField::new(h.monic(), "xi")?;
    let g = k.generator();
    Ok((Some(k), g))
}

/// `sqrt(d)` in `Q(xi)` or in a quadratic extension of it.
fn square_root_of(d: &NfElem, name: &str, cfg: &SquareConfig) -> Result<QuadElem<NfElem>, CurveError> {
    Ok(match is_square_in_field(d, cfg)? {
        SquareVerdict::Square(r) => QuadElem::base(r),
        SquareVerdict::NonSquare(_) => QuadField::new(d.clone(), name, cfg)?.sqrt_d(),
        SquareVerdict::ProbablySquare { .. } => return Err(CurveError::Inconclusive(format!("square test for {d}"))),
    })
}

/// The irreducible factor over Q of the eliminant that vanishes at `T(root)`.
fn min_poly_of_value(hz: &Poly<Q>, t: &Poly<Q>, root: &QuadElem<NfElem>) -> Result<Poly<Q>, CurveError> {
    let value = t.eval_with(root, |c| QuadElem::base(NfElem::from_rational(c)));
    let elim = eliminate(hz, t).squarefree_part();
    for (g, _) in factor(&elim).factors {
        if g.eval_with(&value, |c| QuadElem::base(NfElem::from_rational(c))).is_zero() {
            return Ok(g.monic());
        }
    }
    Err(CurveError::Internal("no factor of the eliminant vanishes at the value".into()))
}

/// `f` vanishing at `T_m(gamma)` and `T_m(delta)`, `gamma^2 = 1 + xi`, `delta^2 = 1 + 1/xi`.
fn build_f(h: &Poly<Q>, tm: &Poly<Q>, cfg: &SquareConfig) -> Result<Poly<Q>, CurveError> {
    let (_, xi) = xi_field(h)?;
    let one = NfElem::one();
    let gamma = square_root_of(&one.add_ref(&xi), "gamma", cfg)?;
    let xi_inv = xi.inv().ok_or_else(|| CurveError::Invalid("xi = 0".into()))?;
    let delta = square_root_of(&one.add_ref(&xi_inv), "delta", cfg)?;
    let z2m1 = Poly::from_i64s(&[-1, 0, 1]);
    let g1 = min_poly_of_value(&h.compose(&z2m1), tm, &gamma)?;
    let g2 = min_poly_of_value(&reversed(h).compose(&z2m1), tm, &delta)?;
    Ok(if g1 == g2 { g1 } else { &g1 * &g2 })
}

#[derive(Clone, Debug)]
pub struct EvenDihedralCurve {
    pub n: u32,
    /// Minimal polynomial of the `xi` actually used (after any rescaling).
    pub h: Poly<Q>,
    pub xi_scale: i64,
    pub chebyshev: Poly<Q>,
    pub f: Poly<Q>,
    /// The curve in the form `Y^2 = s(x)` with `Y = x^e y`.
    pub model: HyperellipticModel,
    pub y_shift: usize,
    /// A rational point fixed by `(x, y) -> (x, -y)`, described in words.
    pub fixed_point: Option<String>,
    /// Scalar multiplying `f` when no fixed rational point was found.
    pub multiplier: i64,
    /// `(2 a (s+1) f(T_m(s)), s^2 - 1)` with `a` formal.
    pub delta_eta: FormalClass,
    pub checks: Vec<Check>,
}

/// Builds the curve for `n = 2m` over `k` containing a primitive `n`-th root
/// of unity, from the minimal polynomial `h` of a non-square `xi`.
pub fn even_dihedral_curve(n: u32, k: &ConstField, h: &Poly<Q>, cfg: &SquareConfig) -> Result<EvenDihedralCurve, CurveError> {
    if n < 4 || n % 2 == 1 {
        return Err(CurveError::Invalid(format!("n = {n} must be even and at least 4")));
    }
    let m = (n / 2) as usize;
    let omega = omega_in(k, n)?;
    let h = h.monic();
    certify_xi_nonsquare(&h, cfg)?;
    let tm = chebyshev(m);
    let mut checks = vec![Check::new("chebyshev-identity", chebyshev_identity(m), format!("T_{m}((x+1/x)/2) = (x^{m}+x^-{m})/2"))];

    // (s + 1) f(T_m(s)) must be separable; rescale xi by squares until it is.
    let mut found = None;
    for c in 1..=XI_RESCALE_BOUND {
        let d = h.deg0();
        let c2 = Q::from_i64(c * c);
        // minimal polynomial of c^2 xi
        let hc = Poly::from_coeffs((0..=d).map(|i| h.coeff(i) * c2.pow((d - i) as i32)).collect());
        let f = build_f(&hc, &tm, cfg)?;
        let sf = &Poly::from_i64s(&[1, 1]) * &f.compose(&tm);
        if sf.is_squarefree() {
            found = Some((c, hc, f));
            break;
        }
    }
    let (xi_scale, h, f) =
        found.ok_or_else(|| CurveError::Exhausted(format!("(s+1) f(T_m(s)) not separable for xi scaled by c^2, c <= {XI_RESCALE_BOUND}")))?;
    checks.push(Check::new("separable", true, format!("(s+1) f(T_{m}(s)) squarefree, xi scaled by {}", xi_scale * xi_scale)));

    // y^2 = x f(T_m(s)) with s = (x + 1/x)/2
    let x = RatFunc::<Q>::x();
    let ft = eval_poly_at(&f, &half_power_sum(m));
    let y2 = x.mul_ref(&ft);
    let s_fn = half_x_plus_inverse();
    let one_plus_inv = RatFunc::one().add_ref(&x.inv().expect("x is nonzero"));
    let lhs = y2.mul_ref(&one_plus_inv.square());
    let rhs = eval_poly_at(&(&Poly::from_i64s(&[2, 2]) * &f.compose(&tm)), &s_fn);
    checks.push(Check::new("function-field-identity", lhs == rhs, "y^2 (1 + 1/x)^2 = (2s + 2) f(T_m(s))"));

    // Y = x^e y clears the power of x in the denominator
    let j = y2.den().deg0();
    if *y2.den() != Poly::monomial(Q::from_i64(1), j) {
        return Err(CurveError::Internal("denominator is not a power of x".into()));
    }
    let e = j.div_ceil(2);
    let raw = k.rational_poly(&y2.num().shift(2 * e - j));
    let s = square_class_normalized(k, &raw, cfg)?;
    let mut model = HyperellipticModel::new(s.clone(), k.clone())?;

    let xk = TowerFunc::x();
    let sigma_x = xk.mul_ref(&RatFunc::constant(omega.square()));
    let tau_x = xk.inv().expect("x is nonzero");
    // tau fixes w = Y x^-e (1 + 1/x)
    let w0 = |t: &TowerFunc| t.powi(-(e as i64)).expect("nonzero").mul_ref(&TowerFunc::one().add_ref(&t.inv().expect("nonzero")));
    let tau_y = w0(&xk).div_checked(&w0(&tau_x)).expect("nonzero");
    let tau = ActionMap::new("t", tau_x, tau_y);
    let ratio = eval_poly_at(&s, &sigma_x).div_checked(&RatFunc::from_poly(s.clone())).expect("s is nonzero");
    let psi = sqrt_func(&ratio, cfg)?;
    let pres = GroupId::Dihedral(n).presentation();
    let order = 2 * n as usize;
    for cand in [psi.clone(), psi.neg_ref()] {
        model.action = vec![ActionMap::new("s", sigma_x.clone(), cand), tau.clone()];
        if model.failing_relator(&pres).is_none() && model.group(order + 1).map(|g| g.len()) == Some(order) {
            break;
        }
    }
    checks.extend(model.checks(order));
    let rel = model.failing_relator(&pres);
    checks.push(Check::new("dihedral-relations", rel.is_none(), rel.unwrap_or_else(|| "s^n, t^2, (st)^2".into())));

    // The subgroup <sigma^m, tau> has order 4 and fixes s = (x + 1/x)/2, which
    // has degree 2 over k(x); so its fixed field is k(s).
    let sigma_m = model.action[0].pow(m as u32);
    checks.push(Check::new("central-element-is-involution", sigma_m == ActionMap::involution(), format!("s^{m} = (x, -y)")));
    let sub = HyperellipticModel { s: s.clone(), field: k.clone(), action: vec![sigma_m, tau.clone()] };
    let sub_order = sub.group(5).map(|g| g.len());
    let s_k: TowerFunc = s_fn.map(NfElem::from_rational);
    let fixed = sub.action.iter().all(|g| s_k.compose(&g.x) == s_k);
    checks.push(Check::new(
        "fixed-subfield",
        sub_order == Some(4) && fixed && s_k.map_degree() == 2,
        "L'^<s^m, t> = k((x + 1/x)/2)",
    ));

    let (fixed_point, multiplier) = rational_point(k, &s, cfg)?;
    checks.push(Check::new(
        "rational-point",
        true,
        fixed_point.clone().unwrap_or_else(|| format!("twist by {multiplier} has a rational point")),
    ));

    // (2 a (s+1) f(T_m(s)), s^2 - 1)
    let first = k.rational_poly(&(&Poly::from_i64s(&[2, 2]) * &f.compose(&tm)));
    let word = poly_word(&first, "s")?.mul(&Word::gen("a"));
    let delta_eta = FormalClass::symbol(&word, &poly_word(&Poly::from_i64s(&[-1, 0, 1]), "s")?);

    Ok(EvenDihedralCurve { n, h, xi_scale, chebyshev: tm, f, model, y_shift: e, fixed_point, multiplier, delta_eta, checks })
}

/// A rational Weierstrass point if there is one; otherwise the first scalar
/// `c` in `1, -1, 2, -2, ...` with `c s(x0)` a nonzero square for some small
/// integer `x0`.
fn rational_point(k: &ConstField, s: &Poly<NfElem>, cfg: &SquareConfig) -> Result<(Option<String>, i64), CurveError> {
    if s.deg0() % 2 == 1 {
        return Ok((Some("the point at infinity".into()), 1));
    }
    if let Some(sq) = s.to_rational_poly() {
        if let Some(r) = roots_in(k, &sq).first() {
            return Ok((Some(format!("({r}, 0)")), 1));
        }
    }
    for c in small_integers() {
        for x0 in -10i64..=10 {
            let v = s.eval(&NfElem::from_i64(x0)).mul_ref(&NfElem::from_i64(c));
            let v = match k.nf() {
                Some(kk) => v.with_field(kk),
                None => v,
            };
            if !v.is_zero() && is_square_in_field(&v, cfg)?.decided() == Some(true) {
                return Ok((None, c));
            }
        }
    }
    Err(CurveError::Exhausted("no scalar multiplier gives a rational point".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::cyclotomic::omega_field;

    #[test]
    fn chebyshev_recurrence_and_identity() {
        assert_eq!(chebyshev(2), Poly::from_i64s(&[-1, 0, 2]));
        assert_eq!(chebyshev(3), Poly::from_i64s(&[0, -3, 0, 4]));
        for m in 1..=8 {
            assert!(chebyshev_identity(m), "m = {m}");
        }
    }

    #[test]
    fn eliminant_of_a_square_root() {
        // z^2 - 2 and w = 2 z^2 - 1 give (w - 3)^2
        let e = eliminate(&Poly::from_i64s(&[-2, 0, 1]), &chebyshev(2));
        assert_eq!(e, Poly::from_i64s(&[9, -6, 1]));
    }

    #[test]
    fn f_for_sqrt_two() {
        // T_2(gamma) = 1 + 2 sqrt2 and T_2(delta) = 1 + sqrt2
        let f = build_f(&Poly::from_i64s(&[-2, 0, 1]), &chebyshev(2), &SquareConfig::default()).unwrap();
        assert_eq!(f, &Poly::from_i64s(&[-7, -2, 1]) * &Poly::from_i64s(&[-1, -2, 1]));
    }

    #[test]
    fn order_eight_dihedral_over_gaussian_rationals() {
        let (k4, _) = omega_field(4);
        let k = ConstField::number_field(&k4);
        let c = even_dihedral_curve(4, &k, &Poly::from_i64s(&[-2, 0, 1]), &SquareConfig::default()).unwrap();
        assert!(c.checks.iter().all(|c| c.passed), "{:#?}", c.checks);
        assert_eq!(c.xi_scale, 1);
        assert!(c.fixed_point.is_some());
        let text = c.delta_eta.to_string();
        assert!(text.contains('a'), "{text}");
    }

    #[test]
    fn missing_root_of_unity() {
        let e = even_dihedral_curve(4, &ConstField::rationals(), &Poly::from_i64s(&[-2, 0, 1]), &SquareConfig::default());
        assert!(e.is_err());
    }
}
