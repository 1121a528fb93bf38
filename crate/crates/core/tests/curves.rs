use equicurve_core::arith::cyclotomic::omega_field;
use equicurve_core::arith::{Field, NfElem, Poly, Rational, SquareConfig};
use equicurve_core::brauer::ConstField;
use equicurve_core::curves::{
    all_passed, chebyshev_identity, even_cyclic_curve, even_dihedral_curve, first_admissible_a, genus, klein_construction_polys,
    klein_curve, CurveError,
};
use proptest::prelude::*;

#[test]
fn even_cyclic_models_for_several_orders() {
    let cfg = SquareConfig::default();
    let k = ConstField::rationals();
    for n in [4u32, 6] {
        let c = first_admissible_a(n, &k, &cfg).unwrap();
        assert!(all_passed(&c.checks), "n = {n}: {:#?}", c.checks);
        assert_eq!(c.t.map_degree(), (n / 2) as usize);
        // s divides the displayed product
        assert!(c.product.exact_div(&c.model.s).is_some());
    }
}

#[test]
fn genus_two_example_equation_and_action() {
    let c = even_cyclic_curve(4, &NfElem::one(), &ConstField::rationals(), &SquareConfig::default()).unwrap();
    assert_eq!(c.model.equation(), "y^2 = x^5 - x");
    let sigma = c.model.generator("sigma").unwrap();
    assert_eq!(sigma.describe(), "sigma: (x, y) -> (-1/x, (1/x^3)*y)");
}

#[test]
fn klein_curve_from_a_quadratic_xi() {
    let cfg = SquareConfig::default();
    let k = klein_construction_polys(&Poly::from_i64s(&[-2, 0, 1]), &cfg).unwrap();
    let c = klein_curve(&k.p, &k.q, &cfg).unwrap();
    assert!(all_passed(&c.checks), "{:#?}", c.checks);
    // the exceptional points need sqrt(Q(0)/P(0))
    let v = c.chart.v_squared.clone();
    assert_eq!(v, k.q.eval(&Rational::from_i64(0)) / k.p.eval(&Rational::from_i64(0)));
    assert_eq!(c.chart.exceptional.len(), 2);
}

#[test]
fn klein_condition_errors_name_the_condition() {
    let cfg = SquareConfig::default();
    let p = |c: &[i64]| Poly::<Rational>::from_i64s(c);
    // common root
    let e = klein_curve(&p(&[-1, 1]), &p(&[-1, 1]), &cfg).unwrap_err();
    assert!(matches!(e, CurveError::Condition("(i)", _)), "{e}");
    // vanishing at 0
    let e = klein_curve(&p(&[0, 1]), &p(&[-2, 1]), &cfg).unwrap_err();
    assert!(matches!(e, CurveError::Condition("(ii)", _)), "{e}");
    let e = klein_curve(&p(&[-1, 1]), &p(&[-2, 1]), &cfg).unwrap_err();
    assert_eq!(e.to_string(), "condition (iii) fails: no rational root x1 of P with x1 Q(x1) a square");
}

#[test]
fn dihedral_curve_of_order_eight() {
    let (k4, _) = omega_field(4);
    let k = ConstField::number_field(&k4);
    let c = even_dihedral_curve(4, &k, &Poly::from_i64s(&[-2, 0, 1]), &SquareConfig::default()).unwrap();
    assert!(all_passed(&c.checks), "{:#?}", c.checks);
    // f(T_2(s)) has the roots of T_2 = 1 + 2 sqrt2 and T_2 = 1 + sqrt2
    assert_eq!(c.f.deg0(), 4);
    assert!(c.model.genus().unwrap() >= 2);
}

fn squarefree_with_nonzero_constant() -> impl Strategy<Value = Poly<Rational>> {
    prop::collection::vec(-6i64..=6, 4..8)
        .prop_map(|c| Poly::<Rational>::from_i64s(&c))
        .prop_filter("squarefree, s(0) != 0, degree >= 3", |p| {
            p.deg0() >= 3 && p.is_squarefree() && !p.coeff(0).is_zero()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn genus_survives_inversion(s in squarefree_with_nonzero_constant()) {
        let d = s.deg0();
        let rev = Poly::from_coeffs(s.coeffs().iter().rev().cloned().collect());
        // x^(2g+2) s(1/x)
        let other = rev.shift(d % 2);
        prop_assert_eq!(genus(&other).unwrap(), genus(&s).unwrap());
    }

    #[test]
    fn klein_construction_for_rational_non_squares(xi in 2i64..60) {
        prop_assume!(((xi as f64).sqrt().round() as i64).pow(2) != xi);
        let cfg = SquareConfig::default();
        let k = klein_construction_polys(&Poly::from_i64s(&[-xi, 1]), &cfg).unwrap();
        let c = klein_curve(&k.p, &k.q, &cfg).unwrap();
        prop_assert!(all_passed(&c.checks));
    }

    #[test]
    fn chebyshev_identity_holds(m in 1usize..=8) {
        prop_assert!(chebyshev_identity(m));
    }
}
