use equicurve_core::arith::cyclotomic::omega_field;
use equicurve_core::arith::rational::int;
use equicurve_core::arith::tower::TowerFunc;
use equicurve_core::arith::{Field, NfElem, Poly, Rational, SquareConfig};
use equicurve_core::brauer::{ConstField, FormalClass, SplitCertificate};
use equicurve_core::forms::invariant::rational_classes_equal;
use equicurve_core::forms::{
    compare_invariants, concrete_class, diagonalize, diagonalize_in_order, etale_from_symbol, formal_image,
    same_square_class, serre_invariant, w2, DiscVariant, EtaleAlgebra, QuadForm, SquareClass,
};
use proptest::prelude::*;

fn tp(c: &[i64]) -> TowerFunc {
    TowerFunc::from_poly(Poly::from_i64s(c))
}

fn p(c: &[i64]) -> Poly<NfElem> {
    Poly::from_i64s(c)
}

#[test]
fn octahedral_trace_form_invariants() {
    let cfg = SquareConfig::default();
    let k = ConstField::rationals();
    // Y^4 - 6Y^2 + 8Y + t + 24 over Q(t)
    let poly = Poly::from_coeffs(vec![tp(&[24, 1]), tp(&[8]), tp(&[-6]), tp(&[0]), tp(&[1])]);
    let e = EtaleAlgebra::new(poly).unwrap();
    let s = serre_invariant(&e).unwrap();
    let target = QuadForm::new(vec![tp(&[1]), tp(&[3]), tp(&[-27, -1]), tp(&[0, -81, -3])]).unwrap();
    let cmp = compare_invariants(&k, "t", &s.form, &target, &cfg).unwrap();
    assert!(cmp.passed(), "{cmp:?}");
    assert_eq!(s.disc.class_rep(), tp(&[0, 1]));

    let class = concrete_class(&k, "t", &s.serre).unwrap();
    let cert = SplitCertificate::new(p(&[3]), p(&[1]), p(&[0, 1]));
    let (f, used) = class.simplify_with(&[((p(&[0, -3]), p(&[0, 27, 1])), cert)]).unwrap();
    assert_eq!(used.len(), 1);
    assert_eq!(f, FormalClass::parse("(-1,-1) + (2,t)").unwrap(), "{f}");
}

#[test]
fn a4_trace_form_over_eisenstein_constants() {
    let cfg = SquareConfig::default();
    let (kf, w) = omega_field(3);
    let k = ConstField::number_field(&kf);
    let b = -1i64;
    let c = |v: &[i64]| TowerFunc::from_poly(k.attach(&p(v)));
    // Y^4 - tY^3 + 18bY^2 - 27b^2
    let poly = Poly::from_coeffs(vec![c(&[-27 * b * b]), c(&[0]), c(&[18 * b]), c(&[0, -1]), c(&[1])]);
    let e = EtaleAlgebra::new(poly).unwrap();
    let s = serre_invariant(&e).unwrap();
    // <1, A, B, AB> with A = 3t^2 - 144b, B = (192b - 3t^2)(144b - 3t^2)
    let a = c(&[-144 * b, 0, 3]);
    let bb = c(&[192 * b, 0, -3]) * c(&[144 * b, 0, -3]);
    let target = QuadForm::new(vec![c(&[1]), a.clone(), bb.clone(), a * bb]).unwrap();
    let cmp = compare_invariants(&k, "t", &s.form, &target, &cfg).unwrap();
    assert!(cmp.passed(), "{cmp:?}");

    let class = concrete_class(&k, "t", &s.serre).unwrap();
    let sq = w.add_ref(&w).add_ref(&NfElem::one());
    let cert = SplitCertificate::new(
        Poly::constant(NfElem::from_i64(2)),
        Poly::constant(sq.clone()),
        Poly::from_coeffs(vec![NfElem::zero(), sq]),
    );
    let sym = (k.attach(&p(&[144 * b, 0, -3])), k.attach(&p(&[192 * b, 0, -3])));
    let (f, _) = class.simplify_with(&[(sym, cert)]).unwrap();
    assert_eq!(f, FormalClass::parse("(-1,-1)").unwrap(), "{f}");
}

#[test]
fn quartic_trace_form_entries() {
    let cfg = SquareConfig::default();
    for (a, b) in [(3i64, 5i64), (-2, 7), (5, -11), (1, 3)] {
        let (qa, qb) = (int(a), int(b));
        let poly = Poly::from_coeffs(vec![qb.clone(), int(0), int(-2 * a), int(0), int(1)]);
        let e = EtaleAlgebra::new(poly).unwrap();
        let d = diagonalize(&e.trace_form()).unwrap();
        let d2 = qa.square() - qb.clone();
        let expect = [int(1), qa.clone(), d2.clone(), qa.clone() * qb.clone() * d2.clone()];
        for (x, y) in d.form.diagonal.iter().zip(&expect) {
            assert_eq!(same_square_class(x, y, &cfg).unwrap(), Some(true), "A={a} B={b}");
        }
        // 64 B (A^2 - B)^2 has the class of B
        let s = serre_invariant(&e).unwrap();
        assert_eq!(same_square_class(&s.disc, &qb, &cfg).unwrap(), Some(true));
        let poly_disc = e.poly().discriminant();
        assert_eq!(same_square_class(&poly_disc, &qb, &cfg).unwrap(), Some(true));
    }
}

#[test]
fn discriminant_does_not_depend_on_pivot_order() {
    let e = EtaleAlgebra::new(Poly::from_i64s(&[7, -3, 0, 2, 1])).unwrap();
    let g = e.trace_form();
    let a = diagonalize_in_order(&g, &[0, 1, 2, 3]).unwrap();
    let b = diagonalize_in_order(&g, &[3, 1, 0, 2]).unwrap();
    assert!(a.verify(&g) && b.verify(&g));
    let cfg = SquareConfig::default();
    assert_eq!(same_square_class(&a.form.determinant(), &b.form.determinant(), &cfg).unwrap(), Some(true));
    assert!(rational_classes_equal(&w2(&a.form), &w2(&b.form)));
}

#[test]
fn padding_by_split_factors_keeps_the_invariant() {
    let cfg = SquareConfig::default();
    for (a, b) in [(-1i64, -1i64), (2, 3), (-5, 7)] {
        for n in [5, 6, 7] {
            let s = etale_from_symbol(&int(a), &int(b), DiscVariant::TrivialDisc, n, &cfg).unwrap();
            assert_eq!(s.algebra.dim(), n);
            let small = serre_invariant(&s.quartic).unwrap();
            let big = serre_invariant(&s.algebra).unwrap();
            assert!(rational_classes_equal(&small.serre, &big.serre), "({a}, {b}) n={n}");
        }
    }
}

/// Square-free rationals built from a random subset of generators.
fn generator_product() -> impl Strategy<Value = Rational> {
    prop::collection::vec(any::<bool>(), 7).prop_map(|bits| {
        let gens = [-1i64, 2, 3, 5, 7, 11, 13];
        let n = gens.iter().zip(bits).filter(|(_, b)| *b).fold(1i64, |a, (g, _)| a * g);
        int(n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn trivial_disc_recipe_realizes_the_symbol(a in generator_product(), b in generator_product()) {
        let cfg = SquareConfig::default();
        let s = etale_from_symbol(&a, &b, DiscVariant::TrivialDisc, 4, &cfg).unwrap();
        prop_assert!(s.check("x", &cfg).unwrap());
        let d = serre_invariant(&s.quartic).unwrap();
        let got = formal_image(&d.serre, "x").unwrap();
        let want = FormalClass::symbol(&a.class_word("x").unwrap(), &b.class_word("x").unwrap())
            .add(&FormalClass::parse("(-1,-1)").unwrap());
        prop_assert_eq!(got, want);
    }

    #[test]
    fn nontrivial_disc_recipe_realizes_the_symbol(a in generator_product(), b in generator_product()) {
        let cfg = SquareConfig::default();
        match etale_from_symbol(&a, &b, DiscVariant::NonTrivialDisc, 4, &cfg) {
            Ok(s) => {
                prop_assert!(s.check("x", &cfg).unwrap());
                // The presentation used is the same algebra as (a, b).
                prop_assert!(rational_classes_equal(&[(s.a.clone(), s.b.clone())], &[(a.clone(), b.clone())]));
            }
            Err(e) => {
                // Only when every presentation has -b a square or b = 1.
                let unit = |x: &Rational| x.is_one() || (-x.clone()).is_one();
                prop_assert!(unit(&a) && unit(&b), "{} for ({}, {})", e, a, b);
            }
        }
    }
}
