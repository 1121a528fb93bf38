use equicurve_core::arith::cyclotomic::omega_field;
use equicurve_core::arith::rational::int;
use equicurve_core::arith::{Field, NfElem, Poly, Rational, SquareConfig};
use equicurve_core::brauer::hilbert::{hilbert_symbol, relevant_places};
use equicurve_core::brauer::split::CriterionReport;
use equicurve_core::brauer::{
    formal_w2, is_split_kx, is_split_q, square_criterion_check, verify_split_certificate, ConstField, FormalClass,
    SplitCertificate, Word,
};
use proptest::prelude::*;

fn p(c: &[i64]) -> Poly<NfElem> {
    Poly::from_i64s(c)
}

#[test]
fn reference_split_and_non_split_symbols() {
    let cfg = SquareConfig::default();
    let q = ConstField::rationals();

    let d = is_split_kx(&q, &p(&[0, -3]), &p(&[0, 27, 1]), &cfg).unwrap();
    assert_eq!(d.line("t"), "SPLIT CERT 3 1 t");

    let d = is_split_kx(&q, &p(&[0, 1]), &p(&[2, -4, 1]), &cfg).unwrap();
    assert_eq!(d.is_split(), Some(false));
    assert!(d.line("x").contains("2 + sqrt(2) non-square in Q(sqrt(2)), norm 2"));

    let d = is_split_kx(&q, &p(&[-1]), &p(&[0, 1]), &cfg).unwrap();
    assert!(d.line("x").starts_with("NOTSPLIT RESIDUE -1 non-square in Q at x"));

    let one = p(&[1]);
    assert!(verify_split_certificate(&one, &one, &SplitCertificate::new(p(&[1]), p(&[0]), p(&[1]))));
}

#[test]
fn a4_certificate_is_linear_in_the_parameter() {
    // (144b - 3t^2) 2^2 + (192b - 3t^2) (sqrt -3)^2 = (sqrt -3 t)^2 for several b.
    let (k, w) = omega_field(3);
    let kk = ConstField::number_field(&k);
    let s = w.add_ref(&w).add_ref(&NfElem::one());
    for b in [1i64, -1, 2] {
        let f = kk.attach(&p(&[144 * b, 0, -3]));
        let g = kk.attach(&p(&[192 * b, 0, -3]));
        let c = SplitCertificate::new(
            Poly::constant(NfElem::from_i64(2)),
            Poly::constant(s.clone()),
            Poly::from_coeffs(vec![NfElem::zero(), s.clone()]),
        );
        assert!(verify_split_certificate(&f, &g, &c), "b = {b}");
    }
}

#[test]
fn formal_w2_identities() {
    let w = |s: &str| Word::parse(s).unwrap();
    assert_eq!(
        formal_w2(&[w("1"), w("a"), w("b"), w("a*b")]),
        FormalClass::parse("(-a,-b) + (-1,-1)").unwrap()
    );
    assert_eq!(
        formal_w2(&[w("1"), w("a"), w("b"), w("c"), w("a*b*c")]),
        FormalClass::parse("(-a*c,-b*c) + (-1,-1)").unwrap()
    );
}

fn word() -> impl Strategy<Value = Word> {
    prop::collection::btree_set(prop::sample::select(vec!["-1", "a", "b", "c", "d", "2", "3"]), 0..4).prop_map(|s| {
        let mut w = Word::one();
        for g in s {
            w.toggle(g);
        }
        w
    })
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

/// Whether `a y^2 + b z^2` is a nonzero square for some `|y|, |z| <= 50`,
/// i.e. `<1, -a, -b>` has a small nontrivial zero with `x != 0`, or `a` or
/// `b` alone is a square.
fn brute_force_isotropic(a: i64, b: i64) -> bool {
    for y in 0..=50i64 {
        for z in 0..=50i64 {
            if y == 0 && z == 0 {
                continue;
            }
            let v = a * y * y + b * z * z;
            if v == 0 {
                // a y^2 = -b z^2 with x = 0 is also a nontrivial zero.
                return true;
            }
            if v > 0 {
                let r = (v as f64).sqrt().round() as i64;
                if (r - 1..=r + 1).any(|s| s >= 0 && s * s == v) {
                    return true;
                }
            }
        }
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hilbert_product_formula(a in nonzero_rational(), b in nonzero_rational()) {
        let prod: i32 = relevant_places([&a, &b]).iter().map(|v| hilbert_symbol(&a, &b, v)).product();
        prop_assert_eq!(prod, 1);
    }

    #[test]
    fn is_split_q_agrees_with_small_points(a in -40i64..=40, b in -40i64..=40) {
        prop_assume!(a != 0 && b != 0);
        if brute_force_isotropic(a, b) {
            prop_assert!(is_split_q(&int(a), &int(b)));
        }
    }

    #[test]
    fn formal_relations(a in word(), b in word(), c in word()) {
        let x = FormalClass::symbol(&a, &b.mul(&c)).add(&FormalClass::symbol(&a, &b)).add(&FormalClass::symbol(&a, &c));
        prop_assert!(x.is_zero());
        let y = FormalClass::symbol(&a, &a).add(&FormalClass::symbol(&a, &Word::minus_one()));
        prop_assert!(y.is_zero());
        let n = FormalClass::symbol(&a, &b);
        prop_assert_eq!(FormalClass::parse(&n.to_string()).unwrap(), n.clone());
        prop_assert_eq!(n.add(&FormalClass::zero()), n);
    }

    #[test]
    fn generated_split_symbols_decide_split(
        fc in prop::collection::vec(-4i64..=4, 1..=3),
        pc in prop::collection::vec(-3i64..=3, 1..=2),
        rc in prop::collection::vec(-4i64..=4, 1..=3),
        qc in 1i64..=3,
    ) {
        let cfg = SquareConfig::default();
        let k = ConstField::rationals();
        let (f, pp, r) = (p(&fc), p(&pc), p(&rc));
        prop_assume!(!f.is_zero());
        let q = Poly::constant(NfElem::from_i64(qc));
        let num = &(&r * &r) - &(&f * &(&pp * &pp));
        let g = num.scale(&NfElem::from_rational(&Rational::new(1.into(), (qc * qc).into())));
        prop_assume!(!g.is_zero());
        prop_assume!(f.is_squarefree() && g.is_squarefree());
        let cert = SplitCertificate::new(pp, q, r);
        prop_assert!(verify_split_certificate(&f, &g, &cert));
        let d = is_split_kx(&k, &f, &g, &cfg).unwrap();
        prop_assert_eq!(d.is_split(), Some(true), "{}", d.line("x"));
        prop_assert!(d.verify(&k, &[(f.clone(), g.clone())], &cfg));
        let reports = square_criterion_check(&k, &f, &g, Some(&cert), &cfg).unwrap();
        prop_assert!(reports.iter().all(CriterionReport::passed));
    }
}
