use equicurve_core::arith::crt::crt_poly;
use equicurve_core::arith::factor::is_irreducible;
use equicurve_core::arith::rational::{int, rat};
use equicurve_core::arith::{
    is_square_in_field, Field, NfElem, NumberField, Poly, QuadElem, QuadField, Rational, SquareConfig, SquareOracle,
    SquareVerdict,
};
use proptest::prelude::*;

type P = Poly<Rational>;

fn p(c: &[i64]) -> P {
    P::from_i64s(c)
}

#[test]
fn squarefree_and_gcd_examples() {
    assert_eq!(p(&[0, 0, 1]).squarefree_part(), p(&[0, 1]));
    let prod = &(&(&p(&[1, 0, 1]) * &p(&[-1, 0, 1])) * &p(&[0, 2])) * &P::constant(int(4));
    assert_eq!(prod.squarefree_part(), p(&[0, -1, 0, 0, 0, 1]));
    let (g, _) = P::gcd_squarefree(&p(&[0, -1, 0, 1]), &p(&[-1, 0, 1])).unwrap();
    assert_eq!(g, p(&[-1, 0, 1]));
    assert!(P::gcd_squarefree(&P::zero(), &P::zero()).is_err());
}

#[test]
fn resultant_examples() {
    assert_eq!(P::resultant(&p(&[-1, 1]), &p(&[1, 1])), int(2));
    assert_eq!(P::resultant(&p(&[-2, 0, 1]), &p(&[0, 1])), int(-2));
    assert_eq!(P::resultant(&p(&[-2, 0, 1]), &p(&[-3, 0, 1])), int(1));
}

#[test]
fn irreducibility_examples() {
    assert!(is_irreducible(&p(&[-2, 0, 1])));
    assert!(!is_irreducible(&p(&[-1, 0, 1])));
    assert!(is_irreducible(&p(&[4, 0, 2, 0, 1])));
}

#[test]
fn crt_examples() {
    let x = p(&[0, 1]);
    assert_eq!(crt_poly(&[(P::one(), x.clone())]).unwrap(), P::one());
    assert_eq!(crt_poly(&[(P::one(), x), (p(&[2]), p(&[-1, 1]))]).unwrap(), p(&[1, 1]));
}

#[test]
fn square_examples_in_two_presentations() {
    let cfg = SquareConfig::default();
    match is_square_in_field(&int(4), &cfg).unwrap() {
        SquareVerdict::Square(r) => assert_eq!(r.square(), int(4)),
        v => panic!("{v:?}"),
    }
    assert!(is_square_in_field(&int(0), &cfg).is_err());

    // Q(sqrt2) as a quadratic extension.
    let k = QuadField::new(int(2), "r", &cfg).unwrap();
    let b = k.elem(int(3), int(2));
    let r = is_square_in_field(&b, &cfg).unwrap().root().unwrap();
    assert!(r == k.elem(int(1), int(1)) || r == k.elem(int(-1), int(-1)));
    let c = k.elem(int(2), int(1));
    let v = is_square_in_field(&c, &cfg).unwrap();
    assert!(v.is_nonsquare(), "{v:?}");
    assert_eq!(c.norm(), int(2));

    // Q(sqrt2) as a number field, presented by x^2 - 2 and by x^2 - 8 (x = 2 sqrt2).
    for (m, s) in [(p(&[-2, 0, 1]), rat(1, 1)), (p(&[-8, 0, 1]), rat(1, 2))] {
        let nf = NumberField::new(m, "r").unwrap();
        let sqrt2 = nf.generator().mul_ref(&NfElem::from_rational(&s));
        let b = NfElem::from_i64(3) + sqrt2.clone() * NfElem::from_i64(2);
        let r = b.square_verdict(&cfg).unwrap().root().unwrap();
        assert_eq!(r.square(), b);
        let c = NfElem::from_i64(2) + sqrt2;
        let v = c.square_verdict(&cfg).unwrap();
        let SquareVerdict::NonSquare(w) = v else { panic!("{v:?}") };
        assert!(c.verify_nonsquare(&w, &cfg));
    }
}

fn small_poly() -> impl Strategy<Value = P> {
    prop::collection::vec(-5i64..=5, 1..5).prop_map(|c| P::from_i64s(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn resultant_vanishes_iff_common_factor(a in small_poly(), b in small_poly()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let r = P::resultant(&a, &b);
        let g = P::gcd(&a, &b);
        prop_assert_eq!(r.is_zero(), g.deg0() > 0);
    }

    #[test]
    fn gcd_divides_and_leaves_coprime_cofactors(f in small_poly(), a in small_poly(), b in small_poly()) {
        let (x, y) = (&f * &a, &f * &b);
        prop_assume!(!x.is_zero() && !y.is_zero());
        let g = P::gcd(&x, &y);
        prop_assert!(g.is_monic());
        let (cx, cy) = (x.exact_div(&g).unwrap(), y.exact_div(&g).unwrap());
        prop_assert!(f.monic().divides(&g));
        prop_assert!(cx.deg0() == 0 || cy.deg0() == 0 || !P::resultant(&cx, &cy).is_zero());
    }

    #[test]
    fn quadratic_norm_identity(u in -20i64..20, v in -20i64..20, d in prop::sample::select(vec![2i64, 3, 5, -1, -3, 7])) {
        let k = QuadField::new(int(d), "s", &SquareConfig::default()).unwrap();
        let z = k.elem(int(u), int(v));
        let prod = z.clone() * z.conj();
        prop_assert_eq!(prod, QuadElem::base(int(u * u - d * v * v)));
    }

    #[test]
    fn squarefree_part_properties(a in small_poly(), b in small_poly()) {
        let f = &(&a * &a) * &b;
        prop_assume!(f.deg0() > 0);
        let s = f.squarefree_part();
        prop_assert!(s.divides(&f));
        prop_assert!(P::gcd(&s, &s.derivative()).is_constant());
    }

    #[test]
    fn crt_rereduces(r1 in small_poly(), r2 in small_poly(), a in -4i64..4, b in 5i64..9) {
        let m1 = p(&[-a, 1]).pow(3);
        let m2 = p(&[-b, 0, 1]);
        let r = crt_poly(&[(r1.clone(), m1.clone()), (r2.clone(), m2.clone())]).unwrap();
        prop_assert_eq!(r.rem(&m1), r1.rem(&m1));
        prop_assert_eq!(r.rem(&m2), r2.rem(&m2));
        prop_assert!(r.deg0() < 5);
    }

    #[test]
    fn nf_square_roots_verify(c in prop::collection::vec(-9i64..9, 3)) {
        let nf = NumberField::new(p(&[-1, -1, 0, 1]), "a").unwrap();
        let z = nf.elem(P::from_i64s(&c));
        prop_assume!(!z.is_zero());
        let sq = z.square();
        let r = sq.square_verdict(&SquareConfig::default()).unwrap().root().unwrap();
        prop_assert_eq!(r.square(), sq);
    }
}
