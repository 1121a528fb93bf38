use equicurve_core::arith::cyclotomic::omega_field;
use equicurve_core::arith::{Field, NfElem, Rational, SquareConfig};
use equicurve_core::brauer::{is_split_q, ConstField};
use equicurve_core::projective::{
    embedding_catalog, equivariant_check, verify_relations, BinaryForm, EmbeddingInstance, EmbeddingSpec,
    ProjMatrix, ProjectiveMap,
};
use proptest::prelude::*;

fn q(n: i64) -> NfElem {
    NfElem::from_i64(n)
}

fn forms(c0: &[i64], c1: &[i64]) -> ProjectiveMap<NfElem> {
    ProjectiveMap::new(BinaryForm::from_i64s(c0), BinaryForm::from_i64s(c1)).unwrap()
}

#[test]
fn icosahedral_compression_is_equivariant() {
    let (k5, _) = omega_field(5);
    let e = embedding_catalog(&EmbeddingSpec::A5, &ConstField::number_field(&k5), &SquareConfig::default()).unwrap();
    // (x^11 + 66 x^6 y^5 - 11 x y^10 : -11 x^10 y - 66 x^5 y^6 + y^11), coefficients by power of x
    let mut c0 = vec![0i64; 12];
    let mut c1 = vec![0i64; 12];
    c0[11] = 1;
    c0[6] = 66;
    c0[1] = -11;
    c1[10] = -11;
    c1[5] = -66;
    c1[0] = 1;
    let f = forms(&c0, &c1);
    assert_eq!(f.degree(), 11);
    assert!(equivariant_check(&f, &e));
    assert!(!equivariant_check(&ProjectiveMap::power_map(11), &e));
}

fn conjugate(e: &EmbeddingInstance, m: &ProjMatrix<NfElem>) -> EmbeddingInstance {
    let mut c = e.clone();
    c.images = e.images.iter().map(|g| m.mul(g).mul(&m.inverse())).collect();
    c
}

#[test]
fn octahedral_compression_survives_conjugation() {
    let (k4, _) = omega_field(4);
    let e = embedding_catalog(&EmbeddingSpec::S4, &ConstField::number_field(&k4), &SquareConfig::default()).unwrap();
    let f = forms(&[1, 0, 0, 0, 7, 0, 0, 0], &[0, 0, 0, -7, 0, 0, 0, -1]);
    let m = ProjMatrix::from_i64s(1, 2, 0, 1).unwrap();
    let mm = ProjectiveMap::from_matrix(&m);
    let mi = ProjectiveMap::from_matrix(&m.inverse());
    let fc = mm.compose(&f).compose(&mi);
    let ec = conjugate(&e, &m);
    assert!(verify_relations(&ec).passed());
    assert!(equivariant_check(&fc, &ec));
    assert!(!equivariant_check(&f, &ec));
}

fn small_nonzero() -> impl Strategy<Value = i64> {
    (-30i64..=30).prop_filter("nonzero", |x| *x != 0)
}

fn form(deg: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-5i64..=5, deg + 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn klein_embeddings_for_split_pairs(a in small_nonzero(), b in small_nonzero()) {
        let (ra, rb) = (Rational::from_i64(a), Rational::from_i64(b));
        let k = ConstField::rationals();
        let r = embedding_catalog(&EmbeddingSpec::Klein { a: q(a), b: q(b) }, &k, &SquareConfig::default());
        if is_split_q(&ra, &rb) {
            let e = r.unwrap();
            let c = verify_relations(&e);
            prop_assert!(c.passed(), "{:?}", c);
            prop_assert_eq!(c.order, Some(4));
        } else {
            prop_assert_eq!(r.unwrap_err().to_string(), format!("(a,b) not split: ({a},{b})"));
        }
    }

    #[test]
    fn equivariance_ignores_scaling(s in small_nonzero(), n in 3u32..=6) {
        let e = embedding_catalog(&EmbeddingSpec::DiagonalCyclic { n: 2 }, &ConstField::rationals(), &SquareConfig::default()).unwrap();
        let odd = 2 * (n as usize) + 1;
        let f = ProjectiveMap::power_map(odd);
        prop_assert!(equivariant_check(&f, &e));
        let (f0, f1) = f.forms();
        let g = ProjectiveMap::new(f0.scale(&q(s)), f1.scale(&q(s))).unwrap();
        prop_assert!(equivariant_check(&g, &e));
        prop_assert!(!equivariant_check(&ProjectiveMap::power_map(2 * n as usize), &e));
    }

    #[test]
    fn degrees_multiply_without_cancellation(a0 in form(2), a1 in form(2), b0 in form(3), b1 in form(3)) {
        let mk = |c0: &[i64], c1: &[i64]| ProjectiveMap::<Rational>::new(BinaryForm::from_i64s(c0), BinaryForm::from_i64s(c1));
        let (Ok(f), Ok(g)) = (mk(&a0, &a1), mk(&b0, &b1)) else { return Ok(()); };
        prop_assume!(f.degree() == 2 && g.degree() == 3);
        prop_assume!(f.resultant_nonzero() && g.resultant_nonzero());
        prop_assert_eq!(f.compose(&g).degree(), 6);
        prop_assert_eq!(g.compose(&f).degree(), 6);
    }
}
