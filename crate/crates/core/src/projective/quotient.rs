//! Dihedral compressions defined over the base field and quotient maps by
//! finite Möbius groups.

use crate::arith::linalg::nullspace;
use crate::arith::{Field, NfElem, Poly, QuadElem, QuadField, RatFunc, SquareConfig};
use crate::brauer::ConstField;

use super::catalog::{embedding_catalog, equivariant_check, EmbeddingInstance, EmbeddingSpec};
use super::map::{BinaryForm, ProjectiveMap};
use super::matrix::{closure, ProjMatrix};
use super::ProjectiveError;

/// A self-map of degree `n + 1` commuting with the rotation embedding of
/// `D_2n`, together with that embedding.
#[derive(Clone, Debug)]
pub struct Compression {
    pub map: ProjectiveMap<NfElem>,
    pub embedding: EmbeddingInstance,
}

/// `((x + s y)^(n+1) + (x - s y)^(n+1) : s^-1 ((x + s y)^(n+1) - (x - s y)^(n+1)))`
/// with `s^2 = beta_n`, expanded in `K(s)` and brought back to `K`.
pub fn conjugated_compression(n: u32, k: &ConstField, cfg: &SquareConfig) -> Result<Compression, ProjectiveError> {
    let embedding = embedding_catalog(&EmbeddingSpec::Dihedral { n }, k, cfg)?;
    let beta = embedding.param("beta").expect("rotation embeddings record beta").clone();
    // s is formal: the product rule s^2 = beta holds whether or not beta is a square.
    let ext = QuadField::new_unchecked(beta, "s");
    let s = ext.sqrt_d();
    let lin = |sign: i64| {
        BinaryForm::from_coeffs(vec![s.mul_ref(&QuadElem::from_i64(sign)), QuadElem::one()])
    };
    let e = (n + 1) as usize;
    let (plus, minus) = (lin(1).pow(e), lin(-1).pow(e));
    let s_inv = s.inv().ok_or(ProjectiveError::Degenerate("beta_n = 0".into()))?;
    let f0 = plus.add(&minus);
    let f1 = plus.sub(&minus).scale(&s_inv);
    let down = |f: &BinaryForm<QuadElem<NfElem>>| -> Result<BinaryForm<NfElem>, ProjectiveError> {
        let c: Option<Vec<NfElem>> = f.coeffs().iter().map(QuadElem::in_base).collect();
        c.map(BinaryForm::from_coeffs)
            .ok_or_else(|| ProjectiveError::Internal("a sqrt(beta) term survived the expansion".into()))
    };
    let map = ProjectiveMap::new(down(&f0)?, down(&f1)?)?;
    if map.degree() != e {
        return Err(ProjectiveError::Internal(format!("degree {} instead of {e}", map.degree())));
    }
    if !equivariant_check(&map, &embedding) {
        return Err(ProjectiveError::Internal("compression is not equivariant".into()));
    }
    Ok(Compression { map, embedding })
}

/// The first non-constant elementary symmetric function of the orbit
/// `{g(x)}` of the group generated by `gens`, in the chart `x = X/Y`.
pub fn invariant_quotient_map<F: Field>(gens: &[ProjMatrix<F>], max_order: usize) -> Result<RatFunc<F>, ProjectiveError> {
    let elems = closure(gens, max_order).ok_or_else(|| ProjectiveError::Invalid(format!("group larger than {max_order}")))?;
    let n = elems.len();
    // prod (Z - g(x)) with coefficients in K(x)
    let mut p: Poly<RatFunc<F>> = Poly::one();
    for g in &elems {
        p = &p * &Poly::from_coeffs(vec![g.mobius().neg_ref(), RatFunc::one()]);
    }
    for k in 1..=n {
        let c = p.coeff(n - k);
        if c.as_constant().is_none() {
            let e = if k % 2 == 1 { c.neg_ref() } else { c };
            if e.map_degree() != n {
                return Err(ProjectiveError::Internal(format!("invariant of degree {} for a group of order {n}", e.map_degree())));
            }
            return Ok(e);
        }
    }
    Err(ProjectiveError::Internal("all symmetric functions of the orbit are constant".into()))
}

/// Whether `f` is fixed by every element of the group generated by `gens`.
pub fn is_invariant<F: Field>(f: &RatFunc<F>, gens: &[ProjMatrix<F>]) -> bool {
    gens.iter().all(|g| f.compose(&g.mobius()) == *f)
}

/// The Möbius transformation `M` with `to = M o from`, if one exists.
pub fn chart_change<F: Field>(from: &RatFunc<F>, to: &RatFunc<F>) -> Option<ProjMatrix<F>> {
    let (p, q) = (from.num(), from.den());
    let (r, s) = (to.num(), to.den());
    // r (c p + d q) = s (a p + b q)
    let cols = [-(s * p), -(s * q), r * p, r * q];
    let rows = cols.iter().map(|c| c.deg0()).max()? + 1;
    let m: Vec<Vec<F>> = (0..rows).map(|i| cols.iter().map(|c| c.coeff(i)).collect()).collect();
    let ker = nullspace(&m, 4);
    if ker.len() != 1 {
        return None;
    }
    let v = &ker[0];
    ProjMatrix::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::cyclotomic::real_cyclotomic;
    use crate::arith::Rational;

    fn real_field(n: u32) -> ConstField {
        ConstField::from_option(real_cyclotomic(n as usize).field.as_ref())
    }

    /// Coefficients by the binomial theorem: `2 C(N, j) beta^(j/2)` for even
    /// `j` in the first form and `2 C(N, j) beta^((j-1)/2)` for odd `j` in
    /// the second, at `x^(N-j) y^j`.
    fn binomial_oracle(n: u32, beta: &NfElem) -> (Vec<NfElem>, Vec<NfElem>) {
        let e = (n + 1) as usize;
        let mut c0 = vec![NfElem::zero(); e + 1];
        let mut c1 = vec![NfElem::zero(); e + 1];
        let mut binom = 1i64;
        for j in 0..=e {
            let two_c = NfElem::from_i64(2 * binom);
            if j % 2 == 0 {
                c0[e - j] = two_c.mul_ref(&beta.pow((j / 2) as u64));
            } else {
                c1[e - j] = two_c.mul_ref(&beta.pow(((j - 1) / 2) as u64));
            }
            binom = binom * (e - j) as i64 / (j + 1) as i64;
        }
        (c0, c1)
    }

    #[test]
    fn compression_matches_binomial_expansion() {
        let cfg = SquareConfig::default();
        for n in 3..=8u32 {
            let c = conjugated_compression(n, &real_field(n), &cfg).unwrap();
            let beta = c.embedding.param("beta").unwrap();
            let (c0, c1) = binomial_oracle(n, beta);
            let want = ProjectiveMap::new(BinaryForm::from_coeffs(c0), BinaryForm::from_coeffs(c1)).unwrap();
            assert_eq!(c.map, want, "n = {n}");
            assert_eq!(c.map.degree(), n as usize + 1);
        }
    }

    #[test]
    fn n_three_over_q() {
        let c = conjugated_compression(3, &ConstField::rationals(), &SquareConfig::default()).unwrap();
        assert_eq!(c.embedding.param("alpha").unwrap().to_rational(), Some(Rational::new((-1).into(), 2.into())));
        // beta = -3/4: (2x^4 + 12 beta x^2 y^2 + 2 beta^2 y^4 : 8 x^3 y + 8 beta x y^3)
        let (f0, f1) = c.map.forms();
        let r = |n: i64, d: i64| NfElem::from_rational(&Rational::new(n.into(), d.into()));
        assert_eq!(f0.coeffs(), vec![r(9, 8), r(0, 1), r(-9, 1), r(0, 1), r(2, 1)]);
        assert_eq!(f1.coeffs(), vec![r(0, 1), r(-6, 1), r(0, 1), r(8, 1), r(0, 1)]);
    }

    #[test]
    fn quotient_by_an_involution() {
        let b = Rational::from_i64(5);
        let g = ProjMatrix::new(Rational::from_i64(0), b.clone(), Rational::from_i64(1), Rational::from_i64(0)).unwrap();
        let f = invariant_quotient_map(&[g.clone()], 10).unwrap();
        // x + b/x
        let want = RatFunc::new(Poly::from_i64s(&[5, 0, 1]), Poly::from_i64s(&[0, 1])).unwrap();
        assert_eq!(f, want);
        assert!(is_invariant(&f, &[g]));
    }

    #[test]
    fn central_involution_of_the_cyclic_rotation() {
        // sigma^2 for n = 4 is (0, beta; 1, 0) with beta = -1.
        let k = ConstField::rationals();
        let e = embedding_catalog(&EmbeddingSpec::Cyclic { n: 4 }, &k, &SquareConfig::default()).unwrap();
        let s = &e.images[0];
        let central = s.mul(s);
        assert_eq!(central, ProjMatrix::from_i64s(0, -1, 1, 0).unwrap());
        let f = invariant_quotient_map(&[central], 4).unwrap();
        let displayed = RatFunc::new(Poly::from_i64s(&[-1, 0, 1]), Poly::from_i64s(&[0, 2])).unwrap();
        let m = chart_change(&f, &displayed).unwrap();
        assert_eq!(m, ProjMatrix::from_i64s(1, 0, 0, 2).unwrap());
        assert_eq!(m.mobius().compose(&f), displayed);
        let full = invariant_quotient_map(&e.images, 8).unwrap();
        assert_eq!(full.map_degree(), 4);
        assert!(is_invariant(&full, &e.images));
    }

    #[test]
    fn unrelated_functions_have_no_chart_change() {
        let f: RatFunc<Rational> = RatFunc::from_poly(Poly::from_i64s(&[0, 0, 1]));
        let g = RatFunc::from_poly(Poly::from_i64s(&[0, 0, 0, 1]));
        assert!(chart_change(&f, &g).is_none());
    }
}
