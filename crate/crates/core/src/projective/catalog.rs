//! Finite subgroups of `PGL2(K)` used by the constructions: presentations, the
//! embedding catalog and relation checking.

use std::fmt;

use crate::arith::cyclotomic::{cyclotomic_poly, half_cos_minpoly};
use crate::arith::absolute::rational_poly_roots_in;
use crate::arith::factor::factor;
use crate::arith::{is_square_in_field, Field, NfElem, Poly, Rational, SquareConfig, SquareVerdict};
use crate::brauer::{is_split_kx, ConstField};

use super::map::ProjectiveMap;
use super::matrix::{closure, ProjMatrix};
use super::ProjectiveError;

/// Height bound for the rational search of `lambda` in the Klein case.
pub const LAMBDA_HEIGHT: i64 = 150;
/// Coefficient bound for `c0 + c1*theta` candidates over a number field.
pub const LAMBDA_NF_COEFF: i64 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupId {
    Cyclic(u32),
    Dihedral(u32),
    Klein,
    A4,
    S4,
    A5,
}

impl GroupId {
    pub fn order(&self) -> usize {
        match self {
            GroupId::Cyclic(n) => *n as usize,
            GroupId::Dihedral(n) => 2 * *n as usize,
            GroupId::Klein => 4,
            GroupId::A4 => 12,
            GroupId::S4 => 24,
            GroupId::A5 => 60,
        }
    }

    /// `cyclic:<n>`, `dihedral:<n>`, `klein`, `a4`, `s4`, `a5`.
    pub fn parse(s: &str) -> Result<Self, ProjectiveError> {
        let s = s.trim().to_ascii_lowercase();
        let num = |t: &str| t.parse::<u32>().map_err(|_| ProjectiveError::Invalid(format!("bad group order in {s:?}")));
        Ok(match s.split_once(':') {
            Some(("cyclic", n)) => GroupId::Cyclic(num(n)?),
            Some(("dihedral", n)) => GroupId::Dihedral(num(n)?),
            None if s == "klein" => GroupId::Klein,
            None if s == "a4" => GroupId::A4,
            None if s == "s4" => GroupId::S4,
            None if s == "a5" => GroupId::A5,
            _ => return Err(ProjectiveError::Invalid(format!("unknown group {s:?}"))),
        })
    }

    pub fn presentation(&self) -> GroupPresentation {
        let (gens, rels): (&[&str], Vec<Vec<(usize, u32)>>) = match *self {
            GroupId::Cyclic(n) => (&["s"], vec![vec![(0, n)]]),
            GroupId::Dihedral(n) => (&["s", "t"], vec![vec![(0, n)], vec![(1, 2)], vec![(0, 1), (1, 1), (0, 1), (1, 1)]]),
            GroupId::Klein => (&["e1", "e2"], vec![vec![(0, 2)], vec![(1, 2)], vec![(0, 1), (1, 1), (0, 1), (1, 1)]]),
            GroupId::A4 => (&["u", "v"], vec![vec![(0, 2)], vec![(1, 3)], [(0, 1), (1, 1)].repeat(3)]),
            GroupId::S4 => (&["u", "v"], vec![vec![(0, 4)], vec![(1, 3)], [(0, 1), (1, 1)].repeat(2)]),
            // a = a^6 = (a^2)^3, so this is <x, v | x^5, v^2, (x v)^3> with x = a^2.
            GroupId::A5 => (&["u", "v"], vec![vec![(0, 5)], vec![(1, 2)], [(0, 2), (1, 1)].repeat(3)]),
        };
        GroupPresentation {
            id: *self,
            gens: gens.iter().map(|s| s.to_string()).collect(),
            relators: rels,
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupId::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupId::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupId::Klein => f.write_str("klein"),
            GroupId::A4 => f.write_str("a4"),
            GroupId::S4 => f.write_str("s4"),
            GroupId::A5 => f.write_str("a5"),
        }
    }
}

/// Relators are words of `(generator, exponent)` pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupPresentation {
    pub id: GroupId,
    pub gens: Vec<String>,
    pub relators: Vec<Vec<(usize, u32)>>,
}

impl GroupPresentation {
    pub fn word_string(&self, w: &[(usize, u32)]) -> String {
        w.iter()
            .map(|(g, e)| if *e == 1 { self.gens[*g].clone() } else { format!("{}^{e}", self.gens[*g]) })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Which catalog embedding to build.
#[derive(Clone, Debug)]
pub enum EmbeddingSpec {
    /// Klein four-group for a split `(a, b)`.
    Klein { a: NfElem, b: NfElem },
    /// `Z/2` acting by `x -> b/x`.
    Involution { b: NfElem },
    /// `Z/n` by the rotation `(alpha+1, beta; 1, alpha+1)`.
    Cyclic { n: u32 },
    /// `D_2n` by the rotation and `diag(1, -1)`.
    Dihedral { n: u32 },
    /// `D_2n` by the rotation and `(x, -y beta; 1, -x)` scaled by `y`,
    /// attached to the class of `x^2 - beta y^2`.
    DihedralTwisted { n: u32, x: NfElem, y: NfElem },
    /// `Z/n` by `diag(omega, 1)`.
    DiagonalCyclic { n: u32 },
    /// `D_2n` by `diag(omega, 1)` and `(0, a; 1, 0)`.
    DiagonalDihedral { n: u32, a: NfElem },
    A4,
    S4,
    A5,
}

#[derive(Clone, Debug)]
pub struct EmbeddingInstance {
    pub label: String,
    pub presentation: GroupPresentation,
    pub images: Vec<ProjMatrix<NfElem>>,
    pub params: Vec<(String, NfElem)>,
    pub field: ConstField,
}

impl EmbeddingInstance {
    pub fn param(&self, name: &str) -> Option<&NfElem> {
        self.params.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn image(&self, gen: &str) -> Option<&ProjMatrix<NfElem>> {
        self.presentation.gens.iter().position(|g| g == gen).map(|i| &self.images[i])
    }

    pub fn elements(&self) -> Option<Vec<ProjMatrix<NfElem>>> {
        closure(&self.images, 2 * self.presentation.id.order() + 1)
    }

    pub fn evaluate(&self, w: &[(usize, u32)]) -> ProjMatrix<NfElem> {
        w.iter().fold(ProjMatrix::identity(), |acc, (g, e)| acc.mul(&self.images[*g].pow(*e)))
    }
}

fn subscript(n: u32) -> String {
    n.to_string().chars().map(|c| char::from_u32(0x2080 + c.to_digit(10).unwrap()).unwrap()).collect()
}

/// Roots in `k` of a rational polynomial, the generator of `k` first when it is one.
pub fn roots_in(k: &ConstField, m: &Poly<Rational>) -> Vec<NfElem> {
    match k.nf() {
        None => factor(m)
            .factors
            .iter()
            .filter(|(f, _)| f.deg0() == 1)
            .map(|(f, _)| NfElem::from_rational(&(-f.coeff(0) / f.coeff(1))))
            .collect(),
        Some(nf) => {
            let mut r = rational_poly_roots_in(nf, m);
            let g = nf.generator();
            if let Some(i) = r.iter().position(|x| *x == g) {
                r.swap(0, i);
            }
            r
        }
    }
}

/// `alpha_n = cos(2 pi / n)` (some Galois conjugate) in `k`.
pub fn alpha_in(k: &ConstField, n: u32) -> Result<NfElem, ProjectiveError> {
    roots_in(k, &half_cos_minpoly(n as usize))
        .into_iter()
        .next()
        .ok_or_else(|| ProjectiveError::Missing(format!("α{} required", subscript(n))))
}

/// A primitive `n`-th root of unity in `k`.
pub fn omega_in(k: &ConstField, n: u32) -> Result<NfElem, ProjectiveError> {
    roots_in(k, &cyclotomic_poly(n as usize))
        .into_iter()
        .next()
        .ok_or_else(|| ProjectiveError::Missing(format!("ω{} required", subscript(n))))
}

fn square_verdict(x: &NfElem, cfg: &SquareConfig) -> Result<Option<bool>, ProjectiveError> {
    Ok(is_square_in_field(x, cfg)?.decided())
}

fn is_square(x: &NfElem, cfg: &SquareConfig) -> Result<bool, ProjectiveError> {
    square_verdict(x, cfg)?.ok_or_else(|| ProjectiveError::Inconclusive(format!("square test for {x}")))
}

/// Rationals `p/q` in lowest terms with `max(|p|, q) = h`.
fn rationals_of_height(h: i64) -> Vec<Rational> {
    if h == 0 {
        return vec![Rational::from_i64(0)];
    }
    let mut out = Vec::new();
    for q in 1..=h {
        let mut ps: Vec<i64> = (-h..=h).collect();
        ps.sort_by_key(|p| (p.abs(), *p < 0));
        for p in ps {
            if p.abs().max(q) == h && num_integer::gcd(p, q) == 1 {
                out.push(Rational::new(p.into(), q.into()));
            }
        }
    }
    out
}

/// Some `lambda` with `b (lambda^2 - a)` a nonzero square: rationals by
/// increasing height, then small `c0 + c1 theta` over a number field.
pub fn find_lambda(k: &ConstField, a: &NfElem, b: &NfElem, cfg: &SquareConfig) -> Option<NfElem> {
    let good = |l: &NfElem| {
        let v = b.mul_ref(&l.square().sub_ref(a));
        !v.is_zero() && matches!(is_square_in_field(&v, cfg), Ok(SquareVerdict::Square(_)))
    };
    for h in 0..=LAMBDA_HEIGHT {
        for r in rationals_of_height(h) {
            let l = attach(k, &NfElem::from_rational(&r));
            if good(&l) {
                return Some(l);
            }
        }
    }
    let nf = k.nf()?;
    let theta = nf.generator();
    for c1 in 1..=LAMBDA_NF_COEFF {
        for s1 in [c1, -c1] {
            for c0 in -LAMBDA_NF_COEFF..=LAMBDA_NF_COEFF {
                let l = theta.mul_ref(&NfElem::from_i64(s1)).add_ref(&NfElem::from_i64(c0));
                if good(&l) {
                    return Some(l);
                }
            }
        }
    }
    None
}

fn attach(k: &ConstField, x: &NfElem) -> NfElem {
    match k.nf() {
        Some(nf) => x.with_field(nf),
        None => x.clone(),
    }
}

/// Builds the catalog embedding described by `spec` over `k`, checking the
/// side conditions first.
pub fn embedding_catalog(
    spec: &EmbeddingSpec,
    k: &ConstField,
    cfg: &SquareConfig,
) -> Result<EmbeddingInstance, ProjectiveError> {
    let z = NfElem::zero;
    let one = NfElem::one;
    let m = |a: NfElem, b: NfElem, c: NfElem, d: NfElem| ProjMatrix::new(a, b, c, d);
    let build = |label: &str, id: GroupId, images: Vec<ProjMatrix<NfElem>>, params: Vec<(&str, NfElem)>| {
        EmbeddingInstance {
            label: label.to_string(),
            presentation: id.presentation(),
            images,
            params: params.into_iter().map(|(n, v)| (n.to_string(), v)).collect(),
            field: k.clone(),
        }
    };
    let rotation = |n: u32| -> Result<(NfElem, NfElem, ProjMatrix<NfElem>), ProjectiveError> {
        if n < 3 {
            return Err(ProjectiveError::Invalid(format!("rotation embeddings need n >= 3, got {n}")));
        }
        let alpha = alpha_in(k, n)?;
        let beta = alpha.square().sub_ref(&one());
        let s = m(alpha.add_ref(&one()), beta.clone(), one(), alpha.add_ref(&one()))?;
        Ok((alpha, beta, s))
    };
    Ok(match spec {
        EmbeddingSpec::Klein { a, b } => {
            let (a, b) = (attach(k, a), attach(k, b));
            if a.is_zero() || b.is_zero() {
                return Err(ProjectiveError::Invalid("a and b must be nonzero".into()));
            }
            if is_square(&a, cfg)? {
                let imgs = vec![m(z(), b.clone(), one(), z())?, ProjMatrix::diag(NfElem::from_i64(-1), one())?];
                build("klein, a square", GroupId::Klein, imgs, vec![("a", a), ("b", b)])
            } else if is_square(&b, cfg)? {
                let imgs = vec![ProjMatrix::diag(NfElem::from_i64(-1), one())?, m(z(), a.clone(), one(), z())?];
                build("klein, b square", GroupId::Klein, imgs, vec![("a", a), ("b", b)])
            } else {
                let c = |x: &NfElem| Poly::constant(x.clone());
                let split = is_split_kx(k, &c(&a), &c(&b), cfg)?.is_split();
                if split == Some(false) {
                    return Err(ProjectiveError::NotSplit(format!("({a},{b})")));
                }
                let lambda = find_lambda(k, &a, &b, cfg).ok_or(ProjectiveError::NoLambda)?;
                let imgs = vec![m(lambda.clone(), a.neg_ref(), one(), lambda.neg_ref())?, m(z(), a.clone(), one(), z())?];
                build("klein", GroupId::Klein, imgs, vec![("a", a), ("b", b), ("lambda", lambda)])
            }
        }
        EmbeddingSpec::Involution { b } => {
            let b = attach(k, b);
            build("involution", GroupId::Cyclic(2), vec![m(z(), b.clone(), one(), z())?], vec![("b", b)])
        }
        EmbeddingSpec::Cyclic { n } => {
            let (alpha, beta, s) = rotation(*n)?;
            build("cyclic rotation", GroupId::Cyclic(*n), vec![s], vec![("alpha", alpha), ("beta", beta)])
        }
        EmbeddingSpec::Dihedral { n } => {
            let (alpha, beta, s) = rotation(*n)?;
            let t = ProjMatrix::diag(one(), NfElem::from_i64(-1))?;
            build("dihedral rotation", GroupId::Dihedral(*n), vec![s, t], vec![("alpha", alpha), ("beta", beta)])
        }
        EmbeddingSpec::DihedralTwisted { n, x, y } => {
            let (alpha, beta, s) = rotation(*n)?;
            let (x, y) = (attach(k, x), attach(k, y));
            let a = x.square().sub_ref(&beta.mul_ref(&y.square()));
            if a.is_zero() {
                return Err(ProjectiveError::Invalid("x^2 - beta y^2 must be nonzero".into()));
            }
            let t = m(x.clone(), y.mul_ref(&beta).neg_ref(), y.clone(), x.neg_ref())?;
            build(
                "dihedral twisted",
                GroupId::Dihedral(*n),
                vec![s, t],
                vec![("alpha", alpha), ("beta", beta), ("x", x), ("y", y), ("a", a)],
            )
        }
        EmbeddingSpec::DiagonalCyclic { n } => {
            let w = omega_in(k, *n)?;
            build("cyclic diagonal", GroupId::Cyclic(*n), vec![ProjMatrix::diag(w.clone(), one())?], vec![("omega", w)])
        }
        EmbeddingSpec::DiagonalDihedral { n, a } => {
            let w = omega_in(k, *n)?;
            let a = attach(k, a);
            let imgs = vec![ProjMatrix::diag(w.clone(), one())?, m(z(), a.clone(), one(), z())?];
            build("dihedral diagonal", GroupId::Dihedral(*n), imgs, vec![("omega", w), ("a", a)])
        }
        EmbeddingSpec::S4 | EmbeddingSpec::A4 => {
            let w = omega_in(k, 4)?;
            let u = ProjMatrix::diag(w.clone(), one())?;
            let v = m(w.clone(), w.clone(), NfElem::from_i64(-1), one())?;
            if matches!(spec, EmbeddingSpec::S4) {
                build("octahedral", GroupId::S4, vec![u, v], vec![("omega", w)])
            } else {
                build("tetrahedral", GroupId::A4, vec![u.mul(&u), v], vec![("omega", w)])
            }
        }
        EmbeddingSpec::A5 => {
            let w = omega_in(k, 5)?;
            let c = w.add_ref(&w.inv().expect("root of unity"));
            let imgs = vec![ProjMatrix::diag(w.clone(), one())?, m(c.clone(), one(), one(), c.neg_ref())?];
            build("icosahedral", GroupId::A5, imgs, vec![("omega", w)])
        }
    })
}

/// Outcome of checking a presentation against its images.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationCheck {
    pub failing: Option<String>,
    /// Size of the generated subgroup, `None` if it exceeds twice the expected order.
    pub order: Option<usize>,
    pub expected: usize,
}

impl RelationCheck {
    pub fn passed(&self) -> bool {
        self.failing.is_none() && self.order == Some(self.expected)
    }
}

/// Every relator is the identity and the generated subgroup has the expected order.
pub fn verify_relations(e: &EmbeddingInstance) -> RelationCheck {
    let p = &e.presentation;
    let failing = p.relators.iter().find(|r| !e.evaluate(r).is_identity()).map(|r| p.word_string(r));
    RelationCheck { failing, order: e.elements().map(|v| v.len()), expected: p.id.order() }
}

/// `F o g = g o F` for every generator image `g`.
pub fn equivariant_check(f: &ProjectiveMap<NfElem>, e: &EmbeddingInstance) -> bool {
    e.images.iter().all(|g| {
        let gm = ProjectiveMap::from_matrix(g);
        f.compose(&gm) == gm.compose(f)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::cyclotomic::{omega_field, real_cyclotomic};

    fn q(n: i64) -> NfElem {
        NfElem::from_i64(n)
    }

    fn cfg() -> SquareConfig {
        SquareConfig::default()
    }

    #[test]
    fn klein_lambda_for_two_minus_one() {
        let e = embedding_catalog(&EmbeddingSpec::Klein { a: q(2), b: q(-1) }, &ConstField::rationals(), &cfg()).unwrap();
        assert_eq!(e.param("lambda"), Some(&q(1)));
        assert_eq!(e.images[0], ProjMatrix::from_i64s(1, -2, 1, -1).unwrap());
        assert_eq!(e.images[1], ProjMatrix::from_i64s(0, 2, 1, 0).unwrap());
        assert!(verify_relations(&e).passed());
    }

    #[test]
    fn klein_square_cases_and_refusal() {
        let k = ConstField::rationals();
        let e = embedding_catalog(&EmbeddingSpec::Klein { a: q(4), b: q(3) }, &k, &cfg()).unwrap();
        assert_eq!(e.images[0], ProjMatrix::from_i64s(0, 3, 1, 0).unwrap());
        assert_eq!(e.images[1], ProjMatrix::from_i64s(-1, 0, 0, 1).unwrap());
        let e = embedding_catalog(&EmbeddingSpec::Klein { a: q(3), b: q(9) }, &k, &cfg()).unwrap();
        assert_eq!(e.images[0], ProjMatrix::from_i64s(-1, 0, 0, 1).unwrap());
        let err = embedding_catalog(&EmbeddingSpec::Klein { a: q(-1), b: q(-1) }, &k, &cfg()).unwrap_err();
        assert_eq!(err.to_string(), "(a,b) not split: (-1,-1)");
    }

    #[test]
    fn dihedral_for_n_four_over_q() {
        let e = embedding_catalog(&EmbeddingSpec::Dihedral { n: 4 }, &ConstField::rationals(), &cfg()).unwrap();
        assert_eq!(e.param("alpha"), Some(&q(0)));
        assert_eq!(e.param("beta"), Some(&q(-1)));
        assert_eq!(e.images[0], ProjMatrix::from_i64s(1, -1, 1, 1).unwrap());
        assert_eq!(e.images[1], ProjMatrix::from_i64s(1, 0, 0, -1).unwrap());
        assert!(verify_relations(&e).passed());
    }

    #[test]
    fn missing_roots_of_unity_are_named() {
        let k = ConstField::rationals();
        assert_eq!(embedding_catalog(&EmbeddingSpec::A5, &k, &cfg()).unwrap_err().to_string(), "ω₅ required");
        assert_eq!(embedding_catalog(&EmbeddingSpec::S4, &k, &cfg()).unwrap_err().to_string(), "ω₄ required");
        assert_eq!(embedding_catalog(&EmbeddingSpec::Dihedral { n: 8 }, &k, &cfg()).unwrap_err().to_string(), "α₈ required");
    }

    #[test]
    fn polyhedral_pairs_generate_the_right_orders() {
        let (k4, _) = omega_field(4);
        let k4 = ConstField::number_field(&k4);
        for (spec, order) in [(EmbeddingSpec::S4, 24), (EmbeddingSpec::A4, 12)] {
            let e = embedding_catalog(&spec, &k4, &cfg()).unwrap();
            let r = verify_relations(&e);
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.order, Some(order));
        }
        let (k5, _) = omega_field(5);
        let e = embedding_catalog(&EmbeddingSpec::A5, &ConstField::number_field(&k5), &cfg()).unwrap();
        assert_eq!(verify_relations(&e).order, Some(60));
        assert!(verify_relations(&e).passed());
    }

    #[test]
    fn tampered_generator_fails() {
        let mut e = embedding_catalog(&EmbeddingSpec::Dihedral { n: 5 }, &real_field(5), &cfg()).unwrap();
        assert!(verify_relations(&e).passed());
        let [a, b, c, d] = e.images[1].entries().clone();
        e.images[1] = ProjMatrix::new(a, b, c, d.neg_ref()).unwrap();
        let r = verify_relations(&e);
        assert!(!r.passed());
        // t becomes the identity, so only the mixed relator fails.
        assert_eq!(r.failing.as_deref(), Some("s*t*s*t"));
    }

    fn real_field(n: usize) -> ConstField {
        ConstField::from_option(real_cyclotomic(n).field.as_ref())
    }

    #[test]
    fn rotation_embeddings_over_real_cyclotomic_fields() {
        for n in [3u32, 5, 6, 7, 8] {
            let k = real_field(n as usize);
            for spec in [EmbeddingSpec::Cyclic { n }, EmbeddingSpec::Dihedral { n }] {
                let e = embedding_catalog(&spec, &k, &cfg()).unwrap();
                assert!(verify_relations(&e).passed(), "n = {n}");
            }
            let e = embedding_catalog(&EmbeddingSpec::DihedralTwisted { n, x: q(2), y: q(1) }, &k, &cfg()).unwrap();
            assert!(verify_relations(&e).passed(), "twisted n = {n}");
        }
        let (k8, _) = omega_field(8);
        let k8 = ConstField::number_field(&k8);
        let e = embedding_catalog(&EmbeddingSpec::DiagonalDihedral { n: 8, a: q(3) }, &k8, &cfg()).unwrap();
        assert!(verify_relations(&e).passed());
        let e = embedding_catalog(&EmbeddingSpec::Involution { b: q(5) }, &ConstField::rationals(), &cfg()).unwrap();
        assert!(verify_relations(&e).passed());
    }

    #[test]
    fn polyhedral_compressions_are_equivariant() {
        let (k4, _) = omega_field(4);
        let e = embedding_catalog(&EmbeddingSpec::S4, &ConstField::number_field(&k4), &cfg()).unwrap();
        let f = |c: &[i64]| super::super::map::BinaryForm::from_i64s(c);
        let s4 = ProjectiveMap::new(f(&[1, 0, 0, 0, 7, 0, 0, 0]), f(&[0, 0, 0, -7, 0, 0, 0, -1])).unwrap();
        assert!(equivariant_check(&s4, &e));
        assert!(equivariant_check(&ProjectiveMap::identity(), &e));
        assert!(!equivariant_check(&ProjectiveMap::power_map(3), &e));
        let klein = embedding_catalog(&EmbeddingSpec::Klein { a: q(1), b: q(1) }, &ConstField::rationals(), &cfg()).unwrap();
        assert!(equivariant_check(&ProjectiveMap::power_map(3), &klein));
    }

    #[test]
    fn group_ids_round_trip() {
        for g in [GroupId::Cyclic(4), GroupId::Dihedral(5), GroupId::Klein, GroupId::A4, GroupId::S4, GroupId::A5] {
            assert_eq!(GroupId::parse(&g.to_string()).unwrap(), g);
        }
        assert!(GroupId::parse("z7").is_err());
    }
}
