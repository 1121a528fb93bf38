//! `P = Q + c H` with `Q` from Chinese remaindering and `c` chosen to keep
//! every other fibre point simple.

use crate::arith::crt::crt_poly;
use crate::arith::modp::{is_prime_u64, ModPoly, PrimeField};
use crate::arith::{Field, Poly, Rational};

use super::{LocalDecomposition, RamificationCondition, RamificationSpec, RamifyError, C_SEARCH_BOUND};

type Q = Rational;

fn q(n: i64) -> Q {
    Q::from_i64(n)
}

fn linear(a: &Q) -> Poly<Q> {
    Poly::from_coeffs(vec![-a.clone(), q(1)])
}

#[derive(Clone, Debug)]
pub struct RamifiedPoly {
    pub p: Poly<Q>,
    pub q: Poly<Q>,
    pub h: Poly<Q>,
    pub c: Q,
    /// `a_ij` for each branch value, in the order of the conditions.
    pub base_points: Vec<Vec<Q>>,
    pub decompositions: Vec<LocalDecomposition>,
}

/// Multiplicity of the root `a` of `p`.
fn multiplicity(p: &Poly<Q>, a: &Q) -> u32 {
    let l = linear(a);
    let mut r = p.clone();
    let mut m = 0;
    while !r.is_zero() && r.eval(a).is_zero() {
        r = r.exact_div(&l).expect("a is a root");
        m += 1;
    }
    m
}

/// `g` with every root in `points` divided out.
fn strip_roots(g: &Poly<Q>, points: &[Q]) -> Poly<Q> {
    points.iter().fold(g.clone(), |r, a| {
        let m = multiplicity(&r, a);
        if m == 0 { r } else { r.exact_div(&linear(a).pow(m as u64)).expect("a is a root") }
    })
}

/// Squarefree over Q, decided mod a few large primes before falling back to
/// the exact gcd. A reduction of the same degree that is squarefree certifies
/// a nonzero discriminant.
fn certified_squarefree(r: &Poly<Q>) -> bool {
    let primes = (1_000_003u64..).filter(|p| is_prime_u64(*p)).take(3);
    for p in primes {
        if let Some(m) = ModPoly::from_rational(PrimeField::new(p), r) {
            if m.degree() == Some(r.deg0()) && m.is_squarefree() {
                return true;
            }
        }
    }
    r.is_squarefree()
}

/// Root multiplicities of `p` over an algebraic closure, largest first.
pub fn multiplicity_pattern(p: &Poly<Q>) -> Vec<u32> {
    let mut out = Vec::new();
    for (f, m) in p.squarefree_decomposition() {
        out.extend(std::iter::repeat(m as u32).take(f.deg0()));
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Checks that `P - beta` has multiplicities exactly `cond` at points of
/// `allowed` and no multiple roots elsewhere.
pub fn verify_local_decomposition(
    p: &Poly<Q>,
    beta: &Q,
    cond: &RamificationCondition,
    allowed: &[Q],
) -> Result<LocalDecomposition, RamifyError> {
    if p.deg0() == 0 {
        return Err(RamifyError::Invalid("constant polynomial".into()));
    }
    let mismatch = |detail: String| RamifyError::Mismatch { beta: beta.to_string(), detail };
    let g = p - &Poly::constant(beta.clone());
    let cert = Poly::gcd(&g, &g.derivative()).monic();
    let mut points = Vec::new();
    let mut expected = Poly::one();
    for a in allowed {
        let m = multiplicity(&g, a);
        if m >= 2 {
            points.push((a.clone(), m));
            expected = &expected * &linear(a).pow(m as u64 - 1);
        }
    }
    let mut got: Vec<u32> = points.iter().map(|(_, m)| *m).collect();
    got.sort_unstable_by(|a, b| b.cmp(a));
    if got != cond.parts() {
        let shown: Vec<String> = got.iter().map(u32::to_string).collect();
        return Err(mismatch(format!("multiplicities ({}) instead of {cond}", shown.join(","))));
    }
    match cert.exact_div(&expected) {
        Some(rest) if rest.deg0() == 0 => Ok(LocalDecomposition { beta: beta.clone(), points, certificate: cert }),
        Some(rest) => Err(mismatch(format!("stray multiple roots along {}", rest.to_string_var("x")))),
        None => Err(mismatch("certificate does not divide".into())),
    }
}

/// Smallest `c >= 1` such that `Q - beta + c H` has multiple roots only at
/// `support`, the roots of `H`.
pub fn choose_c(qq: &Poly<Q>, h: &Poly<Q>, support: &[Q], offsets: &[Q]) -> Result<Q, RamifyError> {
    if h.is_zero() {
        return Err(RamifyError::Invalid("H = 0".into()));
    }
    for c in 1..=C_SEARCH_BOUND {
        let c = q(c as i64);
        let ok = offsets.iter().all(|b| {
            let g = &(qq - &Poly::constant(b.clone())) + &h.scale(&c);
            !g.is_zero() && certified_squarefree(&strip_roots(&g, support))
        });
        if ok {
            return Ok(c);
        }
    }
    Err(RamifyError::CBound(C_SEARCH_BOUND))
}

pub fn build_ramified_poly(spec: &RamificationSpec) -> Result<RamifiedPoly, RamifyError> {
    let mut next = 0i64;
    let mut base_points = Vec::new();
    let mut congruences = Vec::new();
    let mut h = Poly::one();
    for (cond, beta) in &spec.entries {
        let mut pts = Vec::new();
        for b in cond.parts() {
            let a = q(next);
            next += 1;
            let l = linear(&a);
            congruences.push((&Poly::constant(beta.clone()) + &l.pow(*b as u64), l.pow(*b as u64 + 1)));
            h = &h * &l.pow(*b as u64 + 1);
            pts.push(a);
        }
        base_points.push(pts);
    }
    let qq = crt_poly(&congruences)?;
    if let Some(d) = spec.target_degree {
        let bound = qq.deg0().max(h.deg0());
        if d <= bound {
            return Err(RamifyError::Invalid(format!("degree {d} must exceed {bound}")));
        }
        h = &h * &linear(&base_points[0][0]).pow((d - h.deg0()) as u64);
    }
    let offsets: Vec<Q> = spec.entries.iter().map(|(_, b)| b.clone()).collect();
    let support: Vec<Q> = base_points.iter().flatten().cloned().collect();
    let c = choose_c(&qq, &h, &support, &offsets)?;
    let p = &qq + &h.scale(&c);

    let mut decompositions = Vec::new();
    for ((cond, beta), pts) in spec.entries.iter().zip(&base_points) {
        decompositions.push(verify_local_decomposition(&p, beta, cond, pts)?);
    }
    // P(a_i'j) = beta_i' at every base point
    for ((_, beta), pts) in spec.entries.iter().zip(&base_points) {
        if let Some(a) = pts.iter().find(|a| p.eval(a) != *beta) {
            return Err(RamifyError::Mismatch { beta: beta.to_string(), detail: format!("P({a}) = {}", p.eval(a)) });
        }
    }
    if let Some(d) = spec.target_degree {
        if p.deg0() != d {
            return Err(RamifyError::Mismatch { beta: "infinity".into(), detail: format!("degree {} instead of {d}", p.deg0()) });
        }
    }
    Ok(RamifiedPoly { p, q: qq, h, c, base_points, decompositions })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cond(v: &[u32]) -> RamificationCondition {
        RamificationCondition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn single_double_point() {
        let spec = RamificationSpec::new(vec![(cond(&[2]), q(0))], None).unwrap();
        let r = build_ramified_poly(&spec).unwrap();
        // Q = x^2 is already the hand answer; H = x^3 and c = 1
        assert_eq!(r.q, Poly::from_i64s(&[0, 0, 1]));
        assert_eq!(r.c, q(1));
        assert_eq!(r.p, Poly::from_i64s(&[0, 0, 1, 1]));
        let d = verify_local_decomposition(&Poly::from_i64s(&[0, 0, 1]), &q(0), &cond(&[2]), &[q(0)]).unwrap();
        assert_eq!(d.points, vec![(q(0), 2)]);
    }

    #[test]
    fn triple_root_is_not_a_double_point() {
        let e = verify_local_decomposition(&Poly::from_i64s(&[0, 0, 0, 1]), &q(0), &cond(&[2]), &[q(0)]).unwrap_err();
        assert!(e.to_string().contains("(3)"), "{e}");
    }

    #[test]
    fn stray_double_root_is_reported() {
        // x^2 (x - 1)^2 with only 0 allowed
        let p = &Poly::from_i64s(&[0, 0, 1]) * &Poly::from_i64s(&[1, -2, 1]);
        let e = verify_local_decomposition(&p, &q(0), &cond(&[2]), &[q(0)]).unwrap_err();
        assert!(e.to_string().contains("stray"), "{e}");
    }

    #[test]
    fn two_branch_values() {
        let spec = RamificationSpec::new(vec![(cond(&[2]), q(0)), (cond(&[3]), q(1))], None).unwrap();
        let r = build_ramified_poly(&spec).unwrap();
        assert_eq!(r.base_points, vec![vec![q(0)], vec![q(1)]]);
        for ((c, b), pts) in spec.entries.iter().zip(&r.base_points) {
            verify_local_decomposition(&r.p, b, c, pts).unwrap();
        }
    }

    #[test]
    fn requested_prime_degree() {
        let spec0 = RamificationSpec::new(vec![(cond(&[2]), q(0)), (cond(&[3]), q(1))], None).unwrap();
        let bound = spec0.crt_bound();
        assert_eq!(bound, 7);
        let spec = RamificationSpec::new(spec0.entries.clone(), Some(11)).unwrap();
        assert_eq!(build_ramified_poly(&spec).unwrap().p.deg0(), 11);
        let low = RamificationSpec::new(spec0.entries, Some(7)).unwrap();
        assert!(build_ramified_poly(&low).is_err());
    }

    #[test]
    fn choose_c_examples() {
        assert_eq!(choose_c(&Poly::from_i64s(&[0, 1]), &Poly::one(), &[], &[q(0)]).unwrap(), q(1));
        let x2 = Poly::from_i64s(&[0, 0, 1]);
        assert_eq!(choose_c(&x2, &x2, &[q(0)], &[q(0)]).unwrap(), q(1));
        assert!(choose_c(&x2, &Poly::zero(), &[q(0)], &[q(0)]).is_err());
    }

    #[test]
    fn pattern_counts_conjugate_roots() {
        // (x^2 + 1)^2 (x - 3)
        let p = &Poly::from_i64s(&[1, 0, 1]).pow(2) * &Poly::from_i64s(&[-3, 1]);
        assert_eq!(multiplicity_pattern(&p), vec![2, 2, 1]);
    }
}
