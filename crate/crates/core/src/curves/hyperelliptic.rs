//! Hyperelliptic models `y^2 = s(x)` with automorphisms of the form
//! `(x, y) -> (phi(x), psi(x) y)`, and the even-cyclic construction.

use crate::arith::ratfunc::eval_poly_at;
use crate::arith::rational::squarefree_kernel;
use crate::arith::tower::TowerFunc;
use crate::arith::{is_square_in_field, Field, NfElem, Poly, RatFunc, Rational, SquareConfig, SquareVerdict};
use crate::brauer::split::poly_sqrt;
use crate::brauer::ConstField;
use crate::projective::{
    chart_change, embedding_catalog, invariant_quotient_map, is_invariant, EmbeddingSpec, GroupPresentation, ProjMatrix,
};

use super::{genus, Check, CurveError, PARAM_SEARCH_BOUND};

/// The point map `(x, y) -> (x(x), y(x) * y)`.
#[derive(Clone, Debug)]
pub struct ActionMap {
    pub name: String,
    pub x: TowerFunc,
    pub y: TowerFunc,
}

impl PartialEq for ActionMap {
    fn eq(&self, o: &Self) -> bool {
        self.x == o.x && self.y == o.y
    }
}

impl ActionMap {
    pub fn new(name: &str, x: TowerFunc, y: TowerFunc) -> Self {
        ActionMap { name: name.to_string(), x, y }
    }

    pub fn identity() -> Self {
        Self::new("1", RatFunc::x(), RatFunc::one())
    }

    /// The hyperelliptic involution `(x, y) -> (x, -y)`.
    pub fn involution() -> Self {
        Self::new("iota", RatFunc::x(), RatFunc::from_i64(-1))
    }

    /// `self o inner`.
    pub fn compose(&self, inner: &Self) -> Self {
        let y = self.y.compose(&inner.x).mul_ref(&inner.y);
        Self::new(&format!("{}*{}", self.name, inner.name), self.x.compose(&inner.x), y)
    }

    pub fn negate_y(&self) -> Self {
        Self::new(&self.name, self.x.clone(), self.y.neg_ref())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::identity(), |acc, _| acc.compose(self))
    }

    pub fn describe(&self) -> String {
        format!("{}: (x, y) -> ({}, ({})*y)", self.name, self.x.to_string_var("x"), self.y.to_string_var("x"))
    }
}

#[derive(Clone, Debug)]
pub struct HyperellipticModel {
    pub s: Poly<NfElem>,
    pub field: ConstField,
    pub action: Vec<ActionMap>,
}

impl HyperellipticModel {
    pub fn new(s: Poly<NfElem>, field: ConstField) -> Result<Self, CurveError> {
        if !s.is_squarefree() {
            return Err(CurveError::NotSquarefree(s.to_string_var("x")));
        }
        Ok(HyperellipticModel { s, field, action: Vec::new() })
    }

    pub fn genus(&self) -> Result<usize, CurveError> {
        genus(&self.s)
    }

    pub fn equation(&self) -> String {
        format!("y^2 = {}", self.s.to_string_var("x"))
    }

    /// `psi^2 s = s(phi)` as rational functions of `x`.
    pub fn preserves(&self, m: &ActionMap) -> bool {
        let s = RatFunc::from_poly(self.s.clone());
        eval_poly_at(&self.s, &m.x) == m.y.square().mul_ref(&s)
    }

    pub fn generator(&self, name: &str) -> Option<&ActionMap> {
        self.action.iter().find(|a| a.name == name)
    }

    pub fn order_of(m: &ActionMap, bound: usize) -> Option<usize> {
        let id = ActionMap::identity();
        let mut p = m.clone();
        for k in 1..=bound {
            if p == id {
                return Some(k);
            }
            p = p.compose(m);
        }
        None
    }

    /// Closure of the generated group; `None` past `cap` elements.
    pub fn group(&self, cap: usize) -> Option<Vec<ActionMap>> {
        let mut elems = vec![ActionMap::identity()];
        let mut i = 0;
        while i < elems.len() {
            let g = elems[i].clone();
            i += 1;
            for h in &self.action {
                let e = g.compose(h);
                if !elems.contains(&e) {
                    if elems.len() == cap {
                        return None;
                    }
                    elems.push(e);
                }
            }
        }
        Some(elems)
    }

    /// The first relator (as text) that does not evaluate to the identity.
    pub fn failing_relator(&self, p: &GroupPresentation) -> Option<String> {
        for r in &p.relators {
            let w = r.iter().fold(ActionMap::identity(), |acc, (g, e)| acc.compose(&self.action[*g].pow(*e)));
            if w != ActionMap::identity() {
                return Some(p.word_string(r));
            }
        }
        None
    }

    pub fn checks(&self, expected_order: usize) -> Vec<Check> {
        let mut out = Vec::new();
        for a in &self.action {
            out.push(Check::new(&format!("relation-preserved-{}", a.name), self.preserves(a), a.describe()));
        }
        let g = self.group(expected_order + 1);
        let size = g.as_ref().map(Vec::len);
        out.push(Check::new(
            "group-order",
            size == Some(expected_order),
            format!("{} elements, expected {expected_order}", size.map_or("too many".into(), |n| n.to_string())),
        ));
        out
    }
}

/// Square root in `K(x)` of an element known to be a square.
pub(crate) fn sqrt_func(r: &TowerFunc, cfg: &SquareConfig) -> Result<TowerFunc, CurveError> {
    match is_square_in_field(r, cfg)? {
        SquareVerdict::Square(root) => Ok(normalize_sign(root)),
        SquareVerdict::NonSquare(w) => Err(CurveError::Internal(format!("{} is not a square ({w})", r.to_string_var("x")))),
        SquareVerdict::ProbablySquare { .. } => Err(CurveError::Inconclusive(format!("square root of {}", r.to_string_var("x")))),
    }
}

/// Makes the leading constant positive when it is rational.
fn normalize_sign(r: TowerFunc) -> TowerFunc {
    match r.num().lc().to_rational() {
        Some(c) if c < Rational::from_i64(0) => r.neg_ref(),
        _ => r,
    }
}

/// A representative of the square class of a constant: the squarefree kernel
/// over Q, and 1 for squares of a number field.
pub(crate) fn constant_class(k: &ConstField, c: &NfElem, cfg: &SquareConfig) -> Result<NfElem, CurveError> {
    if let Some(q) = c.to_rational() {
        return Ok(NfElem::from_rational(&Rational::from_integer(squarefree_kernel(&q))));
    }
    let c = match k.nf() {
        Some(kk) => c.with_field(kk),
        None => c.clone(),
    };
    Ok(match is_square_in_field(&c, cfg)?.decided() {
        Some(true) => NfElem::one(),
        _ => c,
    })
}

/// Odd-multiplicity part of `p` with its constant reduced mod squares, so
/// that `p / result` is a square in `K[x]`.
pub(crate) fn square_class_normalized(k: &ConstField, p: &Poly<NfElem>, cfg: &SquareConfig) -> Result<Poly<NfElem>, CurveError> {
    let sq = p.square_class_part();
    let c = constant_class(k, &sq.lc(), cfg)?;
    Ok(k.attach(&sq.monic().scale(&c)))
}

/// The even-cyclic curve together with the intermediate data of its construction.
#[derive(Clone, Debug)]
pub struct EvenCyclicCurve {
    pub n: u32,
    pub a: NfElem,
    pub beta: NfElem,
    /// The quotient coordinate `x = (u^2 + beta)/(2u)` on the line upstairs.
    pub quotient: TowerFunc,
    /// How the rotation acts on `x`.
    pub x_action: ProjMatrix<NfElem>,
    /// `t = p/q`, the invariant of degree `n/2` for that action.
    pub t: TowerFunc,
    /// `(x^2 - beta)(q(a) p - p(a) q) q`.
    pub product: Poly<NfElem>,
    pub model: HyperellipticModel,
    pub checks: Vec<Check>,
}

/// The curve `y^2 = s(x)` with an action of `Z/n` (`n` even) obtained by
/// twisting the cover `u -> x` by the point `a` of the quotient.
pub fn even_cyclic_curve(n: u32, a: &NfElem, k: &ConstField, cfg: &SquareConfig) -> Result<EvenCyclicCurve, CurveError> {
    if n < 4 || n % 2 == 1 {
        return Err(CurveError::Invalid(format!("n = {n} must be even and at least 4")));
    }
    let m = n / 2;
    let emb = embedding_catalog(&EmbeddingSpec::Cyclic { n }, k, cfg)?;
    let sigma = emb.images[0].clone();
    let beta = emb.param("beta").expect("rotation embeddings record beta").clone();
    let central = sigma.pow(m);
    let expect = ProjMatrix::new(NfElem::zero(), beta.clone(), NfElem::one(), NfElem::zero())?;
    if central != expect {
        return Err(CurveError::Internal(format!("sigma^{m} = {central}, expected {expect}")));
    }
    let quotient = RatFunc::new(
        Poly::from_coeffs(vec![beta.clone(), NfElem::zero(), NfElem::one()]),
        Poly::from_i64s(&[0, 2]),
    )?;
    if !is_invariant(&quotient, &[central]) {
        return Err(CurveError::Internal("quotient coordinate is not invariant".into()));
    }
    let x_action = chart_change(&quotient, &quotient.compose(&sigma.mobius()))
        .ok_or_else(|| CurveError::Internal("rotation does not descend to the quotient".into()))?;
    let t = invariant_quotient_map(&[x_action.clone()], m as usize)?;
    let (p, q) = (t.num().clone(), t.den().clone());

    let wronskian = &(&q * &p.derivative()) - &(&p * &q.derivative());
    if q.eval(a).is_zero() || wronskian.eval(a).is_zero() {
        return Err(CurveError::Inadmissible(format!("a = {a} is a zero of q or qp′−pq′")));
    }
    let x2_beta = Poly::from_coeffs(vec![beta.neg_ref(), NfElem::zero(), NfElem::one()]);
    let twist = &p.scale(&q.eval(a)) - &q.scale(&p.eval(a));
    let product = k.attach(&(&(&x2_beta * &twist) * &q));
    let s = square_class_normalized(k, &product, cfg)?;

    let mut checks = Vec::new();
    let cofactor = product.exact_div(&s);
    let descent = match &cofactor {
        Some(c) => poly_sqrt(k, c, cfg)?.is_some(),
        None => false,
    };
    checks.push(Check::new("descent-square-factor", descent, "the product is s times a square"));
    checks.push(Check::new("point-(a,0)", s.eval(a).is_zero(), format!("s({a}) = 0")));

    let ratio = eval_poly_at(&s, &x_action.mobius()).div_checked(&RatFunc::from_poly(s.clone())).expect("s is nonzero");
    let psi = sqrt_func(&ratio, cfg)?;
    let mut model = HyperellipticModel::new(s, k.clone())?;
    let mut chosen = None;
    for cand in [psi.clone(), psi.neg_ref()] {
        let g = ActionMap::new("sigma", x_action.mobius(), cand);
        if HyperellipticModel::order_of(&g, n as usize) == Some(n as usize) {
            chosen = Some(g);
            break;
        }
    }
    let g = chosen.ok_or_else(|| CurveError::Internal(format!("no lift of the rotation has order {n}")))?;
    checks.push(Check::new("central-element-is-involution", g.pow(m) == ActionMap::involution(), format!("sigma^{m} = (x, -y)")));
    model.action.push(g);
    checks.extend(model.checks(n as usize));
    Ok(EvenCyclicCurve { n, a: a.clone(), beta, quotient, x_action, t, product, model, checks })
}

/// Candidates `1, -1, 2, -2, ...` up to the search bound.
pub(crate) fn small_integers() -> impl Iterator<Item = i64> {
    (1..=PARAM_SEARCH_BOUND).flat_map(|c| [c, -c])
}

/// The first `a` in `1, -1, 2, -2, ...` passing the admissibility screen.
pub fn first_admissible_a(n: u32, k: &ConstField, cfg: &SquareConfig) -> Result<EvenCyclicCurve, CurveError> {
    for c in small_integers() {
        match even_cyclic_curve(n, &NfElem::from_i64(c), k, cfg) {
            Err(CurveError::Inadmissible(_)) => continue,
            r => return r,
        }
    }
    Err(CurveError::Exhausted(format!("no admissible a with |a| <= {PARAM_SEARCH_BOUND}")))
}
