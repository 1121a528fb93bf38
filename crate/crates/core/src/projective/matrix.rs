//! Elements of `PGL2(K)` with a canonical representative.

use std::fmt;

use crate::arith::{Field, Poly, RatFunc};

use super::ProjectiveError;

/// `(a b; c d)` acting by `(x:y) -> (ax + by : cx + dy)`, scaled so that the
/// first nonzero entry is 1.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjMatrix<F> {
    e: [F; 4],
}

impl<F: Field> ProjMatrix<F> {
    pub fn new(a: F, b: F, c: F, d: F) -> Result<Self, ProjectiveError> {
        let det = a.mul_ref(&d).sub_ref(&b.mul_ref(&c));
        if det.is_zero() {
            return Err(ProjectiveError::Singular);
        }
        Ok(Self::normalized([a, b, c, d]))
    }

    pub fn from_i64s(a: i64, b: i64, c: i64, d: i64) -> Result<Self, ProjectiveError> {
        Self::new(F::from_i64(a), F::from_i64(b), F::from_i64(c), F::from_i64(d))
    }

    fn normalized(e: [F; 4]) -> Self {
        let lead = e.iter().find(|x| !x.is_zero()).expect("nonzero matrix").inv().expect("nonzero");
        ProjMatrix { e: e.map(|x| x.mul_ref(&lead)) }
    }

    pub fn identity() -> Self {
        Self::normalized([F::one(), F::zero(), F::zero(), F::one()])
    }

    pub fn diag(a: F, d: F) -> Result<Self, ProjectiveError> {
        Self::new(a, F::zero(), F::zero(), d)
    }

    pub fn entries(&self) -> &[F; 4] {
        &self.e
    }

    pub fn det(&self) -> F {
        let [a, b, c, d] = &self.e;
        a.mul_ref(d).sub_ref(&b.mul_ref(c))
    }

    pub fn trace(&self) -> F {
        self.e[0].add_ref(&self.e[3])
    }

    pub fn mul(&self, o: &Self) -> Self {
        let [a, b, c, d] = &self.e;
        let [p, q, r, s] = &o.e;
        Self::normalized([
            a.mul_ref(p).add_ref(&b.mul_ref(r)),
            a.mul_ref(q).add_ref(&b.mul_ref(s)),
            c.mul_ref(p).add_ref(&d.mul_ref(r)),
            c.mul_ref(q).add_ref(&d.mul_ref(s)),
        ])
    }

    pub fn inverse(&self) -> Self {
        let [a, b, c, d] = &self.e;
        Self::normalized([d.clone(), b.neg_ref(), c.neg_ref(), a.clone()])
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::identity(), |acc, _| acc.mul(self))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Order in `PGL2`, if at most `bound`.
    pub fn order(&self, bound: u32) -> Option<u32> {
        let mut m = self.clone();
        for k in 1..=bound {
            if m.is_identity() {
                return Some(k);
            }
            m = m.mul(self);
        }
        None
    }

    pub fn map_entries<E: Field>(&self, f: impl Fn(&F) -> E) -> Result<ProjMatrix<E>, ProjectiveError> {
        let [a, b, c, d] = &self.e;
        ProjMatrix::new(f(a), f(b), f(c), f(d))
    }

    /// The Möbius transformation `x -> (ax + b)/(cx + d)` in the chart `x = X/Y`.
    pub fn mobius(&self) -> RatFunc<F> {
        let [a, b, c, d] = &self.e;
        let num = Poly::from_coeffs(vec![b.clone(), a.clone()]);
        let den = Poly::from_coeffs(vec![d.clone(), c.clone()]);
        RatFunc::new(num, den).expect("nonzero denominator")
    }
}

impl<F: Field> fmt::Display for ProjMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.e;
        write!(f, "({a}, {b}; {c}, {d})")
    }
}

/// Breadth-first closure of the subgroup generated by `gens`; `None` once more
/// than `cap` elements appear.
pub fn closure<F: Field>(gens: &[ProjMatrix<F>], cap: usize) -> Option<Vec<ProjMatrix<F>>> {
    let mut elems = vec![ProjMatrix::identity()];
    let mut frontier = 0;
    while frontier < elems.len() {
        let x = elems[frontier].clone();
        frontier += 1;
        for g in gens {
            let y = x.mul(g);
            if !elems.contains(&y) {
                if elems.len() == cap {
                    return None;
                }
                elems.push(y);
            }
        }
    }
    Some(elems)
}
