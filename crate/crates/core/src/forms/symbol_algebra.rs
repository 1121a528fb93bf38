//! Quartic étale algebras `K[Y]/(Y^4 - 2AY^2 + B)` realizing a prescribed
//! quaternion symbol in their trace form.
//!
//! The trace form of `K[Y]/(Y^4 - 2AY^2 + B)` is `<1, A, A^2 - B, AB(A^2 - B)>`
//! up to squares, and its discriminant is the class of `B`.

use crate::arith::{Field, Poly, SquareConfig, SquareVerdict};
use crate::brauer::{FormalClass, Word};

use super::diag::diagonalize;
use super::etale::EtaleAlgebra;
use super::invariant::{formal_image, same_square_class, w2, SquareClass};
use super::FormsError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiscVariant {
    /// `d_E` trivial and `w2 = (a,b) + (-1,-1)`.
    TrivialDisc,
    /// `d_E = -b` nontrivial and `w2 = (a,b) + (-1,b)`.
    NonTrivialDisc,
}

#[derive(Clone, Debug)]
pub struct SymbolAlgebra<F> {
    pub variant: DiscVariant,
    /// The presentation `(a, b)` of the symbol actually used.
    pub a: F,
    pub b: F,
    pub big_a: F,
    pub big_b: F,
    /// Scaling parameter of the trivial-discriminant recipe.
    pub c: Option<i64>,
    pub quartic: EtaleAlgebra<F>,
    /// `quartic` padded with split factors to the requested dimension.
    pub algebra: EtaleAlgebra<F>,
}

impl<F: SquareClass> SymbolAlgebra<F> {
    /// The class the lemma predicts for `w2` of the quartic trace form.
    pub fn expected_w2(&self, var: &str) -> Result<FormalClass, FormsError> {
        let (wa, wb) = (self.a.class_word(var)?, self.b.class_word(var)?);
        let mut c = FormalClass::symbol(&wa, &wb);
        match self.variant {
            DiscVariant::TrivialDisc => c.add_symbol(&Word::minus_one(), &Word::minus_one()),
            DiscVariant::NonTrivialDisc => c.add_symbol(&Word::minus_one(), &wb),
        }
        Ok(c)
    }

    /// Recomputes the trace form of the quartic and checks discriminant and
    /// `w2` against the lemma. The diagonal entries produced by elimination are
    /// `4, 4A, 4(A^2 - B), 4B(A^2 - B)/A`, so the comparison is formal.
    pub fn check(&self, var: &str, cfg: &SquareConfig) -> Result<bool, FormsError> {
        let gram = self.quartic.trace_form();
        let d = diagonalize(&gram)?;
        let disc = d.form.determinant();
        let target = match self.variant {
            DiscVariant::TrivialDisc => F::one(),
            DiscVariant::NonTrivialDisc => self.b.neg_ref(),
        };
        let disc_ok = same_square_class(&disc, &target, cfg)? == Some(true);
        let w2_ok = formal_image(&w2(&d.form), var)? == self.expected_w2(var)?;
        Ok(disc_ok && w2_ok)
    }
}

fn quartic<F: Field>(big_a: &F, big_b: &F) -> Poly<F> {
    let two_a = big_a.add_ref(big_a);
    Poly::from_coeffs(vec![big_b.clone(), F::zero(), two_a.neg_ref(), F::zero(), F::one()])
}

fn nondegenerate<F: Field>(big_a: &F, big_b: &F) -> bool {
    let d = big_a.square().sub_ref(big_b);
    !(big_a.is_zero() || big_b.is_zero() || d.is_zero())
}

/// An `n`-dimensional étale algebra whose trace form realizes `(a, b)`.
///
/// Trivial discriminant: `A = -a(bc^2 - 1)^2`, `B = a^2(b^2c^4 - 1)^2` for the
/// smallest `c >= 1` that gives a separable quartic. Nontrivial discriminant:
/// `A = -a`, `B = -4ba^2/(b-1)^2` after replacing `(a, b)` by `(b, a)`,
/// `(a, -ab)` or `(b, -ab)` if needed to make `-b` a non-square and `b != 1`.
pub fn etale_from_symbol<F: SquareClass>(
    a: &F,
    b: &F,
    variant: DiscVariant,
    n: usize,
    cfg: &SquareConfig,
) -> Result<SymbolAlgebra<F>, FormsError> {
    if a.is_zero() || b.is_zero() {
        return Err(FormsError::Invalid("symbol entries must be nonzero".into()));
    }
    if n < 4 {
        return Err(FormsError::Invalid("dimension must be at least 4".into()));
    }
    let (pa, pb, big_a, big_b, c) = match variant {
        DiscVariant::TrivialDisc => {
            let mut found = None;
            for c in 1..=64i64 {
                let bc2 = b.mul_ref(&F::from_i64(c * c));
                let big_a = a.mul_ref(&bc2.sub_ref(&F::one()).square()).neg_ref();
                let big_b = a.square().mul_ref(&bc2.square().sub_ref(&F::one()).square());
                if nondegenerate(&big_a, &big_b) && quartic(&big_a, &big_b).is_squarefree() {
                    found = Some((a.clone(), b.clone(), big_a, big_b, Some(c)));
                    break;
                }
            }
            found.ok_or(FormsError::Degenerate)?
        }
        DiscVariant::NonTrivialDisc => {
            let mab = a.mul_ref(b).neg_ref();
            let candidates = [(a.clone(), b.clone()), (b.clone(), a.clone()), (a.clone(), mab.clone()), (b.clone(), mab)];
            let mut found = None;
            for (x, y) in candidates {
                if y.is_one() || !matches!((y.neg_ref()).square_verdict(cfg)?, SquareVerdict::NonSquare(_)) {
                    continue;
                }
                let big_a = x.neg_ref();
                let den = y.sub_ref(&F::one()).square();
                let big_b = F::from_i64(-4).mul_ref(&y).mul_ref(&x.square()).div_checked(&den).expect("b != 1");
                if nondegenerate(&big_a, &big_b) && quartic(&big_a, &big_b).is_squarefree() {
                    found = Some((x, y, big_a, big_b, None));
                    break;
                }
            }
            found.ok_or(FormsError::Degenerate)?
        }
    };
    let q = EtaleAlgebra::new(quartic(&big_a, &big_b))?;
    let algebra = q.pad_to(n);
    Ok(SymbolAlgebra { variant, a: pa, b: pb, big_a, big_b, c, quartic: q, algebra })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;
    use crate::arith::Rational;

    #[test]
    fn trivial_disc_for_minus_one_minus_one() {
        let cfg = SquareConfig::default();
        let s = etale_from_symbol(&int(-1), &int(-1), DiscVariant::TrivialDisc, 4, &cfg).unwrap();
        assert_eq!(s.c, Some(2));
        assert_eq!((s.big_a.clone(), s.big_b.clone()), (int(25), int(225)));
        assert!(s.check("x", &cfg).unwrap());
        // -A = a and -B(A^2 - B) = b up to squares
        assert_eq!(same_square_class(&s.big_a.neg_ref(), &int(-1), &cfg).unwrap(), Some(true));
        let t = s.big_b.neg_ref().mul_ref(&s.big_a.square().sub_ref(&s.big_b));
        assert_eq!(same_square_class(&t, &int(-1), &cfg).unwrap(), Some(true));
    }

    #[test]
    fn nontrivial_disc_examples() {
        let cfg = SquareConfig::default();
        let s = etale_from_symbol(&int(2), &int(3), DiscVariant::NonTrivialDisc, 4, &cfg).unwrap();
        assert_eq!((s.big_a.clone(), s.big_b.clone()), (int(-2), int(-12)));
        assert!(s.check("x", &cfg).unwrap());
        assert_eq!(s.expected_w2("x").unwrap(), FormalClass::parse("(2,3) + (-1,3)").unwrap());
        assert!(matches!(
            etale_from_symbol(&int(1), &int(1), DiscVariant::NonTrivialDisc, 4, &cfg),
            Err(FormsError::Degenerate)
        ));
        let s = etale_from_symbol(&int(5), &int(-1), DiscVariant::NonTrivialDisc, 6, &cfg).unwrap();
        assert_eq!(s.algebra.dim(), 6);
        assert!(s.check("x", &cfg).unwrap());
        let _: Rational = s.b;
    }
}
