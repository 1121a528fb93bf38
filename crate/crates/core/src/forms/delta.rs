//! Closed forms of the obstruction class for Klein four and order-two actions
//! on the projective line.

use crate::arith::Field;

/// For the Klein four action twisted by `(a, b)` and a torsor with square
/// classes `(c, d)`: the symbol `(ac, bd)`.
pub fn klein_delta<F: Field>(c: &F, d: &F, a: &F, b: &F) -> (F, F) {
    (a.mul_ref(c), b.mul_ref(d))
}

/// For the order-two action `x -> b/x` and a torsor with square class `c`:
/// the symbol `(c, b)`.
pub fn z2_delta<F: Field>(c: &F, b: &F) -> (F, F) {
    (c.clone(), b.clone())
}
