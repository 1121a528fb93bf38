//! Étale algebras `K[Y]/(p)` and their trace forms.

use crate::arith::linalg::Matrix;
use crate::arith::{Field, Poly};

use super::FormsError;

#[derive(Clone, Debug, PartialEq)]
pub struct EtaleAlgebra<F> {
    poly: Poly<F>,
}

impl<F: Field> EtaleAlgebra<F> {
    /// Normalizes `p` to be monic; rejects constant or inseparable input.
    pub fn new(p: Poly<F>) -> Result<Self, FormsError> {
        if p.deg0() == 0 {
            return Err(FormsError::Invalid("defining polynomial must be nonconstant".into()));
        }
        let p = p.monic();
        let g = Poly::gcd(&p, &p.derivative());
        if !g.is_constant() {
            return Err(FormsError::NotSeparable(format!("repeated factor {g}")));
        }
        Ok(EtaleAlgebra { poly: p })
    }

    pub fn poly(&self) -> &Poly<F> {
        &self.poly
    }

    pub fn dim(&self) -> usize {
        self.poly.deg0()
    }

    /// `Tr(y^k)` for `k < count`, by Newton's identities.
    pub fn power_sums(&self, count: usize) -> Vec<F> {
        let n = self.dim();
        // p = Y^n + c[n-1] Y^(n-1) + ... + c[0]
        let c = |i: usize| self.poly.coeff(i);
        let mut p: Vec<F> = Vec::with_capacity(count);
        for k in 0..count {
            if k == 0 {
                p.push(F::from_i64(n as i64));
                continue;
            }
            let mut s = F::zero();
            for j in 1..=k.min(n) {
                if j < k {
                    s = s.add_ref(&c(n - j).mul_ref(&p[k - j]));
                } else {
                    s = s.add_ref(&c(n - k).mul_ref(&F::from_i64(k as i64)));
                }
            }
            p.push(s.neg_ref());
        }
        p
    }

    /// Gram matrix `Tr(y^(i+j))` in the basis `1, y, ..., y^(n-1)`.
    pub fn trace_form(&self) -> Matrix<F> {
        let n = self.dim();
        let p = self.power_sums(2 * n - 1);
        (0..n).map(|i| (0..n).map(|j| p[i + j].clone()).collect()).collect()
    }

    /// Product with `K^m` realized as extra linear factors `Y - r` at the
    /// smallest integers that are not roots of the current polynomial.
    pub fn pad_to(&self, n: usize) -> Self {
        let mut p = self.poly.clone();
        let mut r = 0i64;
        while p.deg0() < n {
            let x = F::from_i64(r);
            if !p.eval(&x).is_zero() {
                p = &p * &Poly::linear_root(&x);
            }
            r += 1;
        }
        EtaleAlgebra { poly: p }
    }
}
