//! Diagonalization of symmetric matrices by congruence, with the transform
//! recorded and re-checked.

use std::fmt;

use crate::arith::linalg::{identity, mat_mul, transpose, Matrix};
use crate::arith::Field;

use super::FormsError;

/// A diagonal form `<a_1, ..., a_n>` with nonzero entries.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadForm<F> {
    pub diagonal: Vec<F>,
}

impl<F: Field> QuadForm<F> {
    pub fn new(diagonal: Vec<F>) -> Result<Self, FormsError> {
        if diagonal.iter().any(Field::is_zero) {
            return Err(FormsError::Invalid("diagonal entries must be nonzero".into()));
        }
        Ok(QuadForm { diagonal })
    }

    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Product of the entries; its square class is the discriminant.
    pub fn determinant(&self) -> F {
        self.diagonal.iter().fold(F::one(), |a, x| a.mul_ref(x))
    }

    pub fn entries_with(&self, show: impl Fn(&F) -> String) -> String {
        let parts: Vec<String> = self.diagonal.iter().map(show).collect();
        format!("<{}>", parts.join(", "))
    }
}

impl<F: Field> fmt::Display for QuadForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.entries_with(|x| x.to_string()))
    }
}

/// `transform * gram * transform^t = diag(form)`.
#[derive(Clone, Debug)]
pub struct Diagonalization<F> {
    pub form: QuadForm<F>,
    pub transform: Matrix<F>,
}

impl<F: Field> Diagonalization<F> {
    pub fn verify(&self, gram: &Matrix<F>) -> bool {
        let d = mat_mul(&mat_mul(&self.transform, gram), &transpose(&self.transform));
        let n = self.form.rank();
        d.len() == n
            && (0..n).all(|i| {
                (0..n).all(|j| if i == j { d[i][j] == self.form.diagonal[i] } else { d[i][j].is_zero() })
            })
    }
}

fn is_symmetric<F: Field>(g: &Matrix<F>) -> bool {
    let n = g.len();
    g.iter().all(|r| r.len() == n) && (0..n).all(|i| (0..i).all(|j| g[i][j] == g[j][i]))
}

/// Symmetric Gaussian elimination. A zero pivot is replaced by swapping in a
/// later nonzero diagonal entry, or, if the remaining diagonal is zero, by
/// adding a row and column with a nonzero off-diagonal entry (the new pivot
/// is then `2 g_kj`).
pub fn diagonalize<F: Field>(gram: &Matrix<F>) -> Result<Diagonalization<F>, FormsError> {
    let order: Vec<usize> = (0..gram.len()).collect();
    diagonalize_in_order(gram, &order)
}

/// As [`diagonalize`], eliminating the basis vectors in the given order.
pub fn diagonalize_in_order<F: Field>(gram: &Matrix<F>, order: &[usize]) -> Result<Diagonalization<F>, FormsError> {
    if !is_symmetric(gram) {
        return Err(FormsError::Invalid("Gram matrix is not symmetric".into()));
    }
    let n = gram.len();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(FormsError::Invalid("order is not a permutation".into()));
    }
    let mut t: Matrix<F> = order.iter().map(|&i| identity::<F>(n)[i].clone()).collect();
    let mut a = mat_mul(&mat_mul(&t, gram), &transpose(&t));

    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
                t.swap(k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                add_row_col(&mut a, &mut t, k, j, &F::one());
            } else {
                return Err(FormsError::Singular);
            }
        }
        let pivot = a[k][k].clone();
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let c = a[i][k].div_checked(&pivot).expect("nonzero pivot").neg_ref();
            add_row_col(&mut a, &mut t, i, k, &c);
        }
    }
    let diagonal: Vec<F> = (0..n).map(|i| a[i][i].clone()).collect();
    let out = Diagonalization { form: QuadForm::new(diagonal)?, transform: t };
    debug_assert!(out.verify(gram));
    Ok(out)
}

/// Row `dst += c * row src`, then the same on columns; records the row step in `t`.
fn add_row_col<F: Field>(a: &mut Matrix<F>, t: &mut Matrix<F>, dst: usize, src: usize, c: &F) {
    let n = a.len();
    for j in 0..n {
        let v = a[src][j].mul_ref(c);
        a[dst][j] = a[dst][j].add_ref(&v);
        let w = t[src][j].mul_ref(c);
        t[dst][j] = t[dst][j].add_ref(&w);
    }
    for i in 0..n {
        let v = a[i][src].mul_ref(c);
        a[i][dst] = a[i][dst].add_ref(&v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;
    use crate::arith::Rational;

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn identity_and_hyperbolic_plane() {
        let id = m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let d = diagonalize(&id).unwrap();
        assert_eq!(d.form.diagonal, vec![int(1); 3]);
        let h = m(&[&[0, 1], &[1, 0]]);
        let d = diagonalize(&h).unwrap();
        assert!(d.verify(&h));
        // <2, -1/2> = <2, -2> up to squares
        assert_eq!(d.form.diagonal, vec![int(2), Rational::new((-1).into(), 2.into())]);
        assert!(matches!(diagonalize(&m(&[&[1, 1], &[1, 1]])), Err(FormsError::Singular)));
        assert!(diagonalize(&m(&[&[1, 2], &[3, 1]])).is_err());
    }

    #[test]
    fn zero_pivot_with_later_diagonal() {
        let g = m(&[&[0, 1, 0], &[1, 0, 2], &[0, 2, 5]]);
        for order in [[0, 1, 2], [2, 1, 0], [1, 0, 2]] {
            let d = diagonalize_in_order(&g, &order).unwrap();
            assert!(d.verify(&g), "{order:?}");
            // det g = -5
            let det = d.form.determinant();
            assert!(det < int(0));
        }
    }
}
