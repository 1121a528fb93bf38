//! Dense linear algebra over a field by exact Gaussian elimination.

use super::field::Field;

pub type Matrix<F> = Vec<Vec<F>>;

pub fn identity<F: Field>(n: usize) -> Matrix<F> {
    (0..n).map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect()).collect()
}

pub fn transpose<F: Field>(a: &Matrix<F>) -> Matrix<F> {
    if a.is_empty() {
        return Vec::new();
    }
    (0..a[0].len()).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn mat_mul<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    let m = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| row.iter().zip(b).fold(F::zero(), |acc, (x, brow)| acc.add_ref(&x.mul_ref(&brow[j]))))
                .collect()
        })
        .collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(a: &mut Matrix<F>) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        for x in a[r].iter_mut() {
            *x = x.mul_ref(&inv);
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let v = a[r][j].mul_ref(&f);
                    a[i][j] = a[i][j].sub_ref(&v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(a: &Matrix<F>) -> usize {
    rref(&mut a.clone()).len()
}

pub fn det<F: Field>(a: &Matrix<F>) -> F {
    let n = a.len();
    let mut m = a.clone();
    let mut acc = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return F::zero();
        };
        if p != c {
            m.swap(p, c);
            acc = acc.neg_ref();
        }
        acc = acc.mul_ref(&m[c][c]);
        let inv = m[c][c].inv().unwrap();
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].mul_ref(&inv);
            for j in c..n {
                let v = m[c][j].mul_ref(&f);
                m[i][j] = m[i][j].sub_ref(&v);
            }
        }
    }
    acc
}

/// Solves `a x = b` for square invertible `a`.
pub fn solve<F: Field>(a: &Matrix<F>, b: &[F]) -> Option<Vec<F>> {
    let n = a.len();
    let mut aug: Matrix<F> = a.iter().zip(b).map(|(row, bi)| {
        let mut r = row.clone();
        r.push(bi.clone());
        r
    }).collect();
    let piv = rref(&mut aug);
    if piv.len() != n || piv.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(aug.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

pub fn inverse<F: Field>(a: &Matrix<F>) -> Option<Matrix<F>> {
    let n = a.len();
    let mut aug: Matrix<F> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Basis of the right null space `{x : a x = 0}`.
pub fn nullspace<F: Field>(a: &Matrix<F>, cols: usize) -> Vec<Vec<F>> {
    let mut m = a.clone();
    let piv = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); cols];
            v[f] = F::one();
            for (r, &pc) in piv.iter().enumerate() {
                v[pc] = m[r][f].neg_ref();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, Rational};

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn basics() {
        let a = m(&[&[2, 1], &[1, 3]]);
        assert_eq!(det(&a), int(5));
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(2));
        assert_eq!(solve(&a, &[int(3), int(4)]).unwrap(), vec![int(1), int(1)]);
        let s = m(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(rank(&s), 1);
        let ns = nullspace(&s, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let prod = mat_mul(&s, &v.iter().map(|x| vec![x.clone()]).collect());
            assert!(prod.iter().all(|r| r[0] == int(0)));
        }
        assert_eq!(det(&m(&[&[0, 1], &[1, 0]])), int(-1));
    }
}
