//! Exact signature and determinant of integer matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn int_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn is_symmetric(m: &IntMatrix) -> bool {
    let n = m.len();
    (0..n).all(|i| m[i].len() == n && (0..i).all(|j| m[i][j] == m[j][i]))
}

/// Signature of a symmetric integer matrix by congruence diagonalization
/// over the rationals.
pub fn signature(m: &IntMatrix) -> i64 {
    debug_assert!(is_symmetric(m));
    let mut a: Vec<Vec<BigRational>> =
        m.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
    let mut sig = 0;
    loop {
        let n = a.len();
        if n == 0 {
            return sig;
        }
        let pivot = match (0..n).find(|&i| !a[i][i].is_zero()) {
            Some(i) => i,
            None => {
                let Some((i, j)) =
                    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero())
                else {
                    return sig;
                };
                // e_i ↦ e_i + e_j makes the diagonal entry 2a_ij
                for k in 0..n {
                    let v = a[j][k].clone();
                    a[i][k] += v;
                }
                for k in 0..n {
                    let v = a[k][j].clone();
                    a[k][i] += v;
                }
                i
            }
        };
        let p = a[pivot][pivot].clone();
        sig += if p.is_positive() { 1 } else { -1 };
        let row = a[pivot].clone();
        for i in 0..n {
            if i == pivot || a[i][pivot].is_zero() {
                continue;
            }
            let f = &a[i][pivot] / &p;
            for k in 0..n {
                let d = &f * &row[k];
                a[i][k] -= d;
            }
        }
        a.remove(pivot);
        for r in &mut a {
            r.remove(pivot);
        }
    }
}

/// Fraction-free Gaussian elimination.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut a = m.clone();
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    a[n - 1][n - 1].clone() * sign
}

/// Drops row and column `k`.
pub fn minor(m: &IntMatrix, k: usize) -> IntMatrix {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != k)
        .map(|(_, r)| r.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, x)| x.clone()).collect())
        .collect()
}
