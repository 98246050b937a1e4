//! Exact integer determinants via fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Determinant of a square big-integer matrix. The empty 0×0 matrix has
/// determinant 1. All intermediate divisions are exact; no rationals appear.
pub fn int_matrix_det(m: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(Error::Domain(format!(
                "non-square matrix: {n} rows but a row of length {}",
                row.len()
            )));
        }
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev; // exact by Bareiss
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    Ok(sign * a[n - 1][n - 1].clone())
}

/// Cofactor expansion, used as the independent oracle in tests.
pub fn det_cofactor(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * det_cofactor(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

pub fn from_i64(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_hankel_entries() {
        // det [[2,5],[5,14]] = 3 and det [[5,14],[14,42]] = 14
        assert_eq!(int_matrix_det(&from_i64(&[&[2, 5], &[5, 14]])).unwrap(), BigInt::from(3));
        assert_eq!(int_matrix_det(&from_i64(&[&[5, 14], &[14, 42]])).unwrap(), BigInt::from(14));
    }

    #[test]
    fn empty_matrix() {
        assert_eq!(int_matrix_det(&[]).unwrap(), BigInt::one());
    }

    #[test]
    fn non_square_rejected() {
        let m = from_i64(&[&[1, 2]]);
        assert!(int_matrix_det(&m).is_err());
    }

    #[test]
    fn singular_and_pivoting() {
        assert_eq!(
            int_matrix_det(&from_i64(&[&[1, 2], &[2, 4]])).unwrap(),
            BigInt::zero()
        );
        // zero pivot forces a row swap
        assert_eq!(
            int_matrix_det(&from_i64(&[&[0, 1], &[1, 0]])).unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(
            int_matrix_det(&from_i64(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])).unwrap(),
            BigInt::from(-1)
        );
    }

    #[test]
    fn matches_cofactor_on_random_small_matrices() {
        // deterministic xorshift so the 1000 cases are reproducible
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for case in 0..1000 {
            let n = (case % 5) as usize; // sizes 0..4
            let m: Vec<Vec<BigInt>> = (0..n)
                .map(|_| (0..n).map(|_| BigInt::from(next() as i64 % 19 - 9)).collect())
                .collect();
            assert_eq!(int_matrix_det(&m).unwrap(), det_cofactor(&m), "case {case}");
        }
    }
}
