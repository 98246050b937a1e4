//! Stirling counts for the incomplete ladder and the second-order Eulerian
//! numerators of its Ehrhart series.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::binom::stirling2;
use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Lattice points of the order polytope of the incomplete ladder on 2k
/// elements: S(n+k+1, n+1).
pub fn stirling_bar(k: usize, n: usize) -> BigInt {
    stirling2((n + k + 1) as u64, (n + 1) as u64)
}

/// Row k of the second-order Eulerian triangle, from the recurrence
/// T(k, i) = i·T(k−1, i) + (2k−i)·T(k−1, i−1) with T(1, 1) = 1.
pub fn second_order_eulerian_row(k: usize) -> Result<Vec<BigInt>> {
    if k == 0 {
        return Err(Error::Domain("second-order Eulerian rows start at k = 1".into()));
    }
    let mut row = vec![BigInt::one()]; // row 1
    for m in 2..=k {
        let mut next = vec![BigInt::zero(); m];
        for i in 1..=m {
            let mut v = BigInt::zero();
            if i <= row.len() {
                v += BigInt::from(i) * &row[i - 1];
            }
            if i >= 2 && i - 1 <= row.len() {
                v += BigInt::from(2 * m - i) * &row[i - 2];
            }
            next[i - 1] = v;
        }
        row = next;
    }
    Ok(row)
}

/// Numerator of the incomplete-ladder Ehrhart series: the row's entry
/// T(k, i) sits at degree i − 1, the denominator exponent is 2k + 1.
pub fn second_order_eulerian_hstar(k: usize) -> Result<IntPoly> {
    Ok(IntPoly::new(second_order_eulerian_row(k)?))
}
