//! Exact integer helpers: binomials, factorials, Catalan and Stirling numbers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient C(n, k) for arbitrary integer n ≥ 0 and integer k.
/// Returns 0 when k < 0 or k > n.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n || n < 0 {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}

pub fn factorial(n: u64) -> BigInt {
    let mut out = BigInt::one();
    for i in 2..=n {
        out *= i;
    }
    out
}

/// Catalan number C_n = C(2n, n) / (n + 1).
pub fn catalan(n: u64) -> BigInt {
    binomial(2 * n as i64, n as i64) / (n as i64 + 1)
}

/// Stirling numbers of the second kind S(n, k), built from the recurrence
/// S(n, k) = k·S(n−1, k) + S(n−1, k−1).
pub fn stirling2(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    if n == 0 {
        return BigInt::one(); // S(0, 0) = 1
    }
    if k == 0 {
        return BigInt::zero();
    }
    // row-by-row table, only up to column k
    let kmax = k as usize;
    let mut row = vec![BigInt::zero(); kmax + 1];
    row[0] = BigInt::one(); // row n = 0
    for _ in 1..=n {
        let mut next = vec![BigInt::zero(); kmax + 1];
        for j in 1..=kmax {
            next[j] = BigInt::from(j) * &row[j] + &row[j - 1];
        }
        row = next;
    }
    row[kmax].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn catalan_values() {
        let want = [1, 1, 2, 5, 14, 42, 132, 429];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(catalan(n as u64), BigInt::from(*w));
        }
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(5, 3), BigInt::from(25));
        assert_eq!(stirling2(0, 0), BigInt::one());
        assert_eq!(stirling2(3, 0), BigInt::zero());
        assert_eq!(stirling2(7, 5), BigInt::from(140));
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(10), BigInt::from(3628800u64));
    }
}
