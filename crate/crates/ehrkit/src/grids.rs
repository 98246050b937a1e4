//! Nested square counts: the coefficient recursion for towers of the
//! three-element fan, checked against the closed series form.

use num_bigint::BigInt;
use num_traits::One;

use crate::poly::IntPoly;
use crate::series::EhrSeries;

/// Squares of all sizes after m−1 consecutive decompositions of an
/// (n+1)×(n+1) grid, via the recursion
/// T(m+1, n) = Σ_{j=0}^n (n−j+1)^2 T(m, j) with T(0, n) = 1.
pub fn grid_square_count(m: usize, n: usize) -> BigInt {
    let mut row: Vec<BigInt> = vec![BigInt::one(); n + 1];
    for _ in 0..m {
        let next: Vec<BigInt> = (0..=n)
            .map(|top| {
                (0..=top)
                    .map(|j| {
                        let w = (top - j + 1) as i64;
                        BigInt::from(w * w) * &row[j]
                    })
                    .sum()
            })
            .collect();
        row = next;
    }
    row[n].clone()
}

/// The closed series (1+x)^m / (1−x)^{3m+1} with the same coefficients.
pub fn tower_series(m: usize) -> EhrSeries {
    EhrSeries::new(IntPoly::from_i64(&[1, 1]).pow(m), 3 * m + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_values() {
        assert_eq!(grid_square_count(2, 2), BigInt::from(43));
        assert_eq!(grid_square_count(3, 2), BigInt::from(88));
        for n in 0..6usize {
            assert_eq!(grid_square_count(0, n), BigInt::one());
        }
        // m = 1: sums of squares
        for n in 0..6usize {
            let want: i64 = (1..=n as i64 + 1).map(|i| i * i).sum();
            assert_eq!(grid_square_count(1, n), BigInt::from(want));
        }
    }

    #[test]
    fn recursion_matches_series() {
        for m in 0..=5usize {
            let series = tower_series(m);
            for n in 0..=10usize {
                assert_eq!(grid_square_count(m, n), series.coefficient(n), "m={m} n={n}");
            }
        }
    }
}
