//! Determinant formulas for plane-partition counts of a Ferrers shape, the
//! exhaustive filling oracle, and the product evaluations for staircase
//! shapes (shifted Catalan Hankel determinants).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::binom::{binomial, catalan, factorial};
use crate::error::{Error, Result};
use crate::matrix::int_matrix_det;
use crate::partitions::Partition;
use crate::poly::IntPoly;

/// Number of plane partitions of shape λ with entries ≤ n, evaluated as a
/// t×t binomial determinant. Three equivalent matrix forms are computed and
/// must agree; a mismatch is an internal invariant violation.
pub fn ferrers_det(shape: &Partition, n: usize) -> Result<BigInt> {
    let t = shape.len();
    let parts = shape.parts();
    let n = n as i64;
    let lam = |idx: usize| parts[idx - 1] as i64; // 1-based λ_i
    let build = |entry: &dyn Fn(i64, i64) -> BigInt| -> Vec<Vec<BigInt>> {
        (1..=t as i64)
            .map(|i| (1..=t as i64).map(|j| entry(i, j)).collect())
            .collect()
    };
    let f1 = build(&|i, j| binomial(n + i + lam(t - j as usize + 1) - 1, n + i - j));
    let f2 = build(&|i, j| binomial(n + lam(t - j as usize + 1), n + i - j));
    let f3 = build(&|i, j| binomial(n + lam(i as usize), n + i - j));
    let d1 = int_matrix_det(&f1)?;
    let d2 = int_matrix_det(&f2)?;
    let d3 = int_matrix_det(&f3)?;
    if d1 != d2 || d2 != d3 {
        return Err(Error::Invariant(format!(
            "determinant forms disagree for {shape} at n={n}: {d1}, {d2}, {d3}"
        )));
    }
    Ok(d1)
}

/// Exhaustive oracle: fillings of shape λ with entries in {0..n}, weakly
/// decreasing along rows and columns.
pub fn plane_partition_count(shape: &Partition, n: usize) -> Result<BigInt> {
    plane_partition_count_with_caps(shape, n, 10, 6)
}

pub fn plane_partition_count_with_caps(
    shape: &Partition,
    n: usize,
    size_cap: usize,
    n_cap: usize,
) -> Result<BigInt> {
    if shape.size() > size_cap {
        return Err(Error::Cap { what: "plane partition cells", got: shape.size(), cap: size_cap });
    }
    if n > n_cap {
        return Err(Error::Cap { what: "plane partition bound n", got: n, cap: n_cap });
    }
    let parts = shape.parts();
    let mut rows: Vec<Vec<usize>> = parts.iter().map(|&len| vec![0; len]).collect();
    let cells: Vec<(usize, usize)> = shape.cells().map(|(i, j)| (i - 1, j - 1)).collect();
    let mut count = BigInt::zero();
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<usize>>,
        n: usize,
        count: &mut BigInt,
    ) {
        if idx == cells.len() {
            *count += 1;
            return;
        }
        let (i, j) = cells[idx];
        let mut hi = n;
        if j > 0 {
            hi = hi.min(rows[i][j - 1]);
        }
        if i > 0 && j < rows[i - 1].len() {
            hi = hi.min(rows[i - 1][j]);
        }
        for v in 0..=hi {
            rows[i][j] = v;
            rec(idx + 1, cells, rows, n, count);
        }
    }
    rec(0, &cells, &mut rows, n, &mut count);
    Ok(count)
}

/// Shifted Hankel determinant of Catalan numbers,
/// det_{0≤i,j≤n−1}(C_{i+j+k+1}); the empty determinant (n = 0) is 1.
/// Equals the plane-partition count for the staircase (k, k−1, ..., 1).
pub fn catalan_hankel(k: usize, n: usize) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::Domain("catalan_hankel requires k ≥ 1".into()));
    }
    let m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| catalan((i + j + k + 1) as u64)).collect())
        .collect();
    int_matrix_det(&m)
}

/// Product evaluation for the staircase-like shape λ = (k−d, k−2d, ..., k−td):
/// cells with t + c(u) ≤ λ_i contribute (n + t + c(u)) / (t + c(u)), the
/// remaining cells ((d+1)n + t + c(u)) / (t + c(u)).
///
/// For d = 1 with λ_t = 1 (the full staircase) the result is additionally
/// checked against the Cigler product form.
pub fn staircase_product(k: usize, d: usize, t: usize, n: usize) -> Result<BigInt> {
    if t == 0 {
        return Ok(BigInt::one());
    }
    if k < t * d + 1 {
        return Err(Error::Domain(format!(
            "invalid staircase: k−td = {} must be ≥ 1",
            k as i64 - (t * d) as i64
        )));
    }
    let parts: Vec<usize> = (1..=t).map(|i| k - i * d).collect();
    let shape = Partition::new(&parts)?;
    let mut acc = BigRational::one();
    let n_big = BigInt::from(n);
    for (i, j) in shape.cells() {
        let c = shape.content(i, j);
        let base = t as i64 + c;
        debug_assert!(base > 0);
        let numer = if base <= shape.parts()[i - 1] as i64 {
            &n_big + base
        } else {
            BigInt::from(d as i64 + 1) * &n_big + base
        };
        acc *= BigRational::new(numer, BigInt::from(base));
    }
    if !acc.is_integer() {
        return Err(Error::Invariant(format!(
            "staircase product for k={k} d={d} t={t} n={n} is not an integer: {acc}"
        )));
    }
    let value = acc.to_integer();
    if d == 1 && k == t + 1 {
        let cigler = cigler_product(t, n);
        if cigler != value {
            return Err(Error::Invariant(format!(
                "staircase and Cigler products disagree for k={k} t={t} n={n}: {value} vs {cigler}"
            )));
        }
    }
    Ok(value)
}

/// Numerator of the Ehrhart series of the ladder poset (shape (k, k)): the
/// Narayana row T(k, i) = (1/i) C(k−1, i−1) C(k, i−1) at degree i − 1,
/// over (1 − x)^{2k+1}.
pub fn narayana_hstar(k: usize) -> Result<IntPoly> {
    if k == 0 {
        return Err(Error::Domain("narayana_hstar requires k ≥ 1".into()));
    }
    let mut coeffs = Vec::with_capacity(k);
    for i in 1..=k as i64 {
        let t = binomial(k as i64 - 1, i - 1) * binomial(k as i64, i - 1);
        debug_assert!((&t % i).is_zero());
        coeffs.push(t / i);
    }
    Ok(IntPoly::new(coeffs))
}

/// Cigler's product for the staircase (k, k−1, ..., 1):
/// Π_{t=1}^k (n+t) · Π_{s=1}^{k−1} s!/(2s+1)! · Π_{j=0}^{k−2} Π_{i=3+2j}^{k+j+1} (2n+i).
/// Empty products are 1, which covers k ≤ 2 where the index ranges degenerate.
pub fn cigler_product(k: usize, n: usize) -> BigInt {
    let mut acc = BigRational::one();
    for t in 1..=k as i64 {
        acc *= BigRational::from_integer(BigInt::from(n as i64 + t));
    }
    for s in 1..k as u64 {
        acc *= BigRational::new(factorial(s), factorial(2 * s + 1));
    }
    for j in 0..k.saturating_sub(1) as i64 {
        for i in (3 + 2 * j)..=(k as i64 + j + 1) {
            acc *= BigRational::from_integer(BigInt::from(2 * n as i64 + i));
        }
    }
    debug_assert!(acc.is_integer());
    acc.to_integer()
}
