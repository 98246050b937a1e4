//! Principal specializations of Schur functions and their tableau oracles.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::binom::binomial;
use crate::error::{Error, Result};
use crate::matrix::int_matrix_det;
use crate::partitions::Partition;

/// s_λ(1^n) by the hook-content product Π (n + c(u)) / h(u); zero when
/// n < ℓ(λ). The product is accumulated as one big rational and must reduce
/// to an integer.
pub fn schur_principal(shape: &Partition, n: usize) -> Result<BigInt> {
    if n < shape.len() {
        return Ok(BigInt::zero());
    }
    let mut acc = BigRational::one();
    for (i, j) in shape.cells() {
        let numer = BigInt::from(n as i64 + shape.content(i, j));
        let denom = BigInt::from(shape.hook(i, j) as i64);
        acc *= BigRational::new(numer, denom);
    }
    if !acc.is_integer() {
        return Err(Error::Invariant(format!(
            "hook content product for {shape} at n={n} is not an integer: {acc}"
        )));
    }
    Ok(acc.to_integer())
}

/// s_λ(1^n) as the Jacobi–Trudi determinant det(h_{λ_i+j−i}) with
/// h_m(1^n) = C(n+m−1, m), h_0 = 1 and h_{m<0} = 0.
pub fn jacobi_trudi(shape: &Partition, n: usize) -> Result<BigInt> {
    let t = shape.len();
    let parts = shape.parts();
    let h = |m: i64| -> BigInt {
        if m < 0 {
            BigInt::zero()
        } else if m == 0 {
            BigInt::one()
        } else {
            binomial(n as i64 + m - 1, m)
        }
    };
    let matrix: Vec<Vec<BigInt>> = (1..=t as i64)
        .map(|i| {
            (1..=t as i64)
                .map(|j| h(parts[i as usize - 1] as i64 + j - i))
                .collect()
        })
        .collect();
    int_matrix_det(&matrix)
}

/// Exhaustive count of reverse semistandard Young tableaux of shape λ with
/// entries in {1..n}: weakly decreasing rows, strictly decreasing columns.
pub fn rssyt_count(shape: &Partition, n: usize) -> Result<BigInt> {
    if shape.size() > 12 {
        return Err(Error::Cap { what: "tableau cells", got: shape.size(), cap: 12 });
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
        let mut hi = n as i64;
        if j > 0 {
            hi = hi.min(rows[i][j - 1] as i64);
        }
        if i > 0 && j < rows[i - 1].len() {
            hi = hi.min(rows[i - 1][j] as i64 - 1);
        }
        let mut v = 1i64;
        while v <= hi {
            rows[i][j] = v as usize;
            rec(idx + 1, cells, rows, n, count);
            v += 1;
        }
    }
    rec(0, &cells, &mut rows, n, &mut count);
    Ok(count)
}

/// All standard Young tableaux of shape λ, each returned as the row index of
/// every entry 1..m in order.
fn syt_row_sequences(shape: &Partition) -> Vec<Vec<usize>> {
    let parts = shape.parts();
    let m = shape.size();
    let mut fill = vec![0usize; parts.len()]; // cells already used per row
    let mut rows_of = vec![0usize; m];
    let mut out = Vec::new();
    fn rec(
        entry: usize,
        m: usize,
        parts: &[usize],
        fill: &mut Vec<usize>,
        rows_of: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if entry == m {
            out.push(rows_of.clone());
            return;
        }
        for r in 0..parts.len() {
            // next free cell in row r must exist and keep columns strict
            if fill[r] < parts[r] && (r == 0 || fill[r - 1] > fill[r]) {
                fill[r] += 1;
                rows_of[entry] = r;
                rec(entry + 1, m, parts, fill, rows_of, out);
                fill[r] -= 1;
            }
        }
    }
    rec(0, m, parts, &mut fill, &mut rows_of, &mut out);
    out
}

/// s_λ(1^n) via the descent statistic on standard Young tableaux:
/// Σ_T C(n − d(T) + m − 1, m), where a descent of T is an entry i whose
/// successor i + 1 sits in a strictly lower row.
pub fn syt_descent_count(shape: &Partition, n: usize) -> Result<BigInt> {
    if shape.size() > 8 {
        return Err(Error::Cap { what: "SYT cells", got: shape.size(), cap: 8 });
    }
    let m = shape.size() as i64;
    let mut acc = BigInt::zero();
    for rows_of in syt_row_sequences(shape) {
        let d = rows_of.windows(2).filter(|w| w[1] > w[0]).count() as i64;
        acc += binomial(n as i64 - d + m - 1, m);
    }
    Ok(acc)
}
