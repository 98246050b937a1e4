//! Riordan arrays: lower-triangular integer matrices whose column c is
//! generated by g(x) · f(x)^c.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::series::EhrSeries;

/// First `rows` rows of the Riordan array (g, f). Entry (r, c) is the
/// coefficient of x^r in g · f^c for 0 ≤ c ≤ r. The column multiplier f must
/// have zero constant term so the matrix is lower triangular.
pub fn riordan_triangle(g: &EhrSeries, f: &EhrSeries, rows: usize) -> Result<Vec<Vec<BigInt>>> {
    if !f.coefficient(0).is_zero() {
        return Err(Error::Domain(
            "Riordan column multiplier must have zero constant term".into(),
        ));
    }
    let mut out = Vec::with_capacity(rows);
    // column series g·f^c, built incrementally
    let mut col = g.clone();
    let mut cols: Vec<EhrSeries> = Vec::with_capacity(rows);
    for _ in 0..rows {
        cols.push(col.clone());
        col = EhrSeries::new(col.hstar.mul(&f.hstar), col.denom_exp + f.denom_exp);
    }
    for r in 0..rows {
        let mut row = Vec::with_capacity(r + 1);
        for column in cols.iter().take(r + 1) {
            row.push(column.coefficient(r));
        }
        out.push(row);
    }
    Ok(out)
}
