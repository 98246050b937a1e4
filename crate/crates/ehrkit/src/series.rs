//! Rational power series of the form h(x) / (1 − x)^e.
//!
//! Every Ehrhart series produced from a poset lives here: `hstar` is the
//! numerator with integer coefficients and `denom_exp` the power of (1 − x).
//! Series derived from a poset on p elements satisfy hstar(0) = 1,
//! deg(hstar) ≤ denom_exp − 1, and all coefficients ≥ 0.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::binom::binomial;
use crate::error::{Error, Result};
use crate::poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EhrSeries {
    pub hstar: IntPoly,
    pub denom_exp: usize,
}

impl EhrSeries {
    pub fn new(hstar: IntPoly, denom_exp: usize) -> Self {
        EhrSeries { hstar, denom_exp }
    }

    /// 1 / (1 − x)^e
    pub fn one_over(denom_exp: usize) -> Self {
        EhrSeries { hstar: IntPoly::one(), denom_exp }
    }

    /// The multiplicative unit 1 / (1 − x)^0.
    pub fn unit() -> Self {
        EhrSeries::one_over(0)
    }

    /// Coefficient of x^n in the expansion: Σ_i h_i · C(n − i + e − 1, e − 1),
    /// dropping terms with n < i.
    pub fn coefficient(&self, n: usize) -> BigInt {
        let e = self.denom_exp as i64;
        let n = n as i64;
        if e == 0 {
            // plain polynomial
            return if n < 0 { BigInt::zero() } else { self.hstar.coeff(n as usize) };
        }
        let mut acc = BigInt::zero();
        for (i, h) in self.hstar.coeffs().iter().enumerate() {
            let i = i as i64;
            if i > n {
                break;
            }
            acc += h * binomial(n - i + e - 1, e - 1);
        }
        acc
    }

    pub fn coefficients(&self, terms: usize) -> Vec<BigInt> {
        (0..terms).map(|n| self.coefficient(n)).collect()
    }

    /// Cancel common (1 − x) factors between numerator and denominator so
    /// that hstar(1) ≠ 0 unless hstar = 0.
    pub fn reduce(mut self) -> Self {
        while self.denom_exp > 0 && !self.hstar.is_zero() {
            match self.hstar.div_one_minus_x() {
                Some(q) => {
                    self.hstar = q;
                    self.denom_exp -= 1;
                }
                None => break,
            }
        }
        self
    }

    /// Series equality as rational functions: cross-multiplied numerators
    /// agree after cancelling common (1 − x) powers.
    pub fn equivalent(&self, other: &EhrSeries) -> bool {
        let a = self.clone().reduce();
        let b = other.clone().reduce();
        a == b
    }
}

impl std::fmt::Display for EhrSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} / (1-x)^{}", self.hstar, self.denom_exp)
    }
}

/// Product of two series with `shift` powers of (1 − x) cancelled:
/// (a.hstar · b.hstar) / (1 − x)^{a.e + b.e − shift}, then reduced.
///
/// shift = 1 composes ordinal sums, shift = 2 composes glued posets.
pub fn series_mul(a: &EhrSeries, b: &EhrSeries, shift: usize) -> Result<EhrSeries> {
    if shift > a.denom_exp + b.denom_exp {
        return Err(Error::Domain(format!(
            "shift {shift} exceeds combined denominator exponent {}",
            a.denom_exp + b.denom_exp
        )));
    }
    let hstar = a.hstar.mul(&b.hstar);
    let denom_exp = a.denom_exp + b.denom_exp - shift;
    Ok(EhrSeries::new(hstar, denom_exp).reduce())
}

/// Hadamard (coefficient-wise) product.
///
/// Both inputs must satisfy deg(hstar) ≤ denom_exp − 1, so each coefficient
/// sequence is a polynomial in n of degree ≤ e − 1 and the product has degree
/// ≤ D = (e_a − 1) + (e_b − 1). The numerator is recovered from the first
/// D + 1 coefficients as (Σ_{n≤D} c_n x^n) · (1 − x)^{D+1} truncated at x^D.
pub fn series_hadamard(a: &EhrSeries, b: &EhrSeries) -> EhrSeries {
    debug_assert!(a.hstar.degree() < a.denom_exp as isize);
    debug_assert!(b.hstar.degree() < b.denom_exp as isize);
    let pa = a.denom_exp.saturating_sub(1);
    let pb = b.denom_exp.saturating_sub(1);
    let d = pa + pb;
    let e = d + 1;
    let mut numer = vec![BigInt::zero(); d + 1];
    let coeffs_a = a.coefficients(d + 1);
    let coeffs_b = b.coefficients(d + 1);
    // (Σ c_n x^n) · (1 − x)^{d+1}, truncated at degree d
    for n in 0..=d {
        let c = &coeffs_a[n] * &coeffs_b[n];
        if c.is_zero() {
            continue;
        }
        for (j, slot) in numer.iter_mut().enumerate().skip(n) {
            let sign = if (j - n) % 2 == 0 { 1 } else { -1 };
            *slot += &c * (sign * binomial(e as i64, (j - n) as i64));
        }
    }
    EhrSeries::new(IntPoly::new(numer), e)
}
