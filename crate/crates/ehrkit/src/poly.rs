//! Dense polynomials with exact coefficients.
//!
//! `IntPoly` holds big-integer coefficients (numerators of Ehrhart series),
//! `RatPoly` holds big-rational coefficients (Ehrhart polynomials). Both strip
//! trailing zeros so the coefficient vector length is degree + 1; the zero
//! polynomial has an empty vector and degree −1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::one()] }
    }

    /// x^k
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree with −1 sentinel for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn pow(&self, k: usize) -> IntPoly {
        let mut out = IntPoly::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sum of coefficients, i.e. value at x = 1.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact division by (1 − x). Returns None if (1 − x) does not divide self.
    pub fn div_one_minus_x(&self) -> Option<IntPoly> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if !self.eval_one().is_zero() {
            return None;
        }
        // self = q · (1 − x): q_i = c_i + q_{i-1}
        let mut q = Vec::with_capacity(self.coeffs.len() - 1);
        let mut prev = BigInt::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let qi = c + &prev;
            prev = qi.clone();
            q.push(qi);
        }
        Some(IntPoly::new(q))
    }

    /// True iff all coefficients are ≥ 0.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl std::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(x)))
    }
}

impl std::fmt::Display for RatPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if c.is_integer() {
                write!(f, "{}", c.numer())?;
            } else {
                write!(f, "{}/{}", c.numer(), c.denom())?;
            }
        }
        write!(f, "]")
    }
}

/// Unique polynomial of degree ≤ d through d+1 points with distinct
/// abscissae, by Lagrange interpolation over exact rationals.
pub fn poly_interpolate(points: &[(BigInt, BigInt)], degree: usize) -> Result<RatPoly> {
    if points.len() != degree + 1 {
        return Err(Error::Domain(format!(
            "interpolation needs exactly {} points, got {}",
            degree + 1,
            points.len()
        )));
    }
    for (i, (xi, _)) in points.iter().enumerate() {
        for (xj, _) in &points[..i] {
            if xi == xj {
                return Err(Error::Domain(format!("duplicate abscissa {xi}")));
            }
        }
    }
    let mut acc = vec![BigRational::zero(); degree + 1];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // basis_i(x) = Π_{j≠i} (x − x_j) / (x_i − x_j)
        let mut basis = vec![BigRational::zero(); degree + 1];
        basis[0] = BigRational::one();
        let mut len = 1;
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            let xj_rat = BigRational::from_integer(xj.clone());
            // multiply basis by (x − x_j)
            for k in (0..len).rev() {
                let b = basis[k].clone();
                basis[k + 1] += &b;
                basis[k] = -xj_rat.clone() * b;
            }
            len += 1;
            denom *= BigRational::from_integer(xi - xj);
        }
        let scale = BigRational::from_integer(yi.clone()) / denom;
        for (a, b) in acc.iter_mut().zip(basis) {
            *a += b * &scale;
        }
    }
    Ok(RatPoly::new(acc))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn zero_degree_sentinel() {
        assert_eq!(IntPoly::zero().degree(), -1);
        assert_eq!(p(&[0, 0, 0]).degree(), -1);
        assert_eq!(p(&[1, 0, 3, 0]).degree(), 2);
    }

    #[test]
    fn mul_and_eval() {
        let a = p(&[1, 1]); // 1 + x
        let sq = a.mul(&a);
        assert_eq!(sq, p(&[1, 2, 1]));
        assert_eq!(sq.eval(&BigInt::from(3)), BigInt::from(16));
    }

    #[test]
    fn div_one_minus_x_roundtrip() {
        let q = p(&[1, 4, 1]);
        let prod = q.mul(&p(&[1, -1])); // q · (1 − x)
        assert_eq!(prod.div_one_minus_x().unwrap(), q);
        assert!(p(&[1, 1]).div_one_minus_x().is_none());
    }

    #[test]
    fn interpolate_linear_collapse() {
        // {(0,1),(1,2),(2,3)} with d = 2 collapses to n + 1
        let pts: Vec<_> = [(0, 1), (1, 2), (2, 3)]
            .iter()
            .map(|&(x, y)| (BigInt::from(x), BigInt::from(y)))
            .collect();
        let poly = poly_interpolate(&pts, 2).unwrap();
        assert_eq!(poly.degree(), 1);
        assert_eq!(poly.eval_int(10), BigRational::from_integer(BigInt::from(11)));
    }

    #[test]
    fn interpolate_cubic() {
        // {(0,1),(1,5),(2,14),(3,30)} → (n+1)(n+2)(2n+3)/6
        let pts: Vec<_> = [(0, 1), (1, 5), (2, 14), (3, 30)]
            .iter()
            .map(|&(x, y)| (BigInt::from(x), BigInt::from(y)))
            .collect();
        let poly = poly_interpolate(&pts, 3).unwrap();
        for n in 0..20i64 {
            let want = BigRational::from_integer(
                BigInt::from((n + 1) * (n + 2) * (2 * n + 3)) / BigInt::from(6),
            );
            assert_eq!(poly.eval_int(n), want);
        }
    }

    #[test]
    fn interpolate_rejects_duplicates() {
        let pts = vec![
            (BigInt::from(0), BigInt::from(1)),
            (BigInt::from(0), BigInt::from(2)),
        ];
        assert!(poly_interpolate(&pts, 1).is_err());
    }

    #[test]
    fn interpolate_reproduces_points() {
        let pts: Vec<_> = [(0i64, 7i64), (1, -2), (2, 0), (5, 33), (9, 1)]
            .iter()
            .map(|&(x, y)| (BigInt::from(x), BigInt::from(y)))
            .collect();
        let poly = poly_interpolate(&pts, 4).unwrap();
        for (x, y) in &pts {
            let got = poly.eval(&BigRational::from_integer(x.clone()));
            assert_eq!(got, BigRational::from_integer(y.clone()));
        }
    }
}
