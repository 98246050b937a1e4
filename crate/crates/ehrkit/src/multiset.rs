//! Descent polynomials of multiset permutations and the Ehrhart series of
//! the bounded fan posets they govern.
//!
//! For the multiset {1^{p_1}, ..., r^{p_r}} the descent generating polynomial
//! A(x) = Σ_i T(i) x^i is computed two ways: direct enumeration of all
//! multipermutations, and the alternating binomial sum
//! T(i) = Σ_j (−1)^j C(N+1, j) Π_l C(p_l + i − j, p_l). Whenever the
//! enumeration is feasible both paths run and must agree.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::binom::binomial;
use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::series::EhrSeries;

const ENUMERATION_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultisetSpec {
    multiplicities: Vec<usize>,
}

impl MultisetSpec {
    pub fn new(multiplicities: &[usize]) -> Result<MultisetSpec> {
        if multiplicities.is_empty() {
            return Err(Error::Domain("multiset needs at least one value class".into()));
        }
        if multiplicities.iter().any(|&p| p == 0) {
            return Err(Error::Domain("multiset multiplicities must be ≥ 1".into()));
        }
        Ok(MultisetSpec { multiplicities: multiplicities.to_vec() })
    }

    /// (k, k, ..., k) with r classes.
    pub fn uniform(r: usize, k: usize) -> Result<MultisetSpec> {
        MultisetSpec::new(&vec![k; r])
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Total number of letters N = Σ p_i.
    pub fn total(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    pub fn classes(&self) -> usize {
        self.multiplicities.len()
    }
}

fn descent_poly_formula(spec: &MultisetSpec) -> IntPoly {
    let n_total = spec.total() as i64;
    let mut coeffs = Vec::new();
    for i in 0..spec.total().max(1) as i64 {
        let mut t = BigInt::zero();
        for j in 0..=i {
            let mut term = binomial(n_total + 1, j);
            for &p in &spec.multiplicities {
                term *= binomial(p as i64 + i - j, p as i64);
            }
            if j % 2 == 0 {
                t += term;
            } else {
                t -= term;
            }
        }
        coeffs.push(t);
    }
    IntPoly::new(coeffs)
}

/// Descent tallies by exhaustive enumeration of the multipermutations.
pub fn multiset_descent_poly_enumerated(spec: &MultisetSpec) -> Result<IntPoly> {
    let total = spec.total();
    if total > ENUMERATION_CAP {
        return Err(Error::Cap { what: "multiset letters", got: total, cap: ENUMERATION_CAP });
    }
    let mut remaining = spec.multiplicities.clone();
    let mut tallies = vec![BigInt::zero(); total];
    fn rec(
        placed: usize,
        total: usize,
        last: usize,
        descents: usize,
        remaining: &mut Vec<usize>,
        tallies: &mut Vec<BigInt>,
    ) {
        if placed == total {
            tallies[descents] += 1;
            return;
        }
        for v in 0..remaining.len() {
            if remaining[v] == 0 {
                continue;
            }
            remaining[v] -= 1;
            let d = descents + usize::from(placed > 0 && last > v);
            rec(placed + 1, total, v, d, remaining, tallies);
            remaining[v] += 1;
        }
    }
    rec(0, total, 0, 0, &mut remaining, &mut tallies);
    Ok(IntPoly::new(tallies))
}

/// A(x) for the multiset. Computed by the alternating sum; when the letter
/// count permits, the enumeration also runs and the two must agree.
pub fn multiset_descent_poly(spec: &MultisetSpec) -> Result<IntPoly> {
    let formula = descent_poly_formula(spec);
    if spec.total() <= ENUMERATION_CAP {
        let enumerated = multiset_descent_poly_enumerated(spec)?;
        if enumerated != formula {
            return Err(Error::Invariant(format!(
                "multiset descent paths disagree for {:?}: {} vs {}",
                spec.multiplicities, enumerated, formula
            )));
        }
    }
    Ok(formula)
}

/// Ehrhart series of the poset obtained by putting one element below r
/// disjoint chains of lengths p_1..p_r, with (`topped`) or without one more
/// element on top: A(x) / (1−x)^{N+3} resp. A(x) / (1−x)^{N+2}.
pub fn sandwich_series(spec: &MultisetSpec, topped: bool) -> Result<EhrSeries> {
    let numer = multiset_descent_poly(spec)?;
    let e = spec.total() + if topped { 3 } else { 2 };
    Ok(EhrSeries::new(numer, e))
}
