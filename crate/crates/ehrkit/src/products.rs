//! Closed-form product evaluations: boxed plane partitions, the equivalent
//! binomial-quotient product, hexagon tilings, and the chain-times-V count.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::binom::{binomial, factorial};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::tableaux::schur_principal;

fn integral(acc: BigRational, what: &str) -> Result<BigInt> {
    if !acc.is_integer() {
        return Err(Error::Invariant(format!("{what} is not an integer: {acc}")));
    }
    Ok(acc.to_integer())
}

/// Plane partitions in a t × k box with entries ≤ n:
/// Π_{i=1}^t Π_{j=1}^k (i + j + n − 1) / (i + j − 1).
pub fn macmahon_box(t: usize, k: usize, n: usize) -> Result<BigInt> {
    let mut acc = BigRational::one();
    for i in 1..=t as i64 {
        for j in 1..=k as i64 {
            acc *= BigRational::new(BigInt::from(i + j + n as i64 - 1), BigInt::from(i + j - 1));
        }
    }
    integral(acc, "box product")
}

/// The same count written as Π_{i=0}^{k−1} C(n+t+k−1, n+i) · i! / (n+t+k−i−1)^{k−i−1}.
pub fn rect_product_1409(t: usize, k: usize, n: usize) -> Result<BigInt> {
    let mut acc = BigRational::one();
    let n = n as i64;
    let t = t as i64;
    let k = k as i64;
    for i in 0..k {
        acc *= BigRational::from_integer(binomial(n + t + k - 1, n + i));
        acc *= BigRational::from_integer(factorial(i as u64));
        let base = BigInt::from(n + t + k - i - 1);
        let exp = (k - i - 1) as u32;
        acc /= BigRational::from_integer(base.pow(exp));
    }
    integral(acc, "binomial-quotient box product")
}

/// Rectangular shapes only: the count equals s_{(k^t)}(1^{n+t}) by the
/// row-shift bijection onto reverse semistandard tableaux. The bijection
/// fails for non-rectangular shapes, hence the restricted signature.
pub fn rect_hook_content(t: usize, k: usize, n: usize) -> Result<BigInt> {
    let shape = Partition::rectangle(t, k)?;
    schur_principal(&shape, n + t)
}

/// Lozenge tilings of a ⟨k, n, k⟩ hexagon:
/// Π_{i=1}^n Π_{t=k}^{2k−1} (i + t) / Π_{j=0}^{k−1} (i + j).
pub fn hexagon_tilings(k: usize, n: usize) -> Result<BigInt> {
    let mut acc = BigRational::one();
    for i in 1..=n as i64 {
        for t in k as i64..=(2 * k as i64 - 1) {
            acc *= BigRational::from_integer(BigInt::from(i + t));
        }
        for j in 0..k as i64 {
            acc /= BigRational::from_integer(BigInt::from(i + j));
        }
    }
    integral(acc, "hexagon product")
}

/// Lattice points of the order polytope of I_k × V:
/// (n+k+1)! (2n+2k+1)! / ((n+1)! (2n+1)! (k+1)! (2k+1)!).
pub fn mk_formula(k: usize, n: usize) -> Result<BigInt> {
    let n = n as u64;
    let k = k as u64;
    let acc = BigRational::new(
        factorial(n + k + 1) * factorial(2 * n + 2 * k + 1),
        factorial(n + 1) * factorial(2 * n + 1) * factorial(k + 1) * factorial(2 * k + 1),
    );
    integral(acc, "chain-times-V count")
}
