//! Linear-extension enumeration and the lattice-point oracle.
//!
//! A linear extension of a naturally labeled poset is read as the permutation
//! of labels in removal order; its descents index the h*-vector. The oracle
//! counts order-preserving maps into {0..n} directly, so the two paths are
//! independent of each other.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{poly_interpolate, IntPoly, RatPoly};
use crate::poset::Poset;
use crate::series::EhrSeries;

/// Default cap on poset size for extension enumeration (e(P) grows
/// factorially; refuse rather than hang).
pub const DEFAULT_EXTENSION_CAP: usize = 20;
/// Default caps for the brute-force order-map oracle.
pub const DEFAULT_ORACLE_SIZE_CAP: usize = 12;
pub const DEFAULT_ORACLE_N_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionStats {
    /// e(P): number of linear extensions.
    pub total: BigInt,
    /// Entry i counts extensions with exactly i descents.
    pub by_descents: Vec<BigInt>,
}

pub fn extension_stats(p: &Poset) -> Result<ExtensionStats> {
    extension_stats_with_cap(p, DEFAULT_EXTENSION_CAP)
}

/// Exact descent distribution over all linear extensions, by backtracking
/// over currently-minimal elements in increasing label order.
pub fn extension_stats_with_cap(p: &Poset, cap: usize) -> Result<ExtensionStats> {
    if p.size() > cap {
        return Err(Error::Cap { what: "extension enumeration poset size", got: p.size(), cap });
    }
    let n = p.size();
    if n == 0 {
        return Ok(ExtensionStats { total: BigInt::one(), by_descents: vec![BigInt::one()] });
    }
    let mut tallies = vec![BigInt::zero(); n];
    // remaining lower covers per element; 0 means currently removable
    let mut blockers: Vec<usize> = (0..n).map(|v| p.lower_covers(v).count()).collect();
    let mut removed = vec![false; n];
    fn rec(
        p: &Poset,
        depth: usize,
        last: usize,
        descents: usize,
        blockers: &mut Vec<usize>,
        removed: &mut Vec<bool>,
        tallies: &mut Vec<BigInt>,
    ) {
        let n = p.size();
        if depth == n {
            tallies[descents] += 1;
            return;
        }
        for v in 0..n {
            if removed[v] || blockers[v] != 0 {
                continue;
            }
            removed[v] = true;
            for u in p.upper_covers(v) {
                blockers[u] -= 1;
            }
            let d = descents + usize::from(last != usize::MAX && last > v);
            rec(p, depth + 1, v, d, blockers, removed, tallies);
            for u in p.upper_covers(v) {
                blockers[u] += 1;
            }
            removed[v] = false;
        }
    }
    rec(p, 0, usize::MAX, 0, &mut blockers, &mut removed, &mut tallies);
    while tallies.last().is_some_and(|t| t.is_zero()) {
        tallies.pop();
    }
    let total = tallies.iter().sum();
    Ok(ExtensionStats { total, by_descents: tallies })
}

pub fn ehr_series(p: &Poset) -> Result<EhrSeries> {
    ehr_series_with_cap(p, DEFAULT_EXTENSION_CAP)
}

/// Ehrhart series of the order polytope: descent tallies over (1−x)^{p+1}.
pub fn ehr_series_with_cap(p: &Poset, cap: usize) -> Result<EhrSeries> {
    let stats = extension_stats_with_cap(p, cap)?;
    Ok(EhrSeries::new(IntPoly::new(stats.by_descents), p.size() + 1))
}

pub fn count_order_maps(p: &Poset, n: usize) -> Result<BigInt> {
    count_order_maps_with_caps(p, n, DEFAULT_ORACLE_SIZE_CAP, DEFAULT_ORACLE_N_CAP)
}

/// Brute-force count of order-preserving maps P → {0..n} by depth-first
/// assignment in label order (labels are topological, so each element's
/// lower covers are already assigned).
pub fn count_order_maps_with_caps(
    p: &Poset,
    n: usize,
    size_cap: usize,
    n_cap: usize,
) -> Result<BigInt> {
    if p.size() > size_cap {
        return Err(Error::Cap { what: "oracle poset size", got: p.size(), cap: size_cap });
    }
    if n > n_cap {
        return Err(Error::Cap { what: "oracle dilation n", got: n, cap: n_cap });
    }
    let size = p.size();
    let lower: Vec<Vec<usize>> = (0..size).map(|v| p.lower_covers(v).collect()).collect();
    let mut values = vec![0usize; size];
    let mut count = BigInt::zero();
    fn rec(
        v: usize,
        size: usize,
        n: usize,
        lower: &[Vec<usize>],
        values: &mut Vec<usize>,
        count: &mut BigInt,
    ) {
        if v == size {
            *count += 1;
            return;
        }
        let floor = lower[v].iter().map(|&u| values[u]).max().unwrap_or(0);
        for val in floor..=n {
            values[v] = val;
            rec(v + 1, size, n, lower, values, count);
        }
    }
    rec(0, size, n, &lower, &mut values, &mut count);
    Ok(count)
}

/// Ehrhart polynomial by exact interpolation of the p + 1 series
/// coefficients at n = 0..p.
pub fn ehr_polynomial(p: &Poset) -> Result<RatPoly> {
    let series = ehr_series(p)?;
    let points: Vec<(BigInt, BigInt)> = (0..=p.size())
        .map(|n| (BigInt::from(n), series.coefficient(n)))
        .collect();
    poly_interpolate(&points, p.size())
}

#[derive(Debug, Clone)]
pub struct CrosscheckReport {
    /// (n, engine value, oracle value) for each checked dilation.
    pub rows: Vec<(usize, BigInt, BigInt)>,
}

impl CrosscheckReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|(_, a, b)| a == b)
    }

    pub fn first_mismatch(&self) -> Option<usize> {
        self.rows.iter().find(|(_, a, b)| a != b).map(|(n, _, _)| *n)
    }
}

/// Compare series coefficients against the brute-force oracle for
/// 0 ≤ n ≤ nmax.
pub fn crosscheck(p: &Poset, nmax: usize) -> Result<CrosscheckReport> {
    crosscheck_with_caps(p, nmax, DEFAULT_EXTENSION_CAP, DEFAULT_ORACLE_SIZE_CAP, nmax.max(DEFAULT_ORACLE_N_CAP))
}

pub fn crosscheck_with_caps(
    p: &Poset,
    nmax: usize,
    ext_cap: usize,
    size_cap: usize,
    n_cap: usize,
) -> Result<CrosscheckReport> {
    let series = ehr_series_with_cap(p, ext_cap)?;
    let mut rows = Vec::with_capacity(nmax + 1);
    for n in 0..=nmax {
        let engine = series.coefficient(n);
        let oracle = count_order_maps_with_caps(p, n, size_cap, n_cap)?;
        rows.push((n, engine, oracle));
    }
    Ok(CrosscheckReport { rows })
}
