//! Non-intersecting lattice path systems.
//!
//! A path system pairs start points S_j with end points E_i; paths move one
//! unit east or north. `lgv_count` enumerates tuples of pairwise
//! vertex-disjoint paths (P_1, ..., P_t) with P_i from S_i to E_i and checks
//! the count against the determinant of the path-count matrix — the two
//! routes must always agree for systems satisfying the crossing condition.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::binom::binomial;
use crate::error::{Error, Result};
use crate::matrix::int_matrix_det;
use crate::partitions::Partition;

/// Dense occupancy bitmap over the bounding box of a path system.
struct Occupancy {
    x0: i64,
    y0: i64,
    width: i64,
    cells: Vec<bool>,
}

impl Occupancy {
    fn new(points: impl Iterator<Item = (i64, i64)> + Clone) -> Occupancy {
        let x0 = points.clone().map(|p| p.0).min().unwrap_or(0);
        let x1 = points.clone().map(|p| p.0).max().unwrap_or(0);
        let y0 = points.clone().map(|p| p.1).min().unwrap_or(0);
        let y1 = points.map(|p| p.1).max().unwrap_or(0);
        let width = x1 - x0 + 1;
        let height = y1 - y0 + 1;
        Occupancy { x0, y0, width, cells: vec![false; (width * height) as usize] }
    }

    #[inline]
    fn idx(&self, p: (i64, i64)) -> usize {
        ((p.1 - self.y0) * self.width + (p.0 - self.x0)) as usize
    }

    #[inline]
    fn taken(&self, p: (i64, i64)) -> bool {
        self.cells[self.idx(p)]
    }

    #[inline]
    fn set(&mut self, p: (i64, i64), value: bool) {
        let i = self.idx(p);
        self.cells[i] = value;
    }
}

#[derive(Debug, Clone)]
pub struct PathSystem {
    starts: Vec<(i64, i64)>,
    ends: Vec<(i64, i64)>,
}

impl PathSystem {
    pub fn new(starts: Vec<(i64, i64)>, ends: Vec<(i64, i64)>) -> Result<PathSystem> {
        if starts.len() != ends.len() {
            return Err(Error::Domain(format!(
                "path system needs equally many starts and ends, got {} and {}",
                starts.len(),
                ends.len()
            )));
        }
        Ok(PathSystem { starts, ends })
    }

    /// Path model in which path j encodes the j-th row (from the bottom) of a
    /// plane partition of shape λ with entries ≤ n:
    /// S_j = (−λ_{t−j+1} − (j−1), j−1), E_i = (−i+1, n+i−1).
    pub fn plane_partition_rows(shape: &Partition, n: usize) -> PathSystem {
        let t = shape.len() as i64;
        let parts = shape.parts();
        let lam = |idx: i64| parts[idx as usize - 1] as i64;
        let starts = (1..=t).map(|j| (-lam(t - j + 1) - (j - 1), j - 1)).collect();
        let ends = (1..=t).map(|i| (-i + 1, n as i64 + i - 1)).collect();
        PathSystem { starts, ends }
    }

    /// Path model in which path i encodes row i of a reverse plane partition
    /// of shape λ with entries in {1..n+1}:
    /// S_j = (j, t−j), E_i = (n+i, λ_i+t−i).
    pub fn reverse_plane_partition_rows(shape: &Partition, n: usize) -> PathSystem {
        let t = shape.len() as i64;
        let parts = shape.parts();
        let starts = (1..=t).map(|j| (j, t - j)).collect();
        let ends = (1..=t)
            .map(|i| (n as i64 + i, parts[i as usize - 1] as i64 + t - i))
            .collect();
        PathSystem { starts, ends }
    }

    /// Number of monotone lattice paths S_j → E_i.
    fn path_count(&self, i: usize, j: usize) -> BigInt {
        let (sx, sy) = self.starts[j];
        let (ex, ey) = self.ends[i];
        let (dx, dy) = (ex - sx, ey - sy);
        if dx < 0 || dy < 0 {
            return BigInt::zero();
        }
        binomial(dx + dy, dx)
    }
}

/// Count tuples of pairwise vertex-disjoint monotone paths. The enumeration
/// result must equal the determinant of the path-count matrix; disagreement
/// is reported as an invariant violation.
pub fn lgv_count(sys: &PathSystem) -> Result<BigInt> {
    lgv_count_with_budget(sys, 200_000_000)
}

pub fn lgv_count_with_budget(sys: &PathSystem, budget: u64) -> Result<BigInt> {
    let t = sys.starts.len();
    let points = sys.starts.iter().chain(&sys.ends).copied();
    let mut occupied = Occupancy::new(points);
    let mut count = BigInt::zero();
    let mut steps = 0u64;

    fn place(
        sys: &PathSystem,
        j: usize,
        occupied: &mut Occupancy,
        count: &mut BigInt,
        steps: &mut u64,
        budget: u64,
    ) -> Result<()> {
        if j == sys.starts.len() {
            *count += 1;
            return Ok(());
        }
        let start = sys.starts[j];
        let end = sys.ends[j];
        if start.0 > end.0 || start.1 > end.1 || occupied.taken(start) {
            return Ok(());
        }
        walk(sys, j, start, end, occupied, count, steps, budget)
    }

    #[allow(clippy::too_many_arguments)]
    fn walk(
        sys: &PathSystem,
        j: usize,
        pos: (i64, i64),
        end: (i64, i64),
        occupied: &mut Occupancy,
        count: &mut BigInt,
        steps: &mut u64,
        budget: u64,
    ) -> Result<()> {
        *steps += 1;
        if *steps > budget {
            return Err(Error::Cap {
                what: "path tuple enumeration steps",
                got: *steps as usize,
                cap: budget as usize,
            });
        }
        occupied.set(pos, true);
        let result = (|| {
            if pos == end {
                return place(sys, j + 1, occupied, count, steps, budget);
            }
            let east = (pos.0 + 1, pos.1);
            if pos.0 < end.0 && !occupied.taken(east) {
                walk(sys, j, east, end, occupied, count, steps, budget)?;
            }
            let north = (pos.0, pos.1 + 1);
            if pos.1 < end.1 && !occupied.taken(north) {
                walk(sys, j, north, end, occupied, count, steps, budget)?;
            }
            Ok(())
        })();
        occupied.set(pos, false);
        result
    }

    place(sys, 0, &mut occupied, &mut count, &mut steps, budget)?;

    let matrix: Vec<Vec<BigInt>> = (0..t)
        .map(|i| (0..t).map(|j| sys.path_count(i, j)).collect())
        .collect();
    let det = int_matrix_det(&matrix)?;
    if det != count {
        return Err(Error::Invariant(format!(
            "path enumeration {count} disagrees with determinant {det}"
        )));
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ferrers::{ferrers_det, plane_partition_count};

    #[test]
    fn single_free_path() {
        let sys = PathSystem::new(vec![(0, 0)], vec![(2, 2)]).unwrap();
        assert_eq!(lgv_count(&sys).unwrap(), BigInt::from(6));
    }

    #[test]
    fn tableau_model_2x2() {
        let shape = Partition::new(&[2, 2]).unwrap();
        let sys = PathSystem::reverse_plane_partition_rows(&shape, 1);
        assert_eq!(lgv_count(&sys).unwrap(), BigInt::from(6));
    }

    #[test]
    fn partition_model_21() {
        let shape = Partition::new(&[2, 1]).unwrap();
        let sys = PathSystem::plane_partition_rows(&shape, 1);
        assert_eq!(lgv_count(&sys).unwrap(), BigInt::from(5));
    }

    #[test]
    fn both_models_match_determinant_and_oracle() {
        for parts in [vec![3usize, 2], vec![2, 2, 1], vec![3, 1, 1], vec![4]] {
            let shape = Partition::new(&parts).unwrap();
            for n in 0..=3usize {
                let want = ferrers_det(&shape, n).unwrap();
                let m1 = lgv_count(&PathSystem::plane_partition_rows(&shape, n)).unwrap();
                let m2 = lgv_count(&PathSystem::reverse_plane_partition_rows(&shape, n)).unwrap();
                assert_eq!(m1, want, "model 1, shape {shape} n={n}");
                assert_eq!(m2, want, "model 2, shape {shape} n={n}");
                assert_eq!(want, plane_partition_count(&shape, n).unwrap());
            }
        }
    }

    #[test]
    fn mismatched_lengths_rejected() {
        assert!(PathSystem::new(vec![(0, 0)], vec![]).is_err());
    }

    #[test]
    fn budget_refusal() {
        let sys = PathSystem::new(vec![(0, 0)], vec![(30, 30)]).unwrap();
        assert!(matches!(lgv_count_with_budget(&sys, 100), Err(Error::Cap { .. })));
    }
}
