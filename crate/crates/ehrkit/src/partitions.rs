//! Integer partitions with the cell accessors (hook lengths, contents) used
//! by the tableau and determinant formulas.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: &[usize]) -> Result<Partition> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::Domain(format!(
                    "partition parts must be weakly decreasing, got {parts:?}"
                )));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Domain("partition parts must be positive".into()));
        }
        Ok(Partition { parts: parts.to_vec() })
    }

    /// Rectangle (k, k, ..., k) with t rows.
    pub fn rectangle(t: usize, k: usize) -> Result<Partition> {
        Partition::new(&vec![k; t])
    }

    /// Staircase (k, k−1, ..., 1).
    pub fn staircase(k: usize) -> Result<Partition> {
        Partition::new(&(1..=k).rev().collect::<Vec<_>>())
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts ℓ(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total number of cells |λ|.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts: Vec<usize> = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Cells (i, j), 1-based, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }

    /// Hook length h(u) = λ_i + λ′_j − i − j + 1 for the cell u = (i, j).
    pub fn hook(&self, i: usize, j: usize) -> usize {
        let conj = self.conjugate();
        self.parts[i - 1] + conj.parts[j - 1] - i - j + 1
    }

    /// Content c(u) = j − i.
    pub fn content(&self, i: usize, j: usize) -> i64 {
        j as i64 - i as i64
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of every m in 1..=max_size, for test sweeps.
pub fn partitions_up_to(max_size: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        for next in (1..=max_part.min(remaining)).rev() {
            current.push(next);
            rec(remaining - next, next, current, out);
            current.pop();
        }
    }
    for m in 1..=max_size {
        rec(m, m, &mut current, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Partition::new(&[3, 1, 2]).is_err());
        assert!(Partition::new(&[2, 0]).is_err());
        assert!(Partition::new(&[4, 3, 3, 2, 1]).is_ok());
    }

    #[test]
    fn conjugate_and_hooks() {
        let l = Partition::new(&[2, 1]).unwrap();
        assert_eq!(l.conjugate().parts(), &[2, 1]);
        assert_eq!(l.hook(1, 1), 3);
        assert_eq!(l.hook(1, 2), 1);
        assert_eq!(l.hook(2, 1), 1);
        assert_eq!(l.content(1, 2), 1);
        assert_eq!(l.content(2, 1), -1);
    }

    #[test]
    fn partition_counts() {
        // p(1..8) = 1,2,3,5,7,11,15,22 summing to 66
        assert_eq!(partitions_up_to(8).len(), 66);
    }
}
