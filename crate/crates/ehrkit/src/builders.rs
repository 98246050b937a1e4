//! Named poset families.

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::poset::Poset;

/// k-element chain.
pub fn chain(k: usize) -> Poset {
    let covers: Vec<_> = (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Poset::from_covers(k, &covers).expect("chain covers are valid")
}

/// k-element antichain.
pub fn antichain(k: usize) -> Poset {
    Poset::from_covers(k, &[]).expect("antichain covers are valid")
}

/// Boolean lattice of subsets of {1..m}, ordered by inclusion. 2^m elements;
/// m is capped at 5 to keep downstream enumerations sane.
pub fn boolean(m: usize) -> Result<Poset> {
    if m > 5 {
        return Err(Error::Domain(format!("boolean({m}) not supported, m must be ≤ 5")));
    }
    let size = 1usize << m;
    let mut covers = Vec::new();
    for s in 0..size {
        for bit in 0..m {
            if s & (1 << bit) == 0 {
                covers.push((s, s | (1 << bit)));
            }
        }
    }
    Poset::from_covers(size, &covers)
}

/// Three elements: two incomparable minimals below one top.
pub fn v_poset() -> Poset {
    Poset::from_covers(3, &[(0, 2), (1, 2)]).expect("v covers are valid")
}

/// Four elements: bottom, two incomparable middles, top. Isomorphic to the
/// direct product of two 2-chains.
pub fn diamond() -> Poset {
    Poset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).expect("diamond covers are valid")
}

/// Ferrers poset of shape λ: one element per cell, oriented so the unique
/// maximal element is cell (1,1) and each cell sits above its right and
/// lower neighbors. Order-preserving maps to {0..n} are then exactly the
/// plane partitions of shape λ with entries ≤ n.
pub fn ferrers(shape: &Partition) -> Poset {
    let parts = shape.parts();
    // row-major cell ids
    let mut id = vec![vec![0usize; 0]; parts.len()];
    let mut next = 0;
    for (i, &len) in parts.iter().enumerate() {
        id[i] = (0..len)
            .map(|_| {
                let v = next;
                next += 1;
                v
            })
            .collect();
    }
    let mut covers = Vec::new();
    for (i, &len) in parts.iter().enumerate() {
        for j in 0..len {
            if j + 1 < len {
                covers.push((id[i][j + 1], id[i][j])); // right neighbor below
            }
            if i + 1 < parts.len() && j < parts[i + 1] {
                covers.push((id[i + 1][j], id[i][j])); // lower neighbor below
            }
        }
    }
    Poset::from_covers(next, &covers).expect("ferrers covers are valid")
}

/// Incomplete ladder on 2k elements: a chain a_k ⋖ … ⋖ a_1 with a pendant
/// b_i ⋖ a_i under every chain element (the b's are mutually incomparable).
///
/// This cover set is pinned down by the counting recursion it must satisfy:
/// conditioning on the value i of the unique maximal element a_1, the pendant
/// b_1 contributes an independent factor i + 1 and the rest is the same poset
/// one rung shorter. That forces the b-rail of the full ladder to be absent.
pub fn bar_kk(k: usize) -> Result<Poset> {
    if k == 0 {
        return Err(Error::Domain("bar_kk requires k ≥ 1".into()));
    }
    // a_i = i − 1, b_i = k + i − 1
    let mut covers = Vec::new();
    for i in 0..k {
        if i + 1 < k {
            covers.push((i + 1, i)); // a_{i+1} ⋖ a_i
        }
        covers.push((k + i, i)); // b_i ⋖ a_i
    }
    Poset::from_covers(2 * k, &covers)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_shapes() {
        assert_eq!(chain(0).size(), 0);
        assert_eq!(chain(3).covers(), &[(0, 1), (1, 2)]);
        assert_eq!(chain(1).covers(), &[]);
    }

    #[test]
    fn boolean_three() {
        let b3 = boolean(3).unwrap();
        assert_eq!(b3.size(), 8);
        assert_eq!(b3.covers().len(), 12);
        assert_eq!(b3.minimals().len(), 1);
        assert_eq!(b3.maximals().len(), 1);
        b3.validate().unwrap();
        assert!(boolean(6).is_err());
    }

    #[test]
    fn ferrers_22_is_diamond_shaped() {
        let p = ferrers(&Partition::new(&[2, 2]).unwrap());
        assert_eq!(p.size(), 4);
        assert_eq!(p.maximals().len(), 1);
        assert_eq!(p.minimals().len(), 1);
        p.validate().unwrap();
    }

    #[test]
    fn ferrers_staircase_extremes() {
        // λ = (4,3,3,2,1): unique max, minimal elements at the row ends
        let p = ferrers(&Partition::new(&[4, 3, 3, 2, 1]).unwrap());
        assert_eq!(p.size(), 13);
        assert_eq!(p.maximals().len(), 1);
        assert_eq!(p.minimals().len(), 4);
        p.validate().unwrap();
    }

    #[test]
    fn bar_kk_shape() {
        let p = bar_kk(3).unwrap();
        assert_eq!(p.size(), 6);
        assert_eq!(p.maximals().len(), 1);
        // the minimal elements are exactly the k pendants
        assert_eq!(p.minimals().len(), 3);
        p.validate().unwrap();
    }

    #[test]
    fn all_builders_validate() {
        for p in [chain(5), antichain(4), v_poset(), diamond()] {
            p.validate().unwrap();
        }
    }
}
