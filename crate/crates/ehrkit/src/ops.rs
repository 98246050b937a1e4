//! The five poset compositions: dual, direct sum, ordinal sum, glue, direct
//! product and ordinal product. Outputs are rebuilt through the validating
//! constructor so covers stay irredundant and labels natural.

use crate::error::{Error, Result};
use crate::poset::Poset;

/// Reverse every relation.
pub fn dual(p: &Poset) -> Poset {
    let covers: Vec<_> = p.covers().iter().map(|&(a, b)| (b, a)).collect();
    Poset::from_covers(p.size(), &covers).expect("dual of a valid poset is valid")
}

/// Disjoint union; the second operand's elements are shifted past the first.
pub fn direct_sum(p: &Poset, q: &Poset) -> Poset {
    let mut covers: Vec<_> = p.covers().to_vec();
    covers.extend(q.covers().iter().map(|&(a, b)| (a + p.size(), b + p.size())));
    Poset::from_covers(p.size() + q.size(), &covers).expect("direct sum is valid")
}

/// Disjoint union plus every element of `p` below every element of `q`.
pub fn ordinal_sum(p: &Poset, q: &Poset) -> Poset {
    let np = p.size();
    let mut rels: Vec<_> = p.covers().to_vec();
    rels.extend(q.covers().iter().map(|&(a, b)| (a + np, b + np)));
    for a in 0..np {
        for b in 0..q.size() {
            rels.push((a, b + np));
        }
    }
    Poset::from_relations(np + q.size(), &rels).expect("ordinal sum is valid")
}

/// Identify the unique maximal element of `p` with the unique minimal
/// element of `q`; the result has |p| + |q| − 1 elements.
pub fn glue(p: &Poset, q: &Poset) -> Result<Poset> {
    let maxes = p.maximals();
    if maxes.len() != 1 {
        return Err(Error::Precondition(format!(
            "glue needs a unique maximal element on the left, found {}",
            maxes.len()
        )));
    }
    let mins = q.minimals();
    if mins.len() != 1 {
        return Err(Error::Precondition(format!(
            "glue needs a unique minimal element on the right, found {}",
            mins.len()
        )));
    }
    let (u, v) = (maxes[0], mins[0]);
    let np = p.size();
    // q's element w maps to u if w == v, else past p's labels (skipping v)
    let remap = |w: usize| -> usize {
        if w == v {
            u
        } else if w < v {
            np + w
        } else {
            np + w - 1
        }
    };
    let mut covers: Vec<_> = p.covers().to_vec();
    covers.extend(q.covers().iter().map(|&(a, b)| (remap(a), remap(b))));
    Poset::from_covers(np + q.size() - 1, &covers)
}

/// Componentwise order on pairs.
pub fn direct_product(p: &Poset, q: &Poset) -> Poset {
    let (np, nq) = (p.size(), q.size());
    let idx = |s: usize, t: usize| s * nq + t;
    let mut rels = Vec::new();
    for s in 0..np {
        for t in 0..nq {
            for s2 in 0..np {
                for t2 in 0..nq {
                    if (s, t) != (s2, t2) && p.leq(s, s2) && q.leq(t, t2) {
                        rels.push((idx(s, t), idx(s2, t2)));
                    }
                }
            }
        }
    }
    Poset::from_relations(np * nq, &rels).expect("direct product is valid")
}

/// Lexicographic-style composite: (s, t) ≼ (s′, t′) iff s = s′ and t ≼ t′,
/// or s ≺ s′.
pub fn ordinal_product(p: &Poset, q: &Poset) -> Poset {
    let (np, nq) = (p.size(), q.size());
    let idx = |s: usize, t: usize| s * nq + t;
    let mut rels = Vec::new();
    for s in 0..np {
        for t in 0..nq {
            for s2 in 0..np {
                for t2 in 0..nq {
                    if (s, t) == (s2, t2) {
                        continue;
                    }
                    if (s == s2 && q.leq(t, t2)) || p.less(s, s2) {
                        rels.push((idx(s, t), idx(s2, t2)));
                    }
                }
            }
        }
    }
    Poset::from_relations(np * nq, &rels).expect("ordinal product is valid")
}

/// k-fold ordinal sum of copies of `p` (k ≥ 1).
pub fn ordinal_power(p: &Poset, k: usize) -> Result<Poset> {
    if k == 0 {
        return Err(Error::Domain("ordinal power requires k ≥ 1".into()));
    }
    let mut acc = p.clone();
    for _ in 1..k {
        acc = ordinal_sum(&acc, p);
    }
    Ok(acc)
}

/// k-fold glue of copies of `p` (k ≥ 1).
pub fn glue_power(p: &Poset, k: usize) -> Result<Poset> {
    if k == 0 {
        return Err(Error::Domain("glue power requires k ≥ 1".into()));
    }
    let mut acc = p.clone();
    for _ in 1..k {
        acc = glue(&acc, p)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{antichain, chain, diamond, v_poset};
    use crate::iso::is_isomorphic;

    #[test]
    fn chains_compose() {
        let c = ordinal_sum(&chain(2), &chain(3));
        assert!(is_isomorphic(&c, &chain(5), 10).unwrap());
        let g = glue(&chain(2), &chain(2)).unwrap();
        assert!(is_isomorphic(&g, &chain(3), 10).unwrap());
    }

    #[test]
    fn direct_sum_of_singletons_is_antichain() {
        let s = direct_sum(&chain(1), &chain(1));
        assert_eq!(s, antichain(2));
    }

    #[test]
    fn product_of_two_chains_is_diamond() {
        let p = direct_product(&chain(2), &chain(2));
        assert!(is_isomorphic(&p, &diamond(), 10).unwrap());
    }

    #[test]
    fn ordinal_product_with_chain_is_power() {
        let p = ordinal_product(&chain(3), &v_poset());
        let q = ordinal_power(&v_poset(), 3).unwrap();
        assert!(is_isomorphic(&p, &q, 10).unwrap());
        // P ⊗ I_1 ≅ P
        let r = ordinal_product(&v_poset(), &chain(1));
        assert!(is_isomorphic(&r, &v_poset(), 10).unwrap());
    }

    #[test]
    fn v_otimes_chain_decomposes() {
        // V ⊗ I_k = (I_k + I_k) ⊕ I_k
        for k in 1..4 {
            let lhs = ordinal_product(&v_poset(), &chain(k));
            let rhs = ordinal_sum(&direct_sum(&chain(k), &chain(k)), &chain(k));
            assert!(is_isomorphic(&lhs, &rhs, 10).unwrap());
        }
    }

    #[test]
    fn glue_preconditions() {
        assert!(glue(&antichain(2), &chain(2)).is_err());
        assert!(glue(&chain(2), &v_poset()).is_err());
        // dual(V) has the unique max on the left, V the unique min? no —
        // V has two minimals, so only dual(V) ⋄ V works
        let g = glue(&v_poset(), &dual(&v_poset())).unwrap();
        assert_eq!(g.size(), 5);
    }

    #[test]
    fn dual_is_involution() {
        let p = diamond();
        assert_eq!(dual(&dual(&p)), p);
        let v = v_poset();
        assert_eq!(dual(&v).maximals().len(), 2);
    }

    #[test]
    fn sizes() {
        let (p, q) = (v_poset(), diamond());
        assert_eq!(direct_sum(&p, &q).size(), 7);
        assert_eq!(ordinal_sum(&p, &q).size(), 7);
        assert_eq!(direct_product(&p, &q).size(), 12);
        assert_eq!(ordinal_product(&p, &q).size(), 12);
    }

    #[test]
    fn outputs_validate() {
        let (p, q) = (v_poset(), diamond());
        for r in [
            dual(&p),
            direct_sum(&p, &q),
            ordinal_sum(&p, &q),
            direct_product(&p, &q),
            ordinal_product(&p, &q),
            glue(&q, &q).unwrap(),
        ] {
            r.validate().unwrap();
        }
    }
}
