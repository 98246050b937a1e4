//! Order-isomorphism testing for small posets by backtracking over
//! signature-compatible element pairs.

use crate::error::{Error, Result};
use crate::poset::Poset;

/// Per-element invariant: anything that must match under isomorphism.
fn signature(p: &Poset, v: usize) -> (usize, usize, usize, usize) {
    let below = (0..p.size()).filter(|&u| p.less(u, v)).count();
    let above = (0..p.size()).filter(|&u| p.less(v, u)).count();
    let lower = p.lower_covers(v).count();
    let upper = p.upper_covers(v).count();
    (below, above, lower, upper)
}

/// True iff an order-isomorphism exists. Sizes above `cap` are refused.
pub fn is_isomorphic(p: &Poset, q: &Poset, cap: usize) -> Result<bool> {
    if p.size() != q.size() {
        return Ok(false);
    }
    let n = p.size();
    if n > cap {
        return Err(Error::Cap { what: "isomorphism poset size", got: n, cap });
    }
    if p.covers().len() != q.covers().len() {
        return Ok(false);
    }
    let sig_p: Vec<_> = (0..n).map(|v| signature(p, v)).collect();
    let mut sig_q_sorted: Vec<_> = (0..n).map(|v| signature(q, v)).collect();
    let mut sig_p_sorted = sig_p.clone();
    sig_p_sorted.sort_unstable();
    sig_q_sorted.sort_unstable();
    if sig_p_sorted != sig_q_sorted {
        return Ok(false);
    }
    let sig_q: Vec<_> = (0..n).map(|v| signature(q, v)).collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(assign(p, q, &sig_p, &sig_q, 0, &mut map, &mut used))
}

fn assign(
    p: &Poset,
    q: &Poset,
    sig_p: &[(usize, usize, usize, usize)],
    sig_q: &[(usize, usize, usize, usize)],
    v: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let n = p.size();
    if v == n {
        return true;
    }
    for w in 0..n {
        if used[w] || sig_p[v] != sig_q[w] {
            continue;
        }
        let consistent = (0..v).all(|u| {
            p.less(u, v) == q.less(map[u], w) && p.less(v, u) == q.less(w, map[u])
        });
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if assign(p, q, sig_p, sig_q, v + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}
