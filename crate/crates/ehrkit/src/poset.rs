//! Finite posets given by cover relations with a cached strict reachability
//! closure.
//!
//! Every constructor canonicalizes to a *natural labeling*: elements are
//! renumbered topologically so each cover (a, b) has a < b. The descent
//! statistics of linear extensions presume this, so it is enforced once here
//! rather than at every use site.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    size: usize,
    /// Irredundant cover pairs (lower, upper), sorted; lower < upper always.
    covers: Vec<(usize, usize)>,
    /// Strict reachability: closure[a * size + b] iff a ≺ b.
    closure: Vec<bool>,
}

impl Poset {
    /// Build from explicit cover pairs. Out-of-range elements are a domain
    /// error, cycles an invalid-poset error. Transitively redundant covers
    /// are stripped and elements renumbered to a natural labeling.
    pub fn from_covers(size: usize, covers: &[(usize, usize)]) -> Result<Poset> {
        Poset::from_relations(size, covers)
    }

    /// Build from an arbitrary set of strict relations a ≺ b: takes the
    /// transitive closure, validates acyclicity, reduces to covers and
    /// renumbers naturally.
    pub fn from_relations(size: usize, relations: &[(usize, usize)]) -> Result<Poset> {
        for &(a, b) in relations {
            if a >= size || b >= size {
                return Err(Error::Domain(format!(
                    "relation ({a}, {b}) references an element outside 0..{size}"
                )));
            }
            if a == b {
                return Err(Error::InvalidPoset(format!("reflexive relation ({a}, {a})")));
            }
        }
        let mut closure = vec![false; size * size];
        for &(a, b) in relations {
            closure[a * size + b] = true;
        }
        // Warshall transitive closure
        for k in 0..size {
            for i in 0..size {
                if closure[i * size + k] {
                    for j in 0..size {
                        if closure[k * size + j] {
                            closure[i * size + j] = true;
                        }
                    }
                }
            }
        }
        for v in 0..size {
            if closure[v * size + v] {
                return Err(Error::InvalidPoset(format!("cycle through element {v}")));
            }
        }
        let poset = Poset { size, covers: reduce(&closure, size), closure };
        Ok(poset.renumber_naturally())
    }

    /// Relabel elements by a deterministic topological order (smallest
    /// current label first among available elements).
    fn renumber_naturally(&self) -> Poset {
        let p = self.size;
        let mut indeg = vec![0usize; p];
        for &(_, b) in &self.covers {
            indeg[b] += 1;
        }
        let mut new_label = vec![usize::MAX; p];
        let mut placed = 0;
        let mut done = vec![false; p];
        while placed < p {
            let v = (0..p)
                .find(|&v| !done[v] && indeg[v] == 0)
                .expect("acyclic digraph always has a source");
            new_label[v] = placed;
            placed += 1;
            done[v] = true;
            for &(a, b) in &self.covers {
                if a == v {
                    indeg[b] -= 1;
                }
            }
        }
        let mut covers: Vec<(usize, usize)> = self
            .covers
            .iter()
            .map(|&(a, b)| (new_label[a], new_label[b]))
            .collect();
        covers.sort_unstable();
        let mut closure = vec![false; p * p];
        for a in 0..p {
            for b in 0..p {
                if self.closure[a * p + b] {
                    closure[new_label[a] * p + new_label[b]] = true;
                }
            }
        }
        Poset { size: p, covers, closure }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Strict order: a ≺ b.
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.closure[a * self.size + b]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.less(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        a == b || self.less(a, b) || self.less(b, a)
    }

    pub fn lower_covers(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.covers.iter().filter(move |&&(_, b)| b == v).map(|&(a, _)| a)
    }

    pub fn upper_covers(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.covers.iter().filter(move |&&(a, _)| a == v).map(|&(_, b)| b)
    }

    pub fn minimals(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&v| (0..self.size).all(|u| !self.less(u, v)))
            .collect()
    }

    pub fn maximals(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&v| (0..self.size).all(|u| !self.less(v, u)))
            .collect()
    }

    /// Canonical text dump: `p=<size>` then one sorted `a<b` cover per line.
    pub fn dump(&self) -> String {
        let mut out = format!("p={}", self.size);
        for &(a, b) in &self.covers {
            out.push('\n');
            out.push_str(&format!("{a}<{b}"));
        }
        out
    }

    /// Check every structural invariant by direct recomputation. Used by
    /// property tests on the outputs of poset operations.
    pub fn validate(&self) -> Result<()> {
        let p = self.size;
        for v in 0..p {
            if self.closure[v * p + v] {
                return Err(Error::Invariant(format!("closure reflexive at {v}")));
            }
        }
        for a in 0..p {
            for b in 0..p {
                if !self.closure[a * p + b] {
                    continue;
                }
                for c in 0..p {
                    if self.closure[b * p + c] && !self.closure[a * p + c] {
                        return Err(Error::Invariant(format!(
                            "closure not transitive: {a}≺{b}≺{c}"
                        )));
                    }
                }
            }
        }
        // closure must be exactly the reachability of the covers
        let rebuilt = Poset::from_relations(p, &self.covers)?;
        if rebuilt.closure != self.closure {
            return Err(Error::Invariant("closure differs from cover reachability".into()));
        }
        // covers must be irredundant and naturally labeled
        for &(a, b) in &self.covers {
            if a >= b {
                return Err(Error::Invariant(format!("cover ({a}, {b}) not naturally labeled")));
            }
            for c in 0..p {
                if self.less(a, c) && self.less(c, b) {
                    return Err(Error::Invariant(format!("redundant cover ({a}, {b}) via {c}")));
                }
            }
        }
        Ok(())
    }
}

/// Transitive reduction: (a, b) is a cover iff a ≺ b with no c strictly
/// between.
fn reduce(closure: &[bool], size: usize) -> Vec<(usize, usize)> {
    let mut covers = Vec::new();
    for a in 0..size {
        for b in 0..size {
            if !closure[a * size + b] {
                continue;
            }
            let redundant =
                (0..size).any(|c| closure[a * size + c] && closure[c * size + b]);
            if !redundant {
                covers.push((a, b));
            }
        }
    }
    covers
}
