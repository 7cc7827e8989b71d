//! Canonical forms and exhaustive enumeration of small graphs.
//!
//! The canonical form of a graph is the edge set of a distinguished
//! relabeling: the one maximizing the adjacency bit string read column by
//! column (new vertex against all earlier ones). Equal canonical edge sets
//! are equivalent to isomorphism, canonicalization is idempotent, and the
//! induced ordering is deterministic, which is all the census machinery
//! needs. The search walks labelings level by level, keeping every
//! assignment that still ties for the maximum, and prunes interchangeable
//! branches (twin candidates, future-equivalent partial assignments).
//!
//! Enumeration grows trees by leaf attachment and turns each tree plus a
//! chord into a unicyclic graph, deduplicating canonically.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::scalar::Scalar;

/// Isomorphism-invariant encoding of a small unweighted graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl CanonicalGraph {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Unit-weight graph with the canonical labeling.
    pub fn to_graph<S: Scalar>(&self) -> WeightedGraph<S> {
        WeightedGraph::unweighted(self.n, self.edges.iter().copied())
            .expect("canonical edges are valid")
    }

    /// Compact display: `1-2,1-3,2-3`.
    pub fn edge_string(&self) -> String {
        self.edges
            .iter()
            .map(|&(u, v)| format!("{u}-{v}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

const MAX_CANON_ORDER: usize = 16;

/// Canonical form of the underlying (unweighted) graph.
pub fn canonical_form<S: Scalar>(g: &WeightedGraph<S>) -> CanonicalGraph {
    let n = g.order();
    assert!(n <= MAX_CANON_ORDER, "canonical form is for small graphs");
    let adj: Vec<u16> = (1..=n)
        .map(|v| g.neighbors(v).fold(0u16, |m, u| m | (1 << (u - 1))))
        .collect();
    canonical_from_masks(n, &adj)
}

fn canonical_from_masks(n: usize, adj: &[u16]) -> CanonicalGraph {
    if n == 0 {
        return CanonicalGraph {
            n: 0,
            edges: Vec::new(),
        };
    }
    let bit = |mask: u16, x: usize| (mask >> x) & 1;
    // frontier of partial labelings, all tied for the maximal column string
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for _level in 0..n {
        let mut best: Option<u32> = None;
        let mut next: Vec<Vec<usize>> = Vec::new();
        for partial in &frontier {
            let used: u16 = partial.iter().fold(0, |m, &x| m | (1 << x));
            // candidates with an interchangeable earlier sibling are skipped:
            // swapping two vertices with equal adjacency outside the pair is
            // an automorphism, so one branch represents both
            let mut reps: Vec<usize> = Vec::new();
            for x in 0..n {
                if used & (1 << x) != 0 {
                    continue;
                }
                let twin_of_rep = reps.iter().any(|&r| {
                    let outside = !((1u16 << r) | (1u16 << x));
                    adj[r] & outside == adj[x] & outside
                });
                if !twin_of_rep {
                    reps.push(x);
                }
            }
            for x in reps {
                let mut col = 0u32;
                for &p in partial {
                    col = (col << 1) | u32::from(bit(adj[p], x));
                }
                let better = match best {
                    None => true,
                    Some(b) => col > b,
                };
                if better {
                    best = Some(col);
                    next.clear();
                }
                if Some(col) == best {
                    let mut ext = partial.clone();
                    ext.push(x);
                    next.push(ext);
                }
            }
        }
        // merge partial labelings with identical futures: every unused
        // vertex sees the same adjacency pattern along the assigned sequence
        let mut seen = HashSet::new();
        frontier = next
            .into_iter()
            .filter(|partial| {
                let used: u16 = partial.iter().fold(0, |m, &x| m | (1 << x));
                let mut key: Vec<(usize, u32)> = Vec::new();
                for y in 0..n {
                    if used & (1 << y) != 0 {
                        continue;
                    }
                    let mut pat = 0u32;
                    for &p in partial {
                        pat = (pat << 1) | u32::from(bit(adj[p], y));
                    }
                    key.push((y, pat));
                }
                seen.insert(key)
            })
            .collect();
    }
    let perm = &frontier[0];
    let mut edges = Vec::new();
    for s in 0..n {
        for t in s + 1..n {
            if bit(adj[perm[s]], perm[t]) == 1 {
                edges.push((s + 1, t + 1));
            }
        }
    }
    edges.sort_unstable();
    CanonicalGraph { n, edges }
}

/// All unlabeled trees of the given order, grown by leaf attachment.
pub fn enumerate_trees(n: usize) -> Vec<CanonicalGraph> {
    assert!(n <= 12, "tree enumeration is for small orders");
    if n == 0 {
        return Vec::new();
    }
    let mut current: BTreeSet<CanonicalGraph> = BTreeSet::new();
    current.insert(CanonicalGraph {
        n: 1,
        edges: Vec::new(),
    });
    for size in 2..=n {
        let mut grown = BTreeSet::new();
        for tree in &current {
            for v in 1..size {
                let mut edges: Vec<(usize, usize)> = tree.edges.clone();
                edges.push((v, size));
                let g = WeightedGraph::<i32>::unweighted(size, edges).expect("tree extension");
                grown.insert(canonical_form(&g));
            }
        }
        current = grown;
    }
    current.into_iter().collect()
}

/// One representative per isomorphism class of connected unicyclic graphs
/// of the given order, in canonical order. Supports orders up to 10.
pub fn enumerate_unicyclic(n: usize) -> Result<Vec<CanonicalGraph>> {
    if n > 10 {
        return Err(Error::OrderTooLarge(n));
    }
    if n < 3 {
        return Ok(Vec::new());
    }
    let mut out = BTreeSet::new();
    for tree in enumerate_trees(n) {
        let g = tree.to_graph::<i32>();
        for u in 1..=n {
            for v in u + 1..=n {
                if g.has_edge(u, v) {
                    continue;
                }
                let mut edges = tree.edges.clone();
                edges.push((u, v));
                let ug = WeightedGraph::<i32>::unweighted(n, edges).expect("chord added");
                out.insert(canonical_form(&ug));
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// All unlabeled forests (possibly disconnected, including the empty graph's
/// isolated vertices) on exactly `n` vertices.
pub fn enumerate_forests(n: usize) -> Vec<CanonicalGraph> {
    assert!(n <= 10, "forest enumeration is for small orders");
    let trees_by_size: Vec<Vec<CanonicalGraph>> = (0..=n)
        .map(|s| {
            if s == 0 {
                Vec::new()
            } else {
                enumerate_trees(s)
            }
        })
        .collect();
    let mut out = BTreeSet::new();
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    // components chosen with non-increasing (size, index) to enumerate each
    // multiset exactly once
    fn rec(
        left: usize,
        cap: (usize, usize),
        chosen: &mut Vec<(usize, usize)>,
        trees: &[Vec<CanonicalGraph>],
        out: &mut BTreeSet<CanonicalGraph>,
    ) {
        if left == 0 {
            let mut edges = Vec::new();
            let mut offset = 0;
            let mut total = 0;
            for &(size, idx) in chosen.iter() {
                edges.extend(
                    trees[size][idx]
                        .edges
                        .iter()
                        .map(|&(u, v)| (u + offset, v + offset)),
                );
                offset += size;
                total += size;
            }
            let g = WeightedGraph::<i32>::unweighted(total, edges).expect("forest union");
            out.insert(canonical_form(&g));
            return;
        }
        for size in (1..=left.min(cap.0)).rev() {
            let idx_cap = if size == cap.0 {
                cap.1
            } else {
                trees[size].len() - 1
            };
            for idx in (0..=idx_cap).rev() {
                chosen.push((size, idx));
                rec(left - size, (size, idx), chosen, trees, out);
                chosen.pop();
            }
        }
    }
    if n > 0 {
        rec(
            n,
            (n, trees_by_size[n].len() - 1),
            &mut chosen,
            &trees_by_size,
            &mut out,
        );
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_family, Family};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn tree_counts() {
        let expected = [0usize, 1, 1, 1, 2, 3, 6, 11, 23];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(enumerate_trees(n).len(), want, "trees of order {n}");
        }
    }

    #[test]
    fn unicyclic_counts() {
        assert_eq!(enumerate_unicyclic(3).unwrap().len(), 1);
        assert_eq!(enumerate_unicyclic(4).unwrap().len(), 2);
        assert_eq!(enumerate_unicyclic(5).unwrap().len(), 5);
        assert_eq!(enumerate_unicyclic(6).unwrap().len(), 13);
        assert_eq!(enumerate_unicyclic(7).unwrap().len(), 33);
        assert_eq!(enumerate_unicyclic(2).unwrap(), Vec::new());
        assert_eq!(
            enumerate_unicyclic(11).err(),
            Some(Error::OrderTooLarge(11))
        );
    }

    #[test]
    fn forest_counts() {
        let expected = [1usize, 1, 2, 3, 6, 10, 20, 37];
        for (i, &want) in expected.iter().enumerate().skip(1) {
            assert_eq!(enumerate_forests(i).len(), want, "forests of order {i}");
        }
    }

    #[test]
    fn canonical_is_idempotent_and_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [5usize, 6, 7] {
            for g in enumerate_unicyclic(n).unwrap() {
                let canon = canonical_form(&g.to_graph::<i32>());
                assert_eq!(canon, g, "idempotent on canonical representatives");
                // random relabelings map to the same canonical form
                for _ in 0..5 {
                    let mut perm: Vec<usize> = (1..=n).collect();
                    perm.shuffle(&mut rng);
                    let relabeled = WeightedGraph::<i32>::unweighted(
                        n,
                        g.edges().iter().map(|&(u, v)| (perm[u - 1], perm[v - 1])),
                    )
                    .unwrap();
                    assert_eq!(canonical_form(&relabeled), g);
                }
            }
        }
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let p4 = make_family::<i32>(Family::Path { n: 4 }).unwrap();
        let star = make_family::<i32>(Family::Star { leaves: 3 }).unwrap();
        assert_ne!(canonical_form(&p4), canonical_form(&star));
    }

    /// Brute-force labeled enumeration oracle: all n-edge subsets of the
    /// complete graph, connected ones only, deduplicated canonically.
    fn brute_force_unicyclic(n: usize) -> BTreeSet<CanonicalGraph> {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        let mut out = BTreeSet::new();
        let m = pairs.len();
        // iterate subsets of size n via bitmask
        for mask in 0u32..(1 << m) {
            if mask.count_ones() as usize != n {
                continue;
            }
            let edges: Vec<(usize, usize)> = (0..m)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| pairs[i])
                .collect();
            let g = WeightedGraph::<i32>::unweighted(n, edges).unwrap();
            if g.is_connected() {
                out.insert(canonical_form(&g));
            }
        }
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 3..=5 {
            let fast: BTreeSet<CanonicalGraph> =
                enumerate_unicyclic(n).unwrap().into_iter().collect();
            assert_eq!(fast, brute_force_unicyclic(n));
        }
    }
}
