//! Maximum matchings for forests and unicyclic graphs, and the saturation
//! test used by the unicyclic inertia decomposition.
//!
//! Weights never affect the matching number, so everything here works on
//! structure alone. The internal worker operates on a vertex mask plus an
//! optional banned edge; vertex-deleted and edge-deleted subproblems never
//! need relabeling that way.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{GraphClass, WeightedGraph};
use crate::scalar::Scalar;

/// A maximum matching together with a witness edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingResult {
    pub size: usize,
    /// Pairwise non-adjacent edges, sorted.
    pub edges: Vec<(usize, usize)>,
}

/// Maximum matching of the subgraph induced by `alive`, minus `banned`.
///
/// Repeatedly matches a leaf to its unique neighbor and deletes both; any
/// residual core must consist of disjoint cycles (true whenever the input
/// has at most one cycle), which contribute alternate edges.
pub(crate) fn masked_max_matching<S: Scalar>(
    g: &WeightedGraph<S>,
    alive: &[bool],
    banned: Option<usize>,
) -> Result<Vec<usize>> {
    let n = g.order();
    debug_assert_eq!(alive.len(), n + 1);
    let allowed =
        |i: usize, e: &crate::graph::Edge<S>| Some(i) != banned && alive[e.u] && alive[e.v];
    let mut deg = vec![0usize; n + 1];
    for (i, e) in g.edges().iter().enumerate() {
        if allowed(i, e) {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
    }
    let mut dead: Vec<bool> = (0..=n).map(|v| v == 0 || !alive[v]).collect();
    let mut queue: VecDeque<usize> = (1..=n).filter(|&v| !dead[v] && deg[v] == 1).collect();
    let mut matched = Vec::new();
    while let Some(v) = queue.pop_front() {
        if dead[v] || deg[v] != 1 {
            continue;
        }
        let &ei = g
            .incident(v)
            .iter()
            .find(|&&i| allowed(i, &g.edges()[i]) && !dead[g.edges()[i].other(v)])
            .expect("leaf has a live neighbor");
        let u = g.edges()[ei].other(v);
        matched.push(ei);
        dead[v] = true;
        dead[u] = true;
        for &i in g.incident(u) {
            let e = &g.edges()[i];
            if !allowed(i, e) {
                continue;
            }
            let x = e.other(u);
            if !dead[x] {
                deg[x] -= 1;
                if deg[x] == 1 {
                    queue.push_back(x);
                }
            }
        }
    }
    // Residual core: every remaining vertex with positive degree must lie on
    // a cycle of degree-2 vertices.
    let mut visited = vec![false; n + 1];
    for start in 1..=n {
        if dead[start] || deg[start] == 0 || visited[start] {
            continue;
        }
        if deg[start] != 2 {
            return Err(Error::UnsupportedClass);
        }
        // walk the cycle
        let mut cyc = vec![start];
        visited[start] = true;
        let mut prev = 0;
        let mut cur = start;
        loop {
            let mut next = None;
            for &i in g.incident(cur) {
                let e = &g.edges()[i];
                if !allowed(i, e) {
                    continue;
                }
                let x = e.other(cur);
                if !dead[x] && x != prev {
                    next = Some(x);
                    break;
                }
            }
            let next = next.ok_or(Error::UnsupportedClass)?;
            if next == start {
                break;
            }
            if visited[next] || deg[next] != 2 {
                return Err(Error::UnsupportedClass);
            }
            visited[next] = true;
            cyc.push(next);
            prev = cur;
            cur = next;
        }
        let mut i = 0;
        while i + 1 < cyc.len() {
            matched.push(g.edge_index(cyc[i], cyc[i + 1]).expect("cycle edge"));
            i += 2;
        }
    }
    Ok(matched)
}

pub(crate) fn all_alive(n: usize) -> Vec<bool> {
    let mut v = vec![true; n + 1];
    v[0] = false;
    v
}

/// Matching number of the subgraph induced by the vertex set `verts`.
pub(crate) fn matching_size_of_subset<S: Scalar>(g: &WeightedGraph<S>, verts: &[usize]) -> usize {
    let mut alive = vec![false; g.order() + 1];
    for &v in verts {
        alive[v] = true;
    }
    masked_max_matching(g, &alive, None)
        .expect("subset of a forest/unicyclic graph")
        .len()
}

fn witness<S: Scalar>(g: &WeightedGraph<S>, idxs: &[usize]) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = idxs
        .iter()
        .map(|&i| (g.edges()[i].u, g.edges()[i].v))
        .collect();
    edges.sort_unstable();
    edges
}

/// Maximum matching of a forest via leaf-greedy elimination.
pub fn max_matching_forest<S: Scalar>(g: &WeightedGraph<S>) -> Result<MatchingResult> {
    if !g.classify().is_forest() {
        return Err(Error::NotAForest);
    }
    let idxs = masked_max_matching(g, &all_alive(g.order()), None)?;
    Ok(MatchingResult {
        size: idxs.len(),
        edges: witness(g, &idxs),
    })
}

/// Maximum matching of a unicyclic graph by a single cycle-edge case split:
/// `m(G) = max(m(G - e), 1 + m(G - u - v))` for a fixed cycle edge `e = uv`,
/// where both subproblems are forests.
pub fn max_matching_unicyclic<S: Scalar>(g: &WeightedGraph<S>) -> Result<MatchingResult> {
    let cycle = match g.classify() {
        GraphClass::Unicyclic { cycle } => cycle,
        _ => return Err(Error::NotUnicyclic),
    };
    let k = cycle.len();
    let (u, v) = (0..k)
        .map(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % k]);
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .min()
        .expect("cycle has edges");
    let e = g.edge_index(u, v).expect("cycle edge exists");

    let without_edge = masked_max_matching(g, &all_alive(g.order()), Some(e))?;
    let mut alive = all_alive(g.order());
    alive[u] = false;
    alive[v] = false;
    let mut with_edge = masked_max_matching(g, &alive, None)?;
    with_edge.push(e);

    let idxs = if without_edge.len() >= with_edge.len() {
        without_edge
    } else {
        with_edge
    };
    Ok(MatchingResult {
        size: idxs.len(),
        edges: witness(g, &idxs),
    })
}

/// Matching number of an arbitrary forest or unicyclic graph.
pub fn matching_number<S: Scalar>(g: &WeightedGraph<S>) -> Result<usize> {
    match g.classify() {
        GraphClass::Forest => Ok(max_matching_forest(g)?.size),
        GraphClass::Unicyclic { .. } => Ok(max_matching_unicyclic(g)?.size),
        GraphClass::Other => Err(Error::UnsupportedClass),
    }
}

/// True iff every maximum matching covers `v`, tested via the counting
/// identity `m(G - v) = m(G) - 1`.
pub fn is_saturated<S: Scalar>(g: &WeightedGraph<S>, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    let whole = masked_max_matching(g, &all_alive(g.order()), None)?.len();
    let mut alive = all_alive(g.order());
    alive[v] = false;
    let without = masked_max_matching(g, &alive, None)?.len();
    Ok(without + 1 == whole)
}
