//! Weighted graph representation and structural queries.
//!
//! Vertices are labeled `1..=n`. Graphs are immutable after construction;
//! every reduction returns a new graph, so values can be shared freely
//! across threads.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Undirected edge with `u < v` and a nonzero weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge<S> {
    pub u: usize,
    pub v: usize,
    pub weight: S,
}

impl<S> Edge<S> {
    /// The endpoint that is not `x`. Panics if `x` is not an endpoint.
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            debug_assert_eq!(x, self.v);
            self.u
        }
    }
}

/// Simple undirected graph with exact nonzero edge weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph<S> {
    n: usize,
    edges: Vec<Edge<S>>,
    /// adj[v-1] holds indices into `edges`, sorted by the other endpoint.
    adj: Vec<Vec<usize>>,
}

/// Structural class of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphClass {
    /// Acyclic (not necessarily connected).
    Forest,
    /// Connected with exactly one cycle; `cycle` lists its vertices in
    /// traversal order starting from the smallest cycle vertex.
    Unicyclic { cycle: Vec<usize> },
    /// Anything else (disconnected with a cycle, or more than one cycle).
    Other,
}

impl GraphClass {
    pub fn is_forest(&self) -> bool {
        matches!(self, GraphClass::Forest)
    }

    pub fn cycle(&self) -> Option<&[usize]> {
        match self {
            GraphClass::Unicyclic { cycle } => Some(cycle),
            _ => None,
        }
    }
}

/// The pendant tree hanging off a cycle vertex: the component containing
/// the root after both cycle edges at the root are removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedPendantTree {
    pub root: usize,
    /// Sorted vertex labels of the tree (always contains `root`).
    pub vertices: Vec<usize>,
}

impl<S: Scalar> WeightedGraph<S> {
    /// Builds a graph on vertices `1..=n` from a weighted edge list.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize, S)>) -> Result<Self> {
        let mut list: Vec<Edge<S>> = Vec::new();
        for (a, b, w) in edges {
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            for &x in &[a, b] {
                if x == 0 || x > n {
                    return Err(Error::VertexOutOfRange { v: x, n });
                }
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if w.is_zero() {
                return Err(Error::ZeroWeight { u, v });
            }
            list.push(Edge { u, v, weight: w });
        }
        list.sort_by_key(|e| (e.u, e.v));
        if let Some(w) = list
            .windows(2)
            .find(|w| (w[0].u, w[0].v) == (w[1].u, w[1].v))
        {
            return Err(Error::DuplicateEdge {
                u: w[0].u,
                v: w[0].v,
            });
        }
        let mut adj = vec![Vec::new(); n];
        for (i, e) in list.iter().enumerate() {
            adj[e.u - 1].push(i);
            adj[e.v - 1].push(i);
        }
        let by_other = |v: usize, edges: &[Edge<S>], idx: &mut Vec<usize>| {
            idx.sort_by_key(|&i| edges[i].other(v));
        };
        for v in 1..=n {
            let mut idx = std::mem::take(&mut adj[v - 1]);
            by_other(v, &list, &mut idx);
            adj[v - 1] = idx;
        }
        Ok(WeightedGraph {
            n,
            edges: list,
            adj,
        })
    }

    /// Builds an unweighted graph (all weights 1).
    pub fn unweighted(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::new(n, pairs.into_iter().map(|(u, v)| (u, v, S::one())))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge<S>] {
        &self.edges
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        Ok(())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    /// Neighbors of `v` in increasing label order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v - 1].iter().map(move |&i| self.edges[i].other(v))
    }

    /// Edge indices incident to `v`.
    pub(crate) fn incident(&self, v: usize) -> &[usize] {
        &self.adj[v - 1]
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        self.edges
            .binary_search_by_key(&(u, v), |e| (e.u, e.v))
            .ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<&S> {
        self.edge_index(u, v).map(|i| &self.edges[i].weight)
    }

    /// Connected components as sorted vertex lists, ordered by smallest label.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 1..=self.n {
            if seen[start - 1] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start - 1] = true;
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for u in self.neighbors(v) {
                    if !seen[u - 1] {
                        seen[u - 1] = true;
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Classifies the graph as forest / unicyclic / other.
    ///
    /// Unicyclic requires connectedness. The unique cycle is found by
    /// iterated leaf deletion followed by a walk of the 2-regular core,
    /// starting at its smallest vertex and moving to its smaller neighbor.
    pub fn classify(&self) -> GraphClass {
        let comps = self.components().len();
        if self.edges.len() + comps == self.n {
            return GraphClass::Forest;
        }
        if comps == 1 && self.edges.len() == self.n {
            return GraphClass::Unicyclic {
                cycle: self.core_cycle(),
            };
        }
        GraphClass::Other
    }

    /// The 2-regular core of a connected unicyclic graph, in cycle order.
    fn core_cycle(&self) -> Vec<usize> {
        let mut deg: Vec<usize> = (1..=self.n).map(|v| self.degree(v)).collect();
        let mut queue: VecDeque<usize> = (1..=self.n).filter(|&v| deg[v - 1] == 1).collect();
        let mut alive = vec![true; self.n];
        while let Some(v) = queue.pop_front() {
            if !alive[v - 1] || deg[v - 1] != 1 {
                continue;
            }
            alive[v - 1] = false;
            for u in self.neighbors(v) {
                if alive[u - 1] {
                    deg[u - 1] -= 1;
                    if deg[u - 1] == 1 {
                        queue.push_back(u);
                    }
                }
            }
        }
        let start = (1..=self.n)
            .find(|&v| alive[v - 1])
            .expect("unicyclic core");
        let mut cycle = vec![start];
        let mut prev = 0;
        let mut cur = start;
        loop {
            let next = self
                .neighbors(cur)
                .find(|&u| alive[u - 1] && u != prev)
                .expect("core is 2-regular");
            if next == start {
                break;
            }
            cycle.push(next);
            prev = cur;
            cur = next;
        }
        cycle
    }

    /// Girth of a unicyclic graph, `None` for forests and other classes.
    pub fn girth(&self) -> Option<usize> {
        match self.classify() {
            GraphClass::Unicyclic { cycle } => Some(cycle.len()),
            _ => None,
        }
    }

    /// Degree-one vertices in increasing order.
    pub fn pendant_vertices(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Pairs of pendant vertices sharing their neighbor, sorted.
    pub fn pendant_twins(&self) -> Vec<(usize, usize)> {
        let pendants = self.pendant_vertices();
        let mut by_center: Vec<(usize, usize)> = pendants
            .iter()
            .map(|&p| (self.neighbors(p).next().expect("pendant has a neighbor"), p))
            .collect();
        by_center.sort_unstable();
        let mut twins = Vec::new();
        for group in by_center.chunk_by(|a, b| a.0 == b.0) {
            for i in 0..group.len() {
                for j in i + 1..group.len() {
                    twins.push((group[i].1, group[j].1));
                }
            }
        }
        twins.sort_unstable();
        twins
    }

    /// The pendant tree rooted at cycle vertex `v` of a unicyclic graph.
    pub fn rooted_pendant_tree(&self, v: usize) -> Result<RootedPendantTree> {
        self.check_vertex(v)?;
        let cycle = match self.classify() {
            GraphClass::Unicyclic { cycle } => cycle,
            _ => return Err(Error::NotUnicyclic),
        };
        if !cycle.contains(&v) {
            return Err(Error::NotOnCycle(v));
        }
        Ok(RootedPendantTree {
            root: v,
            vertices: self.pendant_tree_vertices(&cycle, v),
        })
    }

    /// One pendant tree per cycle vertex, in cycle order. Their vertex sets
    /// partition the graph.
    pub fn pendant_trees(&self) -> Result<Vec<RootedPendantTree>> {
        let cycle = match self.classify() {
            GraphClass::Unicyclic { cycle } => cycle,
            _ => return Err(Error::NotUnicyclic),
        };
        Ok(cycle
            .iter()
            .map(|&v| RootedPendantTree {
                root: v,
                vertices: self.pendant_tree_vertices(&cycle, v),
            })
            .collect())
    }

    /// Vertices reachable from cycle vertex `v` without using its two cycle
    /// edges.
    pub(crate) fn pendant_tree_vertices(&self, cycle: &[usize], v: usize) -> Vec<usize> {
        let pos = cycle.iter().position(|&c| c == v).expect("v on cycle");
        let k = cycle.len();
        let prev = cycle[(pos + k - 1) % k];
        let next = cycle[(pos + 1) % k];
        let mut seen = vec![false; self.n];
        seen[v - 1] = true;
        let mut queue = VecDeque::from([v]);
        let mut verts = Vec::new();
        while let Some(x) = queue.pop_front() {
            verts.push(x);
            for u in self.neighbors(x) {
                if x == v && (u == prev || u == next) {
                    continue;
                }
                if !seen[u - 1] {
                    seen[u - 1] = true;
                    queue.push_back(u);
                }
            }
        }
        verts.sort_unstable();
        verts
    }

    /// Induced subgraph on `keep`, relabeled to `1..=keep.len()` in
    /// increasing original order. Returns the graph and the new-to-old
    /// label map (`map[new - 1] = old`).
    pub fn induced(&self, keep: &[usize]) -> (Self, Vec<usize>) {
        let mut map: Vec<usize> = keep.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut new_of = vec![0usize; self.n + 1];
        for (i, &old) in map.iter().enumerate() {
            new_of[old] = i + 1;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| new_of[e.u] != 0 && new_of[e.v] != 0)
            .map(|e| (new_of[e.u], new_of[e.v], e.weight.clone()));
        let g = Self::new(map.len(), edges).expect("induced subgraph is valid");
        (g, map)
    }

    /// Graph with the given vertices (and incident edges) removed,
    /// relabeled to `1..=n'`.
    pub fn remove_vertices(&self, drop: &[usize]) -> Self {
        let keep: Vec<usize> = (1..=self.n).filter(|v| !drop.contains(v)).collect();
        self.induced(&keep).0
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Self> {
        let idx = match self.edge_index(u, v) {
            Some(i) => i,
            None => return Err(Error::Parse(format!("no edge ({u}, {v})"))),
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, e)| (e.u, e.v, e.weight.clone()));
        Self::new(self.n, edges)
    }

    /// Same structure with each weight replaced by `f(u, v, w)`.
    pub fn map_weights<T: Scalar>(
        &self,
        mut f: impl FnMut(usize, usize, &S) -> T,
    ) -> Result<WeightedGraph<T>> {
        WeightedGraph::new(
            self.n,
            self.edges
                .iter()
                .map(|e| (e.u, e.v, f(e.u, e.v, &e.weight)))
                .collect::<Vec<_>>(),
        )
    }
}

/// Free-function form of [`WeightedGraph::new`].
pub fn build_graph<S: Scalar>(
    n: usize,
    weighted_edges: impl IntoIterator<Item = (usize, usize, S)>,
) -> Result<WeightedGraph<S>> {
    WeightedGraph::new(n, weighted_edges)
}

/// Free-function form of [`WeightedGraph::classify`].
pub fn classify_structure<S: Scalar>(g: &WeightedGraph<S>) -> GraphClass {
    g.classify()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_family, Family};
    use crate::Rat;

    fn path(n: usize) -> WeightedGraph<i32> {
        WeightedGraph::unweighted(n, (1..n).map(|v| (v, v + 1))).unwrap()
    }

    #[test]
    fn build_rejects_violations() {
        assert_eq!(
            WeightedGraph::<i32>::new(1, vec![(1, 1, 1)]),
            Err(Error::SelfLoop(1))
        );
        assert_eq!(
            WeightedGraph::<i32>::new(2, vec![(1, 2, 0)]),
            Err(Error::ZeroWeight { u: 1, v: 2 })
        );
        assert_eq!(
            WeightedGraph::<i32>::new(2, vec![(1, 2, 1), (2, 1, 3)]),
            Err(Error::DuplicateEdge { u: 1, v: 2 })
        );
        assert_eq!(
            WeightedGraph::<i32>::new(2, vec![(1, 3, 1)]),
            Err(Error::VertexOutOfRange { v: 3, n: 2 })
        );
        let p2 = WeightedGraph::<i32>::new(2, vec![(1, 2, 1)]).unwrap();
        assert_eq!(p2.order(), 2);
        assert_eq!(p2.edge_count(), 1);
        let c3 = WeightedGraph::<i32>::unweighted(3, vec![(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(c3.girth(), Some(3));
    }

    #[test]
    fn classify_basic_shapes() {
        assert!(path(4).classify().is_forest());
        let u53: WeightedGraph<Rat> = make_family(Family::U { n: 5, k: 3 }).unwrap();
        assert_eq!(u53.classify().cycle().map(<[usize]>::len), Some(3));
        // two disjoint triangles: one cycle count per component, not unicyclic
        let two_tri = WeightedGraph::<i32>::unweighted(
            6,
            vec![(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)],
        )
        .unwrap();
        assert_eq!(two_tri.classify(), GraphClass::Other);
        // disconnected forest is still a forest
        let f = WeightedGraph::<i32>::unweighted(4, vec![(1, 2)]).unwrap();
        assert!(f.classify().is_forest());
    }

    #[test]
    fn classify_is_relabel_invariant() {
        // C5 with a pendant, labeled two different ways
        let a = WeightedGraph::<i32>::unweighted(
            6,
            vec![(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (3, 6)],
        )
        .unwrap();
        let b = WeightedGraph::<i32>::unweighted(
            6,
            vec![(6, 5), (5, 4), (4, 3), (3, 2), (6, 2), (4, 1)],
        )
        .unwrap();
        assert_eq!(a.girth(), Some(5));
        assert_eq!(b.girth(), Some(5));
    }

    #[test]
    fn pendants_and_twins() {
        let star = WeightedGraph::<i32>::unweighted(4, vec![(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(star.pendant_vertices(), vec![2, 3, 4]);
        assert_eq!(star.pendant_twins(), vec![(2, 3), (2, 4), (3, 4)]);

        let c4 = WeightedGraph::<i32>::unweighted(4, vec![(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert!(c4.pendant_vertices().is_empty());
        assert!(c4.pendant_twins().is_empty());

        // p2 endpoints are each other's neighbor, not twins
        let p2 = WeightedGraph::<i32>::unweighted(2, vec![(1, 2)]).unwrap();
        assert!(p2.pendant_twins().is_empty());

        let u3: WeightedGraph<Rat> = make_family(Family::U3 { n: 6 }).unwrap();
        let leaves = u3.pendant_vertices();
        assert_eq!(leaves.len(), 2);
        assert_eq!(u3.pendant_twins(), vec![(leaves[0], leaves[1])]);
    }

    #[test]
    fn pendant_tree_extraction() {
        let u63: WeightedGraph<Rat> = make_family(Family::U { n: 6, k: 3 }).unwrap();
        // attachment vertex is 1; pendants are 4, 5, 6
        let t = u63.rooted_pendant_tree(1).unwrap();
        assert_eq!(t.vertices, vec![1, 4, 5, 6]);
        let t2 = u63.rooted_pendant_tree(2).unwrap();
        assert_eq!(t2.vertices, vec![2]);
        assert_eq!(u63.rooted_pendant_tree(4), Err(Error::NotOnCycle(4)));

        let g_star: WeightedGraph<Rat> = make_family(Family::GStar { n: 7, k: 3 }).unwrap();
        let t3 = g_star.rooted_pendant_tree(1).unwrap();
        assert_eq!(t3.vertices.len(), 5);

        // pendant trees partition the vertex set
        for g in [&u63, &g_star] {
            let trees = g.pendant_trees().unwrap();
            let mut all: Vec<usize> = trees.iter().flat_map(|t| t.vertices.clone()).collect();
            all.sort_unstable();
            assert_eq!(all, (1..=g.order()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn induced_relabeling() {
        let g = path(5);
        let (sub, map) = g.induced(&[2, 4, 5]);
        assert_eq!(map, vec![2, 4, 5]);
        assert_eq!(sub.order(), 3);
        assert_eq!(sub.edge_count(), 1); // only 4-5 survives
        assert!(sub.has_edge(2, 3));
    }
}
