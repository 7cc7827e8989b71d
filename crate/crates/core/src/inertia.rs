//! Inertia of weighted graphs via combinatorial reductions.
//!
//! Forests reduce to the matching number; cycles have a closed form driven
//! by the A/B/C/D classification of their weight products; general unicyclic
//! graphs split along a cycle vertex whose pendant tree saturates it, or
//! fall back to cycle + forest. Everything is exact: the Type A condition
//! is a cancellation of weight products that only exact arithmetic can test.

use std::ops::Add;

use crate::congruence::{congruence_inertia, SymMatrix};
use crate::error::{Error, Result};
use crate::graph::{GraphClass, WeightedGraph};
use crate::matching::{self, matching_size_of_subset};
use crate::scalar::Scalar;

/// Signature triple: positive, negative and zero eigenvalue counts of the
/// adjacency matrix. `plus + minus + zero` equals the order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn new(plus: usize, minus: usize, zero: usize) -> Self {
        Inertia { plus, minus, zero }
    }

    pub fn rank(&self) -> usize {
        self.plus + self.minus
    }

    pub fn order(&self) -> usize {
        self.plus + self.minus + self.zero
    }
}

impl Add for Inertia {
    type Output = Inertia;

    fn add(self, rhs: Inertia) -> Inertia {
        Inertia::new(
            self.plus + rhs.plus,
            self.minus + rhs.minus,
            self.zero + rhs.zero,
        )
    }
}

impl std::fmt::Display for Inertia {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.plus, self.minus, self.zero)
    }
}

/// The class of a weighted cycle. Even cycles are Type A exactly when the
/// two alternating weight products cancel against the parity sign; odd
/// cycles split on the sign of the full product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleType {
    A,
    B,
    C,
    D,
}

impl std::fmt::Display for CycleType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CycleType::A => "A",
            CycleType::B => "B",
            CycleType::C => "C",
            CycleType::D => "D",
        };
        f.write_str(s)
    }
}

/// Weights of a cycle in cyclic edge order: entry `i` is the weight of the
/// edge from the i-th to the (i+1)-th cycle vertex, the last entry closing
/// the cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWeights<S> {
    weights: Vec<S>,
}

#[allow(clippy::len_without_is_empty)] // never empty: length is at least 3
impl<S: Scalar> CycleWeights<S> {
    pub fn new(weights: Vec<S>) -> Result<Self> {
        if weights.len() < 3 {
            return Err(Error::BadParams("a cycle has at least 3 edges".into()));
        }
        if weights.iter().any(S::is_zero) {
            return Err(Error::BadParams("cycle weights must be nonzero".into()));
        }
        Ok(CycleWeights { weights })
    }

    /// Extracts the cycle weights of a graph that is exactly a cycle.
    pub fn from_cycle_graph(g: &WeightedGraph<S>) -> Result<Self> {
        match g.classify() {
            GraphClass::Unicyclic { cycle } if cycle.len() == g.order() => {
                Ok(Self::along_cycle(g, &cycle))
            }
            _ => Err(Error::NotACycle),
        }
    }

    /// Weights read along an explicit cycle vertex order.
    pub fn along_cycle(g: &WeightedGraph<S>, cycle: &[usize]) -> Self {
        let k = cycle.len();
        let weights = (0..k)
            .map(|i| {
                g.weight(cycle[i], cycle[(i + 1) % k])
                    .expect("consecutive cycle vertices are adjacent")
                    .clone()
            })
            .collect();
        CycleWeights { weights }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[S] {
        &self.weights
    }

    /// Product of all weights.
    pub fn product(&self) -> S {
        self.weights.iter().fold(S::one(), |p, w| p * w.clone())
    }

    /// (odd-position product, even-position product), positions 1-based;
    /// only defined for even length.
    pub fn alternating_products(&self) -> Option<(S, S)> {
        if self.len() % 2 != 0 {
            return None;
        }
        let mut odd = S::one();
        let mut even = S::one();
        for (i, w) in self.weights.iter().enumerate() {
            if i % 2 == 0 {
                odd = odd * w.clone();
            } else {
                even = even * w.clone();
            }
        }
        Some((odd, even))
    }
}

/// Classifies a weighted cycle; exact, no tolerance.
pub fn classify_cycle<S: Scalar>(cw: &CycleWeights<S>) -> CycleType {
    let k = cw.len();
    if k % 2 == 0 {
        let (odd, even) = cw.alternating_products().expect("even length");
        let signed_even = if ((k - 2) / 2) % 2 == 0 { even } else { -even };
        if (odd + signed_even).is_zero() {
            CycleType::A
        } else {
            CycleType::B
        }
    } else {
        let w = cw.product();
        let signed = if ((k - 1) / 2) % 2 == 0 { w } else { -w };
        if signed.is_positive() {
            CycleType::C
        } else {
            CycleType::D
        }
    }
}

/// Closed-form inertia of a weighted cycle.
pub fn cycle_inertia<S: Scalar>(cw: &CycleWeights<S>) -> Inertia {
    let k = cw.len();
    match classify_cycle(cw) {
        CycleType::A => Inertia::new((k - 2) / 2, (k - 2) / 2, 2),
        CycleType::B => Inertia::new(k / 2, k / 2, 0),
        CycleType::C => Inertia::new(k.div_ceil(2), (k - 1) / 2, 0),
        CycleType::D => Inertia::new((k - 1) / 2, k.div_ceil(2), 0),
    }
}

/// Inertia of a forest: `(m, m, n - 2m)` with `m` its matching number.
/// Independent of the weights.
pub fn forest_inertia<S: Scalar>(g: &WeightedGraph<S>) -> Result<Inertia> {
    let m = matching::max_matching_forest(g)?.size;
    Ok(Inertia::new(m, m, g.order() - 2 * m))
}

/// Removes a pendant vertex `v` and its neighbor; the deleted pair
/// contributes exactly `(1, 1, 0)` to the inertia.
pub fn reduce_pendant<S: Scalar>(
    g: &WeightedGraph<S>,
    v: usize,
) -> Result<(WeightedGraph<S>, Inertia)> {
    g.check_vertex(v)?;
    if g.degree(v) != 1 {
        return Err(Error::NotPendant(v));
    }
    let u = g.neighbors(v).next().expect("pendant neighbor");
    Ok((g.remove_vertices(&[u, v]), Inertia::new(1, 1, 0)))
}

/// Removes one vertex of a pendant-twin pair; the positive and negative
/// indices are unchanged (the order, and hence the nullity, drops by one).
pub fn reduce_twin<S: Scalar>(g: &WeightedGraph<S>, v: usize) -> Result<WeightedGraph<S>> {
    g.check_vertex(v)?;
    if g.pendant_twins().iter().all(|&(a, b)| a != v && b != v) {
        return Err(Error::NoTwin(v));
    }
    Ok(g.remove_vertices(&[v]))
}

/// Inertia of a unicyclic graph by the saturated-vertex decomposition.
///
/// Scanning the cycle in order, the first vertex `v` saturated in its own
/// pendant tree splits the graph into that tree and the forest left after
/// deleting it; if no cycle vertex is saturated, the cycle contributes its
/// closed form and the rest is a forest.
pub fn unicyclic_inertia<S: Scalar>(g: &WeightedGraph<S>) -> Result<Inertia> {
    let cycle = match g.classify() {
        GraphClass::Unicyclic { cycle } => cycle,
        _ => return Err(Error::NotUnicyclic),
    };
    let n = g.order();
    for &v in &cycle {
        let tree = g.pendant_tree_vertices(&cycle, v);
        if let Some(result) = saturated_split(g, &tree, v, n) {
            return Ok(result);
        }
    }
    let cw = CycleWeights::along_cycle(g, &cycle);
    let rest: Vec<usize> = (1..=n).filter(|u| !cycle.contains(u)).collect();
    let m = matching_size_of_subset(g, &rest);
    let forest_part = Inertia::new(m, m, rest.len() - 2 * m);
    Ok(cycle_inertia(&cw) + forest_part)
}

/// If `v` is saturated in its pendant tree, the inertia decomposes as
/// tree + remainder; returns `None` otherwise.
pub(crate) fn saturated_split<S: Scalar>(
    g: &WeightedGraph<S>,
    tree: &[usize],
    v: usize,
    n: usize,
) -> Option<Inertia> {
    let m_tree = matching_size_of_subset(g, tree);
    let minus_v: Vec<usize> = tree.iter().copied().filter(|&u| u != v).collect();
    if matching_size_of_subset(g, &minus_v) + 1 != m_tree {
        return None;
    }
    let rest: Vec<usize> = (1..=n).filter(|u| !tree.contains(u)).collect();
    let m_rest = matching_size_of_subset(g, &rest);
    let m = m_tree + m_rest;
    Some(Inertia::new(m, m, n - 2 * m))
}

/// Inertia of an arbitrary weighted graph: forests via the matching number,
/// unicyclic graphs via the decomposition, anything else via congruence
/// elimination of the adjacency matrix; disconnected graphs sum their
/// components (the adjacency matrix is block diagonal).
pub fn inertia<S: Scalar>(g: &WeightedGraph<S>) -> Inertia {
    match g.classify() {
        GraphClass::Forest => forest_inertia(g).expect("classified as forest"),
        GraphClass::Unicyclic { .. } => unicyclic_inertia(g).expect("classified as unicyclic"),
        GraphClass::Other => {
            let comps = g.components();
            if comps.len() == 1 {
                return congruence_inertia(&SymMatrix::adjacency(g));
            }
            comps
                .into_iter()
                .map(|c| inertia(&g.induced(&c).0))
                .fold(Inertia::new(0, 0, 0), Inertia::add)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_family, Family};
    use crate::Rat;
    use num_rational::BigRational;

    fn rat(p: i64, q: i64) -> Rat {
        BigRational::new(p.into(), q.into())
    }

    fn fam(f: Family) -> WeightedGraph<Rat> {
        make_family(f).unwrap()
    }

    fn oracle(g: &WeightedGraph<Rat>) -> Inertia {
        congruence_inertia(&SymMatrix::adjacency(g))
    }

    #[test]
    fn cycle_classification() {
        let c4 = CycleWeights::from_cycle_graph(&fam(Family::Cycle { k: 4 })).unwrap();
        assert_eq!(classify_cycle(&c4), CycleType::A);

        let c3 = CycleWeights::from_cycle_graph(&fam(Family::Cycle { k: 3 })).unwrap();
        assert_eq!(classify_cycle(&c3), CycleType::D);

        let w6: Vec<Rat> = [1, 1, 1, 1, 1, 2].iter().map(|&p| rat(p, 1)).collect();
        let c6 = CycleWeights::new(w6).unwrap();
        assert_eq!(classify_cycle(&c6), CycleType::B);
    }

    #[test]
    fn cycle_inertia_table() {
        let c4 = CycleWeights::from_cycle_graph(&fam(Family::Cycle { k: 4 })).unwrap();
        assert_eq!(cycle_inertia(&c4), Inertia::new(1, 1, 2));

        // unweighted C3: spectrum {2, -1, -1}
        let c3 = CycleWeights::from_cycle_graph(&fam(Family::Cycle { k: 3 })).unwrap();
        assert_eq!(cycle_inertia(&c3), Inertia::new(1, 2, 0));

        // C5 with a single -1 weight; golden value from the congruence oracle
        let c5 = fam(Family::Cycle { k: 5 })
            .map_weights(|u, v, w| {
                if (u, v) == (1, 2) {
                    -w.clone()
                } else {
                    w.clone()
                }
            })
            .unwrap();
        assert_eq!(oracle(&c5), Inertia::new(2, 3, 0));
        let cw = CycleWeights::from_cycle_graph(&c5).unwrap();
        assert_eq!(classify_cycle(&cw), CycleType::D);
        assert_eq!(cycle_inertia(&cw), Inertia::new(2, 3, 0));
    }

    #[test]
    fn forest_inertia_values() {
        assert_eq!(
            forest_inertia(&fam(Family::Path { n: 4 })).unwrap(),
            Inertia::new(2, 2, 0)
        );
        assert_eq!(
            forest_inertia(&fam(Family::Star { leaves: 5 })).unwrap(),
            Inertia::new(1, 1, 4)
        );
        // inertia of a tree is independent of the weights
        let p5 = fam(Family::Path { n: 5 })
            .map_weights(|u, _, _| rat(2 * u as i64 + 1, 3))
            .unwrap();
        assert_eq!(forest_inertia(&p5).unwrap(), Inertia::new(2, 2, 1));
        assert_eq!(oracle(&p5), Inertia::new(2, 2, 1));
    }

    #[test]
    fn pendant_reduction() {
        let p2 = fam(Family::Path { n: 2 });
        let (rest, delta) = reduce_pendant(&p2, 2).unwrap();
        assert_eq!(rest.order(), 0);
        assert_eq!(delta, Inertia::new(1, 1, 0));

        // golden value from the congruence oracle
        let u53 = fam(Family::U { n: 5, k: 3 });
        assert_eq!(oracle(&u53), Inertia::new(2, 2, 1));
        let pendant = u53.pendant_vertices()[0];
        let (rest, delta) = reduce_pendant(&u53, pendant).unwrap();
        assert_eq!(inertia(&rest) + delta, Inertia::new(2, 2, 1));

        // C8 plus a pendant edge: one reduction leaves P7
        let g1 = fam(Family::G1);
        let (rest, _) = reduce_pendant(&g1, 9).unwrap();
        assert!(rest.classify().is_forest());
        assert_eq!(rest.order(), 7);
        assert_eq!(inertia(&g1).plus, 1 + inertia(&rest).plus);
        assert_eq!(inertia(&g1).plus, 4);

        assert_eq!(reduce_pendant(&g1, 1).err(), Some(Error::NotPendant(1)));
    }

    #[test]
    fn twin_reduction() {
        let star = fam(Family::Star { leaves: 3 });
        let smaller = reduce_twin(&star, 2).unwrap();
        assert_eq!(inertia(&star), Inertia::new(1, 1, 2));
        assert_eq!(inertia(&smaller), Inertia::new(1, 1, 1));

        // oracle golden values on both sides
        let u3 = fam(Family::U3 { n: 7 });
        assert_eq!(oracle(&u3).plus, 2);
        let twin = u3.pendant_twins()[0].0;
        let smaller = reduce_twin(&u3, twin).unwrap();
        assert_eq!(oracle(&smaller).plus, 2);
        assert_eq!(inertia(&smaller).plus, 2);

        // repeated twin reduction of U_{n,k} reaches U_{k+1,k}
        let mut g = fam(Family::U { n: 8, k: 4 });
        while let Some(&(v, _)) = g.pendant_twins().first() {
            g = reduce_twin(&g, v).unwrap();
        }
        assert_eq!(g.order(), 5);
        assert_eq!(g.girth(), Some(4));
        let orig = inertia(&fam(Family::U { n: 8, k: 4 }));
        let reduced = inertia(&g);
        assert_eq!((reduced.plus, reduced.minus), (orig.plus, orig.minus));
        assert_eq!(reduced.zero + 3, orig.zero);

        assert_eq!(
            reduce_twin(&fam(Family::Cycle { k: 4 }), 1).err(),
            Some(Error::NoTwin(1))
        );
    }

    #[test]
    fn unicyclic_decomposition() {
        // all pendants at one vertex of C3: (2, 2, n-4)
        for n in 5..=8 {
            let g = fam(Family::U { n, k: 3 });
            assert_eq!(unicyclic_inertia(&g).unwrap(), Inertia::new(2, 2, n - 4));
        }
        // G* with k = 4 and unit weights: no saturated cycle vertex, Type A core
        let gs = fam(Family::GStar { n: 6, k: 4 });
        assert_eq!(oracle(&gs), Inertia::new(2, 2, 2));
        assert_eq!(unicyclic_inertia(&gs).unwrap(), Inertia::new(2, 2, 2));
        // a bare cycle is a valid unicyclic input; unit C6 has no zero
        // eigenvalue (spectrum {2, 1, 1, -1, -1, -2}), so Type B
        let c6 = fam(Family::Cycle { k: 6 });
        assert_eq!(oracle(&c6), Inertia::new(3, 3, 0));
        assert_eq!(unicyclic_inertia(&c6).unwrap(), Inertia::new(3, 3, 0));
    }

    #[test]
    fn facade_dispatch() {
        let k1 = WeightedGraph::<Rat>::unweighted(1, vec![]).unwrap();
        assert_eq!(inertia(&k1), Inertia::new(0, 0, 1));
        assert_eq!(inertia(&fam(Family::Cycle { k: 8 })), Inertia::new(3, 3, 2));
        // disconnected: triangle plus an edge plus an isolated vertex
        let g = WeightedGraph::<Rat>::unweighted(6, vec![(1, 2), (2, 3), (1, 3), (4, 5)]).unwrap();
        assert_eq!(inertia(&g), oracle(&g));
        assert_eq!(inertia(&g), Inertia::new(2, 3, 1));
    }
}
