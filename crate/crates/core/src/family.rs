//! Constructors for the named graph families used by the characterization
//! theorems. All constructors produce unit weights; use
//! [`WeightedGraph::map_weights`] to reweight.
//!
//! Labeling convention: cycle vertices come first (`1..=k` in cycle order),
//! then any star center, then pendant vertices.

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::scalar::Scalar;

/// A named family instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Cycle C_k, k >= 3.
    Cycle { k: usize },
    /// Path P_n, n >= 1.
    Path { n: usize },
    /// Star K_{1,m}: one center and `leaves` pendant vertices.
    Star { leaves: usize },
    /// U_{n,k}: C_k with n-k pendant vertices attached to one cycle vertex
    /// (n > k).
    U { n: usize, k: usize },
    /// G*: C_k plus a star of order n-k whose center is joined to a cycle
    /// vertex by an edge (n >= k+2, so the star has at least one leaf).
    GStar { n: usize, k: usize },
    /// U1^{r,s}: C_3 with r and s pendant vertices attached at two
    /// different cycle vertices (r, s >= 0).
    U1 { r: usize, s: usize },
    /// U2^{p,q}: C_4 with p and q pendant vertices attached at two
    /// nonadjacent cycle vertices (p, q >= 0).
    U2 { p: usize, q: usize },
    /// U3^{n-4}: C_3 joined by an edge to the center of K_{1,n-4} (n >= 5).
    U3 { n: usize },
    /// U4^{n-5}: C_4 joined by an edge to the center of K_{1,n-5} (n >= 6).
    U4 { n: usize },
    /// H1_{n,3}: same construction as U3^{n-4} (n >= 5).
    H1 { n: usize },
    /// C_8 with one pendant edge (order 9).
    G1,
    /// C_7 with one pendant edge (order 8).
    G2,
}

fn cycle_pairs(k: usize) -> Vec<(usize, usize)> {
    (1..k).map(|v| (v, v + 1)).chain([(1, k)]).collect()
}

/// Builds the named family member with unit weights.
pub fn make_family<S: Scalar>(family: Family) -> Result<WeightedGraph<S>> {
    let bad = |msg: &str| Err(Error::BadParams(msg.to_string()));
    let pairs: (usize, Vec<(usize, usize)>) = match family {
        Family::Cycle { k } => {
            if k < 3 {
                return bad("cycle needs k >= 3");
            }
            (k, cycle_pairs(k))
        }
        Family::Path { n } => {
            if n == 0 {
                return bad("path needs n >= 1");
            }
            (n, (1..n).map(|v| (v, v + 1)).collect())
        }
        Family::Star { leaves } => (leaves + 1, (2..=leaves + 1).map(|v| (1, v)).collect()),
        Family::U { n, k } => {
            if k < 3 || n <= k {
                return bad("U_{n,k} needs k >= 3 and n > k");
            }
            let mut e = cycle_pairs(k);
            e.extend((k + 1..=n).map(|v| (1, v)));
            (n, e)
        }
        Family::GStar { n, k } => {
            if k < 3 || n < k + 2 {
                return bad("G* needs k >= 3 and n >= k+2");
            }
            let center = k + 1;
            let mut e = cycle_pairs(k);
            e.push((1, center));
            e.extend((k + 2..=n).map(|v| (center, v)));
            (n, e)
        }
        Family::U1 { r, s } => {
            let n = 3 + r + s;
            let mut e = cycle_pairs(3);
            e.extend((4..4 + r).map(|v| (1, v)));
            e.extend((4 + r..4 + r + s).map(|v| (2, v)));
            (n, e)
        }
        Family::U2 { p, q } => {
            let n = 4 + p + q;
            let mut e = cycle_pairs(4);
            e.extend((5..5 + p).map(|v| (1, v)));
            e.extend((5 + p..5 + p + q).map(|v| (3, v)));
            (n, e)
        }
        Family::U3 { n } | Family::H1 { n } => {
            if n < 5 {
                return bad("U3/H1 needs n >= 5");
            }
            let center = 4;
            let mut e = cycle_pairs(3);
            e.push((1, center));
            e.extend((5..=n).map(|v| (center, v)));
            (n, e)
        }
        Family::U4 { n } => {
            if n < 6 {
                return bad("U4 needs n >= 6");
            }
            let center = 5;
            let mut e = cycle_pairs(4);
            e.push((1, center));
            e.extend((6..=n).map(|v| (center, v)));
            (n, e)
        }
        Family::G1 => {
            let mut e = cycle_pairs(8);
            e.push((1, 9));
            (9, e)
        }
        Family::G2 => {
            let mut e = cycle_pairs(7);
            e.push((1, 8));
            (8, e)
        }
    };
    WeightedGraph::unweighted(pairs.0, pairs.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphClass;
    use crate::Rat;

    #[test]
    fn u1_with_one_pendant() {
        let g: WeightedGraph<Rat> = make_family(Family::U1 { r: 1, s: 0 }).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.girth(), Some(3));
        assert_eq!(g.pendant_vertices(), vec![4]);
    }

    #[test]
    fn unk_shape() {
        let g: WeightedGraph<Rat> = make_family(Family::U { n: 5, k: 3 }).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.girth(), Some(3));
        assert_eq!(g.pendant_vertices(), vec![4, 5]);
        assert_eq!(g.degree(1), 4);
        // girth and pendant count for the general family
        for n in 4..=9 {
            for k in 3..n {
                let g: WeightedGraph<Rat> = make_family(Family::U { n, k }).unwrap();
                assert_eq!(g.girth(), Some(k));
                assert_eq!(g.order(), n);
                assert_eq!(g.pendant_vertices().len(), n - k);
            }
        }
    }

    #[test]
    fn h1_matches_u3() {
        let a: WeightedGraph<Rat> = make_family(Family::H1 { n: 5 }).unwrap();
        let b: WeightedGraph<Rat> = make_family(Family::U3 { n: 5 }).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.order(), 5);
        assert!(matches!(a.classify(), GraphClass::Unicyclic { .. }));
    }

    #[test]
    fn bad_params() {
        assert!(make_family::<Rat>(Family::Cycle { k: 2 }).is_err());
        assert!(make_family::<Rat>(Family::U { n: 3, k: 3 }).is_err());
        assert!(make_family::<Rat>(Family::GStar { n: 4, k: 3 }).is_err());
        assert!(make_family::<Rat>(Family::U3 { n: 4 }).is_err());
        assert!(make_family::<Rat>(Family::U4 { n: 5 }).is_err());
    }

    #[test]
    fn g1_g2_orders() {
        let g1: WeightedGraph<Rat> = make_family(Family::G1).unwrap();
        let g2: WeightedGraph<Rat> = make_family(Family::G2).unwrap();
        assert_eq!((g1.order(), g1.girth()), (9, Some(8)));
        assert_eq!((g2.order(), g2.girth()), (8, Some(7)));
    }
}
