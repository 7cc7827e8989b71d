//! Exact inertia of symmetric matrices by congruence elimination.
//!
//! Simultaneous row/column operations preserve inertia, so eliminating one
//! index (or a hyperbolic index pair) at a time reads the signature straight
//! off the pivots. This is the independent oracle the combinatorial
//! reductions are validated against; it never shares code with them.

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::inertia::Inertia;
use crate::scalar::Scalar;

/// Dense symmetric matrix with exact entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrix<S> {
    n: usize,
    rows: Vec<Vec<S>>,
}

impl<S: Scalar> SymMatrix<S> {
    /// Validates squareness and exact symmetry.
    pub fn new(rows: Vec<Vec<S>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSymmetric);
        }
        for i in 0..n {
            for j in i + 1..n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(SymMatrix { n, rows })
    }

    pub fn zero(n: usize) -> Self {
        SymMatrix {
            n,
            rows: vec![vec![S::zero(); n]; n],
        }
    }

    /// Adjacency matrix of a weighted graph (zero diagonal).
    pub fn adjacency(g: &WeightedGraph<S>) -> Self {
        let mut m = Self::zero(g.order());
        for e in g.edges() {
            m.rows[e.u - 1][e.v - 1] = e.weight.clone();
            m.rows[e.v - 1][e.u - 1] = e.weight.clone();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.rows
    }

    /// Congruence by a diagonal matrix that scales index `i` by `factor`:
    /// row i and column i are both multiplied, leaving inertia unchanged.
    pub fn scale_index(&self, i: usize, factor: &S) -> Self {
        let mut rows = self.rows.clone();
        for j in 0..self.n {
            rows[i][j] = rows[i][j].clone() * factor.clone();
        }
        for row in rows.iter_mut() {
            row[i] = row[i].clone() * factor.clone();
        }
        SymMatrix { n: self.n, rows }
    }
}

/// Exact inertia by symmetric (congruence) elimination.
///
/// Pivot policy: the lowest-index nonzero diagonal entry; if every active
/// diagonal entry is zero, the lexicographically first nonzero off-diagonal
/// entry is processed as a hyperbolic 2x2 block contributing (1, 1, 0); an
/// all-zero active block contributes only zeros.
pub fn congruence_inertia<S: Scalar>(m: &SymMatrix<S>) -> Inertia {
    let n = m.n;
    let mut a = m.rows.clone();
    let mut active = vec![true; n];
    let mut remaining = n;
    let (mut plus, mut minus, mut zero) = (0usize, 0usize, 0usize);

    // row_j -= f * row_i, then col_j -= f * col_i
    let symmetric_eliminate = |a: &mut Vec<Vec<S>>, j: usize, i: usize, f: &S| {
        for l in 0..n {
            a[j][l] = a[j][l].clone() - f.clone() * a[i][l].clone();
        }
        for l in 0..n {
            a[l][j] = a[l][j].clone() - f.clone() * a[l][i].clone();
        }
    };

    while remaining > 0 {
        if let Some(i) = (0..n).find(|&i| active[i] && !a[i][i].is_zero()) {
            if a[i][i].is_positive() {
                plus += 1;
            } else {
                minus += 1;
            }
            let pivot = a[i][i].clone();
            for j in 0..n {
                if j != i && active[j] && !a[j][i].is_zero() {
                    let f = a[j][i].clone() / pivot.clone();
                    symmetric_eliminate(&mut a, j, i, &f);
                }
            }
            active[i] = false;
            remaining -= 1;
            continue;
        }
        let mut pair = None;
        'search: for i in 0..n {
            if !active[i] {
                continue;
            }
            for j in i + 1..n {
                if active[j] && !a[i][j].is_zero() {
                    pair = Some((i, j));
                    break 'search;
                }
            }
        }
        match pair {
            Some((i, j)) => {
                // hyperbolic block: both diagonals are zero, a[i][j] != 0
                plus += 1;
                minus += 1;
                let c = a[i][j].clone();
                for l in 0..n {
                    if l == i || l == j || !active[l] {
                        continue;
                    }
                    let fi = a[l][i].clone() / c.clone();
                    if !fi.is_zero() {
                        symmetric_eliminate(&mut a, l, j, &fi);
                    }
                    let fj = a[l][j].clone() / c.clone();
                    if !fj.is_zero() {
                        symmetric_eliminate(&mut a, l, i, &fj);
                    }
                }
                active[i] = false;
                active[j] = false;
                remaining -= 2;
            }
            None => {
                zero += remaining;
                remaining = 0;
            }
        }
    }
    Inertia::new(plus, minus, zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    fn rat(p: i64, q: i64) -> Rat {
        BigRational::new(p.into(), q.into())
    }

    fn from_i64(rows: Vec<Vec<i64>>) -> SymMatrix<Rat> {
        SymMatrix::new(
            rows.into_iter()
                .map(|r| r.into_iter().map(|x| rat(x, 1)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn hyperbolic_pair() {
        let m = from_i64(vec![vec![0, 3], vec![3, 0]]);
        assert_eq!(congruence_inertia(&m), Inertia::new(1, 1, 0));
    }

    #[test]
    fn zero_matrix() {
        let m: SymMatrix<Rat> = SymMatrix::zero(3);
        assert_eq!(congruence_inertia(&m), Inertia::new(0, 0, 3));
    }

    #[test]
    fn unweighted_c5_signature() {
        // odd cycle with positive weight product: one extra positive eigenvalue
        let g = crate::graph::WeightedGraph::<Rat>::unweighted(
            5,
            vec![(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)],
        )
        .unwrap();
        let m = SymMatrix::adjacency(&g);
        assert_eq!(congruence_inertia(&m), Inertia::new(3, 2, 0));
    }

    #[test]
    fn rejects_asymmetry() {
        let rows = vec![
            vec![Rat::zero(), Rat::one()],
            vec![Rat::zero(), Rat::zero()],
        ];
        assert_eq!(SymMatrix::new(rows).err(), Some(Error::NotSymmetric));
    }

    #[test]
    fn diagonal_scaling_preserves_inertia() {
        let g = crate::graph::WeightedGraph::<Rat>::new(
            4,
            vec![
                (1, 2, rat(2, 3)),
                (2, 3, rat(-1, 2)),
                (3, 4, rat(5, 1)),
                (1, 4, rat(1, 7)),
            ],
        )
        .unwrap();
        let m = SymMatrix::adjacency(&g);
        let base = congruence_inertia(&m);
        for i in 0..4 {
            let scaled = m.scale_index(i, &rat(-7, 3));
            assert_eq!(congruence_inertia(&scaled), base);
        }
    }

    #[test]
    fn definite_blocks() {
        let m = from_i64(vec![vec![2, 0, 0], vec![0, -5, 1], vec![0, 1, -1]]);
        // det of lower 2x2 block = 4 > 0 with negative trace: two negatives
        assert_eq!(congruence_inertia(&m), Inertia::new(1, 2, 0));
    }
}
