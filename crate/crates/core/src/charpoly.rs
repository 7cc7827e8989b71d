//! Characteristic polynomials: coefficient enumeration over elementary
//! subgraphs for forests and unicyclic graphs, plus an independent
//! evaluation-interpolation route used as an oracle and as the fallback for
//! general graphs.
//!
//! An elementary subgraph is a vertex-disjoint union of single edges and
//! cycles. The coefficient of `lambda^(n-i)` sums, over elementary
//! subgraphs on exactly `i` vertices, the term
//! `(-1)^components * 2^cycles * product(w(e)^z)` with `z = 1` on cycle
//! edges and `z = 2` on matching edges. For forests the subgraphs are
//! matchings; a unicyclic graph adds terms that pair its one cycle with
//! matchings avoiding it.

use crate::congruence::SymMatrix;
use crate::error::{Error, Result};
use crate::graph::{GraphClass, WeightedGraph};
use crate::scalar::Scalar;

/// Monic characteristic polynomial
/// `lambda^n + a1 * lambda^(n-1) + ... + an`, stored as `[1, a1, ..., an]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> CharPoly<S> {
    fn new(coeffs: Vec<S>) -> Self {
        debug_assert!(!coeffs.is_empty() && coeffs[0].is_one());
        CharPoly { coeffs }
    }

    /// Degree of the polynomial (the matrix/graph order).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `lambda^(degree - i)`.
    pub fn coeff(&self, i: usize) -> &S {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Multiplicity of the zero eigenvalue: the degree minus the largest
    /// index with a nonzero coefficient.
    pub fn nullity(&self) -> usize {
        let last = (0..self.coeffs.len())
            .rev()
            .find(|&i| !self.coeffs[i].is_zero())
            .expect("leading coefficient is 1");
        self.degree() - last
    }
}

/// Adds, for every matching of the unblocked subgraph (including the empty
/// one), `factor * (-1)^t * product(w^2)` into `coeffs[base + 2t]` where
/// `t` is the matching size.
#[allow(clippy::too_many_arguments)]
fn accumulate_matchings<S: Scalar>(
    g: &WeightedGraph<S>,
    from: usize,
    used: &mut Vec<bool>,
    t: usize,
    prod: S,
    base: usize,
    factor: &S,
    coeffs: &mut [S],
) {
    let term = factor.clone() * prod.clone();
    let idx = base + 2 * t;
    coeffs[idx] = if t % 2 == 1 {
        coeffs[idx].clone() - term
    } else {
        coeffs[idx].clone() + term
    };
    for i in from..g.edge_count() {
        let e = &g.edges()[i];
        if used[e.u] || used[e.v] {
            continue;
        }
        used[e.u] = true;
        used[e.v] = true;
        let w2 = e.weight.clone() * e.weight.clone();
        accumulate_matchings(
            g,
            i + 1,
            used,
            t + 1,
            prod.clone() * w2,
            base,
            factor,
            coeffs,
        );
        used[e.u] = false;
        used[e.v] = false;
    }
}

/// Characteristic polynomial coefficients of a forest or unicyclic graph by
/// direct enumeration of elementary subgraphs.
pub fn sachs_coefficients<S: Scalar>(g: &WeightedGraph<S>) -> Result<CharPoly<S>> {
    let n = g.order();
    let mut coeffs = vec![S::zero(); n + 1];
    let mut used = vec![false; n + 1];
    let one = S::one();
    match g.classify() {
        GraphClass::Forest => {
            accumulate_matchings(g, 0, &mut used, 0, S::one(), 0, &one, &mut coeffs);
        }
        GraphClass::Unicyclic { cycle } => {
            accumulate_matchings(g, 0, &mut used, 0, S::one(), 0, &one, &mut coeffs);
            // one component (the cycle itself), one cycle: -2 * product of
            // its edge weights, paired with matchings avoiding its vertices
            let k = cycle.len();
            let cw = crate::inertia::CycleWeights::along_cycle(g, &cycle);
            let factor = -(one.clone() + one.clone()) * cw.product();
            for &v in &cycle {
                used[v] = true;
            }
            accumulate_matchings(g, 0, &mut used, 0, S::one(), k, &factor, &mut coeffs);
        }
        GraphClass::Other => return Err(Error::UnsupportedClass),
    }
    Ok(CharPoly::new(coeffs))
}

/// Determinant by fraction-free (Bareiss) elimination with row swaps.
pub fn determinant<S: Scalar>(mut rows: Vec<Vec<S>>) -> S {
    let n = rows.len();
    if n == 0 {
        return S::one();
    }
    debug_assert!(rows.iter().all(|r| r.len() == n));
    let mut negate = false;
    let mut prev = S::one();
    for k in 0..n - 1 {
        if rows[k][k].is_zero() {
            match (k + 1..n).find(|&r| !rows[r][k].is_zero()) {
                Some(r) => {
                    rows.swap(k, r);
                    negate = !negate;
                }
                None => return S::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = rows[i][j].clone() * rows[k][k].clone()
                    - rows[i][k].clone() * rows[k][j].clone();
                rows[i][j] = num / prev.clone();
            }
        }
        prev = rows[k][k].clone();
    }
    let det = rows[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Characteristic polynomial of a symmetric matrix by exact evaluation of
/// `det(x I - M)` at `x = 0, 1, ..., n` and Newton interpolation. This path
/// shares nothing with the Sachs enumeration and serves as its oracle.
pub fn interpolation_charpoly<S: Scalar>(m: &SymMatrix<S>) -> CharPoly<S> {
    let n = m.dim();
    // sample points 0, 1, ..., n
    let mut points = Vec::with_capacity(n + 1);
    let mut x = S::zero();
    for _ in 0..=n {
        points.push(x.clone());
        x = x + S::one();
    }
    let values: Vec<S> = points
        .iter()
        .map(|x| {
            let rows: Vec<Vec<S>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            if i == j {
                                x.clone() - m.get(i, j).clone()
                            } else {
                                -m.get(i, j).clone()
                            }
                        })
                        .collect()
                })
                .collect();
            determinant(rows)
        })
        .collect();

    // divided differences
    let mut dd = values;
    for level in 1..=n {
        for i in (level..=n).rev() {
            let num = dd[i].clone() - dd[i - 1].clone();
            let den = points[i].clone() - points[i - level].clone();
            dd[i] = num / den;
        }
    }
    // expand Newton form, low-to-high monomial coefficients
    let mut poly = vec![dd[n].clone()];
    for j in (0..n).rev() {
        // poly = poly * (X - points[j]) + dd[j]
        let mut next = vec![S::zero(); poly.len() + 1];
        for (d, c) in poly.iter().enumerate() {
            next[d + 1] = next[d + 1].clone() + c.clone();
            next[d] = next[d].clone() - points[j].clone() * c.clone();
        }
        next[0] = next[0].clone() + dd[j].clone();
        poly = next;
    }
    // monic in descending powers
    let coeffs: Vec<S> = poly.into_iter().rev().collect();
    debug_assert!(coeffs[0].is_one());
    CharPoly::new(coeffs)
}

/// Characteristic polynomial of an arbitrary weighted graph: elementary
/// subgraph enumeration where it applies, interpolation otherwise.
pub fn char_poly<S: Scalar>(g: &WeightedGraph<S>) -> CharPoly<S> {
    match sachs_coefficients(g) {
        Ok(p) => p,
        Err(_) => interpolation_charpoly(&SymMatrix::adjacency(g)),
    }
}
