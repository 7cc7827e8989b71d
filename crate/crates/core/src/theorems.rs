//! Characterization predicates and censuses.
//!
//! Each check evaluates a structural membership predicate (which families /
//! cycle types the instance belongs to) and the corresponding spectral
//! condition computed by the engine, and reports whether the two sides of
//! the equivalence agree on this instance. A verdict with `holds == false`
//! is a counterexample to the characterization and fails the verification
//! sweep.

use crate::canon::{canonical_form, enumerate_unicyclic, CanonicalGraph};
use crate::error::{Error, Result};
use crate::family::{make_family, Family};
use crate::graph::{GraphClass, WeightedGraph};
use crate::inertia::{classify_cycle, inertia, CycleType, CycleWeights, Inertia};
use crate::matching::matching_size_of_subset;
use crate::scalar::Scalar;

/// Outcome of testing one characterization on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub theorem: &'static str,
    pub holds: bool,
    /// The satisfied branch, or the violated clause.
    pub witness: String,
}

fn verdict(theorem: &'static str, p: bool, q: bool, branch: &str) -> Verdict {
    let witness = if p == q {
        format!("consistent: {branch}")
    } else {
        format!("violated: predicate={p} spectral={q} ({branch})")
    };
    Verdict {
        theorem,
        holds: p == q,
        witness,
    }
}

/// Structural digest of a unicyclic instance shared by all checks.
struct UnicyclicView<'a, S> {
    g: &'a WeightedGraph<S>,
    cycle: Vec<usize>,
    n: usize,
    k: usize,
    canon: CanonicalGraph,
    cycle_type: CycleType,
}

impl<'a, S: Scalar> UnicyclicView<'a, S> {
    fn build(g: &'a WeightedGraph<S>) -> Result<Self> {
        let cycle = match g.classify() {
            GraphClass::Unicyclic { cycle } => cycle,
            _ => return Err(Error::NotUnicyclic),
        };
        let cycle_type = classify_cycle(&CycleWeights::along_cycle(g, &cycle));
        Ok(UnicyclicView {
            g,
            n: g.order(),
            k: cycle.len(),
            canon: canonical_form(g),
            cycle,
            cycle_type,
        })
    }

    fn is_pure_cycle(&self) -> bool {
        self.n == self.k
    }
}

fn family_canon(f: Family) -> CanonicalGraph {
    canonical_form(&make_family::<i32>(f).expect("valid family parameters"))
}

fn matches_u1(c: &CanonicalGraph) -> Option<(usize, usize)> {
    let n = c.order();
    if n < 4 {
        return None;
    }
    (0..=n - 3)
        .map(|r| (r, n - 3 - r))
        .find(|&(r, s)| *c == family_canon(Family::U1 { r, s }))
}

fn matches_u2(c: &CanonicalGraph) -> Option<(usize, usize)> {
    let n = c.order();
    if n < 5 {
        return None;
    }
    (0..=n - 4)
        .map(|p| (p, n - 4 - p))
        .find(|&(p, q)| *c == family_canon(Family::U2 { p, q }))
}

fn matches_u3(c: &CanonicalGraph) -> bool {
    c.order() >= 5 && *c == family_canon(Family::U3 { n: c.order() })
}

fn matches_u4(c: &CanonicalGraph) -> bool {
    c.order() >= 6 && *c == family_canon(Family::U4 { n: c.order() })
}

fn matches_h1(c: &CanonicalGraph) -> bool {
    c.order() >= 5 && *c == family_canon(Family::H1 { n: c.order() })
}

fn matches_gstar(c: &CanonicalGraph, k: usize) -> bool {
    let n = c.order();
    n >= k + 2 && *c == family_canon(Family::GStar { n, k })
}

/// Shared analysis for the minimal-index and maximal-nullity checks:
/// either some cycle vertex is saturated in its pendant tree and the
/// branch demands (star tree, matching floor((k-1)/2) outside), or no
/// vertex is saturated and the branch demands the star-on-a-stick shape
/// with a prescribed cycle type.
struct MinIndexAnalysis {
    predicate: bool,
    branch: String,
}

fn min_index_analysis<S: Scalar>(
    view: &UnicyclicView<'_, S>,
    wanted_even: Option<CycleType>,
    wanted_odd: Option<CycleType>,
) -> MinIndexAnalysis {
    let g = view.g;
    let (n, k) = (view.n, view.k);
    let saturated: Vec<(usize, Vec<usize>)> = view
        .cycle
        .iter()
        .filter_map(|&v| {
            let tree = g.pendant_tree_vertices(&view.cycle, v);
            let m = matching_size_of_subset(g, &tree);
            let minus: Vec<usize> = tree.iter().copied().filter(|&u| u != v).collect();
            (matching_size_of_subset(g, &minus) + 1 == m).then_some((v, tree))
        })
        .collect();
    if !saturated.is_empty() {
        for (v, tree) in &saturated {
            let star = matching_size_of_subset(g, tree) == 1;
            let rest: Vec<usize> = (1..=n).filter(|u| !tree.contains(u)).collect();
            let rest_ok = matching_size_of_subset(g, &rest) == (k - 1) / 2;
            if star && rest_ok {
                return MinIndexAnalysis {
                    predicate: true,
                    branch: format!("saturated v={v} with star tree"),
                };
            }
        }
        return MinIndexAnalysis {
            predicate: false,
            branch: "saturated vertex exists but tree/matching shape fails".into(),
        };
    }
    let wanted = if k % 2 == 0 { wanted_even } else { wanted_odd };
    let predicate = match wanted {
        Some(t) => matches_gstar(&view.canon, k) && view.cycle_type == t,
        None => false,
    };
    MinIndexAnalysis {
        predicate,
        branch: format!(
            "no saturated vertex; star-on-a-stick={} cycle type {}",
            matches_gstar(&view.canon, k),
            view.cycle_type
        ),
    }
}

fn girth_in_range<S: Scalar>(view: &UnicyclicView<'_, S>) -> Result<()> {
    if view.k >= 3 && view.k + 2 <= view.n {
        Ok(())
    } else {
        Err(Error::GirthOutOfRange)
    }
}

/// Positive index equal to its lower bound ceil(k/2).
pub fn check_min_positive_index<S: Scalar>(g: &WeightedGraph<S>) -> Result<Verdict> {
    let view = UnicyclicView::build(g)?;
    girth_in_range(&view)?;
    let a = min_index_analysis(&view, Some(CycleType::A), Some(CycleType::D));
    let q = inertia(g).plus == view.k.div_ceil(2);
    Ok(verdict("min-positive-index", a.predicate, q, &a.branch))
}

/// Negative index equal to its lower bound ceil(k/2).
pub fn check_min_negative_index<S: Scalar>(g: &WeightedGraph<S>) -> Result<Verdict> {
    let view = UnicyclicView::build(g)?;
    girth_in_range(&view)?;
    let a = min_index_analysis(&view, Some(CycleType::A), Some(CycleType::C));
    let q = inertia(g).minus == view.k.div_ceil(2);
    Ok(verdict("min-negative-index", a.predicate, q, &a.branch))
}

/// Nullity equal to its upper bound n - 2 ceil(k/2).
pub fn check_max_nullity<S: Scalar>(g: &WeightedGraph<S>) -> Result<Verdict> {
    let view = UnicyclicView::build(g)?;
    girth_in_range(&view)?;
    let a = min_index_analysis(&view, Some(CycleType::A), None);
    let q = inertia(g).zero == view.n - 2 * (view.k.div_ceil(2));
    Ok(verdict("max-nullity", a.predicate, q, &a.branch))
}

fn pure_cycle_in<S: Scalar>(view: &UnicyclicView<'_, S>, table: &[(usize, CycleType)]) -> bool {
    view.is_pure_cycle()
        && table
            .iter()
            .any(|&(k, t)| view.k == k && view.cycle_type == t)
}

fn positive_two_predicate<S: Scalar>(view: &UnicyclicView<'_, S>) -> (bool, String) {
    use CycleType::{A, B, C, D};
    if view.is_pure_cycle() {
        let p = pure_cycle_in(view, &[(3, C), (4, B), (5, D), (6, A)]);
        return (p, format!("cycle k={} type {}", view.k, view.cycle_type));
    }
    if let Some((r, s)) = matches_u1(&view.canon) {
        return (true, format!("triangle with pendants ({r},{s})"));
    }
    if let Some((p, q)) = matches_u2(&view.canon) {
        return (true, format!("square with pendants ({p},{q})"));
    }
    if matches_u3(&view.canon) {
        return (
            view.cycle_type == D,
            format!("triangle-star link, type {}", view.cycle_type),
        );
    }
    if matches_u4(&view.canon) {
        return (
            view.cycle_type == A,
            format!("square-star link, type {}", view.cycle_type),
        );
    }
    (false, "no listed family".into())
}

fn negative_two_predicate<S: Scalar>(view: &UnicyclicView<'_, S>) -> (bool, String) {
    use CycleType::{A, B, C, D};
    if view.is_pure_cycle() {
        let p = pure_cycle_in(view, &[(3, D), (4, B), (5, C), (6, A)]);
        return (p, format!("cycle k={} type {}", view.k, view.cycle_type));
    }
    if let Some((r, s)) = matches_u1(&view.canon) {
        return (true, format!("triangle with pendants ({r},{s})"));
    }
    if let Some((p, q)) = matches_u2(&view.canon) {
        return (true, format!("square with pendants ({p},{q})"));
    }
    if matches_u3(&view.canon) {
        return (
            view.cycle_type == C,
            format!("triangle-star link, type {}", view.cycle_type),
        );
    }
    if matches_u4(&view.canon) {
        return (
            view.cycle_type == A,
            format!("square-star link, type {}", view.cycle_type),
        );
    }
    (false, "no listed family".into())
}

fn nullity_n4_predicate<S: Scalar>(view: &UnicyclicView<'_, S>) -> (bool, String) {
    use CycleType::{A, B};
    if view.is_pure_cycle() {
        let p = pure_cycle_in(view, &[(4, B), (6, A)]);
        return (p, format!("cycle k={} type {}", view.k, view.cycle_type));
    }
    if matches_u1(&view.canon).is_some() || matches_u2(&view.canon).is_some() {
        return (true, "pendants on a triangle or square".into());
    }
    if matches_u4(&view.canon) {
        return (
            view.cycle_type == A,
            format!("square-star link, type {}", view.cycle_type),
        );
    }
    (false, "no listed family".into())
}

/// Exactly two positive eigenvalues.
pub fn check_positive_index_two<S: Scalar>(g: &WeightedGraph<S>) -> Result<Verdict> {
    let view = UnicyclicView::build(g)?;
    let (p, branch) = positive_two_predicate(&view);
    let q = inertia(g).plus == 2;
    Ok(verdict("positive-index-two", p, q, &branch))
}

/// Exactly two negative eigenvalues.
pub fn check_negative_index_two<S: Scalar>(g: &WeightedGraph<S>) -> Result<Verdict> {
    let view = UnicyclicView::build(g)?;
    let (p, branch) = negative_two_predicate(&view);
    let q = inertia(g).minus == 2;
    Ok(verdict("negative-index-two", p, q, &branch))
}

/// Nullity exactly n - 4.
pub fn check_nullity_n4<S: Scalar>(g: &WeightedGraph<S>) -> Result<Verdict> {
    let view = UnicyclicView::build(g)?;
    let (p, branch) = nullity_n4_predicate(&view);
    let q = view.n >= 4 && inertia(g).zero == view.n - 4;
    Ok(verdict("nullity-n-minus-4", p, q, &branch))
}

/// Rank 2 happens only for the cancelling 4-cycle; rank 3 only for the
/// triangle (any weights). Both equivalences are checked at once.
pub fn check_rank_2_3<S: Scalar>(g: &WeightedGraph<S>) -> Result<Verdict> {
    let view = UnicyclicView::build(g)?;
    let rank = inertia(g).rank();
    let p2 = view.is_pure_cycle() && view.k == 4 && view.cycle_type == CycleType::A;
    let p3 = view.is_pure_cycle() && view.k == 3;
    let holds = (p2 == (rank == 2)) && (p3 == (rank == 3));
    let witness = if holds {
        format!("rank={rank} cycle4A={p2} cycle3={p3}")
    } else {
        format!("violated: rank={rank} cycle4A={p2} cycle3={p3}")
    };
    Ok(Verdict {
        theorem: "rank-2-3",
        holds,
        witness,
    })
}

/// Rank 5 exactly for the 5-cycle or the triangle-star link.
pub fn check_rank_5<S: Scalar>(g: &WeightedGraph<S>) -> Result<Verdict> {
    let view = UnicyclicView::build(g)?;
    if view.n < 5 {
        return Err(Error::OrderTooSmall);
    }
    let p = (view.is_pure_cycle() && view.k == 5) || matches_h1(&view.canon);
    let q = inertia(g).rank() == 5;
    Ok(verdict("rank-5", p, q, "5-cycle or triangle-star link"))
}

/// Census filter: at most one of rank / nullity.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CensusFilter {
    pub rank: Option<usize>,
    pub nullity: Option<usize>,
}

impl CensusFilter {
    pub fn rank(r: usize) -> Self {
        CensusFilter {
            rank: Some(r),
            nullity: None,
        }
    }

    pub fn nullity(z: usize) -> Self {
        CensusFilter {
            rank: None,
            nullity: Some(z),
        }
    }

    fn accepts(&self, inertia: &Inertia) -> bool {
        self.rank.is_none_or(|r| inertia.rank() == r)
            && self.nullity.is_none_or(|z| inertia.zero == z)
    }
}

/// One census line: a canonical graph, its unit-weight inertia, and the
/// structural branches it matched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusEntry {
    pub graph: CanonicalGraph,
    pub inertia: Inertia,
    pub tags: Vec<String>,
}

/// Filters the enumerated unicyclic graphs of the given order (unit
/// weights) by inertia, in deterministic canonical order.
pub fn census(n: usize, filter: &CensusFilter) -> Result<Vec<CensusEntry>> {
    let mut out = Vec::new();
    for canon in enumerate_unicyclic(n)? {
        let g: WeightedGraph<i32> = canon.to_graph();
        let ine = inertia(&g);
        if !filter.accepts(&ine) {
            continue;
        }
        let view = UnicyclicView::build(&g).expect("enumerated graphs are unicyclic");
        let mut tags = Vec::new();
        if positive_two_predicate(&view).0 {
            tags.push("pos2".to_string());
        }
        if negative_two_predicate(&view).0 {
            tags.push("neg2".to_string());
        }
        if nullity_n4_predicate(&view).0 {
            tags.push("null4".to_string());
        }
        if view.is_pure_cycle() && view.k == 4 && view.cycle_type == CycleType::A {
            tags.push("rank2".to_string());
        }
        if view.is_pure_cycle() && view.k == 3 {
            tags.push("rank3".to_string());
        }
        if view.n >= 5 && ((view.is_pure_cycle() && view.k == 5) || matches_h1(&view.canon)) {
            tags.push("rank5".to_string());
        }
        if view.k + 2 <= view.n {
            let a = min_index_analysis(&view, Some(CycleType::A), Some(CycleType::D));
            if a.predicate {
                tags.push("min-pos".to_string());
            }
            let a = min_index_analysis(&view, Some(CycleType::A), Some(CycleType::C));
            if a.predicate {
                tags.push("min-neg".to_string());
            }
            let a = min_index_analysis(&view, Some(CycleType::A), None);
            if a.predicate {
                tags.push("max-null".to_string());
            }
        }
        out.push(CensusEntry {
            graph: canon,
            inertia: ine,
            tags,
        });
    }
    Ok(out)
}
