//! Verification sweep: every enumerated unicyclic graph up to a given
//! order, with unit weights plus seeded random rational weightings, is run
//! through the engine, the congruence oracle, the characterization checks,
//! and the structural invariants. Any failed check is a build-breaking
//! counterexample.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::canon::enumerate_unicyclic;
use crate::charpoly::{interpolation_charpoly, sachs_coefficients};
use crate::congruence::{congruence_inertia, SymMatrix};
use crate::error::{Error, Result};
use crate::graph::GraphClass;
use crate::inertia::{inertia, saturated_split, Inertia};
use crate::matching;
use crate::theorems;
use crate::{Rat, RatGraph};

/// Pass/fail counters for one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckTally {
    pub name: &'static str,
    pub pass: u64,
    pub fail: u64,
    /// Description of the first failing instance, if any.
    pub first_failure: Option<String>,
}

/// Aggregated result of a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub order: usize,
    pub samples: usize,
    pub seed: u64,
    pub graphs: usize,
    pub instances: usize,
    pub checks: Vec<CheckTally>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.fail == 0)
    }

    pub fn total_fail(&self) -> u64 {
        self.checks.iter().map(|c| c.fail).sum()
    }
}

struct Tallies {
    checks: Vec<CheckTally>,
}

impl Tallies {
    fn new(names: &[&'static str]) -> Self {
        Tallies {
            checks: names
                .iter()
                .map(|&name| CheckTally {
                    name,
                    pass: 0,
                    fail: 0,
                    first_failure: None,
                })
                .collect(),
        }
    }

    fn record(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        let tally = self
            .checks
            .iter_mut()
            .find(|c| c.name == name)
            .expect("check name registered");
        if ok {
            tally.pass += 1;
        } else {
            tally.fail += 1;
            if tally.first_failure.is_none() {
                tally.first_failure = Some(detail());
            }
        }
    }
}

const CHECK_NAMES: &[&str] = &[
    "engine-vs-oracle",
    "sum-rule",
    "bipartite-symmetry",
    "index-difference",
    "girth-lower-bound",
    "nullity-upper-bound",
    "pendant-deletion",
    "twin-deletion",
    "interlacing",
    "diagonal-congruence",
    "saturated-agreement",
    "matching-vertex-deletion",
    "charpoly-routes-agree",
    "charpoly-nullity",
    "verdict-min-positive",
    "verdict-min-negative",
    "verdict-max-nullity",
    "verdict-positive-two",
    "verdict-negative-two",
    "verdict-nullity-n4",
    "verdict-rank-2-3",
    "verdict-rank-5",
];

/// Random nonzero weight with small numerator and denominator.
pub fn random_weight(rng: &mut impl Rng) -> Rat {
    const NUMS: [i64; 10] = [-5, -4, -3, -2, -1, 1, 2, 3, 4, 5];
    let p = NUMS[rng.gen_range(0..NUMS.len())];
    let q = rng.gen_range(1i64..=5);
    Rat::new(p.into(), q.into())
}

/// Same structure, fresh random weights.
pub fn random_weighting(g: &RatGraph, rng: &mut impl Rng) -> RatGraph {
    g.map_weights(|_, _, _| random_weight(rng))
        .expect("random weights are nonzero")
}

/// Runs the sweep with the production engine.
pub fn run_verification(order: usize, samples: usize, seed: u64) -> Result<VerificationReport> {
    run_with_engine(order, samples, seed, inertia)
}

/// Runs the sweep with an injected engine (used to prove the sweep can
/// actually fail).
pub fn run_with_engine(
    order: usize,
    samples: usize,
    seed: u64,
    engine: impl Fn(&RatGraph) -> Inertia,
) -> Result<VerificationReport> {
    if order > 9 {
        return Err(Error::OrderTooLarge(order));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tallies = Tallies::new(CHECK_NAMES);
    let mut graphs = 0;
    let mut instances = 0;
    for n in 3..=order {
        for canon in enumerate_unicyclic(n)? {
            graphs += 1;
            let unit: RatGraph = canon.to_graph();
            check_instance(&unit, &engine, &mut tallies, &mut rng);
            instances += 1;
            for _ in 0..samples {
                let g = random_weighting(&unit, &mut rng);
                check_instance(&g, &engine, &mut tallies, &mut rng);
                instances += 1;
            }
        }
    }
    Ok(VerificationReport {
        order,
        samples,
        seed,
        graphs,
        instances,
        checks: tallies.checks,
    })
}

fn check_instance(
    g: &RatGraph,
    engine: &impl Fn(&RatGraph) -> Inertia,
    t: &mut Tallies,
    rng: &mut impl Rng,
) {
    let n = g.order();
    let cycle = match g.classify() {
        GraphClass::Unicyclic { cycle } => cycle,
        _ => unreachable!("sweep corpus is unicyclic"),
    };
    let k = cycle.len();
    let ceil_half_k = k.div_ceil(2);
    let here = || crate::io::format_graph(g).replace('\n', "; ");

    let ine = engine(g);
    let adj = SymMatrix::adjacency(g);
    let oracle = congruence_inertia(&adj);
    t.record("engine-vs-oracle", ine == oracle, || {
        format!("engine {ine} oracle {oracle} on {}", here())
    });
    t.record("sum-rule", ine.order() == n, || {
        format!("{ine} on {}", here())
    });
    if k % 2 == 0 {
        t.record("bipartite-symmetry", ine.plus == ine.minus, || {
            format!("{ine} on {}", here())
        });
    }
    let diff = ine.plus.abs_diff(ine.minus);
    t.record(
        "index-difference",
        diff <= 1 && (diff == 0 || k % 2 == 1),
        || format!("{ine} girth {k} on {}", here()),
    );
    if k + 2 <= n {
        t.record(
            "girth-lower-bound",
            ine.plus >= ceil_half_k && ine.minus >= ceil_half_k,
            || format!("{ine} girth {k} on {}", here()),
        );
        t.record(
            "nullity-upper-bound",
            ine.zero <= n - 2 * ceil_half_k,
            || format!("{ine} girth {k} on {}", here()),
        );
    }

    for v in g.pendant_vertices() {
        let u = g.neighbors(v).next().expect("pendant neighbor");
        let rest = g.remove_vertices(&[u, v]);
        let expected = engine(&rest) + Inertia::new(1, 1, 0);
        t.record("pendant-deletion", ine == expected, || {
            format!("pendant {v}: {ine} vs {expected} on {}", here())
        });
    }

    for (a, b) in g.pendant_twins() {
        let smaller = g.remove_vertices(&[a]);
        let si = engine(&smaller);
        t.record(
            "twin-deletion",
            si.plus == ine.plus && si.minus == ine.minus,
            || format!("twins ({a},{b}): {ine} vs {si} on {}", here()),
        );
    }

    for v in 1..=n {
        let smaller = g.remove_vertices(&[v]);
        let si = engine(&smaller);
        let ok = ine.plus >= si.plus
            && ine.plus - si.plus <= 1
            && ine.minus >= si.minus
            && ine.minus - si.minus <= 1;
        t.record("interlacing", ok, || {
            format!("delete {v}: {ine} vs {si} on {}", here())
        });
    }

    let idx = rng.gen_range(0..n);
    let factor = random_weight(rng);
    let scaled = adj.scale_index(idx, &factor);
    t.record(
        "diagonal-congruence",
        congruence_inertia(&scaled) == oracle,
        || format!("scale index {idx} by {factor} on {}", here()),
    );

    let splits: Vec<Inertia> = cycle
        .iter()
        .filter_map(|&v| {
            let tree = g.pendant_tree_vertices(&cycle, v);
            saturated_split(g, &tree, v, n)
        })
        .collect();
    t.record(
        "saturated-agreement",
        splits.windows(2).all(|w| w[0] == w[1]) && splits.first().is_none_or(|&s| s == ine),
        || format!("splits {splits:?} vs {ine} on {}", here()),
    );

    let m = matching::max_matching_unicyclic(g)
        .expect("corpus is unicyclic")
        .size;
    for v in 1..=n {
        let mut alive = vec![true; n + 1];
        alive[0] = false;
        alive[v] = false;
        let mv = matching::masked_max_matching(g, &alive, None)
            .expect("subgraph stays within class")
            .len();
        t.record("matching-vertex-deletion", mv == m || mv + 1 == m, || {
            format!("m={m} m(G-{v})={mv} on {}", here())
        });
    }

    let sachs = sachs_coefficients(g).expect("corpus is unicyclic");
    let interp = interpolation_charpoly(&adj);
    t.record("charpoly-routes-agree", sachs == interp, || {
        format!("coefficient mismatch on {}", here())
    });
    t.record("charpoly-nullity", sachs.nullity() == ine.zero, || {
        format!(
            "poly {} vs engine {} on {}",
            sachs.nullity(),
            ine.zero,
            here()
        )
    });

    if k + 2 <= n {
        record_verdict(
            t,
            "verdict-min-positive",
            theorems::check_min_positive_index(g),
            &here,
        );
        record_verdict(
            t,
            "verdict-min-negative",
            theorems::check_min_negative_index(g),
            &here,
        );
        record_verdict(
            t,
            "verdict-max-nullity",
            theorems::check_max_nullity(g),
            &here,
        );
    }
    record_verdict(
        t,
        "verdict-positive-two",
        theorems::check_positive_index_two(g),
        &here,
    );
    record_verdict(
        t,
        "verdict-negative-two",
        theorems::check_negative_index_two(g),
        &here,
    );
    record_verdict(
        t,
        "verdict-nullity-n4",
        theorems::check_nullity_n4(g),
        &here,
    );
    record_verdict(t, "verdict-rank-2-3", theorems::check_rank_2_3(g), &here);
    if n >= 5 {
        record_verdict(t, "verdict-rank-5", theorems::check_rank_5(g), &here);
    }
}

fn record_verdict(
    t: &mut Tallies,
    name: &'static str,
    verdict: Result<theorems::Verdict>,
    here: &impl Fn() -> String,
) {
    match verdict {
        Ok(v) => t.record(name, v.holds, || format!("{} on {}", v.witness, here())),
        Err(e) => t.record(name, false, || format!("error {e} on {}", here())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let report = run_verification(5, 5, 42).unwrap();
        assert!(report.passed(), "{:?}", report.checks);
        assert_eq!(report.graphs, 1 + 2 + 5);
        assert_eq!(report.instances, 8 * 6);
    }

    #[test]
    fn deterministic_given_seed() {
        let a = run_verification(5, 3, 7).unwrap();
        let b = run_verification(5, 3, 7).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn corrupted_engine_is_caught() {
        let report = run_with_engine(4, 2, 1, |g| {
            let mut i = inertia(g);
            i.plus += 1; // deliberately wrong
            i.zero = i.zero.saturating_sub(1);
            i
        })
        .unwrap();
        assert!(!report.passed());
        assert!(report.total_fail() > 0);
        let oracle_check = report
            .checks
            .iter()
            .find(|c| c.name == "engine-vs-oracle")
            .unwrap();
        assert!(oracle_check.fail > 0);
        assert!(oracle_check.first_failure.is_some());
    }

    #[test]
    fn rejects_large_orders() {
        assert_eq!(
            run_verification(10, 1, 1).err(),
            Some(Error::OrderTooLarge(10))
        );
    }
}
