//! Command-line front end: read edge-list files, compute and cross-check
//! inertia, classify cycles, run censuses and verification sweeps.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 parse/input error,
//! 3 oracle mismatch.

#![forbid(unsafe_code)]

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use graph_inertia::io::{format_rational, parse_graph};
use graph_inertia::{
    census, char_poly, classify_cycle, congruence_inertia, inertia, CensusFilter, CycleWeights,
    Error, Inertia, RatGraph, SymMatrix, VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "graph-inertia",
    version,
    about = "Exact inertia of weighted graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print `i+ i- i0 rank` for a graph file.
    Inertia {
        file: PathBuf,
        /// Also run the congruence oracle and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Classify a weighted cycle file as Type A/B/C/D.
    ClassifyCycle { file: PathBuf },
    /// Print the characteristic polynomial coefficients of a graph file.
    Charpoly { file: PathBuf },
    /// List unicyclic graphs of one order, optionally filtered by rank or
    /// nullity (unit weights).
    Census {
        #[arg(long)]
        order: usize,
        #[arg(long, conflicts_with = "nullity")]
        rank: Option<usize>,
        #[arg(long)]
        nullity: Option<usize>,
    },
    /// Sweep all unicyclic graphs up to an order against the oracle, the
    /// characterization checks, and the structural invariants.
    Verify {
        #[arg(long)]
        order: usize,
        /// Random weightings per graph (in addition to unit weights).
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Inertia { file, oracle } => {
            let g = read_graph(&file)?;
            let ine = inertia(&g);
            let oracle_result = oracle.then(|| congruence_inertia(&SymMatrix::adjacency(&g)));
            let (text, code) = render_inertia(ine, oracle_result);
            print!("{text}");
            Ok(ExitCode::from(code))
        }
        Command::ClassifyCycle { file } => {
            let g = read_graph(&file)?;
            let cw = CycleWeights::from_cycle_graph(&g)?;
            println!("{}", render_cycle(&cw));
            Ok(ExitCode::SUCCESS)
        }
        Command::Charpoly { file } => {
            let g = read_graph(&file)?;
            let coeffs: Vec<String> = char_poly(&g).coeffs().iter().map(format_rational).collect();
            println!("{}", coeffs.join(" "));
            Ok(ExitCode::SUCCESS)
        }
        Command::Census {
            order,
            rank,
            nullity,
        } => {
            let filter = CensusFilter { rank, nullity };
            let entries = census(order, &filter)?;
            let mut out = String::new();
            for e in &entries {
                let tags = if e.tags.is_empty() {
                    "-".to_string()
                } else {
                    e.tags.join(",")
                };
                writeln!(
                    out,
                    "{} in=({},{},{}) rank={} tags={}",
                    e.graph.edge_string(),
                    e.inertia.plus,
                    e.inertia.minus,
                    e.inertia.zero,
                    e.inertia.rank(),
                    tags
                )
                .expect("write to string");
            }
            write!(out, "count={}", entries.len()).expect("write to string");
            println!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            order,
            samples,
            seed,
            json,
        } => {
            let report = graph_inertia::run_verification(order, samples, seed)?;
            if json {
                println!("{}", render_report_json(&report));
            } else {
                print!("{}", render_report_text(&report));
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn read_graph(path: &Path) -> Result<RatGraph, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_graph(&text)
}

/// First line is always the engine's `i+ i- i0 rank`; with the oracle the
/// second line repeats the oracle's triple and says MATCH or MISMATCH,
/// which drives exit code 3.
fn render_inertia(ine: Inertia, oracle: Option<Inertia>) -> (String, u8) {
    let mut text = format!("{} {} {} {}\n", ine.plus, ine.minus, ine.zero, ine.rank());
    let mut code = 0;
    if let Some(oc) = oracle {
        let verdict = if oc == ine {
            "MATCH"
        } else {
            code = 3;
            "MISMATCH"
        };
        let _ = writeln!(
            text,
            "oracle {} {} {} {} {}",
            oc.plus,
            oc.minus,
            oc.zero,
            oc.rank(),
            verdict
        );
    }
    (text, code)
}

fn render_cycle(cw: &CycleWeights<graph_inertia::Rat>) -> String {
    let k = cw.len();
    let t = classify_cycle(cw);
    let w = format_rational(&cw.product());
    match cw.alternating_products() {
        Some((odd, even)) => format!(
            "k={k} type={t} W={w} We={} Wo={}",
            format_rational(&even),
            format_rational(&odd)
        ),
        None => format!("k={k} type={t} W={w}"),
    }
}

fn render_report_text(report: &VerificationReport) -> String {
    let mut out = format!(
        "verify order={} samples={} seed={}\ngraphs={} instances={}\n",
        report.order, report.samples, report.seed, report.graphs, report.instances
    );
    for c in &report.checks {
        let _ = writeln!(out, "check {} pass={} fail={}", c.name, c.pass, c.fail);
        if let Some(f) = &c.first_failure {
            let _ = writeln!(out, "  first-failure: {f}");
        }
    }
    let _ = writeln!(
        out,
        "result {} failures={}",
        if report.passed() { "PASS" } else { "FAIL" },
        report.total_fail()
    );
    out
}

fn render_report_json(report: &VerificationReport) -> String {
    let checks: Vec<serde_json::Value> = report
        .checks
        .iter()
        .map(|c| {
            let mut v = serde_json::json!({
                "name": c.name,
                "pass": c.pass,
                "fail": c.fail,
            });
            if let Some(f) = &c.first_failure {
                v["first_failure"] = serde_json::Value::String(f.clone());
            }
            v
        })
        .collect();
    serde_json::json!({
        "order": report.order,
        "samples": report.samples,
        "seed": report.seed,
        "graphs": report.graphs,
        "instances": report.instances,
        "checks": checks,
        "result": if report.passed() { "PASS" } else { "FAIL" },
        "failures": report.total_fail(),
    })
    .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mismatch_exit_code() {
        let engine = Inertia::new(2, 2, 1);
        let (text, code) = render_inertia(engine, Some(Inertia::new(3, 1, 1)));
        assert_eq!(code, 3);
        assert!(text.contains("MISMATCH"));
        let (text, code) = render_inertia(engine, Some(engine));
        assert_eq!(code, 0);
        assert!(text.contains("MATCH"));
        let (text, code) = render_inertia(engine, None);
        assert_eq!(code, 0);
        assert_eq!(text, "2 2 1 4\n");
    }
}
