use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use interval_fpt::completion::{interval_completion_with, optimize_completion};
use interval_fpt::deletion::{interval_deletion_with, optimize_deletion};
use interval_fpt::generators::{gadget_type1, gadget_type2, gnp, long_cycle, nested_gadget, random_chordal};
use interval_fpt::io::{read_instance, to_instance_string};
use interval_fpt::oracle::{brute_force_min_completion, brute_force_min_deletion, OracleConfig};
use interval_fpt::props::{check_graph, run_suite, Suite, SuiteReport};
use interval_fpt::record::{write_counterexample, ComparisonVerdict, RunRecord, Verdict};
use interval_fpt::recognition::{find_at, is_chordal, PeoResult};
use interval_fpt::search::SolverConfig;
use interval_fpt::{Error, Graph};

const EXIT_YES: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(name = "interval-fpt", version, about = "Interval vertex deletion and interval completion solvers")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    Deletion,
    Completion,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    GadgetType1,
    GadgetType2,
    NestedGadget,
    LongCycle,
    RandomChordal,
    Gnp,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether the graph is interval and print an obstruction if not.
    Recognize {
        #[arg(long)]
        input: PathBuf,
    },
    /// Run the deletion or completion solver.
    Solve {
        problem: Problem,
        #[arg(long)]
        input: PathBuf,
        /// Budget, or the largest budget tried with --optimize.
        #[arg(long)]
        k: Option<usize>,
        /// Find the smallest budget with a Yes answer.
        #[arg(long)]
        optimize: bool,
        /// Also run the brute-force oracle and compare.
        #[arg(long)]
        compare_oracle: bool,
        /// Write the run record as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Recorded in the run record.
        #[arg(long)]
        seed: Option<u64>,
        /// Explore the root's branches in parallel.
        #[arg(long)]
        parallel: bool,
        /// Where counterexample bundles go on a mismatch.
        #[arg(long, default_value = "counterexamples")]
        report_dir: PathBuf,
    },
    /// Print a generated instance.
    Gen {
        family: Family,
        /// Path length for gadgets.
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        depth: Option<usize>,
        /// Cycle length.
        #[arg(long)]
        len: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        prob: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run a property suite on generated instances, or on one input graph.
    VerifyProps {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

fn load(path: &Path) -> Result<Graph, Error> {
    read_instance(path)
}

fn recognize(input: &Path) -> Result<u8, Error> {
    let g = load(input)?;
    println!("vertices {} edges {}", g.n(), g.m());
    match is_chordal(&g) {
        PeoResult::Hole(c) => {
            let ids: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            println!("chordal: no");
            println!("not interval: hole of length {}: {}", c.len(), ids.join(" "));
            Ok(EXIT_NO)
        }
        PeoResult::Chordal(_) => {
            println!("chordal: yes");
            match find_at(&g) {
                None => {
                    println!("interval");
                    Ok(EXIT_YES)
                }
                Some(w) => {
                    println!("not interval: asteroidal triple {} {} {}", w.a, w.b, w.c);
                    Ok(EXIT_NO)
                }
            }
        }
    }
}

struct SolveArgs {
    problem: Problem,
    k: Option<usize>,
    optimize: bool,
    compare_oracle: bool,
    json: Option<PathBuf>,
    seed: Option<u64>,
    parallel: bool,
    report_dir: PathBuf,
}

fn solve(input: &Path, a: SolveArgs) -> Result<u8, Error> {
    let g = load(input)?;
    let cfg = SolverConfig { parallel: a.parallel, ..Default::default() };
    let non_edges = g.n() * g.n().saturating_sub(1) / 2 - g.m();
    let k = match (a.k, a.optimize) {
        (Some(k), _) => k,
        (None, true) => match a.problem {
            Problem::Deletion => g.n(),
            Problem::Completion => non_edges,
        },
        (None, false) => return Err(Error::InvalidParameter("--k is required without --optimize".into())),
    };
    let mut rec = match (a.problem, a.optimize) {
        (Problem::Deletion, false) => RunRecord::deletion(&g, k, &interval_deletion_with(&g, k, &cfg)?)?,
        (Problem::Completion, false) => RunRecord::completion(&g, k, &interval_completion_with(&g, k, &cfg)?)?,
        (Problem::Deletion, true) => RunRecord::optimized_deletion(&g, &optimize_deletion(&g, k, &cfg)?)?,
        (Problem::Completion, true) => RunRecord::optimized_completion(&g, &optimize_completion(&g, k, &cfg)?)?,
    };
    rec.seed = a.seed;

    let mut oracle_report = None;
    if a.compare_oracle {
        let ocfg = OracleConfig::default();
        let report = match a.problem {
            Problem::Deletion => brute_force_min_deletion(&g, k, &ocfg),
            Problem::Completion => brute_force_min_completion(&g, k, &ocfg),
        };
        match report {
            Ok(r) => {
                rec.compare(&r);
                oracle_report = Some(r);
            }
            Err(e) => {
                eprintln!("warning: oracle comparison skipped: {e}");
                rec.skip_comparison(e.to_string());
            }
        }
    }

    match (&rec.outcome, rec.optimize) {
        (Verdict::Yes, true) => println!("optimum k={}", rec.optimum.unwrap_or(0)),
        (Verdict::Yes, false) => println!("yes (k={k})"),
        (Verdict::No, true) => println!("no solution with k<={k}"),
        (Verdict::No, false) => println!("no (k={k})"),
    }
    if let Some(w) = &rec.solution {
        println!("solution {}", serde_json::to_string(w).expect("witness serialises"));
    }
    let s = &rec.stats;
    println!("nodes {} depth {} max branching {} time {:.2}ms", s.nodes, s.max_depth, s.max_branching, s.elapsed_ms);

    let mut code = if rec.outcome == Verdict::Yes { EXIT_YES } else { EXIT_NO };
    if let Some(cmp) = &rec.oracle {
        match cmp.verdict {
            ComparisonVerdict::Match => println!("oracle MATCH (optimum {:?})", cmp.oracle_optimum),
            ComparisonVerdict::Skipped => println!("oracle SKIPPED"),
            ComparisonVerdict::Mismatch => {
                println!("oracle MISMATCH (optimum {:?})", cmp.oracle_optimum);
                let dir = write_counterexample(&a.report_dir, &g, &rec, oracle_report.as_ref().expect("compared"))?;
                println!("counterexample written to {}", dir.display());
                code = EXIT_MISMATCH;
            }
        }
    }
    if let Some(path) = &a.json {
        std::fs::write(path, rec.to_json())?;
    }
    Ok(code)
}

fn need(v: Option<usize>, name: &str) -> Result<usize, Error> {
    v.ok_or_else(|| Error::InvalidParameter(format!("--{name} is required for this family")))
}

#[allow(clippy::too_many_arguments)]
fn generate(
    family: Family,
    p: Option<usize>,
    depth: Option<usize>,
    len: Option<usize>,
    n: Option<usize>,
    prob: Option<f64>,
    seed: u64,
) -> Result<Graph, Error> {
    let g = match family {
        Family::GadgetType1 => {
            let p = need(p, "p")?;
            if p < 7 {
                return Err(Error::InvalidParameter("type-1 gadgets need p >= 7".into()));
            }
            gadget_type1(p).0
        }
        Family::GadgetType2 => {
            let p = need(p, "p")?;
            if p < 6 {
                return Err(Error::InvalidParameter("type-2 gadgets need p >= 6".into()));
            }
            gadget_type2(p).0
        }
        Family::NestedGadget => {
            let p = need(p, "p")?;
            if p < 7 {
                return Err(Error::InvalidParameter("nested gadgets need p >= 7".into()));
            }
            nested_gadget(need(depth, "depth")?, p).0
        }
        Family::LongCycle => {
            let l = need(len, "len")?;
            if l < 3 {
                return Err(Error::InvalidParameter("cycles need at least 3 vertices".into()));
            }
            long_cycle(l)
        }
        Family::RandomChordal => random_chordal(need(n, "n")?, seed),
        Family::Gnp => {
            let q = prob.ok_or_else(|| Error::InvalidParameter("--prob is required for gnp".into()))?;
            gnp(need(n, "n")?, q, seed)?
        }
    };
    Ok(g)
}

fn print_report(label: &str, rep: &SuiteReport) {
    println!(
        "{label}: {} instances, {} checks, {} vacuous, {} failures",
        rep.instances,
        rep.checks,
        rep.vacuous,
        rep.failures.len()
    );
    if let Some(f) = rep.failures.first() {
        println!("first failure: {} ({})", f.property, f.detail);
        if let Some(s) = f.seed {
            println!("seed {s}");
        }
        print!("{}", f.instance);
    }
    println!("{}", if rep.passed() { "PASS" } else { "FAIL" });
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.cmd {
        Cmd::Recognize { input } => recognize(&input),
        Cmd::Solve { problem, input, k, optimize, compare_oracle, json, seed, parallel, report_dir } => solve(
            &input,
            SolveArgs { problem, k, optimize, compare_oracle, json, seed, parallel, report_dir },
        ),
        Cmd::Gen { family, p, depth, len, n, prob, seed, output } => {
            let text = to_instance_string(&generate(family, p, depth, len, n, prob, seed)?);
            match output {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(EXIT_YES)
        }
        Cmd::VerifyProps { suite, count, seed, input } => {
            let suite: Suite = suite.parse()?;
            let rep = match input {
                Some(path) => check_graph(suite, &load(&path)?),
                None => run_suite(suite, count, seed),
            };
            print_report(&suite.to_string(), &rep);
            Ok(if rep.passed() { EXIT_YES } else { EXIT_NO })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
