//! Machine-readable run records and counterexample bundles.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{EdgeSet, Graph, VertexSet};
use crate::io::to_instance_string;
use crate::oracle::{oracle_is_interval_with, OracleConfig, OracleReport, Witness};
use crate::recognition::is_interval;
use crate::search::{Optimized, Outcome, SearchStats, SolveResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Problem {
    Deletion,
    Completion,
    Recognition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Yes,
    No,
}

/// Interval test of the modified graph by both recognition paths. The
/// clique-arrangement path is `None` when the graph exceeds its size guard.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Verification {
    pub lex_bfs_at_free: bool,
    pub clique_arrangement: Option<bool>,
}

impl Verification {
    pub fn of(h: &Graph) -> Verification {
        Verification {
            lex_bfs_at_free: is_interval(h),
            clique_arrangement: oracle_is_interval_with(h, &OracleConfig::default()).ok(),
        }
    }

    pub fn passed(&self) -> bool {
        self.lex_bfs_at_free && self.clique_arrangement != Some(false)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComparisonVerdict {
    Match,
    Mismatch,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleComparison {
    pub verdict: ComparisonVerdict,
    pub oracle_optimum: Option<usize>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunRecord {
    pub problem: Problem,
    /// Budget for a decision run, upper limit for an optimisation run.
    pub k: usize,
    pub optimize: bool,
    pub outcome: Verdict,
    /// Smallest Yes budget found by an optimisation run.
    pub optimum: Option<usize>,
    pub solution: Option<Witness>,
    pub stats: SearchStats,
    pub verification: Option<Verification>,
    pub seed: Option<u64>,
    pub oracle: Option<OracleComparison>,
}

impl RunRecord {
    fn build(problem: Problem, g: &Graph, k: usize, optimize: bool, outcome: Outcome<Witness>, stats: SearchStats) -> Result<RunRecord> {
        let (verdict, solution, verification) = match outcome {
            Outcome::Yes(w) => {
                let h = match &w {
                    Witness::Vertices(f) => g.remove_vertices(f)?,
                    Witness::Edges(f) => g.add_edges(f)?,
                };
                (Verdict::Yes, Some(w), Some(Verification::of(&h)))
            }
            Outcome::No => (Verdict::No, None, None),
        };
        let optimum = if optimize { solution.as_ref().map(Witness::len) } else { None };
        Ok(RunRecord { problem, k, optimize, outcome: verdict, optimum, solution, stats, verification, seed: None, oracle: None })
    }

    pub fn deletion(g: &Graph, k: usize, r: &SolveResult<VertexSet>) -> Result<RunRecord> {
        let out = match &r.outcome {
            Outcome::Yes(f) => Outcome::Yes(Witness::Vertices(f.clone())),
            Outcome::No => Outcome::No,
        };
        RunRecord::build(Problem::Deletion, g, k, false, out, r.stats.clone())
    }

    pub fn completion(g: &Graph, k: usize, r: &SolveResult<EdgeSet>) -> Result<RunRecord> {
        let out = match &r.outcome {
            Outcome::Yes(f) => Outcome::Yes(Witness::Edges(f.clone())),
            Outcome::No => Outcome::No,
        };
        RunRecord::build(Problem::Completion, g, k, false, out, r.stats.clone())
    }

    pub fn optimized_deletion(g: &Graph, o: &Optimized<VertexSet>) -> Result<RunRecord> {
        let out = o.solution.clone().map_or(Outcome::No, |f| Outcome::Yes(Witness::Vertices(f)));
        RunRecord::build(Problem::Deletion, g, o.k_max, true, out, o.stats.clone())
    }

    pub fn optimized_completion(g: &Graph, o: &Optimized<EdgeSet>) -> Result<RunRecord> {
        let out = o.solution.clone().map_or(Outcome::No, |f| Outcome::Yes(Witness::Edges(f)));
        RunRecord::build(Problem::Completion, g, o.k_max, true, out, o.stats.clone())
    }

    /// Solver answer expressed as "smallest Yes budget" where that is known.
    /// A decision run only knows whether the optimum is at most `k`.
    pub fn compare(&mut self, oracle: &OracleReport) {
        let opt = oracle.optimum();
        let agrees = if self.optimize {
            self.optimum == opt
        } else {
            (self.outcome == Verdict::Yes) == opt.is_some_and(|o| o <= self.k)
        };
        self.oracle = Some(OracleComparison {
            verdict: if agrees { ComparisonVerdict::Match } else { ComparisonVerdict::Mismatch },
            oracle_optimum: opt,
            note: None,
        });
    }

    pub fn skip_comparison(&mut self, reason: String) {
        self.oracle = Some(OracleComparison { verdict: ComparisonVerdict::Skipped, oracle_optimum: None, note: Some(reason) });
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serialises")
    }
}

/// Writes `instance.txt`, `solver.json` and `oracle.json` into a fresh
/// numbered subdirectory of `dir` and returns its path.
pub fn write_counterexample(dir: &Path, g: &Graph, solver: &RunRecord, oracle: &OracleReport) -> Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let mut i = 0usize;
    let case = loop {
        let p = dir.join(format!("case-{i:04}"));
        match std::fs::create_dir(&p) {
            Ok(()) => break p,
            Err(e) if e.kind() == std::io::ErrorKind::AlreadyExists => i += 1,
            Err(e) => return Err(e.into()),
        }
    };
    std::fs::write(case.join("instance.txt"), to_instance_string(g))?;
    std::fs::write(case.join("solver.json"), solver.to_json())?;
    std::fs::write(case.join("oracle.json"), serde_json::to_string_pretty(oracle)?)?;
    Ok(case)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deletion::interval_deletion;
    use crate::generators::long_cycle;
    use crate::oracle::brute_force_min_deletion;

    #[test]
    fn record_round_trip_and_strictness() {
        let g = long_cycle(5);
        let r = interval_deletion(&g, 1).unwrap();
        let mut rec = RunRecord::deletion(&g, 1, &r).unwrap();
        assert!(rec.verification.as_ref().unwrap().passed());
        rec.compare(&brute_force_min_deletion(&g, 2, &OracleConfig::default()).unwrap());
        assert_eq!(rec.oracle.as_ref().unwrap().verdict, ComparisonVerdict::Match);
        let back: RunRecord = serde_json::from_str(&rec.to_json()).unwrap();
        assert_eq!(back, rec);
        let mut v: serde_json::Value = serde_json::from_str(&rec.to_json()).unwrap();
        v["extra"] = serde_json::json!(1);
        assert!(serde_json::from_value::<RunRecord>(v).is_err());
    }

    #[test]
    fn bundle_layout() {
        let dir = tempfile::tempdir().unwrap();
        let g = long_cycle(4);
        let r = interval_deletion(&g, 0).unwrap();
        let rec = RunRecord::deletion(&g, 0, &r).unwrap();
        let o = brute_force_min_deletion(&g, 1, &OracleConfig::default()).unwrap();
        let a = write_counterexample(dir.path(), &g, &rec, &o).unwrap();
        let b = write_counterexample(dir.path(), &g, &rec, &o).unwrap();
        assert_ne!(a, b);
        for f in ["instance.txt", "solver.json", "oracle.json"] {
            assert!(a.join(f).exists());
        }
    }
}
