//! Shared search bookkeeping for the branching solvers.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeKind {
    SmallObstruction,
    Triangulation,
    BigAt,
    RipeCycle,
    Ripening,
}

/// Counters collected while searching. Branching degrees are the number of
/// candidate branches generated at a node, whether or not they fit the
/// remaining budget.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchStats {
    pub nodes: u64,
    pub max_depth: usize,
    pub max_branching: usize,
    pub max_branching_small_obstruction: usize,
    pub max_branching_triangulation: usize,
    pub max_branching_big_at: usize,
    pub max_branching_ripe_cycle: usize,
    pub max_branching_ripening: usize,
    pub elapsed_ms: f64,
}

impl SearchStats {
    pub fn branching(&mut self, kind: NodeKind, degree: usize) {
        self.max_branching = self.max_branching.max(degree);
        let slot = match kind {
            NodeKind::SmallObstruction => &mut self.max_branching_small_obstruction,
            NodeKind::Triangulation => &mut self.max_branching_triangulation,
            NodeKind::BigAt => &mut self.max_branching_big_at,
            NodeKind::RipeCycle => &mut self.max_branching_ripe_cycle,
            NodeKind::Ripening => &mut self.max_branching_ripening,
        };
        *slot = (*slot).max(degree);
    }

    pub fn merge(&mut self, o: &SearchStats) {
        self.nodes += o.nodes;
        self.max_depth = self.max_depth.max(o.max_depth);
        self.max_branching = self.max_branching.max(o.max_branching);
        self.max_branching_small_obstruction =
            self.max_branching_small_obstruction.max(o.max_branching_small_obstruction);
        self.max_branching_triangulation = self.max_branching_triangulation.max(o.max_branching_triangulation);
        self.max_branching_big_at = self.max_branching_big_at.max(o.max_branching_big_at);
        self.max_branching_ripe_cycle = self.max_branching_ripe_cycle.max(o.max_branching_ripe_cycle);
        self.max_branching_ripening = self.max_branching_ripening.max(o.max_branching_ripening);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Explore the root's branches on the rayon pool. The answer is the
    /// same as the sequential one; node counts may be larger.
    pub parallel: bool,
    /// Abort with a work-bound error after this many search nodes.
    pub node_limit: Option<u64>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { parallel: false, node_limit: Some(50_000_000) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome<T> {
    Yes(T),
    No,
}

impl<T> Outcome<T> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Outcome::Yes(_))
    }

    pub fn solution(&self) -> Option<&T> {
        match self {
            Outcome::Yes(t) => Some(t),
            Outcome::No => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveResult<T> {
    pub outcome: Outcome<T>,
    pub stats: SearchStats,
}

/// Result of running a decision solver for k = 0, 1, ... until the first Yes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Optimized<T> {
    pub k_max: usize,
    /// Smallest budget with a Yes answer, if any within `k_max`.
    pub optimum: Option<usize>,
    pub solution: Option<T>,
    /// Accumulated over every budget tried.
    pub stats: SearchStats,
}

pub(crate) struct Tracker<'a> {
    pub stats: SearchStats,
    pub cfg: &'a SolverConfig,
}

impl<'a> Tracker<'a> {
    pub fn new(cfg: &'a SolverConfig) -> Self {
        Tracker { stats: SearchStats::default(), cfg }
    }

    pub fn enter(&mut self, depth: usize) -> Result<()> {
        self.stats.nodes += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        if let Some(limit) = self.cfg.node_limit {
            if self.stats.nodes > limit {
                return Err(Error::WorkBound(format!("search exceeded {limit} nodes")));
            }
        }
        Ok(())
    }
}

pub(crate) fn timed<T>(f: impl FnOnce() -> Result<(Outcome<T>, SearchStats)>) -> Result<SolveResult<T>> {
    let start = Instant::now();
    let (outcome, mut stats) = f()?;
    stats.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(SolveResult { outcome, stats })
}
