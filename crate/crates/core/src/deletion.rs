//! Branching solver for interval vertex deletion.

use rayon::prelude::*;

use crate::cycles::{classify_cycle, cycle_separator_capped, find_clean_cycle, CleanCycle};
use crate::error::{Error, Result};
use crate::graph::{min_separator_idx, Graph, VertexId, VertexSet};
use crate::obstructions::{find_small_obstruction, small_at_idx, BigAt};
use crate::recognition::{chordal, is_interval};
use crate::search::{timed, NodeKind, Optimized, Outcome, SearchStats, SolveResult, SolverConfig, Tracker};
use crate::structure::{find_ripe_at, RipeOutcome};

pub type DeletionResult = SolveResult<VertexSet>;

/// Single-vertex branches for a ripe AT: terminals and hubs, the first six
/// and the last six path vertices, duplicates dropped.
pub fn single_vertex_branches(at: &BigAt) -> Vec<VertexId> {
    let p = at.p();
    let mut out = vec![at.a, at.b, at.c, at.u];
    out.extend(at.w);
    out.extend((1..=6.min(p)).map(|i| at.v(i)));
    out.extend((0..6).filter(|&j| j < p).map(|j| at.v(p - j)));
    let mut seen = VertexSet::new();
    out.retain(|v| seen.insert(*v));
    out
}

/// `{w ∈ N[v_j] \ N(c) : 5 <= j <= p - 4}` in `g`.
pub fn middle_batch(g: &Graph, at: &BigAt) -> Result<VertexSet> {
    let p = at.p();
    let ci = g.idx(at.c)?;
    let mut m = g.empty_mask();
    for j in 5..=p.saturating_sub(4) {
        m.union_with(&g.closed_nbhd(g.idx(at.v(j))?));
    }
    m.difference_with(g.adj(ci));
    Ok(g.ids_of(&m))
}

/// Minimum `v_6`–`v_{p-5}` separator in `g - N(c)`; only defined for `p >= 13`.
pub fn path_separator(g: &Graph, at: &BigAt) -> Result<Option<VertexSet>> {
    let p = at.p();
    if p < 13 {
        return Ok(None);
    }
    let mut allowed = g.adj(g.idx(at.c)?).clone();
    allowed.toggle_range(..);
    let s = g.idx(at.v(6))?;
    let t = g.idx(at.v(p - 5))?;
    let cut = min_separator_idx(g, s, t, &allowed)
        .ok_or_else(|| Error::StructureViolation("v_6 and v_{p-5} adjacent".into()))?;
    Ok(Some(g.ids_of(&cut)))
}

struct Solver<'a> {
    t: Tracker<'a>,
}

#[derive(Clone, Copy)]
enum Rec {
    Chordal,
    General,
}

impl<'a> Solver<'a> {
    fn new(cfg: &'a SolverConfig) -> Self {
        Solver { t: Tracker::new(cfg) }
    }

    fn call(&mut self, rec: Rec, g: &Graph, k: usize, depth: usize) -> Result<Option<VertexSet>> {
        match rec {
            Rec::Chordal => self.chordal_rec(g, k, depth),
            Rec::General => self.general_rec(g, k, depth),
        }
    }

    /// Tries each deletion set in order; the first success wins.
    fn explore(
        &mut self,
        g: &Graph,
        k: usize,
        depth: usize,
        branches: Vec<VertexSet>,
        rec: Rec,
    ) -> Result<Option<VertexSet>> {
        let feasible: Vec<VertexSet> = branches.into_iter().filter(|b| !b.is_empty() && b.len() <= k).collect();
        if depth == 0 && self.t.cfg.parallel && feasible.len() > 1 {
            let cfg = self.t.cfg;
            let results: Vec<(Result<Option<VertexSet>>, SearchStats)> = feasible
                .par_iter()
                .map(|b| {
                    let mut s = Solver::new(cfg);
                    let r = g.remove_vertices(b).and_then(|h| s.call(rec, &h, k - b.len(), depth + 1));
                    (r, s.t.stats)
                })
                .collect();
            let mut answer = None;
            for (b, (r, st)) in feasible.iter().zip(results) {
                self.t.stats.merge(&st);
                if answer.is_none() {
                    if let Some(f) = r? {
                        answer = Some(f.union(b).copied().collect());
                    }
                }
            }
            return Ok(answer);
        }
        for b in feasible {
            let h = g.remove_vertices(&b)?;
            if let Some(mut f) = self.call(rec, &h, k - b.len(), depth + 1)? {
                f.extend(b);
                return Ok(Some(f));
            }
        }
        Ok(None)
    }

    fn chordal_rec(&mut self, g: &Graph, k: usize, depth: usize) -> Result<Option<VertexSet>> {
        self.t.enter(depth)?;
        if is_interval(g) {
            return Ok(Some(VertexSet::new()));
        }
        if k == 0 {
            return Ok(None);
        }
        let ripe = match find_ripe_at(g, k)? {
            RipeOutcome::NoSolution => return Ok(None),
            RipeOutcome::Ripe(r) => r,
        };
        let at = &ripe.context.at;
        let mut branches: Vec<VertexSet> =
            single_vertex_branches(at).into_iter().map(|v| [v].into()).collect();
        let s = middle_batch(g, at)?;
        if !s.is_empty() && at.p() >= 9 {
            branches.push(s);
        }
        if let Some(x) = path_separator(g, at)? {
            branches.push(x);
        }
        self.t.stats.branching(NodeKind::BigAt, branches.len());
        self.explore(g, k, depth, branches, Rec::Chordal)
    }

    fn general_rec(&mut self, g: &Graph, k: usize, depth: usize) -> Result<Option<VertexSet>> {
        self.t.enter(depth)?;
        if is_interval(g) {
            return Ok(Some(VertexSet::new()));
        }
        if k == 0 {
            return Ok(None);
        }
        if let Some(ob) = find_small_obstruction(g) {
            let branches: Vec<VertexSet> = ob.vertices().into_iter().map(|v| [v].into()).collect();
            self.t.stats.branching(NodeKind::SmallObstruction, branches.len());
            return self.explore(g, k, depth, branches, Rec::General);
        }
        if chordal(g) {
            // no enter() here: chordal_rec counts this node itself
            self.t.stats.nodes -= 1;
            return self.chordal_rec(g, k, depth);
        }
        let cc = find_clean_cycle(g)?
            .ok_or_else(|| Error::StructureViolation("non-chordal graph without a long hole".into()))?;
        if cc.ripe {
            let cycle: VertexSet = cc.structure.cycle.iter().copied().collect();
            let region = cc.structure.region(g)?;
            let mut branches = vec![cycle];
            if let Some(x) = cycle_separator_capped(g, &cc.structure, &region, k)? {
                branches.push(x);
            }
            self.t.stats.branching(NodeKind::RipeCycle, 2);
            return self.explore(g, k, depth, branches, Rec::General);
        }
        self.t.stats.branching(NodeKind::Ripening, 1);
        let h = ripening_region(g, &cc)?;
        if !chordal(&h) || small_at_idx(&h).is_some() {
            return Err(Error::StructureViolation("ripening region is not clean and chordal".into()));
        }
        let mut forced = None;
        for kk in 1..=k {
            if let Some(f) = self.chordal_rec(&h, kk, depth + 1)? {
                forced = Some(f);
                break;
            }
        }
        let Some(f) = forced else { return Ok(None) };
        let rest = g.remove_vertices(&f)?;
        Ok(self.general_rec(&rest, k - f.len(), depth + 1)?.map(|mut more| {
            more.extend(f);
            more
        }))
    }
}

/// First window `N[v_{i-1}] ∪ N[v_i] ∪ N[v_{i+1}] \ D(C)` that is not interval.
fn ripening_region(g: &Graph, cc: &CleanCycle) -> Result<Graph> {
    let cs = &cc.structure;
    let p = cs.len();
    for i in 0..p {
        let window: VertexSet = [cs.cycle[(i + p - 1) % p], cs.cycle[i], cs.cycle[(i + 1) % p]].into();
        let mut s = g.closed_neighborhood_of_set(&window)?;
        s.retain(|v| !cs.dominating.contains(v));
        let h = g.induced_subgraph(&s)?;
        if !is_interval(&h) {
            return Ok(h);
        }
    }
    Err(Error::StructureViolation("clean cycle is not ripe but no window contains an AT".into()))
}

fn check_solution(g: &Graph, k: usize, out: &Outcome<VertexSet>) -> Result<()> {
    if let Outcome::Yes(f) = out {
        if f.len() > k || !is_interval(&g.remove_vertices(f)?) {
            return Err(Error::StructureViolation("deletion set does not produce an interval graph".into()));
        }
    }
    Ok(())
}

/// Chordal case. Requires `g` chordal and free of small obstructions.
pub fn chordal_interval(g: &Graph, k: usize) -> Result<DeletionResult> {
    chordal_interval_with(g, k, &SolverConfig::default())
}

pub fn chordal_interval_with(g: &Graph, k: usize, cfg: &SolverConfig) -> Result<DeletionResult> {
    if !chordal(g) {
        return Err(Error::StructureViolation("chordal solver called on a non-chordal graph".into()));
    }
    if small_at_idx(g).is_some() {
        return Err(Error::StructureViolation("chordal solver called with a small AT present".into()));
    }
    timed(|| {
        let mut s = Solver::new(cfg);
        let f = s.chordal_rec(g, k, 0)?;
        let out = f.map_or(Outcome::No, Outcome::Yes);
        check_solution(g, k, &out)?;
        Ok((out, s.t.stats))
    })
}

pub fn interval_deletion(g: &Graph, k: usize) -> Result<DeletionResult> {
    interval_deletion_with(g, k, &SolverConfig::default())
}

pub fn interval_deletion_with(g: &Graph, k: usize, cfg: &SolverConfig) -> Result<DeletionResult> {
    timed(|| {
        let mut s = Solver::new(cfg);
        let f = s.general_rec(g, k, 0)?;
        let out = f.map_or(Outcome::No, Outcome::Yes);
        check_solution(g, k, &out)?;
        Ok((out, s.t.stats))
    })
}

/// Smallest `k <= k_max` with a Yes answer.
pub fn optimize_deletion(g: &Graph, k_max: usize, cfg: &SolverConfig) -> Result<Optimized<VertexSet>> {
    let mut stats = SearchStats::default();
    for k in 0..=k_max {
        let r = interval_deletion_with(g, k, cfg)?;
        stats.merge(&r.stats);
        stats.elapsed_ms += r.stats.elapsed_ms;
        if let Outcome::Yes(f) = r.outcome {
            return Ok(Optimized { k_max, optimum: Some(k), solution: Some(f), stats });
        }
    }
    Ok(Optimized { k_max, optimum: None, solution: None, stats })
}

/// Classifies a cycle for callers that only have its vertex order.
pub fn cycle_branch_sets(g: &Graph, cycle: &[VertexId], k: usize) -> Result<Vec<VertexSet>> {
    let cs = classify_cycle(g, cycle)?;
    let region = cs.region(g)?;
    let mut out = vec![cycle.iter().copied().collect::<VertexSet>()];
    if let Some(x) = cycle_separator_capped(g, &cs, &region, k)? {
        out.push(x);
    }
    Ok(out)
}
