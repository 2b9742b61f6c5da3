//! Branching solver for interval completion (minimum fill-in to an interval
//! supergraph).

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::deletion::path_separator;
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, Graph, VertexId, VertexSet};
use crate::graph::holes::shortest_hole_idx;
use crate::obstructions::{small_at_idx, AtKind, BigAt};
use crate::recognition::is_interval;
use crate::search::{timed, NodeKind, Optimized, Outcome, SearchStats, SolveResult, SolverConfig, Tracker};
use crate::structure::{find_ripe_at, RipeOutcome};

pub type CompletionResult = SolveResult<EdgeSet>;

/// Position of a fill edge relative to a big AT.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FillClass {
    /// `c` joined to `v_i` (`0 <= i <= p+1`).
    Long { c: VertexId, v: VertexId },
    /// `au`/`bu` for type 1, `aw`/`bu` for type 2.
    Cross { x: VertexId, y: VertexId },
    /// Two path vertices, including `ab`.
    Bottom { x: VertexId, y: VertexId },
}

/// Classifies a non-edge of the AT template; `None` for anything else.
pub fn classify_fill(at: &BigAt, e: Edge) -> Option<FillClass> {
    let p = at.p();
    let pos = |x: VertexId| (0..=p + 1).find(|&i| at.v(i) == x);
    let (x, y) = (e.u(), e.v());
    let other = |z: VertexId| if x == z { Some(y) } else if y == z { Some(x) } else { None };
    if let Some(o) = other(at.c) {
        if pos(o).is_some() {
            return Some(FillClass::Long { c: at.c, v: o });
        }
    }
    let hub_a = match at.kind {
        AtKind::Type1 => at.u,
        AtKind::Type2 => at.w.expect("type 2 has w"),
    };
    if e == Edge::new(at.a, hub_a) || e == Edge::new(at.b, at.u) {
        return Some(FillClass::Cross { x, y });
    }
    match (pos(x), pos(y)) {
        (Some(i), Some(j)) if i.abs_diff(j) > 1 => Some(FillClass::Bottom { x, y }),
        _ => None,
    }
}

/// All polygon triangulations of a chordless cycle, given in cyclic order.
///
/// The edge between the first and last vertex lies in exactly one triangle;
/// choosing its apex splits the polygon in two.
pub fn enumerate_cycle_triangulations(cycle: &[VertexId]) -> Result<Vec<EdgeSet>> {
    if cycle.len() < 4 {
        return Err(Error::InvalidParameter(format!("cycle of length {} has no chords", cycle.len())));
    }
    Ok(triangulate(cycle))
}

fn triangulate(poly: &[VertexId]) -> Vec<EdgeSet> {
    let m = poly.len() - 1;
    if m < 2 {
        return vec![EdgeSet::new()];
    }
    let mut out = Vec::new();
    for j in 1..m {
        let left = triangulate(&poly[..=j]);
        let right = triangulate(&poly[j..]);
        for l in &left {
            for r in &right {
                let mut t: EdgeSet = l.union(r).copied().collect();
                if j > 1 {
                    t.insert(Edge::new(poly[0], poly[j]));
                }
                if j < m - 1 {
                    t.insert(Edge::new(poly[j], poly[m]));
                }
                out.push(t);
            }
        }
    }
    out
}

fn missing(g: &Graph, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> EdgeSet {
    edges.into_iter().filter(|&(x, y)| x != y && !g.has_edge(x, y)).map(|(x, y)| Edge::new(x, y)).collect()
}

/// The fill batches tried at a ripe AT, in order.
pub fn big_at_branches(g: &Graph, at: &BigAt, inner: &VertexSet) -> Result<Vec<EdgeSet>> {
    let p = at.p();
    let mut out: Vec<EdgeSet> = Vec::new();
    let push = |s: EdgeSet, out: &mut Vec<EdgeSet>| {
        if !s.is_empty() && !out.contains(&s) {
            out.push(s);
        }
    };
    let x = path_separator(g, at)?;

    let cross_a = match at.kind {
        AtKind::Type1 => at.u,
        AtKind::Type2 => at.w.expect("type 2 has w"),
    };
    push(missing(g, [(at.a, cross_a)]), &mut out);
    push(missing(g, [(at.b, at.u)]), &mut out);

    let mut long: Vec<usize> = (1..=6.min(p)).collect();
    long.extend(p.saturating_sub(5).max(1)..=p);
    for i in long {
        push(missing(g, [(at.c, at.v(i))]), &mut out);
    }
    if at.kind == AtKind::Type2 {
        push(missing(g, [(at.c, at.a)]), &mut out);
        push(missing(g, [(at.c, at.b)]), &mut out);
    }

    let mut s1 = missing(g, (2..=p).map(|i| (at.a, at.v(i))));
    s1.extend(missing(g, [(at.a, at.b)]));
    push(s1, &mut out);
    let mut s2 = missing(g, (1..p).map(|i| (at.b, at.v(i))));
    s2.extend(missing(g, [(at.a, at.b)]));
    push(s2, &mut out);

    push(missing(g, inner.iter().map(|&f| (at.c, f))), &mut out);

    if let Some(x) = x {
        let comp = c_component(g, at)?;
        let s3 = missing(g, comp.iter().flat_map(|&c2| x.iter().map(move |&y| (c2, y))));
        push(s3, &mut out);
    }
    Ok(out)
}

/// Component containing `c` of the graph induced by vertices adjacent to
/// `u` with no neighbour on the path `a, v_1, ..., v_p, b`.
pub fn c_component(g: &Graph, at: &BigAt) -> Result<VertexSet> {
    let ui = g.idx(at.u)?;
    let mut path = g.empty_mask();
    for i in 0..=at.p() + 1 {
        path.insert(g.idx(at.v(i))?);
    }
    let mut u_set = g.adj(ui).clone();
    for y in g.adj(ui).ones() {
        if path.contains(y) || g.adj(y).intersection(&path).next().is_some() {
            u_set.set(y, false);
        }
    }
    let ci = g.idx(at.c)?;
    if !u_set.contains(ci) {
        return Err(Error::StructureViolation("c is not in U".into()));
    }
    let labels = g.component_labels(&u_set);
    Ok(u_set.ones().filter(|&y| labels[y] == labels[ci]).map(|y| g.id(y)).collect())
}

struct Solver<'a> {
    t: Tracker<'a>,
}

impl<'a> Solver<'a> {
    fn explore(&mut self, g: &Graph, k: usize, depth: usize, branches: Vec<EdgeSet>) -> Result<Option<EdgeSet>> {
        let feasible: Vec<EdgeSet> = branches.into_iter().filter(|b| !b.is_empty() && b.len() <= k).collect();
        if depth == 0 && self.t.cfg.parallel && feasible.len() > 1 {
            let cfg = self.t.cfg;
            let results: Vec<(Result<Option<EdgeSet>>, SearchStats)> = feasible
                .par_iter()
                .map(|b| {
                    let mut s = Solver { t: Tracker::new(cfg) };
                    let r = g.add_edges(b).and_then(|h| s.rec(&h, k - b.len(), depth + 1));
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
            let h = g.add_edges(&b)?;
            if let Some(mut f) = self.rec(&h, k - b.len(), depth + 1)? {
                f.extend(b);
                return Ok(Some(f));
            }
        }
        Ok(None)
    }

    fn rec(&mut self, g: &Graph, k: usize, depth: usize) -> Result<Option<EdgeSet>> {
        self.t.enter(depth)?;
        if is_interval(g) {
            return Ok(Some(EdgeSet::new()));
        }
        if k == 0 {
            return Ok(None);
        }
        if let Some(hole) = shortest_hole_idx(g, 4) {
            let ids: Vec<VertexId> = hole.iter().map(|&i| g.id(i)).collect();
            let tris = enumerate_cycle_triangulations(&ids)?;
            self.t.stats.branching(NodeKind::Triangulation, tris.len());
            if ids.len() - 3 > k {
                return Ok(None);
            }
            return self.explore(g, k, depth, tris);
        }
        if let Some(z) = small_at_idx(g) {
            let mut branches = Vec::new();
            for (i, &x) in z.iter().enumerate() {
                for &y in &z[i + 1..] {
                    if !g.has_edge_idx(x, y) {
                        branches.push(EdgeSet::from([Edge::new(g.id(x), g.id(y))]));
                    }
                }
            }
            branches.sort();
            self.t.stats.branching(NodeKind::SmallObstruction, branches.len());
            return self.explore(g, k, depth, branches);
        }
        let ripe = match find_ripe_at(g, k)? {
            RipeOutcome::NoSolution => return Ok(None),
            RipeOutcome::Ripe(r) => r,
        };
        let ctx = &ripe.context;
        let branches = big_at_branches(g, &ctx.at, &ctx.inner)?;
        self.t.stats.branching(NodeKind::BigAt, branches.len());
        self.explore(g, k, depth, branches)
    }
}

pub fn interval_completion(g: &Graph, k: usize) -> Result<CompletionResult> {
    interval_completion_with(g, k, &SolverConfig::default())
}

pub fn interval_completion_with(g: &Graph, k: usize, cfg: &SolverConfig) -> Result<CompletionResult> {
    timed(|| {
        let mut s = Solver { t: Tracker::new(cfg) };
        let f = s.rec(g, k, 0)?;
        if let Some(f) = &f {
            if f.len() > k || f.iter().any(|e| g.has_edge(e.u(), e.v())) || !is_interval(&g.add_edges(f)?) {
                return Err(Error::StructureViolation("fill set does not produce an interval graph".into()));
            }
        }
        Ok((f.map_or(Outcome::No, Outcome::Yes), s.t.stats))
    })
}

/// Smallest `k <= k_max` with a Yes answer.
pub fn optimize_completion(g: &Graph, k_max: usize, cfg: &SolverConfig) -> Result<Optimized<EdgeSet>> {
    let mut stats = SearchStats::default();
    for k in 0..=k_max {
        let r = interval_completion_with(g, k, cfg)?;
        stats.merge(&r.stats);
        stats.elapsed_ms += r.stats.elapsed_ms;
        if let Outcome::Yes(f) = r.outcome {
            return Ok(Optimized { k_max, optimum: Some(k), solution: Some(f), stats });
        }
    }
    Ok(Optimized { k_max, optimum: None, solution: None, stats })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gadget_type1, gadget_type2, long_cycle};
    use crate::oracle::{brute_force_min_completion, OracleConfig};
    use crate::recognition::chordal;

    fn ids(n: u32) -> Vec<VertexId> {
        (0..n).map(VertexId).collect()
    }

    #[test]
    fn catalan_counts() {
        let expect = [2usize, 5, 14, 42, 132, 429];
        for (l, &c) in (4..=9).zip(&expect) {
            let t = enumerate_cycle_triangulations(&ids(l)).unwrap();
            assert_eq!(t.len(), c);
            assert!(t.iter().all(|s| s.len() == l as usize - 3));
            let distinct: std::collections::BTreeSet<_> = t.iter().collect();
            assert_eq!(distinct.len(), c);
        }
        assert!(enumerate_cycle_triangulations(&ids(3)).is_err());
    }

    #[test]
    fn triangulations_are_chordal() {
        let g = long_cycle(7);
        for t in enumerate_cycle_triangulations(&ids(7)).unwrap() {
            assert!(chordal(&g.add_edges(&t).unwrap()));
        }
    }

    #[test]
    fn cycles_need_len_minus_three() {
        assert_eq!(interval_completion(&long_cycle(4), 1).unwrap().outcome.solution().map(|f| f.len()), Some(1));
        assert_eq!(interval_completion(&long_cycle(9), 5).unwrap().outcome, Outcome::No);
        assert!(interval_completion(&long_cycle(9), 6).unwrap().outcome.is_yes());
    }

    #[test]
    fn gadget_matches_oracle() {
        let (g, _) = gadget_type1(7);
        let o = brute_force_min_completion(&g, 3, &OracleConfig { completion_max_vertices: 11, ..Default::default() })
            .unwrap()
            .optimum();
        let s = optimize_completion(&g, 3, &SolverConfig::default()).unwrap();
        assert_eq!(s.optimum, o);
        assert_eq!(o, Some(1));
    }

    #[test]
    fn fill_classes() {
        let (_, at) = gadget_type1(7);
        assert!(matches!(classify_fill(&at, Edge::new(at.c, at.v(3))), Some(FillClass::Long { .. })));
        assert!(matches!(classify_fill(&at, Edge::new(at.a, at.u)), Some(FillClass::Cross { .. })));
        assert!(matches!(classify_fill(&at, Edge::new(at.a, at.b)), Some(FillClass::Bottom { .. })));
        assert_eq!(classify_fill(&at, Edge::new(at.v(1), at.v(2))), None);
        let (_, at) = gadget_type2(7);
        assert!(matches!(classify_fill(&at, Edge::new(at.a, at.w.unwrap())), Some(FillClass::Cross { .. })));
        assert!(matches!(classify_fill(&at, Edge::new(at.c, at.a)), Some(FillClass::Long { .. })));
    }

    #[test]
    fn branch_counts() {
        let (g, at) = gadget_type1(14);
        let inner: VertexSet = (3..=12).map(|i| at.v(i)).collect();
        assert_eq!(big_at_branches(&g, &at, &inner).unwrap().len(), 18);
        let (g, at) = gadget_type2(14);
        let inner: VertexSet = (3..=12).map(|i| at.v(i)).collect();
        assert_eq!(big_at_branches(&g, &at, &inner).unwrap().len(), 20);
        let (g, at) = gadget_type1(7);
        let inner: VertexSet = (3..=5).map(|i| at.v(i)).collect();
        assert_eq!(big_at_branches(&g, &at, &inner).unwrap().len(), 12);
    }
}
