//! Seeded property suites for the structural lemmas, run by the CLI's
//! `verify-props` command and by the acceptance tests.
//!
//! Every check takes a graph and either passes, fails with a message, or is
//! vacuous on that graph. A failing instance is shrunk by greedily deleting
//! vertices while the same check keeps failing.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::completion::{big_at_branches, classify_fill, enumerate_cycle_triangulations, interval_completion, FillClass};
use crate::cycles::{classify_cycle, cycle_separator_capped, find_clean_cycle, min_cycle_separator, CycleStructure};
use crate::error::Error;
use crate::graph::{find_chordless_cycle, shortest_hole_len, Edge, EdgeSet, Graph, VertexId, VertexSet};
use crate::generators::{audit_instance, gadget_type1, gadget_type2, long_cycle, nested_gadget, rng};
use crate::io::to_instance_string;
use crate::oracle::for_each_subset;
use crate::obstructions::{min_big_at, small_at_idx, BigAt};
use crate::recognition::{chordal, is_interval};
use crate::search::Outcome;
use crate::structure::{build_context, find_ripe_at, AtContext, RipeOutcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Structure,
    Cycles,
    Completion,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "structure" => Ok(Suite::Structure),
            "cycles" => Ok(Suite::Cycles),
            "completion" => Ok(Suite::Completion),
            _ => Err(Error::InvalidParameter(format!("unknown suite {s:?}"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Structure => "structure",
            Suite::Cycles => "cycles",
            Suite::Completion => "completion",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Pass,
    Fail(String),
    Vacuous,
}

impl Check {
    fn from_bool(ok: bool, msg: impl FnOnce() -> String) -> Check {
        if ok {
            Check::Pass
        } else {
            Check::Fail(msg())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyFailure {
    pub property: String,
    pub detail: String,
    /// Seed of the generated instance, absent for supplied graphs.
    pub seed: Option<u64>,
    /// Shrunk instance in the plain-text format.
    pub instance: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub instances: usize,
    pub checks: usize,
    pub vacuous: usize,
    pub failures: Vec<PropertyFailure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn absorb(&mut self, other: SuiteReport) {
        self.instances += other.instances;
        self.checks += other.checks;
        self.vacuous += other.vacuous;
        self.failures.extend(other.failures);
    }
}

type CheckFn = Box<dyn Fn(&Graph) -> Check>;

fn run_checks(g: &Graph, seed: Option<u64>, checks: Vec<(&'static str, CheckFn)>) -> SuiteReport {
    let mut rep = SuiteReport { instances: 1, ..Default::default() };
    for (name, check) in checks {
        rep.checks += 1;
        match check(g) {
            Check::Pass => {}
            Check::Vacuous => rep.vacuous += 1,
            Check::Fail(detail) => {
                let small = shrink(g, |h| matches!(check(h), Check::Fail(_)));
                rep.failures.push(PropertyFailure {
                    property: name.to_string(),
                    detail,
                    seed,
                    instance: to_instance_string(&small),
                });
            }
        }
    }
    rep
}

/// Greedy vertex deletion keeping `fails` true.
pub fn shrink(g: &Graph, fails: impl Fn(&Graph) -> bool) -> Graph {
    let mut cur = g.clone();
    let mut changed = true;
    while changed {
        changed = false;
        for &v in cur.vertices().to_vec().iter() {
            let h = cur.remove_vertices(&[v].into()).expect("vertex present");
            if fails(&h) {
                cur = h;
                changed = true;
                break;
            }
        }
    }
    cur
}

// ---------------------------------------------------------------- generators

struct Builder {
    edges: Vec<(u32, u32)>,
    n: u32,
}

impl Builder {
    fn from(g: &Graph) -> Builder {
        Builder { edges: g.edges().map(|e| (e.u().0, e.v().0)).collect(), n: g.n() as u32 }
    }

    fn graph(&self) -> Graph {
        Graph::from_edges(self.n as usize, &self.edges).expect("builder keeps edges valid")
    }

    /// Adds vertices with the given neighbourhoods (later vertices may name
    /// earlier new ones) if `accept` holds for the result.
    fn try_add(&mut self, nbrs: &[Vec<u32>], accept: impl Fn(&Graph) -> bool) -> bool {
        let mut e = self.edges.clone();
        for (k, ns) in nbrs.iter().enumerate() {
            let x = self.n + k as u32;
            let mut ns = ns.clone();
            ns.sort_unstable();
            ns.dedup();
            e.extend(ns.into_iter().filter(|&y| y != x).map(|y| (y, x)));
        }
        let g = Graph::from_edges((self.n as usize) + nbrs.len(), &e).expect("valid decoration");
        if accept(&g) {
            self.edges = e;
            self.n += nbrs.len() as u32;
            true
        } else {
            false
        }
    }
}

fn clean_chordal(g: &Graph) -> bool {
    chordal(g) && small_at_idx(g).is_none() && !is_interval(g)
}

fn random_clique(g: &Graph, r: &mut impl Rng) -> Vec<u32> {
    let y = r.gen_range(0..g.n());
    let mut nb: Vec<usize> = g.adj(y).ones().collect();
    nb.shuffle(r);
    let mut clique = vec![y];
    for z in nb {
        if clique.iter().all(|&c| g.has_edge_idx(c, z)) {
            clique.push(z);
        }
    }
    let keep = r.gen_range(1..=clique.len());
    clique.truncate(keep);
    clique.into_iter().map(|i| g.id(i).0).collect()
}

fn twin(g: &Graph, r: &mut impl Rng) -> Vec<u32> {
    let y = r.gen_range(0..g.n());
    let mut ns: Vec<u32> = g.adj(y).ones().map(|i| g.id(i).0).collect();
    ns.push(g.id(y).0);
    ns
}

/// Chordless path from `u` (or `w`) to `a`, or from `u` to `b`, through new
/// vertices all adjacent to `v_1` (resp. `v_p`).
fn ladder(at: &BigAt, n: u32, len: usize, toward_a: bool) -> Vec<Vec<u32>> {
    let p = at.p();
    let (hub, end, anchor) = if toward_a {
        (at.w.unwrap_or(at.u), at.a, at.v(1))
    } else {
        (at.u, at.b, at.v(p))
    };
    let mut out = Vec::new();
    for k in 0..len {
        let mut ns = vec![anchor.0];
        ns.push(if k == 0 { hub.0 } else { n + k as u32 - 1 });
        if k + 1 == len {
            ns.push(end.0);
        }
        out.push(ns);
    }
    out
}

/// Decorated gadget or nested gadget. The second value is the nesting
/// depth, when known.
pub fn structure_instance(seed: u64) -> (Graph, Option<usize>) {
    let mut r = rng(seed);
    let (g, at, depth) = match r.gen_range(0..3) {
        0 => {
            let (g, at) = gadget_type1(r.gen_range(7..=12));
            (g, at, None)
        }
        1 => {
            let (g, at) = gadget_type2(r.gen_range(6..=12));
            (g, at, None)
        }
        _ => {
            let d = r.gen_range(0..=2);
            let (g, ats) = nested_gadget(d, r.gen_range(7..=9));
            let at = ats[0].clone();
            (g, at, Some(d))
        }
    };
    let mut b = Builder::from(&g);
    for _ in 0..r.gen_range(0..=8) {
        let cur = b.graph();
        let p = at.p();
        let nbrs: Vec<Vec<u32>> = match r.gen_range(0..5) {
            0 => vec![twin(&cur, &mut r)],
            1 => vec![random_clique(&cur, &mut r)],
            2 => {
                let len = r.gen_range(1..=3);
                let st = r.gen_range(0..=p + 2 - len);
                vec![(st..st + len).map(|i| at.v(i).0).collect()]
            }
            3 => {
                let mut ns: Vec<u32> = (1..=p).map(|i| at.v(i).0).collect();
                ns.push(at.c.0);
                ns.extend(cur.adj(cur.index(at.c).unwrap()).ones().map(|i| cur.id(i).0));
                vec![ns]
            }
            _ => ladder(&at, b.n, r.gen_range(2..=3), r.gen_bool(0.5)),
        };
        // nested gadgets keep their depth only if nothing is added inside
        if depth.is_some() {
            continue;
        }
        b.try_add(&nbrs, clean_chordal);
    }
    (b.graph(), depth)
}

/// Long cycle with dominating, window and nested-cycle decorations; the
/// base cycle stays a shortest hole and no small obstruction appears.
pub fn cycle_instance(seed: u64) -> Graph {
    let mut r = rng(seed);
    let len = r.gen_range(9..=13usize);
    let base = long_cycle(len);
    let mut b = Builder::from(&base);
    let cyc: Vec<u32> = (0..len as u32).collect();
    let accept = |g: &Graph| {
        shortest_hole_len(g) == Some(len)
            && small_at_idx(g).is_none()
            && classify_cycle(g, &cyc.iter().map(|&v| VertexId(v)).collect::<Vec<_>>()).is_ok()
    };
    for _ in 0..r.gen_range(0..=7) {
        let cur = b.graph();
        let cs = classify_cycle(&cur, &cyc.iter().map(|&v| VertexId(v)).collect::<Vec<_>>()).expect("kept valid");
        let dom: Vec<u32> = cs.dominating.iter().map(|v| v.0).collect();
        let nbrs: Vec<Vec<u32>> = match r.gen_range(0..5) {
            0 => {
                let nc = cur.closed_neighborhood_of_set(&cyc.iter().map(|&v| VertexId(v)).collect()).unwrap();
                vec![nc.into_iter().map(|v| v.0).collect()]
            }
            1 | 2 => {
                let w = r.gen_range(1..=3u32);
                let st = r.gen_range(0..len as u32);
                let mut ns: Vec<u32> = (0..w).map(|k| (st + k) % len as u32).collect();
                ns.extend(&dom);
                // join some earlier window vertices on overlapping windows
                for x in len as u32..b.n {
                    let xi = cur.index(VertexId(x)).unwrap();
                    let overlap = ns.iter().any(|&y| y < len as u32 && cur.has_edge_idx(xi, y as usize));
                    if overlap && r.gen_bool(0.5) {
                        ns.push(x);
                    }
                }
                vec![ns]
            }
            3 => vec![random_clique(&cur, &mut r)],
            _ => {
                // a cycle of the same length inside S_i or D_i
                let i = r.gen_range(0..len as u32);
                let both = r.gen_bool(0.5);
                let n0 = b.n;
                (0..len as u32)
                    .map(|k| {
                        let mut ns = vec![i];
                        if both {
                            ns.push((i + 1) % len as u32);
                        }
                        ns.extend(&dom);
                        if k > 0 {
                            ns.push(n0 + k - 1);
                        }
                        if k + 1 == len as u32 {
                            ns.push(n0);
                        }
                        ns
                    })
                    .collect()
            }
        };
        b.try_add(&nbrs, accept);
    }
    b.graph()
}

pub fn completion_instance(seed: u64) -> (Graph, usize) {
    let mut r = rng(seed);
    match r.gen_range(0..3) {
        0 => (audit_instance(r.gen_range(5..=9), seed), r.gen_range(0..=3)),
        1 => {
            let (g, at) = if r.gen_bool(0.5) { gadget_type1(r.gen_range(7..=10)) } else { gadget_type2(r.gen_range(6..=9)) };
            let mut b = Builder::from(&g);
            for _ in 0..r.gen_range(1..=3) {
                let nbrs = ladder(&at, b.n, r.gen_range(2..=3), r.gen_bool(0.5));
                b.try_add(&nbrs, clean_chordal);
            }
            (b.graph(), 1)
        }
        _ => {
            let (g, _) = gadget_type1(r.gen_range(13..=16));
            let mut b = Builder::from(&g);
            for _ in 0..r.gen_range(0..=3) {
                let cur = b.graph();
                let nbrs = vec![random_clique(&cur, &mut r)];
                b.try_add(&nbrs, clean_chordal);
            }
            (b.graph(), 1)
        }
    }
}

// ---------------------------------------------------------------- structure

fn min_at_context(g: &Graph) -> Result<(BigAt, AtContext), Check> {
    if !chordal(g) {
        return Err(Check::Fail("precondition: graph is not chordal".into()));
    }
    if small_at_idx(g).is_some() {
        return Err(Check::Fail("precondition: small AT present".into()));
    }
    let at = min_big_at(g).ok_or_else(|| Check::Fail("precondition: no big AT".into()))?;
    let ctx = build_context(g, &at).map_err(|e| Check::Fail(e.to_string()))?;
    Ok((at, ctx))
}

fn hubs(at: &BigAt) -> Vec<VertexId> {
    let mut h = vec![at.u];
    h.extend(at.w);
    h
}

fn path_interior(at: &BigAt) -> Vec<VertexId> {
    at.path.clone()
}

macro_rules! ctx_or_return {
    ($g:expr) => {
        match min_at_context($g) {
            Ok(x) => x,
            Err(c) => return c,
        }
    };
}

fn structure_checks(nesting: Option<usize>) -> Vec<(&'static str, CheckFn)> {
    let mut v: Vec<(&'static str, CheckFn)> = vec![
        (
            "c-neighbours see the hubs",
            Box::new(|g| {
                let (at, _) = ctx_or_return!(g);
                let av = at.vertices();
                let bad = g.neighborhood(at.c).unwrap().into_iter().filter(|x| !av.contains(x)).find(|&x| {
                    hubs(&at).iter().any(|&h| !g.has_edge(x, h))
                });
                Check::from_bool(bad.is_none(), || format!("{bad:?} adjacent to c but not to a hub"))
            }),
        ),
        (
            "c-neighbours touching the path dominate",
            Box::new(|g| {
                let (at, ctx) = ctx_or_return!(g);
                let bad = g.neighborhood(at.c).unwrap().into_iter().find(|&x| {
                    path_interior(&at).iter().any(|&v| g.has_edge(x, v)) && !ctx.dominating.contains(&x)
                });
                Check::from_bool(bad.is_none(), || format!("{bad:?} sees c and the path without dominating"))
            }),
        ),
        (
            "outside N[c] at most three consecutive path neighbours",
            Box::new(|g| {
                let (at, _) = ctx_or_return!(g);
                let p = at.p();
                let av = at.vertices();
                for &x in g.vertices() {
                    if av.contains(&x) || x == at.c || g.has_edge(x, at.c) {
                        continue;
                    }
                    let hits: Vec<usize> = (0..=p + 1).filter(|&i| g.has_edge(x, at.v(i))).collect();
                    let ok = hits.len() <= 3 && hits.windows(2).all(|w| w[1] == w[0] + 1);
                    if !ok {
                        return Check::Fail(format!("{x} sees path positions {hits:?}"));
                    }
                }
                Check::Pass
            }),
        ),
        (
            "dominating set is a clique joined to N(c)",
            Box::new(|g| {
                let (at, ctx) = ctx_or_return!(g);
                let nc = g.neighborhood(at.c).unwrap();
                for &d in &ctx.dominating {
                    for &y in ctx.dominating.iter().chain(&nc) {
                        if y != d && !g.has_edge(d, y) {
                            return Check::Fail(format!("dominating {d} misses {y}"));
                        }
                    }
                }
                Check::Pass
            }),
        ),
        (
            "inner region joined to the dominating set",
            Box::new(|g| {
                let (_, ctx) = ctx_or_return!(g);
                for &d in &ctx.dominating {
                    if let Some(&y) = ctx.inner.iter().find(|&&y| y != d && !g.has_edge(d, y)) {
                        return Check::Fail(format!("dominating {d} misses inner {y}"));
                    }
                }
                Check::Pass
            }),
        ),
        (
            "dominating and boundary sets separate the inner region",
            Box::new(|g| {
                let (_, ctx) = ctx_or_return!(g);
                let sep: VertexSet =
                    ctx.dominating.iter().chain(&ctx.boundary_b).chain(&ctx.boundary_e).copied().collect();
                let rest = g.remove_vertices(&sep).unwrap();
                for comp in rest.components() {
                    if comp.iter().any(|v| ctx.inner.contains(v)) {
                        if let Some(x) = comp.iter().find(|v| !ctx.inner.contains(v)) {
                            return Check::Fail(format!("{x} reaches the inner region around the separator"));
                        }
                    }
                }
                Check::Pass
            }),
        ),
        (
            "an AT inside the inner region has a path vertex dominating it",
            Box::new(|g| {
                let (at, ctx) = ctx_or_return!(g);
                let h = ctx.inner_graph(g).unwrap();
                if is_interval(&h) {
                    return Check::Vacuous;
                }
                let Some(inner_at) = min_big_at(&h) else { return Check::Vacuous };
                let p = at.p();
                let ok = (2..p).any(|i| inner_at.path.iter().all(|&y| g.has_edge(at.v(i), y)));
                Check::from_bool(ok, || format!("no v_i dominates inner AT {:?}", inner_at.vertices()))
            }),
        ),
    ];
    v.push((
        "ripe-AT search stops within the nesting depth",
        Box::new(move |g| {
            if !clean_chordal(g) {
                return Check::Vacuous;
            }
            match find_ripe_at(g, g.n()) {
                Ok(RipeOutcome::Ripe(r)) => match nesting {
                    Some(d) => Check::from_bool(r.depth <= d, || format!("depth {} > nesting {d}", r.depth)),
                    None => Check::from_bool(r.depth <= g.n() / 11, || format!("depth {}", r.depth)),
                },
                Ok(RipeOutcome::NoSolution) => Check::Fail("no ripe AT with an unbounded budget".into()),
                Err(e) => Check::Fail(e.to_string()),
            }
        }),
    ));
    v
}

/// Runs the structure checks on one graph, reporting precondition failures.
pub fn check_structure_graph(g: &Graph) -> SuiteReport {
    run_checks(g, None, structure_checks(None))
}

/// Runs one suite's checks on a supplied graph. Completion uses budget 1.
pub fn check_graph(suite: Suite, g: &Graph) -> SuiteReport {
    match suite {
        Suite::Structure => check_structure_graph(g),
        Suite::Cycles => run_checks(g, None, cycle_checks()),
        Suite::Completion => run_checks(g, None, completion_checks(1)),
    }
}

// ---------------------------------------------------------------- cycles

fn shortest_cycle(g: &Graph) -> Result<(Vec<VertexId>, CycleStructure), Check> {
    let Some(c) = find_chordless_cycle(g, 4) else { return Err(Check::Vacuous) };
    if c.len() < 9 || small_at_idx(g).is_some() {
        return Err(Check::Vacuous);
    }
    let cs = classify_cycle(g, &c).map_err(|e| Check::Fail(e.to_string()))?;
    Ok((c, cs))
}

macro_rules! cycle_or_return {
    ($g:expr) => {
        match shortest_cycle($g) {
            Ok(x) => x,
            Err(c) => return c,
        }
    };
}

fn cycle_checks() -> Vec<(&'static str, CheckFn)> {
    vec![
        (
            "neighbours of the cycle dominate or see a short run",
            Box::new(|g| {
                let (c, _) = cycle_or_return!(g);
                let p = c.len();
                let on: VertexSet = c.iter().copied().collect();
                for &x in g.vertices() {
                    if on.contains(&x) {
                        continue;
                    }
                    let hits: Vec<usize> = (0..p).filter(|&i| g.has_edge(x, c[i])).collect();
                    if hits.is_empty() || hits.len() == p {
                        continue;
                    }
                    let run = (0..p).any(|s| {
                        hits.len() <= 3 && (0..hits.len()).all(|k| hits.contains(&((s + k) % p)))
                    });
                    if !run {
                        return Check::Fail(format!("{x} sees cycle positions {hits:?}"));
                    }
                }
                Check::Pass
            }),
        ),
        (
            "outside N[C] only dominating vertices are reachable",
            Box::new(|g| {
                let (c, cs) = cycle_or_return!(g);
                let nc = g.closed_neighborhood_of_set(&c.iter().copied().collect()).unwrap();
                for &x in g.vertices() {
                    if nc.contains(&x) {
                        continue;
                    }
                    let bad = g.neighborhood(x).unwrap().into_iter().find(|y| nc.contains(y) && !cs.dominating.contains(y));
                    if let Some(y) = bad {
                        return Check::Fail(format!("{x} outside N[C] adjacent to non-dominating {y}"));
                    }
                }
                Check::Pass
            }),
        ),
        (
            "D_i-D_j edges only for consecutive i, j",
            Box::new(|g| {
                let (c, cs) = cycle_or_return!(g);
                let p = c.len();
                for i in 0..p {
                    for j in 0..p {
                        let close = i == j || (i + 1) % p == j || (j + 1) % p == i;
                        if close {
                            continue;
                        }
                        for &x in &cs.d[i] {
                            if let Some(y) = cs.d[j].iter().find(|&&y| g.has_edge(x, y)) {
                                return Check::Fail(format!("edge {x}-{y} between D_{i} and D_{j}"));
                            }
                        }
                    }
                }
                Check::Pass
            }),
        ),
        (
            "T_i joined to S_{i+1}, S_i not adjacent to the next sets",
            Box::new(|g| {
                let (c, cs) = cycle_or_return!(g);
                let p = c.len();
                for i in 0..p {
                    let j = (i + 1) % p;
                    for &t in &cs.t[i] {
                        if let Some(s) = cs.s[j].iter().find(|&&s| !g.has_edge(t, s)) {
                            return Check::Fail(format!("T_{i} vertex {t} misses S_{j} vertex {s}"));
                        }
                    }
                    for &s in &cs.s[i] {
                        let next = cs.s[j].iter().chain(&cs.d[j]).chain(&cs.t[j]);
                        if let Some(y) = next.into_iter().find(|&&y| g.has_edge(s, y)) {
                            return Check::Fail(format!("S_{i} vertex {s} adjacent to {y}"));
                        }
                    }
                }
                Check::Pass
            }),
        ),
        (
            "dominating vertices see all of N[C]",
            Box::new(|g| {
                let (c, cs) = cycle_or_return!(g);
                let nc = g.closed_neighborhood_of_set(&c.iter().copied().collect()).unwrap();
                for &d in &cs.dominating {
                    if let Some(y) = nc.iter().find(|&&y| y != d && !g.has_edge(d, y)) {
                        return Check::Fail(format!("{d} misses {y}"));
                    }
                }
                Check::Pass
            }),
        ),
        (
            "a long cycle near C meets every N(v_i) or sits in one S_i or D_i",
            Box::new(|g| {
                let (c, cs) = cycle_or_return!(g);
                let on: VertexSet = c.iter().copied().collect();
                let mut near = g.closed_neighborhood_of_set(&on).unwrap();
                near.retain(|v| !on.contains(v));
                let h = g.induced_subgraph(&near).unwrap();
                let Some(c1) = find_chordless_cycle(&h, 9) else { return Check::Vacuous };
                let set: VertexSet = c1.iter().copied().collect();
                if let Some(x) = set.iter().find(|x| cs.dominating.contains(x)) {
                    return Check::Fail(format!("inner cycle uses dominating {x}"));
                }
                let meets_all = c.iter().all(|&v| set.iter().any(|&y| g.has_edge(v, y)));
                let inside = (0..c.len()).any(|i| set.is_subset(&cs.s[i]) || set.is_subset(&cs.d[i]));
                Check::from_bool(meets_all || inside, || format!("inner cycle {c1:?}"))
            }),
        ),
        (
            "separator leaves N[C] chordal",
            Box::new(|g| {
                let _ = cycle_or_return!(g);
                let cc = match find_clean_cycle(g) {
                    Ok(Some(cc)) => cc,
                    Ok(None) => return Check::Vacuous,
                    Err(e) => return Check::Fail(e.to_string()),
                };
                if !cc.ripe {
                    return Check::Vacuous;
                }
                let x = match min_cycle_separator(g, &cc) {
                    Ok(x) => x,
                    Err(e) => return Check::Fail(e.to_string()),
                };
                let mut region = cc.structure.region(g).unwrap();
                if !x.is_subset(&region) {
                    return Check::Fail("separator leaves the region".into());
                }
                region.retain(|v| !x.contains(v));
                Check::from_bool(chordal(&g.induced_subgraph(&region).unwrap()), || format!("X = {x:?}"))
            }),
        ),
        (
            "separator equals the brute-force lex-first minimum",
            Box::new(|g| {
                let (_, cs) = cycle_or_return!(g);
                let region = cs.region(g).unwrap();
                if region.len() > 20 {
                    return Check::Vacuous;
                }
                let fast = match cycle_separator_capped(g, &cs, &region, region.len()) {
                    Ok(Some(x)) => x,
                    Ok(None) => return Check::Fail("no separator".into()),
                    Err(e) => return Check::Fail(e.to_string()),
                };
                let slow = brute_force_separator(g, &region);
                Check::from_bool(Some(&fast) == slow.as_ref(), || format!("solver {fast:?}, brute force {slow:?}"))
            }),
        ),
    ]
}

/// Lexicographically first minimum `X ⊆ region` with `region \ X` chordal.
pub fn brute_force_separator(g: &Graph, region: &VertexSet) -> Option<VertexSet> {
    let r: Vec<VertexId> = region.iter().copied().collect();
    let mut found = None;
    for size in 0..=r.len() {
        let hit = for_each_subset(r.len(), size, |idx| {
            let x: VertexSet = idx.iter().map(|&i| r[i]).collect();
            let rest: VertexSet = region.difference(&x).copied().collect();
            let ok = g.induced_subgraph(&rest).is_ok_and(|h| chordal(&h));
            if ok {
                found = Some(x);
            }
            ok
        });
        if hit {
            break;
        }
    }
    found
}

// ---------------------------------------------------------------- completion

fn completion_checks(k: usize) -> Vec<(&'static str, CheckFn)> {
    vec![
        (
            "completion answers are interval supergraphs within budget",
            Box::new(move |g| match interval_completion(g, k) {
                Ok(r) => match r.outcome {
                    Outcome::Yes(f) => {
                        let ok = f.len() <= k
                            && f.iter().all(|e| !g.has_edge(e.u(), e.v()))
                            && is_interval(&g.add_edges(&f).unwrap());
                        Check::from_bool(ok, || format!("bad fill {f:?}"))
                    }
                    Outcome::No => Check::Pass,
                },
                Err(Error::WorkBound(_)) => Check::Vacuous,
                Err(e) => Check::Fail(e.to_string()),
            }),
        ),
        (
            "chordless hub-to-end paths give shifted minimum ATs",
            Box::new(|g| {
                if !clean_chordal(g) {
                    return Check::Vacuous;
                }
                let Some(at) = min_big_at(g) else { return Check::Vacuous };
                let mut checked = false;
                for toward_a in [true, false] {
                    let (hub, end, skip) = if toward_a {
                        (at.w.unwrap_or(at.u), at.a, at.v(1))
                    } else {
                        (at.u, at.b, at.v(at.p()))
                    };
                    let q = match shortest_path_avoiding(g, hub, end, skip) {
                        Some(q) => q,
                        None => continue,
                    };
                    // q = hub, x_1, ..., x_r, end
                    let r = q.len() - 2;
                    for i in 2..=r {
                        checked = true;
                        let mut shifted = at.clone();
                        if toward_a {
                            shifted.a = q[i];
                        } else {
                            shifted.b = q[i];
                        }
                        if let Err(e) = shifted.validate(g) {
                            return Check::Fail(format!("x_{i} = {}: {e}", q[i]));
                        }
                    }
                }
                if checked {
                    Check::Pass
                } else {
                    Check::Vacuous
                }
            }),
        ),
        (
            "fill edges classify as long, cross or bottom",
            Box::new(|g| {
                if !clean_chordal(g) {
                    return Check::Vacuous;
                }
                let Some(at) = min_big_at(g) else { return Check::Vacuous };
                let p = at.p();
                let cross_a = at.w.unwrap_or(at.u);
                let mut expect = vec![
                    (Edge::new(at.a, cross_a), "cross"),
                    (Edge::new(at.b, at.u), "cross"),
                    (Edge::new(at.a, at.b), "bottom"),
                ];
                expect.extend((1..=p).map(|i| (Edge::new(at.c, at.v(i)), "long")));
                expect.extend((2..=p).map(|i| (Edge::new(at.a, at.v(i)), "bottom")));
                for (e, want) in expect {
                    let got = match classify_fill(&at, e) {
                        Some(FillClass::Long { .. }) => "long",
                        Some(FillClass::Cross { .. }) => "cross",
                        Some(FillClass::Bottom { .. }) => "bottom",
                        None => "none",
                    };
                    if got != want {
                        return Check::Fail(format!("{e} classified {got}, expected {want}"));
                    }
                }
                Check::Pass
            }),
        ),
        (
            "no minimum AT uses a separator batch edge",
            Box::new(|g| {
                if !clean_chordal(g) {
                    return Check::Vacuous;
                }
                let ripe = match find_ripe_at(g, g.n()) {
                    Ok(RipeOutcome::Ripe(r)) => r,
                    _ => return Check::Vacuous,
                };
                let at = &ripe.context.at;
                if at.p() < 13 {
                    return Check::Vacuous;
                }
                let branches = match big_at_branches(g, at, &ripe.context.inner) {
                    Ok(b) => b,
                    Err(e) => return Check::Fail(e.to_string()),
                };
                let s3: EdgeSet = branches.last().cloned().unwrap_or_default();
                let h = g.add_edges(&s3).unwrap();
                if !chordal(&h) || small_at_idx(&h).is_some() {
                    return Check::Vacuous;
                }
                match min_big_at(&h) {
                    None => Check::Pass,
                    Some(at2) => {
                        let used: Vec<Edge> = at2.template_edges().intersection(&s3).copied().collect();
                        Check::from_bool(used.is_empty(), || format!("minimum AT uses {used:?}"))
                    }
                }
            }),
        ),
    ]
}

fn shortest_path_avoiding(g: &Graph, s: VertexId, t: VertexId, skip: VertexId) -> Option<Vec<VertexId>> {
    let mut within = g.full_mask();
    within.set(g.index(skip)?, false);
    g.bfs_path(g.index(s)?, g.index(t)?, &within).map(|p| p.into_iter().map(|i| g.id(i)).collect())
}

/// Brute-force check of the triangulation enumerator for cycles of length
/// 4 to `max_len`: the family must be exactly the chord sets of size
/// `L - 3` that make the cycle chordal.
pub fn check_triangulations(max_len: usize) -> Check {
    for len in 4..=max_len {
        let g = long_cycle(len);
        let chords: Vec<Edge> = g.non_edges().collect();
        let mut brute = std::collections::BTreeSet::new();
        let m = chords.len();
        for mask in 0u64..(1 << m) {
            if mask.count_ones() as usize != len - 3 {
                continue;
            }
            let f: EdgeSet = (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| chords[i]).collect();
            if chordal(&g.add_edges(&f).unwrap()) {
                brute.insert(f);
            }
        }
        let ids: Vec<VertexId> = (0..len as u32).map(VertexId).collect();
        let got: std::collections::BTreeSet<EdgeSet> = enumerate_cycle_triangulations(&ids).unwrap().into_iter().collect();
        if got != brute {
            return Check::Fail(format!("length {len}: {} enumerated, {} by brute force", got.len(), brute.len()));
        }
    }
    Check::Pass
}

/// Runs `count` seeded instances of a suite starting at `seed`.
pub fn run_suite(suite: Suite, count: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::default();
    if suite == Suite::Completion {
        rep.checks += 1;
        if let Check::Fail(d) = check_triangulations(9) {
            rep.failures.push(PropertyFailure {
                property: "triangulation family".into(),
                detail: d,
                seed: None,
                instance: String::new(),
            });
        }
    }
    for i in 0..count as u64 {
        let s = seed.wrapping_add(i);
        let one = match suite {
            Suite::Structure => {
                let (g, depth) = structure_instance(s);
                run_checks(&g, Some(s), structure_checks(depth))
            }
            Suite::Cycles => run_checks(&cycle_instance(s), Some(s), cycle_checks()),
            Suite::Completion => {
                let (g, k) = completion_instance(s);
                run_checks(&g, Some(s), completion_checks(k))
            }
        };
        rep.absorb(one);
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_on_a_few_seeds() {
        for suite in [Suite::Structure, Suite::Cycles, Suite::Completion] {
            let rep = run_suite(suite, 12, 1);
            assert!(rep.passed(), "{suite}: {:#?}", rep.failures);
            assert!(rep.checks > rep.vacuous);
        }
    }

    #[test]
    fn corrupted_gadget_is_reported() {
        let (g, at) = gadget_type1(8);
        let e: EdgeSet = [Edge::new(at.u, at.v(4))].into();
        let edges: Vec<(VertexId, VertexId)> = g.edges().filter(|x| !e.contains(x)).map(Into::into).collect();
        let h = Graph::new(g.vertices().iter().copied(), edges).unwrap();
        let rep = check_structure_graph(&h);
        assert!(!rep.passed());
    }

    #[test]
    fn brute_separator_on_bare_cycle() {
        let g = long_cycle(9);
        let region: VertexSet = g.vertex_set();
        assert_eq!(brute_force_separator(&g, &region), Some([VertexId(0)].into()));
    }

    #[test]
    fn decorations_are_accepted() {
        let grown = (0..40).filter(|&s| cycle_instance(s).n() > 13).count();
        assert!(grown > 10, "{grown}");
        let grown = (0..40).filter(|&s| structure_instance(s).0.n() > 17 && structure_instance(s).1.is_none()).count();
        assert!(grown > 5, "{grown}");
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(structure_instance(5).0, structure_instance(5).0);
        assert_eq!(cycle_instance(5), cycle_instance(5));
    }

    #[test]
    fn suite_names() {
        assert_eq!("cycles".parse::<Suite>().unwrap(), Suite::Cycles);
        assert!("x".parse::<Suite>().is_err());
    }
}
