//! Independent reference implementations, used only to check the solvers.
//!
//! Recognition here goes through maximal cliques and a search for a
//! consecutive clique arrangement, sharing no code with Lex-BFS or the AT
//! test. The optimisation oracles enumerate candidate sets by increasing
//! size, lexicographically within a size.

use std::collections::HashSet;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleConfig {
    pub recognition_max_vertices: usize,
    pub deletion_max_vertices: usize,
    pub completion_max_vertices: usize,
    /// Upper bound on candidate sets examined by one brute-force call.
    pub max_candidates: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            recognition_max_vertices: 10,
            deletion_max_vertices: 14,
            completion_max_vertices: 10,
            max_candidates: 5_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Vertices(VertexSet),
    Edges(EdgeSet),
}

impl Witness {
    pub fn len(&self) -> usize {
        match self {
            Witness::Vertices(v) => v.len(),
            Witness::Edges(e) => e.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleAnswer {
    Optimum { size: usize, witness: Witness },
    NoneWithin { k_max: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub answer: OracleAnswer,
    pub candidates_checked: u64,
    pub elapsed_ms: f64,
}

impl OracleReport {
    pub fn optimum(&self) -> Option<usize> {
        match &self.answer {
            OracleAnswer::Optimum { size, .. } => Some(*size),
            OracleAnswer::NoneWithin { .. } => None,
        }
    }
}

/// Maximal cliques by Bron–Kerbosch with pivoting, as vertex bitmasks.
pub fn maximal_cliques(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 64, "clique enumeration is limited to 64 vertices");
    let adj: Vec<u64> = (0..g.n()).map(|i| g.adj(i).ones().fold(0u64, |m, j| m | 1 << j)).collect();
    let mut out = Vec::new();
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    bron_kerbosch(&adj, 0, all, 0, &mut out);
    out.sort_unstable();
    out
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 && r != 0 {
            out.push(r);
        }
        return;
    }
    let pu = p | x;
    let pivot = (0..adj.len()).filter(|&i| pu >> i & 1 == 1).max_by_key(|&i| (adj[i] & p).count_ones());
    let cand = match pivot {
        Some(u) => p & !adj[u],
        None => p,
    };
    let mut c = cand;
    while c != 0 {
        let v = c.trailing_zeros() as usize;
        c &= c - 1;
        bron_kerbosch(adj, r | 1 << v, p & adj[v], x & adj[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// Whether the maximal cliques admit a linear order in which every vertex
/// occupies a consecutive block.
pub(crate) fn has_clique_arrangement(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let cliques = maximal_cliques(g);
    if cliques.len() > g.n() || cliques.len() > 64 {
        return false;
    }
    let mut failed = HashSet::new();
    (0..cliques.len()).any(|first| arrange(&cliques, 1u64 << first, first, cliques[first], &mut failed))
}

fn arrange(cl: &[u64], placed: u64, last: usize, seen: u64, failed: &mut HashSet<(u64, usize)>) -> bool {
    if placed.count_ones() as usize == cl.len() {
        return true;
    }
    if failed.contains(&(placed, last)) {
        return false;
    }
    let closed = seen & !cl[last];
    for next in 0..cl.len() {
        if placed >> next & 1 == 0
            && cl[next] & closed == 0
            && arrange(cl, placed | 1 << next, next, seen | cl[next], failed)
        {
            return true;
        }
    }
    failed.insert((placed, last));
    false
}

pub fn oracle_is_interval(g: &Graph) -> Result<bool> {
    oracle_is_interval_with(g, &OracleConfig::default())
}

pub fn oracle_is_interval_with(g: &Graph, cfg: &OracleConfig) -> Result<bool> {
    if g.n() > cfg.recognition_max_vertices {
        return Err(Error::WorkBound(format!(
            "oracle recognition limited to {} vertices, got {}",
            cfg.recognition_max_vertices,
            g.n()
        )));
    }
    Ok(has_clique_arrangement(g))
}

/// Calls `f` on each `k`-subset of `0..n` in lexicographic order until it
/// returns `true`.
pub(crate) fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return true;
        }
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut r = 1u64;
    for i in 0..k as u64 {
        r = r.saturating_mul(n as u64 - i) / (i + 1);
    }
    r
}

/// Smallest vertex set whose removal leaves an interval graph.
pub fn brute_force_min_deletion(g: &Graph, k_max: usize, cfg: &OracleConfig) -> Result<OracleReport> {
    if g.n() > cfg.deletion_max_vertices {
        return Err(Error::WorkBound(format!("deletion oracle limited to {} vertices", cfg.deletion_max_vertices)));
    }
    let start = Instant::now();
    let n = g.n();
    let mut checked = 0u64;
    let mut found: Option<VertexSet> = None;
    for s in 0..=k_max.min(n) {
        if binom(n, s) > cfg.max_candidates.saturating_sub(checked) {
            return Err(Error::WorkBound(format!("deletion oracle would exceed {} candidates", cfg.max_candidates)));
        }
        let hit = for_each_subset(n, s, |sub| {
            checked += 1;
            let mut keep = g.full_mask();
            for &i in sub {
                keep.set(i, false);
            }
            if has_clique_arrangement(&g.induced_by_mask(&keep)) {
                found = Some(sub.iter().map(|&i| g.id(i)).collect());
                true
            } else {
                false
            }
        });
        if hit {
            break;
        }
    }
    let answer = match found {
        Some(f) => OracleAnswer::Optimum { size: f.len(), witness: Witness::Vertices(f) },
        None => OracleAnswer::NoneWithin { k_max },
    };
    Ok(OracleReport { answer, candidates_checked: checked, elapsed_ms: start.elapsed().as_secs_f64() * 1e3 })
}

/// Smallest set of non-edges whose addition yields an interval graph.
pub fn brute_force_min_completion(g: &Graph, k_max: usize, cfg: &OracleConfig) -> Result<OracleReport> {
    if g.n() > cfg.completion_max_vertices {
        return Err(Error::WorkBound(format!(
            "completion oracle limited to {} vertices",
            cfg.completion_max_vertices
        )));
    }
    let start = Instant::now();
    let non: Vec<Edge> = g.non_edges().collect();
    let pairs: Vec<(usize, usize)> =
        non.iter().map(|e| (g.index(e.u()).unwrap(), g.index(e.v()).unwrap())).collect();
    let mut checked = 0u64;
    let mut found: Option<EdgeSet> = None;
    for s in 0..=k_max.min(non.len()) {
        if binom(non.len(), s) > cfg.max_candidates.saturating_sub(checked) {
            return Err(Error::WorkBound(format!("completion oracle would exceed {} candidates", cfg.max_candidates)));
        }
        let hit = for_each_subset(non.len(), s, |sub| {
            checked += 1;
            let mut h = g.clone();
            for &k in sub {
                h.add_edge_idx(pairs[k].0, pairs[k].1);
            }
            if has_clique_arrangement(&h) {
                found = Some(sub.iter().map(|&k| non[k]).collect());
                true
            } else {
                false
            }
        });
        if hit {
            break;
        }
    }
    let answer = match found {
        Some(f) => OracleAnswer::Optimum { size: f.len(), witness: Witness::Edges(f) },
        None => OracleAnswer::NoneWithin { k_max },
    };
    Ok(OracleReport { answer, candidates_checked: checked, elapsed_ms: start.elapsed().as_secs_f64() * 1e3 })
}

/// Minimum interval completion through vertex orderings.
///
/// An ordering induces the supergraph joining each vertex to everything
/// between it and its last neighbour; that supergraph is interval, and every
/// interval supergraph arises this way. Processing prefixes as subsets, the
/// edges charged when the next vertex is placed are the placed vertices that
/// still have an unplaced neighbour, so a subset DP finds the optimum.
pub fn ordering_min_completion(g: &Graph) -> Result<OracleReport> {
    let n = g.n();
    if n > 20 {
        return Err(Error::WorkBound("ordering oracle limited to 20 vertices".into()));
    }
    let start = Instant::now();
    let adj: Vec<u32> = (0..n).map(|i| g.adj(i).ones().fold(0u32, |m, j| m | 1 << j)).collect();
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let active = |p: u32| -> u32 { (0..n).filter(|&u| p >> u & 1 == 1 && adj[u] & !p != 0).count() as u32 };
    let mut best = vec![u32::MAX; 1usize << n];
    let mut choice = vec![u8::MAX; 1usize << n];
    best[0] = 0;
    for p in 1..=full {
        let mut q = p;
        while q != 0 {
            let v = q.trailing_zeros();
            q &= q - 1;
            let prev = p & !(1 << v);
            let c = best[prev as usize].saturating_add(active(prev));
            if c < best[p as usize] {
                best[p as usize] = c;
                choice[p as usize] = v as u8;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut p = full;
    while p != 0 {
        let v = choice[p as usize] as usize;
        order.push(v);
        p &= !(1 << v);
    }
    order.reverse();
    let mut pos = vec![0usize; n];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    let mut fill = EdgeSet::new();
    for u in 0..n {
        let reach = g.adj(u).ones().map(|w| pos[w]).max().unwrap_or(0);
        for &v in &order[pos[u] + 1..=reach.max(pos[u])] {
            if !g.has_edge_idx(u, v) {
                fill.insert(Edge::new(g.id(u), g.id(v)));
            }
        }
    }
    let size = fill.len();
    debug_assert_eq!(size as u32 + g.m() as u32, if n == 0 { 0 } else { best[full as usize] });
    Ok(OracleReport {
        answer: OracleAnswer::Optimum { size, witness: Witness::Edges(fill) },
        candidates_checked: 1u64 << n,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gadget_type1, long_cycle};
    use crate::graph::vset;

    #[test]
    fn subsets_in_lex_order() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |s| {
            seen.push(s.to_vec());
            false
        });
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let mut count = 0;
        for_each_subset(3, 0, |_| {
            count += 1;
            false
        });
        assert_eq!(count, 1);
    }

    #[test]
    fn cliques_of_c4() {
        assert_eq!(maximal_cliques(&long_cycle(4)).len(), 4);
    }

    #[test]
    fn recognition_basics() {
        assert!(!oracle_is_interval(&long_cycle(4)).unwrap());
        let claw = Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap();
        assert!(!oracle_is_interval(&claw).unwrap());
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(oracle_is_interval(&star).unwrap());
        assert!(matches!(oracle_is_interval(&Graph::empty(11)), Err(Error::WorkBound(_))));
    }

    #[test]
    fn cycle_optima() {
        let cfg = OracleConfig::default();
        let r = brute_force_min_deletion(&long_cycle(6), 3, &cfg).unwrap();
        assert_eq!(r.answer, OracleAnswer::Optimum { size: 1, witness: Witness::Vertices(vset([0])) });
        let r = brute_force_min_completion(&long_cycle(6), 4, &cfg).unwrap();
        assert_eq!(r.optimum(), Some(3));
        assert_eq!(ordering_min_completion(&long_cycle(6)).unwrap().optimum(), Some(3));
        let r = brute_force_min_completion(&long_cycle(6), 2, &cfg).unwrap();
        assert_eq!(r.answer, OracleAnswer::NoneWithin { k_max: 2 });
    }

    #[test]
    fn gadget_needs_one_deletion() {
        let (g, _) = gadget_type1(7);
        let cfg = OracleConfig::default();
        assert_eq!(brute_force_min_deletion(&g, 3, &cfg).unwrap().optimum(), Some(1));
    }
}
