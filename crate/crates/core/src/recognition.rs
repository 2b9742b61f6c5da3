//! Chordality, asteroidal triples and interval recognition.
//!
//! A graph is interval exactly when it is chordal and AT-free.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{find_chordless_cycle, Graph, VertexId, NO_COMP};

/// Outcome of a chordality test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PeoResult {
    /// Perfect elimination ordering, first eliminated vertex first.
    Chordal(Vec<VertexId>),
    /// Canonical shortest hole.
    Hole(Vec<VertexId>),
}

impl PeoResult {
    pub fn is_chordal(&self) -> bool {
        matches!(self, PeoResult::Chordal(_))
    }
}

/// Three pairwise non-adjacent vertices with, for each pair, a path between
/// them that avoids the closed neighbourhood of the third.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtWitness {
    pub a: VertexId,
    pub b: VertexId,
    pub c: VertexId,
    /// a to b avoiding N[c]
    pub path_ab: Vec<VertexId>,
    /// a to c avoiding N[b]
    pub path_ac: Vec<VertexId>,
    /// b to c avoiding N[a]
    pub path_bc: Vec<VertexId>,
}

impl AtWitness {
    /// Checks every defining condition against `g`.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let (a, b, c) = (self.a, self.b, self.c);
        for v in [a, b, c] {
            g.idx(v)?;
        }
        if a == b || b == c || a == c {
            return Err(Error::ContractViolation("AT vertices not distinct".into()));
        }
        if g.has_edge(a, b) || g.has_edge(a, c) || g.has_edge(b, c) {
            return Err(Error::ContractViolation("AT vertices adjacent".into()));
        }
        let check = |p: &[VertexId], s: VertexId, t: VertexId, avoid: VertexId| -> Result<()> {
            if p.first() != Some(&s) || p.last() != Some(&t) {
                return Err(Error::ContractViolation(format!("path {s}..{t} has wrong endpoints")));
            }
            for w in p.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return Err(Error::ContractViolation(format!("{}-{} is not an edge", w[0], w[1])));
                }
            }
            for &x in p {
                if x == avoid || g.has_edge(x, avoid) {
                    return Err(Error::ContractViolation(format!("path {s}..{t} meets N[{avoid}]")));
                }
            }
            Ok(())
        };
        check(&self.path_ab, a, b, c)?;
        check(&self.path_ac, a, c, b)?;
        check(&self.path_bc, b, c, a)
    }
}

/// Lex-BFS visiting order (dense indices), ties broken by smallest index.
pub fn lex_bfs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut classes: Vec<Vec<usize>> = if n == 0 { vec![] } else { vec![(0..n).collect()] };
    let mut order = Vec::with_capacity(n);
    while let Some(first) = classes.first_mut() {
        let v = first.remove(0);
        if first.is_empty() {
            classes.remove(0);
        }
        order.push(v);
        let adj = g.adj(v);
        let mut next = Vec::with_capacity(classes.len() * 2);
        for class in classes.drain(..) {
            let (inn, out): (Vec<usize>, Vec<usize>) = class.into_iter().partition(|&x| adj.contains(x));
            if !inn.is_empty() {
                next.push(inn);
            }
            if !out.is_empty() {
                next.push(out);
            }
        }
        classes = next;
    }
    order
}

/// Reverse Lex-BFS order is a perfect elimination ordering iff `g` is chordal.
pub(crate) fn peo_idx(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut order = lex_bfs_order(g);
    order.reverse();
    let mut pos = vec![0usize; n];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    for &v in &order {
        let later: Vec<usize> = g.adj(v).ones().filter(|&w| pos[w] > pos[v]).collect();
        if let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) {
            for &w in &later {
                if w != parent && !g.has_edge_idx(parent, w) {
                    return None;
                }
            }
        }
    }
    Some(order)
}

pub fn is_chordal(g: &Graph) -> PeoResult {
    match peo_idx(g) {
        Some(order) => PeoResult::Chordal(order.into_iter().map(|i| g.id(i)).collect()),
        None => PeoResult::Hole(
            find_chordless_cycle(g, 4).expect("non-chordal graph must contain a hole"),
        ),
    }
}

pub(crate) fn chordal(g: &Graph) -> bool {
    peo_idx(g).is_some()
}

/// Component labels of g - N[z] for every z.
fn avoid_labels(g: &Graph) -> Vec<Vec<u32>> {
    (0..g.n())
        .map(|z| {
            let mut within = g.closed_nbhd(z);
            within.toggle_range(..);
            g.component_labels(&within)
        })
        .collect()
}

fn same(l: &[u32], x: usize, y: usize) -> bool {
    l[x] != NO_COMP && l[x] == l[y]
}

/// First asteroidal triple (a < b < c lexicographically), with witness paths.
pub fn find_at(g: &Graph) -> Option<AtWitness> {
    let (a, b, c) = find_at_idx(g)?;
    Some(witness(g, a, b, c))
}

pub(crate) fn find_at_idx(g: &Graph) -> Option<(usize, usize, usize)> {
    let n = g.n();
    if n < 6 {
        // no graph on five or fewer vertices has an AT
        return None;
    }
    let labels = avoid_labels(g);
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge_idx(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge_idx(a, c) || g.has_edge_idx(b, c) {
                    continue;
                }
                if same(&labels[c], a, b) && same(&labels[b], a, c) && same(&labels[a], b, c) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

fn witness(g: &Graph, a: usize, b: usize, c: usize) -> AtWitness {
    let path = |s: usize, t: usize, z: usize| -> Vec<VertexId> {
        let mut within = g.closed_nbhd(z);
        within.toggle_range(..);
        g.bfs_path(s, t, &within).expect("AT path exists").into_iter().map(|i| g.id(i)).collect()
    };
    AtWitness {
        a: g.id(a),
        b: g.id(b),
        c: g.id(c),
        path_ab: path(a, b, c),
        path_ac: path(a, c, b),
        path_bc: path(b, c, a),
    }
}

pub fn is_interval(g: &Graph) -> bool {
    chordal(g) && find_at_idx(g).is_none()
}
