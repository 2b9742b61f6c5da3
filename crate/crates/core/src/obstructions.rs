//! Forbidden induced subgraphs for interval graphs.
//!
//! Small obstructions are holes of length at most 8 and minimal
//! non-interval chordal graphs on at most 10 vertices. Everything else is a
//! big AT: one of the two template families with at least 11 vertices.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{shortest_hole_len, Edge, EdgeSet, Graph, VertexId, VertexSet};
use crate::recognition::{chordal, is_interval};

pub const MAX_SMALL_HOLE: usize = 8;
pub const MAX_SMALL_AT: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AtKind {
    /// Terminals a, b, c; hub u adjacent to the whole a..b path interior and to c.
    Type1,
    /// Terminals a, b, c; adjacent hubs u, w both dominating the path interior,
    /// with a on u's side, b on w's side and c adjacent to both hubs.
    Type2,
}

/// An asteroidal-triple template: terminals `a`, `b`, `c`, hubs `u` (and `w`
/// for type 2) and the induced path `path = v_1..v_p` from a's side to b's.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigAt {
    pub kind: AtKind,
    pub a: VertexId,
    pub b: VertexId,
    pub c: VertexId,
    pub u: VertexId,
    pub w: Option<VertexId>,
    pub path: Vec<VertexId>,
}

impl BigAt {
    pub fn p(&self) -> usize {
        self.path.len()
    }

    /// `v_i` with `v_0 = a` and `v_{p+1} = b`.
    pub fn v(&self, i: usize) -> VertexId {
        if i == 0 {
            self.a
        } else if i == self.p() + 1 {
            self.b
        } else {
            self.path[i - 1]
        }
    }

    pub fn vertices(&self) -> VertexSet {
        let mut s: VertexSet = self.path.iter().copied().collect();
        s.extend([self.a, self.b, self.c, self.u]);
        s.extend(self.w);
        s
    }

    pub fn size(&self) -> usize {
        self.p() + if self.kind == AtKind::Type1 { 4 } else { 5 }
    }

    pub fn is_big(&self) -> bool {
        self.size() > MAX_SMALL_AT
    }

    /// Exact edge set of the template.
    pub fn template_edges(&self) -> EdgeSet {
        let mut e = EdgeSet::new();
        let p = self.p();
        for i in 0..=p {
            e.insert(Edge::new(self.v(i), self.v(i + 1)));
        }
        for &x in &self.path {
            e.insert(Edge::new(self.u, x));
        }
        e.insert(Edge::new(self.c, self.u));
        if let Some(w) = self.w {
            for &x in &self.path {
                e.insert(Edge::new(w, x));
            }
            e.insert(Edge::new(self.a, self.u));
            e.insert(Edge::new(self.b, w));
            e.insert(Edge::new(self.c, w));
            e.insert(Edge::new(self.u, w));
        }
        e
    }

    /// Checks that the template vertices induce exactly the template edges.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let verts = self.vertices();
        let expect = self.size();
        if verts.len() != expect {
            return Err(Error::ContractViolation("template vertices not distinct".into()));
        }
        match (self.kind, self.w) {
            (AtKind::Type1, None) if self.p() >= 2 => {}
            (AtKind::Type2, Some(_)) if self.p() >= 1 => {}
            _ => return Err(Error::ContractViolation("malformed template".into())),
        }
        let h = g.induced_subgraph(&verts)?;
        if h.edge_set() != self.template_edges() {
            return Err(Error::ContractViolation("template is not induced".into()));
        }
        Ok(())
    }

    /// Ordering used to pick the minimum AT: path length, kind, then vertices.
    pub fn key(&self) -> (usize, AtKind, Vec<VertexId>) {
        let mut v = vec![self.a, self.b, self.c, self.u];
        v.extend(self.w);
        v.extend(&self.path);
        (self.p(), self.kind, v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Obstruction {
    /// Chordless cycle of length 4..=8, in canonical order.
    Hole(Vec<VertexId>),
    /// Vertex set of a minimal non-interval chordal graph with at most 10 vertices.
    SmallAt(VertexSet),
}

impl Obstruction {
    pub fn vertices(&self) -> VertexSet {
        match self {
            Obstruction::Hole(c) => c.iter().copied().collect(),
            Obstruction::SmallAt(s) => s.clone(),
        }
    }
}

/// Finds a hole of length at most 8 or a small AT, preferring holes.
pub fn find_small_obstruction(g: &Graph) -> Option<Obstruction> {
    if let Some(len) = shortest_hole_len(g) {
        if len <= MAX_SMALL_HOLE {
            let c = crate::graph::find_chordless_cycle(g, 4)?;
            return Some(Obstruction::Hole(c));
        }
    }
    small_at_idx(g).map(|s| Obstruction::SmallAt(s.into_iter().map(|i| g.id(i)).collect()))
}

/// Smallest small AT by vertex count; ties go to type 1, type 2, long claw,
/// whipping top, then to the lexicographically smaller vertex set.
pub(crate) fn small_at_idx(g: &Graph) -> Option<Vec<usize>> {
    let mut cands: Vec<(usize, u8, Vec<usize>)> = Vec::new();
    let mut push = |rank: u8, mut vs: Vec<usize>| {
        vs.sort_unstable();
        cands.push((vs.len(), rank, vs));
    };
    if let Some(t) = best_template(g, AtKind::Type1, 2, 6) {
        push(0, t.all_vertices());
    }
    if let Some(t) = best_template(g, AtKind::Type2, 1, 5) {
        push(1, t.all_vertices());
    }
    if let Some(v) = find_long_claw(g) {
        push(2, v);
    }
    if let Some(v) = find_whipping_top(g) {
        push(3, v);
    }
    cands.into_iter().min().map(|(_, _, v)| v)
}

/// Minimum big AT: smallest `p`, then type 1 before type 2, then the
/// lexicographically smallest `(a, b, c, u, w, path)`.
///
/// Requires `g` chordal and free of small obstructions.
pub fn find_minimum_big_at(g: &Graph) -> Result<Option<BigAt>> {
    if !chordal(g) {
        return Err(Error::Precondition("graph is not chordal".into()));
    }
    if small_at_idx(g).is_some() {
        return Err(Error::Precondition("graph contains a small obstruction".into()));
    }
    Ok(min_big_at(g))
}

/// Unchecked variant for graphs known to satisfy the preconditions.
pub(crate) fn min_big_at(g: &Graph) -> Option<BigAt> {
    let t1 = best_template(g, AtKind::Type1, 7, usize::MAX);
    let t2 = best_template(g, AtKind::Type2, 6, usize::MAX);
    let pick = match (t1, t2) {
        (Some(x), Some(y)) => Some(if y.key() < x.key() { y } else { x }),
        (x, y) => x.or(y),
    };
    pick.map(|t| t.to_big_at(g))
}

#[derive(Clone, Debug)]
pub(crate) struct Template {
    kind: AtKind,
    a: usize,
    b: usize,
    c: usize,
    u: usize,
    w: Option<usize>,
    path: Vec<usize>,
}

impl Template {
    fn all_vertices(&self) -> Vec<usize> {
        let mut v = self.path.clone();
        v.extend([self.a, self.b, self.c, self.u]);
        v.extend(self.w);
        v
    }

    fn key(&self) -> (usize, AtKind, Vec<usize>) {
        let mut v = vec![self.a, self.b, self.c, self.u];
        v.extend(self.w);
        v.extend(&self.path);
        (self.path.len(), self.kind, v)
    }

    fn to_big_at(&self, g: &Graph) -> BigAt {
        BigAt {
            kind: self.kind,
            a: g.id(self.a),
            b: g.id(self.b),
            c: g.id(self.c),
            u: g.id(self.u),
            w: self.w.map(|w| g.id(w)),
            path: self.path.iter().map(|&i| g.id(i)).collect(),
        }
    }
}

/// Shortest induced paths from `a` whose interior lies in `mid`.
struct FromSource<'g> {
    g: &'g Graph,
    a: usize,
    mid: &'g FixedBitSet,
    dist: Vec<u32>,
    parent: Vec<usize>,
}

impl<'g> FromSource<'g> {
    fn new(g: &'g Graph, a: usize, mid: &'g FixedBitSet) -> Self {
        let mut src = g.adj(a).clone();
        src.intersect_with(mid);
        let (dist, parent) = g.layered_dist(&src, mid);
        FromSource { g, a, mid, dist, parent }
    }

    /// Interior `v_1..v_p` of a shortest induced a..b path with `p >= min_p`.
    fn to(&self, b: usize, min_p: usize) -> Option<Vec<usize>> {
        let (best, end) = nearest(self.g, b, self.mid, &self.dist)?;
        if best == 1 && min_p >= 2 {
            // a common neighbour of a and b never lies on a longer induced path
            let mut mid = self.mid.clone();
            let mut common = self.g.adj(self.a).clone();
            common.intersect_with(self.g.adj(b));
            mid.difference_with(&common);
            let mut src = self.g.adj(self.a).clone();
            src.intersect_with(&mid);
            let (dist, parent) = self.g.layered_dist(&src, &mid);
            let (best, end) = nearest(self.g, b, &mid, &dist)?;
            return trace(best, end, min_p, &dist, &parent);
        }
        trace(best, end, min_p, &self.dist, &self.parent)
    }
}

fn nearest(g: &Graph, b: usize, mid: &FixedBitSet, dist: &[u32]) -> Option<(u32, usize)> {
    let mut best = (u32::MAX, usize::MAX);
    for t in g.adj(b).ones() {
        if mid.contains(t) && dist[t] < best.0 {
            best = (dist[t], t);
        }
    }
    (best.0 != u32::MAX).then_some(best)
}

fn trace(best: u32, end: usize, min_p: usize, dist: &[u32], parent: &[usize]) -> Option<Vec<usize>> {
    if (best as usize) < min_p {
        return None;
    }
    let mut path = vec![end];
    let mut cur = end;
    while dist[cur] > 1 {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    Some(path)
}

/// Best template of one kind with `min_p <= p <= max_p`, by [`Template::key`].
pub(crate) fn best_template(g: &Graph, kind: AtKind, min_p: usize, max_p: usize) -> Option<Template> {
    let n = g.n();
    let mut best: Option<Template> = None;
    let mut bound = max_p;
    let consider = |t: Template, best: &mut Option<Template>, bound: &mut usize| {
        if t.path.len() < min_p || t.path.len() > *bound {
            return;
        }
        if best.as_ref().is_none_or(|b| t.key() < b.key()) {
            *bound = t.path.len();
            *best = Some(t);
        }
    };
    match kind {
        AtKind::Type1 => {
            for c in 0..n {
                let nc = g.closed_nbhd(c);
                for u in g.adj(c).ones() {
                    let mut mid = g.adj(u).clone();
                    mid.difference_with(&nc);
                    if mid.count_ones(..) < min_p.max(2) {
                        continue;
                    }
                    let mut out = g.closed_nbhd(u);
                    out.union_with(&nc);
                    out.toggle_range(..);
                    let outs: Vec<usize> = out.ones().collect();
                    for (x, &a) in outs.iter().enumerate() {
                        if g.adj(a).is_disjoint(&mid) {
                            continue;
                        }
                        let from = FromSource::new(g, a, &mid);
                        for &b in &outs[x + 1..] {
                            if g.has_edge_idx(a, b) {
                                continue;
                            }
                            if let Some(path) = from.to(b, min_p.max(2)) {
                                let t = Template { kind, a, b, c, u, w: None, path };
                                consider(t, &mut best, &mut bound);
                            }
                        }
                    }
                }
            }
        }
        AtKind::Type2 => {
            for u in 0..n {
                for w in g.adj(u).ones() {
                    if w == u {
                        continue;
                    }
                    let mut common = g.adj(u).clone();
                    common.intersect_with(g.adj(w));
                    for c in common.ones() {
                        let nc = g.closed_nbhd(c);
                        let mut mid = common.clone();
                        mid.difference_with(&nc);
                        if mid.count_ones(..) < min_p.max(1) {
                            continue;
                        }
                        let mut side_a = g.adj(u).clone();
                        side_a.difference_with(&g.closed_nbhd(w));
                        side_a.difference_with(&nc);
                        let mut side_b = g.adj(w).clone();
                        side_b.difference_with(&g.closed_nbhd(u));
                        side_b.difference_with(&nc);
                        for a in side_a.ones() {
                            if g.adj(a).is_disjoint(&mid) {
                                continue;
                            }
                            let from = FromSource::new(g, a, &mid);
                            for b in side_b.ones() {
                                if g.has_edge_idx(a, b) {
                                    continue;
                                }
                                if let Some(path) = from.to(b, min_p.max(1)) {
                                    let t = Template { kind, a, b, c, u, w: Some(w), path };
                                    consider(t, &mut best, &mut bound);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    best
}

/// Long claw: centre x, three pairwise non-adjacent arms y_i, each with a
/// private pendant z_i; the seven vertices induce a subdivided claw.
fn find_long_claw(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for x in 0..n {
        let nx = g.closed_nbhd(x);
        let ys: Vec<usize> = g.adj(x).ones().collect();
        for (i, &y1) in ys.iter().enumerate() {
            for (j, &y2) in ys.iter().enumerate().skip(i + 1) {
                if g.has_edge_idx(y1, y2) {
                    continue;
                }
                for &y3 in &ys[j + 1..] {
                    if g.has_edge_idx(y1, y3) || g.has_edge_idx(y2, y3) {
                        continue;
                    }
                    let private = |y: usize, o1: usize, o2: usize| {
                        let mut z = g.adj(y).clone();
                        z.difference_with(&nx);
                        z.difference_with(g.adj(o1));
                        z.difference_with(g.adj(o2));
                        z
                    };
                    let z1s = private(y1, y2, y3);
                    let z2s = private(y2, y1, y3);
                    let z3s = private(y3, y1, y2);
                    for z1 in z1s.ones() {
                        for z2 in z2s.ones() {
                            if g.has_edge_idx(z1, z2) {
                                continue;
                            }
                            for z3 in z3s.ones() {
                                if !g.has_edge_idx(z1, z3) && !g.has_edge_idx(z2, z3) {
                                    return Some(vec![x, y1, y2, y3, z1, z2, z3]);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// Whipping top: hub x adjacent to an induced path y1..y5, plus z adjacent to y3 only.
fn find_whipping_top(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for x in 0..n {
        let nx = g.closed_nbhd(x);
        for y3 in g.adj(x).ones() {
            for z in g.adj(y3).ones() {
                if nx.contains(z) {
                    continue;
                }
                let mut y24 = g.adj(x).clone();
                y24.intersect_with(g.adj(y3));
                y24.difference_with(&g.closed_nbhd(z));
                let cands: Vec<usize> = y24.ones().collect();
                for (i, &y2) in cands.iter().enumerate() {
                    for &y4 in &cands[i + 1..] {
                        if g.has_edge_idx(y2, y4) {
                            continue;
                        }
                        let mut y1s = g.adj(x).clone();
                        y1s.intersect_with(g.adj(y2));
                        for bad in [y3, y4, z] {
                            y1s.difference_with(&g.closed_nbhd(bad));
                        }
                        let mut y5s = g.adj(x).clone();
                        y5s.intersect_with(g.adj(y4));
                        for bad in [y3, y2, z] {
                            y5s.difference_with(&g.closed_nbhd(bad));
                        }
                        for y1 in y1s.ones() {
                            if let Some(y5) = y5s.ones().find(|&y5| !g.has_edge_idx(y1, y5)) {
                                return Some(vec![x, y1, y2, y3, y4, y5, z]);
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// Greedily removes vertices (ascending ID) while the induced subgraph stays
/// non-interval. The result is vertex-minimal.
pub fn shrink_to_minimal(g: &Graph, vertices: &VertexSet) -> Result<VertexSet> {
    let mut keep = g.mask_of(vertices)?;
    if is_interval(&g.induced_by_mask(&keep)) {
        return Err(Error::ContractViolation("induced subgraph is already interval".into()));
    }
    for i in g.mask_of(vertices)?.ones() {
        keep.set(i, false);
        if is_interval(&g.induced_by_mask(&keep)) {
            keep.set(i, true);
        }
    }
    Ok(g.ids_of(&keep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gadget_type1, gadget_type2};
    use crate::graph::vset;

    #[test]
    fn long_claw_is_small_at() {
        let g = Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap();
        assert_eq!(find_small_obstruction(&g), Some(Obstruction::SmallAt(vset(0..7))));
    }

    #[test]
    fn c6_is_hole_obstruction() {
        let e: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let g = Graph::from_edges(6, &e).unwrap();
        assert!(matches!(find_small_obstruction(&g), Some(Obstruction::Hole(c)) if c.len() == 6));
    }

    #[test]
    fn c9_is_not_small() {
        let e: Vec<_> = (0..9).map(|i| (i, (i + 1) % 9)).collect();
        let g = Graph::from_edges(9, &e).unwrap();
        assert_eq!(find_small_obstruction(&g), None);
    }

    #[test]
    fn gadget_type1_p7_is_minimum_big_at() {
        let (g, at) = gadget_type1(7);
        assert!(find_small_obstruction(&g).is_none());
        let found = find_minimum_big_at(&g).unwrap().unwrap();
        assert_eq!(found, at);
        assert_eq!(found.p(), 7);
        found.validate(&g).unwrap();
    }

    #[test]
    fn gadget_type2_p6_is_big() {
        let (g, at) = gadget_type2(6);
        assert!(find_small_obstruction(&g).is_none());
        let found = find_minimum_big_at(&g).unwrap().unwrap();
        assert_eq!(found.kind, AtKind::Type2);
        assert_eq!(found.p(), 6);
        assert_eq!(found.vertices(), at.vertices());
    }

    #[test]
    fn small_gadgets_are_small() {
        for p in 2..=6 {
            let (g, at) = gadget_type1(p);
            assert_eq!(find_small_obstruction(&g), Some(Obstruction::SmallAt(at.vertices())), "p={p}");
        }
        for p in 1..=5 {
            let (g, at) = gadget_type2(p);
            assert_eq!(find_small_obstruction(&g), Some(Obstruction::SmallAt(at.vertices())), "p={p}");
        }
    }

    #[test]
    fn precondition_errors() {
        let g = Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap();
        assert!(matches!(find_minimum_big_at(&g), Err(Error::Precondition(_))));
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(matches!(find_minimum_big_at(&c5), Err(Error::Precondition(_))));
    }

    #[test]
    fn shrink_recovers_claw() {
        // long claw plus a pendant on z1
        let g = Graph::from_edges(8, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6), (4, 7)]).unwrap();
        assert_eq!(shrink_to_minimal(&g, &g.vertex_set()).unwrap(), vset(0..7));
        assert!(shrink_to_minimal(&g, &vset([0, 1, 2])).is_err());
    }
}
