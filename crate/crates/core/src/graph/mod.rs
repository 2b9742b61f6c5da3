//! Simple undirected graphs over stable vertex identifiers.
//!
//! Vertices keep their original IDs across induced subgraphs and deletions.
//! Internally every graph stores its IDs sorted ascending and uses dense
//! indices `0..n` into that list, so index order and ID order agree.

pub(crate) mod holes;
mod separator;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use holes::{find_chordless_cycle, shortest_hole_len};
pub use separator::minimum_vertex_separator;
pub(crate) use separator::min_separator_idx;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(VertexId, VertexId)", into = "(VertexId, VertexId)")]
pub struct Edge(VertexId, VertexId);

impl Edge {
    pub fn new(u: impl Into<VertexId>, v: impl Into<VertexId>) -> Edge {
        let (u, v) = (u.into(), v.into());
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn u(&self) -> VertexId {
        self.0
    }

    pub fn v(&self) -> VertexId {
        self.1
    }
}

impl From<(VertexId, VertexId)> for Edge {
    fn from((u, v): (VertexId, VertexId)) -> Self {
        Edge::new(u, v)
    }
}

impl From<Edge> for (VertexId, VertexId) {
    fn from(e: Edge) -> Self {
        (e.0, e.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

pub type VertexSet = BTreeSet<VertexId>;
pub type EdgeSet = BTreeSet<Edge>;

pub fn vset<I: IntoIterator<Item = u32>>(it: I) -> VertexSet {
    it.into_iter().map(VertexId).collect()
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    ids: Vec<VertexId>,
    adj: Vec<FixedBitSet>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// Builds a graph from explicit vertex IDs and edges.
    ///
    /// Rejects self-loops, repeated vertices, repeated edges and edges with an
    /// endpoint outside the vertex list.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Graph>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut ids: Vec<VertexId> = vertices.into_iter().collect();
        ids.sort_unstable();
        for w in ids.windows(2) {
            if w[0] == w[1] {
                return Err(Error::ContractViolation(format!("repeated vertex {}", w[0])));
            }
        }
        let n = ids.len();
        let mut g = Graph { ids, adj: vec![FixedBitSet::with_capacity(n); n], m: 0 };
        for (u, v) in edges {
            if u == v {
                return Err(Error::ContractViolation(format!("self-loop at {u}")));
            }
            let i = g.index(u).ok_or(Error::UnknownVertex(u))?;
            let j = g.index(v).ok_or(Error::UnknownVertex(v))?;
            if g.adj[i].contains(j) {
                return Err(Error::ContractViolation(format!("repeated edge {u}-{v}")));
            }
            g.link(i, j);
        }
        Ok(g)
    }

    /// Graph on vertices `0..n` with the given edges.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Graph> {
        Graph::new(
            (0..n as u32).map(VertexId),
            edges.iter().map(|&(u, v)| (VertexId(u), VertexId(v))),
        )
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            ids: (0..n as u32).map(VertexId).collect(),
            adj: vec![FixedBitSet::with_capacity(n); n],
            m: 0,
        }
    }

    fn link(&mut self, i: usize, j: usize) {
        self.adj[i].insert(j);
        self.adj[j].insert(i);
        self.m += 1;
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.ids.iter().copied().collect()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.index(v).is_some()
    }

    /// Dense index of `v`, if present.
    pub fn index(&self, v: VertexId) -> Option<usize> {
        self.ids.binary_search(&v).ok()
    }

    pub(crate) fn idx(&self, v: VertexId) -> Result<usize> {
        self.index(v).ok_or(Error::UnknownVertex(v))
    }

    /// ID at dense index `i`.
    pub fn id(&self, i: usize) -> VertexId {
        self.ids[i]
    }

    /// Adjacency row of dense index `i`.
    pub fn adj(&self, i: usize) -> &FixedBitSet {
        &self.adj[i]
    }

    pub fn has_edge_idx(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(j)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        match (self.index(u), self.index(v)) {
            (Some(i), Some(j)) => self.adj[i].contains(j),
            _ => false,
        }
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        Ok(self.adj[self.idx(v)?].count_ones(..))
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n()).flat_map(move |i| {
            self.adj[i].ones().filter(move |&j| j > i).map(move |j| Edge(self.ids[i], self.ids[j]))
        })
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges().collect()
    }

    pub fn non_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n()).flat_map(move |i| {
            (i + 1..self.n())
                .filter(move |&j| !self.adj[i].contains(j))
                .map(move |j| Edge(self.ids[i], self.ids[j]))
        })
    }

    pub fn neighborhood(&self, v: VertexId) -> Result<VertexSet> {
        let i = self.idx(v)?;
        Ok(self.adj[i].ones().map(|j| self.ids[j]).collect())
    }

    pub fn closed_neighborhood(&self, v: VertexId) -> Result<VertexSet> {
        let mut s = self.neighborhood(v)?;
        s.insert(v);
        Ok(s)
    }

    /// Closed neighbourhood of a vertex set: the set together with every
    /// vertex adjacent to one of its members.
    pub fn closed_neighborhood_of_set(&self, set: &VertexSet) -> Result<VertexSet> {
        let mask = self.mask_of(set)?;
        Ok(self.ids_of(&self.closed_nbhd_of_mask(&mask)))
    }

    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<Graph> {
        Ok(self.induced_by_mask(&self.mask_of(keep)?))
    }

    pub fn remove_vertices(&self, drop: &VertexSet) -> Result<Graph> {
        let mut mask = self.mask_of(drop)?;
        mask.toggle_range(..);
        Ok(self.induced_by_mask(&mask))
    }

    /// Adds every edge of `extra`. Edges already present are rejected.
    pub fn add_edges(&self, extra: &EdgeSet) -> Result<Graph> {
        let mut g = self.clone();
        for e in extra {
            if e.0 == e.1 {
                return Err(Error::ContractViolation(format!("self-loop at {}", e.0)));
            }
            let i = g.idx(e.0)?;
            let j = g.idx(e.1)?;
            if g.adj[i].contains(j) {
                return Err(Error::ContractViolation(format!("edge {e} already present")));
            }
            g.link(i, j);
        }
        Ok(g)
    }

    /// Returns `true` when every vertex can reach every other one.
    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let all = self.full_mask();
        let labels = self.component_labels(&all);
        labels.iter().all(|&l| l == 0)
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let all = self.full_mask();
        let labels = self.component_labels(&all);
        let k = labels.iter().filter(|&&l| l != NO_COMP).max().map_or(0, |&l| l as usize + 1);
        let mut out = vec![VertexSet::new(); k];
        for (i, &l) in labels.iter().enumerate() {
            out[l as usize].insert(self.ids[i]);
        }
        out
    }

    // ---- dense index helpers ----

    pub fn empty_mask(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.n())
    }

    pub fn full_mask(&self) -> FixedBitSet {
        let mut m = self.empty_mask();
        m.insert_range(..);
        m
    }

    pub fn mask_of(&self, set: &VertexSet) -> Result<FixedBitSet> {
        let mut m = self.empty_mask();
        for &v in set {
            m.insert(self.idx(v)?);
        }
        Ok(m)
    }

    pub fn mask_of_idx<I: IntoIterator<Item = usize>>(&self, it: I) -> FixedBitSet {
        let mut m = self.empty_mask();
        for i in it {
            m.insert(i);
        }
        m
    }

    pub fn ids_of(&self, mask: &FixedBitSet) -> VertexSet {
        mask.ones().map(|i| self.ids[i]).collect()
    }

    pub fn closed_nbhd(&self, i: usize) -> FixedBitSet {
        let mut m = self.adj[i].clone();
        m.insert(i);
        m
    }

    pub fn closed_nbhd_of_mask(&self, mask: &FixedBitSet) -> FixedBitSet {
        let mut out = mask.clone();
        for i in mask.ones() {
            out.union_with(&self.adj[i]);
        }
        out
    }

    pub fn induced_by_mask(&self, keep: &FixedBitSet) -> Graph {
        let old: Vec<usize> = keep.ones().filter(|&i| i < self.n()).collect();
        let n = old.len();
        let mut pos = vec![usize::MAX; self.n()];
        for (k, &i) in old.iter().enumerate() {
            pos[i] = k;
        }
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        let mut m = 0;
        for (k, &i) in old.iter().enumerate() {
            for j in self.adj[i].ones() {
                if pos[j] != usize::MAX {
                    adj[k].insert(pos[j]);
                    if pos[j] > k {
                        m += 1;
                    }
                }
            }
        }
        Graph { ids: old.iter().map(|&i| self.ids[i]).collect(), adj, m }
    }

    /// Adds the edge between two dense indices in place. No-op if present.
    pub(crate) fn add_edge_idx(&mut self, i: usize, j: usize) {
        if i != j && !self.adj[i].contains(j) {
            self.link(i, j);
        }
    }

    /// Connected-component label of each vertex inside `within`; vertices
    /// outside get [`NO_COMP`]. Labels are assigned in index order.
    pub fn component_labels(&self, within: &FixedBitSet) -> Vec<u32> {
        let n = self.n();
        let mut label = vec![NO_COMP; n];
        let mut next = 0u32;
        let mut queue = VecDeque::new();
        for s in within.ones() {
            if label[s] != NO_COMP {
                continue;
            }
            label[s] = next;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for y in self.adj[x].ones() {
                    if within.contains(y) && label[y] == NO_COMP {
                        label[y] = next;
                        queue.push_back(y);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// Shortest path from `s` to `t` using only vertices of `within`
    /// (endpoints included). Ties are broken toward smaller indices.
    pub fn bfs_path(&self, s: usize, t: usize, within: &FixedBitSet) -> Option<Vec<usize>> {
        if !within.contains(s) || !within.contains(t) {
            return None;
        }
        let mut parent = vec![usize::MAX; self.n()];
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if x == t {
                let mut path = vec![t];
                let mut cur = t;
                while cur != s {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for y in self.adj[x].ones() {
                if within.contains(y) && parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Multi-source BFS distances inside `within`; sources get distance 1.
    pub(crate) fn layered_dist(&self, sources: &FixedBitSet, within: &FixedBitSet) -> (Vec<u32>, Vec<usize>) {
        let n = self.n();
        let mut dist = vec![u32::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for s in sources.ones() {
            if within.contains(s) {
                dist[s] = 1;
                queue.push_back(s);
            }
        }
        while let Some(x) = queue.pop_front() {
            for y in self.adj[x].ones() {
                if within.contains(y) && dist[y] == u32::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        (dist, parent)
    }

    /// Relabels the graph onto `0..n` preserving vertex order.
    pub fn compacted(&self) -> Graph {
        Graph { ids: (0..self.n() as u32).map(VertexId).collect(), adj: self.adj.clone(), m: self.m }
    }
}

pub const NO_COMP: u32 = u32::MAX;

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: u32) -> Graph {
        let e: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n as usize, &e).unwrap()
    }

    #[test]
    fn ids_survive_induced_subgraph() {
        let g = path(6);
        let h = g.induced_subgraph(&vset([1, 2, 4, 5])).unwrap();
        assert_eq!(h.vertices(), &[VertexId(1), VertexId(2), VertexId(4), VertexId(5)]);
        assert!(h.has_edge(VertexId(1), VertexId(2)));
        assert!(h.has_edge(VertexId(4), VertexId(5)));
        assert_eq!(h.m(), 2);
        assert_eq!(h.components().len(), 2);
    }

    #[test]
    fn closed_neighborhood_of_set_on_path() {
        let g = path(6);
        let s = g.closed_neighborhood_of_set(&vset([0, 4])).unwrap();
        assert_eq!(s, vset([0, 1, 3, 4, 5]));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(Graph::from_edges(3, &[(0, 0)]), Err(Error::ContractViolation(_))));
        assert!(matches!(Graph::from_edges(3, &[(0, 1), (1, 0)]), Err(Error::ContractViolation(_))));
        assert_eq!(Graph::from_edges(3, &[(0, 7)]), Err(Error::UnknownVertex(VertexId(7))));
        let g = path(3);
        assert_eq!(g.neighborhood(VertexId(9)), Err(Error::UnknownVertex(VertexId(9))));
        let extra: EdgeSet = [Edge::new(0u32, 1u32)].into();
        assert!(g.add_edges(&extra).is_err());
    }

    #[test]
    fn add_and_remove() {
        let g = path(4);
        let h = g.add_edges(&[Edge::new(3u32, 0u32)].into()).unwrap();
        assert_eq!(h.m(), 4);
        let r = h.remove_vertices(&vset([0])).unwrap();
        assert_eq!(r.edge_set(), [Edge::new(1u32, 2u32), Edge::new(2u32, 3u32)].into());
        assert_eq!(g.non_edges().count(), 3);
    }

    #[test]
    fn edge_serde_normalises() {
        let e: Edge = serde_json::from_str("[5, 2]").unwrap();
        assert_eq!(e, Edge::new(2u32, 5u32));
        assert_eq!(serde_json::to_string(&e).unwrap(), "[2,5]");
    }
}
