//! Neighbourhood structure around a minimum big AT, and the search for a
//! ripe one.
//!
//! The inner region of an AT is `N[v_i] \ N(c)` over `3 <= i <= p - 2`.
//! Repeatedly passing to the inner region of the current minimum AT either
//! reaches an AT whose inner region is interval (ripe) or, once the
//! nesting is deeper than the budget, proves there is no small solution.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::obstructions::{min_big_at, BigAt};
use crate::recognition::is_interval;

/// Classification of the vertices around a big AT.
///
/// Only vertices outside the AT and outside `N[c]` are classified. With
/// `v_0 = a` and `v_{p+1} = b`, such a vertex whose AT-path neighbours are
/// exactly `{v_i}` is in `s[i]`, exactly `{v_i, v_{i+1}}` in `d[i]`, and
/// exactly `{v_i, v_{i+1}, v_{i+2}}` in `t[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtContext {
    pub at: BigAt,
    /// Vertices adjacent to every `v_1..v_p`.
    pub dominating: VertexSet,
    /// `N[v_i] \ N(c)` over `3 <= i <= p - 2`.
    pub inner: VertexSet,
    /// `s[i]` for `i` in `0..=p+1`.
    pub s: Vec<VertexSet>,
    /// `d[i]` for `i` in `0..=p`.
    pub d: Vec<VertexSet>,
    /// `t[i]` for `i` in `0..p`.
    pub t: Vec<VertexSet>,
    /// `D_0 ∪ T_0 ∪ D_1 ∪ S_1 ∪ {v_1} ∪ S_2`
    pub boundary_b: VertexSet,
    /// `S_{p-1} ∪ D_{p-1} ∪ T_{p-1} ∪ D_p ∪ S_p ∪ {v_p}`
    pub boundary_e: VertexSet,
}

impl AtContext {
    pub fn inner_graph(&self, g: &Graph) -> Result<Graph> {
        g.induced_subgraph(&self.inner)
    }
}

pub fn build_context(g: &Graph, at: &BigAt) -> Result<AtContext> {
    at.validate(g)?;
    let p = at.p();
    if p < 5 {
        return Err(Error::ContractViolation(format!("p = {p} is too short for a context")));
    }
    let at_verts = at.vertices();
    let path_idx: Vec<usize> = (0..=p + 1).map(|i| g.index(at.v(i)).unwrap()).collect();
    let ci = g.idx(at.c)?;

    let mut dominating = VertexSet::new();
    for x in 0..g.n() {
        if path_idx[1..=p].iter().all(|&v| g.has_edge_idx(x, v)) {
            dominating.insert(g.id(x));
        }
    }
    let dom: Vec<VertexId> = dominating.iter().copied().collect();
    for (k, &x) in dom.iter().enumerate() {
        if !g.has_edge(x, at.c) {
            return Err(Error::StructureViolation(format!("dominating vertex {x} not adjacent to c")));
        }
        for &y in &dom[k + 1..] {
            if !g.has_edge(x, y) {
                return Err(Error::StructureViolation(format!("dominating vertices {x}, {y} not adjacent")));
            }
        }
    }

    let nc = g.closed_nbhd(ci);
    let mut inner = g.empty_mask();
    for &v in &path_idx[3..=p - 2] {
        inner.union_with(&g.closed_nbhd(v));
    }
    let mut open_c = g.adj(ci).clone();
    open_c.intersect_with(&inner);
    inner.difference_with(&open_c);

    let mut s = vec![VertexSet::new(); p + 2];
    let mut d = vec![VertexSet::new(); p + 1];
    let mut t = vec![VertexSet::new(); p];
    for x in 0..g.n() {
        let id = g.id(x);
        if nc.contains(x) || at_verts.contains(&id) {
            continue;
        }
        let hits: Vec<usize> = (0..=p + 1).filter(|&i| g.has_edge_idx(x, path_idx[i])).collect();
        let Some(&first) = hits.first() else { continue };
        let consecutive = hits.iter().enumerate().all(|(k, &i)| i == first + k);
        if !consecutive || hits.len() > 3 {
            return Err(Error::StructureViolation(format!(
                "vertex {id} outside N(c) sees path positions {hits:?}"
            )));
        }
        match hits.len() {
            1 => s[first].insert(id),
            2 => d[first].insert(id),
            _ => t[first].insert(id),
        };
    }

    let mut boundary_b = VertexSet::new();
    for part in [&d[0], &t[0], &d[1], &s[1], &s[2]] {
        boundary_b.extend(part);
    }
    boundary_b.insert(at.v(1));
    let mut boundary_e = VertexSet::new();
    for part in [&s[p - 1], &d[p - 1], &t[p - 1], &d[p], &s[p]] {
        boundary_e.extend(part);
    }
    boundary_e.insert(at.v(p));

    Ok(AtContext { at: at.clone(), dominating, inner: g.ids_of(&inner), s, d, t, boundary_b, boundary_e })
}

/// A ripe AT together with the graph in which its context was computed.
#[derive(Clone, Debug)]
pub struct RipeAt {
    pub context: AtContext,
    /// Number of inner-region steps taken to reach it.
    pub depth: usize,
    /// The graph `G_depth` hosting the AT.
    pub host: Graph,
    /// Minimum AT found at each level, outermost first.
    pub levels: Vec<BigAt>,
}

#[derive(Clone, Debug)]
pub enum RipeOutcome {
    Ripe(Box<RipeAt>),
    /// The nesting is deeper than the budget allows.
    NoSolution,
}

/// Walks inner regions of minimum big ATs until one is ripe or the depth
/// exceeds `k`. Requires `g` chordal, free of small obstructions and not
/// interval.
pub fn find_ripe_at(g: &Graph, k: usize) -> Result<RipeOutcome> {
    let mut current = g.clone();
    let mut at = min_big_at(&current)
        .ok_or_else(|| Error::StructureViolation("no big AT in a non-interval clean graph".into()))?;
    let mut levels = vec![at.clone()];
    for i in 0.. {
        let ctx = build_context(&current, &at)?;
        let next = ctx.inner_graph(&current)?;
        if is_interval(&next) {
            return Ok(RipeOutcome::Ripe(Box::new(RipeAt { context: ctx, depth: i, host: current, levels })));
        }
        if i > k {
            return Ok(RipeOutcome::NoSolution);
        }
        at = min_big_at(&next).ok_or_else(|| {
            Error::StructureViolation("inner region is non-interval but has no big AT".into())
        })?;
        levels.push(at.clone());
        current = next;
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gadget_type1, nested_gadget};
    use crate::graph::vset;

    #[test]
    fn bare_gadget_context() {
        let (g, at) = gadget_type1(7);
        let ctx = build_context(&g, &at).unwrap();
        assert_eq!(ctx.dominating, vset([at.u.0]));
        assert_eq!(ctx.inner, vset(2..=6));
        assert!(ctx.s.iter().chain(&ctx.d).chain(&ctx.t).all(|x| x.is_empty()));
        assert_eq!(ctx.boundary_b, vset([1]));
        assert_eq!(ctx.boundary_e, vset([7]));
    }

    fn with_extra(p: usize, nbrs: &[u32]) -> (Graph, BigAt, VertexId) {
        let (g, at) = gadget_type1(p);
        let x = VertexId(g.n() as u32);
        let mut e: Vec<(VertexId, VertexId)> = g.edges().map(Into::into).collect();
        e.extend(nbrs.iter().map(|&y| (x, VertexId(y))));
        let h = Graph::new(g.vertices().iter().copied().chain([x]), e).unwrap();
        (h, at, x)
    }

    #[test]
    fn second_dominating_vertex() {
        let p = 7u32;
        // adjacent to v1..v7, c and u
        let mut nb: Vec<u32> = (1..=p).collect();
        nb.extend([p + 3, p + 2]);
        let (g, at, x) = with_extra(7, &nb);
        let ctx = build_context(&g, &at).unwrap();
        assert_eq!(ctx.dominating, [at.u, x].into());
        // without the edge to u the dominating set is not a clique
        let mut nb: Vec<u32> = (1..=p).collect();
        nb.push(p + 3);
        let (g, at, _) = with_extra(7, &nb);
        assert!(matches!(build_context(&g, &at), Err(Error::StructureViolation(_))));
    }

    #[test]
    fn boundary_membership() {
        let (g, at, x) = with_extra(7, &[1, 2]);
        let ctx = build_context(&g, &at).unwrap();
        assert!(ctx.d[1].contains(&x));
        assert!(ctx.boundary_b.contains(&x));
        let (g, at, x) = with_extra(7, &[6, 7, 8]);
        let ctx = build_context(&g, &at).unwrap();
        assert!(ctx.t[6].contains(&x));
        assert!(ctx.boundary_e.contains(&x));
        let (g, at, _) = with_extra(7, &[2, 4]);
        assert!(matches!(build_context(&g, &at), Err(Error::StructureViolation(_))));
    }

    #[test]
    fn ripe_depth_tracks_nesting() {
        for depth in 0..3 {
            let (g, ats) = nested_gadget(depth, 7);
            match find_ripe_at(&g, 10).unwrap() {
                RipeOutcome::Ripe(r) => {
                    assert_eq!(r.depth, depth);
                    assert_eq!(r.context.at.vertices(), ats[depth].vertices());
                    assert_eq!(r.levels.len(), depth + 1);
                }
                RipeOutcome::NoSolution => panic!("expected ripe"),
            }
        }
    }

    #[test]
    fn deep_nesting_aborts() {
        let (g, _) = nested_gadget(3, 7);
        assert!(matches!(find_ripe_at(&g, 1).unwrap(), RipeOutcome::NoSolution));
        assert!(matches!(find_ripe_at(&g, 2).unwrap(), RipeOutcome::Ripe(_)));
    }
}
