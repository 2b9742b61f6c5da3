use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use super::{Graph, VertexId, VertexSet};
use crate::error::{Error, Result};

/// Minimum vertex set separating `s` from `t` in `g - forbidden`.
///
/// Computed by unit-capacity max-flow on the split graph. The returned cut is
/// the one closest to `s`, so the answer is deterministic.
pub fn minimum_vertex_separator(
    g: &Graph,
    s: VertexId,
    t: VertexId,
    forbidden: &VertexSet,
) -> Result<VertexSet> {
    let si = g.idx(s)?;
    let ti = g.idx(t)?;
    if si == ti {
        return Err(Error::ContractViolation("source equals sink".into()));
    }
    if forbidden.contains(&s) || forbidden.contains(&t) {
        return Err(Error::ContractViolation("source or sink is forbidden".into()));
    }
    let mut allowed = g.mask_of(forbidden)?;
    allowed.toggle_range(..);
    match min_separator_idx(g, si, ti, &allowed) {
        Some(cut) => Ok(g.ids_of(&cut)),
        None => Err(Error::NoSeparator(s, t)),
    }
}

struct Arc {
    to: usize,
    cap: u32,
}

/// Index-level separator inside `allowed`; `None` when `s` and `t` are adjacent.
pub(crate) fn min_separator_idx(
    g: &Graph,
    s: usize,
    t: usize,
    allowed: &FixedBitSet,
) -> Option<FixedBitSet> {
    if g.has_edge_idx(s, t) {
        return None;
    }
    let n = g.n();
    const INF: u32 = u32::MAX / 4;
    // node 2v = v_in, 2v+1 = v_out
    let mut arcs: Vec<Arc> = Vec::new();
    let mut head: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
    let add = |arcs: &mut Vec<Arc>, head: &mut Vec<Vec<usize>>, a: usize, b: usize, c: u32| {
        head[a].push(arcs.len());
        arcs.push(Arc { to: b, cap: c });
        head[b].push(arcs.len());
        arcs.push(Arc { to: a, cap: 0 });
    };
    for v in allowed.ones() {
        let c = if v == s || v == t { INF } else { 1 };
        add(&mut arcs, &mut head, 2 * v, 2 * v + 1, c);
        for w in g.adj(v).ones() {
            if allowed.contains(w) {
                add(&mut arcs, &mut head, 2 * v + 1, 2 * w, INF);
            }
        }
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    loop {
        let mut prev = vec![usize::MAX; 2 * n];
        let mut seen = vec![false; 2 * n];
        seen[source] = true;
        let mut q = VecDeque::from([source]);
        while let Some(x) = q.pop_front() {
            if x == sink {
                break;
            }
            for &a in &head[x] {
                let y = arcs[a].to;
                if arcs[a].cap > 0 && !seen[y] {
                    seen[y] = true;
                    prev[y] = a;
                    q.push_back(y);
                }
            }
        }
        if !seen[sink] {
            let mut cut = g.empty_mask();
            for v in allowed.ones() {
                if v != s && v != t && seen[2 * v] && !seen[2 * v + 1] {
                    cut.insert(v);
                }
            }
            return Some(cut);
        }
        let mut x = sink;
        while x != source {
            let a = prev[x];
            arcs[a].cap -= 1;
            arcs[a ^ 1].cap += 1;
            x = arcs[a ^ 1].to;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vset;

    #[test]
    fn path_cut_is_closest_to_source() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let cut = minimum_vertex_separator(&g, VertexId(0), VertexId(4), &VertexSet::new()).unwrap();
        assert_eq!(cut, vset([1]));
    }

    #[test]
    fn cycle_needs_two() {
        let e: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        let g = Graph::from_edges(8, &e).unwrap();
        let cut = minimum_vertex_separator(&g, VertexId(0), VertexId(4), &VertexSet::new()).unwrap();
        assert_eq!(cut, vset([1, 7]));
        let cut = minimum_vertex_separator(&g, VertexId(0), VertexId(4), &vset([6])).unwrap();
        assert_eq!(cut.len(), 1);
    }

    #[test]
    fn errors() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            minimum_vertex_separator(&g, VertexId(0), VertexId(1), &VertexSet::new()),
            Err(Error::NoSeparator(VertexId(0), VertexId(1)))
        );
        assert!(matches!(
            minimum_vertex_separator(&g, VertexId(0), VertexId(0), &VertexSet::new()),
            Err(Error::ContractViolation(_))
        ));
        assert!(matches!(
            minimum_vertex_separator(&g, VertexId(0), VertexId(2), &vset([2])),
            Err(Error::ContractViolation(_))
        ));
        // disconnected: empty separator
        let h = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(minimum_vertex_separator(&h, VertexId(0), VertexId(2), &VertexSet::new())
            .unwrap()
            .is_empty());
    }
}
