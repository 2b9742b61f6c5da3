//! Long induced cycles in graphs without small obstructions: neighbourhood
//! classification, clean and ripe cycles, and minimum cycle-separators.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::holes::shortest_hole_idx;
use crate::graph::{shortest_hole_len, Graph, VertexId, VertexSet};
use crate::obstructions::{best_template, AtKind};

pub const MIN_LONG_CYCLE: usize = 9;

/// Neighbourhood of a chordless cycle `v_0..v_{p-1}`. Indices are mod `p`:
/// `s[i]` sees only `v_i`, `d[i]` only `v_i, v_{i+1}`, `t[i]` only
/// `v_i, v_{i+1}, v_{i+2}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleStructure {
    pub cycle: Vec<VertexId>,
    /// Vertices adjacent to every cycle vertex, D(C).
    pub dominating: VertexSet,
    pub s: Vec<VertexSet>,
    pub d: Vec<VertexSet>,
    pub t: Vec<VertexSet>,
}

impl CycleStructure {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    /// N[C] \ D(C).
    pub fn region(&self, g: &Graph) -> Result<VertexSet> {
        let c: VertexSet = self.cycle.iter().copied().collect();
        let mut r = g.closed_neighborhood_of_set(&c)?;
        r.retain(|v| !self.dominating.contains(v));
        Ok(r)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CleanCycle {
    pub structure: CycleStructure,
    pub ripe: bool,
}

fn check_chordless(g: &Graph, cycle: &[VertexId]) -> Result<Vec<usize>> {
    let p = cycle.len();
    let idx: Vec<usize> = cycle.iter().map(|&v| g.idx(v)).collect::<Result<_>>()?;
    for i in 0..p {
        for j in i + 1..p {
            let consecutive = j == i + 1 || (i == 0 && j == p - 1);
            if idx[i] == idx[j] || g.has_edge_idx(idx[i], idx[j]) != consecutive {
                return Err(Error::ContractViolation("not a chordless cycle".into()));
            }
        }
    }
    Ok(idx)
}

pub fn classify_cycle(g: &Graph, cycle: &[VertexId]) -> Result<CycleStructure> {
    let p = cycle.len();
    if p < MIN_LONG_CYCLE {
        return Err(Error::ContractViolation(format!("cycle of length {p} is shorter than {MIN_LONG_CYCLE}")));
    }
    let idx = check_chordless(g, cycle)?;
    let on_cycle = g.mask_of_idx(idx.iter().copied());
    let mut dominating = VertexSet::new();
    let mut s = vec![VertexSet::new(); p];
    let mut d = vec![VertexSet::new(); p];
    let mut t = vec![VertexSet::new(); p];
    for x in 0..g.n() {
        if on_cycle.contains(x) {
            continue;
        }
        let hits: Vec<usize> = (0..p).filter(|&i| g.has_edge_idx(x, idx[i])).collect();
        if hits.is_empty() {
            continue;
        }
        if hits.len() == p {
            dominating.insert(g.id(x));
            continue;
        }
        // start of the cyclic run: a hit whose predecessor is not a hit
        let start = hits.iter().copied().find(|&i| !hits.contains(&((i + p - 1) % p)));
        let ok = hits.len() <= 3
            && start.is_some_and(|st| (0..hits.len()).all(|k| hits.contains(&((st + k) % p))));
        if !ok {
            return Err(Error::StructureViolation(format!(
                "vertex {} sees cycle positions {hits:?}",
                g.id(x)
            )));
        }
        let st = start.unwrap();
        match hits.len() {
            1 => s[st].insert(g.id(x)),
            2 => d[st].insert(g.id(x)),
            _ => t[st].insert(g.id(x)),
        };
    }
    let cs = CycleStructure { cycle: cycle.to_vec(), dominating, s, d, t };
    let closed = g.closed_neighborhood_of_set(&cycle.iter().copied().collect())?;
    for &x in &cs.dominating {
        for &y in &closed {
            if x != y && !g.has_edge(x, y) {
                return Err(Error::StructureViolation(format!("dominating vertex {x} misses {y} in N[C]")));
            }
        }
    }
    Ok(cs)
}

/// Shortest hole inside N(v_i) \ V(C), over all i; ties to the smaller i.
fn hole_in_cycle_neighbourhood(g: &Graph, cs: &CycleStructure) -> Result<Option<Vec<VertexId>>> {
    let on_cycle = g.mask_of(&cs.cycle.iter().copied().collect())?;
    let mut best: Option<Vec<VertexId>> = None;
    for &v in &cs.cycle {
        let mut nb = g.adj(g.idx(v)?).clone();
        nb.difference_with(&on_cycle);
        let h = g.induced_by_mask(&nb);
        if shortest_hole_len(&h).is_none() {
            continue;
        }
        if let Some(c) = shortest_hole_idx(&h, 4) {
            let ids: Vec<VertexId> = c.into_iter().map(|i| h.id(i)).collect();
            if best.as_ref().is_none_or(|b| ids.len() < b.len()) {
                best = Some(ids);
            }
        }
    }
    Ok(best)
}

/// Definition check: no N(v_i) \ V(C) contains a hole.
pub fn is_clean(g: &Graph, cs: &CycleStructure) -> Result<bool> {
    Ok(hole_in_cycle_neighbourhood(g, cs)?.is_none())
}

/// Clean and free of AT templates in N[C] \ D(C).
///
/// The cycle itself lies in that region and, for length at least 6,
/// carries asteroidal triples of its own, so the AT condition is read as
/// "no template AT": no induced type-1 or type-2 template.
pub fn is_ripe(g: &Graph, cs: &CycleStructure) -> Result<bool> {
    if !is_clean(g, cs)? {
        return Ok(false);
    }
    Ok(!region_has_template(g, cs)?)
}

fn region_has_template(g: &Graph, cs: &CycleStructure) -> Result<bool> {
    let h = g.induced_subgraph(&cs.region(g)?)?;
    Ok(best_template(&h, AtKind::Type1, 2, usize::MAX).is_some()
        || best_template(&h, AtKind::Type2, 1, usize::MAX).is_some())
}

/// Descends from a shortest hole into holes of cycle neighbourhoods until
/// the cycle is clean.
pub fn find_clean_cycle(g: &Graph) -> Result<Option<CleanCycle>> {
    let Some(start) = shortest_hole_idx(g, 4) else { return Ok(None) };
    let mut cycle: Vec<VertexId> = start.into_iter().map(|i| g.id(i)).collect();
    for _ in 0..=g.n() {
        let cs = classify_cycle(g, &cycle)?;
        match hole_in_cycle_neighbourhood(g, &cs)? {
            Some(inner) => cycle = inner,
            None => {
                let ripe = !region_has_template(g, &cs)?;
                return Ok(Some(CleanCycle { structure: cs, ripe }));
            }
        }
    }
    Err(Error::StructureViolation("clean-cycle descent did not terminate".into()))
}

/// Minimum X ⊆ N[C] \ D(C) such that N[C] \ (D(C) ∪ X) induces a chordal
/// graph. Among minimum sets the lexicographically smallest is returned.
pub fn min_cycle_separator(g: &Graph, rc: &CleanCycle) -> Result<VertexSet> {
    if !rc.ripe {
        return Err(Error::Precondition("cycle is not ripe".into()));
    }
    let region = rc.structure.region(g)?;
    cycle_separator_capped(g, &rc.structure, &region, region.len())?
        .ok_or_else(|| Error::StructureViolation("no cycle separator within the region".into()))
}

/// As [`min_cycle_separator`] but gives up (returns `None`) above `cap`.
pub(crate) fn cycle_separator_capped(
    g: &Graph,
    cs: &CycleStructure,
    region: &VertexSet,
    cap: usize,
) -> Result<Option<VertexSet>> {
    let h = g.induced_subgraph(region)?;
    let n = h.n();
    let mut constraints: Vec<FixedBitSet> = vec![h.mask_of(&cs.cycle.iter().copied().collect())?];
    let mut size = 1;
    while size <= cap.min(n) {
        match lex_first_hitting_set(n, &constraints, size) {
            None => size += 1,
            Some(x) => {
                let mut keep = h.full_mask();
                for &i in &x {
                    keep.set(i, false);
                }
                let rest = h.induced_by_mask(&keep);
                match shortest_hole_idx(&rest, 4) {
                    None => return Ok(Some(x.into_iter().map(|i| h.id(i)).collect())),
                    Some(hole) => {
                        let ids = hole.into_iter().map(|i| rest.id(i));
                        constraints.push(h.mask_of_idx(ids.map(|v| h.index(v).unwrap())));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Lexicographically first `size`-subset of `0..n` meeting every constraint.
fn lex_first_hitting_set(n: usize, constraints: &[FixedBitSet], size: usize) -> Option<Vec<usize>> {
    fn lower_bound(unhit: &[&FixedBitSet]) -> usize {
        // greedy packing of pairwise disjoint constraints
        let mut used: Option<FixedBitSet> = None;
        let mut count = 0;
        for c in unhit {
            match &mut used {
                None => {
                    used = Some((*c).clone());
                    count = 1;
                }
                Some(u) => {
                    if u.is_disjoint(c) {
                        u.union_with(c);
                        count += 1;
                    }
                }
            }
        }
        count
    }
    fn rec(n: usize, cons: &[FixedBitSet], size: usize, next: usize, chosen: &mut Vec<usize>) -> bool {
        let unhit: Vec<&FixedBitSet> =
            cons.iter().filter(|c| !chosen.iter().any(|&x| c.contains(x))).collect();
        if unhit.is_empty() {
            // pad with the smallest unused indices to reach exactly `size`
            let mut i = next;
            while chosen.len() < size && i < n {
                chosen.push(i);
                i += 1;
            }
            return chosen.len() == size;
        }
        let left = size - chosen.len();
        if left == 0 || lower_bound(&unhit) > left {
            return false;
        }
        // some unhit constraint must be hit by an index >= next
        if unhit.iter().any(|c| c.ones().all(|i| i < next)) {
            return false;
        }
        for x in next..n {
            chosen.push(x);
            if rec(n, cons, size, x + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    rec(n, constraints, size, 0, &mut chosen).then_some(chosen)
}
