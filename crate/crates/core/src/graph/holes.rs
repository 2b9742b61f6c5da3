use fixedbitset::FixedBitSet;

use super::{Graph, VertexId};

/// Length of a shortest hole (induced cycle of length at least 4).
pub fn shortest_hole_len(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    for b in 0..n {
        let nb: Vec<usize> = g.adj(b).ones().collect();
        for (x, &a) in nb.iter().enumerate() {
            for &c in &nb[x + 1..] {
                if g.has_edge_idx(a, c) {
                    continue;
                }
                let mut within = g.closed_nbhd(b);
                within.toggle_range(..);
                within.insert(a);
                within.insert(c);
                if let Some(p) = g.bfs_path(a, c, &within) {
                    let len = p.len() + 1;
                    if best.is_none_or(|bl| len < bl) {
                        best = Some(len);
                        if len == 4 {
                            return best;
                        }
                    }
                }
            }
        }
    }
    best
}

/// Shortest hole of length at least `min_len`, in canonical form.
///
/// Canonical form: among all holes of the minimum admissible length, the
/// lexicographically smallest vertex sequence. It starts at its smallest
/// vertex and continues toward the smaller of that vertex's two cycle
/// neighbours.
pub fn find_chordless_cycle(g: &Graph, min_len: usize) -> Option<Vec<VertexId>> {
    shortest_hole_idx(g, min_len).map(|c| c.into_iter().map(|i| g.id(i)).collect())
}

pub(crate) fn shortest_hole_idx(g: &Graph, min_len: usize) -> Option<Vec<usize>> {
    let min_len = min_len.max(4);
    let l0 = shortest_hole_len(g)?;
    if l0 >= min_len {
        return canonical_hole_of_len(g, l0);
    }
    (min_len..=g.n()).find_map(|l| canonical_hole_of_len(g, l))
}

/// Lexicographically smallest hole with exactly `len` vertices.
pub(crate) fn canonical_hole_of_len(g: &Graph, len: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if len < 4 || len > n {
        return None;
    }
    for s in 0..n {
        if n - s < len {
            break;
        }
        let mut allowed = g.empty_mask();
        allowed.insert_range(s + 1..);
        let mut ns = g.adj(s).clone();
        ns.intersect_with(&allowed);
        if ns.count_ones(..) < 2 {
            continue;
        }
        let dist = dist_to_set(g, &ns, &allowed);
        let mut st = HoleSearch { g, len, allowed: &allowed, ns: &ns, dist: &dist, path: vec![s] };
        for x1 in ns.ones() {
            st.path.push(x1);
            let mut blocked = g.empty_mask();
            blocked.insert(s);
            if st.extend(blocked) {
                return Some(st.path);
            }
            st.path.pop();
        }
    }
    None
}

fn dist_to_set(g: &Graph, targets: &FixedBitSet, within: &FixedBitSet) -> Vec<u32> {
    let (d, _) = g.layered_dist(targets, within);
    // layered_dist gives sources distance 1; shift so targets are 0
    d.into_iter().map(|x| if x == u32::MAX { x } else { x - 1 }).collect()
}

struct HoleSearch<'a> {
    g: &'a Graph,
    len: usize,
    allowed: &'a FixedBitSet,
    ns: &'a FixedBitSet,
    dist: &'a [u32],
    path: Vec<usize>,
}

impl HoleSearch<'_> {
    /// `blocked` holds s and the closed neighbourhoods of path[1..j-1].
    fn extend(&mut self, blocked: FixedBitSet) -> bool {
        let j = self.path.len();
        let last = *self.path.last().unwrap();
        let prev = self.path[j - 2];
        let mut cand = self.g.adj(last).clone();
        cand.intersect_with(self.allowed);
        cand.difference_with(&blocked);
        cand.set(prev, false);
        if j == self.len - 1 {
            cand.intersect_with(self.ns);
            // closing vertex must exceed path[1], otherwise the reverse was found first
            let x1 = self.path[1];
            if let Some(x) = cand.ones().find(|&x| x > x1) {
                self.path.push(x);
                return true;
            }
            return false;
        }
        cand.difference_with(self.ns);
        let remaining = (self.len - 1 - j) as u32;
        let mut next_blocked = blocked;
        next_blocked.union_with(&self.g.closed_nbhd(last));
        for x in cand.ones() {
            if self.dist[x] > remaining {
                continue;
            }
            self.path.push(x);
            if self.extend(next_blocked.clone()) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: u32) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n as usize, &e).unwrap()
    }

    #[test]
    fn c4_canonical() {
        let g = cycle(4);
        assert_eq!(
            find_chordless_cycle(&g, 4),
            Some(vec![VertexId(0), VertexId(1), VertexId(2), VertexId(3)])
        );
    }

    #[test]
    fn c5_plus_chord_gives_c4() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)]).unwrap();
        let c = find_chordless_cycle(&g, 4).unwrap();
        assert_eq!(c, vec![VertexId(1), VertexId(2), VertexId(3), VertexId(4)]);
        assert_eq!(shortest_hole_len(&g), Some(4));
    }

    #[test]
    fn min_len_skips_short_holes() {
        // C4 on 0..3 and a disjoint C6 on 4..9
        let mut e = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
        e.extend((0..6).map(|i| (4 + i, 4 + (i + 1) % 6)));
        let g = Graph::from_edges(10, &e).unwrap();
        let c = find_chordless_cycle(&g, 5).unwrap();
        assert_eq!(c.len(), 6);
        assert_eq!(c[0], VertexId(4));
        assert_eq!(c[1], VertexId(5));
        assert!(find_chordless_cycle(&g, 7).is_none());
    }

    #[test]
    fn chordal_has_none() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(find_chordless_cycle(&g, 4).is_none());
        assert!(shortest_hole_len(&g).is_none());
    }

    #[test]
    fn direction_is_toward_smaller_neighbour() {
        // cycle 0-5-1-4-2-3-0 relabelled
        let g = Graph::from_edges(6, &[(0, 5), (5, 1), (1, 4), (4, 2), (2, 3), (3, 0)]).unwrap();
        let c: Vec<u32> = find_chordless_cycle(&g, 4).unwrap().iter().map(|v| v.0).collect();
        assert_eq!(c, vec![0, 3, 2, 4, 1, 5]);
    }
}
