//! Instance families: AT gadgets, nested gadgets, long cycles and seeded
//! random graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::obstructions::{AtKind, BigAt};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn ids(v: &[u32]) -> Vec<VertexId> {
    v.iter().map(|&x| VertexId(x)).collect()
}

/// Type-1 template on `p + 4` vertices: a = 0, v_i = i, b = p + 1, u = p + 2, c = p + 3.
pub fn gadget_type1(p: usize) -> (Graph, BigAt) {
    assert!(p >= 2, "type-1 templates need p >= 2");
    let at = BigAt {
        kind: AtKind::Type1,
        a: VertexId(0),
        b: VertexId(p as u32 + 1),
        c: VertexId(p as u32 + 3),
        u: VertexId(p as u32 + 2),
        w: None,
        path: ids(&(1..=p as u32).collect::<Vec<_>>()),
    };
    let g = Graph::new((0..p as u32 + 4).map(VertexId), at.template_edges().into_iter().map(Into::into))
        .expect("valid template");
    (g, at)
}

/// Type-2 template on `p + 5` vertices: a = 0, v_i = i, b = p + 1, u = p + 2,
/// w = p + 3, c = p + 4.
pub fn gadget_type2(p: usize) -> (Graph, BigAt) {
    assert!(p >= 1, "type-2 templates need p >= 1");
    let p32 = p as u32;
    let at = BigAt {
        kind: AtKind::Type2,
        a: VertexId(0),
        b: VertexId(p32 + 1),
        c: VertexId(p32 + 4),
        u: VertexId(p32 + 2),
        w: Some(VertexId(p32 + 3)),
        path: ids(&(1..=p32).collect::<Vec<_>>()),
    };
    let g = Graph::new((0..p32 + 5).map(VertexId), at.template_edges().into_iter().map(Into::into))
        .expect("valid template");
    (g, at)
}

pub fn long_cycle(len: usize) -> Graph {
    let e: Vec<(u32, u32)> = (0..len as u32).map(|i| (i, (i + 1) % len as u32)).collect();
    Graph::from_edges(len, &e).expect("valid cycle")
}

/// Type-1 gadgets nested `depth` levels deep, each with path length `p`.
///
/// Level `l + 1` sits entirely inside the neighbourhood of the hub and middle
/// path vertex of every level up to `l`, so the graph stays chordal and
/// each level's inner region contains the next gadget. Returns the gadgets
/// outermost first.
pub fn nested_gadget(depth: usize, p: usize) -> (Graph, Vec<BigAt>) {
    assert!(p >= 7, "nested gadgets need p >= 7");
    let size = p as u32 + 4;
    let mid = (p + 1) / 2;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut ats = Vec::new();
    let mut anchors: Vec<u32> = Vec::new();
    for level in 0..=depth as u32 {
        let off = level * size;
        let (_, at) = gadget_type1(p);
        let shift = |v: VertexId| VertexId(v.0 + off);
        let at = BigAt {
            kind: at.kind,
            a: shift(at.a),
            b: shift(at.b),
            c: shift(at.c),
            u: shift(at.u),
            w: None,
            path: at.path.iter().map(|&v| shift(v)).collect(),
        };
        for e in at.template_edges() {
            edges.push((e.u().0, e.v().0));
        }
        for x in off..off + size {
            for &y in &anchors {
                edges.push((x, y));
            }
        }
        anchors.push(at.u.0);
        anchors.push(at.v(mid).0);
        ats.push(at);
    }
    let n = (depth + 1) * size as usize;
    (Graph::from_edges(n, &edges).expect("valid nesting"), ats)
}

/// G(n, q) with a fixed seed.
pub fn gnp(n: usize, q: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&q) {
        return Err(Error::InvalidParameter(format!("edge probability {q} outside [0, 1]")));
    }
    let mut r = rng(seed);
    let mut e = Vec::new();
    for i in 0..n as u32 {
        for j in i + 1..n as u32 {
            if r.gen_bool(q) {
                e.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &e)
}

/// Random chordal graph: each new vertex attaches to a random clique inside
/// the closed neighbourhood of a random earlier vertex.
pub fn random_chordal(n: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut e = Vec::new();
    for v in 1..n as u32 {
        if r.gen_bool(0.1) {
            continue;
        }
        let x = r.gen_range(0..v);
        let mut clique = vec![x];
        let mut nb = adj[x as usize].clone();
        nb.shuffle(&mut r);
        for y in nb {
            if r.gen_bool(0.5) && clique.iter().all(|&z| adj[z as usize].contains(&y)) {
                clique.push(y);
            }
        }
        for &y in &clique {
            adj[y as usize].push(v);
            adj[v as usize].push(y);
            e.push((y, v));
        }
    }
    Graph::from_edges(n, &e).expect("valid chordal graph")
}

/// Random interval graph from `n` random intervals on `[0, 4n)`.
pub fn random_interval(n: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let span = (4 * n).max(1) as u32;
    let iv: Vec<(u32, u32)> = (0..n)
        .map(|_| {
            let l = r.gen_range(0..span);
            let len = r.gen_range(1..=6);
            (l, l + len)
        })
        .collect();
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if iv[i].0 <= iv[j].1 && iv[j].0 <= iv[i].1 {
                e.push((i as u32, j as u32));
            }
        }
    }
    Graph::from_edges(n, &e).expect("valid interval graph")
}

/// Disjoint union of `g` (keeping IDs) and a random interval graph on `host`
/// vertices, joined by a single edge from `g`'s vertex `anchor`.
pub fn attach_interval_host(g: &Graph, anchor: VertexId, host: usize, seed: u64) -> Result<Graph> {
    let base = g.vertices().iter().map(|v| v.0).max().map_or(0, |m| m + 1);
    let h = random_interval(host, seed);
    let mut edges: Vec<(VertexId, VertexId)> = g.edges().map(Into::into).collect();
    edges.extend(h.edges().map(|e| (VertexId(e.u().0 + base), VertexId(e.v().0 + base))));
    if host > 0 {
        g.idx(anchor)?;
        edges.push((anchor, VertexId(base)));
    }
    let verts = g.vertices().iter().copied().chain((0..host as u32).map(|i| VertexId(base + i)));
    Graph::new(verts, edges)
}

/// Seeded instance for audits: mixes G(n, q), random chordal graphs, small
/// gadgets and perturbed interval graphs.
pub fn audit_instance(n: usize, seed: u64) -> Graph {
    let mut r = rng(seed ^ 0x9e37_79b9_7f4a_7c15);
    match r.gen_range(0..4) {
        0 => {
            let q = r.gen_range(0.15..0.45);
            gnp(n, q, seed).expect("valid probability")
        }
        1 => random_chordal(n, seed),
        2 => {
            let base = random_interval(n, seed);
            let mut e: Vec<(u32, u32)> = base.edges().map(|e| (e.u().0, e.v().0)).collect();
            for _ in 0..r.gen_range(1..=3) {
                let i = r.gen_range(0..n as u32);
                let j = r.gen_range(0..n as u32);
                if i != j && !base.has_edge(VertexId(i), VertexId(j)) && !e.contains(&(i.min(j), i.max(j))) {
                    e.push((i.min(j), i.max(j)));
                }
            }
            Graph::from_edges(n, &e).expect("valid perturbation")
        }
        _ => {
            // small gadget padded with random pendant vertices
            let (g, _) = if n >= 11 {
                if r.gen_bool(0.5) {
                    gadget_type1(7)
                } else {
                    gadget_type2(6)
                }
            } else if n >= 7 && r.gen_bool(0.5) {
                gadget_type1(n.min(9) - 4)
            } else {
                gadget_type2(1)
            };
            let mut e: Vec<(u32, u32)> = g.edges().map(|e| (e.u().0, e.v().0)).collect();
            for v in g.n() as u32..n as u32 {
                let x = r.gen_range(0..v);
                e.push((x, v));
            }
            Graph::from_edges(n.max(g.n()), &e).expect("valid padded gadget")
        }
    }
}

/// One representative of each isomorphism class of graphs on `n <= 7`
/// vertices, as canonical edge lists.
pub fn all_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "exhaustive enumeration is limited to 7 vertices");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let m = pairs.len();
    let mut bit = vec![vec![usize::MAX; n]; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        bit[i][j] = k;
        bit[j][i] = k;
    }
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << m) {
        let mut deg = vec![0usize; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                deg[i] += 1;
                deg[j] += 1;
            }
        }
        if deg.windows(2).any(|w| w[0] < w[1]) {
            continue;
        }
        if is_canonical(mask, n, &pairs, &bit, &deg) {
            let e: Vec<(u32, u32)> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &(i, j))| (i as u32, j as u32))
                .collect();
            out.push(Graph::from_edges(n, &e).expect("valid graph"));
        }
    }
    out
}

/// A degree-sorted mask is canonical when no degree-preserving relabelling
/// gives a smaller mask.
fn is_canonical(mask: u32, n: usize, pairs: &[(usize, usize)], bit: &[Vec<usize>], deg: &[usize]) -> bool {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut blocks = Vec::new();
    let mut s = 0;
    for i in 1..=n {
        if i == n || deg[i] != deg[s] {
            blocks.push((s, i));
            s = i;
        }
    }
    fn rec(
        b: usize,
        blocks: &[(usize, usize)],
        perm: &mut Vec<usize>,
        check: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if b == blocks.len() {
            return check(perm);
        }
        let (lo, hi) = blocks[b];
        permute(lo, lo, hi, b, blocks, perm, check)
    }
    fn permute(
        k: usize,
        lo: usize,
        hi: usize,
        b: usize,
        blocks: &[(usize, usize)],
        perm: &mut Vec<usize>,
        check: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if k == hi {
            return rec(b + 1, blocks, perm, check);
        }
        for i in k..hi {
            perm.swap(k, i);
            if !permute(k + 1, lo, hi, b, blocks, perm, check) {
                perm.swap(k, i);
                return false;
            }
            perm.swap(k, i);
        }
        true
    }
    let mut check = |perm: &[usize]| -> bool {
        let mut img = 0u32;
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                img |= 1 << bit[perm[i]][perm[j]];
            }
        }
        img >= mask
    };
    rec(0, &blocks, &mut perm, &mut check)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::obstructions::find_small_obstruction;
    use crate::recognition::{is_chordal, is_interval};

    #[test]
    fn graph_counts_match_known_sequence() {
        let counts: Vec<usize> = (1..=6).map(|n| all_graphs_up_to_iso(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn gadgets_validate() {
        for p in 2..10 {
            let (g, at) = gadget_type1(p);
            at.validate(&g).unwrap();
            assert_eq!(g.n(), p + 4);
        }
        for p in 1..10 {
            let (g, at) = gadget_type2(p);
            at.validate(&g).unwrap();
            assert_eq!(g.n(), p + 5);
        }
    }

    #[test]
    fn nested_gadget_is_clean() {
        for depth in 0..3 {
            let (g, ats) = nested_gadget(depth, 7);
            assert_eq!(ats.len(), depth + 1);
            assert!(is_chordal(&g).is_chordal());
            assert!(find_small_obstruction(&g).is_none(), "depth {depth}");
            for at in &ats {
                at.validate(&g).unwrap();
            }
        }
    }

    #[test]
    fn random_families_have_expected_class() {
        for seed in 0..20 {
            assert!(is_interval(&random_interval(15, seed)));
            assert!(is_chordal(&random_chordal(15, seed)).is_chordal());
        }
        assert_eq!(gnp(10, 0.3, 7).unwrap(), gnp(10, 0.3, 7).unwrap());
        assert!(gnp(5, 1.5, 0).is_err());
    }
}
