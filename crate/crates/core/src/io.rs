//! Plain-text instance format: a header line `n m`, then `m` lines `u v`
//! with 0-based vertex IDs. Blank lines and `#` comments are ignored.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_pair(line: usize, text: &str) -> Result<(u64, u64)> {
    let err = |msg: String| Error::Parse { line, msg };
    let mut it = text.split_whitespace();
    let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
        return Err(err(format!("expected two integers, got {text:?}")));
    };
    let a = a.parse().map_err(|_| err(format!("not a non-negative integer: {a:?}")))?;
    let b = b.parse().map_err(|_| err(format!("not a non-negative integer: {b:?}")))?;
    Ok((a, b))
}

pub fn parse_instance(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
    let (n, m) = parse_pair(hline, header)?;
    if n > u32::MAX as u64 {
        return Err(Error::Parse { line: hline, msg: format!("too many vertices: {n}") });
    }
    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();
    let mut last = hline;
    for (line, l) in lines {
        last = line;
        let (u, v) = parse_pair(line, l)?;
        if u >= n || v >= n {
            return Err(Error::Parse { line, msg: format!("vertex out of range 0..{n}") });
        }
        if u == v {
            return Err(Error::Parse { line, msg: format!("self-loop at {u}") });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Parse { line, msg: format!("duplicate edge {u} {v}") });
        }
        edges.push((u as u32, v as u32));
    }
    if edges.len() as u64 != m {
        return Err(Error::Parse { line: last, msg: format!("header says {m} edges, found {}", edges.len()) });
    }
    Graph::from_edges(n as usize, &edges)
}

pub fn read_instance(path: &Path) -> Result<Graph> {
    parse_instance(&std::fs::read_to_string(path)?)
}

/// Canonical text: vertices renumbered `0..n` in ID order, edges sorted.
pub fn to_instance_string(g: &Graph) -> String {
    let h = g.compacted();
    let mut out = format!("{} {}\n", h.n(), h.m());
    for e in h.edge_set() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

pub fn write_instance(path: &Path, g: &Graph) -> Result<()> {
    Ok(std::fs::write(path, to_instance_string(g))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "4 4\n0 1\n0 3\n1 2\n2 3\n";
        let g = parse_instance(text).unwrap();
        assert_eq!(to_instance_string(&g), text);
    }

    #[test]
    fn comments_and_blanks() {
        let g = parse_instance("# a path\n\n3 2\n0 1 # first\n\n1 2\n").unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn errors_carry_lines() {
        let cases = [
            ("3 2\n0 1\n0 1\n", 3),
            ("3 1\n0 5\n", 2),
            ("3 1\n1 1\n", 2),
            ("3 1\n0 x\n", 2),
            ("3 2\n0 1\n", 2),
            ("3\n", 1),
        ];
        for (text, line) in cases {
            match parse_instance(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert!(matches!(parse_instance(""), Err(Error::Parse { .. })));
    }
}
