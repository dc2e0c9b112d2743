//! The graph6 text format, one graph per line.

use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_G6_VERTICES: usize = 258_047;

fn parse_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse(msg.into()))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_G6_VERTICES, "graph6 supports at most {MAX_G6_VERTICES} vertices");
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let total = n * n.saturating_sub(1) / 2;
    let mut bits = vec![false; total];
    for &(u, v) in g.edges() {
        // column-major upper triangle: x(0,1) x(0,2) x(1,2) x(0,3) ...
        bits[v * (v - 1) / 2 + u] = true;
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 32 >> i;
            }
        }
        out.push((byte + 63) as char);
    }
    out
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let s = text.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return parse_err("empty graph6 string");
    }
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return parse_err(format!("invalid graph6 byte {bad:#04x}"));
    }
    let (n, rest) = if bytes[0] != 126 {
        (bytes[0] as usize - 63, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            return parse_err("unsupported graph6 size header");
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b as usize - 63));
        (n, &bytes[4..])
    };
    let total = n * n.saturating_sub(1) / 2;
    if rest.len() != total.div_ceil(6) {
        return parse_err(format!(
            "graph6 body for {n} vertices needs {} bytes, got {}",
            total.div_ceil(6),
            rest.len()
        ));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (total..rest.len() * 6).any(bit) {
        return parse_err("nonzero padding bits in graph6 body");
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// Newline-separated graph6; blank lines and lines starting with `#` are skipped.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .enumerate()
        .map(|(i, l)| from_graph6(l).map_err(|e| Error::Parse(format!("line {}: {e}", i + 1))))
        .collect()
}

pub fn write_graph6_lines<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> String {
    graphs.into_iter().map(|g| to_graph6(g) + "\n").collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, petersen, path};

    #[test]
    fn known_strings() {
        // reference encodings from the format description
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&complete(2)), "A_");
        assert_eq!(to_graph6(&path(3)), "Bg");
        assert_eq!(to_graph6(&complete(4)), "C~");
        assert_eq!(to_graph6(&petersen()).len(), 9);
    }

    #[test]
    fn round_trip() {
        for g in [Graph::empty(1), complete(7), petersen(), complete(63), path(62), Graph::empty(100)] {
            assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }

    #[test]
    fn rejects_malformed() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("C").is_err());
        assert!(from_graph6("A`").is_err());
        assert!(from_graph6("C~~").is_err());
    }
}
