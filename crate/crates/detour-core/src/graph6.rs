//! graph6 interchange format, plus a plain text format for multigraphs.
//!
//! graph6 packs the upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ... in
//! column order, 6 bits per character, each character offset by 63.
//! Multigraphs cannot be expressed in graph6 and use the text form
//! `multigraph <n> <m>` followed by `<u> <v>` lines (loops as `u u`).

use crate::graph::{GraphError, MultiGraph, SimpleGraph};

/// Encodes a simple graph as a graph6 string (no trailing newline).
pub fn to_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push(126 as char);
        out.push(126 as char);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut bits: Vec<bool> = Vec::with_capacity(n * (n - 1) / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                x |= 1 << (5 - i);
            }
        }
        out.push((x + 63) as char);
    }
    out
}

/// Decodes one graph6 line.
pub fn from_graph6(s: &str) -> Result<SimpleGraph, GraphError> {
    let bytes: Vec<u8> = s.trim().bytes().collect();
    if bytes.is_empty() {
        return Err(GraphError::BadGraph6("empty input".into()));
    }
    for &b in &bytes {
        if !(63..=126).contains(&b) {
            return Err(GraphError::BadGraph6(format!("byte {b} out of range")));
        }
    }
    let (n, mut pos) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() > 1 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(GraphError::BadGraph6("truncated long-form header".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(GraphError::BadGraph6("truncated long-form header".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 8)
    };
    let nbits = if n >= 2 { n * (n - 1) / 2 } else { 0 };
    let need = nbits.div_ceil(6);
    if bytes.len() - pos < need {
        return Err(GraphError::BadGraph6(format!(
            "expected {need} body chars for n={n}, found {}",
            bytes.len() - pos
        )));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let ch = (bytes[pos + bit / 6] - 63) as usize;
            if ch >> (5 - bit % 6) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
            if bit >= nbits {
                break 'outer;
            }
        }
    }
    pos += need;
    if bytes.len() > pos {
        return Err(GraphError::BadGraph6("trailing characters".into()));
    }
    SimpleGraph::build(n, &edges)
}

/// Serializes a multigraph as `multigraph <n> <m>` plus one `u v` line per edge.
pub fn multigraph_to_text(m: &MultiGraph) -> String {
    let mut out = format!("multigraph {} {}\n", m.n(), m.m());
    for &(u, v) in m.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the multigraph text format; `#` starts a comment line.
pub fn multigraph_from_text(s: &str) -> Result<MultiGraph, GraphError> {
    let mut lines = s
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| GraphError::BadMultigraphText("missing header".into()))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 3 || parts[0] != "multigraph" {
        return Err(GraphError::BadMultigraphText(format!(
            "bad header line: {header:?}"
        )));
    }
    let n: usize = parts[1]
        .parse()
        .map_err(|_| GraphError::BadMultigraphText("bad vertex count".into()))?;
    let m: usize = parts[2]
        .parse()
        .map_err(|_| GraphError::BadMultigraphText("bad edge count".into()))?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let p: Vec<&str> = line.split_whitespace().collect();
        if p.len() != 2 {
            return Err(GraphError::BadMultigraphText(format!(
                "bad edge line: {line:?}"
            )));
        }
        let u: usize = p[0]
            .parse()
            .map_err(|_| GraphError::BadMultigraphText("bad endpoint".into()))?;
        let v: usize = p[1]
            .parse()
            .map_err(|_| GraphError::BadMultigraphText("bad endpoint".into()))?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(GraphError::BadMultigraphText(format!(
            "declared {m} edges, found {}",
            edges.len()
        )));
    }
    MultiGraph::build(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_is_bw() {
        let g = SimpleGraph::build(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(to_graph6(&g), "Bw");
    }

    #[test]
    fn single_vertex_is_at() {
        let g = SimpleGraph::empty(1);
        assert_eq!(to_graph6(&g), "@");
        assert_eq!(from_graph6("@").unwrap().n(), 1);
    }

    #[test]
    fn decode_rejects_low_byte() {
        assert!(matches!(
            from_graph6("B\x1f").unwrap_err(),
            GraphError::BadGraph6(_)
        ));
    }

    #[test]
    fn petersen_roundtrip() {
        let g = crate::graph::SimpleGraph::build(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn long_form_header() {
        let g = SimpleGraph::empty(63);
        let s = to_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(from_graph6(&s).unwrap().n(), 63);
    }

    #[test]
    fn multigraph_text_roundtrip() {
        let m = MultiGraph::build(4, &[(0, 1), (0, 1), (2, 3), (2, 3), (0, 2), (1, 3)]).unwrap();
        let s = multigraph_to_text(&m);
        assert_eq!(multigraph_from_text(&s).unwrap(), m);
        let commented = format!("# prism base\n{s}");
        assert_eq!(multigraph_from_text(&commented).unwrap(), m);
    }

    #[test]
    fn multigraph_text_loop() {
        let m = multigraph_from_text("multigraph 1 1\n0 0\n").unwrap();
        assert_eq!(m.degree(0), 2);
    }
}
