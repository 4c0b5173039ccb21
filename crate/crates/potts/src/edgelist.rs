//! The text edge-list format.
//!
//! ```text
//! V 3
//! 1 0 1
//! 2 1 2
//! 3 0 2
//! ```
//!
//! The first line gives the vertex count, every later line an edge as
//! `<id> <u> <v>` with 0-based endpoints; `u = v` is a loop. Blank lines and
//! lines starting with `#` are ignored.

use std::fmt;

use potts_core::{EdgeId, MultiGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

fn field<T: std::str::FromStr>(line: usize, tok: Option<&str>, what: &str) -> Result<T, ParseError> {
    let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| err(line, format!("bad {what} {tok:?}")))
}

pub fn parse(text: &str) -> Result<MultiGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (n, header) = lines.next().ok_or_else(|| err(1, "empty input, expected \"V <count>\""))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("V") {
        return Err(err(n, "expected \"V <count>\""));
    }
    let vertices: usize = field(n, toks.next(), "vertex count")?;
    if toks.next().is_some() {
        return Err(err(n, "trailing tokens after vertex count"));
    }
    let mut edges = Vec::new();
    for (n, l) in lines {
        let mut toks = l.split_whitespace();
        let id: u32 = field(n, toks.next(), "edge id")?;
        let a: usize = field(n, toks.next(), "endpoint")?;
        let b: usize = field(n, toks.next(), "endpoint")?;
        if toks.next().is_some() {
            return Err(err(n, "trailing tokens after edge"));
        }
        if a >= vertices || b >= vertices {
            return Err(err(n, format!("endpoint out of range for {vertices} vertices")));
        }
        if edges.iter().any(|&(e, _, _)| e == EdgeId(id)) {
            return Err(err(n, format!("duplicate edge id {id}")));
        }
        edges.push((EdgeId(id), a, b));
    }
    MultiGraph::new(vertices, edges).map_err(|e| err(0, e.to_string()))
}

pub fn write(g: &MultiGraph) -> String {
    let mut out = format!("V {}\n", g.vertex_count());
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", e.id, e.a, e.b));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = MultiGraph::polygon(3).unwrap().add_edge(1, Some(1)).unwrap();
        let text = write(&g);
        assert_eq!(parse(&text).unwrap(), g);
        assert_eq!(write(&parse(&text).unwrap()), text);
    }

    #[test]
    fn comments_and_loops() {
        let g = parse("# loop\nV 1\n\n7 0 0\n").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.edges()[0].is_loop());
        assert_eq!(g.edges()[0].id, EdgeId(7));
    }

    #[test]
    fn malformed() {
        assert_eq!(parse("").unwrap_err().line, 1);
        assert!(parse("X 2").is_err());
        assert!(parse("V two").is_err());
        assert_eq!(parse("V 2\n1 0 1\n2 0\n").unwrap_err().line, 3);
        assert!(parse("V 2\n1 0 2\n").is_err());
        assert!(parse("V 2\n1 0 1\n1 1 0\n").is_err());
        assert!(parse("V 2\n1 0 1 5\n").is_err());
    }
}
