//! Text formats.
//!
//! * Edge list: a header `n m`, then `m` lines `u v` with 0-based endpoints.
//! * Sequence: whitespace-separated 0-based vertex indices.
//! * Intervals: a header `n`, then `n` lines `a b` of exact decimal tokens; line `i` (counting
//!   from 1 after the header) is vertex `i - 1`.
//!
//! All readers ignore blank lines and anything after `#`. Writers emit LF-terminated lines
//! and no comments.

use std::fmt::Write as _;
use std::str::FromStr;

use rust_decimal::Decimal;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::{Interval, IntervalModel};
use crate::sequence::VertexSequence;

/// Non-empty, comment-stripped lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn parse_token<T: FromStr>(line: usize, token: &str, what: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found {token:?}")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header \"n m\""))?;
    if header.len() != 2 {
        return Err(Error::parse(hl, "header must be \"n m\""));
    }
    let n: usize = parse_token(hl, header[0], "vertex count")?;
    let m: usize = parse_token(hl, header[1], "edge count")?;
    let mut g = Graph::new(n);
    let mut seen = 0;
    for (line, tokens) in lines {
        if tokens.len() != 2 {
            return Err(Error::parse(line, "edge line must be \"u v\""));
        }
        let u: usize = parse_token(line, tokens[0], "vertex index")?;
        let v: usize = parse_token(line, tokens[1], "vertex index")?;
        g.add_edge(u, v).map_err(|e| Error::parse(line, e.to_string()))?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::parse(hl, format!("header announces {m} edges, found {seen}")));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_sequence(text: &str) -> Result<VertexSequence> {
    content_lines(text)
        .flat_map(|(line, tokens)| tokens.into_iter().map(move |t| (line, t)))
        .map(|(line, t)| parse_token(line, t, "vertex index"))
        .collect()
}

pub fn write_sequence(s: &VertexSequence) -> String {
    format!("{s}\n")
}

pub fn parse_intervals(text: &str) -> Result<IntervalModel> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header \"n\""))?;
    if header.len() != 1 {
        return Err(Error::parse(hl, "header must be a single count"));
    }
    let n: usize = parse_token(hl, header[0], "interval count")?;
    let mut intervals = Vec::with_capacity(n);
    for (line, tokens) in lines {
        if tokens.len() != 2 {
            return Err(Error::parse(line, "interval line must be \"a b\""));
        }
        let left: Decimal = parse_token(line, tokens[0], "decimal endpoint")?;
        let right: Decimal = parse_token(line, tokens[1], "decimal endpoint")?;
        intervals.push(Interval { left, right });
    }
    if intervals.len() != n {
        return Err(Error::parse(hl, format!("header announces {n} intervals, found {}", intervals.len())));
    }
    IntervalModel::new(intervals)
}

pub fn write_intervals(m: &IntervalModel) -> String {
    let mut out = format!("{}\n", m.len());
    for iv in m.intervals() {
        let _ = writeln!(out, "{} {}", iv.left, iv.right);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::make_cycle;

    #[test]
    fn edge_list_with_comments() {
        let text = "# a triangle\n3 3\n0 1\n1 2 # closing soon\n\n2 0\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, make_cycle(3).unwrap());
        assert_eq!(write_edge_list(&g), "3 3\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("3 1\n0 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("3 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_edge_list("3 2\n0 1\n1 0\n").is_err());
    }

    #[test]
    fn sequences() {
        let s = parse_sequence("0 1\n 3\n").unwrap();
        assert_eq!(s.as_slice(), [0, 1, 3]);
        assert_eq!(write_sequence(&s), "0 1 3\n");
        assert!(parse_sequence("").unwrap().is_empty());
        assert!(parse_sequence("1 -2").is_err());
    }

    #[test]
    fn interval_files() {
        let m = parse_intervals("2\n0.5 1.25\n-3 7\n").unwrap();
        assert_eq!(m.intervals()[0].left, Decimal::new(5, 1));
        assert_eq!(write_intervals(&m), "2\n0.5 1.25\n-3 7\n");
        assert!(matches!(parse_intervals("1\n2 1\n"), Err(Error::InvalidInterval { .. })));
        assert!(parse_intervals("2\n0 1\n").is_err());
        assert!(parse_intervals("1\n0 abc\n").is_err());
    }
}
