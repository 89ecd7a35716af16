//! DIMACS `.col` reading and writing.
//!
//! ```text
//! c comment
//! p edge <n> <m>
//! e <u> <v>        (1-based)
//! ```

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use log::warn;

use super::Graph;
use crate::error::{Error, Result};

/// Parsed graph plus the number of duplicate edge lines that were merged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub duplicate_edges: usize,
}

pub fn parse_dimacs(text: &str) -> Result<ParsedGraph> {
    let mut n: Option<usize> = None;
    let mut declared_m = 0;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        let mut tok = line.split_ascii_whitespace();
        match tok.next() {
            None | Some("c") => continue,
            Some("p") => {
                if n.is_some() {
                    return Err(Error::parse(line_no, "duplicate problem line"));
                }
                match tok.next() {
                    Some("edge") | Some("col") => {}
                    _ => return Err(Error::parse(line_no, "expected `p edge <n> <m>`")),
                }
                let vn = parse_num(tok.next(), line_no, "vertex count")?;
                declared_m = parse_num(tok.next(), line_no, "edge count")?;
                if tok.next().is_some() {
                    return Err(Error::parse(line_no, "trailing tokens on problem line"));
                }
                n = Some(vn);
            }
            Some("e") => {
                let Some(vn) = n else {
                    return Err(Error::parse(line_no, "edge line before problem line"));
                };
                let u = parse_num(tok.next(), line_no, "edge endpoint")?;
                let v = parse_num(tok.next(), line_no, "edge endpoint")?;
                if tok.next().is_some() {
                    return Err(Error::parse(line_no, "trailing tokens on edge line"));
                }
                if u == 0 || v == 0 || u > vn || v > vn {
                    return Err(Error::parse(
                        line_no,
                        format!("vertex out of range in `e {u} {v}` (n = {vn})"),
                    ));
                }
                if u == v {
                    return Err(Error::parse(line_no, format!("self-loop at vertex {u}")));
                }
                edges.push(if u < v {
                    (u - 1, v - 1)
                } else {
                    (v - 1, u - 1)
                });
            }
            Some(other) => {
                return Err(Error::parse(
                    line_no,
                    format!("unknown line type `{other}`"),
                ));
            }
        }
    }
    let n = n.ok_or_else(|| Error::parse(0, "missing problem line"))?;
    let raw_edges = edges.len();
    let graph = Graph::from_edges(n, edges)?;
    let duplicate_edges = raw_edges - graph.edge_count();
    if duplicate_edges > 0 {
        warn!("merged {duplicate_edges} duplicate edge line(s)");
    }
    if declared_m != raw_edges {
        warn!("problem line declares {declared_m} edges, file lists {raw_edges}");
    }
    Ok(ParsedGraph {
        graph,
        duplicate_edges,
    })
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::parse(line, format!("invalid {what}")))
}

/// Canonical DIMACS text: problem line, then edges with `u < v` in
/// lexicographic order.
pub fn to_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph> {
    let text = fs::read_to_string(path)?;
    Ok(parse_dimacs(&text)?.graph)
}

pub fn write_graph(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, to_dimacs(g))?;
    Ok(())
}
