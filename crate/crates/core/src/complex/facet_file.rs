//! Facet-list text files: one face per line as space-separated 0-based ids,
//! `#` starts a comment line.
//!
//! The writer records the ground-set size in a `# vertices <n>` comment; the
//! reader honors it when present and otherwise uses `max id + 1`.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::SimplicialComplex;
use crate::error::{Error, Result};

pub fn parse_facets(text: &str) -> Result<SimplicialComplex> {
    let mut declared: Option<usize> = None;
    let mut faces: Vec<Vec<usize>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let mut tok = comment.split_ascii_whitespace();
            if tok.next() == Some("vertices") {
                let n = tok
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::parse(idx + 1, "invalid `# vertices` header"))?;
                declared = Some(n);
            }
            continue;
        }
        let face = line
            .split_ascii_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::parse(idx + 1, format!("invalid vertex id `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        faces.push(face);
    }
    let max_id = faces.iter().flatten().max().map_or(0, |&v| v + 1);
    let n = match declared {
        Some(n) if n < max_id => {
            return Err(Error::parse(
                0,
                format!("`# vertices {n}` is smaller than the largest id + 1 ({max_id})"),
            ))
        }
        Some(n) => n,
        None => max_id,
    };
    SimplicialComplex::from_faces(n, faces)
}

pub fn to_facet_text(c: &SimplicialComplex) -> String {
    let mut out = String::new();
    writeln!(out, "# vertices {}", c.num_vertices()).unwrap();
    // facets are stored in lexicographic order already
    for f in c.facets() {
        let line: Vec<String> = f.iter().map(ToString::to_string).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

pub fn read_facets(path: impl AsRef<Path>) -> Result<SimplicialComplex> {
    parse_facets(&fs::read_to_string(path)?)
}

pub fn write_facets(c: &SimplicialComplex, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, to_facet_text(c))?;
    Ok(())
}
