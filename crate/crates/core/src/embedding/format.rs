//! The `embed` file: host graph, branch sets per original vertex, and the
//! bucket of each working vertex.
//!
//! ```text
//! host <vertices> <edges>
//! edge <u> <v>
//! branch <v> <w...>
//! zeta <x> <w>
//! ```
//!
//! Branch and zeta lines are numbered consecutively from 0.

use std::fmt::Write as _;

use super::Embedding;
use crate::graph::Graph;
use crate::instances::format::{expect_fields, header, num, records, syntax, ParseError};
use crate::instances::InstanceError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbedFile {
    pub host: Graph,
    pub branch_sets: Vec<Vec<usize>>,
    pub zeta: Vec<usize>,
}

impl From<&Embedding> for EmbedFile {
    fn from(e: &Embedding) -> Self {
        Self { host: e.host.clone(), branch_sets: e.branch_sets.clone(), zeta: e.zeta.clone() }
    }
}

pub fn write_embedding(file: &EmbedFile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "host {} {}", file.host.vertex_count(), file.host.edge_count());
    for &(u, v) in file.host.edges() {
        let _ = writeln!(out, "edge {u} {v}");
    }
    for (v, set) in file.branch_sets.iter().enumerate() {
        let _ = write!(out, "branch {v}");
        for w in set {
            let _ = write!(out, " {w}");
        }
        out.push('\n');
    }
    for (x, w) in file.zeta.iter().enumerate() {
        let _ = writeln!(out, "zeta {x} {w}");
    }
    out
}

/// Parses an `embed` file. Branch sets are returned sorted; host vertex
/// references must be in range, but connectivity is left to
/// [`Embedding::validate`](super::Embedding::validate).
pub fn parse_embedding(text: &str) -> Result<EmbedFile, ParseError> {
    let mut recs = records(text, "#");
    let (_, head) = header(&mut recs, "host", 2)?;
    let (vertices, edge_count) = (head[0], head[1]);
    let mut edges = Vec::new();
    let mut branch_sets: Vec<Vec<usize>> = Vec::new();
    let mut zeta = Vec::new();
    for (line, fields) in recs {
        let in_range = |w: usize| {
            if w < vertices {
                Ok(w)
            } else {
                Err(syntax(line, format!("host vertex {w} out of range")))
            }
        };
        match fields[0] {
            "edge" => {
                expect_fields(line, &fields, 3)?;
                if !branch_sets.is_empty() || !zeta.is_empty() {
                    return Err(syntax(line, "edges must precede branch and zeta lines"));
                }
                edges.push((num(line, fields[1])?, num(line, fields[2])?));
            }
            "branch" => {
                if fields.len() < 2 {
                    return Err(syntax(line, "`branch` needs a vertex"));
                }
                if !zeta.is_empty() {
                    return Err(syntax(line, "branch lines must precede zeta lines"));
                }
                let v: usize = num(line, fields[1])?;
                if v != branch_sets.len() {
                    return Err(syntax(line, format!("expected branch {}, got {v}", branch_sets.len())));
                }
                let mut set = fields[2..]
                    .iter()
                    .map(|f| num(line, f).and_then(in_range))
                    .collect::<Result<Vec<usize>, _>>()?;
                set.sort_unstable();
                set.dedup();
                branch_sets.push(set);
            }
            "zeta" => {
                expect_fields(line, &fields, 3)?;
                let x: usize = num(line, fields[1])?;
                if x != zeta.len() {
                    return Err(syntax(line, format!("expected zeta {}, got {x}", zeta.len())));
                }
                zeta.push(in_range(num(line, fields[2])?)?);
            }
            other => return Err(syntax(line, format!("unknown record `{other}`"))),
        }
    }
    if edges.len() != edge_count {
        return Err(ParseError::CountMismatch { what: "edges", declared: edge_count, found: edges.len() });
    }
    let host = Graph::new(vertices, edges).map_err(InstanceError::from)?;
    if host.edge_count() != edge_count {
        return Err(ParseError::CountMismatch { what: "distinct edges", declared: edge_count, found: host.edge_count() });
    }
    Ok(EmbedFile { host, branch_sets, zeta })
}
