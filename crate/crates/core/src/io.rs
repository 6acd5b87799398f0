//! Graph file formats.
//!
//! Edge-list text: the first non-comment line is the vertex count, each
//! following non-comment line is one edge `u v` (0-based); `#` starts a
//! comment line. JSON: `{"n": ..., "edges": [[u, v], ...]}` with an
//! optional `"cover"` array of vertex ids.

use crate::covering::{CoverKind, CoverSet};
use crate::graph::{Graph, GraphError};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormatError {
    MissingVertexCount,
    BadVertexCount { line: usize, text: String },
    BadEdgeLine { line: usize, text: String },
    BadJson(String),
    Graph(GraphError),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::MissingVertexCount => write!(f, "missing vertex count line"),
            FormatError::BadVertexCount { line, text } => {
                write!(f, "line {line}: bad vertex count {text:?}")
            }
            FormatError::BadEdgeLine { line, text } => {
                write!(f, "line {line}: bad edge line {text:?} (expected `u v`)")
            }
            FormatError::BadJson(msg) => write!(f, "bad graph json: {msg}"),
            FormatError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for FormatError {}

impl From<GraphError> for FormatError {
    fn from(e: GraphError) -> FormatError {
        FormatError::Graph(e)
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses the edge-list text format.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = content_lines(text);
    let (line, head) = lines.next().ok_or(FormatError::MissingVertexCount)?;
    let n: usize = head.parse().map_err(|_| FormatError::BadVertexCount {
        line,
        text: head.to_string(),
    })?;
    let mut edges = Vec::new();
    for (line, text) in lines {
        let mut it = text.split_whitespace();
        let edge = match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => u.parse().ok().zip(v.parse().ok()),
            _ => None,
        };
        match edge {
            Some(e) => edges.push(e),
            None => {
                return Err(FormatError::BadEdgeLine { line, text: text.to_string() });
            }
        }
    }
    Ok(Graph::new(n, edges)?)
}

/// Writes the edge-list text format (vertex count, then sorted edges).
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cover: Option<Vec<usize>>,
}

/// Parses the JSON graph format; the optional cover comes back as a
/// 3-covering candidate.
pub fn parse_json(text: &str) -> Result<(Graph, Option<CoverSet>), FormatError> {
    let parsed: GraphJson =
        serde_json::from_str(text).map_err(|e| FormatError::BadJson(e.to_string()))?;
    let g = Graph::new(parsed.n, parsed.edges)?;
    let cover = match parsed.cover {
        None => None,
        Some(members) => Some(
            CoverSet::new(members, g.vertex_count(), CoverKind::Three)
                .map_err(|e| FormatError::BadJson(e.to_string()))?,
        ),
    };
    Ok((g, cover))
}

/// Writes the JSON graph format, newline-terminated.
pub fn write_json(g: &Graph, cover: Option<&CoverSet>) -> String {
    let mut s = serde_json::to_string(&GraphJson {
        n: g.vertex_count(),
        edges: g.edges().to_vec(),
        cover: cover.map(|q| q.members().to_vec()),
    })
    .expect("graph serializes");
    s.push('\n');
    s
}

/// Parses either supported format, sniffing JSON by its leading `{`.
pub fn parse_graph_auto(text: &str) -> Result<(Graph, Option<CoverSet>), FormatError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_edge_list(text).map(|g| (g, None))
    }
}

/// Rounds to 12 significant digits for display, mapping magnitudes below
/// `zero_eps` (and negative zero) to exact 0.
pub fn display_f64(x: f64, zero_eps: f64) -> f64 {
    if x.abs() < zero_eps {
        return 0.0;
    }
    round_sig(x, 12)
}

/// Rounds `x` to `digits` significant decimal digits.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits.saturating_sub(1), x)
        .parse()
        .expect("formatted float parses")
}
