use std::fmt::Write;

use serde::Serialize;

use crate::embedding::RotationSystem;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

use super::embedding_doc::{parse_embedding_doc, to_embedding_doc, EMBEDDING_HEADER};
use super::graph6::{parse_graph6, to_graph6};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphFormat {
    Graph6,
    EdgeList,
    EmbeddingDoc,
}

/// A graph in one of the supported text formats.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphDocument {
    pub format: GraphFormat,
    pub payload: String,
    pub name: Option<String>,
}

impl GraphDocument {
    /// Guesses the format from the text itself: embedding documents start with
    /// their header line, edge lists with a bare vertex count line, anything
    /// else is read as graph6.
    pub fn detect(payload: impl Into<String>, name: Option<String>) -> Self {
        let payload = payload.into();
        let first = payload
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .unwrap_or("");
        let format = if first == EMBEDDING_HEADER {
            GraphFormat::EmbeddingDoc
        } else if !first.is_empty() && first.bytes().all(|b| b.is_ascii_digit()) {
            GraphFormat::EdgeList
        } else {
            GraphFormat::Graph6
        };
        GraphDocument {
            format,
            payload,
            name,
        }
    }

    pub fn parse(&self) -> Result<(Graph, Option<RotationSystem>)> {
        match self.format {
            GraphFormat::Graph6 => Ok((parse_graph6(&self.payload)?, None)),
            GraphFormat::EdgeList => Ok((parse_edge_list(&self.payload)?, None)),
            GraphFormat::EmbeddingDoc => {
                let (g, rot) = parse_embedding_doc(&self.payload)?;
                Ok((g, Some(rot)))
            }
        }
    }

    pub fn graph6(g: &Graph, name: Option<String>) -> Self {
        GraphDocument {
            format: GraphFormat::Graph6,
            payload: to_graph6(g),
            name,
        }
    }

    pub fn embedding(g: &Graph, rot: &RotationSystem, name: Option<String>) -> Self {
        GraphDocument {
            format: GraphFormat::EmbeddingDoc,
            payload: to_embedding_doc(g, rot),
            name,
        }
    }

    pub fn edge_list(g: &Graph, name: Option<String>) -> Self {
        GraphDocument {
            format: GraphFormat::EdgeList,
            payload: to_edge_list(g),
            name,
        }
    }
}

/// `<order>` on the first line, then one `u v` pair per line.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, first) = lines
        .next()
        .ok_or_else(|| Error::Malformed("empty edge list".into()))?;
    let n: usize = first
        .parse()
        .map_err(|_| Error::Malformed(format!("edge list line 1: bad vertex count `{first}`")))?;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for (i, l) in lines {
        let parts: Vec<&str> = l.split_whitespace().collect();
        let pair = match parts.as_slice() {
            [a, b] => a.parse().ok().zip(b.parse().ok()),
            _ => None,
        };
        let (u, v) = pair.ok_or_else(|| {
            Error::Malformed(format!("edge list line {}: expected `u v`, found `{l}`", i + 1))
        })?;
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let (h, _) = g.compacted();
    let mut s = format!("{}\n", h.order());
    for (u, v) in h.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}
