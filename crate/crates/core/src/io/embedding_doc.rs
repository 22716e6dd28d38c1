//! Plain-text plane embedding documents.
//!
//! ```text
//! embedding-doc v1
//! vertices 3
//! 0: 1 2
//! 1: 2 0
//! 2: 0 1
//! ```
//!
//! Every vertex gets exactly one line listing its neighbours in
//! counter-clockwise order. Blank lines and lines starting with `#` are
//! ignored.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::embedding::{validate_embedding, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const EMBEDDING_HEADER: &str = "embedding-doc v1";

fn perr(line: usize, reason: impl Into<String>) -> Error {
    Error::Malformed(format!("embedding document line {}: {}", line + 1, reason.into()))
}

fn bad(vertex: Vertex, reason: impl Into<String>) -> Error {
    Error::InvalidEmbedding {
        vertex,
        reason: reason.into(),
    }
}

pub fn parse_embedding_doc(text: &str) -> Result<(Graph, RotationSystem)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    match lines.next() {
        Some((_, EMBEDDING_HEADER)) => {}
        Some((i, other)) => return Err(perr(i, format!("expected header `{EMBEDDING_HEADER}`, found `{other}`"))),
        None => return Err(perr(0, "empty document")),
    }
    let n: usize = match lines.next() {
        Some((i, l)) => l
            .strip_prefix("vertices ")
            .and_then(|x| x.trim().parse().ok())
            .ok_or_else(|| perr(i, "expected `vertices <count>`"))?,
        None => return Err(perr(1, "missing vertex count")),
    };

    let mut rot: Vec<Option<Vec<Vertex>>> = vec![None; n];
    for (i, l) in lines {
        let (head, rest) = l.split_once(':').ok_or_else(|| perr(i, "expected `v: n1 n2 ...`"))?;
        let v: Vertex = head.trim().parse().map_err(|_| perr(i, format!("bad vertex id `{head}`")))?;
        if v >= n {
            return Err(bad(v, format!("vertex id outside 0..{n}")));
        }
        if rot[v].is_some() {
            return Err(bad(v, "vertex listed twice"));
        }
        let nbrs = rest
            .split_whitespace()
            .map(|t| t.parse::<Vertex>().map_err(|_| perr(i, format!("bad neighbour `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        rot[v] = Some(nbrs);
    }

    let rot: Vec<Vec<Vertex>> = rot
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| bad(v, "no rotation line")))
        .collect::<Result<_>>()?;

    let mut g = Graph::new(n);
    let mut mismatches = Vec::new();
    for (v, r) in rot.iter().enumerate() {
        let mut seen = BTreeSet::new();
        for &u in r {
            if u >= n {
                return Err(bad(v, format!("neighbour {u} outside 0..{n}")));
            }
            if u == v {
                return Err(bad(v, "loop in rotation"));
            }
            if !seen.insert(u) {
                return Err(bad(v, format!("neighbour {u} repeated")));
            }
            if rot[u].contains(&v) {
                g.add_edge(v, u)?;
            } else {
                mismatches.push((v, u));
            }
        }
    }
    if !mismatches.is_empty() {
        // blame the vertex involved in the most one-sided entries
        let mut involvement = vec![0usize; n];
        for &(v, u) in &mismatches {
            involvement[v] += 1;
            involvement[u] += 1;
        }
        let worst = (0..n).max_by_key(|&v| (involvement[v], std::cmp::Reverse(v))).unwrap();
        let detail: Vec<String> = mismatches
            .iter()
            .filter(|(v, u)| *v == worst || *u == worst)
            .map(|(v, u)| format!("{v} lists {u} but {u} does not list {v}"))
            .collect();
        return Err(bad(worst, detail.join("; ")));
    }
    let rs = RotationSystem::new(rot);
    let report = validate_embedding(&g, &rs)?;
    if !report.planar {
        let comps = g.components();
        let (idx, _) = report
            .components
            .iter()
            .enumerate()
            .find(|(_, c)| c.characteristic != 2)
            .expect("some component fails");
        return Err(bad(
            comps[idx][0],
            format!(
                "rotation is not plane: V - E + F = {} on this component",
                report.components[idx].characteristic
            ),
        ));
    }
    Ok((g, rs))
}

/// Canonical document: header, count, one line per vertex id in order.
pub fn to_embedding_doc(g: &Graph, rot: &RotationSystem) -> String {
    let mut s = String::new();
    writeln!(s, "{EMBEDDING_HEADER}").unwrap();
    writeln!(s, "vertices {}", g.id_bound()).unwrap();
    for v in 0..g.id_bound() {
        write!(s, "{v}:").unwrap();
        for u in rot.around(v) {
            write!(s, " {u}").unwrap();
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::trace_faces;

    const C5: &str = "embedding-doc v1\nvertices 5\n0: 1 4\n1: 2 0\n2: 3 1\n3: 4 2\n4: 0 3\n";

    #[test]
    fn c5_two_faces() {
        let (g, rot) = parse_embedding_doc(C5).unwrap();
        let faces = trace_faces(&g, &rot).unwrap();
        assert_eq!(faces.len(), 2);
        assert!(faces.iter().all(|f| f.size() == 5));
        assert_eq!(to_embedding_doc(&g, &rot), C5);
    }

    #[test]
    fn corrupted_rotation_names_vertex() {
        let doc = C5.replace("2: 3 1", "2: 3 0");
        match parse_embedding_doc(&doc) {
            Err(Error::InvalidEmbedding { vertex, .. }) => assert_eq!(vertex, 2),
            other => panic!("{other:?}"),
        }
        let doc = C5.replace("3: 4 2", "3: 4 2 2");
        assert!(matches!(
            parse_embedding_doc(&doc),
            Err(Error::InvalidEmbedding { vertex: 3, .. })
        ));
        let doc = C5.replace("4: 0 3\n", "");
        assert!(matches!(
            parse_embedding_doc(&doc),
            Err(Error::InvalidEmbedding { vertex: 4, .. })
        ));
        assert!(parse_embedding_doc("vertices 1\n0:\n").is_err());
    }

    #[test]
    fn non_plane_rotation_rejected() {
        // K4 with a twisted rotation at vertex 0
        let doc = "embedding-doc v1\nvertices 4\n0: 1 2 3\n1: 0 2 3\n2: 0 1 3\n3: 0 1 2\n";
        assert!(matches!(parse_embedding_doc(doc), Err(Error::InvalidEmbedding { .. })));
    }
}
