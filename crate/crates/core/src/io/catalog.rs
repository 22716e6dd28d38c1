//! Named graphs used as fixtures and CLI inputs.
//!
//! Parameterised families take a suffix: `antiprism-5`, `wheel-6`, `C-9`,
//! `theta-2-3-3`. Planar entries come with a plane rotation system.

use crate::embedding::{embed_planar, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

use super::document::GraphDocument;

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub graph: Graph,
    pub embedding: Option<RotationSystem>,
}

impl CatalogEntry {
    pub fn is_planar(&self) -> bool {
        self.embedding.is_some()
    }

    pub fn document(&self) -> GraphDocument {
        match &self.embedding {
            Some(rot) => GraphDocument::embedding(&self.graph, rot, Some(self.name.clone())),
            None => GraphDocument::graph6(&self.graph, Some(self.name.clone())),
        }
    }
}

const FIXED: &[&str] = &[
    "K1", "K2", "K3", "K4", "K5", "K3,3", "K1,3", "K1,4+e", "P3", "C4", "C5", "C7", "C5-pendant",
    "Q3", "octahedron", "icosahedron", "dodecahedron", "glued-octahedra", "fig1-host", "fig2-host",
];

/// Names enumerated by [`catalog_names`], including a few members of each
/// family.
pub fn catalog_names() -> Vec<String> {
    let mut out: Vec<String> = FIXED.iter().map(|s| s.to_string()).collect();
    out.extend((3..=8).map(|n| format!("antiprism-{n}")));
    out.extend((3..=8).map(|n| format!("wheel-{n}")));
    out.extend(["C-9", "C-11", "theta-2-3-3", "theta-2-2-2", "theta-1-3-3"].map(String::from));
    out
}

pub fn catalog(name: &str) -> Result<GraphDocument> {
    catalog_entry(name).map(|e| e.document())
}

pub fn catalog_entry(name: &str) -> Result<CatalogEntry> {
    let graph = build(name).ok_or_else(|| {
        Error::Malformed(format!(
            "unknown catalog graph `{name}`; available: {} (families take any size suffix)",
            catalog_names().join(", ")
        ))
    })??;
    let embedding = embed_planar(&graph);
    Ok(CatalogEntry {
        name: name.to_string(),
        graph,
        embedding,
    })
}

fn cycle_edges(vs: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    (0..vs.len()).map(|i| (vs[i], vs[(i + 1) % vs.len()])).collect()
}

fn complete(n: usize) -> Vec<(Vertex, Vertex)> {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            e.push((u, v));
        }
    }
    e
}

fn octahedron_edges(offset: Vertex, top: Vertex) -> Vec<(Vertex, Vertex)> {
    // top, equator offset..offset+4, bottom offset+4
    let eq: Vec<Vertex> = (offset..offset + 4).collect();
    let bottom = offset + 4;
    let mut e = cycle_edges(&eq);
    for &x in &eq {
        e.push((top, x));
        e.push((bottom, x));
    }
    e
}

fn build(name: &str) -> Option<Result<Graph>> {
    let g = |n: usize, e: Vec<(Vertex, Vertex)>| Some(Graph::from_edges(n, &e));
    let param = |prefix: &str| -> Option<usize> { name.strip_prefix(prefix)?.parse().ok() };
    match name {
        "K1" => return g(1, vec![]),
        "K2" => return g(2, vec![(0, 1)]),
        "K3" => return g(3, complete(3)),
        "K4" => return g(4, complete(4)),
        "K5" => return g(5, complete(5)),
        "K3,3" => {
            let e = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
            return g(6, e);
        }
        "K1,3" => return g(4, vec![(0, 1), (0, 2), (0, 3)]),
        "K1,4+e" => return g(5, vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)]),
        "P3" => return g(3, vec![(0, 1), (1, 2)]),
        "C4" => return g(4, cycle_edges(&[0, 1, 2, 3])),
        "C5" => return g(5, cycle_edges(&[0, 1, 2, 3, 4])),
        "C7" => return g(7, cycle_edges(&[0, 1, 2, 3, 4, 5, 6])),
        "C5-pendant" => {
            let mut e = cycle_edges(&[0, 1, 2, 3, 4]);
            e.extend([(0, 5), (5, 6)]);
            return g(7, e);
        }
        "Q3" => {
            let mut e = Vec::new();
            for u in 0..8usize {
                for b in 0..3 {
                    let v = u ^ (1 << b);
                    if u < v {
                        e.push((u, v));
                    }
                }
            }
            return g(8, e);
        }
        "octahedron" => return g(6, octahedron_edges(1, 0)),
        "glued-octahedra" => {
            // two octahedra sharing their top vertex 0
            let mut e = octahedron_edges(1, 0);
            e.extend(octahedron_edges(6, 0));
            return g(11, e);
        }
        "icosahedron" => {
            let mut e = Vec::new();
            for i in 0..5 {
                let (up, up_next) = (1 + i, 1 + (i + 1) % 5);
                let (lo, lo_next) = (6 + i, 6 + (i + 1) % 5);
                e.extend([(0, up), (up, up_next), (lo, lo_next), (11, lo), (up, lo), (up_next, lo)]);
            }
            return g(12, e);
        }
        "dodecahedron" => {
            // outer pentagon 0..5, middle decagon 5..15, inner pentagon 15..20
            let mut e = cycle_edges(&[0, 1, 2, 3, 4]);
            e.extend(cycle_edges(&(5..15).collect::<Vec<_>>()));
            e.extend(cycle_edges(&[15, 16, 17, 18, 19]));
            for i in 0..5 {
                e.push((i, 5 + 2 * i));
                e.push((6 + 2 * i, 15 + i));
            }
            return g(20, e);
        }
        "fig1-host" => {
            // adjacent 4-vertices u=1, v=2 with common neighbour w=0; u also
            // sees p=3, q=4 and v sees r=5, s=6; hub 7 closes the outer ring
            // w p q s r
            let mut e = vec![(1, 2), (1, 0), (1, 3), (1, 4), (2, 0), (2, 5), (2, 6)];
            e.extend(cycle_edges(&[0, 3, 4, 6, 5]));
            e.extend([0, 3, 4, 6, 5].map(|x| (7, x)));
            return g(8, e);
        }
        "fig2-host" => {
            // 4-vertex v=0 with neighbours y1=2, x=1, y2=3, w=4; 6-vertex x
            // with further neighbours z1=5, z2=6, z3=7; outer vertices 8, 9,
            // 10 make y1, y2 and w even
            let mut e = vec![
                (0, 2), (0, 1), (0, 3), (0, 4),
                (1, 2), (1, 3), (1, 5), (1, 6), (1, 7),
                (2, 5), (5, 6), (6, 7), (7, 3), (2, 4), (3, 4),
            ];
            e.extend([2, 5, 6, 7, 3, 4].map(|x| (8, x)));
            e.extend([(9, 8), (9, 4), (9, 2), (10, 8), (10, 3), (10, 4)]);
            return g(11, e);
        }
        _ => {}
    }
    if let Some(n) = param("antiprism-").filter(|&n| n >= 3) {
        let outer: Vec<Vertex> = (0..n).collect();
        let inner: Vec<Vertex> = (n..2 * n).collect();
        let mut e = cycle_edges(&outer);
        e.extend(cycle_edges(&inner));
        for i in 0..n {
            e.push((i, n + i));
            e.push((i, n + (i + 1) % n));
        }
        return g(2 * n, e);
    }
    if let Some(n) = param("wheel-").filter(|&n| n >= 3) {
        let rim: Vec<Vertex> = (1..=n).collect();
        let mut e = cycle_edges(&rim);
        e.extend(rim.iter().map(|&x| (0, x)));
        return g(n + 1, e);
    }
    if let Some(n) = param("C-").filter(|&n| n >= 3) {
        return g(n, cycle_edges(&(0..n).collect::<Vec<_>>()));
    }
    if let Some(rest) = name.strip_prefix("theta-") {
        // two poles 0, 1 joined by three internally disjoint paths
        let lens: Vec<usize> = rest.split('-').map(|x| x.parse().ok()).collect::<Option<_>>()?;
        if lens.len() != 3 || lens.contains(&0) || lens.iter().filter(|&&l| l == 1).count() > 1 {
            return None;
        }
        let mut e = Vec::new();
        let mut next = 2;
        for &l in &lens {
            let mut prev = 0;
            for _ in 1..l {
                e.push((prev, next));
                prev = next;
                next += 1;
            }
            e.push((prev, 1));
        }
        return g(next, e);
    }
    None
}
