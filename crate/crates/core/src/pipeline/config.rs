//! Scanners for the two reducible configurations.

use serde::Serialize;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum ConfigMatch {
    /// Adjacent 4-vertices `u`, `v` with a common neighbour `w`.
    Claim1 { u: Vertex, v: Vertex, w: Vertex },
    /// 4-vertex `v` adjacent to 6-vertex `x`, with common neighbours `y1`,
    /// `y2`; `w` is the fourth neighbour of `v` and `z` the other three
    /// neighbours of `x`.
    Claim2 {
        v: Vertex,
        x: Vertex,
        y1: Vertex,
        y2: Vertex,
        w: Vertex,
        z: [Vertex; 3],
    },
}

/// First pair of adjacent 4-vertices with a common neighbour, scanning `u`
/// then `v` by increasing id; `w` is the smallest common neighbour.
pub fn find_claim1_config(g: &Graph) -> Option<ConfigMatch> {
    for u in g.vertices().filter(|&u| g.degree(u) == 4) {
        for &v in g.neighbours(u) {
            if g.degree(v) != 4 {
                continue;
            }
            if let Some(&w) = g.neighbours(u).iter().find(|w| g.has_edge(v, **w)) {
                return Some(ConfigMatch::Claim1 { u, v, w });
            }
        }
    }
    None
}

/// First adjacent 4-vertex `v` and 6-vertex `x` sharing at least two
/// neighbours, scanning `v` then `x` by increasing id.
pub fn find_claim2_config(g: &Graph) -> Option<ConfigMatch> {
    for v in g.vertices().filter(|&v| g.degree(v) == 4) {
        for &x in g.neighbours(v) {
            if g.degree(x) != 6 {
                continue;
            }
            let common: Vec<Vertex> = g
                .neighbours(v)
                .iter()
                .copied()
                .filter(|&y| g.has_edge(x, y))
                .collect();
            if common.len() < 2 {
                continue;
            }
            let (y1, y2) = (common[0], common[1]);
            let w = g
                .neighbours(v)
                .iter()
                .copied()
                .find(|&t| t != x && t != y1 && t != y2)
                .expect("a 4-vertex has a fourth neighbour");
            let rest: Vec<Vertex> = g
                .neighbours(x)
                .iter()
                .copied()
                .filter(|&t| t != v && t != y1 && t != y2)
                .collect();
            return Some(ConfigMatch::Claim2 {
                v,
                x,
                y1,
                y2,
                w,
                z: [rest[0], rest[1], rest[2]],
            });
        }
    }
    None
}

/// Claim-1 match if any, else Claim-2.
pub fn find_config(g: &Graph) -> Option<ConfigMatch> {
    find_claim1_config(g).or_else(|| find_claim2_config(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn none_on_cycles() {
        let c5: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let g = Graph::from_edges(5, &c5).unwrap();
        assert_eq!(find_claim1_config(&g), None);
        assert_eq!(find_claim2_config(&g), None);
    }

    #[test]
    fn claim2_pattern() {
        // v=0 with neighbours y1=1, x=2, y2=3, w=4; x also adjacent to 5, 6, 7
        let g = Graph::from_edges(
            8,
            &[
                (0, 1), (0, 2), (0, 3), (0, 4), (2, 1), (2, 3),
                (2, 5), (2, 6), (2, 7), (1, 5), (3, 7), (4, 1), (4, 3),
            ],
        )
        .unwrap();
        assert_eq!(
            find_claim2_config(&g),
            Some(ConfigMatch::Claim2 { v: 0, x: 2, y1: 1, y2: 3, w: 4, z: [5, 6, 7] })
        );
    }
}
