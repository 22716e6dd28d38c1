//! Seeded random plane graphs.
//!
//! All randomness is drawn as `u64` ranges from a ChaCha8 stream, so a given
//! `(n, seed)` produces the same graph on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embedding::{trace_faces, RotationSystem};
use crate::graph::{Graph, Vertex};

fn pick(rng: &mut ChaCha8Rng, len: usize) -> usize {
    rng.random_range(0..len as u64) as usize
}

fn insert_after(list: &mut Vec<Vertex>, anchor: Vertex, x: Vertex) {
    let i = list.iter().position(|&a| a == anchor).expect("anchor in rotation");
    list.insert(i + 1, x);
}

/// Maximal plane graph on `n >= 3` vertices built by repeatedly dropping a
/// new vertex into a uniformly chosen triangular face.
pub fn gen_random_planar(n: usize, seed: u64) -> (Graph, RotationSystem) {
    assert!(n >= 3, "a triangulation needs at least 3 vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rot: Vec<Vec<Vertex>> = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
    // faces as walks (a, b, c): c follows a around b
    let mut faces: Vec<[Vertex; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    for x in 3..n {
        let i = pick(&mut rng, faces.len());
        let [a, b, c] = faces[i];
        insert_after(&mut rot[b], a, x);
        insert_after(&mut rot[c], b, x);
        insert_after(&mut rot[a], c, x);
        rot.push(vec![a, c, b]);
        faces[i] = [a, b, x];
        faces.push([b, c, x]);
        faces.push([c, a, x]);
        edges.extend([(a, x), (b, x), (c, x)]);
    }
    let g = Graph::from_edges(n, &edges).expect("generated edges are simple");
    (g, RotationSystem::new(rot))
}

/// A random triangulation with up to `removals` edges deleted, skipping any
/// deletion that would disconnect the graph. The result stays plane.
pub fn gen_near_triangulation(n: usize, seed: u64, removals: usize) -> (Graph, RotationSystem) {
    let (mut g, rot) = gen_random_planar(n, seed);
    let mut rot: Vec<Vec<Vertex>> = rot.as_lists().to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    for _ in 0..removals {
        let edges = g.edges();
        let (u, v) = edges[pick(&mut rng, edges.len())];
        g.remove_edge(u, v).expect("edge exists");
        if g.is_connected() {
            rot[u].retain(|&w| w != v);
            rot[v].retain(|&w| w != u);
        } else {
            g.add_edge(u, v).expect("restoring edge");
        }
    }
    (g, RotationSystem::new(rot))
}

/// Medial graph of a random triangulation on `n` vertices: one vertex per
/// edge, joined when the edges are consecutive around a face. The result is
/// 4-regular, plane, and has `3n - 6` vertices.
pub fn gen_random_medial(n: usize, seed: u64) -> (Graph, RotationSystem) {
    let (g, rot) = gen_random_planar(n, seed);
    let edges = g.edges();
    let id = |u: Vertex, v: Vertex| -> Vertex {
        let key = if u < v { (u, v) } else { (v, u) };
        edges.binary_search(&key).expect("edge of the triangulation")
    };
    let faces = trace_faces(&g, &rot).expect("generated rotation is valid");
    let mut medial = Graph::new(edges.len());
    for f in &faces {
        let k = f.darts.len();
        for i in 0..k {
            let (a, b) = f.darts[i];
            let (c, d) = f.darts[(i + 1) % k];
            medial.add_edge(id(a, b), id(c, d)).expect("medial edge");
        }
    }
    // Around the medial vertex of edge uv: the four neighbours come from the
    // two faces on either side, read in the order they meet the edge.
    let mut mrot = vec![Vec::new(); edges.len()];
    for (e, &(u, v)) in edges.iter().enumerate() {
        let next_at_v = rot.next_after(v, u).expect("rotation");
        let prev_at_v = rot.prev_before(v, u).expect("rotation");
        let next_at_u = rot.next_after(u, v).expect("rotation");
        let prev_at_u = rot.prev_before(u, v).expect("rotation");
        mrot[e] = vec![
            id(v, next_at_v),
            id(v, prev_at_v),
            id(u, next_at_u),
            id(u, prev_at_u),
        ];
    }
    (medial, RotationSystem::new(mrot))
}
