//! Combinatorial plane embeddings.
//!
//! A [`RotationSystem`] lists the neighbours of every vertex in counter-clockwise
//! order. Faces are the orbits of the dart successor
//! `(u, v) -> (v, w)` where `w` follows `u` in the rotation at `v`.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Directed edge occurrence `(tail, head)`.
pub type Dart = (Vertex, Vertex);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    rot: Vec<Vec<Vertex>>,
}

impl RotationSystem {
    /// Wraps per-vertex counter-clockwise neighbour lists, indexed by vertex
    /// id. Tombstoned ids carry empty lists.
    pub fn new(rot: Vec<Vec<Vertex>>) -> Self {
        RotationSystem { rot }
    }

    pub fn around(&self, v: Vertex) -> &[Vertex] {
        self.rot.get(v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn as_lists(&self) -> &[Vec<Vertex>] {
        &self.rot
    }

    /// Counter-clockwise successor of `u` around `v`.
    pub fn next_after(&self, v: Vertex, u: Vertex) -> Option<Vertex> {
        let r = self.around(v);
        let i = r.iter().position(|&x| x == u)?;
        Some(r[(i + 1) % r.len()])
    }

    /// Counter-clockwise predecessor of `u` around `v`.
    pub fn prev_before(&self, v: Vertex, u: Vertex) -> Option<Vertex> {
        let r = self.around(v);
        let i = r.iter().position(|&x| x == u)?;
        Some(r[(i + r.len() - 1) % r.len()])
    }

    /// Checks that every live vertex's cycle is a permutation of its
    /// neighbourhood.
    pub fn check_against(&self, g: &Graph) -> Result<()> {
        for v in g.vertices() {
            let r = self.around(v);
            let set: BTreeSet<Vertex> = r.iter().copied().collect();
            if set.len() != r.len() {
                return Err(Error::InvalidEmbedding {
                    vertex: v,
                    reason: "rotation repeats a neighbour".into(),
                });
            }
            if &set != g.neighbours(v) {
                return Err(Error::InvalidEmbedding {
                    vertex: v,
                    reason: format!(
                        "rotation {:?} is not a permutation of the neighbourhood {:?}",
                        r,
                        g.neighbours(v)
                    ),
                });
            }
        }
        for v in g.id_bound()..self.rot.len() {
            if !self.rot[v].is_empty() {
                return Err(Error::InvalidEmbedding {
                    vertex: v,
                    reason: "rotation given for a vertex outside the graph".into(),
                });
            }
        }
        Ok(())
    }
}

/// One face boundary walk.
///
/// An isolated vertex forms a single face with no darts; `anchor` then names
/// that vertex so the face still belongs to a component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceWalk {
    pub darts: Vec<Dart>,
    pub anchor: Vertex,
}

impl FaceWalk {
    /// Face size, counting repeated vertices with multiplicity.
    pub fn size(&self) -> usize {
        self.darts.len()
    }

    /// Boundary vertices in walk order (dart tails), with multiplicity.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.darts.iter().map(|d| d.0)
    }

    pub fn has_repeated_vertex(&self) -> bool {
        let set: HashSet<Vertex> = self.vertices().collect();
        set.len() != self.darts.len()
    }
}

/// Traces every face of the embedding.
///
/// Walks start from the smallest unused dart in (vertex id, rotation) order,
/// so the output is deterministic.
pub fn trace_faces(g: &Graph, rot: &RotationSystem) -> Result<Vec<FaceWalk>> {
    rot.check_against(g)?;
    let mut pos: HashMap<Dart, usize> = HashMap::new();
    for v in g.vertices() {
        for (i, &u) in rot.around(v).iter().enumerate() {
            pos.insert((v, u), i);
        }
    }
    let mut used: HashSet<Dart> = HashSet::new();
    let mut faces = Vec::new();
    for v in g.vertices() {
        if g.degree(v) == 0 {
            faces.push(FaceWalk {
                darts: Vec::new(),
                anchor: v,
            });
            continue;
        }
        for &u in rot.around(v) {
            let start = (v, u);
            if used.contains(&start) {
                continue;
            }
            let mut darts = Vec::new();
            let mut d = start;
            loop {
                used.insert(d);
                darts.push(d);
                let (a, b) = d;
                // position of a in the rotation at b
                let r = rot.around(b);
                let i = pos[&(b, a)];
                d = (b, r[(i + 1) % r.len()]);
                if d == start {
                    break;
                }
            }
            faces.push(FaceWalk { darts, anchor: v });
        }
    }
    Ok(faces)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentEuler {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    /// V - E + F for this component.
    pub characteristic: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub components: Vec<ComponentEuler>,
    /// True iff every component satisfies V - E + F = 2.
    pub planar: bool,
}

impl EmbeddingReport {
    /// V - E + F for the whole graph, counting each component's faces
    /// separately.
    pub fn characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.faces as i64
    }
}

/// Euler-formula check of a rotation system, component by component.
pub fn validate_embedding(g: &Graph, rot: &RotationSystem) -> Result<EmbeddingReport> {
    let faces = trace_faces(g, rot)?;
    let comps = g.components();
    let mut comp_of = vec![usize::MAX; g.id_bound()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let mut face_count = vec![0usize; comps.len()];
    for f in &faces {
        face_count[comp_of[f.anchor]] += 1;
    }
    let components: Vec<ComponentEuler> = comps
        .iter()
        .zip(&face_count)
        .map(|(c, &f)| {
            let e = c.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
            ComponentEuler {
                vertices: c.len(),
                edges: e,
                faces: f,
                characteristic: c.len() as i64 - e as i64 + f as i64,
            }
        })
        .collect();
    Ok(EmbeddingReport {
        vertices: g.order(),
        edges: g.edge_count(),
        faces: faces.len(),
        planar: components.iter().all(|c| c.characteristic == 2),
        components,
    })
}

/// Finds a plane rotation system for `g`, or `None` if `g` is not planar.
///
/// Each biconnected block is embedded by path addition: starting from a
/// cycle, repeatedly pick a fragment (bridge) of the block relative to the
/// embedded part, preferring one with a single admissible face, and route one
/// of its attachment paths through that face. Block rotations are then
/// concatenated at cut vertices.
pub fn embed_planar(g: &Graph) -> Option<RotationSystem> {
    let mut rot = vec![Vec::new(); g.id_bound()];
    for block in biconnected_blocks(g) {
        let local = if block.len() == 1 {
            let (u, v) = block[0];
            HashMap::from([(u, vec![v]), (v, vec![u])])
        } else {
            embed_block(&block)?
        };
        let mut keys: Vec<_> = local.keys().copied().collect();
        keys.sort_unstable();
        for v in keys {
            rot[v].extend_from_slice(&local[&v]);
        }
    }
    let rs = RotationSystem::new(rot);
    debug_assert!(validate_embedding(g, &rs).map(|r| r.planar).unwrap_or(false));
    Some(rs)
}

/// Edge sets of the biconnected blocks (bridges are single-edge blocks).
fn biconnected_blocks(g: &Graph) -> Vec<Vec<(Vertex, Vertex)>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(Vertex, Vertex)>,
        blocks: Vec<Vec<(Vertex, Vertex)>>,
    }

    fn dfs(s: &mut State, u: Vertex, parent: Option<Vertex>) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        let nbrs: Vec<Vertex> = s.g.neighbours(u).iter().copied().collect();
        for w in nbrs {
            if Some(w) == parent {
                continue;
            }
            if s.disc[w] == 0 {
                s.stack.push((u, w));
                dfs(s, w, Some(u));
                s.low[u] = s.low[u].min(s.low[w]);
                if s.low[w] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (u, w) {
                            break;
                        }
                    }
                    s.blocks.push(block);
                }
            } else if s.disc[w] < s.disc[u] {
                s.stack.push((u, w));
                s.low[u] = s.low[u].min(s.disc[w]);
            }
        }
    }

    let mut s = State {
        g,
        disc: vec![0; g.id_bound()],
        low: vec![0; g.id_bound()],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in g.vertices() {
        if s.disc[v] == 0 {
            dfs(&mut s, v, None);
        }
    }
    s.blocks
}

fn norm(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

enum Fragment {
    Chord(Vertex, Vertex),
    Component {
        members: BTreeSet<Vertex>,
        attachments: BTreeSet<Vertex>,
    },
}

impl Fragment {
    fn attachments(&self) -> Vec<Vertex> {
        match self {
            Fragment::Chord(u, v) => vec![*u, *v],
            Fragment::Component { attachments, .. } => attachments.iter().copied().collect(),
        }
    }
}

/// Path-addition embedding of a 2-connected block with at least 3 vertices.
/// Returns the rotation at each block vertex restricted to block edges.
fn embed_block(edges: &[(Vertex, Vertex)]) -> Option<HashMap<Vertex, Vec<Vertex>>> {
    let mut adj: HashMap<Vertex, BTreeSet<Vertex>> = HashMap::new();
    for &(u, v) in edges {
        adj.entry(u).or_default().insert(v);
        adj.entry(v).or_default().insert(u);
    }
    let mut verts: Vec<Vertex> = adj.keys().copied().collect();
    verts.sort_unstable();

    // Initial cycle: an edge a-b closed by a shortest b..a path avoiding it.
    let a = verts[0];
    let b = *adj[&a].iter().next()?;
    let mut prev: HashMap<Vertex, Vertex> = HashMap::new();
    let mut queue = VecDeque::from([b]);
    prev.insert(b, b);
    while let Some(x) = queue.pop_front() {
        if x == a {
            break;
        }
        for &y in &adj[&x] {
            if (x == b && y == a) || prev.contains_key(&y) {
                continue;
            }
            prev.insert(y, x);
            queue.push_back(y);
        }
    }
    let mut cycle = vec![a];
    let mut x = a;
    while x != b {
        x = *prev.get(&x)?;
        cycle.push(x);
    }

    let mut in_h: HashSet<Vertex> = cycle.iter().copied().collect();
    let mut h_edges: HashSet<(Vertex, Vertex)> = HashSet::new();
    for i in 0..cycle.len() {
        h_edges.insert(norm(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut faces: Vec<Vec<Vertex>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];
    let total_edges = edges.len();

    while h_edges.len() < total_edges {
        let fragments = find_fragments(&verts, &adj, &in_h, &h_edges);
        let mut choice: Option<(usize, usize)> = None;
        let mut fallback: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let att = frag.attachments();
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| att.iter().all(|x| f.contains(x)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if fallback.is_none() {
                        fallback = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.or(fallback)?;
        let path = fragment_path(&fragments[fi], &adj);
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
        for w in path.windows(2) {
            h_edges.insert(norm(w[0], w[1]));
        }
        in_h.extend(path.iter().copied());
    }

    // Derive rotations: in a face walk u -> v -> w, w follows u around v.
    let mut succ: HashMap<Vertex, HashMap<Vertex, Vertex>> = HashMap::new();
    for f in &faces {
        let k = f.len();
        for i in 0..k {
            let (u, v, w) = (f[(i + k - 1) % k], f[i], f[(i + 1) % k]);
            succ.entry(v).or_default().insert(u, w);
        }
    }
    let mut out = HashMap::new();
    for &v in &verts {
        let s = &succ[&v];
        let start = *adj[&v].iter().next()?;
        let mut order = vec![start];
        let mut cur = s[&start];
        while cur != start {
            order.push(cur);
            cur = *s.get(&cur)?;
            if order.len() > adj[&v].len() {
                return None;
            }
        }
        if order.len() != adj[&v].len() {
            return None;
        }
        out.insert(v, order);
    }
    Some(out)
}

fn find_fragments(
    verts: &[Vertex],
    adj: &HashMap<Vertex, BTreeSet<Vertex>>,
    in_h: &HashSet<Vertex>,
    h_edges: &HashSet<(Vertex, Vertex)>,
) -> Vec<Fragment> {
    let mut out = Vec::new();
    for &u in verts {
        if !in_h.contains(&u) {
            continue;
        }
        for &v in adj[&u].range(u + 1..) {
            if in_h.contains(&v) && !h_edges.contains(&(u, v)) {
                out.push(Fragment::Chord(u, v));
            }
        }
    }
    let mut seen: HashSet<Vertex> = HashSet::new();
    for &s in verts {
        if in_h.contains(&s) || seen.contains(&s) {
            continue;
        }
        let mut members = BTreeSet::from([s]);
        let mut attachments = BTreeSet::new();
        seen.insert(s);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[&x] {
                if in_h.contains(&y) {
                    attachments.insert(y);
                } else if seen.insert(y) {
                    members.insert(y);
                    queue.push_back(y);
                }
            }
        }
        out.push(Fragment::Component {
            members,
            attachments,
        });
    }
    out
}

/// A path through the fragment between its two smallest attachments.
fn fragment_path(frag: &Fragment, adj: &HashMap<Vertex, BTreeSet<Vertex>>) -> Vec<Vertex> {
    match frag {
        Fragment::Chord(u, v) => vec![*u, *v],
        Fragment::Component {
            members,
            attachments,
        } => {
            let mut it = attachments.iter();
            let a = *it.next().expect("fragment of a 2-connected block has attachments");
            let b = *it.next().expect("fragment of a 2-connected block has two attachments");
            let mut prev: HashMap<Vertex, Vertex> = HashMap::new();
            let mut queue = VecDeque::new();
            for &m in adj[&a].iter().filter(|m| members.contains(m)) {
                prev.insert(m, a);
                queue.push_back(m);
            }
            let mut end = None;
            while let Some(x) = queue.pop_front() {
                if adj[&x].contains(&b) {
                    end = Some(x);
                    break;
                }
                for &y in &adj[&x] {
                    if members.contains(&y) && !prev.contains_key(&y) {
                        prev.insert(y, x);
                        queue.push_back(y);
                    }
                }
            }
            let mut path = vec![b];
            let mut x = end.expect("fragment is connected");
            while x != a {
                path.push(x);
                x = prev[&x];
            }
            path.push(a);
            path.reverse();
            path
        }
    }
}

/// Splits a directed face cycle along a path whose endpoints lie on it.
fn split_face(face: &[Vertex], path: &[Vertex]) -> (Vec<Vertex>, Vec<Vertex>) {
    let a = path[0];
    let b = *path.last().unwrap();
    let k = face.len();
    let ia = face.iter().position(|&x| x == a).unwrap();
    let ib = face.iter().position(|&x| x == b).unwrap();
    let inner = &path[1..path.len() - 1];

    // a .. b along the face, then back to a through the reversed path
    let mut f1 = Vec::new();
    let mut i = ia;
    loop {
        f1.push(face[i]);
        if i == ib {
            break;
        }
        i = (i + 1) % k;
    }
    f1.extend(inner.iter().rev());

    // b .. a along the face, then forward through the path
    let mut f2 = Vec::new();
    let mut i = ib;
    loop {
        f2.push(face[i]);
        if i == ia {
            break;
        }
        i = (i + 1) % k;
    }
    f2.extend(inner.iter());
    (f1, f2)
}
