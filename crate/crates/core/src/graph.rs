//! Simple undirected graphs with stable vertex identities.
//!
//! Vertex ids are indices into the graph's slot table. Deleting a vertex
//! tombstones its slot instead of renumbering, so ids recorded elsewhere (for
//! example in a reduction trace) stay meaningful across mutations.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Debug, Clone, Default)]
pub struct Graph {
    adj: Vec<BTreeSet<Vertex>>,
    alive: Vec<bool>,
}

/// A single structural edit, see [`Graph::mutate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    RemoveVertex(Vertex),
    AddEdge(Vertex, Vertex),
    RemoveEdge(Vertex, Vertex),
    AttachLeaf(Vertex),
}

#[derive(Debug, Clone)]
pub struct Mutated {
    pub graph: Graph,
    /// False when the edit left the graph unchanged (an `AddEdge` on an
    /// already adjacent pair).
    pub changed: bool,
    /// The id of the new vertex for `AttachLeaf`.
    pub new_vertex: Option<Vertex>,
}

impl Graph {
    /// Edgeless graph on vertices `0..order`.
    pub fn new(order: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); order],
            alive: vec![true; order],
        }
    }

    pub fn from_edges(order: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::new(order);
        for &(u, v) in edges {
            if u == v {
                return Err(Error::Malformed(format!("loop at vertex {u}")));
            }
            g.check(u)?;
            g.check(v)?;
            if !g.adj[u].insert(v) {
                return Err(Error::Malformed(format!("duplicate edge {u}-{v}")));
            }
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    fn check(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::NoSuchVertex(v))
        }
    }

    /// Number of live vertices.
    pub fn order(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    /// One past the largest vertex id ever allocated (live or tombstoned).
    pub fn id_bound(&self) -> usize {
        self.alive.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.alive.get(v).copied().unwrap_or(false)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.alive
            .iter()
            .enumerate()
            .filter_map(|(v, &a)| a.then_some(v))
    }

    pub fn neighbours(&self, v: Vertex) -> &BTreeSet<Vertex> {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.contains(u) && self.adj[u].contains(&v)
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.vertices()
            .flat_map(|u| self.adj[u].range(u + 1..).map(move |&v| (u, v)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.vertices().map(|v| self.adj[v].len()).sum::<usize>() / 2
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Appends a new isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(BTreeSet::new());
        self.alive.push(true);
        self.alive.len() - 1
    }

    /// Inserts edge `uv`. Returns `Ok(false)` if the edge already existed.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::Malformed(format!("loop at vertex {u}")));
        }
        let fresh = self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(fresh)
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        let had = self.adj[u].remove(&v);
        self.adj[v].remove(&u);
        Ok(had)
    }

    /// Tombstones `v` and drops its edges. Returns the former neighbourhood.
    pub fn remove_vertex(&mut self, v: Vertex) -> Result<BTreeSet<Vertex>> {
        self.check(v)?;
        let nbrs = std::mem::take(&mut self.adj[v]);
        for &w in &nbrs {
            self.adj[w].remove(&v);
        }
        self.alive[v] = false;
        Ok(nbrs)
    }

    /// Revives a tombstoned (or fresh, one past the end) id with the given
    /// neighbourhood. Inverse of [`Graph::remove_vertex`].
    pub fn restore_vertex(&mut self, v: Vertex, nbrs: &BTreeSet<Vertex>) -> Result<()> {
        if self.contains(v) {
            return Err(Error::Precondition(format!("vertex {v} is already live")));
        }
        while self.alive.len() <= v {
            self.adj.push(BTreeSet::new());
            self.alive.push(false);
        }
        self.alive[v] = true;
        for &w in nbrs {
            if w == v {
                return Err(Error::Malformed(format!("loop at vertex {v}")));
            }
            self.check(w)?;
            self.adj[v].insert(w);
            self.adj[w].insert(v);
        }
        Ok(())
    }

    /// Applies `op` to a copy of the graph.
    pub fn mutate(&self, op: Mutation) -> Result<Mutated> {
        let mut graph = self.clone();
        let (changed, new_vertex) = match op {
            Mutation::RemoveVertex(v) => {
                graph.remove_vertex(v)?;
                (true, None)
            }
            Mutation::AddEdge(u, v) => (graph.add_edge(u, v)?, None),
            Mutation::RemoveEdge(u, v) => (graph.remove_edge(u, v)?, None),
            Mutation::AttachLeaf(v) => {
                graph.check(v)?;
                let leaf = graph.add_vertex();
                graph.add_edge(v, leaf)?;
                (true, Some(leaf))
            }
        };
        Ok(Mutated {
            graph,
            changed,
            new_vertex,
        })
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.id_bound()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Copy of the graph keeping only the listed vertices (ids preserved).
    pub fn restricted_to(&self, keep: &[Vertex]) -> Graph {
        let mut mask = vec![false; self.id_bound()];
        for &v in keep {
            if self.contains(v) {
                mask[v] = true;
            }
        }
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, nb)| {
                if mask[v] {
                    nb.iter().copied().filter(|&w| mask[w]).collect()
                } else {
                    BTreeSet::new()
                }
            })
            .collect();
        Graph { adj, alive: mask }
    }

    /// Relabels live vertices to `0..order` in increasing id order. Returns
    /// the compact graph and the map from new ids to old ids.
    pub fn compacted(&self) -> (Graph, Vec<Vertex>) {
        let old: Vec<Vertex> = self.vertices().collect();
        let mut index = vec![usize::MAX; self.id_bound()];
        for (i, &v) in old.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(old.len());
        for (i, &v) in old.iter().enumerate() {
            g.adj[i] = self.adj[v].iter().map(|&w| index[w]).collect();
        }
        (g, old)
    }
}

impl PartialEq for Graph {
    /// Structural equality on live vertices; trailing tombstones are ignored.
    fn eq(&self, other: &Self) -> bool {
        let n = self.id_bound().max(other.id_bound());
        (0..n).all(|v| {
            self.contains(v) == other.contains(v)
                && (!self.contains(v) || self.adj[v] == other.adj[v])
        })
    }
}

impl Eq for Graph {}
