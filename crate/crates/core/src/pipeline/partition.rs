//! Partition into at most four odd forests, and the even-order colouring
//! built on top of it.

use std::collections::BTreeSet;

use petgraph::algo::maximum_matching;
use petgraph::graph::{NodeIndex, UnGraph};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::colouring::PartialColouring;
use crate::error::{Error, Result};
use crate::forest::bipartition_odd_colouring;
use crate::graph::{Graph, Vertex};

pub const MAX_PARTS: usize = 4;

/// Splits `V(g)` into at most four sets, each inducing an odd forest.
///
/// Such a partition always exists for connected planar graphs of even order,
/// but the known existence argument is not constructive, so this is a
/// deterministic search in two layers. The components of the wanted forests
/// are induced trees with all degrees odd; the outer layer covers `V(g)`
/// with such trees, and the inner layer properly colours the graph obtained
/// by contracting each tree, using at most four colours. A colour class is
/// then a union of pairwise non-adjacent induced odd trees. Contracting
/// connected sets keeps a graph planar, so for planar input the inner layer
/// always succeeds; otherwise the outer layer resumes, which keeps the
/// search complete.
///
/// A maximum matching steers the outer layer: when it is perfect, the first
/// descent covers `V(g)` with its edges.
///
/// Ties are broken by a seeded ranking that is reshuffled between restarts;
/// attempt `i` may spend `RESTART_UNIT * luby(i)` nodes. An attempt that
/// exhausts its space within its limit proves that no partition exists.
///
/// `budget` bounds the total number of search nodes over both layers.
pub fn four_forest_partition(g: &Graph, budget: u64) -> Result<Vec<BTreeSet<Vertex>>> {
    if g.order() % 2 == 1 {
        return Err(Error::Precondition(format!(
            "odd-forest partition needs even order, got {}",
            g.order()
        )));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("odd-forest partition needs a connected graph".into()));
    }
    if g.order() == 0 {
        return Ok(Vec::new());
    }
    let (h, ids) = g.compacted();
    let n = h.order();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| h.neighbours(v).iter().copied().collect()).collect();
    let matching: Vec<Option<usize>> = {
        let pg = UnGraph::<(), ()>::from_edges(h.edges().iter().map(|&(u, v)| (u as u32, v as u32)));
        let m = maximum_matching(&pg);
        (0..n)
            .map(|v| {
                if v < pg.node_count() {
                    m.mate(NodeIndex::new(v)).map(|x| x.index())
                } else {
                    None
                }
            })
            .collect()
    };
    let mut rank: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut spent = 0u64;
    let mut attempt = 1u64;
    let s = loop {
        let limit = (RESTART_UNIT * luby(attempt)).min(budget - spent);
        let mut s = TreeCover {
            nbrs: &nbrs,
            mate: &matching,
            rank: &rank,
            deg: vec![0; n],
            comp: (0..n).collect(),
            members: (0..n).map(|v| vec![v]).collect(),
            merges: Vec::new(),
            banned: BTreeSet::new(),
            nodes: 0,
            budget: limit,
            parts: None,
        };
        match s.run() {
            Some(true) => break s,
            Some(false) => {
                return Err(Error::Contradiction(
                    "no partition into four odd forests exists; the input cannot be a connected planar graph of even order"
                        .into(),
                ))
            }
            None => {
                spent += limit;
                if spent >= budget {
                    return Err(Error::BudgetExhausted(budget));
                }
                rank.shuffle(&mut rng);
                attempt += 1;
            }
        }
    };
    let part = s.parts.expect("set on success");
    let mut parts = vec![BTreeSet::new(); MAX_PARTS];
    for (v, &p) in part.iter().enumerate() {
        parts[p].insert(ids[v]);
    }
    parts.retain(|p| !p.is_empty());
    Ok(parts)
}

const RESTART_UNIT: u64 = 1024;

/// The Luby restart sequence 1, 1, 2, 1, 1, 2, 4, 1, ... (1-indexed).
fn luby(mut i: u64) -> u64 {
    loop {
        let mut k = 1;
        while (1u64 << k) - 1 < i {
            k += 1;
        }
        if (1u64 << k) - 1 == i {
            return 1 << (k - 1);
        }
        i -= (1u64 << (k - 1)) - 1;
    }
}

type Score = (usize, usize, usize);

/// Outer layer: grows a spanning forest `F` edge by edge. Every component
/// of `F` stays an induced tree of the graph (two components merge only
/// when exactly one edge joins them), and a vertex of even `F`-degree must
/// gain another edge. When no vertex has even degree, the components are
/// handed to the colouring layer.
struct TreeCover<'a> {
    nbrs: &'a [Vec<usize>],
    /// partner in a maximum matching; tried first
    mate: &'a [Option<usize>],
    /// tie-break order, reshuffled between restarts
    rank: &'a [usize],
    deg: Vec<u32>,
    comp: Vec<usize>,
    members: Vec<Vec<usize>>,
    /// (absorbed label, surviving label, members moved) per merge
    merges: Vec<(usize, usize, usize)>,
    /// edges excluded because an earlier sibling branch already chose them
    banned: BTreeSet<(usize, usize)>,
    nodes: u64,
    budget: u64,
    parts: Option<Vec<usize>>,
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl TreeCover<'_> {
    /// Neighbours `w` that `v` may join by the edge `vw`.
    fn candidates(&self, v: usize) -> Vec<usize> {
        let cv = self.comp[v];
        self.nbrs[v]
            .iter()
            .copied()
            .filter(|&w| {
                let cw = self.comp[w];
                cw != cv && !self.banned.contains(&key(v, w)) && self.edges_between(cv, cw) == 1
            })
            .collect()
    }

    fn edges_between(&self, a: usize, b: usize) -> usize {
        let (small, other) = if self.members[a].len() <= self.members[b].len() {
            (a, b)
        } else {
            (b, a)
        };
        self.members[small]
            .iter()
            .map(|&x| self.nbrs[x].iter().filter(|&&y| self.comp[y] == other).count())
            .sum()
    }

    fn join(&mut self, v: usize, w: usize) {
        let (mut a, mut b) = (self.comp[v], self.comp[w]);
        if self.members[a].len() < self.members[b].len() {
            std::mem::swap(&mut a, &mut b);
        }
        let moved = std::mem::take(&mut self.members[b]);
        let moved_len = moved.len();
        for &x in &moved {
            self.comp[x] = a;
        }
        self.members[a].extend(moved);
        self.merges.push((b, a, moved_len));
        self.deg[v] += 1;
        self.deg[w] += 1;
    }

    fn split(&mut self, v: usize, w: usize) {
        let (b, a, moved) = self.merges.pop().expect("merge to undo");
        let keep = self.members[a].len() - moved;
        let back = self.members[a].split_off(keep);
        for &x in &back {
            self.comp[x] = b;
        }
        self.members[b] = back;
        self.deg[v] -= 1;
        self.deg[w] -= 1;
    }

    fn run(&mut self) -> Option<bool> {
        let n = self.deg.len();
        // (score, vertex, candidates)
        let mut best: Option<(Score, usize, Vec<usize>)> = None;
        for v in 0..n {
            if self.deg[v] % 2 == 1 {
                continue;
            }
            let c = self.candidates(v);
            if c.is_empty() {
                return Some(false);
            }
            let key = (c.len(), usize::MAX - self.nbrs[v].len(), self.rank[v]);
            if best.as_ref().is_none_or(|b| key < b.0) {
                best = Some((key, v, c));
            }
        }
        let Some((_, v, mut cands)) = best else {
            return self.colour_components();
        };
        // matching partner first, then other needy vertices, then the
        // least flexible partner
        cands.sort_by_key(|&w| (self.mate[v] != Some(w), self.deg[w] % 2, self.nbrs[w].len(), self.rank[w]));
        let mut banned_here = Vec::new();
        let mut outcome = Some(false);
        for w in cands {
            self.nodes += 1;
            if self.nodes > self.budget {
                outcome = None;
                break;
            }
            self.join(v, w);
            let r = self.run();
            self.split(v, w);
            if r != Some(false) {
                outcome = r;
                break;
            }
            self.banned.insert(key(v, w));
            banned_here.push(key(v, w));
        }
        for k in banned_here {
            self.banned.remove(&k);
        }
        outcome
    }

    /// Inner layer: proper colouring of the contracted graph with at most
    /// `MAX_PARTS` colours, by backtracking in saturation order.
    fn colour_components(&mut self) -> Option<bool> {
        let n = self.deg.len();
        let labels: Vec<usize> = {
            let mut l: Vec<usize> = self.comp.clone();
            l.sort_unstable();
            l.dedup();
            l
        };
        let index = |c: usize| labels.binary_search(&c).expect("label");
        let k = labels.len();
        let mut adj = vec![BTreeSet::new(); k];
        for v in 0..n {
            for &w in &self.nbrs[v] {
                let (a, b) = (index(self.comp[v]), index(self.comp[w]));
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
        let mut colour = vec![usize::MAX; k];
        let r = self.colour_from(&adj, &mut colour, 0);
        if r == Some(true) {
            self.parts = Some((0..n).map(|v| colour[index(self.comp[v])]).collect());
        }
        r
    }

    fn colour_from(&mut self, adj: &[BTreeSet<usize>], colour: &mut [usize], used: usize) -> Option<bool> {
        let mut best: Option<(usize, usize, usize)> = None;
        for x in 0..adj.len() {
            if colour[x] != usize::MAX {
                continue;
            }
            let seen: BTreeSet<usize> = adj[x].iter().map(|&y| colour[y]).filter(|&c| c != usize::MAX).collect();
            let key = (usize::MAX - seen.len(), usize::MAX - adj[x].len(), x);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        let Some((_, _, x)) = best else {
            return Some(true);
        };
        for c in 0..(used + 1).min(MAX_PARTS) {
            if adj[x].iter().any(|&y| colour[y] == c) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            colour[x] = c;
            match self.colour_from(adj, colour, used.max(c + 1)) {
                Some(false) => {}
                r => return r,
            }
            colour[x] = usize::MAX;
        }
        Some(false)
    }
}

/// Odd colouring of a connected planar graph of even order with at most
/// eight colours: part `i` of the odd-forest partition is two-coloured with
/// the pair `{2i, 2i+1}`.
pub fn colour_even_order(g: &Graph, budget: u64) -> Result<PartialColouring> {
    let parts = four_forest_partition(g, budget)?;
    let mut c = PartialColouring::new(2 * MAX_PARTS, g.id_bound());
    for (i, part) in parts.iter().enumerate() {
        let pc = bipartition_odd_colouring(g, part, (2 * i, 2 * i + 1))?;
        for &v in part {
            c.set(v, pc.get(v).expect("bipartition colours the whole part"))?;
        }
    }
    Ok(c)
}
