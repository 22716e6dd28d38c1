//! Odd forests: acyclic induced subgraphs in which every vertex has odd
//! (so at least one) induced degree.

use std::collections::{BTreeSet, VecDeque};

use crate::colouring::{Colour, PartialColouring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

fn induced_degree(g: &Graph, part: &BTreeSet<Vertex>, v: Vertex) -> usize {
    g.neighbours(v).iter().filter(|w| part.contains(w)).count()
}

pub fn is_odd_forest(g: &Graph, part: &BTreeSet<Vertex>) -> bool {
    if part.iter().any(|&v| !g.contains(v)) {
        return false;
    }
    if part.iter().any(|&v| induced_degree(g, part, v).is_multiple_of(2)) {
        return false;
    }
    // acyclic iff edges = vertices - components
    let edges: usize = part.iter().map(|&v| induced_degree(g, part, v)).sum::<usize>() / 2;
    let comps = g.restricted_to(&part.iter().copied().collect::<Vec<_>>()).components().len();
    edges + comps == part.len()
}

/// Two-colours each tree of the odd forest by its bipartition, using `a` for
/// the side containing the smallest vertex of the tree.
///
/// Every vertex then sees only the other colour inside the part, an odd
/// number of times.
pub fn bipartition_odd_colouring(
    g: &Graph,
    part: &BTreeSet<Vertex>,
    pair: (Colour, Colour),
) -> Result<PartialColouring> {
    let (a, b) = pair;
    if a == b {
        return Err(Error::Precondition("colour pair must be two distinct colours".into()));
    }
    if !is_odd_forest(g, part) {
        return Err(Error::Precondition("part does not induce an odd forest".into()));
    }
    let mut c = PartialColouring::new(a.max(b) + 1, g.id_bound());
    for &root in part {
        if c.get(root).is_some() {
            continue;
        }
        c.set(root, a)?;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let other = if c.get(u) == Some(a) { b } else { a };
            for &w in g.neighbours(u) {
                if part.contains(&w) && c.get(w).is_none() {
                    c.set(w, other)?;
                    queue.push_back(w);
                }
            }
        }
    }
    Ok(c)
}
