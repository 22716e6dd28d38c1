//! Odd-colouring semantics.
//!
//! A colouring is *odd* if it is proper and every non-isolated vertex sees
//! some colour an odd number of times in its neighbourhood.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub type Colour = usize;

/// Vertex to colour map over a palette `0..palette`, indexed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartialColouring {
    palette: usize,
    assignment: Vec<Option<Colour>>,
}

impl PartialColouring {
    /// Everything uncoloured.
    pub fn new(palette: usize, id_bound: usize) -> Self {
        PartialColouring {
            palette,
            assignment: vec![None; id_bound],
        }
    }

    pub fn from_assignment(palette: usize, assignment: Vec<Option<Colour>>) -> Result<Self> {
        if let Some(c) = assignment.iter().flatten().find(|&&c| c >= palette) {
            return Err(Error::Malformed(format!(
                "colour {c} outside palette of size {palette}"
            )));
        }
        Ok(PartialColouring {
            palette,
            assignment,
        })
    }

    /// Total colouring from a dense colour list.
    pub fn from_colours(palette: usize, colours: &[Colour]) -> Result<Self> {
        Self::from_assignment(palette, colours.iter().map(|&c| Some(c)).collect())
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn get(&self, v: Vertex) -> Option<Colour> {
        self.assignment.get(v).copied().flatten()
    }

    pub fn assignment(&self) -> &[Option<Colour>] {
        &self.assignment
    }

    pub fn set(&mut self, v: Vertex, c: Colour) -> Result<()> {
        if c >= self.palette {
            return Err(Error::Malformed(format!(
                "colour {c} outside palette of size {}",
                self.palette
            )));
        }
        if v >= self.assignment.len() {
            self.assignment.resize(v + 1, None);
        }
        self.assignment[v] = Some(c);
        Ok(())
    }

    pub fn clear(&mut self, v: Vertex) {
        if let Some(slot) = self.assignment.get_mut(v) {
            *slot = None;
        }
    }

    pub fn widen(&mut self, palette: usize) {
        self.palette = self.palette.max(palette);
    }

    /// True iff every live vertex of `g` is coloured.
    pub fn is_total_on(&self, g: &Graph) -> bool {
        g.vertices().all(|v| self.get(v).is_some())
    }

    /// Distinct colours in use.
    pub fn colours_used(&self) -> BTreeSet<Colour> {
        self.assignment.iter().flatten().copied().collect()
    }

    /// Dense list of colours for the live vertices of `g`, `None` where
    /// uncoloured.
    pub fn on(&self, g: &Graph) -> Vec<Option<Colour>> {
        g.vertices().map(|v| self.get(v)).collect()
    }
}

/// A non-isolated vertex whose neighbourhood sees every colour an even
/// number of times.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddDefect {
    pub vertex: Vertex,
    pub histogram: BTreeMap<Colour, usize>,
}

fn histogram<'a>(
    c: &PartialColouring,
    nbrs: impl Iterator<Item = &'a Vertex>,
) -> BTreeMap<Colour, usize> {
    let mut h = BTreeMap::new();
    for &w in nbrs {
        if let Some(col) = c.get(w) {
            *h.entry(col).or_insert(0) += 1;
        }
    }
    h
}

pub fn is_proper(g: &Graph, c: &PartialColouring) -> bool {
    g.edges()
        .into_iter()
        .all(|(u, v)| match (c.get(u), c.get(v)) {
            (Some(a), Some(b)) => a != b,
            _ => true,
        })
}

fn require_total(g: &Graph, c: &PartialColouring) -> Result<()> {
    match g.vertices().find(|&v| c.get(v).is_none()) {
        None => Ok(()),
        Some(v) => Err(Error::Precondition(format!("vertex {v} is uncoloured"))),
    }
}

/// True iff the colours seen by `v` include one of odd multiplicity (or `v`
/// is isolated). Uncoloured neighbours are ignored.
pub fn has_odd_colour(g: &Graph, c: &PartialColouring, v: Vertex) -> bool {
    g.degree(v) == 0 || histogram(c, g.neighbours(v).iter()).values().any(|n| n % 2 == 1)
}

pub fn odd_defects(g: &Graph, c: &PartialColouring) -> Result<Vec<OddDefect>> {
    require_total(g, c)?;
    Ok(g.vertices()
        .filter(|&v| g.degree(v) > 0)
        .filter_map(|v| {
            let h = histogram(c, g.neighbours(v).iter());
            h.values().all(|n| n % 2 == 0).then_some(OddDefect {
                vertex: v,
                histogram: h,
            })
        })
        .collect())
}

pub fn is_odd_colouring(g: &Graph, c: &PartialColouring) -> Result<bool> {
    Ok(is_proper(g, c) && odd_defects(g, c)?.is_empty())
}

/// The colour `w` would lose as its only odd colour if `excluding` took it:
/// the unique odd-multiplicity colour of `N(w) \ {excluding}`, if exactly one
/// exists.
pub fn odd_forbidden_colour(
    g: &Graph,
    c: &PartialColouring,
    w: Vertex,
    excluding: Vertex,
) -> Result<Option<Colour>> {
    if !g.contains(w) {
        return Err(Error::NoSuchVertex(w));
    }
    if !g.has_edge(w, excluding) {
        return Err(Error::Precondition(format!(
            "{excluding} is not a neighbour of {w}"
        )));
    }
    let rest = g.neighbours(w).iter().filter(|&&x| x != excluding);
    if let Some(x) = rest.clone().find(|&&x| c.get(x).is_none()) {
        return Err(Error::Precondition(format!(
            "neighbour {x} of {w} is uncoloured"
        )));
    }
    let mut odd = histogram(c, rest)
        .into_iter()
        .filter(|(_, n)| n % 2 == 1)
        .map(|(col, _)| col);
    Ok(match (odd.next(), odd.next()) {
        (Some(col), None) => Some(col),
        _ => None,
    })
}

/// Colours that `v` cannot take: the colour of every neighbour and every
/// neighbour's oddness-forbidden colour.
pub fn forbidden_set(g: &Graph, c: &PartialColouring, v: Vertex) -> Result<BTreeSet<Colour>> {
    if !g.contains(v) {
        return Err(Error::NoSuchVertex(v));
    }
    if c.get(v).is_some() {
        return Err(Error::Precondition(format!("vertex {v} is already coloured")));
    }
    let mut out = BTreeSet::new();
    for &w in g.neighbours(v) {
        let cw = c
            .get(w)
            .ok_or_else(|| Error::Precondition(format!("neighbour {w} of {v} is uncoloured")))?;
        out.insert(cw);
        if let Some(b) = odd_forbidden_colour(g, c, w, v)? {
            out.insert(b);
        }
    }
    Ok(out)
}

/// Local validity around a set of recoloured vertices: no edge at a listed
/// vertex is monochromatic, and every listed vertex and every neighbour of a
/// listed vertex still has an odd colour.
pub fn locally_odd(g: &Graph, c: &PartialColouring, changed: &[Vertex]) -> bool {
    let mut region: BTreeSet<Vertex> = BTreeSet::new();
    for &v in changed {
        let Some(cv) = c.get(v) else { return false };
        for &w in g.neighbours(v) {
            if c.get(w) == Some(cv) {
                return false;
            }
            region.insert(w);
        }
        region.insert(v);
    }
    region.into_iter().all(|x| has_odd_colour(g, c, x))
}
