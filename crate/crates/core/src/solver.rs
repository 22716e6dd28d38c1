//! Exact odd-colouring search.

use serde::Serialize;

use crate::colouring::PartialColouring;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Solved(PartialColouring),
    NoSolution,
    BudgetExhausted,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub nodes: u64,
}

/// Decides whether `g` has an odd colouring with at most `k` colours.
///
/// Backtracking over vertices in descending degree order. A colour is
/// rejected when it clashes with a coloured neighbour, or when it completes
/// the neighbourhood of some vertex without leaving an odd colour there.
/// A fresh colour is only ever the smallest unused one, so colour
/// permutations are not revisited.
pub fn solve_odd_k(g: &Graph, k: usize, budget: u64) -> Result<SolveOutcome> {
    solve_with_stats(g, k, budget).map(|(o, _)| o)
}

pub fn solve_with_stats(g: &Graph, k: usize, budget: u64) -> Result<(SolveOutcome, SolveStats)> {
    if k == 0 {
        return Err(Error::Precondition("palette size must be at least 1".into()));
    }
    let (h, ids) = g.compacted();
    let n = h.order();
    let mut order: Vec<usize> = (0..n).filter(|&v| h.degree(v) > 0).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));

    let mut s = Search {
        g: &h,
        k,
        order: &order,
        colour: vec![usize::MAX; n],
        count: vec![vec![0u32; k]; n],
        odd: vec![0u32; n],
        open: (0..n).map(|v| h.degree(v) as u32).collect(),
        nodes: 0,
        budget,
    };
    let found = s.run(0, 0);
    let stats = SolveStats { nodes: s.nodes };
    let outcome = match found {
        Some(true) => {
            let mut c = PartialColouring::new(k, g.id_bound());
            for (i, &v) in ids.iter().enumerate() {
                // isolated vertices take colour 0
                let col = if s.colour[i] == usize::MAX { 0 } else { s.colour[i] };
                c.set(v, col)?;
            }
            SolveOutcome::Solved(c)
        }
        Some(false) => SolveOutcome::NoSolution,
        None => SolveOutcome::BudgetExhausted,
    };
    Ok((outcome, stats))
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    order: &'a [usize],
    colour: Vec<usize>,
    /// count[v][c]: neighbours of v coloured c
    count: Vec<Vec<u32>>,
    /// number of colours with odd count around v
    odd: Vec<u32>,
    /// uncoloured neighbours of v
    open: Vec<u32>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// `Some(found)` or `None` when the budget ran out.
    fn run(&mut self, i: usize, used: usize) -> Option<bool> {
        if i == self.order.len() {
            return Some(true);
        }
        let v = self.order[i];
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.count[v][c] > 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            self.place(v, c);
            let ok = self.closes_ok(v);
            if ok {
                match self.run(i + 1, used.max(c + 1)) {
                    Some(true) => return Some(true),
                    None => return None,
                    Some(false) => {}
                }
            }
            self.unplace(v, c);
        }
        Some(false)
    }

    fn place(&mut self, v: usize, c: usize) {
        self.colour[v] = c;
        for &w in self.g.neighbours(v) {
            self.count[w][c] += 1;
            if self.count[w][c] % 2 == 1 {
                self.odd[w] += 1;
            } else {
                self.odd[w] -= 1;
            }
            self.open[w] -= 1;
        }
    }

    fn unplace(&mut self, v: usize, c: usize) {
        self.colour[v] = usize::MAX;
        for &w in self.g.neighbours(v) {
            self.count[w][c] -= 1;
            if self.count[w][c] % 2 == 1 {
                self.odd[w] += 1;
            } else {
                self.odd[w] -= 1;
            }
            self.open[w] += 1;
        }
    }

    /// Every neighbourhood completed by colouring `v` has an odd colour.
    fn closes_ok(&self, v: usize) -> bool {
        if self.open[v] == 0 && self.odd[v] == 0 {
            return false;
        }
        self.g
            .neighbours(v)
            .iter()
            .all(|&w| self.open[w] > 0 || self.odd[w] > 0)
    }
}

/// Odd chromatic number by increasing `k`. Zero for the empty graph, one for
/// an edgeless graph.
pub fn chi_odd_exact(g: &Graph, budget: u64) -> Result<usize> {
    let n = g.order();
    if n == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    // n distinct colours always work: every neighbour colour is seen once
    for k in 2..=n {
        match solve_odd_k(g, k, budget)? {
            SolveOutcome::Solved(_) => return Ok(k),
            SolveOutcome::NoSolution => {}
            SolveOutcome::BudgetExhausted => return Err(Error::BudgetExhausted(budget)),
        }
    }
    Ok(n)
}
