//! Constructive odd 8-colouring of planar graphs.
//!
//! The recursion mirrors the reducibility argument: even order is handled by
//! an odd-forest partition, an odd-degree vertex by attaching a leaf, a
//! degree-2 vertex by contracting it, and what remains (odd order, all
//! degrees even and at least 4) always contains one of two reducible
//! configurations.

pub mod config;
pub mod extend;
pub mod partition;
pub mod trace;

use serde::Serialize;

use crate::colouring::{forbidden_set, is_odd_colouring, locally_odd, PartialColouring};
use crate::embedding::embed_planar;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::solver::{solve_odd_k, SolveOutcome, DEFAULT_BUDGET};

pub use config::{find_claim1_config, find_claim2_config, find_config, ConfigMatch};
pub use extend::{claim1_pairs, claim2_pairs, extend_after_claim1, extend_after_claim2, PALETTE};
pub use partition::{colour_even_order, four_forest_partition};
pub use trace::{ReductionStep, ReductionTrace};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineOptions {
    /// Components of at most this order go straight to the exact solver.
    pub base_case_max_order: usize,
    /// Node budget for each exact-solver or partition search.
    pub budget: u64,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            base_case_max_order: 8,
            budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PipelineStats {
    pub exact_solves: usize,
    pub even_order_partitions: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlanarColouring {
    pub colouring: PartialColouring,
    pub trace: ReductionTrace,
    pub stats: PipelineStats,
    /// Independent re-verification of the final colouring.
    pub verified: bool,
}

pub fn odd_colour_planar_8(g: &Graph) -> Result<PlanarColouring> {
    odd_colour_planar_8_with(g, PipelineOptions::default())
}

pub fn odd_colour_planar_8_with(g: &Graph, opts: PipelineOptions) -> Result<PlanarColouring> {
    let mut run = Run {
        opts,
        check_planarity: cfg!(debug_assertions) && embed_planar(g).is_some(),
        next_id: g.id_bound(),
        trace: ReductionTrace::default(),
        stats: PipelineStats::default(),
    };
    let mut colouring = run.colour(g.clone())?;
    colouring.widen(PALETTE);
    let verified = is_odd_colouring(g, &colouring)? && colouring.colours_used().len() <= PALETTE;
    if !verified {
        return Err(Error::Contradiction(
            "final colouring failed re-verification".into(),
        ));
    }
    Ok(PlanarColouring {
        colouring,
        trace: run.trace,
        stats: run.stats,
        verified,
    })
}

/// Colours one component that has an odd-degree vertex `v` by colouring
/// `g` plus a pendant leaf at `v` and dropping the leaf.
pub fn reduce_and_extend_odd_degree(g: &Graph, v: Vertex) -> Result<PartialColouring> {
    check_odd_order_connected(g)?;
    if !g.contains(v) || g.degree(v).is_multiple_of(2) {
        return Err(Error::Precondition(format!("vertex {v} must have odd degree")));
    }
    let mut run = Run::new(g);
    run.odd_degree_step(g.clone(), v)
}

/// Colours `g` by contracting the degree-2 vertex `v`, colouring the smaller
/// graph, and giving `v` a colour outside its forbidden set.
pub fn reduce_and_extend_deg2(g: &Graph, v: Vertex) -> Result<PartialColouring> {
    check_odd_order_connected(g)?;
    if !g.contains(v) || g.degree(v) != 2 {
        return Err(Error::Precondition(format!("vertex {v} must have degree 2")));
    }
    let mut run = Run::new(g);
    run.deg2_step(g.clone(), v)
}

fn check_odd_order_connected(g: &Graph) -> Result<()> {
    if g.order().is_multiple_of(2) || !g.is_connected() {
        return Err(Error::Precondition("expected a connected graph of odd order".into()));
    }
    Ok(())
}

struct Run {
    opts: PipelineOptions,
    /// Debug builds only: whether the input was planar, so that reductions
    /// adding an edge can be re-checked.
    check_planarity: bool,
    next_id: Vertex,
    trace: ReductionTrace,
    stats: PipelineStats,
}

impl Run {
    fn new(g: &Graph) -> Self {
        Run {
            opts: PipelineOptions::default(),
            check_planarity: cfg!(debug_assertions) && embed_planar(g).is_some(),
        next_id: g.id_bound(),
            trace: ReductionTrace::default(),
            stats: PipelineStats::default(),
        }
    }

    fn still_planar(&self, h: &Graph, step: &ReductionStep) -> Result<()> {
        if self.check_planarity && embed_planar(h).is_none() {
            return Err(Error::Contradiction(format!("reduction {step:?} made the graph non-planar")));
        }
        Ok(())
    }

    fn colour(&mut self, g: Graph) -> Result<PartialColouring> {
        let comps = g.components();
        if comps.len() > 1 {
            let mut out = PartialColouring::new(PALETTE, g.id_bound());
            for comp in comps {
                let part = self.colour(g.restricted_to(&comp))?;
                for v in comp {
                    out.set(v, part.get(v).expect("component coloured"))?;
                }
            }
            return Ok(out);
        }
        let n = g.order();
        if n == 0 {
            return Ok(PartialColouring::new(PALETTE, g.id_bound()));
        }
        if n <= self.opts.base_case_max_order {
            self.stats.exact_solves += 1;
            return match solve_odd_k(&g, PALETTE, self.opts.budget)? {
                SolveOutcome::Solved(c) => Ok(c),
                SolveOutcome::NoSolution => Err(Error::Contradiction(format!(
                    "a graph on {n} <= {PALETTE} vertices has no odd {PALETTE}-colouring"
                ))),
                SolveOutcome::BudgetExhausted => Err(Error::BudgetExhausted(self.opts.budget)),
            };
        }
        if n.is_multiple_of(2) {
            self.stats.even_order_partitions += 1;
            return colour_even_order(&g, self.opts.budget);
        }
        let odd = g.vertices().find(|&v| g.degree(v) % 2 == 1);
        if let Some(v) = odd {
            return self.odd_degree_step(g, v);
        }
        let deg2 = g.vertices().find(|&v| g.degree(v) == 2);
        if let Some(v) = deg2 {
            return self.deg2_step(g, v);
        }
        if let Some(m) = find_claim1_config(&g) {
            return self.claim1_step(g, m);
        }
        if let Some(m) = find_claim2_config(&g) {
            return self.claim2_step(g, m);
        }
        Err(Error::Contradiction(format!(
            "connected graph of odd order {n} with all degrees even and at least 4 has neither reducible configuration; it cannot be planar"
        )))
    }

    fn odd_degree_step(&mut self, g: Graph, v: Vertex) -> Result<PartialColouring> {
        let leaf = self.next_id;
        self.next_id += 1;
        let step = ReductionStep::AttachLeaf { v, leaf };
        let mut h = g.clone();
        step.apply(&mut h)?;
        self.trace.steps.push(step);
        let mut c = self.colour(h)?;
        c.clear(leaf);
        // odd degree: some colour around v has odd multiplicity
        Ok(c)
    }

    fn deg2_step(&mut self, g: Graph, v: Vertex) -> Result<PartialColouring> {
        let mut it = g.neighbours(v).iter().copied();
        let (a, b) = (it.next().unwrap(), it.next().unwrap());
        let step = ReductionStep::ContractDeg2 {
            v,
            neighbours: (a, b),
            edge_added: !g.has_edge(a, b),
        };
        let mut h = g.clone();
        step.apply(&mut h)?;
        self.still_planar(&h, &step)?;
        self.trace.steps.push(step);
        let mut c = self.colour(h)?;
        c.clear(v);
        let forbidden = forbidden_set(&g, &c, v)?;
        let colour = (0..PALETTE).find(|x| !forbidden.contains(x)).ok_or_else(|| {
            Error::Contradiction(format!(
                "all {PALETTE} colours are forbidden at degree-2 vertex {v}"
            ))
        })?;
        c.set(v, colour)?;
        if !locally_odd(&g, &c, &[v]) {
            return Err(Error::Contradiction(format!(
                "colour {colour} chosen for degree-2 vertex {v} is not locally odd"
            )));
        }
        Ok(c)
    }

    fn claim1_step(&mut self, g: Graph, m: ConfigMatch) -> Result<PartialColouring> {
        let ConfigMatch::Claim1 { u, v, w } = m else { unreachable!() };
        let step = ReductionStep::RemoveClaim1 {
            u,
            v,
            w,
            u_neighbours: g.neighbours(u).iter().copied().collect(),
            v_neighbours: g.neighbours(v).iter().copied().collect(),
        };
        let mut h = g.clone();
        step.apply(&mut h)?;
        self.trace.steps.push(step);
        let c = self.colour(h)?;
        extend_after_claim1(&g, &c, &m)
    }

    fn claim2_step(&mut self, g: Graph, m: ConfigMatch) -> Result<PartialColouring> {
        let ConfigMatch::Claim2 { v, x, w, .. } = m else { unreachable!() };
        let step = ReductionStep::RemoveClaim2 {
            v,
            x,
            v_neighbours: g.neighbours(v).iter().copied().collect(),
            added_edge: (!g.has_edge(w, x)).then_some((w, x)),
        };
        let mut h = g.clone();
        step.apply(&mut h)?;
        self.still_planar(&h, &step)?;
        self.trace.steps.push(step);
        let c = self.colour(h)?;
        extend_after_claim2(&g, &c, &m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn c5_uses_five_colours() {
        let out = odd_colour_planar_8(&cycle(5)).unwrap();
        assert!(out.verified);
        assert_eq!(out.colouring.colours_used().len(), 5);
    }

    #[test]
    fn c7_via_contraction() {
        let g = cycle(7);
        let c = reduce_and_extend_deg2(&g, 0).unwrap();
        assert!(is_odd_colouring(&g, &c).unwrap());
        assert!(c.colours_used().len() <= PALETTE);
        let out = odd_colour_planar_8(&g).unwrap();
        assert!(out.verified);
    }

    #[test]
    fn c5_with_pendant_path() {
        // C5 plus path 0-5-6: vertex 0 has degree 3, order 7
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6)])
            .unwrap();
        let c = reduce_and_extend_odd_degree(&g, 0).unwrap();
        assert!(is_odd_colouring(&g, &c).unwrap());
        assert!(reduce_and_extend_odd_degree(&g, 1).is_err());
    }

    #[test]
    fn disconnected_components_share_palette() {
        let g = Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6)]).unwrap();
        let out = odd_colour_planar_8(&g).unwrap();
        assert!(out.verified);
    }
}
