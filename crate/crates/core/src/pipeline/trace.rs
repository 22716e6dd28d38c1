use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// One reduction applied by the planar colouring recursion. Each step keeps
/// the neighbourhoods it destroyed so it can be undone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "step")]
pub enum ReductionStep {
    AttachLeaf {
        v: Vertex,
        leaf: Vertex,
    },
    ContractDeg2 {
        v: Vertex,
        neighbours: (Vertex, Vertex),
        edge_added: bool,
    },
    RemoveClaim1 {
        u: Vertex,
        v: Vertex,
        w: Vertex,
        u_neighbours: Vec<Vertex>,
        v_neighbours: Vec<Vertex>,
    },
    RemoveClaim2 {
        v: Vertex,
        x: Vertex,
        v_neighbours: Vec<Vertex>,
        added_edge: Option<(Vertex, Vertex)>,
    },
}

impl ReductionStep {
    pub fn apply(&self, g: &mut Graph) -> Result<()> {
        match self {
            ReductionStep::AttachLeaf { v, leaf } => {
                g.restore_vertex(*leaf, &BTreeSet::from([*v]))
            }
            ReductionStep::ContractDeg2 {
                v,
                neighbours: (a, b),
                edge_added,
            } => {
                g.remove_vertex(*v)?;
                if g.add_edge(*a, *b)? != *edge_added {
                    return Err(Error::Precondition(format!(
                        "edge {a}-{b} presence does not match the recorded step"
                    )));
                }
                Ok(())
            }
            ReductionStep::RemoveClaim1 { u, v, .. } => {
                g.remove_vertex(*u)?;
                g.remove_vertex(*v)?;
                Ok(())
            }
            ReductionStep::RemoveClaim2 { v, added_edge, .. } => {
                g.remove_vertex(*v)?;
                if let Some((a, b)) = added_edge {
                    g.add_edge(*a, *b)?;
                }
                Ok(())
            }
        }
    }

    pub fn undo(&self, g: &mut Graph) -> Result<()> {
        match self {
            ReductionStep::AttachLeaf { leaf, .. } => {
                g.remove_vertex(*leaf)?;
                Ok(())
            }
            ReductionStep::ContractDeg2 {
                v,
                neighbours: (a, b),
                edge_added,
            } => {
                if *edge_added {
                    g.remove_edge(*a, *b)?;
                }
                g.restore_vertex(*v, &BTreeSet::from([*a, *b]))
            }
            ReductionStep::RemoveClaim1 {
                u,
                v,
                u_neighbours,
                v_neighbours,
                ..
            } => {
                let vn: BTreeSet<Vertex> = v_neighbours.iter().copied().filter(|x| x != u).collect();
                g.restore_vertex(*v, &vn)?;
                g.restore_vertex(*u, &u_neighbours.iter().copied().collect())
            }
            ReductionStep::RemoveClaim2 {
                v,
                v_neighbours,
                added_edge,
                ..
            } => {
                if let Some((a, b)) = added_edge {
                    g.remove_edge(*a, *b)?;
                }
                g.restore_vertex(*v, &v_neighbours.iter().copied().collect())
            }
        }
    }
}

/// Reductions in the order they were applied.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    /// The graph left after applying every step to `g`.
    pub fn reduce(&self, g: &Graph) -> Result<Graph> {
        let mut h = g.clone();
        for s in &self.steps {
            s.apply(&mut h)?;
        }
        Ok(h)
    }

    /// Undoes every step, last first.
    pub fn replay_backward(&self, reduced: &Graph) -> Result<Graph> {
        let mut h = reduced.clone();
        for s in self.steps.iter().rev() {
            s.undo(&mut h)?;
        }
        Ok(h)
    }
}
