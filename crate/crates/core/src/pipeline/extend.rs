//! Extending a colouring of a reduced graph back over a removed
//! configuration, by trying every colour pair and checking locally.

use crate::colouring::{locally_odd, Colour, PartialColouring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

use super::config::ConfigMatch;

pub const PALETTE: usize = 8;

/// All `(first, second)` colour pairs for which giving `first` to `a` and
/// `second` to `b` leaves `g` locally odd around `a` and `b`. Pairs are listed
/// with `first` ranging over `first_order` and `second` ascending.
pub(crate) fn working_pairs(
    g: &Graph,
    base: &PartialColouring,
    a: Vertex,
    b: Vertex,
    first_order: &[Colour],
) -> Vec<(Colour, Colour)> {
    let mut c = base.clone();
    c.widen(PALETTE);
    let mut out = Vec::new();
    for &ca in first_order {
        for cb in 0..PALETTE {
            c.set(a, ca).expect("palette colour");
            c.set(b, cb).expect("palette colour");
            if locally_odd(g, &c, &[a, b]) {
                out.push((ca, cb));
            }
        }
    }
    out
}

fn check_rest_coloured(g: &Graph, c: &PartialColouring, skip: &[Vertex]) -> Result<()> {
    match g
        .vertices()
        .find(|v| !skip.contains(v) && c.get(*v).is_none())
    {
        None => Ok(()),
        Some(v) => Err(Error::Precondition(format!("vertex {v} is uncoloured"))),
    }
}

/// Pairs `(colour of v, colour of u)` that extend a colouring of `g - {u, v}`
/// over a Claim-1 configuration.
pub fn claim1_pairs(g: &Graph, partial: &PartialColouring, m: &ConfigMatch) -> Result<Vec<(Colour, Colour)>> {
    let ConfigMatch::Claim1 { u, v, .. } = *m else {
        return Err(Error::Precondition("expected a Claim-1 match".into()));
    };
    check_rest_coloured(g, partial, &[u, v])?;
    let order: Vec<Colour> = (0..PALETTE).collect();
    Ok(working_pairs(g, partial, v, u, &order))
}

pub fn extend_after_claim1(g: &Graph, partial: &PartialColouring, m: &ConfigMatch) -> Result<PartialColouring> {
    let ConfigMatch::Claim1 { u, v, w } = *m else {
        return Err(Error::Precondition("expected a Claim-1 match".into()));
    };
    let pairs = claim1_pairs(g, partial, m)?;
    let &(cv, cu) = pairs.first().ok_or_else(|| {
        Error::Contradiction(format!(
            "no colour pair extends the colouring over adjacent 4-vertices {u}, {v} with common neighbour {w}"
        ))
    })?;
    let mut c = partial.clone();
    c.widen(PALETTE);
    c.set(v, cv)?;
    c.set(u, cu)?;
    Ok(c)
}

/// Pairs `(colour of x, colour of v)` that extend a colouring of the reduced
/// graph `g - v + wx` over a Claim-2 configuration. `x` may change colour;
/// its current colour is tried first.
pub fn claim2_pairs(g: &Graph, partial: &PartialColouring, m: &ConfigMatch) -> Result<Vec<(Colour, Colour)>> {
    let ConfigMatch::Claim2 { v, x, .. } = *m else {
        return Err(Error::Precondition("expected a Claim-2 match".into()));
    };
    check_rest_coloured(g, partial, &[v])?;
    let cx = partial
        .get(x)
        .ok_or_else(|| Error::Precondition(format!("vertex {x} is uncoloured")))?;
    let mut order = vec![cx];
    order.extend((0..PALETTE).filter(|&c| c != cx));
    Ok(working_pairs(g, partial, x, v, &order))
}

pub fn extend_after_claim2(g: &Graph, partial: &PartialColouring, m: &ConfigMatch) -> Result<PartialColouring> {
    let ConfigMatch::Claim2 { v, x, .. } = *m else {
        return Err(Error::Precondition("expected a Claim-2 match".into()));
    };
    let pairs = claim2_pairs(g, partial, m)?;
    let &(cx, cv) = pairs.first().ok_or_else(|| {
        Error::Contradiction(format!(
            "no colour pair extends the colouring over 4-vertex {v} and 6-vertex {x}"
        ))
    })?;
    let mut c = partial.clone();
    c.widen(PALETTE);
    c.set(x, cx)?;
    c.set(v, cv)?;
    Ok(c)
}
