//! graph6 encoding of undirected graphs.
//!
//! The header `N(n)` is one byte `n + 63` for `n <= 62`, `~` plus three
//! 6-bit bytes for `n <= 258047`, and `~~` plus six bytes beyond that. The
//! upper triangle follows column by column (`(0,1), (0,2), (1,2), (0,3), ...`),
//! packed big-endian into 6-bit groups, each offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn perr(offset: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        reason: reason.into(),
    }
}

fn sixbit(bytes: &[u8], at: usize) -> Result<u64> {
    match bytes.get(at) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
        Some(&b) => Err(perr(at, format!("byte {b:#04x} outside the graph6 range 63..=126"))),
        None => Err(perr(at, "unexpected end of input")),
    }
}

/// Parses one graph6 line. A leading `>>graph6<<` header and one trailing
/// newline are accepted; anything else after the bit vector is rejected.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut start = 0;
    if text.starts_with(HEADER) {
        start = HEADER.len();
    }
    let mut body = &text.as_bytes()[start..];
    if let Some(stripped) = body.strip_suffix(b"\n") {
        body = stripped.strip_suffix(b"\r").unwrap_or(stripped);
    }
    let at = |i: usize| start + i;

    let (n, mut i) = if body.first() == Some(&126) {
        if body.get(1) == Some(&126) {
            let mut n = 0u64;
            for k in 2..8 {
                n = (n << 6) | sixbit(body, k).map_err(|e| shift(e, start))?;
            }
            (n as usize, 8)
        } else {
            let mut n = 0u64;
            for k in 1..4 {
                n = (n << 6) | sixbit(body, k).map_err(|e| shift(e, start))?;
            }
            (n as usize, 4)
        }
    } else {
        (sixbit(body, 0).map_err(|e| shift(e, start))? as usize, 1)
    };

    for k in i..body.len() {
        sixbit(body, k).map_err(|e| shift(e, start))?;
    }
    let bits = n * n.saturating_sub(1) / 2;
    let nbytes = bits.div_ceil(6);
    if body.len() < i + nbytes {
        return Err(perr(at(body.len()), format!(
            "bit vector too short: {n} vertices need {nbytes} bytes, found {}",
            body.len() - i
        )));
    }
    if body.len() > i + nbytes {
        return Err(perr(at(i + nbytes), "trailing bytes after the bit vector"));
    }

    let mut g = Graph::new(n);
    let mut k = 0usize;
    let mut word = 0u64;
    for j in 1..n {
        for u in 0..j {
            if k.is_multiple_of(6) {
                word = sixbit(body, i).map_err(|e| shift(e, start))?;
                i += 1;
            }
            let bit = (word >> (5 - k % 6)) & 1;
            if bit == 1 {
                g.add_edge(u, j).expect("in range");
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let pad = word & ((1 << (6 - k % 6)) - 1);
        if pad != 0 {
            return Err(perr(at(i - 1), "non-zero padding bits"));
        }
    }
    Ok(g)
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { offset, reason } => Error::Parse {
            offset: offset + by,
            reason,
        },
        other => other,
    }
}

/// Canonical graph6 encoding (no header, no newline). Vertices are taken in
/// increasing id order; tombstoned ids are skipped.
pub fn to_graph6(g: &Graph) -> String {
    let (h, _) = g.compacted();
    let n = h.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for k in (0..3).rev() {
            out.push(((n >> (6 * k)) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for k in (0..6).rev() {
            out.push(((n >> (6 * k)) & 63) as u8 + 63);
        }
    }
    let mut word = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for u in 0..j {
            word = (word << 1) | h.has_edge(u, j) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push(word + 63);
                word = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        word <<= 6 - k % 6;
        out.push(word + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
