//! Machine-readable command reports.
//!
//! Keys are emitted in declaration order, so the JSON layout is stable and
//! can be compared against golden files once `wall_time_ms` is masked.

use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::colouring::{is_odd_colouring, Colour, PartialColouring};
use crate::graph::Graph;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Serialize)]
pub struct Report<T: Serialize> {
    pub schema: u32,
    pub tool_version: String,
    pub command: String,
    pub input_digest: String,
    pub result: T,
    pub wall_time_ms: u64,
}

impl<T: Serialize> Report<T> {
    pub fn new(command: &str, input: &str, result: T, started: Instant) -> Self {
        Report {
            schema: SCHEMA_VERSION,
            tool_version: TOOL_VERSION.to_string(),
            command: command.to_string(),
            input_digest: digest(input),
            result,
            wall_time_ms: started.elapsed().as_millis() as u64,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

/// `sha256:` followed by the hex digest of the input text.
pub fn digest(input: &str) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(input.as_bytes())))
}

/// A colouring together with an independent re-check against the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifiedColouring {
    pub palette: usize,
    pub colours_used: usize,
    pub colours: Vec<Option<Colour>>,
    pub verified: bool,
}

impl VerifiedColouring {
    pub fn new(g: &Graph, c: &PartialColouring) -> Self {
        VerifiedColouring {
            palette: c.palette(),
            colours_used: c.colours_used().len(),
            colours: c.on(g),
            verified: is_odd_colouring(g, c).unwrap_or(false),
        }
    }
}
