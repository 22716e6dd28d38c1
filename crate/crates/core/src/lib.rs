pub mod cli;
pub mod colouring;
pub mod discharging;
pub mod embedding;
pub mod error;
pub mod forest;
pub mod graph;
pub mod io;
pub mod solver;
pub mod pipeline;
