//! The `oddcol` command line.
//!
//! Graph arguments are `catalog:NAME`, `g6:STRING`, `-` for standard input,
//! or a path to a graph6, edge-list or embedding document.
//!
//! Exit codes: 0 success, 1 negative answer, 2 input or usage error,
//! 3 internal contradiction, 4 search budget exhausted.

use std::fmt::Write as _;
use std::io::Read;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::colouring::{is_proper, odd_defects, OddDefect, PartialColouring};
use crate::discharging::{
    apply_rules_with, check_total, counterexample_audit, degenerate_four_faces, fmt_quarters, initial_charges,
    verify_claim3, verify_claim4, AuditReport, ChargeLedger, FaceViolation, NeighbourReading, TransferRecord,
    VertexViolation,
};
use crate::embedding::{embed_planar, RotationSystem};
use crate::error::Error;
use crate::graph::Graph;
use crate::io::catalog::{catalog, catalog_names};
use crate::io::document::GraphDocument;
use crate::io::generate::{gen_near_triangulation, gen_random_medial, gen_random_planar};
use crate::io::report::{Report, VerifiedColouring};
use crate::pipeline::{find_claim1_config, find_claim2_config, odd_colour_planar_8_with, ConfigMatch, PipelineOptions, ReductionTrace};
use crate::solver::{chi_odd_exact, solve_with_stats, SolveOutcome, SolveStats, DEFAULT_BUDGET};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CONTRADICTION: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "oddcol", version, about = "Odd colourings of graphs")]
struct Cli {
    /// Print the full JSON report instead of a summary.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check whether a colouring is an odd colouring.
    Verify {
        graph: String,
        /// Comma-separated colour per vertex, in vertex order.
        #[arg(long)]
        colouring: String,
    },
    /// Decide whether an odd colouring with at most k colours exists.
    Solve {
        graph: String,
        #[arg(long = "colours", short = 'k')]
        colours: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Compute the odd chromatic number exactly.
    ChiOdd {
        graph: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Odd-colour a planar graph with at most 8 colours.
    Colour8 {
        graph: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Run the discharging rules on a plane embedding.
    Discharge {
        graph: String,
        /// Embedding document to use instead of the one carried by GRAPH.
        #[arg(long)]
        embedding: Option<String>,
        #[arg(long, value_enum, default_value_t = Reading::Next)]
        r1_reading: Reading,
    },
    /// Discharging audit of a would-be minimal counterexample.
    Audit {
        graph: String,
        #[arg(long)]
        embedding: Option<String>,
    },
    /// Look for the two reducible configurations.
    Scan { graph: String },
    /// Generate a seeded random plane graph.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = GenKind::Triangulation)]
        kind: GenKind,
        /// Edges to try removing, for near-triangulations.
        #[arg(long, default_value_t = 0)]
        removals: usize,
        #[arg(long, value_enum, default_value_t = Format::EmbeddingDoc)]
        format: Format,
    },
    /// List catalog graphs, or print one.
    Catalog {
        name: Option<String>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Reading {
    Next,
    Previous,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GenKind {
    Triangulation,
    Near,
    Medial,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    EdgeList,
    EmbeddingDoc,
}

/// What one invocation printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutcome {
    fn ok(code: i32, stdout: String) -> Self {
        CliOutcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        CliOutcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Contradiction(_) => EXIT_CONTRADICTION,
        Error::BudgetExhausted(_) => EXIT_BUDGET,
        _ => EXIT_INPUT,
    }
}

impl From<Error> for CliOutcome {
    fn from(e: Error) -> Self {
        CliOutcome::fail(error_code(&e), format!("error: {e}\n"))
    }
}

/// Runs one command line; `args[0]` is the program name.
pub fn dispatch<I, T>(args: I) -> CliOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutcome::fail(code, text)
            } else {
                CliOutcome::ok(code, text)
            };
        }
    };
    match run(&cli) {
        Ok(o) => o,
        Err(e) => e.into(),
    }
}

struct Input {
    doc: GraphDocument,
    graph: Graph,
    rot: Option<RotationSystem>,
}

fn load(source: &str) -> Result<Input, Error> {
    let doc = if let Some(name) = source.strip_prefix("catalog:") {
        catalog(name)?
    } else if let Some(code) = source.strip_prefix("g6:") {
        GraphDocument::detect(code, None)
    } else if source == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Malformed(format!("reading standard input: {e}")))?;
        GraphDocument::detect(s, None)
    } else {
        let text = std::fs::read_to_string(source).map_err(|e| Error::Malformed(format!("reading {source}: {e}")))?;
        GraphDocument::detect(text, Some(source.to_string()))
    };
    let (graph, rot) = doc.parse()?;
    Ok(Input { doc, graph, rot })
}

/// The embedding to discharge on: an explicit document, the one carried by
/// the input, or a computed one.
fn plane_embedding(input: &Input, explicit: Option<&str>) -> Result<RotationSystem, Error> {
    if let Some(path) = explicit {
        let other = load(path)?;
        if other.graph != input.graph {
            return Err(Error::Malformed("the embedding document describes a different graph".into()));
        }
        return other
            .rot
            .ok_or_else(|| Error::Malformed(format!("{path} is not an embedding document")));
    }
    if let Some(rot) = &input.rot {
        return Ok(rot.clone());
    }
    embed_planar(&input.graph).ok_or_else(|| Error::Precondition("the graph is not planar".into()))
}

fn emit<T: Serialize>(cli: &Cli, command: &str, input: &str, result: T, started: Instant, summary: String, code: i32) -> CliOutcome {
    if cli.json {
        let mut s = Report::new(command, input, result, started).to_json();
        s.push('\n');
        CliOutcome::ok(code, s)
    } else {
        CliOutcome::ok(code, summary)
    }
}

#[derive(Serialize)]
struct VerifyResult {
    proper: bool,
    odd: bool,
    defects: Vec<OddDefect>,
}

#[derive(Serialize)]
struct SolveResult {
    colours: usize,
    outcome: &'static str,
    colouring: Option<VerifiedColouring>,
    stats: SolveStats,
}

#[derive(Serialize)]
struct ChiResult {
    chi_odd: usize,
    colouring: Option<VerifiedColouring>,
}

#[derive(Serialize)]
struct Colour8Result {
    colouring: VerifiedColouring,
    trace: ReductionTrace,
}

#[derive(Serialize)]
struct DischargeResult {
    r1_reading: NeighbourReading,
    total_before: i64,
    total_after: i64,
    initial: ChargeLedger,
    after: ChargeLedger,
    transfers: Vec<TransferRecord>,
    claim3_violations: Vec<VertexViolation>,
    claim4_violations: Vec<FaceViolation>,
    degenerate_four_faces: Vec<usize>,
    negative_four_vertices: Vec<usize>,
}

#[derive(Serialize)]
struct ScanResult {
    claim1: Option<ConfigMatch>,
    claim2: Option<ConfigMatch>,
}

fn colours_line(c: &[Option<usize>]) -> String {
    c.iter()
        .map(|x| x.map_or("-".to_string(), |v| v.to_string()))
        .collect::<Vec<_>>()
        .join(",")
}

fn run(cli: &Cli) -> Result<CliOutcome, Error> {
    let started = Instant::now();
    match &cli.command {
        Command::Verify { graph, colouring } => {
            let input = load(graph)?;
            let colours = colouring
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Malformed(format!("bad colour `{t}`")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let (compact, ids) = input.graph.compacted();
            if colours.len() != compact.order() {
                return Err(Error::Malformed(format!(
                    "{} colours given for {} vertices",
                    colours.len(),
                    compact.order()
                )));
            }
            let palette = colours.iter().max().map_or(1, |m| m + 1);
            let mut c = PartialColouring::new(palette, input.graph.id_bound());
            for (i, &v) in ids.iter().enumerate() {
                c.set(v, colours[i])?;
            }
            let proper = is_proper(&input.graph, &c);
            let defects = odd_defects(&input.graph, &c)?;
            let odd = proper && defects.is_empty();
            let mut summary = format!("proper: {proper}\nodd: {odd}\n");
            for d in &defects {
                writeln!(summary, "no odd colour at vertex {}: {:?}", d.vertex, d.histogram).unwrap();
            }
            let code = if odd { EXIT_OK } else { EXIT_NEGATIVE };
            Ok(emit(cli, "verify", &input.doc.payload, VerifyResult { proper, odd, defects }, started, summary, code))
        }
        Command::Solve { graph, colours, budget } => {
            let input = load(graph)?;
            let (outcome, stats) = solve_with_stats(&input.graph, *colours, *budget)?;
            let (label, colouring, code) = match &outcome {
                SolveOutcome::Solved(c) => ("solved", Some(VerifiedColouring::new(&input.graph, c)), EXIT_OK),
                SolveOutcome::NoSolution => ("no-solution", None, EXIT_NEGATIVE),
                SolveOutcome::BudgetExhausted => ("budget-exhausted", None, EXIT_BUDGET),
            };
            let mut summary = format!("{label}\n");
            if let Some(c) = &colouring {
                writeln!(summary, "colouring: {}\nverified: {}", colours_line(&c.colours), c.verified).unwrap();
            }
            let result = SolveResult {
                colours: *colours,
                outcome: label,
                colouring,
                stats,
            };
            Ok(emit(cli, "solve", &input.doc.payload, result, started, summary, code))
        }
        Command::ChiOdd { graph, budget } => {
            let input = load(graph)?;
            let chi = chi_odd_exact(&input.graph, *budget)?;
            let colouring = if chi == 0 {
                None
            } else {
                match solve_with_stats(&input.graph, chi, *budget)?.0 {
                    SolveOutcome::Solved(c) => Some(VerifiedColouring::new(&input.graph, &c)),
                    _ => None,
                }
            };
            let summary = format!("{chi}\n");
            Ok(emit(cli, "chi-odd", &input.doc.payload, ChiResult { chi_odd: chi, colouring }, started, summary, EXIT_OK))
        }
        Command::Colour8 { graph, budget } => {
            let input = load(graph)?;
            if input.rot.is_none() && embed_planar(&input.graph).is_none() {
                return Err(Error::Precondition("colour8 needs a planar graph".into()));
            }
            let opts = PipelineOptions {
                budget: *budget,
                ..PipelineOptions::default()
            };
            let pc = odd_colour_planar_8_with(&input.graph, opts)?;
            let colouring = VerifiedColouring::new(&input.graph, &pc.colouring);
            let summary = format!(
                "colouring: {}\ncolours used: {}\nverified: {}\n",
                colours_line(&colouring.colours),
                colouring.colours_used,
                colouring.verified
            );
            let code = if colouring.verified { EXIT_OK } else { EXIT_CONTRADICTION };
            let result = Colour8Result {
                colouring,
                trace: pc.trace,
            };
            Ok(emit(cli, "colour8", &input.doc.payload, result, started, summary, code))
        }
        Command::Discharge {
            graph,
            embedding,
            r1_reading,
        } => {
            let input = load(graph)?;
            let rot = plane_embedding(&input, embedding.as_deref())?;
            let reading = match r1_reading {
                Reading::Next => NeighbourReading::Next,
                Reading::Previous => NeighbourReading::Previous,
            };
            let initial = initial_charges(&input.graph, &rot)?;
            let (after, transfers) = apply_rules_with(&input.graph, &rot, &initial, reading)?;
            let claim3 = verify_claim3(&input.graph, &rot, &after);
            let claim4 = verify_claim4(&input.graph, &rot, &after);
            let negative: Vec<usize> = input
                .graph
                .vertices()
                .filter(|&v| input.graph.degree(v) == 4 && after.vertex(v) < 0)
                .collect();
            let (before_total, after_total) = (check_total(&initial), check_total(&after));
            let mut summary = format!(
                "total before: {}\ntotal after: {}\ntransfers: {}\nclaim 3 violations: {:?}\nclaim 4 violations: {:?}\nnegative 4-vertices: {:?}\n",
                fmt_quarters(before_total),
                fmt_quarters(after_total),
                transfers.len(),
                claim3.iter().map(|v| v.vertex).collect::<Vec<_>>(),
                claim4.iter().map(|f| f.face).collect::<Vec<_>>(),
                negative,
            );
            let degenerate = degenerate_four_faces(&initial);
            if !degenerate.is_empty() {
                writeln!(summary, "degenerate 4-faces: {degenerate:?}").unwrap();
            }
            let result = DischargeResult {
                r1_reading: reading,
                total_before: before_total,
                total_after: after_total,
                initial,
                after,
                transfers,
                claim3_violations: claim3,
                claim4_violations: claim4,
                degenerate_four_faces: degenerate,
                negative_four_vertices: negative,
            };
            Ok(emit(cli, "discharge", &input.doc.payload, result, started, summary, EXIT_OK))
        }
        Command::Audit { graph, embedding } => {
            let input = load(graph)?;
            let rot = plane_embedding(&input, embedding.as_deref())?;
            let report: AuditReport = counterexample_audit(&input.graph, &rot)?;
            let (summary, code) = match &report.short_circuit {
                Some(why) => (format!("degree audit failed: {why}\n"), EXIT_OK),
                None => {
                    let s = format!(
                        "negative 4-vertices: {:?}\nclaim 1: {}\nclaim 2: {}\nconfirmed: {}\n",
                        report.negative_four_vertices.iter().map(|c| c.vertex).collect::<Vec<_>>(),
                        serde_json::to_string(&report.claim1).unwrap(),
                        serde_json::to_string(&report.claim2).unwrap(),
                        report.confirmed
                    );
                    (s, if report.confirmed { EXIT_OK } else { EXIT_CONTRADICTION })
                }
            };
            Ok(emit(cli, "audit", &input.doc.payload, report, started, summary, code))
        }
        Command::Scan { graph } => {
            let input = load(graph)?;
            let result = ScanResult {
                claim1: find_claim1_config(&input.graph),
                claim2: find_claim2_config(&input.graph),
            };
            let found = result.claim1.is_some() || result.claim2.is_some();
            let summary = format!(
                "claim 1: {}\nclaim 2: {}\n",
                serde_json::to_string(&result.claim1).unwrap(),
                serde_json::to_string(&result.claim2).unwrap()
            );
            let code = if found { EXIT_OK } else { EXIT_NEGATIVE };
            Ok(emit(cli, "scan", &input.doc.payload, result, started, summary, code))
        }
        Command::Gen {
            n,
            seed,
            kind,
            removals,
            format,
        } => {
            let min = match kind {
                GenKind::Medial => 4,
                _ => 3,
            };
            if *n < min {
                return Err(Error::Precondition(format!("--n must be at least {min}")));
            }
            let (g, rot) = match kind {
                GenKind::Triangulation => gen_random_planar(*n, *seed),
                GenKind::Near => gen_near_triangulation(*n, *seed, *removals),
                GenKind::Medial => gen_random_medial(*n, *seed),
            };
            Ok(CliOutcome::ok(EXIT_OK, render(&g, Some(&rot), *format, None)))
        }
        Command::Catalog { name, format } => match name {
            None => Ok(CliOutcome::ok(EXIT_OK, catalog_names().join("\n") + "\n")),
            Some(name) => {
                let doc = catalog(name)?;
                let (g, rot) = doc.parse()?;
                let out = match format {
                    None => with_newline(doc.payload),
                    Some(f) => render(&g, rot.as_ref(), *f, Some(name.clone())),
                };
                Ok(CliOutcome::ok(EXIT_OK, out))
            }
        },
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn render(g: &Graph, rot: Option<&RotationSystem>, format: Format, name: Option<String>) -> String {
    let doc = match (format, rot) {
        (Format::EmbeddingDoc, Some(rot)) => GraphDocument::embedding(g, rot, name),
        (Format::EdgeList, _) => GraphDocument::edge_list(g, name),
        _ => GraphDocument::graph6(g, name),
    };
    with_newline(doc.payload)
}
