//! Charges and discharging rules on plane embeddings.
//!
//! All charges are integers counting quarter units, so `-8` means `-2`.
//! Vertices start at `d(v) - 6` and faces at `2 d(F) - 6`; by Euler's
//! formula a connected plane graph totals `-12`.
//!
//! * R1: an 8⁺-vertex `u` sends 1/2 to each neighbouring 4-vertex `v` whose
//!   counter-clockwise neighbour next to `v` around `u` is a 6⁺-vertex. See
//!   [`R1_READING`].
//! * R2: a face sends to its incident 4-vertices, once per incidence:
//!   (i) a 4-face of four 4-vertices sends 1/2 to each; (ii) a 4-face of three
//!   4-vertices and one 6⁺-vertex `u` sends 3/4 to the two next to `u` and 1/2
//!   to the opposite one; (iii) a 5-face of five 4-vertices sends 3/4 to each;
//!   (iv) any other face that is not a 3-face sends 1 to each.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::embedding::{trace_faces, validate_embedding, FaceWalk, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::pipeline::{find_claim1_config, find_claim2_config, ConfigMatch};

/// Which neighbour of the 4-vertex R1 inspects around the sender.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NeighbourReading {
    /// The counter-clockwise successor of the 4-vertex.
    Next,
    /// The counter-clockwise predecessor of the 4-vertex.
    Previous,
}

/// The reading used by [`apply_rules`]. The rule as stated uses the next
/// neighbour; the bound for 8⁺-vertices only needs qualifying 4-vertices to
/// be pairwise non-consecutive, which holds for either reading.
pub const R1_READING: NeighbourReading = NeighbourReading::Next;

/// The charge total of a connected plane graph, in quarters.
pub const EXPECTED_TOTAL: i64 = -48;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", content = "id", rename_all = "kebab-case")]
pub enum Site {
    Vertex(Vertex),
    Face(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Rule {
    R1,
    R2i,
    R2ii,
    R2iii,
    R2iv,
}

/// One sender-to-vertex transfer. The charge moved is
/// `quarters * multiplicity`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferRecord {
    pub source: Site,
    pub dest: Vertex,
    pub quarters: i64,
    pub rule: Rule,
    pub multiplicity: u32,
}

impl TransferRecord {
    pub fn total(&self) -> i64 {
        self.quarters * self.multiplicity as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceCharge {
    /// Boundary vertices in walk order, with multiplicity.
    pub walk: Vec<Vertex>,
    pub quarters: i64,
}

impl FaceCharge {
    pub fn size(&self) -> usize {
        self.walk.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChargeLedger {
    pub vertices: BTreeMap<Vertex, i64>,
    pub faces: Vec<FaceCharge>,
}

impl ChargeLedger {
    pub fn vertex(&self, v: Vertex) -> i64 {
        self.vertices[&v]
    }

    pub fn total(&self) -> i64 {
        self.vertices.values().sum::<i64>() + self.faces.iter().map(|f| f.quarters).sum::<i64>()
    }
}

/// Renders a quarter count as a reduced fraction, e.g. `-6` as `-3/2`.
pub fn fmt_quarters(q: i64) -> String {
    match q.rem_euclid(4) {
        0 => format!("{}", q / 4),
        2 => format!("{}/2", q / 2),
        _ => format!("{q}/4"),
    }
}

fn checked_faces(g: &Graph, rot: &RotationSystem) -> Result<Vec<FaceWalk>> {
    if !g.is_connected() {
        return Err(Error::Precondition("discharging needs a connected graph".into()));
    }
    let report = validate_embedding(g, rot)?;
    if !report.planar {
        return Err(Error::InvalidEmbedding {
            vertex: g.vertices().next().unwrap_or(0),
            reason: format!("rotation is not plane: V - E + F = {}", report.characteristic()),
        });
    }
    trace_faces(g, rot)
}

pub fn initial_charges(g: &Graph, rot: &RotationSystem) -> Result<ChargeLedger> {
    let faces = checked_faces(g, rot)?;
    Ok(ChargeLedger {
        vertices: g.vertices().map(|v| (v, 4 * (g.degree(v) as i64 - 6))).collect(),
        faces: faces
            .iter()
            .map(|f| FaceCharge {
                walk: f.vertices().collect(),
                quarters: 4 * (2 * f.size() as i64 - 6),
            })
            .collect(),
    })
}

/// Applies R1 and R2 with [`R1_READING`].
pub fn apply_rules(
    g: &Graph,
    rot: &RotationSystem,
    ledger: &ChargeLedger,
) -> Result<(ChargeLedger, Vec<TransferRecord>)> {
    apply_rules_with(g, rot, ledger, R1_READING)
}

/// Applies every rule once, all predicates read from the unchanged graph.
pub fn apply_rules_with(
    g: &Graph,
    rot: &RotationSystem,
    ledger: &ChargeLedger,
    reading: NeighbourReading,
) -> Result<(ChargeLedger, Vec<TransferRecord>)> {
    rot.check_against(g)?;
    let mut transfers = Vec::new();
    for u in g.vertices().filter(|&u| g.degree(u) >= 8) {
        for &v in rot.around(u) {
            if g.degree(v) != 4 {
                continue;
            }
            let beside = match reading {
                NeighbourReading::Next => rot.next_after(u, v),
                NeighbourReading::Previous => rot.prev_before(u, v),
            }
            .expect("v is in the rotation at u");
            if g.degree(beside) >= 6 {
                transfers.push(TransferRecord {
                    source: Site::Vertex(u),
                    dest: v,
                    quarters: 2,
                    rule: Rule::R1,
                    multiplicity: 1,
                });
            }
        }
    }
    for (i, f) in ledger.faces.iter().enumerate() {
        transfers.extend(face_transfers(g, i, &f.walk));
    }

    let mut after = ledger.clone();
    for t in &transfers {
        match t.source {
            Site::Vertex(u) => *after.vertices.get_mut(&u).expect("sender in ledger") -= t.total(),
            Site::Face(i) => after.faces[i].quarters -= t.total(),
        }
        *after.vertices.get_mut(&t.dest).expect("receiver in ledger") += t.total();
    }
    Ok((after, transfers))
}

/// The R2 case a face falls under, or `None` for 3-faces.
pub fn r2_case(g: &Graph, walk: &[Vertex]) -> Option<Rule> {
    let deg: Vec<usize> = walk.iter().map(|&v| g.degree(v)).collect();
    let fours = deg.iter().filter(|&&d| d == 4).count();
    match walk.len() {
        3 => None,
        4 if fours == 4 => Some(Rule::R2i),
        4 if fours == 3 => {
            let j = deg.iter().position(|&d| d != 4).expect("one non-4 position");
            let once = walk.iter().filter(|&&x| x == walk[j]).count() == 1;
            if deg[j] >= 6 && once {
                Some(Rule::R2ii)
            } else {
                Some(Rule::R2iv)
            }
        }
        5 if fours == 5 => Some(Rule::R2iii),
        _ => Some(Rule::R2iv),
    }
}

fn face_transfers(g: &Graph, face: usize, walk: &[Vertex]) -> Vec<TransferRecord> {
    let Some(rule) = r2_case(g, walk) else {
        return Vec::new();
    };
    let k = walk.len();
    // quarters per boundary position
    let amounts: Vec<i64> = match rule {
        Rule::R2i => vec![2; 4],
        Rule::R2ii => {
            let j = walk.iter().position(|&v| g.degree(v) != 4).unwrap();
            (0..4)
                .map(|i| match (i + 4 - j) % 4 {
                    0 => 0,
                    1 | 3 => 3,
                    _ => 2,
                })
                .collect()
        }
        Rule::R2iii => vec![3; 5],
        _ => walk.iter().map(|&v| if g.degree(v) == 4 { 4 } else { 0 }).collect(),
    };
    let mut merged: BTreeMap<(Vertex, i64), u32> = BTreeMap::new();
    for i in 0..k {
        if amounts[i] > 0 {
            *merged.entry((walk[i], amounts[i])).or_default() += 1;
        }
    }
    merged
        .into_iter()
        .map(|((dest, quarters), multiplicity)| TransferRecord {
            source: Site::Face(face),
            dest,
            quarters,
            rule,
            multiplicity,
        })
        .collect()
}

/// 4-faces whose boundary repeats a vertex. The rules do not single these
/// out; they are listed so reports can flag them.
pub fn degenerate_four_faces(ledger: &ChargeLedger) -> Vec<usize> {
    ledger
        .faces
        .iter()
        .enumerate()
        .filter(|(_, f)| f.size() == 4 && f.walk.iter().collect::<BTreeSet<_>>().len() < 4)
        .map(|(i, _)| i)
        .collect()
}

pub fn check_total(ledger: &ChargeLedger) -> i64 {
    ledger.total()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexViolation {
    pub vertex: Vertex,
    pub degree: usize,
    pub quarters: i64,
    pub rotation: Vec<Vertex>,
}

/// 6⁺-vertices left with negative charge.
pub fn verify_claim3(g: &Graph, rot: &RotationSystem, after: &ChargeLedger) -> Vec<VertexViolation> {
    g.vertices()
        .filter(|&v| g.degree(v) >= 6 && after.vertex(v) < 0)
        .map(|v| VertexViolation {
            vertex: v,
            degree: g.degree(v),
            quarters: after.vertex(v),
            rotation: rot.around(v).to_vec(),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceViolation {
    pub face: usize,
    pub walk: Vec<Vertex>,
    pub degrees: Vec<usize>,
    pub quarters: i64,
    /// Whether every vertex of the graph has even degree at least 4. Outside
    /// that setting a 4-face with three 4-vertices and a 3- or 5-vertex
    /// keeps `2 - 3 = -1`.
    pub within_hypothesis: bool,
}

/// Faces left with negative charge.
pub fn verify_claim4(g: &Graph, _rot: &RotationSystem, after: &ChargeLedger) -> Vec<FaceViolation> {
    let hypothesis = degree_audit(g).holds();
    after
        .faces
        .iter()
        .enumerate()
        .filter(|(_, f)| f.quarters < 0)
        .map(|(i, f)| FaceViolation {
            face: i,
            walk: f.walk.clone(),
            degrees: f.walk.iter().map(|&v| g.degree(v)).collect(),
            quarters: f.quarters,
            within_hypothesis: hypothesis,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeAudit {
    pub all_even: bool,
    pub all_at_least_4: bool,
    pub odd_vertices: Vec<Vertex>,
    pub low_vertices: Vec<Vertex>,
}

impl DegreeAudit {
    pub fn holds(&self) -> bool {
        self.all_even && self.all_at_least_4
    }
}

pub fn degree_audit(g: &Graph) -> DegreeAudit {
    let odd_vertices: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) % 2 == 1).collect();
    let low_vertices: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) < 4).collect();
    DegreeAudit {
        all_even: odd_vertices.is_empty(),
        all_at_least_4: low_vertices.is_empty(),
        odd_vertices,
        low_vertices,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeighbourCase {
    pub vertex: Vertex,
    pub degree: usize,
    pub six_plus: bool,
    pub eight_plus: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WedgeFace {
    /// The two consecutive neighbours bounding this face at the vertex.
    pub between: (Vertex, Vertex),
    pub face: usize,
    pub size: usize,
    pub triangle: bool,
}

/// How a negatively charged 4-vertex sits in the embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NegativeVertexCase {
    pub vertex: Vertex,
    pub quarters: i64,
    pub neighbours: Vec<NeighbourCase>,
    pub faces: Vec<WedgeFace>,
    pub received_r1: i64,
    pub received_r2: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub degree_audit: DegreeAudit,
    /// Set when the degree audit fails; the remaining fields are then empty.
    pub short_circuit: Option<String>,
    pub claim1: Option<ConfigMatch>,
    pub claim2: Option<ConfigMatch>,
    pub total_before: i64,
    pub total_after: i64,
    pub claim3_violations: Vec<VertexViolation>,
    pub claim4_violations: Vec<FaceViolation>,
    pub negative_four_vertices: Vec<NegativeVertexCase>,
    /// A negative 4-vertex and a reducible configuration were both found.
    pub confirmed: bool,
}

/// Runs the discharging argument on a graph that a minimal counterexample
/// would have to resemble, and reports where it forces a reducible
/// configuration.
pub fn counterexample_audit(g: &Graph, rot: &RotationSystem) -> Result<AuditReport> {
    let audit = degree_audit(g);
    if !audit.holds() {
        let mut why = Vec::new();
        if !audit.all_even {
            why.push(format!("odd degree at {:?}", audit.odd_vertices));
        }
        if !audit.all_at_least_4 {
            why.push(format!("degree below 4 at {:?}", audit.low_vertices));
        }
        return Ok(AuditReport {
            degree_audit: audit,
            short_circuit: Some(format!(
                "a minimal counterexample has all degrees even and at least 4, but this graph has {}; \
                 it would be reduced before discharging",
                why.join(" and ")
            )),
            claim1: None,
            claim2: None,
            total_before: 0,
            total_after: 0,
            claim3_violations: Vec::new(),
            claim4_violations: Vec::new(),
            negative_four_vertices: Vec::new(),
            confirmed: false,
        });
    }
    let before = initial_charges(g, rot)?;
    let (after, transfers) = apply_rules(g, rot, &before)?;
    let faces = trace_faces(g, rot)?;
    let mut face_of_dart = BTreeMap::new();
    for (i, f) in faces.iter().enumerate() {
        for &d in &f.darts {
            face_of_dart.insert(d, i);
        }
    }
    let negative: Vec<NegativeVertexCase> = g
        .vertices()
        .filter(|&v| g.degree(v) == 4 && after.vertex(v) < 0)
        .map(|v| {
            let r = rot.around(v);
            let neighbours = r
                .iter()
                .map(|&x| NeighbourCase {
                    vertex: x,
                    degree: g.degree(x),
                    six_plus: g.degree(x) >= 6,
                    eight_plus: g.degree(x) >= 8,
                })
                .collect();
            let wedges = (0..r.len())
                .map(|i| {
                    let (a, b) = (r[i], r[(i + 1) % r.len()]);
                    // (a, v) is followed by (v, b), so dart (v, b) bounds
                    // the face in the wedge from a to b
                    let face = face_of_dart[&(v, b)];
                    WedgeFace {
                        between: (a, b),
                        face,
                        size: faces[face].size(),
                        triangle: faces[face].size() == 3,
                    }
                })
                .collect();
            let received = |pred: fn(Rule) -> bool| {
                transfers
                    .iter()
                    .filter(|t| t.dest == v && pred(t.rule))
                    .map(TransferRecord::total)
                    .sum()
            };
            NegativeVertexCase {
                vertex: v,
                quarters: after.vertex(v),
                neighbours,
                faces: wedges,
                received_r1: received(|r| r == Rule::R1),
                received_r2: received(|r| r != Rule::R1),
            }
        })
        .collect();
    let claim1 = find_claim1_config(g);
    let claim2 = find_claim2_config(g);
    Ok(AuditReport {
        degree_audit: audit,
        short_circuit: None,
        confirmed: !negative.is_empty() && (claim1.is_some() || claim2.is_some()),
        claim1,
        claim2,
        total_before: before.total(),
        total_after: after.total(),
        claim3_violations: verify_claim3(g, rot, &after),
        claim4_violations: verify_claim4(g, rot, &after),
        negative_four_vertices: negative,
    })
}
