//! Exhaustive extension checks for the two reducible configurations.

use std::collections::BTreeSet;

use oddcolour::colouring::{forbidden_set, is_odd_colouring, odd_forbidden_colour, PartialColouring};
use oddcolour::graph::Graph;
use oddcolour::io::catalog_entry;
use oddcolour::pipeline::{claim1_pairs, claim2_pairs, extend_after_claim1, extend_after_claim2, ConfigMatch, PALETTE};

use super::is_odd_by_definition;

/// Every odd colouring of `g` with at most `k` colours in which colours
/// first appear in increasing order along the vertex ids.
fn odd_colourings_up_to_renaming(g: &Graph, k: usize) -> Vec<Vec<Option<usize>>> {
    let vs: Vec<usize> = g.vertices().collect();
    let mut out = Vec::new();
    let mut col = vec![None; g.id_bound()];
    fn go(g: &Graph, vs: &[usize], i: usize, used: usize, k: usize, col: &mut Vec<Option<usize>>, out: &mut Vec<Vec<Option<usize>>>) {
        if i == vs.len() {
            let dense: Vec<usize> = col.iter().map(|c| c.unwrap_or(usize::MAX)).collect();
            if is_odd_by_definition(g, &dense) {
                out.push(col.clone());
            }
            return;
        }
        let v = vs[i];
        for x in 0..(used + 1).min(k) {
            if g.neighbours(v).iter().any(|&w| col[w] == Some(x)) {
                continue;
            }
            col[v] = Some(x);
            go(g, vs, i + 1, used.max(x + 1), k, col, out);
            col[v] = None;
        }
    }
    go(g, &vs, 0, 0, k, &mut col, &mut out);
    out
}

fn with(col: &[Option<usize>], set: &[(usize, usize)]) -> PartialColouring {
    let mut c = PartialColouring::from_assignment(PALETTE, col.to_vec()).unwrap();
    c.widen(PALETTE);
    for &(v, x) in set {
        c.set(v, x).unwrap();
    }
    c
}

/// Extends every odd colouring of fig1-host minus its adjacent 4-vertices,
/// checking the local pair search against full re-verification. Returns the
/// number of reduced colourings checked.
pub fn claim1_oracle() -> usize {
    let g = catalog_entry("fig1-host").unwrap().graph;
    let (u, v, w) = (1, 2, 0);
    let m = ConfigMatch::Claim1 { u, v, w };
    let mut reduced = g.clone();
    reduced.remove_vertex(u).unwrap();
    reduced.remove_vertex(v).unwrap();
    let all = odd_colourings_up_to_renaming(&reduced, PALETTE);
    assert!(!all.is_empty());
    for col in &all {
        let c = with(col, &[]);
        let pairs: BTreeSet<_> = claim1_pairs(&g, &c, &m).unwrap().into_iter().collect();
        assert!(!pairs.is_empty(), "{col:?}");
        for cv in 0..PALETTE {
            for cu in 0..PALETTE {
                let full = with(col, &[(v, cv), (u, cu)]);
                assert_eq!(pairs.contains(&(cv, cu)), is_odd_colouring(&g, &full).unwrap(), "{col:?} {cv} {cu}");
            }
        }
        let ext = extend_after_claim1(&g, &c, &m).unwrap();
        assert!(is_odd_colouring(&g, &ext).unwrap());
        assert!(reduced.vertices().all(|x| ext.get(x) == c.get(x)));
    }
    all.len()
}

#[derive(Default, Debug)]
pub struct CaseCounts {
    pub colourings: usize,
    pub tight: usize,
    pub case_a: usize,
    pub case_b: usize,
}

fn reduced_for_claim2(g: &Graph, v: usize, w: usize, x: usize) -> Graph {
    let mut reduced = g.clone();
    reduced.remove_vertex(v).unwrap();
    reduced.add_edge(w, x).unwrap();
    reduced
}

fn claim2_oracle(
    g: &Graph,
    colourings: impl IntoIterator<Item = Vec<Option<usize>>>,
    v: usize,
    x: usize,
    y: [usize; 2],
    w: usize,
    z: [usize; 3],
) -> CaseCounts {
    assert!(!g.has_edge(w, x));
    let g = g.clone();
    let m = ConfigMatch::Claim2 { v, x, y1: y[0], y2: y[1], w, z };
    let mut counts = CaseCounts::default();
    for col in colourings {
        counts.colourings += 1;
        let c = with(&col, &[]);
        let pairs: BTreeSet<_> = claim2_pairs(&g, &c, &m).unwrap().into_iter().collect();
        assert!(!pairs.is_empty(), "{col:?}");
        for cx in 0..PALETTE {
            for cv in 0..PALETTE {
                let full = with(&col, &[(x, cx), (v, cv)]);
                assert_eq!(pairs.contains(&(cx, cv)), is_odd_colouring(&g, &full).unwrap());
            }
        }
        let ext = extend_after_claim2(&g, &c, &m).unwrap();
        assert!(is_odd_colouring(&g, &ext).unwrap());
        assert!(g.vertices().filter(|&a| a != v && a != x).all(|a| ext.get(a) == c.get(a)));

        // the case analysis only applies when every colour is forbidden at v
        let mut at_v = c.clone();
        at_v.clear(v);
        if forbidden_set(&g, &at_v, v).unwrap().len() < PALETTE {
            let old = c.get(x).unwrap();
            assert!(pairs.iter().any(|&(cx, _)| cx == old), "{col:?}");
            continue;
        }
        counts.tight += 1;
        let b_y: Vec<usize> = y
            .iter()
            .map(|&yi| odd_forbidden_colour(&g, &at_v, yi, v).unwrap().expect("tight case"))
            .collect();
        let b_z: BTreeSet<usize> = z
            .iter()
            .filter_map(|&zi| odd_forbidden_colour(&g, &at_v, zi, x).unwrap())
            .collect();
        if b_y.iter().all(|b| b_z.contains(b)) {
            counts.case_a += 1;
            let cx_old = c.get(x).unwrap();
            assert!(pairs.iter().any(|&(_, cv)| cv == cx_old), "case A {col:?}");
        } else {
            counts.case_b += 1;
            let i = if b_z.contains(&b_y[0]) { 1 } else { 0 };
            let (b1, b2) = (b_y[i], b_y[1 - i]);
            assert!(pairs.contains(&(b1, b2)), "case B {col:?}: ({b1}, {b2}) not in {pairs:?}");
        }
    }
    counts
}


const LEAVES: [(usize, usize); 5] = [(2, 2), (3, 2), (4, 3), (5, 3), (6, 3)];

/// The bare configuration (v=0, x=1, y1=2, y2=3, w=4, z=5,6,7) with pendant
/// leaves: two at each y, three at w and at each z. Leaves are numbered in
/// the order of [`LEAVES`], z3 last.
fn decorated_fig2_host() -> Graph {
    let mut g = Graph::from_edges(
        8,
        &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (1, 6), (1, 7)],
    )
    .unwrap();
    for (a, k) in LEAVES.iter().copied().chain([(7, 3)]) {
        for _ in 0..k {
            let leaf = g.add_vertex();
            g.add_edge(a, leaf).unwrap();
        }
    }
    g
}

/// Leaf colours giving `a` (coloured `ca`) the oddness-forbidden colour
/// `target` among `fixed` plus the leaves, or none at all.
fn leaf_colours(ca: usize, fixed: &[usize], k: usize, target: Option<usize>) -> Option<Vec<usize>> {
    let free: Vec<usize> = (0..PALETTE).filter(|&c| c != ca && Some(c) != target).collect();
    match (fixed, k, target) {
        // y: x plus two leaves; (c(x), b) leaves b as the only odd colour
        ([cx], 2, Some(b)) => Some(vec![*cx, b]),
        // w and z: three leaves; (g, g, b) or three distinct colours
        ([], 3, Some(b)) => Some(vec![free[0], free[0], b]),
        ([], 3, None) => Some(vec![free[0], free[1], free[2]]),
        _ => None,
    }
}

/// Odd colourings of the reduced decorated host in which every colour is
/// forbidden at v, with each z's forbidden colour ranging over none, b(y1),
/// b(y2) and one further colour.
fn tight_instances(reduced: &Graph) -> Vec<Vec<Option<usize>>> {
    let core_edges = [(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)];
    let mut out = Vec::new();
    // core colourings of x, y1, y2, w, z1, z2, z3 with colours in first-use order
    let mut core_cols = vec![vec![]];
    for _ in 1..8 {
        let mut next = Vec::new();
        for c in &core_cols {
            let used = c.iter().max().map_or(0, |m| m + 1);
            for x in 0..(used + 1).min(PALETTE) {
                let mut d: Vec<usize> = c.clone();
                d.push(x);
                next.push(d);
            }
        }
        core_cols = next;
    }
    for cc in core_cols {
        let col = |v: usize| cc[v - 1];
        if core_edges.iter().any(|&(a, b)| col(a) == col(b)) {
            continue;
        }
        let (cx, cy1, cy2, cw) = (col(1), col(2), col(3), col(4));
        let mut seen: Vec<usize> = vec![cy1, cy2, col(5), col(6), col(7)];
        seen.sort_unstable();
        let odd: Vec<usize> = (0..PALETTE).filter(|&c| seen.iter().filter(|&&s| s == c).count() % 2 == 1).collect();
        let [bx] = odd[..] else { continue };
        let taken = [cy1, cx, cy2, cw, bx];
        if (1..5).any(|i| taken[..i].contains(&taken[i])) {
            continue;
        }
        let rest: Vec<usize> = (0..PALETTE).filter(|c| !taken.contains(c)).collect();
        // b(y1), b(y2), b(w) take the three remaining colours, in each order
        for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let (by1, by2, bw) = (rest[perm[0]], rest[perm[1]], rest[perm[2]]);
            let z_options = [None, Some(by1), Some(by2), Some(bw)];
            for zi in 0..64usize {
                let bz = [z_options[zi % 4], z_options[zi / 4 % 4], z_options[zi / 16]];
                let mut full: Vec<Option<usize>> = vec![None; reduced.id_bound()];
                for (v, slot) in full.iter_mut().enumerate().take(8).skip(1) {
                    *slot = Some(col(v));
                }
                let mut next_leaf = 8;
                let mut plan = vec![(2, vec![cx], by1), (3, vec![cx], by2), (4, vec![], bw)];
                let plan_z = (0..3).map(|i| (5 + i, vec![], bz[i].unwrap_or(usize::MAX)));
                plan.extend(plan_z);
                let mut ok = true;
                for (a, fixed, b) in plan {
                    let k = if a <= 3 { 2 } else { 3 };
                    let target = (b != usize::MAX).then_some(b);
                    match leaf_colours(col(a), &fixed, k, target) {
                        Some(ls) if !ls.contains(&col(a)) => {
                            for l in ls {
                                full[next_leaf] = Some(l);
                                next_leaf += 1;
                            }
                        }
                        _ => ok = false,
                    }
                }
                let dense: Vec<usize> = full.iter().map(|c| c.unwrap_or(usize::MAX)).collect();
                if ok && is_odd_by_definition(reduced, &dense) {
                    out.push(full);
                }
            }
        }
    }
    out
}

/// Every odd colouring of fig2-host's reduced graph, up to renaming colours.
pub fn claim2_fig2_host() -> CaseCounts {
    let g = catalog_entry("fig2-host").unwrap().graph;
    let reduced = reduced_for_claim2(&g, 0, 4, 1);
    let all = odd_colourings_up_to_renaming(&reduced, PALETTE);
    claim2_oracle(&g, all, 0, 1, [2, 3], 4, [5, 6, 7])
}

/// Every constructed tight colouring of the decorated configuration.
pub fn claim2_decorated() -> CaseCounts {
    let g = decorated_fig2_host();
    assert!(oddcolour::embedding::embed_planar(&g).is_some());
    let reduced = reduced_for_claim2(&g, 0, 4, 1);
    let instances = tight_instances(&reduced);
    claim2_oracle(&g, instances, 0, 1, [2, 3], 4, [5, 6, 7])
}
