//! Helpers shared by the integration tests. Everything here is written
//! independently of the library so it can serve as an oracle.

#![allow(dead_code)]

pub mod claims;

use std::collections::BTreeSet;

use oddcolour::colouring::PartialColouring;
use oddcolour::graph::Graph;

pub const CORPUS: &str = include_str!("../data/connected_le6.g6");

/// Adjacency matrix as a list of edges `(i, j)` with `i < j`.
pub type Edges = Vec<(usize, usize)>;

/// graph6 decoder written from the format description: the order in one byte
/// (or `~` plus three bytes), then the upper triangle column by column, six
/// bits per byte, offset by 63.
pub fn decode_g6(s: &str) -> Option<(usize, Edges)> {
    let b = s.as_bytes();
    if b.is_empty() || b.iter().any(|&x| !(63..=126).contains(&x)) {
        return None;
    }
    let (n, body) = if b[0] != 126 {
        ((b[0] - 63) as usize, &b[1..])
    } else {
        if b.len() < 4 || b[1] == 126 {
            return None;
        }
        let n = b[1..4].iter().fold(0usize, |acc, &x| (acc << 6) | (x - 63) as usize);
        (n, &b[4..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return None;
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    // padding bits must be zero
    if (k..body.len() * 6).any(bit) {
        return None;
    }
    Some((n, edges))
}

pub fn encode_g6(n: usize, edges: &[(usize, usize)]) -> String {
    assert!(n < 63);
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(edges.contains(&(i, j)) || edges.contains(&(j, i)));
        }
    }
    let mut out = vec![(n + 63) as u8];
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for (p, &on) in chunk.iter().enumerate() {
            if on {
                x |= 1 << (5 - p);
            }
        }
        out.push(x + 63);
    }
    String::from_utf8(out).unwrap()
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).unwrap()
}

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    let mut p = Vec::new();
    for j in 1..n {
        for i in 0..j {
            p.push((i, j));
        }
    }
    p
}

fn mask_connected(n: usize, pairs: &[(usize, usize)], mask: u32) -> bool {
    if n == 0 {
        return false;
    }
    let mut reach = 1u32;
    loop {
        let mut next = reach;
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 && (reach >> i & 1 == 1 || reach >> j & 1 == 1) {
                next |= 1 << i | 1 << j;
            }
        }
        if next == reach {
            return reach.count_ones() as usize == n;
        }
        reach = next;
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative (smallest edge mask over all relabellings) of every
/// connected graph on exactly `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<(usize, Edges)> {
    let pairs = pair_index(n);
    let slot = |i: usize, j: usize| {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        b * (b - 1) / 2 + a
    };
    let perm_maps: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .map(|p| pairs.iter().map(|&(i, j)| slot(p[i], p[j])).collect())
        .collect();
    let mut reps = BTreeSet::new();
    for mask in 0u32..1 << pairs.len() {
        if !mask_connected(n, &pairs, mask) {
            continue;
        }
        let canon = perm_maps
            .iter()
            .map(|m| {
                (0..pairs.len())
                    .filter(|&k| mask >> k & 1 == 1)
                    .fold(0u32, |acc, k| acc | 1 << m[k])
            })
            .min()
            .unwrap();
        reps.insert(canon);
    }
    reps.into_iter()
        .map(|m| {
            let e = (0..pairs.len()).filter(|&k| m >> k & 1 == 1).map(|k| pairs[k]).collect();
            (n, e)
        })
        .collect()
}

pub fn corpus() -> Vec<(String, Graph)> {
    CORPUS
        .lines()
        .filter(|l| !l.is_empty())
        .map(|l| {
            let (n, e) = decode_g6(l).expect("corpus line decodes");
            (l.to_string(), graph(n, &e))
        })
        .collect()
}

/// Direct reading of the definition: proper, and every vertex with a
/// neighbour sees some colour an odd number of times.
pub fn is_odd_by_definition(g: &Graph, col: &[usize]) -> bool {
    for v in g.vertices() {
        let nb = g.neighbours(v);
        if nb.iter().any(|&w| col[w] == col[v]) {
            return false;
        }
        if !nb.is_empty() && !nb.iter().any(|&w| nb.iter().filter(|&&x| col[x] == col[w]).count() % 2 == 1) {
            return false;
        }
    }
    true
}

/// Every assignment of `k` colours to the vertices `0..n`, in odometer order.
pub fn assignments(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (k as u64).pow(n as u32);
    (0..total).map(move |mut x| {
        (0..n)
            .map(|_| {
                let d = (x % k as u64) as usize;
                x /= k as u64;
                d
            })
            .collect()
    })
}

/// Exhaustive k^n search for an odd k-colouring of a graph on `0..n`.
pub fn brute_force_odd(g: &Graph, k: usize) -> Option<Vec<usize>> {
    assignments(g.id_bound(), k).find(|a| is_odd_by_definition(g, a))
}

pub fn brute_force_chi_odd(g: &Graph) -> usize {
    (1..=g.order()).find(|&k| brute_force_odd(g, k).is_some()).unwrap_or(0)
}

/// Colours `v` may take so that the colouring stays odd everywhere except
/// possibly at `v` itself, found by trying each colour.
pub fn allowed_by_trial(g: &Graph, col: &[Option<usize>], v: usize, palette: usize) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for x in 0..palette {
        let mut c = col.to_vec();
        c[v] = Some(x);
        let ok = g.neighbours(v).iter().all(|&w| {
            if c[w] == Some(x) {
                return false;
            }
            let nb = g.neighbours(w);
            nb.iter().any(|&y| {
                let cy = c[y];
                cy.is_some() && nb.iter().filter(|&&z| c[z] == cy).count() % 2 == 1
            })
        });
        if ok {
            out.insert(x);
        }
    }
    out
}

pub fn colouring_of(col: &[usize], palette: usize) -> PartialColouring {
    PartialColouring::from_colours(palette, col).unwrap()
}

pub fn colours_of(g: &Graph, c: &PartialColouring) -> Vec<usize> {
    (0..g.id_bound()).map(|v| c.get(v).unwrap_or(usize::MAX)).collect()
}
