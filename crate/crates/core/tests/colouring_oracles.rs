mod common;

use common::*;
use oddcolour::colouring::{forbidden_set, is_odd_colouring, odd_defects, PartialColouring};
use oddcolour::io::catalog_entry;
use oddcolour::solver::{chi_odd_exact, solve_odd_k, SolveOutcome, DEFAULT_BUDGET};
use proptest::prelude::*;

#[test]
fn solver_matches_brute_force_on_corpus() {
    for (line, g) in corpus() {
        for k in 1..=6 {
            let oracle = brute_force_odd(&g, k);
            match solve_odd_k(&g, k, DEFAULT_BUDGET).unwrap() {
                SolveOutcome::Solved(c) => {
                    assert!(oracle.is_some(), "{line} k={k}: solver found one, oracle none");
                    assert!(is_odd_by_definition(&g, &colours_of(&g, &c)), "{line} k={k}");
                    assert!(c.colours_used().iter().all(|&x| x < k));
                }
                SolveOutcome::NoSolution => assert!(oracle.is_none(), "{line} k={k}"),
                SolveOutcome::BudgetExhausted => panic!("{line} k={k}: budget"),
            }
        }
        assert_eq!(chi_odd_exact(&g, DEFAULT_BUDGET).unwrap(), brute_force_chi_odd(&g), "{line}");
    }
}

#[test]
fn verifier_matches_definition_on_corpus() {
    for (line, g) in corpus().into_iter().filter(|(_, g)| g.order() <= 5) {
        for a in assignments(g.order(), 4) {
            let c = colouring_of(&a, 4);
            assert_eq!(
                is_odd_colouring(&g, &c).unwrap(),
                is_odd_by_definition(&g, &a),
                "{line} {a:?}"
            );
        }
    }
}

#[test]
fn named_values() {
    let chi = |name: &str| chi_odd_exact(&catalog_entry(name).unwrap().graph, DEFAULT_BUDGET).unwrap();
    assert_eq!(chi("C5"), 5);
    assert_eq!(chi("C4"), 4);
    assert_eq!(chi("K4"), 4);
    assert_eq!(chi("Q3"), 2);
    assert_eq!(chi("K1"), 1);
    assert_eq!(chi("K2"), 2);
    let oct = catalog_entry("octahedron").unwrap().graph;
    assert_eq!(chi("octahedron"), brute_force_chi_odd(&oct));

    let c5 = catalog_entry("C5").unwrap().graph;
    assert_eq!(solve_odd_k(&c5, 4, DEFAULT_BUDGET).unwrap(), SolveOutcome::NoSolution);
    let c4 = catalog_entry("C4").unwrap().graph;
    assert_eq!(solve_odd_k(&c4, 3, DEFAULT_BUDGET).unwrap(), SolveOutcome::NoSolution);
    assert!(matches!(solve_odd_k(&c4, 4, DEFAULT_BUDGET).unwrap(), SolveOutcome::Solved(_)));
}

#[test]
fn solvability_is_monotone_in_k() {
    for (line, g) in corpus() {
        let chi = chi_odd_exact(&g, DEFAULT_BUDGET).unwrap();
        for k in 1..=7 {
            let solved = matches!(solve_odd_k(&g, k, DEFAULT_BUDGET).unwrap(), SolveOutcome::Solved(_));
            assert_eq!(solved, k >= chi, "{line} k={k}");
        }
    }
}

#[test]
fn defects_name_exactly_the_even_vertices() {
    let c4 = catalog_entry("C4").unwrap().graph;
    let c = PartialColouring::from_colours(2, &[0, 1, 0, 1]).unwrap();
    let d: Vec<_> = odd_defects(&c4, &c).unwrap().into_iter().map(|d| d.vertex).collect();
    assert_eq!(d, vec![0, 1, 2, 3]);
}

#[test]
fn forbidden_set_matches_trial_on_corpus() {
    for (line, g) in corpus().into_iter().filter(|(_, g)| g.order() >= 2 && g.order() <= 5) {
        for v in g.vertices() {
            let rest: Vec<usize> = g.vertices().filter(|&w| w != v).collect();
            for a in assignments(rest.len(), 4) {
                let mut col = vec![None; g.id_bound()];
                for (i, &w) in rest.iter().enumerate() {
                    col[w] = Some(a[i]);
                }
                let c = PartialColouring::from_assignment(4, col.clone()).unwrap();
                let forbidden = forbidden_set(&g, &c, v).unwrap();
                let allowed = allowed_by_trial(&g, &col, v, 4);
                for x in 0..4 {
                    assert_eq!(forbidden.contains(&x), !allowed.contains(&x), "{line} v={v} {col:?} x={x}");
                }
                assert!(forbidden.len() <= 2 * g.degree(v));
            }
        }
    }
}

fn random_graph() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1usize..8).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let m = pairs.len();
        (Just(n), proptest::collection::vec(any::<bool>(), m)).prop_map(move |(n, keep)| {
            (n, pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(p, _)| *p).collect())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solver_output_always_verifies((n, edges) in random_graph(), k in 1usize..7) {
        let g = graph(n, &edges);
        match solve_odd_k(&g, k, DEFAULT_BUDGET).unwrap() {
            SolveOutcome::Solved(c) => {
                prop_assert!(is_odd_colouring(&g, &c).unwrap());
                prop_assert!(c.colours_used().len() <= k);
            }
            SolveOutcome::NoSolution => prop_assert!(n > 6 || brute_force_odd(&g, k).is_none()),
            SolveOutcome::BudgetExhausted => prop_assert!(false),
        }
    }

    #[test]
    fn forbidden_set_bounded_by_twice_degree((n, edges) in random_graph(), seed in any::<u64>()) {
        let g = graph(n, &edges);
        let v = (seed as usize) % n;
        let col: Vec<Option<usize>> = (0..n).map(|w| (w != v).then(|| (seed >> (3 * w)) as usize % 8)).collect();
        let c = PartialColouring::from_assignment(8, col.clone()).unwrap();
        let f = forbidden_set(&g, &c, v).unwrap();
        prop_assert!(f.len() <= 2 * g.degree(v));
        let allowed = allowed_by_trial(&g, &col, v, 8);
        for x in 0..8 {
            prop_assert_eq!(f.contains(&x), !allowed.contains(&x));
        }
    }
}
