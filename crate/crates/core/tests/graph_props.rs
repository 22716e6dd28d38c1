use std::collections::BTreeSet;

use oddcolour::embedding::{trace_faces, validate_embedding, RotationSystem};
use oddcolour::graph::{Graph, Mutation};
use oddcolour::io::{
    gen_random_planar, parse_edge_list, parse_embedding_doc, parse_graph6, to_edge_list, to_embedding_doc,
    to_graph6, GraphDocument,
};
use proptest::prelude::*;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..10).prop_flat_map(|n| {
        proptest::collection::btree_set((0..n, 0..n), 0..20).prop_map(move |pairs| {
            let edges: BTreeSet<(usize, usize)> = pairs
                .into_iter()
                .filter(|(a, b)| a != b)
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect();
            Graph::from_edges(n, &edges.into_iter().collect::<Vec<_>>()).unwrap()
        })
    })
}

fn same(a: &Graph, b: &Graph) -> bool {
    a.vertices().eq(b.vertices()) && a.edges() == b.edges()
}

#[test]
fn octahedron_document_traces_eight_faces() {
    let doc = "embedding-doc v1\nvertices 6\n0: 1 2 3 4\n1: 0 4 5 2\n2: 0 1 5 3\n3: 0 2 5 4\n4: 0 3 5 1\n5: 1 4 3 2\n";
    let (g, rot) = parse_embedding_doc(doc).unwrap();
    assert_eq!(trace_faces(&g, &rot).unwrap().len(), 8);
    assert_eq!(to_embedding_doc(&g, &rot), doc);
}

#[test]
fn generator_is_reproducible() {
    let (a, ra) = gen_random_planar(20, 7);
    let (b, rb) = gen_random_planar(20, 7);
    assert_eq!(to_embedding_doc(&a, &ra), to_embedding_doc(&b, &rb));
    assert_eq!(a.edge_count(), 3 * 20 - 6);
    let (k3, _) = gen_random_planar(3, 99);
    assert_eq!(to_graph6(&k3), "Bw");
}

proptest! {
    #[test]
    fn remove_and_restore_vertex_is_identity(g in arb_graph(), pick in any::<usize>()) {
        let v = pick % g.id_bound();
        let mut h = g.clone();
        let nbrs = h.remove_vertex(v).unwrap();
        prop_assert!(!h.contains(v));
        prop_assert_eq!(h.order() + 1, g.order());
        prop_assert!(h.vertices().all(|w| !h.has_edge(w, v)));
        h.restore_vertex(v, &nbrs).unwrap();
        prop_assert!(same(&g, &h));
    }

    #[test]
    fn mutations_leave_original_untouched(g in arb_graph(), a in any::<usize>(), b in any::<usize>()) {
        let n = g.id_bound();
        let (u, v) = (a % n, b % n);
        let snapshot = g.clone();
        let leaf = g.mutate(Mutation::AttachLeaf(u)).unwrap();
        let l = leaf.new_vertex.unwrap();
        prop_assert_eq!(leaf.graph.degree(l), 1);
        prop_assert_eq!(leaf.graph.degree(u), g.degree(u) + 1);
        if u != v {
            let added = g.mutate(Mutation::AddEdge(u, v)).unwrap();
            prop_assert_eq!(added.changed, !g.has_edge(u, v));
            let back = added.graph.mutate(Mutation::RemoveEdge(u, v)).unwrap();
            if added.changed {
                prop_assert!(same(&back.graph, &g));
            }
        }
        prop_assert!(same(&g, &snapshot));
    }

    #[test]
    fn degree_sum_is_twice_edges(g in arb_graph()) {
        prop_assert_eq!(g.vertices().map(|v| g.degree(v)).sum::<usize>(), 2 * g.edge_count());
        let comps = g.components();
        prop_assert_eq!(comps.iter().map(Vec::len).sum::<usize>(), g.order());
        prop_assert_eq!(g.is_connected(), comps.len() == 1);
    }

    #[test]
    fn formats_round_trip(g in arb_graph()) {
        prop_assert!(same(&parse_graph6(&to_graph6(&g)).unwrap(), &g));
        prop_assert!(same(&parse_edge_list(&to_edge_list(&g)).unwrap(), &g));
        let doc = GraphDocument::graph6(&g, None);
        prop_assert!(same(&doc.parse().unwrap().0, &g));
    }

    #[test]
    fn embedding_documents_round_trip(n in 3usize..30, seed in any::<u64>()) {
        let (g, rot) = gen_random_planar(n, seed);
        let text = to_embedding_doc(&g, &rot);
        let (h, rot2) = parse_embedding_doc(&text).unwrap();
        prop_assert!(same(&g, &h));
        prop_assert_eq!(&rot, &rot2);
        prop_assert_eq!(to_embedding_doc(&h, &rot2), text);
    }

    #[test]
    fn reversed_rotation_is_also_plane(n in 3usize..30, seed in any::<u64>()) {
        let (g, rot) = gen_random_planar(n, seed);
        let mirror = RotationSystem::new(
            rot.as_lists().iter().map(|l| l.iter().rev().copied().collect()).collect(),
        );
        prop_assert!(validate_embedding(&g, &mirror).unwrap().planar);
        let a: Vec<usize> = trace_faces(&g, &rot).unwrap().iter().map(|f| f.size()).collect();
        let b: Vec<usize> = trace_faces(&g, &mirror).unwrap().iter().map(|f| f.size()).collect();
        prop_assert_eq!(a.len(), b.len());
    }
}
