//! Randomized structural properties: serialization round-trips, the
//! vertex-set algebra against a model implementation, and validity of
//! discovered separations.

use hedge::graph::Graph;
use hedge::set::VertexSet;
use proptest::collection::btree_set;
use proptest::prelude::*;

/// A random graph as (n, edge selector over all pairs).
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for j in 1..n {
                for i in 0..j {
                    if mask[idx] {
                        edges.push((i, j));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trips(g in arb_graph(40)) {
        let text = g.to_graph6().unwrap();
        let back = Graph::parse_graph6(&text).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges(), g.edges());
        // canonical output: re-encoding is byte-identical
        prop_assert_eq!(back.to_graph6().unwrap(), text);
    }

    #[test]
    fn vertex_set_algebra_matches_model(
        a in btree_set(0usize..120, 0..24),
        b in btree_set(0usize..120, 0..24),
    ) {
        let sa: VertexSet = a.iter().copied().collect();
        let sb: VertexSet = b.iter().copied().collect();
        prop_assert_eq!(sa.union(&sb).to_vec(), a.union(&b).copied().collect::<Vec<_>>());
        prop_assert_eq!(
            sa.intersection(&sb).to_vec(),
            a.intersection(&b).copied().collect::<Vec<_>>()
        );
        prop_assert_eq!(
            sa.difference(&sb).to_vec(),
            a.difference(&b).copied().collect::<Vec<_>>()
        );
        prop_assert_eq!(sa.is_subset_of(&sb), a.is_subset(&b));
        prop_assert_eq!(sa.is_disjoint(&sb), a.is_disjoint(&b));
        prop_assert_eq!(sa.len(), a.len());
        // iteration is ascending and Display matches it
        prop_assert_eq!(sa.iter().collect::<Vec<_>>(), a.iter().copied().collect::<Vec<_>>());
    }

    #[test]
    fn separations_found_are_valid(g in arb_graph(12), s in 1usize..4, c in 0usize..4) {
        if let Some(sep) = hedge::enumerate::find_separation(&g, s, c).unwrap() {
            prop_assert!(sep.is_valid(&g));
            prop_assert!(sep.separator.len() <= c);
            prop_assert!(sep.x_side.len() >= s && sep.y_side.len() >= s);
        }
    }
}
