use proptest::prelude::*;
use trifree::formulas::{fact26_identity, g_k_value, g_min_over_k, g_value, range_index};
use trifree::{
    canonical_form, decode_graph6, encode_graph6, extremal_blowup, independence_number, sym, Graph,
    RangeIndex, Rational, VertexSet,
};

fn graph_strategy(max_order: usize) -> impl Strategy<Value = Graph> {
    (0..=max_order).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|v| (0..v).map(move |u| (u, v)))
                .zip(bits)
                .filter_map(|(e, b)| b.then_some(e))
                .collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn graph_with_perm(max_order: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_strategy(max_order).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph_with_perm(12)) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
    }

    #[test]
    fn graph6_roundtrip(g in graph_strategy(64)) {
        let text = encode_graph6(&g);
        prop_assert_eq!(decode_graph6(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn triangle_free_iff_neighbourhoods_independent(g in graph_strategy(16)) {
        let local = (0..g.order()).all(|v| g.is_independent(g.neighbors(v)));
        prop_assert_eq!(g.is_triangle_free(), local);
    }

    #[test]
    fn degree_at_most_alpha_when_triangle_free(g in graph_strategy(14)) {
        if g.is_triangle_free() {
            let alpha = independence_number(&g);
            prop_assert!((0..g.order()).all(|v| g.degree(v) <= alpha));
        }
    }

    #[test]
    fn sym_never_creates_triangles(g in graph_strategy(12), seed in any::<u64>()) {
        if g.is_triangle_free() {
            let n = g.order() as u32;
            let mask = if n == 0 { 0 } else { seed & ((1u64 << n) - 1) };
            let mut a = VertexSet::EMPTY;
            for v in VertexSet::from_bits(mask) {
                if g.neighbors(v).is_disjoint(a) {
                    a.insert(v);
                }
            }
            let b = VertexSet::from_bits((seed >> 20) & ((1u64 << n) - 1)) - a;
            prop_assert!(sym(&g, a, b).unwrap().is_triangle_free());
        }
    }

    #[test]
    fn band_value_is_min_over_k(n in 1u64..80, num in 0u64..1000) {
        let s = num % (n + 1);
        if 3 * s > n && 2 * s < n {
            let g = g_value(n, s).unwrap();
            prop_assert_eq!(g, Rational::from_integer(g_min_over_k(n, s).unwrap()));
        }
    }

    #[test]
    fn fact26_identity_holds(k in 2u64..12, n in 0u64..100, num in 0u64..1000) {
        let s = num % (n + 1);
        let (lhs, rhs) = fact26_identity(k, n, s).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn extremal_blowups_up_to_thirty() {
    for n in 1..=30usize {
        for s in (1..n).filter(|&s| 3 * s > n && 2 * s < n) {
            let b = extremal_blowup(n, s).unwrap();
            let k = match range_index(n as u64, s as u64).unwrap() {
                RangeIndex::Band(k) => k,
                other => panic!("({n},{s}) in {other}"),
            };
            assert_eq!(b.graph.order(), n);
            assert!(b.graph.is_triangle_free());
            assert_eq!(independence_number(&b.graph), s, "({n},{s})");
            assert_eq!(
                b.graph.edge_count() as i128,
                g_k_value(k, n as u64, s as u64).unwrap()
            );
        }
    }
}
