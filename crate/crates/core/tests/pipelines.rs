use trifree::solvers::independent_sets_of_size;
use trifree::validation::{andrasfai_class, pentagon_bound};
use trifree::{
    enforce_pair_structure, enforce_triple_structure, ex_search, extremal_family_audit,
    independence_number, maximum_independent_set, prop32_audit, Graph, SearchProblem,
};

fn witnesses(n: usize, s: usize) -> Vec<Graph> {
    ex_search(&SearchProblem::new(n, s).unwrap())
        .unwrap()
        .witness_graphs()
}

#[test]
fn pair_structure_on_extremal_witnesses() {
    for (n, s) in [(5, 2), (9, 4), (10, 4), (12, 5), (13, 5)] {
        for g in witnesses(n, s) {
            let p = enforce_pair_structure(&g, s).unwrap();
            p.check().unwrap();
            assert!(p.graph.edge_count() >= g.edge_count());
            assert_eq!(independence_number(&p.graph), s);
            assert!(p.graph.is_triangle_free());
            assert!(p.stages.windows(2).all(|w| w[1].edges >= w[0].edges));
        }
    }
}

#[test]
fn triple_structure_on_a_witness() {
    let (n, s) = (10, 4);
    let mut runs = 0;
    for g in witnesses(n, s) {
        let sets = independent_sets_of_size(&g, s, usize::MAX);
        for &a in &sets {
            for &b in sets.iter().filter(|b| b.is_disjoint(a)) {
                for &c in sets
                    .iter()
                    .filter(|c| c.is_disjoint(a) && (**c & b).len() + 2 * s <= n)
                {
                    let t = enforce_triple_structure(&g, a, b, c).unwrap();
                    t.check().unwrap();
                    assert_eq!(t.a_prime.len(), 3 * s - n);
                    assert!(t.graph.edge_count() >= g.edge_count());
                    runs += 1;
                }
            }
        }
    }
    assert!(runs > 0);
}

#[test]
fn prop32_is_tight_on_pentagon_range_witnesses() {
    for (n, s) in [(5, 2), (9, 4), (12, 5)] {
        for g in witnesses(n, s) {
            let a = maximum_independent_set(&g);
            let q = (g.vertices() - a).lowest(3 * s - n);
            let r = prop32_audit(&g, a, q);
            assert!(r.overall, "{r:#?}");
            assert_eq!(g.edge_count() as i64, pentagon_bound(n, s));
        }
    }
}

#[test]
fn family_audits_pass() {
    for (n, s) in [(5, 2), (8, 3), (9, 4), (10, 4), (11, 4), (12, 5), (13, 5)] {
        let ws = witnesses(n, s);
        let r = extremal_family_audit(&ws, n, s);
        assert!(r.overall, "{r:#?}");
    }
    let w = witnesses(11, 4);
    assert!(w.iter().any(|g| andrasfai_class(g).map(|c| c.0) == Some(4)));
}
