mod common;

use common::*;
use rand::Rng;
use trifree::search::SearchStatus;
use trifree::{
    blow_up, ex_search, independence_number, max_bipartite_matching, maximum_independent_set,
    BlowupWeights, Graph, SearchProblem, VertexSet,
};

fn search(n: usize, s: usize) -> trifree::SearchReport {
    ex_search(&SearchProblem::new(n, s).unwrap()).unwrap()
}

#[test]
fn search_matches_labelled_brute_force() {
    for n in 0..=7 {
        for s in 0..=n {
            let r = search(n, s);
            let expected = ex_brute_force(n, s);
            match expected {
                None => assert_eq!(r.status, SearchStatus::Infeasible, "({n},{s})"),
                Some(e) => {
                    assert_eq!(r.status, SearchStatus::Solved, "({n},{s})");
                    assert_eq!(r.max_edges, Some(e), "({n},{s})");
                }
            }
        }
    }
}

#[test]
fn search_matches_unpruned_enumeration() {
    for n in 1..=10 {
        for s in 1..=n {
            let r = search(n, s);
            match ex_by_classes(n, s) {
                None => assert_eq!(r.status, SearchStatus::Infeasible, "({n},{s})"),
                Some((e, codes)) => {
                    assert_eq!(r.max_edges, Some(e), "({n},{s})");
                    assert_eq!(r.witnesses, codes, "({n},{s})");
                }
            }
        }
    }
}

#[test]
fn triangle_free_class_counts() {
    // Triangle-free graphs up to isomorphism on 1..=9 vertices.
    let known = [1, 2, 3, 7, 14, 38, 107, 410, 1897];
    for (i, &count) in known.iter().enumerate() {
        let n = i + 1;
        assert_eq!(classes(n, n).len(), count, "n = {n}");
    }
}

#[test]
fn independence_number_matches_subset_oracle() {
    let mut rng = rng(1);
    for _ in 0..500 {
        let n = rng.gen_range(0..=14);
        let p = rng.gen_range(0.05..0.9);
        let g = random_graph(&mut rng, n, p);
        let alpha = alpha_by_subsets(&g);
        assert_eq!(independence_number(&g), alpha, "{g:?}");
        let set = maximum_independent_set(&g);
        assert_eq!(set.len(), alpha);
        assert!(g.is_independent(set));
    }
}

#[test]
fn koenig_on_random_bipartite_graphs() {
    let mut rng = rng(2);
    for _ in 0..200 {
        let a = rng.gen_range(0..=7);
        let b = rng.gen_range(0..=7);
        let p = rng.gen_range(0.1..0.8);
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(a + b, &edges).unwrap();
        let left: VertexSet = (0..a).collect();
        let m = max_bipartite_matching(&g, left, g.vertices() - left).unwrap();
        m.validate(&g).unwrap();
        assert_eq!(m.len(), min_vertex_cover(&g), "{g:?}");
    }
}

#[test]
fn blowup_alpha_is_max_weight_independent_set() {
    let mut rng = rng(3);
    for _ in 0..100 {
        let k = rng.gen_range(1..=4);
        let t = trifree::andrasfai(k).unwrap();
        let w: Vec<usize> = (0..t.order()).map(|_| rng.gen_range(0..=2)).collect();
        let g = blow_up(&BlowupWeights::new(t.clone(), w.clone()).unwrap());
        let best = (0u32..1 << t.order())
            .filter(|&m| {
                (0..t.order()).all(|u| {
                    (0..t.order()).all(|v| m >> u & 1 == 0 || m >> v & 1 == 0 || !t.has_edge(u, v))
                })
            })
            .map(|m| {
                (0..t.order())
                    .filter(|&v| m >> v & 1 == 1)
                    .map(|v| w[v])
                    .sum::<usize>()
            })
            .max()
            .unwrap();
        assert_eq!(independence_number(&g), best);
        assert_eq!(alpha_by_subsets(&g), best);
    }
}
