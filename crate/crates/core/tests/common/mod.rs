//! Independent reference implementations used as test oracles. They share no
//! code with the library beyond the `Graph` container.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trifree::{canonical_form, CanonicalCode, Graph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn adjacency(g: &Graph) -> Vec<u32> {
    (0..g.order())
        .map(|v| {
            (0..g.order())
                .filter(|&w| g.has_edge(v, w))
                .fold(0, |a, w| a | 1 << w)
        })
        .collect()
}

/// Independence number by trying every vertex subset.
pub fn alpha_by_subsets(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = g.order();
    (0u32..1 << n)
        .filter(|&m| (0..n).all(|v| m >> v & 1 == 0 || adj[v] & m == 0))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Smallest vertex cover by trying every subset.
pub fn min_vertex_cover(g: &Graph) -> usize {
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (0u32..1 << n)
        .filter(|&m| {
            edges
                .iter()
                .all(|&(u, v)| m >> u & 1 == 1 || m >> v & 1 == 1)
        })
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap()
}

/// `ex(n, s)` over all labelled graphs: `None` when no triangle-free graph of
/// order `n` has independence number at most `s`.
pub fn ex_brute_force(n: usize, s: usize) -> Option<usize> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    // Independent (s+1)-subsets must each contain an edge.
    let big: Vec<u32> = (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == s + 1)
        .collect();
    let mut best = None;
    for mask in 0u64..1 << pairs.len() {
        let mut adj = vec![0u32; n];
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        let e = mask.count_ones() as usize;
        if best.is_some_and(|b| e <= b) {
            continue;
        }
        let triangle = pairs
            .iter()
            .enumerate()
            .any(|(k, &(u, v))| mask >> k & 1 == 1 && adj[u] & adj[v] != 0);
        if triangle {
            continue;
        }
        let alpha_ok = big
            .iter()
            .all(|&m| (0..n).any(|v| m >> v & 1 == 1 && adj[v] & m != 0));
        if alpha_ok {
            best = Some(e);
        }
    }
    best
}

/// All triangle-free graphs of order `n` with independence number at most
/// `s`, up to isomorphism, built level by level without pruning.
pub fn classes(n: usize, s: usize) -> BTreeSet<CanonicalCode> {
    let mut level: BTreeSet<CanonicalCode> = [canonical_form(&Graph::empty(0).unwrap())].into();
    for i in 0..n {
        let mut next = BTreeSet::new();
        for code in &level {
            let g = code.to_graph();
            for m in 0u64..1 << i {
                let nbrs: Vec<usize> = (0..i).filter(|&v| m >> v & 1 == 1).collect();
                if nbrs.iter().any(|&u| nbrs.iter().any(|&v| g.has_edge(u, v))) {
                    continue;
                }
                let mut edges: Vec<(usize, usize)> = g.edges().collect();
                edges.extend(nbrs.iter().map(|&u| (u, i)));
                let h = Graph::new(i + 1, &edges).unwrap();
                if alpha_by_subsets(&h) <= s {
                    next.insert(canonical_form(&h));
                }
            }
        }
        level = next;
    }
    level
}

/// Maximum edge count and the classes attaining it.
pub fn ex_by_classes(n: usize, s: usize) -> Option<(usize, Vec<CanonicalCode>)> {
    let all = classes(n, s);
    let max = all.iter().map(|c| c.to_graph().edge_count()).max()?;
    let mut best: Vec<CanonicalCode> = all
        .into_iter()
        .filter(|c| c.to_graph().edge_count() == max)
        .collect();
    best.sort();
    Some((max, best))
}
