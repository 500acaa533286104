//! Canonical labelling by partition refinement and individualisation.
//!
//! The search explores the individualisation-refinement tree, keeps the
//! lexicographically largest relabelled adjacency matrix, and prunes siblings
//! that are images of already-explored branches under automorphisms fixing the
//! current prefix. Twin transpositions are seeded as known automorphisms, which
//! keeps blow-ups with large classes cheap.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{bit, encode_graph6, Graph, VertexSet};

/// Isomorphism-invariant byte encoding: the graph6 string of the canonically
/// relabelled graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        super::decode_graph6(self.0.as_bytes()).expect("canonical codes are valid graph6")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.0)
    }
}

/// Result of canonical labelling.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// `lab[i]` is the vertex that receives canonical label `i`.
    pub lab: Vec<usize>,
    /// Adjacency rows of the canonically relabelled graph.
    pub rows: Vec<u64>,
    /// Automorphisms discovered on the way, as images `perm[v]`. They
    /// generate a subgroup of the automorphism group, not necessarily all of it.
    pub generators: Vec<Vec<usize>>,
}

impl Labeling {
    pub fn canonical_graph(&self) -> Graph {
        Graph::from_rows_unchecked(self.rows.clone())
    }

    pub fn code(&self) -> CanonicalCode {
        CanonicalCode(encode_graph6(&self.canonical_graph()))
    }

    /// Orbit representative (smallest member) of each vertex under the
    /// discovered automorphisms.
    pub fn orbits(&self) -> Vec<usize> {
        let n = self.lab.len();
        let mut uf = UnionFind::new(n);
        for g in &self.generators {
            for (v, &w) in g.iter().enumerate() {
                uf.union(v, w);
            }
        }
        (0..n).map(|v| uf.find(v)).collect()
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalCode {
    canonical_labeling(g).code()
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    let n = g.order();
    let mut search = Search {
        rows: g.rows(),
        best: None,
        autos: twin_transpositions(g.rows()),
    };
    if n > 0 {
        let cells = initial_cells(g);
        search.explore(cells, &mut Vec::new());
    }
    let (rows, lab) = search.best.unwrap_or_default();
    Labeling {
        lab,
        rows,
        generators: search.autos,
    }
}

/// Cells of the degree partition, ordered by degree.
fn initial_cells(g: &Graph) -> Vec<u64> {
    let mut by_degree = vec![0u64; g.order() + 1];
    for v in 0..g.order() {
        by_degree[g.degree(v)] |= bit(v);
    }
    by_degree.into_iter().filter(|&c| c != 0).collect()
}

fn twin_transpositions(rows: &[u64]) -> Vec<Vec<usize>> {
    let n = rows.len();
    let mut autos = Vec::new();
    let mut seen = 0u64;
    for u in 0..n {
        if seen & bit(u) != 0 {
            continue;
        }
        let mut prev = u;
        for v in u + 1..n {
            let open = rows[u] == rows[v];
            let closed = rows[u] | bit(u) == rows[v] | bit(v);
            if open || closed {
                seen |= bit(v);
                let mut perm: Vec<usize> = (0..n).collect();
                perm.swap(prev, v);
                autos.push(perm);
                prev = v;
            }
        }
    }
    autos
}

/// Splits cells until the ordered partition is equitable. Fragments are
/// ordered by neighbour count into the splitter, so the result depends only
/// on the isomorphism type of (graph, input partition).
fn refine(rows: &[u64], cells: &mut Vec<u64>) {
    let mut splitter = 0;
    while splitter < cells.len() {
        let w = cells[splitter];
        let mut split_any = false;
        let mut i = 0;
        while i < cells.len() {
            let cell = cells[i];
            if cell & (cell - 1) == 0 {
                i += 1;
                continue;
            }
            // 65 possible counts; collect the distinct ones in ascending order.
            let mut buckets: [u64; 65] = [0; 65];
            let mut present = 0u128;
            for v in VertexSet::from_bits(cell) {
                let c = (rows[v] & w).count_ones() as usize;
                buckets[c] |= bit(v);
                present |= 1u128 << c;
            }
            if present.count_ones() == 1 {
                i += 1;
                continue;
            }
            let mut fragments = Vec::with_capacity(present.count_ones() as usize);
            while present != 0 {
                let c = present.trailing_zeros() as usize;
                fragments.push(buckets[c]);
                present &= present - 1;
            }
            let k = fragments.len();
            cells.splice(i..=i, fragments);
            i += k;
            split_any = true;
        }
        splitter = if split_any { 0 } else { splitter + 1 };
    }
}

struct Search<'a> {
    rows: &'a [u64],
    /// Best relabelled rows so far and the labelling producing them.
    best: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn explore(&mut self, mut cells: Vec<u64>, fixed: &mut Vec<usize>) {
        refine(self.rows, &mut cells);
        if cells.len() == self.rows.len() {
            self.leaf(&cells);
            return;
        }
        // First smallest non-singleton cell.
        let (target, &cell) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(_, c)| c.count_ones())
            .expect("partition is not discrete");
        let mut tried: Vec<usize> = Vec::new();
        for v in VertexSet::from_bits(cell) {
            if !tried.is_empty() && self.equivalent_to_tried(v, &tried, fixed) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(bit(v));
            child.push(cell & !bit(v));
            child.extend_from_slice(&cells[target + 1..]);
            fixed.push(v);
            self.explore(child, fixed);
            fixed.pop();
            tried.push(v);
        }
    }

    /// True if some known automorphism fixing `fixed` pointwise maps `v` into
    /// the orbit of an already explored sibling.
    fn equivalent_to_tried(&self, v: usize, tried: &[usize], fixed: &[usize]) -> bool {
        let n = self.rows.len();
        let mut uf = UnionFind::new(n);
        for g in &self.autos {
            if fixed.iter().all(|&x| g[x] == x) {
                for (a, &b) in g.iter().enumerate() {
                    uf.union(a, b);
                }
            }
        }
        let root = uf.find(v);
        tried.iter().any(|&t| uf.find(t) == root)
    }

    fn leaf(&mut self, cells: &[u64]) {
        let n = self.rows.len();
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = vec![0usize; n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let code: Vec<u64> = lab
            .iter()
            .map(|&v| {
                VertexSet::from_bits(self.rows[v])
                    .iter()
                    .fold(0u64, |acc, w| acc | bit(pos[w]))
            })
            .collect();
        match &self.best {
            None => self.best = Some((code, lab)),
            Some((best_code, best_lab)) => match code.cmp(best_code) {
                Ordering::Greater => self.best = Some((code, lab)),
                Ordering::Equal => {
                    // lab[i] -> best_lab[i] is an automorphism.
                    let mut perm = vec![0usize; n];
                    for i in 0..n {
                        perm[lab[i]] = best_lab[i];
                    }
                    if perm.iter().enumerate().any(|(v, &w)| v != w) {
                        self.autos.push(perm);
                    }
                }
                Ordering::Less => {}
            },
        }
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.0[v] != v {
            self.0[v] = self.0[self.0[v]];
            v = self.0[v];
        }
        v
    }

    /// Keeps the smaller index as root.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::new(5, &[(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]).unwrap()
    }

    fn wagner() -> Graph {
        let edges: Vec<_> = (0..8)
            .flat_map(|i| [(i, (i + 3) % 8), (i, (i + 4) % 8)])
            .collect();
        Graph::new(8, &edges).unwrap()
    }

    #[test]
    fn relabelled_pentagon_has_same_code() {
        let g = c5();
        let h = Graph::cycle(5).unwrap();
        assert_eq!(canonical_form(&g), canonical_form(&h));
        assert_ne!(canonical_form(&g), canonical_form(&Graph::path(5).unwrap()));
    }

    #[test]
    fn wagner_is_not_c8() {
        assert_ne!(
            canonical_form(&wagner()),
            canonical_form(&Graph::cycle(8).unwrap())
        );
    }

    #[test]
    fn canonical_graph_is_isomorphic_copy() {
        let g = wagner();
        let l = canonical_labeling(&g);
        let mut perm = vec![0; 8];
        for (i, &v) in l.lab.iter().enumerate() {
            perm[v] = i;
        }
        assert_eq!(g.relabel(&perm).unwrap(), l.canonical_graph());
        assert_eq!(canonical_form(&l.canonical_graph()), l.code());
    }

    #[test]
    fn generators_are_automorphisms() {
        for g in [wagner(), c5(), Graph::complete_bipartite(3, 4).unwrap()] {
            let l = canonical_labeling(&g);
            for perm in &l.generators {
                assert_eq!(&g.relabel(perm).unwrap(), &g);
            }
        }
    }

    #[test]
    fn vertex_transitive_graphs_have_one_orbit() {
        for g in [wagner(), c5(), Graph::cycle(7).unwrap()] {
            let l = canonical_labeling(&g);
            assert!(l.orbits().iter().all(|&r| r == 0), "{g:?}");
        }
    }

    #[test]
    fn degenerate_orders() {
        let e0 = Graph::empty(0).unwrap();
        assert_eq!(canonical_form(&e0).as_str(), "?");
        let e1 = Graph::empty(1).unwrap();
        assert_eq!(canonical_form(&e1).to_graph(), e1);
    }

    #[test]
    fn distinguishes_all_graphs_on_five_vertices() {
        // There are 34 isomorphism classes of graphs on five vertices.
        let mut codes = std::collections::BTreeSet::new();
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, &p)| p)
                .collect();
            codes.insert(canonical_form(&Graph::new(5, &edges).unwrap()));
        }
        assert_eq!(codes.len(), 34);
    }
}
