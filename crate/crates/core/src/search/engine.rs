use std::collections::{BTreeSet, HashSet};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use crate::graph::{canonical_labeling, Graph, VertexSet};
use crate::solvers::independent_sets_of_size;

pub(crate) struct Shared {
    pub n: usize,
    pub s: usize,
    pub collect: bool,
    pub node_limit: u64,
    pub nodes: AtomicU64,
    pub aborted: AtomicBool,
}

/// An accepted graph together with its packed canonical code.
pub(crate) struct Node {
    graph: Graph,
    code: u128,
}

impl Node {
    pub fn root() -> Self {
        Node {
            graph: Graph::empty(1).expect("order 1"),
            code: 0,
        }
    }
}

/// Upper triangle of the adjacency matrix, row by row. Fits orders up to 16.
pub(crate) fn pack(rows: &[u64]) -> u128 {
    let mut code = 0u128;
    let mut k = 0;
    for (u, &r) in rows.iter().enumerate() {
        for v in u + 1..rows.len() {
            if r >> v & 1 == 1 {
                code |= 1 << k;
            }
            k += 1;
        }
    }
    code
}

pub(crate) fn unpack(n: usize, code: u128) -> Graph {
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if code >> k & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
            k += 1;
        }
    }
    Graph::from_rows(rows).expect("packed rows are symmetric")
}

/// Largest edge count reachable from a graph on `i` vertices with `e` edges
/// whose last vertex has minimum degree `d`, when completed to `n` vertices
/// by adding minimum-degree vertices of a triangle-free graph with
/// independence number at most `s`.
///
/// Two bounds are combined. Degrees never exceed `s`, which caps the edges
/// still to come by the free degree capacity. And the degree `d_j` of the
/// vertex added at order `j` is the minimum degree of the graph of order `j`,
/// so `d_j <= d_{j-1} + 1`, `d_j <= j/2` (adjacent vertices have disjoint
/// neighbourhoods) and `d_j <= 2 e_j / j`.
pub fn upper_bound(n: usize, s: usize, i: usize, e: usize, d: usize) -> usize {
    let left = (n - i) * s;
    let free = (i * s).saturating_sub(2 * e);
    let capacity = e + (left + left.min(free)) / 2;

    let (mut ej, mut dj) = (e, d);
    for j in i + 1..=n {
        let mut step = s.min(j / 2).min(dj + 1);
        if j > 2 {
            step = step.min(2 * ej / (j - 2));
        }
        ej += step;
        dj = step;
    }
    capacity.min(ej)
}

/// Histogram of neighbour degrees, four bits per degree.
fn neighbour_profile(g: &Graph, degrees: &[usize], u: usize) -> u64 {
    g.neighbors(u)
        .iter()
        .fold(0u64, |acc, x| acc + (1u64 << (4 * degrees[x])))
}

pub(crate) struct Worker<'a> {
    sh: &'a Shared,
    /// Largest edge count of a known admissible graph of order `n`.
    pub best: Option<usize>,
    /// Packed canonical codes of graphs attaining `best`.
    pub witnesses: BTreeSet<u128>,
    pub nodes: u64,
}

impl<'a> Worker<'a> {
    pub fn new(sh: &'a Shared, seed: Option<usize>) -> Self {
        Worker {
            sh,
            best: seed,
            witnesses: BTreeSet::new(),
            nodes: 0,
        }
    }

    /// Smallest final edge count still worth reaching.
    fn need(&self) -> usize {
        match self.best {
            None => 0,
            Some(b) if self.sh.collect => b,
            Some(b) => b + 1,
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        let total = self.sh.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if total > self.sh.node_limit {
            self.sh.aborted.store(true, Ordering::Relaxed);
        }
        !self.sh.aborted.load(Ordering::Relaxed)
    }

    pub fn absorb(&mut self, other: Worker<'_>) {
        self.nodes += other.nodes;
        match (self.best, other.best) {
            (_, None) => {}
            (Some(a), Some(b)) if a > b => {}
            (Some(a), Some(b)) if a == b => self.witnesses.extend(other.witnesses),
            _ => {
                self.best = other.best;
                self.witnesses = other.witnesses;
            }
        }
    }

    pub fn dfs(&mut self, node: &Node) {
        for child in self.expand(node) {
            self.dfs(&child);
        }
    }

    fn leaf(&mut self, g: Graph) {
        if !self.tick() {
            return;
        }
        let e = g.edge_count();
        if e < self.need() {
            return;
        }
        if self.best.is_none_or(|b| e > b) {
            self.best = Some(e);
            self.witnesses.clear();
        }
        if self.sh.collect {
            self.witnesses.insert(pack(&canonical_labeling(&g).rows));
        }
    }

    /// Accepted children of `p`; leaves of order `n` are consumed directly.
    pub fn expand(&mut self, p: &Node) -> Vec<Node> {
        let mut out = Vec::new();
        if !self.tick() {
            return out;
        }
        let (n, s) = (self.sh.n, self.sh.s);
        let g = &p.graph;
        let i = g.order();
        let e = g.edge_count();
        let degrees: Vec<usize> = (0..i).map(|v| g.degree(v)).collect();
        let delta = degrees.iter().copied().min().unwrap_or(0);
        let allowed: VertexSet = (0..i).filter(|&v| degrees[v] < s).collect();
        // Every independent s-set must meet the new neighbourhood.
        let s_sets = independent_sets_of_size(g, s, usize::MAX);
        let mut seen: HashSet<u128> = HashSet::new();

        let t_max = s.min(delta + 1).min(i.div_ceil(2));
        for t in 0..=t_max {
            if upper_bound(n, s, i + 1, e + t, t) < self.need() {
                continue;
            }
            // Old vertices must keep degree at least t in the child.
            let required: VertexSet = (0..i).filter(|&v| degrees[v] + 1 == t).collect();
            if required.len() > t || !required.is_subset(allowed) || !g.is_independent(required) {
                continue;
            }
            let mut sets = Vec::new();
            hitting_sets(
                g,
                &s_sets,
                allowed,
                required,
                VertexSet::EMPTY,
                t,
                &mut sets,
            );
            for x in sets {
                if self.sh.aborted.load(Ordering::Relaxed) {
                    return out;
                }
                let child = g.with_vertex(x);
                if i + 1 == n {
                    if e + t >= self.need() {
                        self.leaf(child);
                    }
                    continue;
                }
                if let Some(node) = accept(&child, p.code, t) {
                    if seen.insert(node.code) {
                        out.push(node);
                    }
                }
            }
        }
        out
    }
}

/// Canonical-parent test for `c`, whose last vertex was just added with
/// degree `t = δ(c)`. The canonical deletion vertex is the minimum-degree
/// vertex with the largest neighbour-degree profile that comes first in the
/// canonical order; `c` is accepted when it lies in the orbit of the new
/// vertex, or when deleting it yields a graph isomorphic to the parent.
fn accept(c: &Graph, parent_code: u128, t: usize) -> Option<Node> {
    let order = c.order();
    let v = order - 1;
    let degrees: Vec<usize> = (0..order).map(|u| c.degree(u)).collect();
    let mut top = 0u64;
    let mut tied = VertexSet::EMPTY;
    for u in (0..order).filter(|&u| degrees[u] == t) {
        let f = neighbour_profile(c, &degrees, u);
        if f > top || tied.is_empty() {
            top = f;
            tied = VertexSet::singleton(u);
        } else if f == top {
            tied.insert(u);
        }
    }
    if !tied.contains(v) {
        return None;
    }
    let lab = canonical_labeling(c);
    let code = pack(&lab.rows);
    let node = Node {
        graph: c.clone(),
        code,
    };
    if tied.len() == 1 {
        return Some(node);
    }
    let w = *lab.lab.iter().find(|&&u| tied.contains(u))?;
    if w == v {
        return Some(node);
    }
    let orbits = lab.orbits();
    if orbits[w] == orbits[v] {
        return Some(node);
    }
    let rest = c.remove_vertices(VertexSet::singleton(w));
    (pack(&canonical_labeling(&rest).rows) == parent_code).then_some(node)
}

/// Independent `t`-sets `x ⊇ chosen` inside `allowed`, avoiding `excluded`,
/// that meet every set in `targets`. Branches on the first missed target.
fn hitting_sets(
    g: &Graph,
    targets: &[VertexSet],
    allowed: VertexSet,
    chosen: VertexSet,
    excluded: VertexSet,
    t: usize,
    out: &mut Vec<VertexSet>,
) {
    let blocked = chosen
        .iter()
        .fold(excluded | chosen, |acc, u| acc | g.neighbors(u));
    let room = t - chosen.len();
    match targets.iter().find(|&&target| target.is_disjoint(chosen)) {
        None => complete(g, allowed - blocked, chosen, room, out),
        Some(&target) => {
            if room == 0 {
                return;
            }
            let mut excl = excluded;
            for u in (target & allowed) - blocked {
                hitting_sets(g, targets, allowed, chosen.with(u), excl, t, out);
                excl.insert(u);
            }
        }
    }
}

/// Extends `chosen` by `room` further independent vertices from `pool`.
fn complete(g: &Graph, pool: VertexSet, chosen: VertexSet, room: usize, out: &mut Vec<VertexSet>) {
    if room == 0 {
        out.push(chosen);
        return;
    }
    if pool.len() < room {
        return;
    }
    let u = pool.first().expect("pool is nonempty");
    complete(
        g,
        pool.without(u) - g.neighbors(u),
        chosen.with(u),
        room - 1,
        out,
    );
    complete(g, pool.without(u), chosen, room, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pack_roundtrip() {
        let g = Graph::cycle(7).unwrap();
        assert_eq!(unpack(7, pack(g.rows())), g);
        assert_eq!(pack(Graph::empty(5).unwrap().rows()), 0);
    }

    #[test]
    fn hitting_sets_enumerates_each_once() {
        // C5: the independent 2-sets are the five non-edges.
        let g = Graph::cycle(5).unwrap();
        let targets = independent_sets_of_size(&g, 2, usize::MAX);
        let mut out = Vec::new();
        hitting_sets(
            &g,
            &targets,
            g.vertices(),
            VertexSet::EMPTY,
            VertexSet::EMPTY,
            2,
            &mut out,
        );
        // Independent 2-sets meeting every non-edge of C5: none exist, since
        // a non-edge {a, b} misses the other three vertices' non-edges.
        let brute: Vec<VertexSet> = independent_sets_of_size(&g, 2, usize::MAX)
            .into_iter()
            .filter(|x| targets.iter().all(|t| !t.is_disjoint(*x)))
            .collect();
        let mut sorted = out.clone();
        sorted.sort_by_key(|x| x.bits());
        sorted.dedup();
        assert_eq!(sorted.len(), out.len());
        assert_eq!(sorted, brute);
    }

    #[test]
    fn bound_examples() {
        // A finished graph is its own bound.
        assert_eq!(upper_bound(5, 2, 5, 5, 2), 5);
        // From a single vertex the bound never undercuts the true maximum.
        assert!(upper_bound(12, 5, 1, 0, 0) >= 29);
        assert!(upper_bound(13, 5, 1, 0, 0) >= 32);
        assert!(upper_bound(8, 8, 1, 0, 0) >= 16);
    }
}
