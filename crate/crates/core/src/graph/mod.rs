//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! bit row per vertex.
//!
//! Graphs are immutable once built; every transform in the crate returns a
//! fresh [`Graph`]. Vertex subsets are plain bitmasks ([`VertexSet`]).

mod canon;
mod graph6;

use std::fmt::{self, Write as _};
use std::ops::{BitAnd, BitOr, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::{canonical_form, canonical_labeling, CanonicalCode, Labeling};
pub use graph6::{decode_graph6, encode_graph6};

/// Largest supported order: one machine word per adjacency row.
pub const MAX_ORDER: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertex indices in `0..64`. Serializes as an ascending list.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(de)?;
        if let Some(&v) = items.iter().find(|&&v| v >= MAX_ORDER) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(items.into_iter().collect())
    }
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{0, 1, ..., n-1}`.
    pub const fn full(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(bit(v))
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !bit(v);
    }

    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | bit(v))
    }

    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !bit(v))
    }

    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// The `k` smallest elements (all of them if `k >= len`).
    pub fn lowest(self, k: usize) -> Self {
        self.iter().take(k).collect()
    }

    /// Elements in ascending order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Largest element plus one; zero for the empty set.
    pub(crate) fn span(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_char('{')?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_char(',')?;
            }
            write!(f, "{v}")?;
        }
        f.write_char('}')
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        self.difference(rhs)
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Per-vertex degrees together with the maximum degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max: usize,
}

/// A simple undirected graph of order at most [`MAX_ORDER`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an explicit edge list. Duplicate pairs are merged.
    pub fn new(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.rows[u] |= bit(v);
            g.rows[v] |= bit(u);
        }
        Ok(g)
    }

    pub fn empty(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        Ok(Graph {
            order,
            rows: vec![0; order],
        })
    }

    pub fn complete(order: usize) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        let all = low_bits(order);
        for (v, row) in g.rows.iter_mut().enumerate() {
            *row = all & !bit(v);
        }
        Ok(g)
    }

    /// `K_{a,b}` with the `a`-side on vertices `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut g = Graph::empty(a + b)?;
        let left = low_bits(a);
        let right = low_bits(a + b) & !left;
        for v in 0..a {
            g.rows[v] = right;
        }
        for v in a..a + b {
            g.rows[v] = left;
        }
        Ok(g)
    }

    pub fn cycle(order: usize) -> Result<Self> {
        let edges: Vec<_> = (0..order).map(|i| (i, (i + 1) % order)).collect();
        if order < 3 {
            return Err(Error::OutOfRange(format!(
                "a cycle needs at least 3 vertices, got {order}"
            )));
        }
        Graph::new(order, &edges)
    }

    pub fn path(order: usize) -> Result<Self> {
        let edges: Vec<_> = (1..order).map(|i| (i - 1, i)).collect();
        Graph::new(order, &edges)
    }

    /// Builds a graph from adjacency rows, validating symmetry and loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let order = rows.len();
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        let mask = low_bits(order);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let w = (row & !mask).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: w, order });
            }
            if row & bit(v) != 0 {
                return Err(Error::SelfLoop(v));
            }
            for w in VertexSet(row) {
                if rows[w] & bit(v) == 0 {
                    return Err(Error::Precondition(format!(
                        "adjacency is not symmetric at ({v},{w})"
                    )));
                }
            }
        }
        Ok(Graph { order, rows })
    }

    /// Trusted constructor for rows already known to be symmetric and loop-free.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph {
            order: rows.len(),
            rows,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.rows[u] & bit(v) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| {
            VertexSet(self.rows[u] & !low_bits(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Checks that every element of `set` is a vertex of this graph.
    pub fn check_set(&self, set: VertexSet) -> Result<()> {
        if set.span() > self.order {
            return Err(Error::VertexOutOfRange {
                vertex: set.span() - 1,
                order: self.order,
            });
        }
        Ok(())
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.rows[v] & set.0 == 0)
    }

    /// Triangle test by intersecting the neighbourhoods of both ends of each edge.
    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }

    pub fn find_triangle(&self) -> Option<(usize, usize, usize)> {
        for (u, v) in self.edges() {
            let common = self.rows[u] & self.rows[v];
            if common != 0 {
                return Some((u, v, common.trailing_zeros() as usize));
            }
        }
        None
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = (0..self.order).map(|v| self.degree(v)).collect();
        let max = degrees.iter().copied().max().unwrap_or(0);
        DegreeProfile { degrees, max }
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Subgraph induced on `keep`, relabelled `0..|keep|` in ascending order.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Graph {
        let keep = keep.intersection(self.vertices());
        let kept: Vec<usize> = keep.to_vec();
        let rows = kept
            .iter()
            .map(|&u| {
                kept.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.rows[u] & bit(w) != 0)
                    .fold(0u64, |acc, (j, _)| acc | bit(j))
            })
            .collect();
        Graph::from_rows_unchecked(rows)
    }

    /// `G - set`, i.e. the subgraph induced on the complement of `set`.
    pub fn remove_vertices(&self, set: VertexSet) -> Graph {
        self.induced_subgraph(self.vertices().difference(set))
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..order`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.order {
            return Err(Error::Precondition(format!(
                "permutation has length {}, graph has order {}",
                perm.len(),
                self.order
            )));
        }
        let image: VertexSet = perm.iter().copied().collect();
        if image != self.vertices() {
            return Err(Error::Precondition("not a permutation".into()));
        }
        let mut rows = vec![0u64; self.order];
        for (u, v) in self.edges() {
            rows[perm[u]] |= bit(perm[v]);
            rows[perm[v]] |= bit(perm[u]);
        }
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Deletes every edge with an endpoint in `set`.
    pub fn isolate(&self, set: VertexSet) -> Graph {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, &r)| if set.contains(v) { 0 } else { r & !set.0 })
            .collect();
        Graph::from_rows_unchecked(rows)
    }

    /// Adds every edge between the disjoint sets `a` and `b`.
    pub(crate) fn join(&self, a: VertexSet, b: VertexSet) -> Graph {
        debug_assert!(a.is_disjoint(b));
        let mut rows = self.rows.clone();
        for v in a {
            rows[v] |= b.0;
        }
        for v in b {
            rows[v] |= a.0;
        }
        Graph::from_rows_unchecked(rows)
    }

    /// Graph on one more vertex, adjacent exactly to `neighbors`.
    pub(crate) fn with_vertex(&self, neighbors: VertexSet) -> Graph {
        let v = self.order;
        debug_assert!(v < MAX_ORDER && neighbors.span() <= v);
        let mut rows = self.rows.clone();
        for w in neighbors {
            rows[w] |= bit(v);
        }
        rows.push(neighbors.0);
        Graph { order: v + 1, rows }
    }

    /// DOT rendering for human inspection.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in 0..self.order {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::new(5, &[(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn new_graph_examples() {
        let g = c5();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 5);
        assert!((0..5).all(|v| g.degree(v) == 2));

        let e = Graph::new(3, &[]).unwrap();
        assert_eq!(e.edge_count(), 0);

        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange {
                vertex: 2,
                order: 2
            })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::empty(65), Err(Error::OrderTooLarge(65)));
        assert!(Graph::empty(64).is_ok());
    }

    #[test]
    fn from_rows_rejects_asymmetry() {
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_rows(vec![0b01]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn triangle_examples() {
        assert!(c5().is_triangle_free());
        assert!(!Graph::complete(3).unwrap().is_triangle_free());
        assert!(Graph::complete_bipartite(3, 4).unwrap().is_triangle_free());
        assert_eq!(Graph::complete(3).unwrap().find_triangle(), Some((0, 1, 2)));
    }

    #[test]
    fn degree_examples() {
        let p = Graph::empty(4).unwrap().degree_profile();
        assert_eq!(p.degrees, vec![0; 4]);
        assert_eq!(p.max, 0);

        let star = Graph::complete_bipartite(1, 4).unwrap().degree_profile();
        assert_eq!(star.degrees, vec![4, 1, 1, 1, 1]);
        assert_eq!(star.max, 4);
    }

    #[test]
    fn induced_subgraph_examples() {
        let g = c5();
        assert_eq!(g.induced_subgraph(g.vertices()), g);
        let h = g.induced_subgraph(VertexSet::from_iter([0, 1, 2]));
        assert_eq!(h.order(), 3);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 2)]);
    }

    #[test]
    fn vertex_set_serializes_as_list() {
        let set: VertexSet = [5, 1, 3].into_iter().collect();
        let text = serde_json::to_string(&set).unwrap();
        assert_eq!(text, "[1,3,5]");
        assert_eq!(serde_json::from_str::<VertexSet>(&text).unwrap(), set);
        assert!(serde_json::from_str::<VertexSet>("[64]").is_err());
    }

    #[test]
    fn vertex_set_ops() {
        let a: VertexSet = [1, 3, 5].into_iter().collect();
        let b: VertexSet = [3, 4].into_iter().collect();
        assert_eq!((a | b).to_vec(), vec![1, 3, 4, 5]);
        assert_eq!((a & b).to_vec(), vec![3]);
        assert_eq!((a - b).to_vec(), vec![1, 5]);
        assert_eq!(a.lowest(2).to_vec(), vec![1, 3]);
        assert_eq!(a.to_string(), "{1,3,5}");
        assert_eq!(a.span(), 6);
        assert!(c5().check_set(a).is_err());
        assert!(c5().check_set(b).is_ok());
    }

    #[test]
    fn relabel_and_isolate() {
        let g = Graph::path(3).unwrap();
        let h = g.relabel(&[1, 0, 2]).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
        assert!(g.relabel(&[0, 0, 1]).is_err());
        let i = c5().isolate(VertexSet::singleton(0));
        assert_eq!(i.edge_count(), 3);
        assert_eq!(i.degree(0), 0);
    }

    #[test]
    fn dot_lists_edges() {
        let dot = c5().to_dot("c5");
        assert!(dot.starts_with("graph c5 {"));
        assert!(dot.contains("0 -- 2;"));
        assert_eq!(dot.matches("--").count(), 5);
    }
}
