//! Exhaustive computation of `ex(n, s)`, the largest edge count of a
//! triangle-free graph on `n` vertices with independence number at most `s`.
//!
//! Graphs are generated vertex by vertex with canonical augmentation: the
//! parent of a graph is obtained by deleting a minimum-degree vertex chosen
//! canonically, so every isomorphism class is reached from exactly one
//! parent class. Both target properties are hereditary, so every prefix of
//! an admissible graph is admissible and the enumeration prunes eagerly.

mod engine;
mod table;

use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::extremal_blowup;
use crate::error::{Error, Result};
use crate::graph::{canonical_form, CanonicalCode, Graph};

pub use engine::upper_bound;
pub use table::{verify_table, RowProof, TableRow};

use engine::{Node, Shared, Worker};

/// Largest order handled by the exhaustive search.
pub const MAX_SEARCH_ORDER: usize = 14;
pub const DEFAULT_NODE_LIMIT: u64 = 1_000_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchProblem {
    pub n: usize,
    pub s: usize,
    pub collect_witnesses: bool,
    /// Worker threads; 0 uses the default pool size.
    pub workers: usize,
    pub node_limit: u64,
    /// Order at which subtrees are handed to workers; defaults to `n / 2`.
    pub split_depth: Option<usize>,
}

impl SearchProblem {
    pub fn new(n: usize, s: usize) -> Result<Self> {
        let p = SearchProblem {
            n,
            s,
            collect_witnesses: true,
            workers: 0,
            node_limit: DEFAULT_NODE_LIMIT,
            split_depth: None,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn with_witnesses(mut self, on: bool) -> Self {
        self.collect_witnesses = on;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_node_limit(mut self, limit: u64) -> Self {
        self.node_limit = limit;
        self
    }

    pub fn with_split_depth(mut self, depth: usize) -> Self {
        self.split_depth = Some(depth);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n > MAX_SEARCH_ORDER {
            return Err(Error::OutOfRange(format!(
                "n = {} exceeds the supported maximum {MAX_SEARCH_ORDER}",
                self.n
            )));
        }
        if self.s > self.n {
            return Err(Error::OutOfRange(format!(
                "s = {} exceeds n = {}",
                self.s, self.n
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    Solved,
    Infeasible,
    NodeLimit,
}

impl fmt::Display for SearchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchStatus::Solved => "solved",
            SearchStatus::Infeasible => "infeasible",
            SearchStatus::NodeLimit => "node-limit",
        })
    }
}

/// Outcome of [`ex_search`]. Equality and serialization ignore `elapsed`, so
/// reports of the same problem compare equal across runs and worker counts.
#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub s: usize,
    pub status: SearchStatus,
    /// Largest edge count found; a lower bound only under `NodeLimit`.
    pub max_edges: Option<usize>,
    /// Canonical codes of all edge-maximal graphs, sorted. Empty unless
    /// witness collection was enabled and the status is `Solved`.
    pub witnesses: Vec<CanonicalCode>,
    pub nodes: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl PartialEq for SearchReport {
    fn eq(&self, other: &Self) -> bool {
        (
            self.n,
            self.s,
            self.status,
            self.max_edges,
            &self.witnesses,
            self.nodes,
        ) == (
            other.n,
            other.s,
            other.status,
            other.max_edges,
            &other.witnesses,
            other.nodes,
        )
    }
}

impl Eq for SearchReport {}

impl SearchReport {
    pub fn witness_graphs(&self) -> Vec<Graph> {
        self.witnesses.iter().map(CanonicalCode::to_graph).collect()
    }
}

/// A known admissible graph used as the initial lower bound: the extremal
/// Andrásfai blow-up for `n/3 < s < n/2` and the balanced complete bipartite
/// graph for `s >= n/2`.
pub fn seed_graph(n: usize, s: usize) -> Option<Graph> {
    if n == 0 {
        return None;
    }
    if 3 * s > n && 2 * s < n {
        extremal_blowup(n, s).ok().map(|b| b.graph)
    } else if 2 * s >= n {
        Graph::complete_bipartite(n / 2, n - n / 2).ok()
    } else {
        None
    }
}

pub fn ex_search(p: &SearchProblem) -> Result<SearchReport> {
    p.validate()?;
    let start = Instant::now();
    let (n, s) = (p.n, p.s);
    let mut report = SearchReport {
        n,
        s,
        status: SearchStatus::Solved,
        max_edges: None,
        witnesses: Vec::new(),
        nodes: 0,
        elapsed: Duration::ZERO,
    };

    // Orders 0 and 1 have a single graph; α(K1) = 1.
    if n <= 1 {
        if n == 1 && s == 0 {
            report.status = SearchStatus::Infeasible;
        } else {
            let g = Graph::empty(n)?;
            report.max_edges = Some(0);
            report.nodes = 1;
            if p.collect_witnesses {
                report.witnesses.push(canonical_form(&g));
            }
        }
        report.elapsed = start.elapsed();
        return Ok(report);
    }
    if s == 0 {
        report.status = SearchStatus::Infeasible;
        report.elapsed = start.elapsed();
        return Ok(report);
    }

    let shared = Shared {
        n,
        s,
        collect: p.collect_witnesses,
        node_limit: p.node_limit,
        nodes: AtomicU64::new(0),
        aborted: AtomicBool::new(false),
    };
    let seed = seed_graph(n, s).map(|g| g.edge_count());

    // Breadth-first to the split order, then independent subtrees.
    let split = p.split_depth.unwrap_or(n / 2).clamp(1, n - 1);
    let mut driver = Worker::new(&shared, seed);
    let mut frontier = vec![Node::root()];
    for _ in 1..split {
        frontier = frontier
            .iter()
            .flat_map(|node| driver.expand(node))
            .collect();
    }

    let run = |frontier: Vec<Node>| -> Vec<Worker<'_>> {
        frontier
            .into_par_iter()
            .map(|node| {
                let mut w = Worker::new(&shared, seed);
                w.dfs(&node);
                w
            })
            .collect()
    };
    let workers = if p.workers == 0 {
        run(frontier)
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(p.workers)
            .build()
            .map_err(|e| Error::Precondition(format!("cannot start workers: {e}")))?
            .install(|| run(frontier))
    };

    let mut merged = driver;
    for w in workers {
        merged.absorb(w);
    }
    report.nodes = merged.nodes;
    report.max_edges = merged.best;
    if shared.aborted.load(std::sync::atomic::Ordering::Relaxed) {
        report.status = SearchStatus::NodeLimit;
    } else if merged.best.is_none() {
        report.status = SearchStatus::Infeasible;
    } else if p.collect_witnesses {
        let mut codes: Vec<CanonicalCode> = merged
            .witnesses
            .iter()
            .map(|&packed| canonical_form(&engine::unpack(n, packed)))
            .collect();
        codes.sort();
        report.witnesses = codes;
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::andrasfai;
    use crate::solvers::independence_number;

    fn solve(n: usize, s: usize) -> SearchReport {
        ex_search(&SearchProblem::new(n, s).unwrap()).unwrap()
    }

    #[test]
    fn pentagon() {
        let r = solve(5, 2);
        assert_eq!(r.status, SearchStatus::Solved);
        assert_eq!(r.max_edges, Some(5));
        assert_eq!(r.witnesses, vec![canonical_form(&andrasfai(2).unwrap())]);
    }

    #[test]
    fn wagner_is_extremal() {
        let r = solve(8, 3);
        assert_eq!(r.max_edges, Some(12));
        assert!(r
            .witnesses
            .contains(&canonical_form(&andrasfai(3).unwrap())));
        for w in r.witness_graphs() {
            assert!(w.is_triangle_free());
            assert!(independence_number(&w) <= 3);
            assert_eq!(w.edge_count(), 12);
        }
    }

    #[test]
    fn ramsey_infeasible() {
        assert_eq!(solve(6, 2).status, SearchStatus::Infeasible);
        assert_eq!(solve(9, 3).status, SearchStatus::Infeasible);
        assert_eq!(solve(3, 1).status, SearchStatus::Infeasible);
        assert_eq!(solve(4, 0).status, SearchStatus::Infeasible);
        assert_eq!(solve(8, 3).status, SearchStatus::Solved);
    }

    #[test]
    fn tiny_orders() {
        assert_eq!(solve(0, 0).max_edges, Some(0));
        assert_eq!(solve(1, 1).max_edges, Some(0));
        assert_eq!(solve(1, 0).status, SearchStatus::Infeasible);
        assert_eq!(solve(2, 1).max_edges, Some(1));
        assert_eq!(solve(2, 2).max_edges, Some(1));
    }

    #[test]
    fn mantel_rows() {
        for n in 2..=8 {
            assert_eq!(solve(n, n).max_edges, Some(n * n / 4), "n = {n}");
        }
        assert_eq!(solve(8, 4).witnesses.len(), 1);
    }

    #[test]
    fn without_witnesses() {
        let r = ex_search(&SearchProblem::new(9, 4).unwrap().with_witnesses(false)).unwrap();
        assert_eq!(r.max_edges, Some(17));
        assert!(r.witnesses.is_empty());
    }

    #[test]
    fn node_limit_is_reported() {
        let p = SearchProblem::new(10, 4).unwrap().with_node_limit(10);
        assert_eq!(ex_search(&p).unwrap().status, SearchStatus::NodeLimit);
    }

    #[test]
    fn worker_counts_agree() {
        let base = SearchProblem::new(9, 4).unwrap();
        let a = ex_search(&base.clone().with_workers(1)).unwrap();
        let b = ex_search(&base.clone().with_workers(3)).unwrap();
        assert_eq!(a, b);
        let c = ex_search(&base.with_split_depth(2)).unwrap();
        assert_eq!(a.witnesses, c.witnesses);
    }

    #[test]
    fn rejects_large_orders() {
        assert!(SearchProblem::new(15, 5).is_err());
        assert!(SearchProblem::new(5, 6).is_err());
    }
}
