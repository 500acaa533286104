//! Exact solvers: independence number, ordered enumeration of independent
//! sets, maximum bipartite matchings and Hall matchability.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, VertexSet};

/// Size of a largest independent set.
pub fn independence_number(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}

/// A maximum independent set, found by branch and bound with a greedy
/// clique-cover bound. Branches on a vertex of maximum degree inside the
/// candidate set, lowest index first; the result is deterministic.
pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    let mut bb = MisSearch {
        rows: g.rows(),
        best: VertexSet::EMPTY,
    };
    bb.run(g.vertices().bits(), VertexSet::EMPTY);
    bb.best
}

/// `alpha(G - removed)` without building the subgraph.
pub(crate) fn independence_number_within(g: &Graph, allowed: VertexSet) -> usize {
    let mut bb = MisSearch {
        rows: g.rows(),
        best: VertexSet::EMPTY,
    };
    bb.run(allowed.bits() & g.vertices().bits(), VertexSet::EMPTY);
    bb.best.len()
}

struct MisSearch<'a> {
    rows: &'a [u64],
    best: VertexSet,
}

impl MisSearch<'_> {
    fn run(&mut self, mut cand: u64, mut current: VertexSet) {
        // Vertices of candidate-degree 0 or 1 can always be taken.
        loop {
            let mut took = false;
            let mut scan = cand;
            while scan != 0 {
                let v = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                if cand & bit(v) == 0 {
                    continue;
                }
                if (self.rows[v] & cand).count_ones() <= 1 {
                    current.insert(v);
                    cand &= !(self.rows[v] | bit(v));
                    scan &= cand;
                    took = true;
                }
            }
            if !took {
                break;
            }
        }
        if cand == 0 {
            if current.len() > self.best.len() {
                self.best = current;
            }
            return;
        }
        if current.len() + clique_cover_bound(self.rows, cand) <= self.best.len() {
            return;
        }
        let mut pivot = 0;
        let mut pivot_deg = 0;
        let mut scan = cand;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let d = (self.rows[v] & cand).count_ones();
            if d > pivot_deg {
                pivot = v;
                pivot_deg = d;
            }
        }
        self.run(cand & !(self.rows[pivot] | bit(pivot)), current.with(pivot));
        self.run(cand & !bit(pivot), current);
    }
}

/// Number of cliques in a greedy clique cover of `cand`; an upper bound on the
/// independence number of the induced subgraph.
fn clique_cover_bound(rows: &[u64], mut cand: u64) -> usize {
    let mut cliques = 0;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= !bit(v);
        let mut common = rows[v] & cand;
        while common != 0 {
            let w = common.trailing_zeros() as usize;
            cand &= !bit(w);
            common &= rows[w];
        }
        cliques += 1;
    }
    cliques
}

/// All independent sets of size exactly `t`, in ascending order of their
/// bitmask value, truncated after `limit` sets.
pub fn independent_sets_of_size(g: &Graph, t: usize, limit: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if t <= g.order() && limit > 0 {
        enumerate_independent(g.rows(), g.order(), t, 0, limit, &mut |s| out.push(s));
    }
    out
}

/// Walks vertices from the highest index down, exploring "exclude" before
/// "include", which yields sets in ascending bitmask order.
fn enumerate_independent(
    rows: &[u64],
    order: usize,
    t: usize,
    forbidden: u64,
    limit: usize,
    emit: &mut dyn FnMut(VertexSet),
) {
    #[allow(clippy::too_many_arguments)]
    fn rec(
        rows: &[u64],
        v: usize,
        need: usize,
        chosen: u64,
        forbidden: u64,
        count: &mut usize,
        limit: usize,
        emit: &mut dyn FnMut(VertexSet),
    ) {
        if *count >= limit {
            return;
        }
        if need == 0 {
            *count += 1;
            emit(VertexSet::from_bits(chosen));
            return;
        }
        // Vertices 0..v are still undecided.
        let available = (crate::graph::low_bits(v) & !forbidden).count_ones() as usize;
        if available < need {
            return;
        }
        let w = v - 1;
        rec(rows, w, need, chosen, forbidden, count, limit, emit);
        if forbidden & bit(w) == 0 {
            rec(
                rows,
                w,
                need - 1,
                chosen | bit(w),
                forbidden | rows[w],
                count,
                limit,
                emit,
            );
        }
    }
    let mut count = 0;
    rec(rows, order, t, 0, forbidden, &mut count, limit, emit);
}

/// A matching between two disjoint vertex sets `R` and `S`, stored as
/// `(r, s)` pairs sorted by the `R` endpoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    r_side: VertexSet,
    s_side: VertexSet,
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(
        g: &Graph,
        r_side: VertexSet,
        s_side: VertexSet,
        pairs: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let m = Matching {
            r_side,
            s_side,
            pairs,
        };
        m.validate(g)?;
        Ok(m)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn r_side(&self) -> VertexSet {
        self.r_side
    }

    pub fn s_side(&self) -> VertexSet {
        self.s_side
    }

    /// `V(M)`.
    pub fn covered(&self) -> VertexSet {
        self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect()
    }

    pub fn saturates(&self, set: VertexSet) -> bool {
        set.is_subset(self.covered())
    }

    /// The pairs form a matching of `g` respecting the declared sides.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        g.check_set(self.r_side)?;
        g.check_set(self.s_side)?;
        if !self.r_side.is_disjoint(self.s_side) {
            return Err(Error::Overlap(
                self.r_side.to_string(),
                self.s_side.to_string(),
            ));
        }
        let mut seen = VertexSet::EMPTY;
        for &(r, s) in &self.pairs {
            if !self.r_side.contains(r) || !self.s_side.contains(s) {
                return Err(Error::Precondition(format!(
                    "pair ({r},{s}) does not respect the sides {} / {}",
                    self.r_side, self.s_side
                )));
            }
            if !g.has_edge(r, s) {
                return Err(Error::Precondition(format!("({r},{s}) is not an edge")));
            }
            if seen.contains(r) || seen.contains(s) {
                return Err(Error::Precondition(format!(
                    "pair ({r},{s}) shares a vertex with another pair"
                )));
            }
            seen = seen.with(r).with(s);
        }
        Ok(())
    }

    fn from_mates(r_side: VertexSet, s_side: VertexSet, mate_of_r: &[Option<usize>]) -> Self {
        let pairs = r_side
            .iter()
            .filter_map(|r| mate_of_r[r].map(|s| (r, s)))
            .collect();
        Matching {
            r_side,
            s_side,
            pairs,
        }
    }
}

fn check_sides(g: &Graph, r: VertexSet, s: VertexSet) -> Result<()> {
    g.check_set(r)?;
    g.check_set(s)?;
    if !r.is_disjoint(s) {
        return Err(Error::Overlap(r.to_string(), s.to_string()));
    }
    Ok(())
}

/// Maximum-cardinality matching using only edges between `r` and `s`.
/// Augmenting paths are searched from `R` vertices in index order.
pub fn max_bipartite_matching(g: &Graph, r: VertexSet, s: VertexSet) -> Result<Matching> {
    check_sides(g, r, s)?;
    let mut mate_r = vec![None; g.order()];
    let mut mate_s = vec![None; g.order()];
    augment_all(g, r, s, &mut mate_r, &mut mate_s);
    Ok(Matching::from_mates(r, s, &mate_r))
}

fn augment_all(
    g: &Graph,
    r: VertexSet,
    s: VertexSet,
    mate_r: &mut [Option<usize>],
    mate_s: &mut [Option<usize>],
) {
    for u in r {
        if mate_r[u].is_none() {
            let mut visited = VertexSet::EMPTY;
            try_augment(g, s, u, &mut visited, mate_r, mate_s);
        }
    }
}

fn try_augment(
    g: &Graph,
    s: VertexSet,
    u: usize,
    visited: &mut VertexSet,
    mate_r: &mut [Option<usize>],
    mate_s: &mut [Option<usize>],
) -> bool {
    for w in g.neighbors(u) & s {
        if visited.contains(w) {
            continue;
        }
        visited.insert(w);
        let free = match mate_s[w] {
            None => true,
            Some(x) => try_augment(g, s, x, visited, mate_r, mate_s),
        };
        if free {
            mate_r[u] = Some(w);
            mate_s[w] = Some(u);
            return true;
        }
    }
    false
}

/// Whether `y` is matchable into `a`, i.e. some matching saturates `y`.
pub fn is_matchable(g: &Graph, y: VertexSet, a: VertexSet) -> Result<bool> {
    Ok(max_bipartite_matching(g, y, a)?.len() == y.len())
}

/// A maximum matching between `r` and `s` that saturates `r_prime`, or `None`
/// when `r_prime` is not matchable into `s`.
///
/// Starts from an arbitrary maximum matching `M` and a matching `N` saturating
/// `r_prime`, then repeatedly swaps in the `N`-edge `xz` of an uncovered
/// `x` in `r_prime` for the `M`-edge at `z`. Each swap keeps `|M|` and grows
/// `|M ∩ N|`, so the loop ends with `r_prime` covered.
pub fn saturating_max_matching(
    g: &Graph,
    r: VertexSet,
    s: VertexSet,
    r_prime: VertexSet,
) -> Result<Option<Matching>> {
    check_sides(g, r, s)?;
    if !r_prime.is_subset(r) {
        return Err(Error::Precondition(format!(
            "{r_prime} is not a subset of {r}"
        )));
    }
    let saturating = max_bipartite_matching(g, r_prime, s)?;
    if saturating.len() < r_prime.len() {
        return Ok(None);
    }
    let maximum = max_bipartite_matching(g, r, s)?;

    let n = g.order();
    let mut mate_r: Vec<Option<usize>> = vec![None; n];
    let mut mate_s: Vec<Option<usize>> = vec![None; n];
    for &(a, b) in maximum.pairs() {
        mate_r[a] = Some(b);
        mate_s[b] = Some(a);
    }
    let mut n_partner = vec![None; n];
    for &(x, z) in saturating.pairs() {
        n_partner[x] = Some(z);
    }

    while let Some(x) = r_prime.iter().find(|&x| mate_r[x].is_none()) {
        let z = n_partner[x].expect("N saturates r_prime");
        // z is covered by M, otherwise M + xz would be a larger matching.
        let u = mate_s[z]
            .ok_or_else(|| Error::Postcondition("maximum matching could be extended".into()))?;
        mate_r[u] = None;
        mate_r[x] = Some(z);
        mate_s[z] = Some(x);
    }

    let m = Matching::from_mates(r, s, &mate_r);
    debug_assert_eq!(m.len(), maximum.len());
    Ok(Some(m))
}
