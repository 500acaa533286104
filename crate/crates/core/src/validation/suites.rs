//! Seeded randomized property suites for the symmetrisation and matching
//! lemmas. Each suite draws instances until it has the requested number that
//! satisfy the statement's hypotheses, then counts violations.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::graph::{Graph, VertexSet};
use crate::solvers::{
    independence_number, independent_sets_of_size, is_matchable, max_bipartite_matching,
    saturating_max_matching,
};
use crate::transforms::{isolate_unmatched, sym};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub instances: usize,
    pub violations: usize,
    /// Description of the first violating instance, if any.
    pub first_violation: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

type Suite = fn(&mut ChaCha8Rng) -> Option<Result<(), String>>;

const SUITES: [(&str, Suite); 7] = [
    ("sym_edge_inequality", sym_edge_case),
    ("sym_edge_equality", sym_equality_case),
    ("sym_triangle_free", sym_triangle_case),
    ("isolate_unmatched_alpha", isolate_case),
    ("sym_pair_alpha", pair_alpha_case),
    ("independent_set_matchable", matchable_case),
    ("saturating_matching", saturating_case),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

/// Runs every suite with its own stream derived from `seed`.
pub fn run_all(seed: u64, instances: usize) -> Vec<SuiteResult> {
    SUITES
        .iter()
        .enumerate()
        .map(|(i, (name, f))| run_one(name, *f, seed.wrapping_add(i as u64), instances))
        .collect()
}

pub fn run_suite(name: &str, seed: u64, instances: usize) -> Option<SuiteResult> {
    let i = SUITES.iter().position(|(n, _)| *n == name)?;
    let (name, f) = SUITES[i];
    Some(run_one(name, f, seed.wrapping_add(i as u64), instances))
}

fn run_one(name: &'static str, f: Suite, seed: u64, instances: usize) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut result = SuiteResult {
        name,
        instances: 0,
        violations: 0,
        first_violation: None,
    };
    let mut attempts = 0usize;
    while result.instances < instances {
        attempts += 1;
        assert!(
            attempts <= instances * 1000,
            "suite {name} cannot generate instances"
        );
        match f(&mut rng) {
            None => continue,
            Some(Ok(())) => result.instances += 1,
            Some(Err(msg)) => {
                result.instances += 1;
                result.violations += 1;
                result.first_violation.get_or_insert(msg);
            }
        }
    }
    result
}

/// Random triangle-free graph: pairs are offered in random order and kept
/// when they close no triangle, stopping after a random number of offers.
pub fn random_triangle_free(rng: &mut impl Rng, n: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    let keep = rng.gen_range(0..=pairs.len());
    let mut rows = vec![0u64; n];
    for &(u, v) in &pairs[..keep] {
        if rows[u] & rows[v] == 0 {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
    }
    Graph::from_rows(rows).expect("rows are symmetric")
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut rows = vec![0u64; n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
        }
    }
    Graph::from_rows(rows).expect("rows are symmetric")
}

fn random_subset(rng: &mut impl Rng, within: VertexSet, p: f64) -> VertexSet {
    within.iter().filter(|_| rng.gen_bool(p)).collect()
}

fn random_independent(rng: &mut impl Rng, g: &Graph, within: VertexSet) -> VertexSet {
    let mut order = within.to_vec();
    order.shuffle(rng);
    let target = rng.gen_range(0..=order.len());
    let mut set = VertexSet::EMPTY;
    for v in order.into_iter().take(target) {
        if g.neighbors(v).is_disjoint(set) {
            set.insert(v);
        }
    }
    set
}

fn pick<T: Clone>(rng: &mut impl Rng, items: &[T]) -> Option<T> {
    items.choose(rng).cloned()
}

/// If every `b` in `B` has degree at most `|A|`, `Sym(A, B)` does not lose edges.
fn sym_edge_case(rng: &mut ChaCha8Rng) -> Option<Result<(), String>> {
    let n = rng.gen_range(2..=12);
    let g = {
        let p = rng.gen_range(0.1..0.7);
        random_graph(rng, n, p)
    };
    let b = random_subset(rng, g.vertices(), 0.3);
    let a = random_subset(rng, g.vertices() - b, 0.5);
    if b.iter().any(|v| g.degree(v) > a.len()) {
        return None;
    }
    let h = sym(&g, a, b).ok()?;
    let check = h.edge_count() >= g.edge_count();
    let equal = h.edge_count() == g.edge_count();
    let tight = g.is_independent(b) && b.iter().all(|v| g.degree(v) == a.len());
    if check && equal == tight {
        Some(Ok(()))
    } else {
        Some(Err(format!("G = {g:?}, A = {a}, B = {b}")))
    }
}

/// Same statement on instances built to sit in the equality case: `B` is
/// independent and each of its vertices has exactly `|A|` neighbours.
fn sym_equality_case(rng: &mut ChaCha8Rng) -> Option<Result<(), String>> {
    let n = rng.gen_range(3..=12);
    let base = {
        let p = rng.gen_range(0.1..0.7);
        random_graph(rng, n, p)
    };
    let b = random_subset(rng, base.vertices(), 0.3);
    let rest = base.vertices() - b;
    let a = random_subset(rng, rest, 0.5);
    if b.is_empty() || a.len() > rest.len() {
        return None;
    }
    let mut g = base.isolate(b);
    for v in b.iter() {
        let mut pool = rest.to_vec();
        pool.shuffle(rng);
        let nbrs: VertexSet = pool.into_iter().take(a.len()).collect();
        g = g.join(VertexSet::singleton(v), nbrs);
    }
    let h = sym(&g, a, b).ok()?;
    if h.edge_count() == g.edge_count() {
        Some(Ok(()))
    } else {
        Some(Err(format!("G = {g:?}, A = {a}, B = {b}")))
    }
}

/// `Sym(A, B)` keeps a triangle-free graph triangle-free when `A` is independent.
fn sym_triangle_case(rng: &mut ChaCha8Rng) -> Option<Result<(), String>> {
    let n = rng.gen_range(2..=14);
    let g = random_triangle_free(rng, n);
    let a = random_independent(rng, &g, g.vertices());
    let b = random_subset(rng, g.vertices() - a, 0.4);
    let h = sym(&g, a, b).ok()?;
    if h.is_triangle_free() {
        Some(Ok(()))
    } else {
        Some(Err(format!("G = {g:?}, A = {a}, B = {b}")))
    }
}

/// Isolating the unmatched part of a maximum independent set keeps α.
fn isolate_case(rng: &mut ChaCha8Rng) -> Option<Result<(), String>> {
    let n = rng.gen_range(1..=12);
    let g = random_triangle_free(rng, n);
    let alpha = independence_number(&g);
    let sets = independent_sets_of_size(&g, alpha, 64);
    let a = pick(rng, &sets)?;
    let m = max_bipartite_matching(&g, g.vertices() - a, a).ok()?;
    let h = match isolate_unmatched(&g, a, &m) {
        Ok(h) => h,
        Err(e) => return Some(Err(format!("G = {g:?}, A = {a}: {e}"))),
    };
    if independence_number(&h) == alpha {
        Some(Ok(()))
    } else {
        Some(Err(format!("G = {g:?}, A = {a}")))
    }
}

/// With `A`, `B` disjoint maximum independent sets and `M` a maximum matching
/// from the rest into `B`, symmetrising `A` onto any `B' ⊆ B \ V(M)` keeps α.
fn pair_alpha_case(rng: &mut ChaCha8Rng) -> Option<Result<(), String>> {
    let n = rng.gen_range(2..=12);
    let g = random_triangle_free(rng, n);
    let alpha = independence_number(&g);
    let sets = independent_sets_of_size(&g, alpha, 256);
    let pairs: Vec<(VertexSet, VertexSet)> = sets
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| {
            sets[i + 1..]
                .iter()
                .filter(move |&&b| a.is_disjoint(b))
                .map(move |&b| (a, b))
        })
        .collect();
    let (a, b) = pick(rng, &pairs)?;
    let (a, b) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
    let x = g.vertices() - a - b;
    let m = max_bipartite_matching(&g, x, b).ok()?;
    let b_prime = random_subset(rng, b - m.covered(), 0.6);
    let h = sym(&g, a, b_prime).ok()?;
    if independence_number(&h) == alpha && h.is_triangle_free() {
        Some(Ok(()))
    } else {
        Some(Err(format!("G = {g:?}, A = {a}, B = {b}, B' = {b_prime}")))
    }
}

/// Every independent set disjoint from a maximum independent set `A` is
/// matchable into `A`.
fn matchable_case(rng: &mut ChaCha8Rng) -> Option<Result<(), String>> {
    let n = rng.gen_range(1..=13);
    let g = if rng.gen_bool(0.5) {
        random_triangle_free(rng, n)
    } else {
        {
            let p = rng.gen_range(0.1..0.6);
            random_graph(rng, n, p)
        }
    };
    let alpha = independence_number(&g);
    let sets = independent_sets_of_size(&g, alpha, 64);
    let a = pick(rng, &sets)?;
    let y = random_independent(rng, &g, g.vertices() - a);
    match is_matchable(&g, y, a) {
        Ok(true) => Some(Ok(())),
        _ => Some(Err(format!("G = {g:?}, A = {a}, Y = {y}"))),
    }
}

/// If `R' ⊆ R` is matchable into `S`, some maximum `R`-`S` matching saturates
/// `R'`; otherwise none exists.
fn saturating_case(rng: &mut ChaCha8Rng) -> Option<Result<(), String>> {
    let n = rng.gen_range(2..=14);
    let g = {
        let p = rng.gen_range(0.1..0.6);
        random_graph(rng, n, p)
    };
    let r = random_subset(rng, g.vertices(), 0.5);
    let s = g.vertices() - r;
    let r_prime = random_subset(rng, r, 0.5);
    let max = max_bipartite_matching(&g, r, s).ok()?;
    let feasible = is_matchable(&g, r_prime, s).ok()?;
    let got = saturating_max_matching(&g, r, s, r_prime).ok()?;
    let ok = match (feasible, got) {
        (true, Some(m)) => {
            m.validate(&g).is_ok()
                && m.len() == max.len()
                && m.saturates(r_prime)
                && m.r_side() == r
                && m.s_side() == s
        }
        (false, None) => true,
        _ => false,
    };
    if ok {
        Some(Ok(()))
    } else {
        Some(Err(format!("G = {g:?}, R = {r}, S = {s}, R' = {r_prime}")))
    }
}
