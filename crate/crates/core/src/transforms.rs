//! Generalised Zykov symmetrisation and the pipelines built from it.
//!
//! `Sym(A, B)` deletes every edge meeting `B` and then joins `A` to `B`
//! completely. With `A` independent it cannot create triangles, and when
//! `|A|` bounds the degrees in `B` it cannot lose edges. Combined with maximum
//! matchings it also preserves the independence number, which is what the
//! pair and triple pipelines below rely on. Every precondition is checked
//! with the exact solvers, and every stage re-verifies edge count,
//! triangle-freeness and independence number.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solvers::{
    independence_number, independent_sets_of_size, max_bipartite_matching, saturating_max_matching,
    Matching,
};

/// `E' = (E \ {e : e ∩ B ≠ ∅}) ∪ K(A, B)` on the same vertex set.
pub fn sym(g: &Graph, a: VertexSet, b: VertexSet) -> Result<Graph> {
    g.check_set(a)?;
    g.check_set(b)?;
    if !a.is_disjoint(b) {
        return Err(Error::Overlap(a.to_string(), b.to_string()));
    }
    Ok(g.isolate(b).join(a, b))
}

/// Deletes all edges at the vertices of `a` left uncovered by `m`, where `a`
/// is a maximum independent set and `m` a maximum matching from `V \ a` to `a`.
pub fn isolate_unmatched(g: &Graph, a: VertexSet, m: &Matching) -> Result<Graph> {
    g.check_set(a)?;
    if !g.is_independent(a) {
        return Err(Error::Precondition(format!("{a} is not independent")));
    }
    let alpha = independence_number(g);
    if a.len() != alpha {
        return Err(Error::Precondition(format!(
            "|{a}| = {} but the independence number is {alpha}",
            a.len()
        )));
    }
    let rest = g.vertices() - a;
    if m.r_side() != rest || m.s_side() != a {
        return Err(Error::Precondition(format!(
            "matching must run from {rest} to {a}"
        )));
    }
    m.validate(g)?;
    let best = max_bipartite_matching(g, rest, a)?.len();
    if m.len() != best {
        return Err(Error::Precondition(format!(
            "matching has size {} but the maximum is {best}",
            m.len()
        )));
    }
    Ok(g.isolate(a - m.covered()))
}

/// Edge count, independence number and triangle-freeness after one stage.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StageRecord {
    pub stage: &'static str,
    pub edges: usize,
    pub alpha: usize,
    pub triangle_free: bool,
}

impl StageRecord {
    fn of(stage: &'static str, g: &Graph) -> Self {
        StageRecord {
            stage,
            edges: g.edge_count(),
            alpha: independence_number(g),
            triangle_free: g.is_triangle_free(),
        }
    }
}

/// Appends a stage and fails if it lost edges, gained a triangle or changed
/// the independence number.
fn push_stage(stages: &mut Vec<StageRecord>, stage: &'static str, g: &Graph) -> Result<()> {
    let rec = StageRecord::of(stage, g);
    let prev = stages.last().expect("initial stage recorded");
    if rec.edges < prev.edges || rec.alpha != prev.alpha || !rec.triangle_free {
        return Err(Error::Postcondition(format!(
            "stage {stage}: {prev:?} -> {rec:?}"
        )));
    }
    stages.push(rec);
    Ok(())
}

/// Two disjoint maximum independent sets `A`, `B` with `A' ⊆ B`, `B' ⊆ A`,
/// `|A'| = |B'| = 3s - n`, and `K(A', A) ∪ K(B', B)` present.
#[derive(Clone, Debug, Serialize)]
pub struct PairStructure {
    #[serde(skip)]
    pub graph: Graph,
    pub a: VertexSet,
    pub b: VertexSet,
    pub a_prime: VertexSet,
    pub b_prime: VertexSet,
    pub stages: Vec<StageRecord>,
}

impl PairStructure {
    pub fn check(&self) -> Result<()> {
        let g = &self.graph;
        let s = self.a.len();
        let size = (3 * s).saturating_sub(g.order());
        let ok = self.a.len() == self.b.len()
            && self.a.is_disjoint(self.b)
            && g.is_independent(self.a)
            && g.is_independent(self.b)
            && self.a_prime.is_subset(self.b)
            && self.b_prime.is_subset(self.a)
            && self.a_prime.len() == size
            && self.b_prime.len() == size
            && complete_between(g, self.a_prime, self.a)
            && complete_between(g, self.b_prime, self.b);
        if ok {
            Ok(())
        } else {
            Err(Error::Postcondition(format!(
                "pair structure invariants fail: {self:?}"
            )))
        }
    }
}

/// Three maximum independent sets with `A' ⊆ B ∩ C`, `B' ⊆ A`, `C' ⊆ A \ B'`
/// of size `3s - n` and `K(A',A) ∪ K(B',B) ∪ K(C',C)` present.
#[derive(Clone, Debug, Serialize)]
pub struct TripleStructure {
    #[serde(skip)]
    pub graph: Graph,
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
    pub a_prime: VertexSet,
    pub b_prime: VertexSet,
    pub c_prime: VertexSet,
    pub stages: Vec<StageRecord>,
}

impl TripleStructure {
    pub fn check(&self) -> Result<()> {
        let g = &self.graph;
        let s = self.a.len();
        let size = (3 * s).saturating_sub(g.order());
        let ok = [self.a, self.b, self.c]
            .iter()
            .all(|&x| x.len() == s && g.is_independent(x))
            && self.a.is_disjoint(self.b)
            && self.a.is_disjoint(self.c)
            && self.a_prime.is_subset(self.b & self.c)
            && self.b_prime.is_subset(self.a)
            && self.c_prime.is_subset(self.a - self.b_prime)
            && [self.a_prime, self.b_prime, self.c_prime]
                .iter()
                .all(|x| x.len() == size)
            && complete_between(g, self.a_prime, self.a)
            && complete_between(g, self.b_prime, self.b)
            && complete_between(g, self.c_prime, self.c);
        if ok {
            Ok(())
        } else {
            Err(Error::Postcondition(format!(
                "triple structure invariants fail: {self:?}"
            )))
        }
    }
}

fn complete_between(g: &Graph, x: VertexSet, y: VertexSet) -> bool {
    x.iter().all(|v| y.is_subset(g.neighbors(v)))
}

fn require_base(g: &Graph, s: usize) -> Result<()> {
    if !g.is_triangle_free() {
        return Err(Error::Precondition("graph contains a triangle".into()));
    }
    let alpha = independence_number(g);
    if alpha != s {
        return Err(Error::Precondition(format!(
            "independence number is {alpha}, expected {s}"
        )));
    }
    Ok(())
}

fn require_max_independent(g: &Graph, x: VertexSet, s: usize, name: &str) -> Result<()> {
    g.check_set(x)?;
    if x.len() != s || !g.is_independent(x) {
        return Err(Error::Precondition(format!(
            "{name} = {x} must be an independent set of size {s}"
        )));
    }
    Ok(())
}

/// The lexicographically least pair `(A, B)` of disjoint independent
/// `s`-sets, in the order of [`independent_sets_of_size`].
pub fn first_disjoint_pair(g: &Graph, s: usize) -> Option<(VertexSet, VertexSet)> {
    let sets = independent_sets_of_size(g, s, usize::MAX);
    sets.iter()
        .find_map(|&a| sets.iter().find(|&&b| b.is_disjoint(a)).map(|&b| (a, b)))
}

/// Symmetrises `g` towards a [`PairStructure`], choosing `A` and `B` as the
/// lexicographically least pair of disjoint independent `s`-sets.
pub fn enforce_pair_structure(g: &Graph, s: usize) -> Result<PairStructure> {
    require_base(g, s)?;
    let (a, b) = first_disjoint_pair(g, s).ok_or_else(|| {
        Error::Precondition(format!("no two disjoint independent sets of size {s}"))
    })?;
    enforce_pair_structure_with(g, a, b)
}

/// As [`enforce_pair_structure`] with caller-chosen `A` and `B`.
///
/// With `X = V \ (A ∪ B)` and maximum matchings `M_A: X → A`, `M_B: X → B`,
/// takes `A' ⊆ B \ V(M_B)` and `B' ⊆ A \ V(M_A)` (lowest `3s - n` vertices)
/// and applies `Sym(A, A')` followed by `Sym(B, B')`.
pub fn enforce_pair_structure_with(g: &Graph, a: VertexSet, b: VertexSet) -> Result<PairStructure> {
    let s = a.len();
    require_base(g, s)?;
    require_max_independent(g, a, s, "A")?;
    require_max_independent(g, b, s, "B")?;
    if !a.is_disjoint(b) {
        return Err(Error::Overlap(a.to_string(), b.to_string()));
    }
    let size = (3 * s).saturating_sub(g.order());
    let x = g.vertices() - a - b;
    let m_a = max_bipartite_matching(g, x, a)?;
    let m_b = max_bipartite_matching(g, x, b)?;
    let a_prime = (b - m_b.covered()).lowest(size);
    let b_prime = (a - m_a.covered()).lowest(size);

    let mut stages = vec![StageRecord::of("input", g)];
    let g1 = sym(g, a, a_prime)?;
    push_stage(&mut stages, "sym(A, A')", &g1)?;
    let g2 = sym(&g1, b, b_prime)?;
    push_stage(&mut stages, "sym(B, B')", &g2)?;

    let out = PairStructure {
        graph: g2,
        a,
        b,
        a_prime,
        b_prime,
        stages,
    };
    out.check()?;
    Ok(out)
}

/// Three-stage symmetrisation towards a [`TripleStructure`]:
///
/// 1. `M_B` maximum from `V \ (A ∪ B)` into `A`; `G1 = Sym(B, A \ V(M_B))`,
///    `B'` the lowest `3s - n` vertices of `A \ V(M_B)`.
/// 2. `M_C` maximum from `V \ (A ∪ C)` into `A` covering `B'`;
///    `G2 = Sym(C, A \ V(M_C))`, `C' ⊆ A \ V(M_C)`.
/// 3. `M_A` maximum from `V \ (A ∪ B)` into `B`; `G3 = Sym(A, B \ V(M_A))`,
///    `A' ⊆ B \ V(M_A)`, which lands inside `C` because `C ∪ A'` is independent.
pub fn enforce_triple_structure(
    g: &Graph,
    a: VertexSet,
    b: VertexSet,
    c: VertexSet,
) -> Result<TripleStructure> {
    let s = a.len();
    let n = g.order();
    require_base(g, s)?;
    require_max_independent(g, a, s, "A")?;
    require_max_independent(g, b, s, "B")?;
    require_max_independent(g, c, s, "C")?;
    if !a.is_disjoint(b) {
        return Err(Error::Overlap(a.to_string(), b.to_string()));
    }
    if !a.is_disjoint(c) {
        return Err(Error::Overlap(a.to_string(), c.to_string()));
    }
    if (b & c).len() + 2 * s > n {
        return Err(Error::Precondition(format!(
            "|B ∩ C| = {} exceeds n - 2s = {}",
            (b & c).len(),
            n - 2 * s
        )));
    }
    let size = (3 * s).saturating_sub(n);
    let all = g.vertices();
    let mut stages = vec![StageRecord::of("input", g)];

    let m_b = max_bipartite_matching(g, all - a - b, a)?;
    let free_b = a - m_b.covered();
    let g1 = sym(g, b, free_b)?;
    push_stage(&mut stages, "sym(B, A \\ V(M_B))", &g1)?;
    let b_prime = free_b.lowest(size);

    let m_c = saturating_max_matching(&g1, a, all - a - c, b_prime)?.ok_or_else(|| {
        Error::Postcondition(format!("B' = {b_prime} is not matchable into V \\ (A ∪ C)"))
    })?;
    let free_c = a - m_c.covered();
    let g2 = sym(&g1, c, free_c)?;
    push_stage(&mut stages, "sym(C, A \\ V(M_C))", &g2)?;
    let c_prime = free_c.lowest(size);

    let m_a = max_bipartite_matching(&g2, all - a - b, b)?;
    let free_a = b - m_a.covered();
    let g3 = sym(&g2, a, free_a)?;
    push_stage(&mut stages, "sym(A, B \\ V(M_A))", &g3)?;
    let a_prime = free_a.lowest(size);

    let out = TripleStructure {
        graph: g3,
        a,
        b,
        c,
        a_prime,
        b_prime,
        c_prime,
        stages,
    };
    out.check()?;
    Ok(out)
}
