//! Andrásfai graphs, blow-ups, and recognising blow-up structure.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::formulas::{range_index, RangeIndex};
use crate::graph::{bit, Graph, VertexSet, MAX_ORDER};

/// Parameters of the Andrásfai graph `Γ_k`: the Cayley graph on `Z/(3k-1)`
/// with connection set `{k, ..., 2k-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AndrasfaiSpec {
    k: usize,
}

impl AndrasfaiSpec {
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::OutOfRange("Andrásfai graphs need k >= 1".into()));
        }
        if 3 * k - 1 > MAX_ORDER {
            return Err(Error::OrderTooLarge(3 * k - 1));
        }
        Ok(AndrasfaiSpec { k })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        3 * self.k - 1
    }

    pub fn connection_set(&self) -> VertexSet {
        (self.k..2 * self.k).collect()
    }

    pub fn build(&self) -> Graph {
        let n = self.order();
        let conn = self.connection_set();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| conn.contains((i + n - j) % n))
                    .fold(0u64, |acc, j| acc | bit(j))
            })
            .collect();
        Graph::from_rows_unchecked(rows)
    }
}

/// `Γ_k`: vertices `0..3k-1`, `i ~ j` iff `(i - j) mod (3k-1)` lies in `{k, ..., 2k-1}`.
pub fn andrasfai(k: usize) -> Result<Graph> {
    Ok(AndrasfaiSpec::new(k)?.build())
}

/// A template graph with a class size for each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupWeights {
    template: Graph,
    weights: Vec<usize>,
}

impl BlowupWeights {
    pub fn new(template: Graph, weights: Vec<usize>) -> Result<Self> {
        if weights.len() != template.order() {
            return Err(Error::Precondition(format!(
                "{} weights for a template of order {}",
                weights.len(),
                template.order()
            )));
        }
        let total: usize = weights.iter().sum();
        if total > MAX_ORDER {
            return Err(Error::OrderTooLarge(total));
        }
        Ok(BlowupWeights { template, weights })
    }

    pub fn template(&self) -> &Graph {
        &self.template
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn total(&self) -> usize {
        self.weights.iter().sum()
    }

    /// Vertex ranges of the classes in the blown-up graph.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut start = 0;
        self.weights
            .iter()
            .map(|&w| {
                let c = (start..start + w).collect();
                start += w;
                c
            })
            .collect()
    }

    /// `Σ_{ij ∈ E(T)} w_i w_j`.
    pub fn edge_count(&self) -> usize {
        self.template
            .edges()
            .map(|(i, j)| self.weights[i] * self.weights[j])
            .sum()
    }
}

/// Replaces template vertex `i` by an independent class of `w_i` vertices
/// (numbered consecutively in template order) and joins classes of adjacent
/// template vertices completely.
pub fn blow_up(spec: &BlowupWeights) -> Graph {
    let classes = spec.classes();
    let mut rows = vec![0u64; spec.total()];
    for (i, class) in classes.iter().enumerate() {
        let nbrs = spec
            .template
            .neighbors(i)
            .iter()
            .fold(VertexSet::EMPTY, |acc, j| acc | classes[j]);
        for v in *class {
            rows[v] = nbrs.bits();
        }
    }
    Graph::from_rows_unchecked(rows)
}

/// Output of [`extremal_blowup`].
#[derive(Clone, Debug)]
pub struct ExtremalBlowup {
    pub graph: Graph,
    pub k: usize,
    pub weights: Vec<usize>,
}

/// The blow-up of `Γ_k` with `g_k(n, s)` edges, for `n/3 < s < n/2`: vertices
/// `1`, `k` and `2k` get `(k-1)n - (3k-4)s` copies, all others `3s - n`.
pub fn extremal_blowup(n: usize, s: usize) -> Result<ExtremalBlowup> {
    if !(3 * s > n && 2 * s < n) {
        return Err(Error::OutOfRange(format!(
            "extremal blow-ups need n/3 < s < n/2, got n = {n}, s = {s}"
        )));
    }
    let k = match range_index(n as u64, s as u64)? {
        RangeIndex::Band(k) => k as usize,
        other => unreachable!("strict band classified as {other}"),
    };
    let small = (k - 1) * n - (3 * k - 4) * s;
    let large = 3 * s - n;
    let template = andrasfai(k)?;
    let weights: Vec<usize> = (0..template.order())
        .map(|v| {
            if v == 1 || v == k || v == 2 * k {
                small
            } else {
                large
            }
        })
        .collect();
    let spec = BlowupWeights::new(template, weights.clone())?;
    Ok(ExtremalBlowup {
        graph: blow_up(&spec),
        k,
        weights,
    })
}

/// Result of [`twin_contraction`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwinContraction {
    #[serde(skip)]
    pub graph: Graph,
    /// Class of each contracted vertex, ordered by smallest member.
    pub classes: Vec<VertexSet>,
}

impl TwinContraction {
    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.len()).collect()
    }
}

/// Merges vertices with identical open neighbourhoods until none remain,
/// always merging the lexicographically least eligible pair `(u, v)` (the
/// survivor is `u`). The contracted graph is the subgraph induced on the
/// surviving vertices.
pub fn twin_contraction(g: &Graph) -> TwinContraction {
    contract_twins_by(g, |pairs| pairs[0])
}

/// Twin contraction with a caller-chosen merge order; `pick` selects one of
/// the currently eligible pairs.
pub(crate) fn contract_twins_by(
    g: &Graph,
    mut pick: impl FnMut(&[(usize, usize)]) -> (usize, usize),
) -> TwinContraction {
    let rows = g.rows();
    let mut alive = g.vertices();
    let mut class: Vec<VertexSet> = (0..g.order()).map(VertexSet::singleton).collect();
    loop {
        let pairs: Vec<(usize, usize)> = alive
            .iter()
            .flat_map(|u| {
                alive
                    .iter()
                    .filter(move |&v| v > u)
                    .filter(move |&v| rows[u] & alive.bits() == rows[v] & alive.bits())
                    .map(move |v| (u, v))
            })
            .collect();
        if pairs.is_empty() {
            break;
        }
        let (u, v) = pick(&pairs);
        class[u] = class[u] | class[v];
        alive.remove(v);
    }
    let mut classes: Vec<VertexSet> = alive.iter().map(|u| class[u]).collect();
    classes.sort_by_key(|c| c.first());
    let reps: VertexSet = classes.iter().filter_map(|c| c.first()).collect();
    TwinContraction {
        graph: g.induced_subgraph(reps),
        classes,
    }
}

/// Finds weights `w` over `template` with `blow_up(template, w) ≅ g`.
///
/// Twins of `g` may always share a class, so it suffices to embed the
/// twin-free contraction of `g` into `template` as an induced subgraph; the
/// weight of each image vertex is the size of the corresponding twin class.
pub fn is_blowup_of(g: &Graph, template: &Graph) -> Result<Option<Vec<usize>>> {
    if template.order() > 16 {
        return Err(Error::OutOfRange(format!(
            "template order {} exceeds 16",
            template.order()
        )));
    }
    let tc = twin_contraction(g);
    let h = &tc.graph;
    if h.order() > template.order() {
        return Ok(None);
    }
    let Some(map) = induced_embedding(h, template) else {
        return Ok(None);
    };
    let mut weights = vec![0; template.order()];
    for (i, &t) in map.iter().enumerate() {
        weights[t] = tc.classes[i].len();
    }
    Ok(Some(weights))
}

/// Injective `f: V(h) -> V(t)` with `uv ∈ E(h) ⟺ f(u)f(v) ∈ E(t)`.
fn induced_embedding(h: &Graph, t: &Graph) -> Option<Vec<usize>> {
    fn extend(h: &Graph, t: &Graph, map: &mut Vec<usize>, used: u64) -> bool {
        let i = map.len();
        if i == h.order() {
            return true;
        }
        for cand in VertexSet::from_bits(t.vertices().bits() & !used) {
            if t.degree(cand) < h.degree(i) {
                continue;
            }
            let ok = map
                .iter()
                .enumerate()
                .all(|(j, &img)| h.has_edge(i, j) == t.has_edge(cand, img));
            if ok {
                map.push(cand);
                if extend(h, t, map, used | bit(cand)) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    let mut map = Vec::with_capacity(h.order());
    extend(h, t, &mut map, 0).then_some(map)
}
