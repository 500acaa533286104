use serde::Serialize;

use super::{ex_search, SearchProblem, SearchStatus, MAX_SEARCH_ORDER};
use crate::constructions::extremal_blowup;
use crate::error::{Error, Result};
use crate::formulas::{FormulaPoint, RangeIndex};

/// What is known about `ex(n, s)` against `⌊g(n, s)⌋` for a row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowProof {
    /// `s >= n/2`: Mantel.
    Mantel,
    /// `3n/8 <= s < n/2`: equality is a theorem.
    Theorem,
    /// `s = kn/(3k-1)`: the blow-up meets the degree bound `ns/2`.
    DegreeBoundTight,
    /// `s <= n/3`: only `ex <= ⌊ns/2⌋` is known.
    UpperOnly,
    /// `n/3 < s < 3n/8`: only `ex >= g` is known.
    LowerOnly,
}

impl RowProof {
    pub fn classify(n: usize, s: usize) -> Self {
        if 2 * s >= n {
            RowProof::Mantel
        } else if 8 * s >= 3 * n {
            RowProof::Theorem
        } else if 3 * s <= n {
            RowProof::UpperOnly
        } else if 2 * FormulaPoint::at(n as u64, s as u64).map_or(0, |p| p.g_floor)
            == (n * s) as i128
        {
            RowProof::DegreeBoundTight
        } else {
            RowProof::LowerOnly
        }
    }

    pub fn proves_equality(self) -> bool {
        matches!(
            self,
            RowProof::Mantel | RowProof::Theorem | RowProof::DegreeBoundTight
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub s: usize,
    pub ex: usize,
    pub g_floor: i128,
    pub trivial: i128,
    pub mantel: i128,
    pub range: RangeIndex,
    pub blowup_edges: Option<usize>,
    pub proof: RowProof,
    pub ex_eq_g: bool,
    pub ex_eq_trivial: bool,
    pub ex_eq_mantel: bool,
    /// The row agrees with everything known: `ex = ⌊g⌋` where proven,
    /// `ex <= ⌊g⌋` below `n/3`, and `ex >=` the blow-up where one exists.
    pub consistent: bool,
}

/// Searches every feasible `(n, s)` with `1 <= s <= n <= n_max` and compares
/// `ex` with the closed forms. Infeasible pairs are omitted.
pub fn verify_table(n_max: usize, workers: usize) -> Result<Vec<TableRow>> {
    if n_max > MAX_SEARCH_ORDER {
        return Err(Error::OutOfRange(format!(
            "n_max = {n_max} exceeds {MAX_SEARCH_ORDER}"
        )));
    }
    let mut rows = Vec::new();
    for n in 1..=n_max {
        for s in 1..=n {
            let p = SearchProblem::new(n, s)?
                .with_witnesses(false)
                .with_workers(workers);
            let report = ex_search(&p)?;
            let ex = match report.status {
                SearchStatus::Solved => report.max_edges.expect("solved reports carry a value"),
                SearchStatus::Infeasible => continue,
                SearchStatus::NodeLimit => {
                    return Err(Error::Postcondition(format!(
                        "node limit reached at ({n}, {s})"
                    )))
                }
            };
            rows.push(row(n, s, ex)?);
        }
    }
    Ok(rows)
}

pub(crate) fn row(n: usize, s: usize, ex: usize) -> Result<TableRow> {
    let f = FormulaPoint::at(n as u64, s as u64)?;
    let blowup_edges = if 3 * s > n && 2 * s < n {
        Some(extremal_blowup(n, s)?.graph.edge_count())
    } else {
        None
    };
    let proof = RowProof::classify(n, s);
    let exi = ex as i128;
    let mut consistent = blowup_edges.is_none_or(|b| ex >= b);
    consistent &= match proof {
        p if p.proves_equality() => exi == f.g_floor,
        RowProof::UpperOnly => exi <= f.g_floor,
        _ => exi <= f.trivial,
    };
    Ok(TableRow {
        n,
        s,
        ex,
        g_floor: f.g_floor,
        trivial: f.trivial,
        mantel: f.mantel,
        range: f.range,
        blowup_edges,
        proof,
        ex_eq_g: exi == f.g_floor,
        ex_eq_trivial: exi == f.trivial,
        ex_eq_mantel: exi == f.mantel,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification() {
        assert_eq!(RowProof::classify(8, 4), RowProof::Mantel);
        assert_eq!(RowProof::classify(12, 5), RowProof::Theorem);
        assert_eq!(RowProof::classify(8, 3), RowProof::Theorem);
        assert_eq!(RowProof::classify(11, 4), RowProof::DegreeBoundTight);
        assert_eq!(RowProof::classify(13, 4), RowProof::UpperOnly);
        assert_eq!(RowProof::classify(19, 7), RowProof::LowerOnly);
    }

    #[test]
    fn rows_from_known_values() {
        let r = row(10, 4, 20).unwrap();
        assert!(r.consistent && r.ex_eq_g);
        assert_eq!(r.blowup_edges, Some(20));
        let r = row(11, 4, 22).unwrap();
        assert!(r.consistent && r.ex_eq_trivial);
        assert!(!row(9, 4, 16).unwrap().consistent);
    }

    #[test]
    fn small_table() {
        let rows = verify_table(7, 0).unwrap();
        assert!(rows.iter().all(|r| r.consistent), "{rows:#?}");
        let at = |n, s| rows.iter().find(|r| r.n == n && r.s == s).map(|r| r.ex);
        assert_eq!(at(5, 2), Some(5));
        assert_eq!(at(7, 3), Some(10));
        assert_eq!(at(6, 2), None);
        for n in 1..=7 {
            assert_eq!(at(n, n), Some(n * n / 4));
            for s in 1..n {
                if let (Some(a), Some(b)) = (at(n, s), at(n, s + 1)) {
                    assert!(a <= b);
                }
            }
        }
    }
}
