//! Fixtures shared by the benchmarks.

use trifree::{extremal_blowup, Graph};

/// Extremal blow-ups at a few representative sizes.
pub fn blowup_fixtures() -> Vec<(String, Graph)> {
    [(12, 5), (13, 5), (20, 8), (29, 11)]
        .into_iter()
        .map(|(n, s)| {
            let g = extremal_blowup(n, s).expect("n/3 < s < n/2").graph;
            (format!("blowup_{n}_{s}"), g)
        })
        .collect()
}
