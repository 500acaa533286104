//! Triangle-free graphs with bounded independence number.
//!
//! The crate computes and checks the Ramsey–Turán function `ex(n, s)`: the
//! largest number of edges in a triangle-free graph on `n` vertices whose
//! independence number is at most `s`. It provides
//!
//! * bitset graphs with graph6 I/O and canonical labelling ([`graph`]),
//! * exact independence numbers and bipartite matchings ([`solvers`]),
//! * Andrásfai graphs, blow-ups and twin contraction ([`constructions`]),
//! * the closed forms `g_k`, `g` and `f` in exact arithmetic ([`formulas`]),
//! * Zykov-type symmetrisation and its pipelines ([`transforms`]),
//! * structural auditors and property suites ([`validation`]),
//! * an exhaustive isomorph-free search for `ex(n, s)` ([`search`]).
//!
//! ```
//! use trifree::{andrasfai, independence_number};
//!
//! let wagner = andrasfai(3).unwrap();
//! assert_eq!(wagner.order(), 8);
//! assert!(wagner.is_triangle_free());
//! assert_eq!(independence_number(&wagner), 3);
//! ```

pub mod constructions;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod search;
pub mod solvers;
pub mod transforms;
pub mod validation;

pub use constructions::{
    andrasfai, blow_up, extremal_blowup, is_blowup_of, twin_contraction, AndrasfaiSpec,
    BlowupWeights, ExtremalBlowup, TwinContraction,
};
pub use error::{Error, Result};
pub use formulas::{FormulaPoint, RangeIndex, Rational};
pub use graph::{
    canonical_form, canonical_labeling, decode_graph6, encode_graph6, CanonicalCode, Graph,
    VertexSet, MAX_ORDER,
};
pub use search::{ex_search, verify_table, SearchProblem, SearchReport, SearchStatus, TableRow};
pub use solvers::{
    independence_number, is_matchable, max_bipartite_matching, maximum_independent_set,
    saturating_max_matching, Matching,
};
pub use transforms::{
    enforce_pair_structure, enforce_triple_structure, isolate_unmatched, sym, PairStructure,
    TripleStructure,
};
pub use validation::{extremal_family_audit, prop32_audit, AuditReport};
