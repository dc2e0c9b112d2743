//! Exact computations around anti-Ramsey numbers of graph families.
//!
//! The crate covers small-graph kernels (chromatic number, subgraph search,
//! canonical forms), the decomposition-family machinery for families of
//! forbidden graphs, edge colourings of complete graphs with rainbow
//! detection, explicit extremal colourings, closed-form counts, and an exact
//! branch-and-bound oracle for `AR(n, F)` at small `n`.

pub mod canon;
pub mod chromatic;
pub mod coloring;
pub mod constructions;
pub mod counts;
pub mod decomposition;
pub mod error;
pub mod family;
pub mod formulas;
pub mod gadget;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod qmax;
pub mod rainbow;
pub mod subgraph;
pub mod verify;

pub use canon::{are_isomorphic, canonical_form, canonical_graph, CanonicalForm};
pub use chromatic::chromatic_number;
pub use coloring::{representing_graph, representing_graphs, Coloring, RepresentingGraph};
pub use decomposition::{
    decomposition_family, decomposition_remainder, decomposition_sequence, k5_determination_check,
    DecompositionSequence, SequenceOptions,
};
pub use error::{Error, Result};
pub use family::{all_graphs, GraphFamily};
pub use formulas::{Formula, FormulaParams};
pub use graph::Graph;
pub use oracle::{ar_cross_check, ar_exact, ar_lower_from_construction, ArResult};
pub use qmax::max_extra_colors;
pub use rainbow::{find_rainbow_copy, has_rainbow_copy, is_family_free};
pub use subgraph::{contains_subgraph, find_subgraph, for_each_embedding};
pub use verify::{verify_theorem, Theorem, TheoremReport};
