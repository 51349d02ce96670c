//! Dual graphs of the locus Z of stable curves whose normalization has a
//! single rational cycle, its decomposition by partitions of g-1, and edge
//! contraction.

mod closure;
mod enumerate;
mod fixtures;
mod graph;
mod partition;

pub use closure::{
    verify_closure_lemma, ClosureReport, Outcome, OutcomeCounts, CLOSURE_MAX_CYCLE_LEN,
    CLOSURE_MAX_TREE_DEPTH,
};
pub use enumerate::{enumerate_cycle_graphs, tree_shapes, z_graphs, CycleStability, TreeShape};
pub use fixtures::{figure_one_left, figure_one_right};
pub use graph::{AttachedTree, CanonicalKey, EdgeType, StableGraph, XiGraph};
pub use partition::{is_refinement, is_strict_refinement, partitions_of, xi_domain_dimension};
