//! Exact computation of domination numbers and synchronous bondage numbers
//! on small graphs.
//!
//! The synchronous bondage number `Sb_k(G)` is the minimum number of edges
//! whose removal raises the domination number of `G` by exactly `k`; `Sb_1`
//! is the classical bondage number. Everything here is exact: domination via
//! branch and bound over closed neighborhoods, bondage via size-ordered edge
//! subset search, and every closed-form family value cross-checkable against
//! those brute-force solvers through the verification suites.

pub mod bondage;
pub mod budget;
pub mod domination;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod suites;

pub use bondage::{
    all_min_bondage_sets, bondage_number, feasible_increase, greedy_iterative_moves,
    max_sbk_over_nm, mbg, min_bondage_over, sb_k, sb_table, search_sync_advantage,
    stepwise_check, MaxSbkReport, MoveLedger, MoveStep, SbResult, StepwiseReport,
    SyncAdvantageFinding, SyncAdvantageScan,
};
pub use budget::{Budget, BudgetUsage, Meter};
pub use domination::{
    all_min_dominating_sets, domination_number, forced_pendant_vertices, is_dominating,
    pendant_partition, DominationResult,
};
pub use enumerate::{
    all_pairs, enumerate_labeled_graphs, graphs_with_edge_count, random_connected_graph,
    random_graph, random_tree, DEFAULT_ENUMERATION_CAP,
};
pub use error::{Error, Result};
pub use families::{
    bondage_path_formula, disjoint_compose_sbk, induced_2p2_bound, induced_p3_bound, pendant_sbk,
    sb2_path_formula, sbk_complete_formula, sbk_cycle_formula, sbk_path_formula, tree_bounds,
    vizing_extremal_graph, vizing_max_edges, BoundReport, PendantSbk,
};
pub use graph::{generate, Component, EdgeSet, FamilySpec, Graph, VertexSet, MAX_ORDER};
pub use io::{format_edge_list, parse_edge_list, parse_graph6, to_graph6};
pub use suites::{run_suite, SuiteFailure, SuiteName, SuiteParams, SuiteReport};
