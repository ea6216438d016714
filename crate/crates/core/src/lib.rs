//! Circuits in prescribed homology classes of finite multigraphs.
//!
//! The crate detects direction-consistent circuits with a given
//! abelianization, counts them exactly, finds shortest circuits in a
//! homology class when the support is disconnected, and solves the
//! one-carrier transportation routing problem on simple graphs. Every solver
//! ships with a brute-force oracle used by the test suites.

pub mod counting;
pub mod error;
pub mod fixtures;
pub mod flow;
pub mod graph;
pub mod hierholzer;
pub mod homology;
pub mod hscdp;
pub mod io;
pub mod random;
pub mod steiner;
pub mod trp;

pub use counting::{
    count_dcc, enumerate_circuits, for_each_circuit, reduced_determinant, weighted_laplacian,
    CountResult,
};
pub use error::{Error, Result};
pub use graph::{
    contract, double, Circuit, Contraction, Dart, Doubling, Edge, EdgeId, Graph, VertexId, Walk,
    Weight,
};
pub use hierholzer::{detect_dcc, detect_dcc_with, DetectOptions};
pub use homology::{
    abelianize, chain_leq, cycle_basis, is_circulation, l1_norm, support_info, Chain, SupportInfo,
};
pub use hscdp::{solve_hscdp, solve_hscdp_with, tree_tour, HscdpOptions, HscdpSolution};
pub use steiner::{steiner_tree, SteinerTree};
pub use trp::{
    brute_force_trp, lift_task, min_circulation_above, solve_trp, TaskMatrix, TrpSolution,
};
