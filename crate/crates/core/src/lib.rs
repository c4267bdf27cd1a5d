//! Approximate minimum Manhattan networks.
//!
//! The heuristic adds Steiner ("demo") points by recursive median splits,
//! joins collinear neighbours into a rectilinear graph, takes its minimum
//! spanning tree, and trims branches that reach no input point. An exact
//! branch-and-bound solver for tiny instances and an all-pairs verifier
//! measure how good the result is.

pub mod augment;
pub mod datagen;
pub mod exact;
pub mod graph;
pub mod model;
pub mod pipeline;
pub mod prune;
pub mod spanning;
pub mod verify;

pub use augment::{taking_demo_nodes, DemoNodes, MedianCenter};
pub use datagen::{generate, GenError, GenSpec, DEFAULT_COORD_MAX};
pub use exact::{exact_mmn, ExactError, ExactSolution, HananGrid, DEFAULT_BUDGET};
pub use graph::{build_graph, edge_construction};
pub use model::{manhattan_distance, Coord, GraphStats, Point, PointKind, RectEdge, RectGraph};
pub use pipeline::{mmnfa, mmnfa_trace, SolveReport, SolveTrace};
pub use prune::{edge_remove, Network, PruneError};
pub use spanning::{kruskal, minimum_spanning_tree, DisjointSets, SpanningError};
pub use verify::{
    run_case_scenarios, verify_network, Fraction, ScenarioFixture, ScenarioOutcome, VerifyError,
    VerifyReport,
};
