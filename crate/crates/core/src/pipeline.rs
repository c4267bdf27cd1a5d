//! End-to-end solver: augment, build the rectilinear graph, take its MST,
//! prune demo-only branches.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use crate::augment::taking_demo_nodes;
use crate::graph::build_graph;
use crate::model::{Coord, GraphStats, RectEdge, RectGraph};
use crate::prune::{default_root, edge_remove, Network};
use crate::spanning::{minimum_spanning_tree, SpanningError};

/// Result of one solve.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub stats: GraphStats,
    pub network: Network,
    /// Wall time of augment through prune. Input handling is excluded.
    pub elapsed: Duration,
    /// Number of repeated input points merged away before solving.
    pub duplicates_merged: usize,
}

/// Every intermediate product of a solve, for inspection and testing.
#[derive(Debug, Clone)]
pub struct SolveTrace {
    pub mains: Vec<Coord>,
    pub graph: RectGraph,
    pub tree: Vec<RectEdge>,
    pub network: Network,
    pub duplicates_merged: usize,
}

/// Sorts and dedupes the input. Returns the distinct points and the number
/// of duplicates dropped.
pub fn dedup_points(points: &[Coord]) -> (Vec<Coord>, usize) {
    let distinct: BTreeSet<Coord> = points.iter().copied().collect();
    let dropped = points.len() - distinct.len();
    (distinct.into_iter().collect(), dropped)
}

/// MST plus pruning from the default root. Used both by the full pipeline
/// and by callers that assemble a graph by hand.
pub fn solve_graph(graph: &RectGraph) -> Result<(Vec<RectEdge>, Network), SpanningError> {
    let tree = minimum_spanning_tree(graph)?;
    let network = match default_root(&graph.nodes) {
        Some(root) => edge_remove(&graph.nodes, &tree, root).expect("default root is a main node"),
        None => Network::empty(),
    };
    Ok((tree, network))
}

pub fn mmnfa_trace(points: &[Coord]) -> SolveTrace {
    let (mains, duplicates_merged) = dedup_points(points);
    debug_assert!(mains.iter().all(|p| p.in_range()));
    let demo = taking_demo_nodes(&mains);
    let graph = build_graph(&demo);
    // Each point is linked through its row and column to the median cross of
    // every cell containing it, so the augmented graph is always connected.
    let (tree, network) = solve_graph(&graph).expect("augmented graph is connected");
    SolveTrace {
        mains,
        graph,
        tree,
        network,
        duplicates_merged,
    }
}

/// Runs the full heuristic on a point list. Duplicates are merged first; zero
/// or one distinct point gives an empty network.
pub fn mmnfa(points: &[Coord]) -> SolveReport {
    let (mains, duplicates_merged) = dedup_points(points);
    let start = Instant::now();
    let trace = mmnfa_trace(&mains);
    let elapsed = start.elapsed();
    SolveReport {
        stats: trace.graph.stats,
        network: trace.network,
        elapsed,
        duplicates_merged,
    }
}
