//! Rectilinear edge construction over the augmented node set.
//!
//! Nodes are numbered in lexicographic `(x, y)` order. Every node is joined
//! to its nearest neighbour below it on the same vertical line and to its
//! nearest neighbour left of it on the same horizontal line, so the edge set
//! is exactly the consecutive collinear pairs.

use std::collections::{BTreeMap, HashMap};

use crate::augment::DemoNodes;
use crate::model::{sort_canonical, Coord, GraphStats, Point, PointKind, RectEdge, RectGraph};

/// Builds the graph for an augmented node set. `depth` is carried into the
/// stats unchanged.
pub fn edge_construction(nodes: &BTreeMap<Coord, PointKind>, depth: usize) -> RectGraph {
    let points: Vec<Point> = nodes
        .iter()
        .enumerate()
        .map(|(id, (c, kind))| Point::new(id, *c, *kind))
        .collect();

    let mut edges = Vec::with_capacity(points.len() * 2);
    let mut last: Option<&Point> = None;
    let mut left_of_row: HashMap<i64, &Point> = HashMap::new();
    for p in &points {
        if let Some(prev) = last.filter(|prev| prev.x == p.x) {
            edges.push(RectEdge::between(prev, p));
        }
        if let Some(prev) = left_of_row.insert(p.y, p) {
            edges.push(RectEdge::between(prev, p));
        }
        last = Some(p);
    }
    sort_canonical(&mut edges);

    let stats = GraphStats {
        n_main: points.iter().filter(|p| p.is_main()).count(),
        n_total: points.len(),
        n_edges: edges.len(),
        depth,
    };
    RectGraph {
        nodes: points,
        edges,
        stats,
    }
}

/// Convenience wrapper taking the augmentation result directly.
pub fn build_graph(demo: &DemoNodes) -> RectGraph {
    edge_construction(&demo.nodes, demo.depth)
}
