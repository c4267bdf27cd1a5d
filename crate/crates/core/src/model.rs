//! Domain types shared by every stage of the solver.
//!
//! All coordinates are integers and every length is exact; nothing in the
//! core pipeline uses floating point.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest absolute coordinate accepted anywhere in the crate. Keeps every
/// distance and every network length comfortably inside `u64`.
pub const COORD_LIMIT: i64 = 1 << 31;

/// A bare planar coordinate. Ordered lexicographically by `(x, y)`, which is
/// the canonical node order used for id assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Coord {
    pub x: i64,
    pub y: i64,
}

impl Coord {
    pub const fn new(x: i64, y: i64) -> Self {
        Coord { x, y }
    }

    pub fn translate(self, dx: i64, dy: i64) -> Self {
        Coord::new(self.x + dx, self.y + dy)
    }

    pub fn scale(self, k: i64) -> Self {
        Coord::new(self.x * k, self.y * k)
    }

    pub fn in_range(self) -> bool {
        self.x.abs() <= COORD_LIMIT && self.y.abs() <= COORD_LIMIT
    }
}

impl From<(i64, i64)> for Coord {
    fn from((x, y): (i64, i64)) -> Self {
        Coord::new(x, y)
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Whether a node is an input terminal or a generated Steiner point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointKind {
    Main,
    Demo,
}

impl PointKind {
    /// Merges two kinds claimed for the same coordinate. Main always wins.
    pub fn merge(self, other: PointKind) -> PointKind {
        if self == PointKind::Main || other == PointKind::Main {
            PointKind::Main
        } else {
            PointKind::Demo
        }
    }
}

/// A node of a rectilinear graph: coordinate, kind, and a dense id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point {
    pub id: usize,
    pub x: i64,
    pub y: i64,
    pub kind: PointKind,
}

impl Point {
    pub fn new(id: usize, coord: Coord, kind: PointKind) -> Self {
        Point {
            id,
            x: coord.x,
            y: coord.y,
            kind,
        }
    }

    pub fn coord(&self) -> Coord {
        Coord::new(self.x, self.y)
    }

    pub fn is_main(&self) -> bool {
        self.kind == PointKind::Main
    }
}

/// `|p.x - q.x| + |p.y - q.y|`.
pub fn manhattan_distance(p: Coord, q: Coord) -> u64 {
    p.x.abs_diff(q.x) + p.y.abs_diff(q.y)
}

/// An undirected axis-parallel edge. Endpoints are stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RectEdge {
    pub u: usize,
    pub v: usize,
    pub weight: u64,
}

impl RectEdge {
    /// Builds the edge between two nodes, normalizing endpoint order and
    /// taking the Manhattan distance as weight.
    pub fn between(a: &Point, b: &Point) -> Self {
        let (u, v) = if a.id <= b.id {
            (a.id, b.id)
        } else {
            (b.id, a.id)
        };
        RectEdge {
            u,
            v,
            weight: manhattan_distance(a.coord(), b.coord()),
        }
    }

    /// Canonical processing order: `(weight, min id, max id)`.
    pub fn canonical_key(&self) -> (u64, usize, usize) {
        (self.weight, self.u.min(self.v), self.u.max(self.v))
    }

    pub fn other(&self, id: usize) -> usize {
        if self.u == id {
            self.v
        } else {
            self.u
        }
    }
}

/// Sorts edges into canonical order.
pub fn sort_canonical(edges: &mut [RectEdge]) {
    edges.sort_unstable_by_key(RectEdge::canonical_key);
}

/// Size counters reported for a constructed graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub n_main: usize,
    pub n_total: usize,
    pub n_edges: usize,
    pub depth: usize,
}

impl GraphStats {
    /// Node-count ceiling for a given recursion depth, with one extra level of
    /// slack for the median centers inserted at every split.
    pub fn node_bound(n_main: usize, depth: usize) -> usize {
        n_main + 2 * n_main * (depth + 1)
    }
}

/// Node set plus rectilinear edges.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectGraph {
    pub nodes: Vec<Point>,
    pub edges: Vec<RectEdge>,
    pub stats: GraphStats,
}

impl RectGraph {
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.nodes.len()];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }

    pub fn total_weight(&self) -> u64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    pub fn main_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.nodes.iter().filter(|p| p.is_main()).map(|p| p.id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn distance_examples() {
        assert_eq!(manhattan_distance(Coord::new(0, 0), Coord::new(3, 4)), 7);
        assert_eq!(manhattan_distance(Coord::new(5, 5), Coord::new(5, 5)), 0);
        assert_eq!(manhattan_distance(Coord::new(-2, 3), Coord::new(1, -1)), 7);
    }

    #[test]
    fn main_wins_merge() {
        assert_eq!(PointKind::Demo.merge(PointKind::Main), PointKind::Main);
        assert_eq!(PointKind::Main.merge(PointKind::Demo), PointKind::Main);
        assert_eq!(PointKind::Demo.merge(PointKind::Demo), PointKind::Demo);
    }

    #[test]
    fn edge_normalizes_endpoints() {
        let a = Point::new(4, Coord::new(0, 5), PointKind::Main);
        let b = Point::new(1, Coord::new(0, 0), PointKind::Demo);
        let e = RectEdge::between(&a, &b);
        assert_eq!((e.u, e.v, e.weight), (1, 4, 5));
        assert_eq!(e.other(1), 4);
    }

    fn coord() -> impl Strategy<Value = Coord> {
        (-1_000_000i64..1_000_000, -1_000_000i64..1_000_000).prop_map(Coord::from)
    }

    proptest! {
        #[test]
        fn distance_is_a_metric(p in coord(), q in coord(), r in coord()) {
            prop_assert_eq!(manhattan_distance(p, q), manhattan_distance(q, p));
            prop_assert!(manhattan_distance(p, r) <= manhattan_distance(p, q) + manhattan_distance(q, r));
            prop_assert_eq!(manhattan_distance(p, q) == 0, p == q);
        }

        #[test]
        fn distance_translates_and_scales(p in coord(), q in coord(), dx in -1000i64..1000, dy in -1000i64..1000, k in 0i64..50) {
            prop_assert_eq!(
                manhattan_distance(p.translate(dx, dy), q.translate(dx, dy)),
                manhattan_distance(p, q)
            );
            prop_assert_eq!(
                manhattan_distance(p.scale(k), q.scale(k)),
                k as u64 * manhattan_distance(p, q)
            );
        }
    }
}
