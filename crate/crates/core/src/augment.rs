//! Demo (Steiner) point generation by recursive median quadrant splitting.
//!
//! Each call on `k >= 2` points picks the center `(xm, ym)` where `xm` and
//! `ym` are element `k / 2` of the sorted x and y coordinate lists. The
//! center and, for every point `p`, the two projections `(xm, p.y)` and
//! `(p.x, ym)` become demo candidates. The recursion then continues on the
//! four open quadrants around the center; points on either median line drop
//! out.

use std::collections::BTreeMap;

use crate::model::{Coord, PointKind};

/// Result of the augmentation: every main point plus the generated demo
/// points, keyed (and therefore ordered) by coordinate.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DemoNodes {
    pub nodes: BTreeMap<Coord, PointKind>,
    /// Number of nested splitting levels. A single split gives depth 1 and
    /// an input of at most one point gives depth 0.
    pub depth: usize,
}

impl DemoNodes {
    pub fn n_main(&self) -> usize {
        self.nodes
            .values()
            .filter(|k| **k == PointKind::Main)
            .count()
    }

    pub fn n_demo(&self) -> usize {
        self.nodes.len() - self.n_main()
    }
}

/// The median center of one recursion cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MedianCenter {
    pub xm: i64,
    pub ym: i64,
}

impl MedianCenter {
    /// Upper median (index `k / 2`) of each coordinate, counted with
    /// multiplicity. `points` must be non-empty.
    pub fn of(points: &[Coord]) -> Self {
        let mid = points.len() / 2;
        let mut xs: Vec<i64> = points.iter().map(|p| p.x).collect();
        let mut ys: Vec<i64> = points.iter().map(|p| p.y).collect();
        let (_, xm, _) = xs.select_nth_unstable(mid);
        let (_, ym, _) = ys.select_nth_unstable(mid);
        MedianCenter { xm: *xm, ym: *ym }
    }

    pub fn as_coord(self) -> Coord {
        Coord::new(self.xm, self.ym)
    }
}

/// Augments the main points with demo points.
///
/// `main_points` must be pairwise distinct; duplicates are merged here but
/// would skew the median (callers dedupe first).
pub fn taking_demo_nodes(main_points: &[Coord]) -> DemoNodes {
    let mut nodes = BTreeMap::new();
    for &p in main_points {
        nodes.insert(p, PointKind::Main);
    }
    let depth = split(main_points.to_vec(), &mut nodes);
    DemoNodes { nodes, depth }
}

fn add_demo(nodes: &mut BTreeMap<Coord, PointKind>, c: Coord) {
    nodes.entry(c).or_insert(PointKind::Demo);
}

// Each quadrant holds at most k / 2 points, so recursion depth is bounded by
// log2(n) and plain recursion is fine.
fn split(points: Vec<Coord>, nodes: &mut BTreeMap<Coord, PointKind>) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let center = MedianCenter::of(&points);
    let (xm, ym) = (center.xm, center.ym);
    add_demo(nodes, center.as_coord());

    let mut quadrants: [Vec<Coord>; 4] = Default::default();
    for &p in &points {
        add_demo(nodes, Coord::new(xm, p.y));
        add_demo(nodes, Coord::new(p.x, ym));
        let slot = match (p.x.cmp(&xm), p.y.cmp(&ym)) {
            (std::cmp::Ordering::Less, std::cmp::Ordering::Less) => 0,
            (std::cmp::Ordering::Less, std::cmp::Ordering::Greater) => 1,
            (std::cmp::Ordering::Greater, std::cmp::Ordering::Less) => 2,
            (std::cmp::Ordering::Greater, std::cmp::Ordering::Greater) => 3,
            _ => continue,
        };
        quadrants[slot].push(p);
    }
    drop(points);

    let mut deepest = 0;
    for q in quadrants {
        deepest = deepest.max(split(q, nodes));
    }
    deepest + 1
}
