//! Exact minimum Manhattan network for tiny instances.
//!
//! The search runs over subsets of Hanan grid segments. A node of the search
//! tree fixes some segments as included and some as excluded. For every
//! terminal pair a monotone dynamic program over the pair's bounding box
//! gives the cheapest completion (included segments cost nothing, excluded
//! ones are unusable); the largest such completion cost, added to the weight
//! already included, bounds the node from below.
//!
//! Branching takes an unsatisfied pair and the undecided segments that leave
//! the region already reachable from its first terminal by included monotone
//! paths. Any feasible completion uses at least one of them, so branch `i`
//! includes the `i`-th and excludes the earlier ones. The branches partition
//! the remaining space.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{Coord, Point, PointKind, RectEdge};
use crate::pipeline::dedup_points;
use crate::prune::Network;

pub const MAX_TERMINALS: usize = 8;
pub const MAX_GRID_NODES: usize = 64;
pub const DEFAULT_BUDGET: u64 = 100_000_000;

const INF: u64 = u64::MAX / 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("instance too large for exact search: {terminals} terminals, {grid_nodes} grid nodes (limits {MAX_TERMINALS} and {MAX_GRID_NODES})")]
    TooLarge { terminals: usize, grid_nodes: usize },
    #[error("search exceeded the budget of {budget} node expansions")]
    BudgetExceeded { budget: u64 },
}

/// The grid spanned by the distinct x and y coordinates of the terminals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HananGrid {
    pub xs: Vec<i64>,
    pub ys: Vec<i64>,
    /// Grid intersections, indexed `i * ys.len() + j`.
    pub nodes: Vec<Coord>,
    /// Unit segments between adjacent intersections, as `(a, b, weight)`
    /// with `a < b` node indices.
    pub segments: Vec<(usize, usize, u64)>,
}

impl HananGrid {
    pub fn new(points: &[Coord]) -> Self {
        let mut xs: Vec<i64> = points.iter().map(|p| p.x).collect();
        let mut ys: Vec<i64> = points.iter().map(|p| p.y).collect();
        xs.sort_unstable();
        xs.dedup();
        ys.sort_unstable();
        ys.dedup();
        let (nx, ny) = (xs.len(), ys.len());
        let nodes = xs
            .iter()
            .flat_map(|&x| ys.iter().map(move |&y| Coord::new(x, y)))
            .collect();
        let mut segments = Vec::new();
        for i in 0..nx {
            for j in 0..ny {
                let a = i * ny + j;
                if i + 1 < nx {
                    segments.push((a, a + ny, (xs[i + 1] - xs[i]) as u64));
                }
                if j + 1 < ny {
                    segments.push((a, a + 1, (ys[j + 1] - ys[j]) as u64));
                }
            }
        }
        HananGrid {
            xs,
            ys,
            nodes,
            segments,
        }
    }

    pub fn index_of(&self, c: Coord) -> Option<usize> {
        let i = self.xs.binary_search(&c.x).ok()?;
        let j = self.ys.binary_search(&c.y).ok()?;
        Some(i * self.ys.len() + j)
    }
}

/// Optimal length plus a witness network achieving it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactSolution {
    pub length: u64,
    pub network: Network,
    pub expansions: u64,
}

/// Segment status masks. At most 2 * 8 * 7 = 112 segments, so a `u128`
/// holds every segment of an admissible grid.
#[derive(Debug, Clone, Copy, Default)]
struct Decision {
    included: u128,
    excluded: u128,
    weight: u64,
}

/// A terminal pair, in grid coordinates.
struct Pair {
    from: (usize, usize),
    to: (usize, usize),
}

struct Search<'a> {
    grid: &'a HananGrid,
    ny: usize,
    /// Segment id for the step from node `a` to the node right of it
    /// (`horiz`) or above it (`vert`).
    horiz: Vec<Option<usize>>,
    vert: Vec<Option<usize>>,
    pairs: Vec<Pair>,
    best: u64,
    best_set: u128,
    expansions: u64,
    budget: u64,
}

/// Per-pair analysis under the current decision.
struct PairEval {
    /// Cheapest completion cost, `INF` if infeasible.
    cost: u64,
    /// Undecided segments leaving the zero-cost reachable region, with the
    /// cheapest completion through each.
    frontier: Vec<(usize, u64)>,
}

impl<'a> Search<'a> {
    fn new(grid: &'a HananGrid, terminals: &[Coord], budget: u64) -> Self {
        let ny = grid.ys.len();
        let mut horiz = vec![None; grid.nodes.len()];
        let mut vert = vec![None; grid.nodes.len()];
        for (s, &(a, b, _)) in grid.segments.iter().enumerate() {
            if b == a + ny {
                horiz[a] = Some(s);
            } else {
                vert[a] = Some(s);
            }
        }
        let cell = |c: &Coord| {
            let k = grid.index_of(*c).expect("terminal on grid");
            (k / ny, k % ny)
        };
        let mut pairs = Vec::new();
        for (i, p) in terminals.iter().enumerate() {
            for q in &terminals[i + 1..] {
                pairs.push(Pair {
                    from: cell(p),
                    to: cell(q),
                });
            }
        }
        Search {
            grid,
            ny,
            horiz,
            vert,
            pairs,
            best: INF,
            best_set: 0,
            expansions: 0,
            budget,
        }
    }

    fn seg_cost(&self, d: &Decision, s: usize) -> u64 {
        let bit = 1u128 << s;
        if d.included & bit != 0 {
            0
        } else if d.excluded & bit != 0 {
            INF
        } else {
            self.grid.segments[s].2
        }
    }

    /// Segment joining grid cells `(i, j)` and the neighbour one step along
    /// x (`along_x`) in direction `dir`.
    fn step_seg(&self, i: usize, j: usize, along_x: bool, dir: isize) -> usize {
        let ny = self.ny;
        let (ti, tj) = if along_x {
            ((i as isize + dir) as usize, j)
        } else {
            (i, (j as isize + dir) as usize)
        };
        let (lo_i, lo_j) = (i.min(ti), j.min(tj));
        let lo = lo_i * ny + lo_j;
        if along_x {
            self.horiz[lo].expect("segment exists")
        } else {
            self.vert[lo].expect("segment exists")
        }
    }

    /// Forward and backward monotone DPs over the pair's bounding box.
    fn eval_pair(&self, d: &Decision, pair: &Pair, want_frontier: bool) -> PairEval {
        let (pi, pj) = pair.from;
        let (qi, qj) = pair.to;
        let di: isize = if qi >= pi { 1 } else { -1 };
        let dj: isize = if qj >= pj { 1 } else { -1 };
        let w = pi.abs_diff(qi) + 1;
        let h = pj.abs_diff(qj) + 1;
        let at = |a: usize, b: usize| {
            (
                (pi as isize + di * a as isize) as usize,
                (pj as isize + dj * b as isize) as usize,
            )
        };

        let mut fwd = vec![INF; w * h];
        fwd[0] = 0;
        for a in 0..w {
            for b in 0..h {
                if a == 0 && b == 0 {
                    continue;
                }
                let (i, j) = at(a, b);
                let mut best = INF;
                if a > 0 {
                    let s = self.step_seg(i, j, true, -di);
                    best = best.min(fwd[(a - 1) * h + b].saturating_add(self.seg_cost(d, s)));
                }
                if b > 0 {
                    let s = self.step_seg(i, j, false, -dj);
                    best = best.min(fwd[a * h + b - 1].saturating_add(self.seg_cost(d, s)));
                }
                fwd[a * h + b] = best.min(INF);
            }
        }
        let cost = fwd[w * h - 1];
        if !want_frontier || cost == 0 || cost >= INF {
            return PairEval {
                cost,
                frontier: Vec::new(),
            };
        }

        let mut back = vec![INF; w * h];
        back[w * h - 1] = 0;
        for a in (0..w).rev() {
            for b in (0..h).rev() {
                if a == w - 1 && b == h - 1 {
                    continue;
                }
                let (i, j) = at(a, b);
                let mut best = INF;
                if a + 1 < w {
                    let s = self.step_seg(i, j, true, di);
                    best = best.min(back[(a + 1) * h + b].saturating_add(self.seg_cost(d, s)));
                }
                if b + 1 < h {
                    let s = self.step_seg(i, j, false, dj);
                    best = best.min(back[a * h + b + 1].saturating_add(self.seg_cost(d, s)));
                }
                back[a * h + b] = best.min(INF);
            }
        }

        let mut frontier = Vec::new();
        for a in 0..w {
            for b in 0..h {
                if fwd[a * h + b] != 0 {
                    continue;
                }
                let (i, j) = at(a, b);
                let mut consider = |s: usize, next: usize| {
                    if fwd[next] == 0 {
                        return;
                    }
                    let c = self.seg_cost(d, s);
                    if c == 0 || c >= INF {
                        return;
                    }
                    let through = c.saturating_add(back[next]);
                    if through < INF {
                        frontier.push((s, through));
                    }
                };
                if a + 1 < w {
                    consider(self.step_seg(i, j, true, di), (a + 1) * h + b);
                }
                if b + 1 < h {
                    consider(self.step_seg(i, j, false, dj), a * h + b + 1);
                }
            }
        }
        frontier.sort_by_key(|&(s, through)| (through, s));
        PairEval { cost, frontier }
    }

    fn expand(&mut self, d: Decision) -> Result<(), ExactError> {
        self.expansions += 1;
        if self.expansions > self.budget {
            return Err(ExactError::BudgetExceeded {
                budget: self.budget,
            });
        }

        let mut bound = 0u64;
        for pair in &self.pairs {
            let c = self.eval_pair(&d, pair, false).cost;
            if c >= INF {
                return Ok(());
            }
            bound = bound.max(c);
        }
        if d.weight + bound >= self.best {
            return Ok(());
        }
        if bound == 0 {
            self.best = d.weight;
            self.best_set = d.included;
            return Ok(());
        }

        // Branch on the unsatisfied pair with the fewest exits.
        let mut chosen: Option<PairEval> = None;
        for pair in &self.pairs {
            let ev = self.eval_pair(&d, pair, true);
            if ev.cost == 0 {
                continue;
            }
            let better = match &chosen {
                None => true,
                Some(c) => {
                    (ev.frontier.len(), std::cmp::Reverse(ev.cost))
                        < (c.frontier.len(), std::cmp::Reverse(c.cost))
                }
            };
            if better {
                chosen = Some(ev);
            }
        }
        let frontier = chosen.map(|c| c.frontier).unwrap_or_default();

        let mut excluded = d.excluded;
        for (s, _) in frontier {
            let bit = 1u128 << s;
            let child = Decision {
                included: d.included | bit,
                excluded,
                weight: d.weight + self.grid.segments[s].2,
            };
            self.expand(child)?;
            excluded |= bit;
        }
        Ok(())
    }
}

/// Finds a minimum-length set of Hanan grid segments containing a Manhattan
/// path between every pair of `points`.
pub fn exact_mmn(points: &[Coord], budget: u64) -> Result<ExactSolution, ExactError> {
    let (terminals, _) = dedup_points(points);
    let grid = HananGrid::new(&terminals);
    if terminals.len() > MAX_TERMINALS || grid.nodes.len() > MAX_GRID_NODES {
        return Err(ExactError::TooLarge {
            terminals: terminals.len(),
            grid_nodes: grid.nodes.len(),
        });
    }
    if terminals.len() <= 1 {
        return Ok(ExactSolution {
            length: 0,
            network: Network::empty(),
            expansions: 0,
        });
    }

    let mut search = Search::new(&grid, &terminals, budget);
    search.expand(Decision::default())?;
    let network = witness_network(&grid, &terminals, search.best_set);
    debug_assert_eq!(network.total_length, search.best);
    Ok(ExactSolution {
        length: search.best,
        network,
        expansions: search.expansions,
    })
}

/// Turns a segment mask into a network whose nodes are the grid points the
/// segments touch.
pub fn witness_network(grid: &HananGrid, terminals: &[Coord], mask: u128) -> Network {
    let nodes: Vec<Point> = grid
        .nodes
        .iter()
        .enumerate()
        .map(|(id, &c)| {
            let kind = if terminals.binary_search(&c).is_ok() {
                PointKind::Main
            } else {
                PointKind::Demo
            };
            Point::new(id, c, kind)
        })
        .collect();
    let edges: Vec<RectEdge> = grid
        .segments
        .iter()
        .enumerate()
        .filter(|(s, _)| mask & (1u128 << s) != 0)
        .map(|(_, &(a, b, weight))| RectEdge { u: a, v: b, weight })
        .collect();
    Network::from_edges(&nodes, &edges)
}
