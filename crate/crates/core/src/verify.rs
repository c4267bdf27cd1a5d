//! Manhattan-property measurement for a network, and the three local
//! scenarios for connecting a new terminal to an existing network.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, BTreeSet, BinaryHeap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::edge_construction;
use crate::model::{manhattan_distance, Coord, PointKind};
use crate::pipeline::solve_graph;
use crate::prune::Network;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("main point {0} is not a node of the network")]
    NodeMismatch(Coord),
}

/// Exact non-negative rational `num / den`, `den > 0`.
#[derive(Debug, Clone, Copy, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub num: u64,
    pub den: u64,
}

impl Fraction {
    pub const ONE: Fraction = Fraction { num: 1, den: 1 };

    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let g = gcd(num, den);
        Fraction {
            num: num / g,
            den: den / g,
        }
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn is_one(self) -> bool {
        self.num == self.den
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

impl PartialEq for Fraction {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// All-pairs Manhattan-path statistics over the main points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub pairs_total: u64,
    pub pairs_satisfied: u64,
    pub coverage: Fraction,
    /// Whether every main point is reachable from every other.
    pub connected: bool,
    /// Largest network-distance / Manhattan-distance ratio over all pairs.
    /// `None` when some pair is disconnected.
    pub worst_ratio: Option<Fraction>,
}

impl VerifyReport {
    fn vacuous() -> Self {
        VerifyReport {
            pairs_total: 0,
            pairs_satisfied: 0,
            coverage: Fraction::ONE,
            connected: true,
            worst_ratio: Some(Fraction::ONE),
        }
    }

    pub fn is_manhattan(&self) -> bool {
        self.pairs_satisfied == self.pairs_total
    }
}

/// Single-source shortest path lengths over the network's edges.
fn dijkstra(adj: &[Vec<(usize, u64)>], src: usize) -> Vec<Option<u64>> {
    let mut dist: Vec<Option<u64>> = vec![None; adj.len()];
    let mut heap = BinaryHeap::new();
    dist[src] = Some(0);
    heap.push(Reverse((0u64, src)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if dist[u].is_some_and(|best| d > best) {
            continue;
        }
        for &(v, w) in &adj[u] {
            let nd = d + w;
            if dist[v].is_none_or(|cur| nd < cur) {
                dist[v] = Some(nd);
                heap.push(Reverse((nd, v)));
            }
        }
    }
    dist
}

/// Checks every unordered pair of main points for a shortest network path
/// equal to their Manhattan distance.
pub fn verify_network(network: &Network, mains: &[Coord]) -> Result<VerifyReport, VerifyError> {
    let mains: Vec<Coord> = mains
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if mains.len() <= 1 {
        return Ok(VerifyReport::vacuous());
    }

    let index: HashMap<Coord, usize> = network.nodes.iter().map(|p| (p.coord(), p.id)).collect();
    let ids = mains
        .iter()
        .map(|c| index.get(c).copied().ok_or(VerifyError::NodeMismatch(*c)))
        .collect::<Result<Vec<_>, _>>()?;

    let mut adj: Vec<Vec<(usize, u64)>> = vec![Vec::new(); network.nodes.len()];
    for e in &network.edges {
        adj[e.u].push((e.v, e.weight));
        adj[e.v].push((e.u, e.weight));
    }

    let mut pairs_total = 0u64;
    let mut pairs_satisfied = 0u64;
    let mut connected = true;
    let mut worst = Fraction::ONE;
    for i in 0..ids.len() {
        let dist = dijkstra(&adj, ids[i]);
        for j in i + 1..ids.len() {
            pairs_total += 1;
            let manhattan = manhattan_distance(mains[i], mains[j]);
            match dist[ids[j]] {
                None => connected = false,
                Some(d) => {
                    if d == manhattan {
                        pairs_satisfied += 1;
                    }
                    worst = worst.max(Fraction::new(d, manhattan));
                }
            }
        }
    }

    Ok(VerifyReport {
        pairs_total,
        pairs_satisfied,
        coverage: Fraction::new(pairs_satisfied, pairs_total),
        connected,
        worst_ratio: connected.then_some(worst),
    })
}

/// One local scenario: an existing network A - X - B, a new main point C at
/// distance `d1` from demo X and `d2` from demo Y, with Y hanging off B.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioFixture {
    pub d1: u64,
    pub d2: u64,
    pub expected_l_min: u64,
    pub expected_l_max: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioOutcome {
    pub case: u8,
    /// Network length added by connecting C.
    pub observed: u64,
    pub fixture: ScenarioFixture,
}

impl ScenarioOutcome {
    pub fn holds(&self) -> bool {
        (self.fixture.expected_l_min..=self.fixture.expected_l_max).contains(&self.observed)
    }
}

/// Length of the A - X - B spur in the scaffold. It is a bridge, so its value
/// never changes which cycle edge the spanning tree drops.
const SPUR: i64 = 10;

fn scaffold(d1: u64, d2: u64, with_c: bool) -> BTreeMap<Coord, PointKind> {
    let (d1, d2) = (d1 as i64, d2 as i64);
    let mut nodes = BTreeMap::from([
        (Coord::new(0, 0), PointKind::Main),          // A
        (Coord::new(SPUR, 0), PointKind::Demo),       // X
        (Coord::new(SPUR + d2, 0), PointKind::Main),  // B
        (Coord::new(SPUR + d2, d1), PointKind::Demo), // Y
    ]);
    if with_c {
        nodes.insert(Coord::new(SPUR, d1), PointKind::Main);
    }
    nodes
}

fn scaffold_length(d1: u64, d2: u64, with_c: bool) -> u64 {
    let g = edge_construction(&scaffold(d1, d2, with_c), 0);
    let (_, net) = solve_graph(&g).expect("scaffold is connected");
    net.total_length
}

/// Incremental length `L(with C) - L(without C)` for one fixture.
pub fn incremental_length(d1: u64, d2: u64) -> u64 {
    scaffold_length(d1, d2, true) - scaffold_length(d1, d2, false)
}

pub fn scenario_fixtures() -> [ScenarioFixture; 3] {
    [
        ScenarioFixture {
            d1: 2,
            d2: 5,
            expected_l_min: 2,
            expected_l_max: 2,
        },
        ScenarioFixture {
            d1: 3,
            d2: 3,
            expected_l_min: 3,
            expected_l_max: 6,
        },
        ScenarioFixture {
            d1: 4,
            d2: 1,
            expected_l_min: 4,
            expected_l_max: 8,
        },
    ]
}

/// Runs the three scenarios: `d1 < d2`, `d1 == d2`, `d1 > d2`.
pub fn run_case_scenarios() -> Vec<ScenarioOutcome> {
    scenario_fixtures()
        .into_iter()
        .enumerate()
        .map(|(i, fixture)| ScenarioOutcome {
            case: i as u8 + 1,
            observed: incremental_length(fixture.d1, fixture.d2),
            fixture,
        })
        .collect()
}
