#![allow(dead_code)]

use std::collections::BTreeSet;

use mmnfa_core::{manhattan_distance, Coord, HananGrid, Point, RectEdge};

/// Smallest total weight of a segment subset of the Hanan grid giving every
/// terminal pair a path of exactly Manhattan length, by enumerating all
/// subsets. Shares nothing with the branch-and-bound solver except the grid.
pub fn exhaustive_mmn(points: &[Coord]) -> u64 {
    let grid = HananGrid::new(points);
    let m = grid.segments.len();
    assert!(m <= 24, "too many segments for enumeration: {m}");
    let terminals: Vec<usize> = points.iter().map(|p| grid.index_of(*p).unwrap()).collect();
    let mut best = u64::MAX;
    for mask in 0u32..(1u32 << m) {
        let w: u64 = (0..m)
            .filter(|s| mask & (1 << s) != 0)
            .map(|s| grid.segments[s].2)
            .sum();
        if w < best && pairs_ok(&grid, mask, &terminals) {
            best = w;
        }
    }
    best
}

fn pairs_ok(grid: &HananGrid, mask: u32, terminals: &[usize]) -> bool {
    let n = grid.nodes.len();
    for (k, &src) in terminals.iter().enumerate() {
        let mut dist = vec![u64::MAX; n];
        dist[src] = 0;
        loop {
            let mut changed = false;
            for (s, &(a, b, w)) in grid.segments.iter().enumerate() {
                if mask & (1 << s) == 0 {
                    continue;
                }
                for (x, y) in [(a, b), (b, a)] {
                    if dist[x] != u64::MAX && dist[x] + w < dist[y] {
                        dist[y] = dist[x] + w;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        for &dst in &terminals[k + 1..] {
            if dist[dst] != manhattan_distance(grid.nodes[src], grid.nodes[dst]) {
                return false;
            }
        }
    }
    true
}

/// Minimum spanning tree weight over every (n-1)-edge subset.
pub fn brute_force_mst(n: usize, edges: &[RectEdge]) -> Option<u64> {
    let m = edges.len();
    let mut best: Option<u64> = None;
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize != n.saturating_sub(1) {
            continue;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        let root = |p: &Vec<usize>, mut i: usize| {
            while p[i] != i {
                i = p[i];
            }
            i
        };
        let mut ok = true;
        let mut w = 0;
        for (_, e) in edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
        {
            let (a, b) = (root(&parent, e.u), root(&parent, e.v));
            if a == b {
                ok = false;
                break;
            }
            parent[a] = b;
            w += e.weight;
        }
        if ok && best.is_none_or(|b| w < b) {
            best = Some(w);
        }
    }
    best
}

/// Union of the tree paths between all pairs of main nodes, as coordinate
/// pairs.
pub fn main_path_union(nodes: &[Point], tree: &[RectEdge]) -> BTreeSet<(Coord, Coord)> {
    let n = nodes.len();
    let mut adj = vec![Vec::new(); n];
    for e in tree {
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    let mains: Vec<usize> = nodes.iter().filter(|p| p.is_main()).map(|p| p.id).collect();
    let mut out = BTreeSet::new();
    for (i, &a) in mains.iter().enumerate() {
        let mut parent = vec![usize::MAX; n];
        parent[a] = a;
        let mut stack = vec![a];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    stack.push(w);
                }
            }
        }
        for &b in &mains[i + 1..] {
            let mut cur = b;
            while cur != a {
                let p = parent[cur];
                let (x, y) = (nodes[cur].coord(), nodes[p].coord());
                out.insert((x.min(y), x.max(y)));
                cur = p;
            }
        }
    }
    out
}

pub fn edge_coords(nodes: &[Point], edges: &[RectEdge]) -> BTreeSet<(Coord, Coord)> {
    edges
        .iter()
        .map(|e| {
            let (x, y) = (nodes[e.u].coord(), nodes[e.v].coord());
            (x.min(y), x.max(y))
        })
        .collect()
}
