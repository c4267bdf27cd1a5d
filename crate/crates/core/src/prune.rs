//! Trimming of demo-only branches from the spanning tree.
//!
//! A depth-first walk from a main root marks every node whose subtree
//! contains a main node. A tree edge survives iff the child side is marked,
//! which leaves the minimal subtree connecting all main nodes.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{sort_canonical, Point, RectEdge};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PruneError {
    #[error("root node {0} is a demo node")]
    RootNotMain(usize),
    #[error("root node {root} is outside 0..{n_nodes}")]
    RootOutOfRange { root: usize, n_nodes: usize },
}

/// A rectilinear network: its own dense node list plus edges between those
/// nodes.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Network {
    pub nodes: Vec<Point>,
    pub edges: Vec<RectEdge>,
    pub total_length: u64,
}

impl Network {
    pub fn empty() -> Self {
        Network::default()
    }

    /// Builds a network from a subset of edges over a larger node list. Only
    /// nodes incident to some edge are kept; they are renumbered densely in
    /// their original order and the edges are sorted canonically.
    pub fn from_edges(all_nodes: &[Point], edges: &[RectEdge]) -> Self {
        let mut used = vec![false; all_nodes.len()];
        for e in edges {
            used[e.u] = true;
            used[e.v] = true;
        }
        let mut remap = vec![usize::MAX; all_nodes.len()];
        let mut nodes = Vec::new();
        for (old, p) in all_nodes.iter().enumerate() {
            if used[old] {
                remap[old] = nodes.len();
                nodes.push(Point {
                    id: nodes.len(),
                    ..*p
                });
            }
        }
        let mut edges: Vec<RectEdge> = edges
            .iter()
            .map(|e| {
                let (a, b) = (remap[e.u], remap[e.v]);
                RectEdge {
                    u: a.min(b),
                    v: a.max(b),
                    weight: e.weight,
                }
            })
            .collect();
        sort_canonical(&mut edges);
        let total_length = edges.iter().map(|e| e.weight).sum();
        Network {
            nodes,
            edges,
            total_length,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.nodes.len()];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }
}

/// Keeps the tree edges whose far side (away from `root`) reaches a main
/// node. `tree` must be a forest over `nodes`; components not containing the
/// root are dropped.
pub fn edge_remove(nodes: &[Point], tree: &[RectEdge], root: usize) -> Result<Network, PruneError> {
    let n = nodes.len();
    if root >= n {
        return Err(PruneError::RootOutOfRange { root, n_nodes: n });
    }
    if !nodes[root].is_main() {
        return Err(PruneError::RootNotMain(root));
    }

    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in tree.iter().enumerate() {
        adj[e.u].push(i);
        adj[e.v].push(i);
    }

    // Preorder with the edge used to enter each node; reversed, every child
    // is finished before its parent.
    let mut visited = vec![false; n];
    let mut order: Vec<(usize, Option<usize>)> = Vec::with_capacity(n);
    let mut stack = vec![(root, None)];
    visited[root] = true;
    while let Some((u, via)) = stack.pop() {
        order.push((u, via));
        for &ei in &adj[u] {
            let w = tree[ei].other(u);
            if !visited[w] {
                visited[w] = true;
                stack.push((w, Some(ei)));
            }
        }
    }

    let mut reaches_main: Vec<bool> = nodes.iter().map(Point::is_main).collect();
    let mut kept = Vec::new();
    for &(u, via) in order.iter().rev() {
        if let Some(ei) = via {
            if reaches_main[u] {
                kept.push(tree[ei]);
                let parent = tree[ei].other(u);
                reaches_main[parent] = true;
            }
        }
    }
    Ok(Network::from_edges(nodes, &kept))
}

/// The default root: the main node with the smallest id.
pub fn default_root(nodes: &[Point]) -> Option<usize> {
    nodes.iter().find(|p| p.is_main()).map(|p| p.id)
}
