//! Kruskal minimum spanning tree with a path-compressing union-find.

use thiserror::Error;

use crate::model::{RectEdge, RectGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpanningError {
    #[error("graph is disconnected ({components} components)")]
    DisconnectedGraph { components: usize },
    #[error("edge ({u}, {v}) references a node outside 0..{n_nodes}")]
    InvalidEdge { u: usize, v: usize, n_nodes: usize },
}

/// Union-find over dense ids, with path compression and union by rank.
#[derive(Debug, Clone)]
pub struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
    sets: usize,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            rank: vec![0; n],
            sets: n,
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Number of disjoint sets currently tracked.
    pub fn set_count(&self) -> usize {
        self.sets
    }

    pub fn find(&mut self, mut i: usize) -> usize {
        let mut root = i;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[i] != root {
            let next = self.parent[i];
            self.parent[i] = root;
            i = next;
        }
        root
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Merges the sets of `a` and `b`. Returns false if they were already
    /// joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        self.sets -= 1;
        true
    }
}

/// Kruskal over an explicit edge list. Edges are considered in canonical
/// `(weight, min id, max id)` order regardless of the order given, so the
/// returned tree is deterministic among equal-weight optima. The result is
/// in acceptance order.
pub fn kruskal(n_nodes: usize, edges: &[RectEdge]) -> Result<Vec<RectEdge>, SpanningError> {
    if let Some(e) = edges.iter().find(|e| e.u >= n_nodes || e.v >= n_nodes) {
        return Err(SpanningError::InvalidEdge {
            u: e.u,
            v: e.v,
            n_nodes,
        });
    }
    let mut order: Vec<&RectEdge> = edges.iter().collect();
    order.sort_by_key(|e| e.canonical_key());

    let mut sets = DisjointSets::new(n_nodes);
    let mut tree = Vec::with_capacity(n_nodes.saturating_sub(1));
    for e in order {
        if tree.len() + 1 >= n_nodes {
            break;
        }
        if sets.union(e.u, e.v) {
            tree.push(*e);
        }
    }
    if n_nodes > 0 && sets.set_count() > 1 {
        return Err(SpanningError::DisconnectedGraph {
            components: sets.set_count(),
        });
    }
    Ok(tree)
}

/// Minimum spanning tree of a rectilinear graph.
pub fn minimum_spanning_tree(g: &RectGraph) -> Result<Vec<RectEdge>, SpanningError> {
    kruskal(g.nodes.len(), &g.edges)
}
