use std::collections::BTreeSet;

use mmnfa_core::{
    build_graph, edge_remove, kruskal, manhattan_distance, mmnfa, mmnfa_trace, taking_demo_nodes,
    verify_network, Coord, Point, RectEdge,
};
use proptest::prelude::*;

/// Minimum spanning tree weight by trying every (n-1)-subset of edges.
fn brute_force_mst(n: usize, edges: &[RectEdge]) -> Option<u64> {
    let m = edges.len();
    let mut best = None;
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize != n.saturating_sub(1) {
            continue;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn root(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                i = p[i];
            }
            i
        }
        let mut ok = true;
        let mut w = 0;
        for (i, e) in edges.iter().enumerate() {
            if mask & (1 << i) == 0 {
                continue;
            }
            let (a, b) = (root(&mut parent, e.u), root(&mut parent, e.v));
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

/// Union of the unique tree paths between every pair of main nodes.
fn steiner_subtree_oracle(nodes: &[Point], tree: &[RectEdge]) -> BTreeSet<(usize, usize)> {
    let n = nodes.len();
    let mut adj = vec![Vec::new(); n];
    for e in tree {
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    let mains: Vec<usize> = nodes.iter().filter(|p| p.is_main()).map(|p| p.id).collect();
    let mut kept = BTreeSet::new();
    for (i, &a) in mains.iter().enumerate() {
        // BFS parents from a
        let mut parent = vec![usize::MAX; n];
        parent[a] = a;
        let mut queue = std::collections::VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        for &b in &mains[i + 1..] {
            let mut cur = b;
            while cur != a {
                let p = parent[cur];
                kept.insert((cur.min(p), cur.max(p)));
                cur = p;
            }
        }
    }
    kept
}

fn coords_of(net_nodes: &[Point], edges: &[RectEdge]) -> BTreeSet<(Coord, Coord)> {
    edges
        .iter()
        .map(|e| (net_nodes[e.u].coord(), net_nodes[e.v].coord()))
        .collect()
}

fn small_set(max_n: usize, span: i64) -> impl Strategy<Value = Vec<Coord>> {
    proptest::collection::btree_set((0..span, 0..span), 0..=max_n)
        .prop_map(|s| s.into_iter().map(Coord::from).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn kruskal_matches_enumeration(pts in small_set(4, 6)) {
        let g = build_graph(&taking_demo_nodes(&pts));
        prop_assume!(g.edges.len() <= 10);
        let tree = kruskal(g.nodes.len(), &g.edges).unwrap();
        prop_assert_eq!(tree.len(), g.nodes.len().saturating_sub(1));
        let w: u64 = tree.iter().map(|e| e.weight).sum();
        prop_assert_eq!(Some(w), brute_force_mst(g.nodes.len(), &g.edges));
        prop_assert!(w <= g.total_weight());
    }

    #[test]
    fn prune_is_root_invariant_and_matches_path_union(pts in small_set(30, 40)) {
        let t = mmnfa_trace(&pts);
        let want = steiner_subtree_oracle(&t.graph.nodes, &t.tree);
        let want_coords: BTreeSet<(Coord, Coord)> = want
            .iter()
            .map(|&(a, b)| (t.graph.nodes[a].coord(), t.graph.nodes[b].coord()))
            .collect();
        for root in t.graph.main_ids() {
            let net = edge_remove(&t.graph.nodes, &t.tree, root).unwrap();
            prop_assert_eq!(&net, &t.network);
            prop_assert_eq!(coords_of(&net.nodes, &net.edges), want_coords.clone());
        }
        // no demo leaves
        let deg = t.network.degrees();
        for p in &t.network.nodes {
            if deg[p.id] == 1 {
                prop_assert!(p.is_main());
            }
        }
        let mst_weight: u64 = t.tree.iter().map(|e| e.weight).sum();
        prop_assert!(t.network.total_length <= mst_weight);
    }

    #[test]
    fn pipeline_bounds(pts in small_set(60, 200)) {
        let r = mmnfa(&pts);
        let s = r.stats;
        prop_assert_eq!(s.n_main, pts.len());
        prop_assert!(s.n_edges <= 2 * s.n_total);
        prop_assert!(s.n_total <= s.n_main + 2 * s.n_main * (s.depth + 1));
        let max_pair = pts
            .iter()
            .flat_map(|a| pts.iter().map(move |b| manhattan_distance(*a, *b)))
            .max()
            .unwrap_or(0);
        prop_assert!(r.network.total_length >= max_pair);
        if pts.len() >= 2 {
            let v = verify_network(&r.network, &pts).unwrap();
            prop_assert!(v.connected);
            prop_assert!(v.worst_ratio.is_some_and(|w| w.num >= w.den));
        }
    }

    #[test]
    fn translation_and_scaling(pts in small_set(40, 100), dx in -500i64..500, dy in -500i64..500, k in 1i64..9) {
        let base = mmnfa(&pts);
        let moved: Vec<Coord> = pts.iter().map(|p| p.translate(dx, dy)).collect();
        let m = mmnfa(&moved);
        prop_assert_eq!(m.stats, base.stats);
        prop_assert_eq!(m.network.total_length, base.network.total_length);
        prop_assert_eq!(m.network.edges, base.network.edges.clone());

        let scaled: Vec<Coord> = pts.iter().map(|p| p.scale(k)).collect();
        let s = mmnfa(&scaled);
        prop_assert_eq!(s.stats, base.stats);
        prop_assert_eq!(s.network.total_length, k as u64 * base.network.total_length);
    }

    #[test]
    fn two_point_networks_are_manhattan(a in (0i64..1000, 0i64..1000), b in (0i64..1000, 0i64..1000)) {
        prop_assume!(a != b);
        let pts = [Coord::from(a), Coord::from(b)];
        let r = mmnfa(&pts);
        prop_assert_eq!(r.network.total_length, manhattan_distance(pts[0], pts[1]));
        prop_assert!(verify_network(&r.network, &pts).unwrap().coverage.is_one());
    }
}

#[test]
fn determinism_of_full_trace() {
    let pts: Vec<Coord> = (0..200)
        .map(|i| Coord::new((i * 7919) % 1009, (i * 104729) % 997))
        .collect();
    let a = mmnfa_trace(&pts);
    let b = mmnfa_trace(&pts);
    assert_eq!(a.tree, b.tree);
    assert_eq!(a.network, b.network);
    assert_eq!(a.graph, b.graph);
}
