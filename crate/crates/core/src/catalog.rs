//! Every graph on a few vertices, one per isomorphism class.
//!
//! Classes are grown one vertex at a time and deduplicated by a canonical
//! adjacency code: the smallest code over all labelings that keep vertices
//! sorted by a refinement invariant (degree, then sorted neighbor degrees).

use std::collections::BTreeSet;

use crate::graph::{Graph, Vertex};

/// Largest order supported (codes fit in a `u64`).
pub const MAX_ORDER: usize = 9;

fn bit(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    // Row-major upper triangle index.
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn code_under(adj: &[u16], order: &[Vertex]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for a in 0..n {
        for b in a + 1..n {
            if adj[order[a]] >> order[b] & 1 == 1 {
                code |= 1 << (n * (n - 1) / 2 - 1 - bit(n, a, b));
            }
        }
    }
    code
}

/// Canonical code of the graph given by adjacency bitmasks.
fn canonical_code(adj: &[u16]) -> u64 {
    let n = adj.len();
    let deg: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    let inv: Vec<(u32, Vec<u32>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<u32> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| deg[w]).collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect();
    let mut verts: Vec<Vertex> = (0..n).collect();
    verts.sort_by(|&a, &b| inv[a].cmp(&inv[b]));
    let mut classes: Vec<Vec<Vertex>> = Vec::new();
    for &v in &verts {
        match classes.last_mut() {
            Some(c) if inv[c[0]] == inv[v] => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut order = Vec::with_capacity(n);
    permute_classes(adj, &mut classes, 0, &mut order, &mut best);
    best
}

fn permute_classes(adj: &[u16], classes: &mut [Vec<Vertex>], k: usize, order: &mut Vec<Vertex>, best: &mut u64) {
    if k == classes.len() {
        *best = (*best).min(code_under(adj, order));
        return;
    }
    let mut class = classes[k].clone();
    class.sort_unstable();
    loop {
        let len = order.len();
        order.extend_from_slice(&class);
        permute_classes(adj, classes, k + 1, order, best);
        order.truncate(len);
        if !next_perm(&mut class) {
            break;
        }
    }
}

fn next_perm(xs: &mut [Vertex]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else { return false };
    let j = (i..xs.len()).rev().find(|&j| xs[j] > xs[i - 1]).expect("pivot exists");
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

fn to_graph(adj: &[u16]) -> Graph {
    let n = adj.len();
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u, v)));
    Graph::new(n, edges).expect("simple by construction")
}

/// One graph per isomorphism class on exactly `n` vertices, in canonical-code order.
pub fn graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_ORDER, "catalog supports at most {MAX_ORDER} vertices");
    let mut level: Vec<Vec<u16>> = vec![Vec::new()];
    for m in 1..=n {
        let mut seen: BTreeSet<u64> = BTreeSet::new();
        let mut next = Vec::new();
        for adj in &level {
            for mask in 0u16..(1 << (m - 1)) {
                let mut grown: Vec<u16> = adj.clone();
                for (w, row) in grown.iter_mut().enumerate() {
                    if mask >> w & 1 == 1 {
                        *row |= 1 << (m - 1);
                    }
                }
                grown.push(mask);
                if seen.insert(canonical_code(&grown)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level.iter().map(|adj| to_graph(adj)).collect()
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    graphs(n).into_iter().filter(|g| g.is_connected()).collect()
}

/// Whether two graphs are isomorphic (small graphs only).
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && canonical_code(&masks(a)) == canonical_code(&masks(b))
}

fn masks(g: &Graph) -> Vec<u16> {
    assert!(g.vertex_count() <= MAX_ORDER);
    g.vertices().map(|v| g.neighbors(v).iter().fold(0u16, |m, &w| m | 1 << w)).collect()
}
