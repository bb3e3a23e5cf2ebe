#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use oddcolor_core::coloring::{Color, Coloring, ListAssignment};
use oddcolor_core::embedding::{embed_search, rotation_from_coordinates, EmbeddedGraph, RotationSystem};
use oddcolor_core::{EdgeId, Graph, RSet, Vertex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// ---------------------------------------------------------------------------
// Graph helpers

pub fn graph_from_mask(n: usize, mask: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask.get(k).copied().unwrap_or(false) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn r_from_mask(g: &Graph, mask: &[bool]) -> RSet {
    RSet::new(g, (0..g.edge_count()).filter(|&e| mask.get(e).copied().unwrap_or(false))).unwrap()
}

/// Random connected graph: a random spanning tree plus extra edges.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, extra: usize) -> Graph {
    let mut edges = BTreeSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            edges.insert((u.min(v), u.max(v)));
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Random rotation system with random signs (`twist_p` per edge).
pub fn random_rotation(rng: &mut ChaCha8Rng, g: &Graph, twist_p: f64) -> RotationSystem {
    let order: Vec<Vec<Vertex>> = g
        .vertices()
        .map(|v| {
            let mut ns = g.neighbors(v).to_vec();
            ns.shuffle(rng);
            ns
        })
        .collect();
    let signs: Vec<i64> = (0..g.edge_count()).map(|_| if rng.gen_bool(twist_p) { -1 } else { 1 }).collect();
    RotationSystem::from_neighbor_orders(g, &order, &signs).unwrap()
}

pub fn random_embedding(seed: u64, max_n: usize, twist_p: f64) -> EmbeddedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(3..=max_n);
    let extra = rng.gen_range(0..=2 * n);
    let g = random_connected(&mut rng, n, extra);
    let rot = random_rotation(&mut rng, &g, twist_p);
    EmbeddedGraph::new(g, rot).unwrap()
}

pub fn random_r(rng: &mut ChaCha8Rng, g: &Graph, p: f64) -> RSet {
    RSet::new(g, (0..g.edge_count()).filter(|_| rng.gen_bool(p))).unwrap()
}

// ---------------------------------------------------------------------------
// Brute-force oracles

/// Relaxed status straight from the definition.
pub fn oracle_relaxed(g: &Graph, r: &RSet, v: Vertex) -> bool {
    let d = g.neighbors(v).len();
    d % 2 == 1 || d == 0 || g.edges().iter().enumerate().any(|(e, &(a, b))| (a == v || b == v) && r.contains(e))
}

/// Every simple cycle with at most `max_len` edges, as a sorted edge-id list.
pub fn oracle_cycles(g: &Graph, max_len: usize) -> BTreeSet<Vec<EdgeId>> {
    let n = g.vertex_count();
    let adj: Vec<Vec<Vertex>> = (0..n).map(|v| (0..n).filter(|&w| g.has_edge(v, w)).collect()).collect();
    let mut out = BTreeSet::new();
    for s in 0..n {
        let mut path = vec![s];
        extend_cycles(g, &adj, s, &mut path, max_len, &mut out);
    }
    out
}

fn extend_cycles(
    g: &Graph,
    adj: &[Vec<Vertex>],
    s: Vertex,
    path: &mut Vec<Vertex>,
    max_len: usize,
    out: &mut BTreeSet<Vec<EdgeId>>,
) {
    let last = *path.last().unwrap();
    for &w in &adj[last] {
        if w == s && path.len() >= 3 {
            let mut es: Vec<EdgeId> = path.windows(2).map(|p| g.edge_id(p[0], p[1]).unwrap()).collect();
            es.push(g.edge_id(last, s).unwrap());
            es.sort_unstable();
            out.insert(es);
        } else if w > s && !path.contains(&w) && path.len() < max_len {
            path.push(w);
            extend_cycles(g, adj, s, path, max_len, out);
            path.pop();
        }
    }
}

/// Hypothesis straight from the definition, using the brute-force cycle list.
pub fn oracle_hypothesis(g: &Graph, r: &RSet) -> bool {
    let cycles = oracle_cycles(g, 6);
    let rlen = |c: &Vec<EdgeId>| c.len() + c.iter().filter(|&&e| r.contains(e)).count();
    if cycles.iter().any(|c| matches!(rlen(c), 3 | 4 | 6)) {
        return false;
    }
    let fives: Vec<&Vec<EdgeId>> = cycles.iter().filter(|c| rlen(c) == 5).collect();
    for (i, a) in fives.iter().enumerate() {
        for b in &fives[i + 1..] {
            if a.iter().filter(|e| b.contains(e)).count() == 1 {
                return false;
            }
        }
    }
    true
}

pub fn oracle_girth(g: &Graph) -> Option<usize> {
    oracle_cycles(g, g.vertex_count()).iter().map(|c| c.len()).min()
}

/// Validity of a relaxed odd coloring, straight from the definition.
pub fn oracle_is_relaxed_odd(g: &Graph, r: &RSet, lists: Option<&ListAssignment>, c: &[Color]) -> bool {
    for v in g.vertices() {
        if let Some(l) = lists {
            if !l.list(v).contains(&c[v]) {
                return false;
            }
        }
        let ns = g.neighbors(v);
        if ns.iter().any(|&w| c[w] == c[v]) {
            return false;
        }
        if !oracle_relaxed(g, r, v) {
            let mut counts: BTreeMap<Color, usize> = BTreeMap::new();
            for &w in ns {
                *counts.entry(c[w]).or_default() += 1;
            }
            if counts.values().all(|k| k % 2 == 0) {
                return false;
            }
        }
    }
    true
}

/// Exhaustive search over all colorings drawn from the lists.
pub fn oracle_relaxed_odd_exists(g: &Graph, r: &RSet, lists: &ListAssignment) -> Option<Vec<Color>> {
    let n = g.vertex_count();
    let mut idx = vec![0usize; n];
    loop {
        let c: Vec<Color> = (0..n).map(|v| lists.list(v)[idx[v]]).collect();
        if oracle_is_relaxed_odd(g, r, Some(lists), &c) {
            return Some(c);
        }
        let mut v = 0;
        loop {
            if v == n {
                return None;
            }
            idx[v] += 1;
            if idx[v] < lists.list(v).len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
    }
}

/// Smallest k with an odd k-coloring, by exhaustive enumeration.
pub fn oracle_odd_chromatic(g: &Graph) -> usize {
    let n = g.vertex_count();
    (1..=n.max(1))
        .find(|&k| oracle_relaxed_odd_exists(g, &RSet::empty(), &ListAssignment::uniform(n, k)).is_some())
        .unwrap_or(0)
        .min(n)
}

/// Chromatic number by exhaustive enumeration.
pub fn oracle_chromatic(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    (1..=n)
        .find(|&k| {
            let total = (k as u64).pow(n as u32);
            (0..total).any(|mut code| {
                let mut c = vec![0u64; n];
                for x in c.iter_mut() {
                    *x = code % k as u64;
                    code /= k as u64;
                }
                g.edges().iter().all(|&(u, v)| c[u] != c[v])
            })
        })
        .unwrap()
}

// Planarity through Wagner's theorem: planar iff no K5 and no K3,3 minor.

fn masks(g: &Graph) -> Vec<u16> {
    g.vertices().map(|v| g.neighbors(v).iter().fold(0u16, |m, &w| m | 1 << w)).collect()
}

fn drop_vertex(adj: &[u16], v: usize) -> Vec<u16> {
    let low = (1u16 << v) - 1;
    adj.iter()
        .enumerate()
        .filter(|&(i, _)| i != v)
        .map(|(_, &m)| (m & low) | ((m >> 1) & !low))
        .collect()
}

fn contract(adj: &[u16], u: usize, v: usize) -> Vec<u16> {
    let mut a = adj.to_vec();
    let merged = (a[u] | a[v]) & !(1 << u) & !(1 << v);
    a[u] = merged;
    for (w, row) in a.iter_mut().enumerate() {
        if merged >> w & 1 == 1 {
            *row |= 1 << u;
        }
    }
    drop_vertex(&a, v)
}

fn has_kuratowski_subgraph(adj: &[u16]) -> bool {
    let n = adj.len();
    let subsets = |k: usize| (0u32..1 << n).filter(move |s| s.count_ones() as usize == k);
    let k5 = subsets(5).any(|s| (0..n).filter(|&v| s >> v & 1 == 1).all(|v| (adj[v] as u32 & s).count_ones() == 4));
    if k5 {
        return true;
    }
    subsets(6).any(|s| {
        let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        // Sides containing the first vertex.
        (0..vs.len()).flat_map(|i| (i + 1..vs.len()).map(move |j| (i, j))).filter(|&(i, _)| i > 0).any(|(i, j)| {
            let a = [vs[0], vs[i], vs[j]];
            let b: Vec<usize> = vs.iter().copied().filter(|v| !a.contains(v)).collect();
            a.iter().all(|&x| b.iter().all(|&y| adj[x] >> y & 1 == 1))
        })
    })
}

fn has_kuratowski_minor(adj: Vec<u16>, memo: &mut HashMap<Vec<u16>, bool>) -> bool {
    let edges: u32 = adj.iter().map(|m| m.count_ones()).sum::<u32>() / 2;
    if edges < 9 || adj.len() < 5 {
        return false;
    }
    if let Some(&b) = memo.get(&adj) {
        return b;
    }
    let mut found = has_kuratowski_subgraph(&adj);
    let n = adj.len();
    if !found && n > 5 {
        found = (0..n).any(|v| has_kuratowski_minor(drop_vertex(&adj, v), memo))
            || (0..n).any(|u| {
                (u + 1..n).filter(|&v| adj[u] >> v & 1 == 1).any(|v| has_kuratowski_minor(contract(&adj, u, v), memo))
            });
    }
    memo.insert(adj, found);
    found
}

pub fn oracle_planar(g: &Graph) -> bool {
    !has_kuratowski_minor(masks(g), &mut HashMap::new())
}

/// Face lengths from an independent tracer over states (tail, edge, orientation).
/// Each face is traced once in each direction, so orbits come in pairs.
pub fn oracle_face_lengths(g: &Graph, order: &[Vec<Vertex>], signs: &[i64]) -> Vec<usize> {
    let mut seen: BTreeSet<(Vertex, Vertex, bool)> = BTreeSet::new();
    let mut orbits = Vec::new();
    let sign = |a: Vertex, b: Vertex| signs[g.edge_id(a, b).unwrap()];
    for v in g.vertices() {
        for &w in &order[v] {
            for fwd in [true, false] {
                if seen.contains(&(v, w, fwd)) {
                    continue;
                }
                let start = (v, w, fwd);
                let mut state = start;
                let mut len = 0;
                loop {
                    seen.insert(state);
                    len += 1;
                    let (a, b, o) = state;
                    let o = if sign(a, b) < 0 { !o } else { o };
                    let rot = &order[b];
                    let i = rot.iter().position(|&x| x == a).unwrap();
                    let d = rot.len();
                    let next = if o { rot[(i + 1) % d] } else { rot[(i + d - 1) % d] };
                    state = (b, next, o);
                    if state == start {
                        break;
                    }
                }
                orbits.push(len);
            }
        }
    }
    orbits.sort_unstable();
    assert!(orbits.len() % 2 == 0 && orbits.chunks(2).all(|p| p[0] == p[1]), "orbits pair up: {orbits:?}");
    orbits.chunks(2).map(|p| p[0]).collect()
}

pub fn sorted_face_lengths(e: &EmbeddedGraph) -> Vec<usize> {
    let mut v: Vec<usize> = (0..e.face_count()).map(|f| e.face_len(f)).collect();
    v.sort_unstable();
    v
}

pub fn coloring(c: Vec<Color>) -> Coloring {
    Coloring(c)
}

// ---------------------------------------------------------------------------
// Embedded fixtures

pub struct Fixture {
    pub name: &'static str,
    pub embedded: EmbeddedGraph,
    pub r: RSet,
}

fn planar(n: usize, edges: &[(Vertex, Vertex)], pts: &[(f64, f64)]) -> EmbeddedGraph {
    assert_eq!(pts.len(), n);
    let g = Graph::new(n, edges.iter().copied()).unwrap();
    let rot = rotation_from_coordinates(&g, pts);
    EmbeddedGraph::new(g, rot).unwrap()
}

fn r_of(e: &EmbeddedGraph, pairs: &[(Vertex, Vertex)]) -> RSet {
    RSet::from_pairs(e.graph(), pairs.iter().copied()).unwrap()
}

pub fn cube_planar() -> EmbeddedGraph {
    let g = Graph::cube();
    let pts: Vec<(f64, f64)> = (0..8)
        .map(|v| {
            let s = if v & 4 == 0 { 2.0 } else { 1.0 };
            let x = if v & 1 == 0 { -s } else { s };
            let y = if v & 2 == 0 { -s } else { s };
            (x, y)
        })
        .collect();
    EmbeddedGraph::new(g.clone(), rotation_from_coordinates(&g, &pts)).unwrap()
}

pub fn cycle_planar(n: usize) -> EmbeddedGraph {
    let g = Graph::cycle(n);
    let pts: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let t = i as f64 * std::f64::consts::TAU / n as f64;
            (t.cos(), t.sin())
        })
        .collect();
    EmbeddedGraph::new(g.clone(), rotation_from_coordinates(&g, &pts)).unwrap()
}

/// 4x4 quadrangulation of the torus.
pub fn quad_torus() -> EmbeddedGraph {
    let g = Graph::torus_grid(4, 4);
    let order: Vec<Vec<Vertex>> = (0..16)
        .map(|id| {
            let (i, j) = (id / 4, id % 4);
            vec![i * 4 + (j + 1) % 4, ((i + 1) % 4) * 4 + j, i * 4 + (j + 3) % 4, ((i + 3) % 4) * 4 + j]
        })
        .collect();
    EmbeddedGraph::new(g.clone(), RotationSystem::orientable(&g, &order).unwrap()).unwrap()
}

/// Two s-t paths of length 3 plus a third: three hexagons, two 3-vertices.
pub fn r1_fixture() -> Fixture {
    let edges = [(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1), (0, 6), (6, 7), (7, 1)];
    let pts = [(-2.0, 0.0), (2.0, 0.0), (-1.0, 1.0), (1.0, 1.0), (-1.0, 0.0), (1.0, 0.0), (-1.0, -1.0), (1.0, -1.0)];
    let e = planar(8, &edges, &pts);
    Fixture { name: "r1-theta", r: RSet::empty(), embedded: e }
}

/// Triangle 0,1,2 whose 4-vertices 0 and 1 each have a non-relaxed
/// neighbor (degree 2, ending in a leaf) and a leaf.
fn triangle_with_arms(r: &[(Vertex, Vertex)]) -> (EmbeddedGraph, RSet) {
    // 0=a 1=b 2=c 3=a1 4=a1 leaf 5=a2 6=b1 7=b1 leaf 8=b2
    let edges = [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 5), (1, 6), (6, 7), (1, 8)];
    let pts = [
        (-1.0, 0.0),
        (1.0, 0.0),
        (0.0, 1.0),
        (-2.0, 0.0),
        (-3.0, 0.0),
        (-1.0, -1.0),
        (2.0, 0.0),
        (3.0, 0.0),
        (1.0, -1.0),
    ];
    let e = planar(9, &edges, &pts);
    let r = r_of(&e, r);
    (e, r)
}

pub fn r2_fixture() -> Fixture {
    let (embedded, r) = triangle_with_arms(&[]);
    Fixture { name: "r2-triangle-arms", embedded, r }
}

/// Same drawing; R makes every vertex next to 0 other than 1 relaxed.
pub fn r3_fixture() -> Fixture {
    let (embedded, r) = triangle_with_arms(&[(0, 2), (1, 2), (0, 3), (1, 6)]);
    Fixture { name: "r3-triangle-arms", embedded, r }
}

/// Triangle 0,1,2 with deg(0) = 4 and deg(1) = 5 via pendants.
pub fn r4_fixture() -> Fixture {
    let edges = [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)];
    let pts = [(-1.0, 0.0), (1.0, 0.0), (0.0, 1.0), (-2.0, 0.0), (-1.0, -1.0), (2.0, 0.0), (1.5, -1.0), (0.5, -1.0)];
    Fixture { name: "r4-triangle", embedded: planar(8, &edges, &pts), r: RSet::empty() }
}

/// 5-cycle 0-1-2-3-4 with deg(0) = 3, deg(1) = 4, R = {23, 34}.
pub fn r5_fixture() -> Fixture {
    let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (1, 7)];
    let pts = [(-1.0, 0.0), (1.0, 0.0), (1.5, 1.5), (0.0, 2.5), (-1.5, 1.5), (-2.0, -1.0), (2.0, -1.0), (1.0, -1.5)];
    let e = planar(8, &edges, &pts);
    let r = r_of(&e, &[(2, 3), (3, 4)]);
    Fixture { name: "r5-pentagon", embedded: e, r }
}

/// 4-vertex 0 with neighbors 1, 4, 7, 8 in this cyclic order: a pentagon
/// 0-1-2-3-4, a pentagon 0-4-5-6-7, a triangle 0-7-8, and a 9-face outside.
pub fn r6_fixture() -> Fixture {
    // 0=v 1=u 2=p1 3=p2 4=w1 5=x 6=y 7=w2 8=z
    let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5), (5, 6), (6, 7), (7, 0), (7, 8), (8, 0)];
    let pts = [
        (0.0, 0.0),
        (0.0, -1.0),
        (1.0, -1.5),
        (2.0, -0.5),
        (1.0, 0.0),
        (2.0, 1.0),
        (1.0, 2.0),
        (0.0, 1.0),
        (-1.0, 1.0),
    ];
    Fixture { name: "r6-two-pentagons", embedded: planar(9, &edges, &pts), r: RSet::empty() }
}

/// 5-vertex 0 on a triangle 0,1,2 of R-length 5.
pub fn r7_fixture() -> Fixture {
    let edges = [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (0, 5)];
    let pts = [(0.0, 0.0), (1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (0.0, -1.0), (1.0, -1.0)];
    let e = planar(6, &edges, &pts);
    let r = r_of(&e, &[(0, 1), (0, 2)]);
    Fixture { name: "r7-triangle", embedded: e, r }
}

/// 6-vertex 0 on a pentagon, made up by four pendants.
pub fn r8_fixture() -> Fixture {
    let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (0, 6), (0, 7), (0, 8)];
    let pts = [
        (0.0, 0.0),
        (1.0, 1.0),
        (0.5, 2.0),
        (-0.5, 2.0),
        (-1.0, 1.0),
        (-1.0, -1.0),
        (-0.3, -1.0),
        (0.3, -1.0),
        (1.0, -1.0),
    ];
    Fixture { name: "r8-pentagon", embedded: planar(9, &edges, &pts), r: RSet::empty() }
}

/// Triangle 0,1,2 of 4-vertices, all three edges shared with the outer
/// face. Vertex 0 has a non-relaxed arm, 1 only leaves, 2 an arm whose
/// first edge is in R. Edges 01 and 12 get R3, edge 02 gets R2 only
/// under the labeling a = 2.
pub fn r2_r3_adversarial() -> Fixture {
    // 3-4: arm at 0, 5 leaf at 0; 6, 7 leaves at 1; 8-9 arm at 2, 10 leaf at 2
    let edges = [
        (0, 1),
        (1, 2),
        (0, 2),
        (0, 3),
        (3, 4),
        (0, 5),
        (1, 6),
        (1, 7),
        (2, 8),
        (8, 9),
        (2, 10),
    ];
    let pts = [
        (-1.0, 0.0),
        (1.0, 0.0),
        (0.0, 1.5),
        (-2.0, 0.0),
        (-3.0, 0.0),
        (-1.0, -1.0),
        (2.0, 0.0),
        (1.0, -1.0),
        (0.0, 2.5),
        (0.0, 3.5),
        (1.0, 2.5),
    ];
    let e = planar(11, &edges, &pts);
    let r = r_of(&e, &[(2, 8)]);
    Fixture { name: "r2-r3-shared-edges", embedded: e, r }
}

pub fn rule_fixtures() -> Vec<Fixture> {
    vec![
        r1_fixture(),
        r2_fixture(),
        r3_fixture(),
        r4_fixture(),
        r5_fixture(),
        r6_fixture(),
        r7_fixture(),
        r8_fixture(),
        r2_r3_adversarial(),
    ]
}

fn searched(name: &'static str, g: Graph, max_genus: usize) -> Fixture {
    let e = embed_search(&g, max_genus).unwrap_or_else(|| panic!("{name} embeds with Euler genus <= {max_genus}"));
    Fixture { name, embedded: e, r: RSet::empty() }
}

/// Two copies of K3,3 sharing one vertex.
pub fn double_k33() -> Graph {
    let k = Graph::complete_bipartite(3, 3);
    let mut edges: Vec<(Vertex, Vertex)> = k.edges().to_vec();
    // Second copy with vertex 0 shared; others shifted by 5.
    let shift = |v: Vertex| if v == 0 { 0 } else { v + 5 };
    edges.extend(k.edges().iter().map(|&(a, b)| (shift(a), shift(b))));
    Graph::new(11, edges).unwrap()
}

/// Embedded instances spanning Euler genus 0 to 2, orientable and not.
pub fn conservation_fixtures() -> Vec<Fixture> {
    let mut out = rule_fixtures();
    out.push(Fixture { name: "cube", embedded: cube_planar(), r: RSet::empty() });
    out.push(Fixture { name: "c5", embedded: cycle_planar(5), r: RSet::empty() });
    let c7 = cycle_planar(7);
    let r = RSet::all(c7.graph());
    out.push(Fixture { name: "c7-all-r", embedded: c7, r });
    out.push(Fixture { name: "quad-torus", embedded: quad_torus(), r: RSet::empty() });
    let c4 = Graph::cycle(4);
    let twisted = RotationSystem::from_neighbor_orders(
        &c4,
        &[vec![1, 3], vec![0, 2], vec![1, 3], vec![0, 2]],
        &[-1, 1, 1, 1],
    )
    .unwrap();
    out.push(Fixture { name: "c4-twisted", embedded: EmbeddedGraph::new(c4, twisted).unwrap(), r: RSet::empty() });
    out.push(searched("k4", Graph::complete(4), 0));
    out.push(searched("k4-subdivided", oddcolor_core::graph::one_subdivision(&Graph::complete(4)), 0));
    out.push(searched("k5", Graph::complete(5), 2));
    out.push(searched("k33", Graph::complete_bipartite(3, 3), 1));
    out.push(searched("k6", Graph::complete(6), 1));
    out.push(searched("petersen", Graph::petersen(), 1));
    out.push(searched("k44", Graph::complete_bipartite(4, 4), 2));
    out.push(searched("k7", Graph::complete(7), 2));
    out.push(searched("double-k33", double_k33(), 2));
    out
}

/// Splices `k` pendant vertices into random positions of a planar
/// embedding's rotation, keeping it planar.
pub fn with_random_pendants(e: &EmbeddedGraph, rng: &mut ChaCha8Rng, k: usize) -> EmbeddedGraph {
    let g = e.graph();
    let mut order = e.rotation().neighbor_orders(g);
    let mut edges = g.edges().to_vec();
    for _ in 0..k {
        let v = rng.gen_range(0..order.len());
        let x = order.len();
        let pos = rng.gen_range(0..=order[v].len());
        order[v].insert(pos, x);
        order.push(vec![v]);
        edges.push((v, x));
    }
    let h = Graph::new(order.len(), edges).unwrap();
    let rot = RotationSystem::orientable(&h, &order).unwrap();
    EmbeddedGraph::new(h, rot).unwrap()
}

/// Instances that pass the cycle hypotheses and have a vertex of degree at
/// most 2: sparse random graphs, sometimes with an isolated vertex, with a
/// random R.
pub fn reduction_instances(count: usize, seed: u64) -> Vec<(Graph, RSet)> {
    use oddcolor_core::graph::hypothesis_check;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(3..=12);
        let extra = rng.gen_range(0..=n / 2);
        let mut g = random_connected(&mut rng, n, extra);
        if rng.gen_bool(0.1) {
            g = g.with_extra_vertices(1);
        }
        let p = rng.gen_range(0.0..0.5);
        let r = random_r(&mut rng, &g, p);
        let low = g.vertices().any(|v| g.degree(v) <= 2);
        if low && hypothesis_check(&g, &r).passes() {
            out.push((g, r));
        }
    }
    out
}

/// Random lists of size `k` from `{1..universe}`.
pub fn random_lists(rng: &mut ChaCha8Rng, n: usize, k: usize, universe: u32) -> ListAssignment {
    let palette: Vec<Color> = (1..=universe).collect();
    let lists = (0..n).map(|_| palette.choose_multiple(rng, k).copied().collect()).collect();
    ListAssignment::new(lists, k).unwrap()
}
