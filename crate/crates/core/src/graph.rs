//! Simple graphs, distinguished edge sets, cycles and the R-length hypothesis checker.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(Vertex, Vertex),
    #[error("edge index {index} out of range ({edge_count} edges)")]
    EdgeOutOfRange { index: EdgeId, edge_count: usize },
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(Vertex, Vertex),
}

/// A finite simple graph on vertices `0..n`.
///
/// Edges are stored with the smaller endpoint first and sorted
/// lexicographically, so an [`EdgeId`] is the position of the edge in that
/// order. Two graphs built from the same edge set always agree on edge ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
    incident: Vec<Vec<EdgeId>>,
    index: HashMap<(Vertex, Vertex), EdgeId>,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        for pair in list.windows(2) {
            if pair[0] == pair[1] {
                return Err(GraphError::ParallelEdge(pair[0].0, pair[0].1));
            }
        }

        let mut adj = vec![Vec::new(); n];
        let mut incident = vec![Vec::new(); n];
        let mut index = HashMap::with_capacity(list.len());
        for (id, &(u, v)) in list.iter().enumerate() {
            adj[u].push(v);
            adj[v].push(u);
            incident[u].push(id);
            incident[v].push(id);
            index.insert((u, v), id);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph { n, edges: list, adj, incident, index })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, []).expect("edgeless graph is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    /// Edges in id order, smaller endpoint first.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    /// Ids of the edges incident with `v`, in increasing order.
    pub fn incident_edges(&self, v: Vertex) -> &[EdgeId] {
        &self.incident[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.index.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn other_end(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.vertices().map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Proper 2-coloring if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in self.vertices() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap_or(false)).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Graph obtained by deleting `v`. Vertices above `v` shift down by one.
    pub fn remove_vertex(&self, v: Vertex) -> Graph {
        let relabel = |x: Vertex| if x > v { x - 1 } else { x };
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (relabel(a), relabel(b)));
        Graph::new(self.n - 1, edges).expect("vertex deletion keeps the graph simple")
    }

    /// Graph with the extra edges added; fails if one already exists.
    pub fn with_edges<I>(&self, extra: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Graph::new(self.n, self.edges.iter().copied().chain(extra))
    }

    /// Graph with `k` fresh isolated vertices appended.
    pub fn with_extra_vertices(&self, k: usize) -> Graph {
        Graph::new(self.n + k, self.edges.iter().copied()).expect("same edge set")
    }

    /// Subgraph induced by `keep`, relabelled in the order given.
    pub fn induced(&self, keep: &[Vertex]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| pos[a] != usize::MAX && pos[b] != usize::MAX)
            .map(|&(a, b)| (pos[a], pos[b]));
        Graph::new(keep.len(), edges).expect("induced subgraph of a simple graph")
    }

    // Named families used by tests, fixtures and the generator.

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::new(a + b, (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j)))).unwrap()
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::new(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    /// The 3-cube with vertices labelled by their bit patterns.
    pub fn cube() -> Graph {
        let edges = (0..8usize).flat_map(|v| {
            [1usize, 2, 4]
                .into_iter()
                .filter(move |&bit| v & bit == 0)
                .map(move |bit| (v, v | bit))
        });
        Graph::new(8, edges).unwrap()
    }

    /// Cartesian product of cycles `C_rows x C_cols`; vertex `(i, j)` is `i * cols + j`.
    pub fn torus_grid(rows: usize, cols: usize) -> Graph {
        assert!(rows >= 3 && cols >= 3);
        let id = |i: usize, j: usize| (i % rows) * cols + (j % cols);
        let edges = (0..rows).flat_map(|i| {
            (0..cols).flat_map(move |j| [(id(i, j), id(i, j + 1)), (id(i, j), id(i + 1, j))])
        });
        Graph::new(rows * cols, edges).unwrap()
    }

    /// The McGee graph, LCF notation `[12, 7, -7]^8`: the (3,7)-cage on 24 vertices.
    pub fn mcgee() -> Graph {
        let shifts = [12usize, 7, 17];
        let edges: BTreeSet<(Vertex, Vertex)> = (0..24)
            .flat_map(|i| [(i, (i + 1) % 24), (i, (i + shifts[i % 3]) % 24)])
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        Graph::new(24, edges).unwrap()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// A set of distinguished edges of a host graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RSet {
    members: BTreeSet<EdgeId>,
}

impl RSet {
    pub fn empty() -> Self {
        RSet::default()
    }

    pub fn new<I>(g: &Graph, ids: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = EdgeId>,
    {
        let mut members = BTreeSet::new();
        for id in ids {
            if id >= g.edge_count() {
                return Err(GraphError::EdgeOutOfRange { index: id, edge_count: g.edge_count() });
            }
            members.insert(id);
        }
        Ok(RSet { members })
    }

    /// Every edge of `g`.
    pub fn all(g: &Graph) -> Self {
        RSet { members: (0..g.edge_count()).collect() }
    }

    pub fn from_pairs<I>(g: &Graph, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut members = BTreeSet::new();
        for (u, v) in pairs {
            let id = g
                .edge_id(u, v)
                .ok_or(GraphError::NotAnEdge(u, v))?;
            members.insert(id);
        }
        Ok(RSet { members })
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.members.contains(&e)
    }

    pub fn insert(&mut self, e: EdgeId) {
        self.members.insert(e);
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.members.iter().copied()
    }

    pub fn is_subset(&self, other: &RSet) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Checks membership ids against the host graph.
    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        match self.members.iter().next_back() {
            Some(&id) if id >= g.edge_count() => {
                Err(GraphError::EdgeOutOfRange { index: id, edge_count: g.edge_count() })
            }
            _ => Ok(()),
        }
    }

    /// Endpoint pairs of the members.
    pub fn pairs(&self, g: &Graph) -> Vec<(Vertex, Vertex)> {
        self.iter().map(|e| g.endpoints(e)).collect()
    }
}

/// A cycle stored in canonical form: starts at its smallest vertex and
/// proceeds towards the smaller of that vertex's two cycle neighbors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cycle {
    vertices: Vec<Vertex>,
    edges: Vec<EdgeId>,
}

impl Cycle {
    pub fn new(g: &Graph, sequence: &[Vertex]) -> Result<Self, GraphError> {
        if sequence.len() < 3 {
            return Err(GraphError::NotACycle(format!("{sequence:?} has fewer than 3 vertices")));
        }
        let mut seen = BTreeSet::new();
        for &v in sequence {
            g.check_vertex(v)?;
            if !seen.insert(v) {
                return Err(GraphError::NotACycle(format!("vertex {v} repeats in {sequence:?}")));
            }
        }
        let k = sequence.len();
        for i in 0..k {
            let (u, v) = (sequence[i], sequence[(i + 1) % k]);
            if !g.has_edge(u, v) {
                return Err(GraphError::NotACycle(format!("{u}-{v} is not an edge")));
            }
        }
        Ok(Self::from_valid(g, sequence))
    }

    /// Canonicalises a sequence already known to be a cycle of `g`.
    pub(crate) fn from_valid(g: &Graph, sequence: &[Vertex]) -> Self {
        let k = sequence.len();
        let start = (0..k).min_by_key(|&i| sequence[i]).unwrap();
        let next = sequence[(start + 1) % k];
        let prev = sequence[(start + k - 1) % k];
        let vertices: Vec<Vertex> = if next < prev {
            (0..k).map(|i| sequence[(start + i) % k]).collect()
        } else {
            (0..k).map(|i| sequence[(start + k - i) % k]).collect()
        };
        let edges = (0..k)
            .map(|i| g.edge_id(vertices[i], vertices[(i + 1) % k]).expect("cycle edge"))
            .collect();
        Cycle { vertices, edges }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Edge ids in traversal order.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edge_set(&self) -> BTreeSet<EdgeId> {
        self.edges.iter().copied().collect()
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }
}

/// `|E(C)| + |E(C) ∩ R|`: edges in `r` count twice.
pub fn r_length(c: &Cycle, r: &RSet) -> usize {
    c.len() + c.edges.iter().filter(|&&e| r.contains(e)).count()
}

/// R-length of the cycle through `sequence`, validating it first.
pub fn r_length_of(g: &Graph, sequence: &[Vertex], r: &RSet) -> Result<usize, GraphError> {
    Ok(r_length(&Cycle::new(g, sequence)?, r))
}

/// A vertex is R-relaxed when its degree is odd or zero, or it touches an edge of `r`.
pub fn is_r_relaxed(g: &Graph, r: &RSet, v: Vertex) -> Result<bool, GraphError> {
    g.check_vertex(v)?;
    Ok(relaxed_unchecked(g, r, v))
}

fn relaxed_unchecked(g: &Graph, r: &RSet, v: Vertex) -> bool {
    let d = g.degree(v);
    d % 2 == 1 || d == 0 || g.incident_edges(v).iter().any(|&e| r.contains(e))
}

/// R-relaxation flag for every vertex.
pub fn relaxed_vertices(g: &Graph, r: &RSet) -> Vec<bool> {
    g.vertices().map(|v| relaxed_unchecked(g, r, v)).collect()
}

/// All cycles with at most `max_edges` edges, each once, in canonical form and sorted.
pub fn enumerate_cycles(g: &Graph, max_edges: usize) -> Vec<Cycle> {
    let mut out = Vec::new();
    if max_edges < 3 {
        return out;
    }
    let mut path = Vec::with_capacity(max_edges);
    let mut on_path = vec![false; g.vertex_count()];
    for start in g.vertices() {
        path.push(start);
        on_path[start] = true;
        extend_paths(g, start, max_edges, &mut path, &mut on_path, &mut out);
        on_path[start] = false;
        path.pop();
    }
    out.sort();
    out
}

// Paths start at their minimum vertex; a closing edge back to `start` yields a
// cycle, kept only in the orientation whose second vertex is smaller than its last.
fn extend_paths(
    g: &Graph,
    start: Vertex,
    max_edges: usize,
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
    out: &mut Vec<Cycle>,
) {
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w == start && path.len() >= 3 && path[1] < last {
            out.push(Cycle::from_valid(g, path));
        }
        if w > start && !on_path[w] && path.len() < max_edges {
            path.push(w);
            on_path[w] = true;
            extend_paths(g, start, max_edges, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in g.vertices() {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if let Some(b) = best {
                if 2 * dist[u] + 1 >= b {
                    break;
                }
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// One reason a graph fails the cycle hypotheses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HypothesisViolation {
    /// A cycle whose R-length is 3, 4 or 6.
    ForbiddenRLength { cycle: Cycle, r_length: usize },
    /// Two cycles of R-length 5 whose edge sets meet in exactly one edge.
    FiveCyclesShareOneEdge { first: Cycle, second: Cycle, shared_edge: EdgeId },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub max_cycle_edges: usize,
    pub violations: Vec<HypothesisViolation>,
}

impl HypothesisReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Cycles with more edges than this cannot have R-length 3, 4, 5 or 6.
pub const DEFAULT_CYCLE_BOUND: usize = 6;

/// Checks that no cycle has R-length in {3, 4, 6} and that no two distinct
/// cycles of R-length 5 share exactly one edge.
pub fn hypothesis_check(g: &Graph, r: &RSet) -> HypothesisReport {
    hypothesis_check_bounded(g, r, DEFAULT_CYCLE_BOUND)
}

pub fn hypothesis_check_bounded(g: &Graph, r: &RSet, max_cycle_edges: usize) -> HypothesisReport {
    let cycles = enumerate_cycles(g, max_cycle_edges);
    let mut violations = Vec::new();
    let mut fives = Vec::new();
    for c in &cycles {
        match r_length(c, r) {
            len @ (3 | 4 | 6) => {
                violations.push(HypothesisViolation::ForbiddenRLength { cycle: c.clone(), r_length: len })
            }
            5 => fives.push(c),
            _ => {}
        }
    }

    // Pairs sharing exactly one edge are discovered exactly once, under that edge.
    let mut by_edge: HashMap<EdgeId, Vec<usize>> = HashMap::new();
    for (i, c) in fives.iter().enumerate() {
        for &e in c.edges() {
            by_edge.entry(e).or_default().push(i);
        }
    }
    let mut pairs = Vec::new();
    for (&e, members) in &by_edge {
        for (x, &i) in members.iter().enumerate() {
            for &j in &members[x + 1..] {
                let shared = fives[i].edges().iter().filter(|&&f| fives[j].contains_edge(f)).count();
                if shared == 1 {
                    pairs.push((i, j, e));
                }
            }
        }
    }
    pairs.sort_unstable();
    violations.extend(pairs.into_iter().map(|(i, j, e)| HypothesisViolation::FiveCyclesShareOneEdge {
        first: fives[i].clone(),
        second: fives[j].clone(),
        shared_edge: e,
    }));
    HypothesisReport { max_cycle_edges, violations }
}

/// Replaces every edge `uv` (id `i`) by a path `u - (n + i) - v`.
pub fn one_subdivision(h: &Graph) -> Graph {
    let n = h.vertex_count();
    let edges = h
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(i, &(u, v))| [(u, n + i), (v, n + i)]);
    Graph::new(n + h.edge_count(), edges).expect("subdivision is simple")
}
