//! Combinatorial maps: rotation systems with edge signatures, face tracing,
//! Euler genus and a pruned exhaustive embedding search.
//!
//! A dart is an edge together with one of its ends (its tail). Faces are
//! traced with a local orientation flag that flips whenever the walk crosses
//! an edge of signature -1, which covers orientable and non-orientable
//! surfaces with one routine.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{girth, EdgeId, Graph, GraphError, Vertex};

pub type FaceId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("rotation at vertex {vertex}: {reason}")]
    BadRotation { vertex: Vertex, reason: String },
    #[error("expected {expected} edge signatures, got {got}")]
    SignatureCount { expected: usize, got: usize },
    #[error("edge signature must be +1 or -1, got {0}")]
    BadSignature(i64),
    #[error("rotation system covers {rotation} vertices but the graph has {graph}")]
    SizeMismatch { rotation: usize, graph: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One end of an edge, named by its tail vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DartRef {
    pub vertex: Vertex,
    pub edge: EdgeId,
}

/// Cyclic order of incident edges at every vertex plus a signature per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    order: Vec<Vec<EdgeId>>,
    twisted: Vec<bool>,
    // slot[e][side]: position of e in the rotation of its endpoint `side`.
    slot: Vec<[usize; 2]>,
}

impl RotationSystem {
    /// `order[v]` lists the edge ids at `v` in cyclic order; `signs[e]` is +1 or -1.
    pub fn new(g: &Graph, order: Vec<Vec<EdgeId>>, signs: &[i64]) -> Result<Self, EmbeddingError> {
        if order.len() != g.vertex_count() {
            return Err(EmbeddingError::SizeMismatch { rotation: order.len(), graph: g.vertex_count() });
        }
        if signs.len() != g.edge_count() {
            return Err(EmbeddingError::SignatureCount { expected: g.edge_count(), got: signs.len() });
        }
        let twisted = signs
            .iter()
            .map(|&s| match s {
                1 => Ok(false),
                -1 => Ok(true),
                other => Err(EmbeddingError::BadSignature(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        for (v, rot) in order.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted != g.incident_edges(v) {
                return Err(EmbeddingError::BadRotation {
                    vertex: v,
                    reason: format!("{rot:?} is not a permutation of the incident edges {:?}", g.incident_edges(v)),
                });
            }
        }
        let slot = compute_slots(g, &order);
        Ok(RotationSystem { order, twisted, slot })
    }

    /// Builds from neighbor lists, the form used in embedding files.
    pub fn from_neighbor_orders(
        g: &Graph,
        neighbors: &[Vec<Vertex>],
        signs: &[i64],
    ) -> Result<Self, EmbeddingError> {
        if neighbors.len() != g.vertex_count() {
            return Err(EmbeddingError::SizeMismatch { rotation: neighbors.len(), graph: g.vertex_count() });
        }
        let order = neighbors
            .iter()
            .enumerate()
            .map(|(v, list)| {
                list.iter()
                    .map(|&w| {
                        g.edge_id(v, w).ok_or_else(|| EmbeddingError::BadRotation {
                            vertex: v,
                            reason: format!("{w} is not a neighbor"),
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        RotationSystem::new(g, order, signs)
    }

    /// All signatures +1.
    pub fn orientable(g: &Graph, neighbors: &[Vec<Vertex>]) -> Result<Self, EmbeddingError> {
        RotationSystem::from_neighbor_orders(g, neighbors, &vec![1; g.edge_count()])
    }

    pub fn vertex_count(&self) -> usize {
        self.order.len()
    }

    pub fn edge_order(&self, v: Vertex) -> &[EdgeId] {
        &self.order[v]
    }

    pub fn neighbor_orders(&self, g: &Graph) -> Vec<Vec<Vertex>> {
        self.order
            .iter()
            .enumerate()
            .map(|(v, rot)| rot.iter().map(|&e| g.other_end(e, v)).collect())
            .collect()
    }

    pub fn signs(&self) -> Vec<i64> {
        self.twisted.iter().map(|&t| if t { -1 } else { 1 }).collect()
    }

    pub fn sign(&self, e: EdgeId) -> i64 {
        if self.twisted[e] {
            -1
        } else {
            1
        }
    }

    /// Reverses the rotation at `v` and negates the signatures of its edges.
    /// The traced faces are unchanged up to walk direction.
    pub fn flip_vertex(&mut self, g: &Graph, v: Vertex) {
        self.order[v].reverse();
        for &e in g.incident_edges(v) {
            self.twisted[e] = !self.twisted[e];
        }
        self.slot = compute_slots(g, &self.order);
    }

    /// Normalises the edges of the breadth-first spanning forest to signature +1
    /// by flipping vertices.
    pub fn canonicalize_signs(&mut self, g: &Graph) {
        for (child, edge) in bfs_forest(g) {
            if self.twisted[edge] {
                self.flip_vertex(g, child);
            }
        }
    }

    /// True if some set of vertex flips makes every signature +1.
    pub fn is_orientable(&self, g: &Graph) -> bool {
        let mut copy = self.clone();
        copy.canonicalize_signs(g);
        copy.twisted.iter().all(|&t| !t)
    }
}

fn compute_slots(g: &Graph, order: &[Vec<EdgeId>]) -> Vec<[usize; 2]> {
    let mut slot = vec![[usize::MAX; 2]; g.edge_count()];
    for (v, rot) in order.iter().enumerate() {
        for (i, &e) in rot.iter().enumerate() {
            let side = usize::from(g.endpoints(e).0 != v);
            slot[e][side] = i;
        }
    }
    slot
}

/// (child, tree edge) pairs of a breadth-first spanning forest, in visiting order.
fn bfs_forest(g: &Graph) -> Vec<(Vertex, EdgeId)> {
    let mut seen = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    for root in g.vertices() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &e in g.incident_edges(u) {
                let w = g.other_end(e, u);
                if !seen[w] {
                    seen[w] = true;
                    out.push((w, e));
                    queue.push_back(w);
                }
            }
        }
    }
    out
}

#[inline]
fn dart_tail(g: &Graph, d: usize) -> Vertex {
    let (a, b) = g.endpoints(d >> 1);
    if d & 1 == 0 {
        a
    } else {
        b
    }
}

#[inline]
fn dart_at(g: &Graph, e: EdgeId, tail: Vertex) -> usize {
    2 * e + usize::from(g.endpoints(e).0 != tail)
}

// A tracing state is a dart plus the local orientation flag, packed as 2 * dart + flag.
#[inline]
fn face_step(g: &Graph, order: &[Vec<EdgeId>], slot: &[[usize; 2]], twisted: &[bool], state: usize) -> usize {
    let d = state >> 1;
    let e = d >> 1;
    let flipped = (state & 1 == 1) ^ twisted[e];
    let back = d ^ 1;
    let w = dart_tail(g, back);
    let rot = &order[w];
    let i = slot[e][back & 1];
    let j = if flipped { (i + rot.len() - 1) % rot.len() } else { (i + 1) % rot.len() };
    (dart_at(g, rot[j], w) << 1) | usize::from(flipped)
}

#[inline]
fn reverse_state(twisted: &[bool], state: usize) -> usize {
    let d = state >> 1;
    let flipped = (state & 1 == 1) ^ twisted[d >> 1];
    ((d ^ 1) << 1) | usize::from(!flipped)
}

/// A face boundary walk. Dart `i` runs from `darts[i].vertex` to the tail of dart `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceWalk {
    pub darts: Vec<DartRef>,
}

impl FaceWalk {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Vertex at each corner, in walk order (with repetition).
    pub fn corner_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.darts.iter().map(|d| d.vertex)
    }

    /// Edges in walk order (with repetition).
    pub fn walk_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.darts.iter().map(|d| d.edge)
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.corner_vertices().collect()
    }

    pub fn edge_set(&self) -> BTreeSet<EdgeId> {
        self.walk_edges().collect()
    }

    pub fn is_incident_with(&self, v: Vertex) -> bool {
        self.darts.iter().any(|d| d.vertex == v)
    }

    /// True when the walk visits no vertex twice, i.e. it bounds a cycle.
    pub fn is_cycle(&self) -> bool {
        self.len() >= 3 && self.vertex_set().len() == self.len()
    }
}

/// Number of darts on the walk; an edge with both sides on the face counts twice.
pub fn face_length(f: &FaceWalk) -> usize {
    f.len()
}

/// Partitions all darts into face boundary walks.
pub fn trace_faces(g: &Graph, rot: &RotationSystem) -> Result<Vec<FaceWalk>, EmbeddingError> {
    if rot.vertex_count() != g.vertex_count() || rot.twisted.len() != g.edge_count() {
        return Err(EmbeddingError::SizeMismatch { rotation: rot.vertex_count(), graph: g.vertex_count() });
    }
    for v in g.vertices() {
        if rot.order[v].len() != g.degree(v) {
            return Err(EmbeddingError::BadRotation { vertex: v, reason: "degree mismatch".into() });
        }
    }
    if g.edge_count() == 0 {
        // A lone vertex on the sphere has one face with an empty boundary.
        return Ok(if g.vertex_count() == 1 { vec![FaceWalk { darts: Vec::new() }] } else { Vec::new() });
    }
    let states = 4 * g.edge_count();
    let mut used = vec![false; states];
    let mut faces = Vec::new();
    for start in (0..states).step_by(2) {
        if used[start] {
            continue;
        }
        let mut darts = Vec::new();
        let mut s = start;
        loop {
            used[s] = true;
            used[reverse_state(&rot.twisted, s)] = true;
            let d = s >> 1;
            darts.push(DartRef { vertex: dart_tail(g, d), edge: d >> 1 });
            s = face_step(g, &rot.order, &rot.slot, &rot.twisted, s);
            if s == start {
                break;
            }
        }
        faces.push(FaceWalk { darts });
    }
    Ok(faces)
}

/// A connected graph with a fixed cellular embedding and its traced faces.
#[derive(Debug, Clone)]
pub struct EmbeddedGraph {
    graph: Graph,
    rotation: RotationSystem,
    faces: Vec<FaceWalk>,
    // sides[e]: the (face, position) of each of the two darts of e.
    sides: Vec<[(FaceId, usize); 2]>,
    euler_genus: i64,
}

impl EmbeddedGraph {
    pub fn new(graph: Graph, rotation: RotationSystem) -> Result<Self, EmbeddingError> {
        if graph.vertex_count() == 0 {
            return Err(EmbeddingError::Empty);
        }
        if !graph.is_connected() {
            return Err(EmbeddingError::Disconnected);
        }
        let faces = trace_faces(&graph, &rotation)?;
        let mut sides = vec![[(usize::MAX, 0); 2]; graph.edge_count()];
        let mut filled = vec![0usize; graph.edge_count()];
        for (f, walk) in faces.iter().enumerate() {
            for (i, d) in walk.darts.iter().enumerate() {
                let e = d.edge;
                sides[e][filled[e]] = (f, i);
                filled[e] += 1;
            }
        }
        debug_assert!(filled.iter().all(|&c| c == 2));
        let chi = graph.vertex_count() as i64 - graph.edge_count() as i64 + faces.len() as i64;
        Ok(EmbeddedGraph { graph, rotation, faces, sides, euler_genus: 2 - chi })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self) -> &RotationSystem {
        &self.rotation
    }

    pub fn faces(&self) -> &[FaceWalk] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &FaceWalk {
        &self.faces[f]
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn face_len(&self, f: FaceId) -> usize {
        self.faces[f].len()
    }

    pub fn euler_genus(&self) -> i64 {
        self.euler_genus
    }

    /// `|V| - |E| + |F|`.
    pub fn euler_characteristic(&self) -> i64 {
        2 - self.euler_genus
    }

    pub fn is_orientable(&self) -> bool {
        self.rotation.is_orientable(&self.graph)
    }

    /// The faces on the two sides of `e` (equal when `e` has both sides on one face).
    pub fn edge_faces(&self, e: EdgeId) -> (FaceId, FaceId) {
        (self.sides[e][0].0, self.sides[e][1].0)
    }

    /// For a side of `e` lying on face `f`, the face on the opposite side.
    pub fn across(&self, e: EdgeId, f: FaceId) -> FaceId {
        let (a, b) = self.edge_faces(e);
        if a == f {
            b
        } else {
            a
        }
    }

    /// Positions of the darts of `e` inside their faces.
    pub fn edge_sides(&self, e: EdgeId) -> [(FaceId, usize); 2] {
        self.sides[e]
    }

    pub fn face_vertices(&self, f: FaceId) -> BTreeSet<Vertex> {
        self.faces[f].vertex_set()
    }

    pub fn is_incident(&self, v: Vertex, f: FaceId) -> bool {
        self.faces[f].is_incident_with(v)
    }

    /// Every (face, position) where `v` sits at a corner.
    pub fn corners(&self, v: Vertex) -> Vec<(FaceId, usize)> {
        let mut out = Vec::new();
        for (f, walk) in self.faces.iter().enumerate() {
            for (i, d) in walk.darts.iter().enumerate() {
                if d.vertex == v {
                    out.push((f, i));
                }
            }
        }
        out
    }

    /// Distinct faces incident with `v`.
    pub fn faces_at(&self, v: Vertex) -> BTreeSet<FaceId> {
        self.corners(v).into_iter().map(|(f, _)| f).collect()
    }

    /// The two edges meeting at the corner in position `i` of face `f`: (incoming, outgoing).
    pub fn corner_edges(&self, f: FaceId, i: usize) -> (EdgeId, EdgeId) {
        let walk = &self.faces[f].darts;
        let k = walk.len();
        (walk[(i + k - 1) % k].edge, walk[i].edge)
    }

    /// Edges incident with both faces.
    pub fn shared_edges(&self, f1: FaceId, f2: FaceId) -> BTreeSet<EdgeId> {
        self.faces[f1].walk_edges().filter(|&e| {
            let (a, b) = self.edge_faces(e);
            if f1 == f2 {
                a == b
            } else {
                (a == f1 && b == f2) || (a == f2 && b == f1)
            }
        })
        .collect()
    }

    /// Faces adjacent to `f` across some edge, excluding `f` itself.
    pub fn adjacent_faces(&self, f: FaceId) -> BTreeSet<FaceId> {
        self.faces[f].walk_edges().map(|e| self.across(e, f)).filter(|&g| g != f).collect()
    }

    /// Neighbors of `v` joined to it by an edge of the walk of `f`.
    pub fn walk_neighbors(&self, v: Vertex, f: FaceId) -> BTreeSet<Vertex> {
        self.faces[f]
            .walk_edges()
            .filter_map(|e| {
                let (a, b) = self.graph.endpoints(e);
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Copy with spanning-tree signatures normalised to +1.
    pub fn canonical(&self) -> EmbeddedGraph {
        let mut rot = self.rotation.clone();
        rot.canonicalize_signs(&self.graph);
        EmbeddedGraph::new(self.graph.clone(), rot).expect("flips preserve validity")
    }
}

/// Sum of face lengths always equals `2|E|`.
pub fn euler_genus(e: &EmbeddedGraph) -> i64 {
    e.euler_genus()
}

/// For each unordered face pair `(f1 <= f2)` the edges incident with both.
/// Pairs `(f, f)` collect edges whose two sides lie on the same face.
pub fn face_adjacency(e: &EmbeddedGraph) -> BTreeMap<(FaceId, FaceId), BTreeSet<EdgeId>> {
    let mut out: BTreeMap<(FaceId, FaceId), BTreeSet<EdgeId>> = BTreeMap::new();
    for edge in 0..e.graph().edge_count() {
        let (a, b) = e.edge_faces(edge);
        out.entry((a.min(b), a.max(b))).or_default().insert(edge);
    }
    out
}

/// Embedding of Euler genus at most `max_genus`, or `None` if none exists.
///
/// Orientable rotation systems are searched first, then (for `max_genus >= 1`)
/// rotation systems with signatures on the non-tree edges. Vertices receive
/// their rotation in breadth-first order; partially determined face walks bound
/// the number of faces still reachable, which prunes the search. The result
/// is the first success in this fixed order.
pub fn embed_search(g: &Graph, max_genus: usize) -> Option<EmbeddedGraph> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return None;
    }
    let e = g.edge_count() as i64;
    let v = g.vertex_count() as i64;
    let needed = (e - v + 2 - max_genus as i64).max(1) as usize;
    let shortest = girth(g).unwrap_or(usize::MAX);

    let mut search = Search::new(g, needed, shortest, false);
    if let Some(rot) = search.run() {
        return EmbeddedGraph::new(g.clone(), rot).ok();
    }
    if max_genus >= 1 {
        let mut search = Search::new(g, needed, shortest, true);
        if let Some(rot) = search.run() {
            return EmbeddedGraph::new(g.clone(), rot).ok();
        }
    }
    None
}

struct Search<'a> {
    g: &'a Graph,
    needed_faces: usize,
    girth: usize,
    twists: bool,
    order: Vec<Vertex>,
    position: Vec<usize>,
    tree: Vec<bool>,
    rotation: Vec<Vec<EdgeId>>,
    slot: Vec<[usize; 2]>,
    twisted: Vec<bool>,
    sign_known: Vec<bool>,
    assigned: Vec<bool>,
    // Scratch buffers for the bound.
    has_pred: Vec<bool>,
    seen: Vec<bool>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, needed_faces: usize, girth: usize, twists: bool) -> Self {
        let forest = bfs_forest(g);
        let mut order = vec![0];
        order.extend(forest.iter().map(|&(c, _)| c));
        let mut position = vec![0; g.vertex_count()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let mut tree = vec![false; g.edge_count()];
        for &(_, e) in &forest {
            tree[e] = true;
        }
        let states = 4 * g.edge_count();
        Search {
            g,
            needed_faces,
            girth,
            twists,
            order,
            position,
            sign_known: if twists { tree.clone() } else { vec![true; g.edge_count()] },
            tree,
            rotation: vec![Vec::new(); g.vertex_count()],
            slot: vec![[usize::MAX; 2]; g.edge_count()],
            twisted: vec![false; g.edge_count()],
            assigned: vec![false; g.vertex_count()],
            has_pred: vec![false; states],
            seen: vec![false; states],
        }
    }

    fn run(&mut self) -> Option<RotationSystem> {
        if self.g.edge_count() == 0 {
            return RotationSystem::new(self.g, vec![Vec::new(); self.g.vertex_count()], &[]).ok();
        }
        if self.descend(0) {
            let signs: Vec<i64> = self.twisted.iter().map(|&t| if t { -1 } else { 1 }).collect();
            RotationSystem::new(self.g, self.rotation.clone(), &signs).ok()
        } else {
            None
        }
    }

    fn descend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return self.face_bound() >= self.needed_faces;
        }
        let v = self.order[depth];
        let incident = self.g.incident_edges(v).to_vec();
        // Non-tree edges to already placed vertices get their signature here.
        let back: Vec<EdgeId> = if self.twists {
            incident
                .iter()
                .copied()
                .filter(|&e| !self.tree[e] && self.position[self.g.other_end(e, v)] < depth)
                .collect()
        } else {
            Vec::new()
        };
        let mut rot = incident.clone();
        self.assigned[v] = true;
        loop {
            self.set_rotation(v, &rot);
            for mask in 0u64..(1u64 << back.len()) {
                for (bit, &e) in back.iter().enumerate() {
                    self.twisted[e] = mask >> bit & 1 == 1;
                    self.sign_known[e] = true;
                }
                if self.face_bound() >= self.needed_faces && self.descend(depth + 1) {
                    return true;
                }
            }
            if rot.len() < 3 || !next_permutation(&mut rot[1..]) {
                break;
            }
        }
        for &e in &back {
            self.twisted[e] = false;
            self.sign_known[e] = false;
        }
        self.assigned[v] = false;
        self.rotation[v].clear();
        false
    }

    fn set_rotation(&mut self, v: Vertex, rot: &[EdgeId]) {
        self.rotation[v] = rot.to_vec();
        for (i, &e) in rot.iter().enumerate() {
            let side = usize::from(self.g.endpoints(e).0 != v);
            self.slot[e][side] = i;
        }
    }

    fn successor(&self, state: usize) -> Option<usize> {
        let d = state >> 1;
        let e = d >> 1;
        let head = dart_tail(self.g, d ^ 1);
        if !self.assigned[head] || !self.sign_known[e] {
            return None;
        }
        Some(face_step(self.g, &self.rotation, &self.slot, &self.twisted, state))
    }

    /// Upper bound on the number of faces of any completion.
    fn face_bound(&mut self) -> usize {
        // Orientable search only follows flag-0 states; with twists each face is
        // traced once in each direction.
        let states = 4 * self.g.edge_count();
        let step = if self.twists { 1 } else { 2 };
        self.has_pred.iter_mut().for_each(|x| *x = false);
        self.seen.iter_mut().for_each(|x| *x = false);
        for s in (0..states).step_by(step) {
            if let Some(t) = self.successor(s) {
                self.has_pred[t] = true;
            }
        }
        let g = self.girth;
        let mut closed = 0usize;
        let mut open_states = 0usize;
        let mut excess = 0usize;
        for s in (0..states).step_by(step) {
            if self.has_pred[s] || self.seen[s] {
                continue;
            }
            let mut k = 0;
            let mut cur = Some(s);
            while let Some(c) = cur {
                self.seen[c] = true;
                k += 1;
                cur = self.successor(c);
            }
            open_states += k;
            excess += k.saturating_sub(g);
        }
        for s in (0..states).step_by(step) {
            if self.seen[s] {
                continue;
            }
            let mut c = s;
            loop {
                self.seen[c] = true;
                c = self.successor(c).expect("states left over lie on closed orbits");
                if c == s {
                    break;
                }
            }
            closed += 1;
        }
        let open_orbits = if g == usize::MAX { usize::from(open_states > 0) } else { (open_states - excess) / g };
        let orbits = closed + open_orbits;
        if self.twists {
            orbits / 2
        } else {
            orbits
        }
    }
}

/// Lexicographic next permutation; false when `xs` was the last one.
fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Rotation with neighbors sorted by angle around straight-line positions.
/// Gives a planar embedding whenever the drawing has no crossings.
pub fn rotation_from_coordinates(g: &Graph, points: &[(f64, f64)]) -> RotationSystem {
    let order = g
        .vertices()
        .map(|v| {
            let mut edges = g.incident_edges(v).to_vec();
            let (x0, y0) = points[v];
            edges.sort_by(|&a, &b| {
                let (xa, ya) = points[g.other_end(a, v)];
                let (xb, yb) = points[g.other_end(b, v)];
                let ta = (ya - y0).atan2(xa - x0);
                let tb = (yb - y0).atan2(xb - x0);
                ta.partial_cmp(&tb).unwrap()
            });
            edges
        })
        .collect();
    RotationSystem::new(g, order, &vec![1; g.edge_count()]).expect("sorted incident edges form a rotation")
}
