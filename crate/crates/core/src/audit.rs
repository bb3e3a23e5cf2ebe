//! Structural audits: detectors for the configurations a smallest
//! counterexample cannot contain. Each check enumerates every instantiation
//! of its pattern and reports one witness per violating tuple (existential
//! choices inside a tuple are the smallest available ones).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::embedding::{EmbeddedGraph, FaceId};
use crate::graph::{enumerate_cycles, r_length, relaxed_vertices, Cycle, EdgeId, Graph, RSet, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LemmaId {
    #[serde(rename = "L3.1")]
    Connected,
    #[serde(rename = "L3.2")]
    MinDegree,
    #[serde(rename = "L3.3")]
    ThreeVertexRelaxed,
    #[serde(rename = "L3.4")]
    TriangleRelaxed,
    #[serde(rename = "L3.5")]
    ThreeVertexTriangle,
    #[serde(rename = "L3.6")]
    RelaxedFourVertex,
    #[serde(rename = "L3.7")]
    FourVertexTwoThrees,
    #[serde(rename = "L3.8")]
    FourVertexAllThrees,
    #[serde(rename = "L3.9")]
    AdjacentFourVertices,
    #[serde(rename = "L3.10")]
    TrianglesShareEdge,
    #[serde(rename = "L3.11")]
    TriangleQuadFaces,
    #[serde(rename = "L3.12-unnamed")]
    TriangleQuadOuterFace,
    #[serde(rename = "L3.13")]
    QuadFaces,
    #[serde(rename = "L3.14")]
    PentagonFaces,
    #[serde(rename = "L3.15")]
    ThreeVertexPentagons,
    #[serde(rename = "L3.16")]
    FourVertexQuads,
}

impl LemmaId {
    pub const ALL: [LemmaId; 16] = [
        LemmaId::Connected,
        LemmaId::MinDegree,
        LemmaId::ThreeVertexRelaxed,
        LemmaId::TriangleRelaxed,
        LemmaId::ThreeVertexTriangle,
        LemmaId::RelaxedFourVertex,
        LemmaId::FourVertexTwoThrees,
        LemmaId::FourVertexAllThrees,
        LemmaId::AdjacentFourVertices,
        LemmaId::TrianglesShareEdge,
        LemmaId::TriangleQuadFaces,
        LemmaId::TriangleQuadOuterFace,
        LemmaId::QuadFaces,
        LemmaId::PentagonFaces,
        LemmaId::ThreeVertexPentagons,
        LemmaId::FourVertexQuads,
    ];

    pub fn code(self) -> &'static str {
        match self {
            LemmaId::Connected => "L3.1",
            LemmaId::MinDegree => "L3.2",
            LemmaId::ThreeVertexRelaxed => "L3.3",
            LemmaId::TriangleRelaxed => "L3.4",
            LemmaId::ThreeVertexTriangle => "L3.5",
            LemmaId::RelaxedFourVertex => "L3.6",
            LemmaId::FourVertexTwoThrees => "L3.7",
            LemmaId::FourVertexAllThrees => "L3.8",
            LemmaId::AdjacentFourVertices => "L3.9",
            LemmaId::TrianglesShareEdge => "L3.10",
            LemmaId::TriangleQuadFaces => "L3.11",
            LemmaId::TriangleQuadOuterFace => "L3.12-unnamed",
            LemmaId::QuadFaces => "L3.13",
            LemmaId::PentagonFaces => "L3.14",
            LemmaId::ThreeVertexPentagons => "L3.15",
            LemmaId::FourVertexQuads => "L3.16",
        }
    }

    /// Whether the statement refers to faces of an embedding.
    pub fn needs_embedding(self) -> bool {
        self >= LemmaId::TriangleQuadFaces
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Violated,
    Skipped,
}

/// The tuple witnessing one violation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Disconnected { components: Vec<Vec<Vertex>> },
    LowDegree { vertex: Vertex, degree: usize },
    /// A 3-vertex and its relaxed neighbors (at least two).
    ThreeVertexRelaxedNeighbors { vertex: Vertex, relaxed: Vec<Vertex> },
    TriangleRLength { triangle: Cycle, r_length: usize },
    TriangleVertexNotRelaxed { vertex: Vertex, triangle: Cycle },
    ThreeVertexOnTriangle { vertex: Vertex, triangle: Cycle },
    /// A relaxed 4-vertex whose four neighbors are relaxed.
    RelaxedFourVertex { vertex: Vertex, neighbors: Vec<Vertex> },
    /// 4-vertex `x`, 3-neighbors `y < z`, relaxed `y'` in N(y)-x, `z'` in N(z)-x, `x'` in N[x]-{y,z}.
    FourVertexTwoThrees { x: Vertex, y: Vertex, z: Vertex, y_relaxed: Vertex, z_relaxed: Vertex, x_relaxed: Vertex },
    /// 4-vertex and, per neighbor, a relaxed vertex adjacent to it other than the 4-vertex.
    FourVertexAllThrees { vertex: Vertex, neighbors: Vec<(Vertex, Vertex)> },
    /// Adjacent 4-vertices `x < y`, their 3-neighbors and the relaxed vertices next to those.
    AdjacentFourVertices {
        x: Vertex,
        y: Vertex,
        x1: Vertex,
        x2: Vertex,
        y1: Vertex,
        y2: Vertex,
        relaxed: [Vertex; 4],
    },
    TrianglesShareEdge { first: Cycle, second: Cycle, edge: EdgeId },
    /// Adjacent 3-face and 4-face sharing other than one edge, or touching a non-relaxed vertex.
    TriangleQuadFaces { triangle: FaceId, quad: FaceId, shared: Vec<EdgeId>, non_relaxed: Vec<Vertex> },
    /// The face beyond edge `edge` of the 3-face is shorter than 5.
    TriangleQuadOuterFace {
        triangle: FaceId,
        quad: FaceId,
        vertex: Vertex,
        edge: EdgeId,
        face: FaceId,
        length: usize,
    },
    QuadFacesLowDegree { first: FaceId, second: FaceId, edge: EdgeId, vertex: Vertex, degree: usize },
    /// 5-faces sharing only `a1 a2` with deg(a1) = 3, and both `a1'`, `a2'` of degree below 4.
    PentagonFaces { first: FaceId, second: FaceId, a1: Vertex, a2: Vertex, a1_prime: Vertex, a2_prime: Vertex },
    ThreeVertexPentagonsQuad { vertex: Vertex, pentagons: [FaceId; 2], quad: FaceId },
    FourVertexAllQuads { vertex: Vertex, faces: Vec<FaceId> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaAudit {
    pub lemma: LemmaId,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl LemmaAudit {
    fn from_witnesses(lemma: LemmaId, witnesses: Vec<Witness>) -> Self {
        let verdict = if witnesses.is_empty() { Verdict::Holds } else { Verdict::Violated };
        LemmaAudit { lemma, verdict, witnesses, note: None }
    }

    fn skipped(lemma: LemmaId, note: &str) -> Self {
        LemmaAudit { lemma, verdict: Verdict::Skipped, witnesses: Vec::new(), note: Some(note.to_string()) }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub lemmas: Vec<LemmaAudit>,
}

impl AuditReport {
    pub fn merge(mut self, other: AuditReport) -> AuditReport {
        self.lemmas.extend(other.lemmas);
        self.lemmas.sort_by_key(|l| l.lemma);
        self
    }

    pub fn get(&self, lemma: LemmaId) -> Option<&LemmaAudit> {
        self.lemmas.iter().find(|l| l.lemma == lemma)
    }

    pub fn verdict(&self, lemma: LemmaId) -> Option<Verdict> {
        self.get(lemma).map(|l| l.verdict)
    }

    pub fn violated(&self) -> Vec<LemmaId> {
        self.lemmas.iter().filter(|l| l.verdict == Verdict::Violated).map(|l| l.lemma).collect()
    }

    pub fn violation_count(&self) -> usize {
        self.lemmas.iter().map(|l| l.witnesses.len()).sum()
    }

    pub fn has_skipped(&self) -> bool {
        self.lemmas.iter().any(|l| l.verdict == Verdict::Skipped)
    }

    /// No violation and nothing skipped.
    pub fn counterexample_shaped(&self) -> bool {
        self.lemmas.iter().all(|l| l.verdict == Verdict::Holds)
    }
}

fn report(entries: Vec<(LemmaId, Vec<Witness>)>) -> AuditReport {
    AuditReport { lemmas: entries.into_iter().map(|(l, w)| LemmaAudit::from_witnesses(l, w)).collect() }
}

/// Connectivity and minimum degree.
pub fn check_degree_lemmas(g: &Graph, _r: &RSet) -> AuditReport {
    let mut conn = Vec::new();
    if !g.is_connected() {
        conn.push(Witness::Disconnected { components: g.components() });
    }
    let low = g
        .vertices()
        .filter(|&v| g.degree(v) <= 2)
        .map(|v| Witness::LowDegree { vertex: v, degree: g.degree(v) })
        .collect();
    report(vec![(LemmaId::Connected, conn), (LemmaId::MinDegree, low)])
}

/// 3-vertices with two relaxed neighbors; relaxed 4-vertices with four.
pub fn check_relaxed_neighborhoods(g: &Graph, r: &RSet) -> AuditReport {
    let relaxed = relaxed_vertices(g, r);
    let mut threes = Vec::new();
    let mut fours = Vec::new();
    for v in g.vertices() {
        let rn: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| relaxed[w]).collect();
        if g.degree(v) == 3 && rn.len() >= 2 {
            threes.push(Witness::ThreeVertexRelaxedNeighbors { vertex: v, relaxed: rn.clone() });
        }
        if g.degree(v) == 4 && relaxed[v] && rn.len() == 4 {
            fours.push(Witness::RelaxedFourVertex { vertex: v, neighbors: rn });
        }
    }
    report(vec![(LemmaId::ThreeVertexRelaxed, threes), (LemmaId::RelaxedFourVertex, fours)])
}

/// Triangle R-lengths, relaxed triangle vertices, 3-vertices on triangles,
/// and triangles sharing an edge.
pub fn check_triangle_lemmas(g: &Graph, r: &RSet) -> AuditReport {
    let relaxed = relaxed_vertices(g, r);
    let triangles = enumerate_cycles(g, 3);
    let mut rlen = Vec::new();
    let mut three_on = Vec::new();
    for t in &triangles {
        let len = r_length(t, r);
        if len != 5 {
            rlen.push(Witness::TriangleRLength { triangle: t.clone(), r_length: len });
        }
        for &v in t.vertices() {
            if !relaxed[v] {
                rlen.push(Witness::TriangleVertexNotRelaxed { vertex: v, triangle: t.clone() });
            }
        }
    }
    // One witness per 3-vertex, naming its smallest triangle.
    for v in g.vertices().filter(|&v| g.degree(v) == 3) {
        if let Some(t) = triangles.iter().find(|t| t.contains_vertex(v)) {
            three_on.push(Witness::ThreeVertexOnTriangle { vertex: v, triangle: t.clone() });
        }
    }
    let mut shared = Vec::new();
    for (i, a) in triangles.iter().enumerate() {
        for b in &triangles[i + 1..] {
            if let Some(&e) = a.edges().iter().find(|&&e| b.contains_edge(e)) {
                shared.push(Witness::TrianglesShareEdge { first: a.clone(), second: b.clone(), edge: e });
            }
        }
    }
    report(vec![
        (LemmaId::TriangleRelaxed, rlen),
        (LemmaId::ThreeVertexTriangle, three_on),
        (LemmaId::TrianglesShareEdge, shared),
    ])
}

/// The three 4-vertex / 3-vertex neighborhood patterns.
pub fn check_four_vertex_configs(g: &Graph, r: &RSet) -> AuditReport {
    let relaxed = relaxed_vertices(g, r);
    // Smallest relaxed neighbor of `u` other than `skip`.
    let relaxed_nbr = |u: Vertex, skip: Vertex| g.neighbors(u).iter().copied().find(|&w| w != skip && relaxed[w]);

    let mut two_threes = Vec::new();
    let mut all_threes = Vec::new();
    for x in g.vertices().filter(|&x| g.degree(x) == 4) {
        let nbrs = g.neighbors(x);
        for (i, &y) in nbrs.iter().enumerate() {
            for &z in &nbrs[i + 1..] {
                if g.degree(y) != 3 || g.degree(z) != 3 {
                    continue;
                }
                let (Some(yr), Some(zr)) = (relaxed_nbr(y, x), relaxed_nbr(z, x)) else { continue };
                let closed = std::iter::once(x).chain(nbrs.iter().copied());
                let mut closed: Vec<Vertex> = closed.filter(|&w| w != y && w != z && relaxed[w]).collect();
                closed.sort_unstable();
                if let Some(&xr) = closed.first() {
                    two_threes.push(Witness::FourVertexTwoThrees { x, y, z, y_relaxed: yr, z_relaxed: zr, x_relaxed: xr });
                }
            }
        }
        let per: Option<Vec<(Vertex, Vertex)>> = nbrs
            .iter()
            .map(|&u| if g.degree(u) == 3 { relaxed_nbr(u, x).map(|w| (u, w)) } else { None })
            .collect();
        if let Some(neighbors) = per {
            all_threes.push(Witness::FourVertexAllThrees { vertex: x, neighbors });
        }
    }

    // 3-neighbors of z that have a relaxed neighbor other than z, with that neighbor.
    let good = |z: Vertex| -> Vec<(Vertex, Vertex)> {
        g.neighbors(z)
            .iter()
            .filter(|&&u| g.degree(u) == 3)
            .filter_map(|&u| relaxed_nbr(u, z).map(|w| (u, w)))
            .collect()
    };
    let mut adjacent = Vec::new();
    for &(x, y) in g.edges() {
        if g.degree(x) != 4 || g.degree(y) != 4 {
            continue;
        }
        let (gx, gy) = (good(x), good(y));
        if gx.len() >= 2 && gy.len() >= 2 {
            adjacent.push(Witness::AdjacentFourVertices {
                x,
                y,
                x1: gx[0].0,
                x2: gx[1].0,
                y1: gy[0].0,
                y2: gy[1].0,
                relaxed: [gx[0].1, gx[1].1, gy[0].1, gy[1].1],
            });
        }
    }
    report(vec![
        (LemmaId::FourVertexTwoThrees, two_threes),
        (LemmaId::FourVertexAllThrees, all_threes),
        (LemmaId::AdjacentFourVertices, adjacent),
    ])
}

/// The six face-configuration lemmas.
pub fn check_face_lemmas(e: &EmbeddedGraph, r: &RSet) -> AuditReport {
    let g = e.graph();
    let relaxed = relaxed_vertices(g, r);
    let faces_of_len = |k: usize| -> Vec<FaceId> { (0..e.face_count()).filter(|&f| e.face_len(f) == k).collect() };
    let (tris, quads, pents) = (faces_of_len(3), faces_of_len(4), faces_of_len(5));

    let mut tri_quad = Vec::new();
    let mut outer = Vec::new();
    for &f1 in &tris {
        for &f2 in &quads {
            let shared = e.shared_edges(f1, f2);
            if shared.is_empty() {
                continue;
            }
            let on: BTreeSet<Vertex> = e.face_vertices(f1).union(&e.face_vertices(f2)).copied().collect();
            let non_relaxed: Vec<Vertex> = on.into_iter().filter(|&v| !relaxed[v]).collect();
            if shared.len() != 1 || !non_relaxed.is_empty() {
                tri_quad.push(Witness::TriangleQuadFaces {
                    triangle: f1,
                    quad: f2,
                    shared: shared.iter().copied().collect(),
                    non_relaxed,
                });
            }
            if shared.len() != 1 {
                continue;
            }
            let quad_edges = e.face(f2).edge_set();
            let both: BTreeSet<Vertex> = e.face_vertices(f1).intersection(&e.face_vertices(f2)).copied().collect();
            for v in both.into_iter().filter(|&v| g.degree(v) == 4) {
                let tri_edges: BTreeSet<EdgeId> = e.face(f1).edge_set();
                for edge in tri_edges {
                    let (a, b) = g.endpoints(edge);
                    if (a != v && b != v) || quad_edges.contains(&edge) {
                        continue;
                    }
                    let face = e.across(edge, f1);
                    let length = e.face_len(face);
                    if length < 5 {
                        outer.push(Witness::TriangleQuadOuterFace { triangle: f1, quad: f2, vertex: v, edge, face, length });
                    }
                }
            }
        }
    }

    let mut quad_pairs = Vec::new();
    for (i, &f1) in quads.iter().enumerate() {
        for &f2 in &quads[i + 1..] {
            let shared = e.shared_edges(f1, f2);
            if shared.len() != 1 {
                continue;
            }
            let edge = *shared.iter().next().expect("one edge");
            for v in e.face_vertices(f1).intersection(&e.face_vertices(f2)) {
                if g.degree(*v) < 4 {
                    quad_pairs.push(Witness::QuadFacesLowDegree { first: f1, second: f2, edge, vertex: *v, degree: g.degree(*v) });
                }
            }
        }
    }

    let mut pent_pairs = Vec::new();
    for &f1 in &pents {
        for &f2 in &pents {
            if f1 == f2 {
                continue;
            }
            let shared = e.shared_edges(f1, f2);
            if shared.len() != 1 {
                continue;
            }
            let (p, q) = g.endpoints(*shared.iter().next().expect("one edge"));
            for (a1, a2) in [(p, q), (q, p)] {
                if g.degree(a1) != 3 {
                    continue;
                }
                let c1: Vec<Vertex> = e.walk_neighbors(a1, f2).into_iter().filter(|&w| w != a2).collect();
                let c2: Vec<Vertex> = e.walk_neighbors(a2, f2).into_iter().filter(|&w| w != a1).collect();
                let pick = c1
                    .iter()
                    .flat_map(|&x| c2.iter().map(move |&y| (x, y)))
                    .find(|&(x, y)| g.degree(x) < 4 && g.degree(y) < 4);
                if let Some((a1_prime, a2_prime)) = pick {
                    pent_pairs.push(Witness::PentagonFaces { first: f1, second: f2, a1, a2, a1_prime, a2_prime });
                }
            }
        }
    }

    let mut three_pent = Vec::new();
    let mut four_quads = Vec::new();
    for v in g.vertices() {
        let at = e.faces_at(v);
        if g.degree(v) == 3 {
            let five: Vec<FaceId> = at.iter().copied().filter(|&f| e.face_len(f) == 5).collect();
            let four = at.iter().copied().find(|&f| e.face_len(f) == 4);
            if let (true, Some(quad)) = (five.len() >= 2, four) {
                three_pent.push(Witness::ThreeVertexPentagonsQuad { vertex: v, pentagons: [five[0], five[1]], quad });
            }
        }
        if g.degree(v) == 4 && at.iter().all(|&f| e.face_len(f) == 4) {
            four_quads.push(Witness::FourVertexAllQuads { vertex: v, faces: at.into_iter().collect() });
        }
    }

    report(vec![
        (LemmaId::TriangleQuadFaces, tri_quad),
        (LemmaId::TriangleQuadOuterFace, outer),
        (LemmaId::QuadFaces, quad_pairs),
        (LemmaId::PentagonFaces, pent_pairs),
        (LemmaId::ThreeVertexPentagons, three_pent),
        (LemmaId::FourVertexQuads, four_quads),
    ])
}

fn graph_fragments(g: &Graph, r: &RSet) -> AuditReport {
    check_degree_lemmas(g, r)
        .merge(check_relaxed_neighborhoods(g, r))
        .merge(check_triangle_lemmas(g, r))
        .merge(check_four_vertex_configs(g, r))
}

/// Every check, in lemma order.
pub fn full_audit(e: &EmbeddedGraph, r: &RSet) -> AuditReport {
    graph_fragments(e.graph(), r).merge(check_face_lemmas(e, r))
}

/// The graph-only checks; face lemmas are reported as skipped.
pub fn graph_audit(g: &Graph, r: &RSet) -> AuditReport {
    let skipped = AuditReport {
        lemmas: LemmaId::ALL
            .iter()
            .filter(|l| l.needs_embedding())
            .map(|&l| LemmaAudit::skipped(l, "skipped: no embedding"))
            .collect(),
    };
    graph_fragments(g, r).merge(skipped)
}
