//! Removal of a vertex of degree at most two and extension of a coloring of
//! the smaller instance back to the original one.
//!
//! Three shapes are handled:
//! * degree 0 or 1: delete the vertex;
//! * degree 2 with an incident edge of R: delete the vertex;
//! * degree 2 otherwise, with non-adjacent neighbors a and b: delete the
//!   vertex, join a and b, and put the new edge in R.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{check_relaxed_odd, odd_witness, Color, Coloring, ColoringError, ListAssignment, RelaxedInstance};
use crate::graph::{hypothesis_check, is_r_relaxed, Graph, GraphError, RSet, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("vertex {vertex} has degree {degree}; only degree at most 2 can be reduced")]
    DegreeTooHigh { vertex: Vertex, degree: usize },
    #[error("neighbors {a} and {b} of the degree-2 vertex are adjacent, so the joining edge cannot be added")]
    NeighborsAdjacent { a: Vertex, b: Vertex },
    #[error("coloring of the reduced instance is invalid: {0}")]
    ReducedColoringInvalid(ColoringError),
    #[error("list of vertex {vertex} has no color outside the forbidden set {forbidden:?}")]
    NoFreeColor { vertex: Vertex, forbidden: Vec<Color> },
    #[error("extended coloring fails: {0}")]
    ExtensionFailed(ColoringError),
    #[error("list assignment covers {got} vertices, expected {expected}")]
    ListCount { expected: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Which reduction applies. Vertex names refer to the original graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum ReductionCase {
    Isolated,
    /// Degree 1 with neighbor `u`.
    Pendant { u: Vertex },
    /// Degree 2; the edge `v a` lies in R.
    RelaxedEdge { a: Vertex, b: Vertex },
    /// Degree 2, no incident R edge; the edge `a b` was added to graph and R.
    Joined { a: Vertex, b: Vertex },
}

impl ReductionCase {
    pub fn label(&self) -> &'static str {
        match self {
            ReductionCase::Isolated => "isolated",
            ReductionCase::Pendant { .. } => "pendant",
            ReductionCase::RelaxedEdge { .. } => "relaxed-edge",
            ReductionCase::Joined { .. } => "joined",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionRecord {
    pub case: ReductionCase,
    pub vertex: Vertex,
    pub original: Graph,
    pub original_r: RSet,
    pub reduced: Graph,
    pub reduced_r: RSet,
    /// `kept[i]` is the original name of reduced vertex `i`.
    pub kept: Vec<Vertex>,
    /// For the joined case: whether the reduced instance passes the cycle hypothesis.
    pub reduced_hypothesis: Option<bool>,
}

impl ReductionRecord {
    /// Reduced-graph name of an original vertex other than the removed one.
    pub fn reduced_name(&self, x: Vertex) -> Vertex {
        if x < self.vertex {
            x
        } else {
            x - 1
        }
    }
}

/// Removes `v` (degree at most 2) as described in the module documentation.
pub fn reduce_low_degree(g: &Graph, r: &RSet, v: Vertex) -> Result<(Graph, RSet, ReductionRecord), ReductionError> {
    g.check_vertex(v)?;
    r.validate(g)?;
    let degree = g.degree(v);
    if degree > 2 {
        return Err(ReductionError::DegreeTooHigh { vertex: v, degree });
    }
    let nbrs = g.neighbors(v).to_vec();
    let case = match nbrs.as_slice() {
        [] => ReductionCase::Isolated,
        [u] => ReductionCase::Pendant { u: *u },
        &[x, y] => {
            let in_r = |w: Vertex| r.contains(g.edge_id(v, w).expect("neighbor edge"));
            if in_r(x) {
                ReductionCase::RelaxedEdge { a: x, b: y }
            } else if in_r(y) {
                ReductionCase::RelaxedEdge { a: y, b: x }
            } else if g.has_edge(x, y) {
                return Err(ReductionError::NeighborsAdjacent { a: x, b: y });
            } else {
                ReductionCase::Joined { a: x, b: y }
            }
        }
        _ => unreachable!("degree checked"),
    };

    let kept: Vec<Vertex> = g.vertices().filter(|&x| x != v).collect();
    let rename = |x: Vertex| if x < v { x } else { x - 1 };
    let mut pairs: Vec<(Vertex, Vertex)> = g
        .edges()
        .iter()
        .filter(|&&(x, y)| x != v && y != v)
        .map(|&(x, y)| (rename(x), rename(y)))
        .collect();
    let mut r_pairs: Vec<(Vertex, Vertex)> = r
        .pairs(g)
        .into_iter()
        .filter(|&(x, y)| x != v && y != v)
        .map(|(x, y)| (rename(x), rename(y)))
        .collect();
    if let ReductionCase::Joined { a, b } = case {
        pairs.push((rename(a), rename(b)));
        r_pairs.push((rename(a), rename(b)));
    }
    let reduced = Graph::new(kept.len(), pairs)?;
    let reduced_r = RSet::from_pairs(&reduced, r_pairs)?;
    let reduced_hypothesis = match case {
        ReductionCase::Joined { .. } => Some(hypothesis_check(&reduced, &reduced_r).passes()),
        _ => None,
    };
    let record = ReductionRecord {
        case,
        vertex: v,
        original: g.clone(),
        original_r: r.clone(),
        reduced: reduced.clone(),
        reduced_r: reduced_r.clone(),
        kept,
        reduced_hypothesis,
    };
    Ok((reduced, reduced_r, record))
}

/// Odd color on `N(x)` in the reduced graph, skipping `skip` (a reduced name).
fn odd_color_excluding(h: &Graph, c: &Coloring, x: Vertex, skip: Option<Vertex>) -> Option<Color> {
    let mut parity: BTreeSet<Color> = BTreeSet::new();
    for &w in h.neighbors(x) {
        if Some(w) == skip {
            continue;
        }
        let col = c.color(w);
        if !parity.remove(&col) {
            parity.insert(col);
        }
    }
    parity.into_iter().next()
}

/// Colors the removed vertex must avoid, given a coloring of the reduced graph.
/// Besides the neighbor colors, it protects one odd color of each neighbor
/// that would otherwise lose its odd witness. Never more than four colors.
pub fn forbidden_colors(record: &ReductionRecord, reduced: &Coloring) -> BTreeSet<Color> {
    let g = &record.original;
    let h = &record.reduced;
    let name = |x: Vertex| record.reduced_name(x);
    let mut out = BTreeSet::new();
    match record.case {
        ReductionCase::Isolated => {}
        ReductionCase::Pendant { u } => {
            out.insert(reduced.color(name(u)));
            if !is_r_relaxed(g, &record.original_r, u).expect("vertex of the graph") {
                // Even degree in G, odd in G - v, so a witness exists.
                out.extend(odd_witness(h, reduced, name(u)));
            }
        }
        ReductionCase::RelaxedEdge { a, b } => {
            out.insert(reduced.color(name(a)));
            out.insert(reduced.color(name(b)));
            if !is_r_relaxed(g, &record.original_r, b).expect("vertex of the graph") {
                out.extend(odd_witness(h, reduced, name(b)));
            }
        }
        ReductionCase::Joined { a, b } => {
            out.insert(reduced.color(name(a)));
            out.insert(reduced.color(name(b)));
            out.extend(odd_color_excluding(h, reduced, name(a), Some(name(b))));
            out.extend(odd_color_excluding(h, reduced, name(b), Some(name(a))));
        }
    }
    out
}

/// Extends a valid coloring of the reduced instance to the original graph,
/// giving the removed vertex the smallest color of its list outside
/// [`forbidden_colors`]. The result is re-verified before it is returned.
pub fn extend_low_degree(
    record: &ReductionRecord,
    reduced_coloring: &Coloring,
    lists: &ListAssignment,
) -> Result<Coloring, ReductionError> {
    let n = record.original.vertex_count();
    if lists.vertex_count() != n {
        return Err(ReductionError::ListCount { expected: n, got: lists.vertex_count() });
    }
    let reduced_inst = RelaxedInstance {
        graph: record.reduced.clone(),
        r: record.reduced_r.clone(),
        lists: lists.restrict(&record.kept),
    };
    check_relaxed_odd(&reduced_inst, reduced_coloring).map_err(ReductionError::ReducedColoringInvalid)?;

    let forbidden = forbidden_colors(record, reduced_coloring);
    let v = record.vertex;
    let pick = lists
        .list(v)
        .iter()
        .copied()
        .find(|c| !forbidden.contains(c))
        .ok_or_else(|| ReductionError::NoFreeColor { vertex: v, forbidden: forbidden.iter().copied().collect() })?;

    let mut colors = Vec::with_capacity(n);
    colors.extend_from_slice(&reduced_coloring.colors()[..v]);
    colors.push(pick);
    colors.extend_from_slice(&reduced_coloring.colors()[v..]);
    let full = Coloring(colors);
    let inst = RelaxedInstance { graph: record.original.clone(), r: record.original_r.clone(), lists: lists.clone() };
    check_relaxed_odd(&inst, &full).map_err(ReductionError::ExtensionFailed)?;
    Ok(full)
}
