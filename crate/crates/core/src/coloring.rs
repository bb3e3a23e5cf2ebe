//! Proper, odd and relaxed-odd list colorings: verifiers and an exact solver.

use std::collections::BTreeMap;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{relaxed_vertices, Graph, GraphError, RSet, Vertex};

pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring assigns {got} vertices but the graph has {expected}")]
    NotTotal { expected: usize, got: usize },
    #[error("vertex {vertex} has color {color}, which is not in its list")]
    ColorNotInList { vertex: Vertex, color: Color },
    #[error("edge {u}-{v} is monochromatic (color {color})")]
    ImproperEdge { u: Vertex, v: Vertex, color: Color },
    #[error("no color appears an odd number of times around vertex {vertex}")]
    MissingOddWitness { vertex: Vertex },
    #[error("list of vertex {vertex} has {got} colors, expected {expected}")]
    ListSize { vertex: Vertex, expected: usize, got: usize },
    #[error("{lists} lists for {vertices} vertices")]
    ListCount { lists: usize, vertices: usize },
    #[error("palette of {universe} colors cannot hold lists of size {k}")]
    UniverseTooSmall { universe: usize, k: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A total assignment of colors to `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring(pub Vec<Color>);

impl Coloring {
    pub fn color(&self, v: Vertex) -> Color {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn colors(&self) -> &[Color] {
        &self.0
    }

    fn check_total(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.0.len() != g.vertex_count() {
            return Err(ColoringError::NotTotal { expected: g.vertex_count(), got: self.0.len() });
        }
        Ok(())
    }
}

/// Color lists of one common size `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListAssignment {
    lists: Vec<Vec<Color>>,
    size: usize,
}

impl ListAssignment {
    /// Lists are deduplicated and sorted; every list must end up with `size` colors.
    pub fn new(lists: Vec<Vec<Color>>, size: usize) -> Result<Self, ColoringError> {
        let mut out = Vec::with_capacity(lists.len());
        for (v, mut list) in lists.into_iter().enumerate() {
            list.sort_unstable();
            list.dedup();
            if list.len() != size {
                return Err(ColoringError::ListSize { vertex: v, expected: size, got: list.len() });
            }
            out.push(list);
        }
        Ok(ListAssignment { lists: out, size })
    }

    /// Every vertex gets `{1, ..., k}`.
    pub fn uniform(n: usize, k: usize) -> Self {
        ListAssignment { lists: vec![(1..=k as Color).collect(); n], size: k }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn vertex_count(&self) -> usize {
        self.lists.len()
    }

    pub fn list(&self, v: Vertex) -> &[Color] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<Color>] {
        &self.lists
    }

    pub fn contains(&self, v: Vertex, c: Color) -> bool {
        self.lists[v].binary_search(&c).is_ok()
    }

    /// Lists of the vertices in `keep`, in that order.
    pub fn restrict(&self, keep: &[Vertex]) -> ListAssignment {
        ListAssignment { lists: keep.iter().map(|&v| self.lists[v].clone()).collect(), size: self.size }
    }
}

/// A graph, its relaxation set and a list assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelaxedInstance {
    pub graph: Graph,
    pub r: RSet,
    pub lists: ListAssignment,
}

impl RelaxedInstance {
    pub fn new(graph: Graph, r: RSet, lists: ListAssignment) -> Result<Self, ColoringError> {
        r.validate(&graph)?;
        if lists.vertex_count() != graph.vertex_count() {
            return Err(ColoringError::ListCount { lists: lists.vertex_count(), vertices: graph.vertex_count() });
        }
        Ok(RelaxedInstance { graph, r, lists })
    }

    /// Odd k-coloring instance: uniform lists `{1..k}` and no relaxation.
    pub fn odd(graph: Graph, k: usize) -> Self {
        let n = graph.vertex_count();
        RelaxedInstance { graph, r: RSet::empty(), lists: ListAssignment::uniform(n, k) }
    }
}

pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    c.check_total(g)?;
    Ok(g.edges().iter().all(|&(u, v)| c.0[u] != c.0[v]))
}

/// Smallest color appearing an odd number of times on `N(v)`.
pub fn odd_witness(g: &Graph, c: &Coloring, v: Vertex) -> Option<Color> {
    let mut counts: BTreeMap<Color, usize> = BTreeMap::new();
    for &w in g.neighbors(v) {
        *counts.entry(c.0[w]).or_default() += 1;
    }
    counts.into_iter().find(|&(_, k)| k % 2 == 1).map(|(color, _)| color)
}

/// Proper, and every non-isolated vertex has an odd witness.
pub fn is_odd_coloring(g: &Graph, c: &Coloring) -> bool {
    matches!(is_proper(g, c), Ok(true))
        && g.vertices().all(|v| g.degree(v) == 0 || odd_witness(g, c, v).is_some())
}

/// First violation of the relaxed-odd L-coloring conditions, checked in the
/// order totality, lists, properness, odd witnesses.
pub fn check_relaxed_odd(inst: &RelaxedInstance, c: &Coloring) -> Result<(), ColoringError> {
    let g = &inst.graph;
    c.check_total(g)?;
    for v in g.vertices() {
        if !inst.lists.contains(v, c.0[v]) {
            return Err(ColoringError::ColorNotInList { vertex: v, color: c.0[v] });
        }
    }
    for &(u, v) in g.edges() {
        if c.0[u] == c.0[v] {
            return Err(ColoringError::ImproperEdge { u, v, color: c.0[u] });
        }
    }
    let relaxed = relaxed_vertices(g, &inst.r);
    for v in g.vertices() {
        if !relaxed[v] && odd_witness(g, c, v).is_none() {
            return Err(ColoringError::MissingOddWitness { vertex: v });
        }
    }
    Ok(())
}

pub fn is_relaxed_odd(inst: &RelaxedInstance, c: &Coloring) -> bool {
    check_relaxed_odd(inst, c).is_ok()
}

/// Exact search for a relaxed-odd L-coloring. The answer is the first
/// coloring in a fixed enumeration order, so equal inputs give equal outputs.
pub fn solve(inst: &RelaxedInstance) -> Option<Coloring> {
    Solver::new(inst).run()
}

/// Order in which the solver colors vertices: reverse of a smallest-last
/// degeneracy order, so dense cores are colored first.
pub fn degeneracy_order(g: &Graph) -> Vec<Vertex> {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], v)).expect("vertices remain");
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    order.reverse();
    order
}

struct Solver<'a> {
    g: &'a Graph,
    lists: &'a ListAssignment,
    strict: Vec<bool>,
    order: Vec<Vertex>,
    color: Vec<Option<Color>>,
    // Colors with odd multiplicity among the colored neighbors of each vertex.
    odd: Vec<Vec<Color>>,
    uncolored: Vec<usize>,
}

impl<'a> Solver<'a> {
    fn new(inst: &'a RelaxedInstance) -> Self {
        let g = &inst.graph;
        let relaxed = relaxed_vertices(g, &inst.r);
        Solver {
            g,
            lists: &inst.lists,
            strict: relaxed.iter().map(|&r| !r).collect(),
            order: degeneracy_order(g),
            color: vec![None; g.vertex_count()],
            odd: vec![Vec::new(); g.vertex_count()],
            uncolored: g.vertices().map(|v| g.degree(v)).collect(),
        }
    }

    fn run(mut self) -> Option<Coloring> {
        if self.descend(0) {
            Some(Coloring(self.color.into_iter().map(|c| c.expect("all colored")).collect()))
        } else {
            None
        }
    }

    /// Colors `x` may take given the current partial coloring.
    fn allowed(&self, x: Vertex, c: Color) -> bool {
        for &w in self.g.neighbors(x) {
            match self.color[w] {
                Some(cw) if cw == c => return false,
                _ => {}
            }
            // x is the last uncolored neighbor of a strict w: it must not cancel w's only odd color.
            if self.strict[w] && self.uncolored[w] == 1 && self.odd[w].len() == 1 && self.odd[w][0] == c {
                return false;
            }
        }
        true
    }

    fn has_option(&self, x: Vertex) -> bool {
        self.lists.list(x).iter().any(|&c| self.allowed(x, c))
    }

    fn assign(&mut self, x: Vertex, c: Color) {
        self.color[x] = Some(c);
        for i in 0..self.g.neighbors(x).len() {
            let w = self.g.neighbors(x)[i];
            toggle(&mut self.odd[w], c);
            self.uncolored[w] -= 1;
        }
    }

    fn unassign(&mut self, x: Vertex, c: Color) {
        self.color[x] = None;
        for i in 0..self.g.neighbors(x).len() {
            let w = self.g.neighbors(x)[i];
            toggle(&mut self.odd[w], c);
            self.uncolored[w] += 1;
        }
    }

    fn descend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        for i in 0..self.lists.list(x).len() {
            let c = self.lists.list(x)[i];
            if !self.allowed(x, c) {
                continue;
            }
            self.assign(x, c);
            let ok = self.consistent_after(x) && self.descend(depth + 1);
            if ok {
                return true;
            }
            self.unassign(x, c);
        }
        false
    }

    /// Neighborhoods closed by coloring `x` must have an odd witness, and
    /// every uncolored neighbor of `x` must keep some legal color.
    fn consistent_after(&self, x: Vertex) -> bool {
        if self.strict[x] && self.uncolored[x] == 0 && self.odd[x].is_empty() {
            return false;
        }
        for &w in self.g.neighbors(x) {
            if self.strict[w] && self.uncolored[w] == 0 && self.odd[w].is_empty() {
                return false;
            }
            if self.color[w].is_none() && !self.has_option(w) {
                return false;
            }
        }
        true
    }
}

fn toggle(set: &mut Vec<Color>, c: Color) {
    if let Some(i) = set.iter().position(|&x| x == c) {
        set.swap_remove(i);
    } else {
        set.push(c);
    }
}

/// Least `k` for which an odd k-coloring exists.
pub fn odd_chromatic_number(g: &Graph) -> usize {
    if g.vertex_count() == 0 {
        return 0;
    }
    // Giving every vertex its own color is always odd, so k = n terminates.
    (1..=g.vertex_count())
        .find(|&k| solve(&RelaxedInstance::odd(g.clone(), k)).is_some())
        .expect("n colors always suffice")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChoosabilityReport {
    pub k: usize,
    pub trials: usize,
    pub universe: usize,
    pub seed: u64,
    pub trials_run: usize,
    /// A list assignment admitting no relaxed-odd coloring, if one was drawn.
    pub refutation: Option<ListAssignment>,
    pub refuting_trial: Option<usize>,
}

impl ChoosabilityReport {
    pub fn refuted(&self) -> bool {
        self.refutation.is_some()
    }
}

/// Draws `trials` k-list assignments from the palette `{1..universe}` and
/// stops at the first one with no relaxed-odd coloring.
///
/// Trial 0 is always the uniform assignment `{1..k}` (so odd
/// k-colorability is tested first); later trials draw each list independently.
pub fn sampled_choosability(
    g: &Graph,
    k: usize,
    r: &RSet,
    trials: usize,
    universe: usize,
    seed: u64,
) -> Result<ChoosabilityReport, ColoringError> {
    if universe < k {
        return Err(ColoringError::UniverseTooSmall { universe, k });
    }
    r.validate(g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.vertex_count();
    let mut report =
        ChoosabilityReport { k, trials, universe, seed, trials_run: 0, refutation: None, refuting_trial: None };
    for t in 0..trials {
        let lists = if t == 0 {
            ListAssignment::uniform(n, k)
        } else {
            let raw = (0..n)
                .map(|_| sample(&mut rng, universe, k).into_iter().map(|i| i as Color + 1).collect())
                .collect();
            ListAssignment::new(raw, k)?
        };
        report.trials_run = t + 1;
        let inst = RelaxedInstance { graph: g.clone(), r: r.clone(), lists };
        if solve(&inst).is_none() {
            report.refutation = Some(inst.lists);
            report.refuting_trial = Some(t);
            break;
        }
    }
    Ok(report)
}
