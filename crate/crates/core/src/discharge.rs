//! Discharging with exact charges.
//!
//! Every vertex starts with `deg - 4` and every face with `length - 4`.
//! The eight rules are evaluated simultaneously on the fixed embedding; rule
//! predicates never look at intermediate charges. A face or vertex that meets
//! a configuration several times along a boundary walk takes part once per
//! incidence.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::audit::{full_audit, graph_audit, AuditReport, LemmaId};
use crate::embedding::{embed_search, EmbeddedGraph, FaceId};
use crate::graph::{hypothesis_check, relaxed_vertices, EdgeId, Graph, HypothesisReport, RSet, Vertex};

/// An exact amount of charge in twelfths of a unit.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Charge(pub i64);

impl Charge {
    pub const ZERO: Charge = Charge(0);
    pub const HALF: Charge = Charge(6);
    pub const THIRD: Charge = Charge(4);
    pub const QUARTER: Charge = Charge(3);

    pub fn units(k: i64) -> Charge {
        Charge(12 * k)
    }

    pub fn twelfths(self) -> i64 {
        self.0
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (mut num, mut den) = (self.0, 12i64);
        let mut a = num.abs();
        let mut b = den;
        while b != 0 {
            (a, b) = (b, a % b);
        }
        if a > 1 {
            num /= a;
            den /= a;
        }
        if den == 1 {
            write!(f, "{num}")
        } else {
            write!(f, "{num}/{den}")
        }
    }
}

impl Add for Charge {
    type Output = Charge;
    fn add(self, o: Charge) -> Charge {
        Charge(self.0 + o.0)
    }
}

impl Sub for Charge {
    type Output = Charge;
    fn sub(self, o: Charge) -> Charge {
        Charge(self.0 - o.0)
    }
}

impl Neg for Charge {
    type Output = Charge;
    fn neg(self) -> Charge {
        Charge(-self.0)
    }
}

impl AddAssign for Charge {
    fn add_assign(&mut self, o: Charge) {
        self.0 += o.0;
    }
}

impl SubAssign for Charge {
    fn sub_assign(&mut self, o: Charge) {
        self.0 -= o.0;
    }
}

impl Sum for Charge {
    fn sum<I: Iterator<Item = Charge>>(iter: I) -> Charge {
        Charge(iter.map(|c| c.0).sum())
    }
}

/// A vertex or a face; written `v3` / `f2` in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Vertex(Vertex),
    Face(FaceId),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v{v}"),
            Element::Face(x) => write!(f, "f{x}"),
        }
    }
}

impl FromStr for Element {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("expected v<index> or f<index>, got {s:?}");
        let (kind, rest) = s.split_at_checked(1).ok_or_else(bad)?;
        let idx: usize = rest.parse().map_err(|_| bad())?;
        match kind {
            "v" => Ok(Element::Vertex(idx)),
            "f" => Ok(Element::Face(idx)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
}

impl Rule {
    pub const ALL: [Rule; 8] = [Rule::R1, Rule::R2, Rule::R3, Rule::R4, Rule::R5, Rule::R6, Rule::R7, Rule::R8];

    /// The fixed amount every transfer of this rule carries.
    pub fn amount(self) -> Charge {
        match self {
            Rule::R1 | Rule::R2 | Rule::R3 | Rule::R7 => Charge::HALF,
            Rule::R8 => Charge::THIRD,
            Rule::R4 | Rule::R5 | Rule::R6 => Charge::QUARTER,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Everything the rule quantified over, so a transfer can be re-checked alone.
///
/// Layouts by rule (faces, vertices, edges):
/// * R1: `[f]`, `[v]`, the two walk edges at the corner
/// * R2: `[f, f']`, `[a, b, x, y]` with `a x` on f and `y` in N(b) off f'; `[ab, ax]`
/// * R3: `[f, f']`, `[a, b]`, `[ab]`
/// * R4: `[f, f']`, `[a, b]` with deg(a) = 4, `[ab]`
/// * R5: `[f, f']`, `[a, b, a*, b*]` with deg(a) = 3 and `a*`, `b*` the unique vertices on f'; `[ab]`
/// * R6: `[f, f', f'']`, `[v, u, n1, n2]` with `e = vu` and `n1 < n2` the only neighbors of v on f''; `[e, e']`
/// * R7: `[f]`, `[v]`, the two walk edges at the corner
/// * R8: `[f]`, `[v]`, the two walk edges at the corner
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TransferWitness {
    pub faces: Vec<FaceId>,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
    /// Position of the corner in the face walk, for per-incidence rules.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corner: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Transfer {
    pub rule: Rule,
    pub from: Element,
    pub to: Element,
    #[serde(rename = "amount_twelfths")]
    pub amount: Charge,
    pub via: Option<EdgeId>,
    pub witness: TransferWitness,
}

impl Transfer {
    fn new(rule: Rule, from: Element, to: Element, via: Option<EdgeId>, witness: TransferWitness) -> Self {
        Transfer { rule, from, to, amount: rule.amount(), via, witness }
    }
}

/// `deg(v) - 4` for vertices, `length(f) - 4` for faces.
pub fn initial_charges(e: &EmbeddedGraph) -> BTreeMap<Element, Charge> {
    let g = e.graph();
    let mut out = BTreeMap::new();
    for v in g.vertices() {
        out.insert(Element::Vertex(v), Charge::units(g.degree(v) as i64 - 4));
    }
    for f in 0..e.face_count() {
        out.insert(Element::Face(f), Charge::units(e.face_len(f) as i64 - 4));
    }
    out
}

/// `-4 (|V| - |E| + |F|)`, which every total must equal.
pub fn euler_total(e: &EmbeddedGraph) -> Charge {
    Charge::units(-4 * e.euler_characteristic())
}

struct Ctx<'a> {
    e: &'a EmbeddedGraph,
    g: &'a Graph,
    relaxed: Vec<bool>,
    face_vertices: Vec<BTreeSet<Vertex>>,
    touches_triangle: Vec<bool>,
}

impl<'a> Ctx<'a> {
    fn new(e: &'a EmbeddedGraph, r: &RSet) -> Self {
        let g = e.graph();
        let touches_triangle = (0..g.edge_count())
            .map(|x| {
                let (p, q) = e.edge_faces(x);
                e.face_len(p) == 3 || e.face_len(q) == 3
            })
            .collect();
        Ctx {
            e,
            g,
            relaxed: relaxed_vertices(g, r),
            face_vertices: (0..e.face_count()).map(|f| e.face_vertices(f)).collect(),
            touches_triangle,
        }
    }

    fn len(&self, f: FaceId) -> usize {
        self.e.face_len(f)
    }

    fn deg(&self, v: Vertex) -> usize {
        self.g.degree(v)
    }

    /// Corner rules: every (face, position) whose vertex and face pass `pred`.
    fn corners(
        &self,
        rule: Rule,
        out: &mut Vec<Transfer>,
        face_ok: impl Fn(usize) -> bool,
        vertex_ok: impl Fn(usize) -> bool,
        face_gives: bool,
        extra: impl Fn(FaceId, usize) -> bool,
    ) {
        for f in 0..self.e.face_count() {
            if !face_ok(self.len(f)) {
                continue;
            }
            for (i, d) in self.e.face(f).darts.iter().enumerate() {
                let v = d.vertex;
                if !vertex_ok(self.deg(v)) || !extra(f, i) {
                    continue;
                }
                let (e_in, e_out) = self.e.corner_edges(f, i);
                let witness = TransferWitness { faces: vec![f], vertices: vec![v], edges: vec![e_in, e_out], corner: Some(i) };
                let (from, to) = if face_gives {
                    (Element::Face(f), Element::Vertex(v))
                } else {
                    (Element::Vertex(v), Element::Face(f))
                };
                out.push(Transfer::new(rule, from, to, None, witness));
            }
        }
    }

    /// Labelled (a, b) witness for the R2 predicate, if any.
    fn r2_witness(&self, f: FaceId, ft: FaceId, a: Vertex, b: Vertex) -> Option<(Vertex, EdgeId, Vertex)> {
        let ab = self.g.edge_id(a, b).expect("shared edge");
        let (x, ax) = self
            .e
            .face(f)
            .walk_edges()
            .filter(|&ed| ed != ab)
            .filter_map(|ed| {
                let (p, q) = self.g.endpoints(ed);
                let other = if p == a { q } else if q == a { p } else { return None };
                (!self.relaxed[other]).then_some((other, ed))
            })
            .min()?;
        let y = self
            .g
            .neighbors(b)
            .iter()
            .copied()
            .find(|&y| !self.face_vertices[ft].contains(&y) && !self.relaxed[y])?;
        Some((x, ax, y))
    }

    /// R2, R3, R4: a (>=5)-face and a 3-face on the two sides of an edge.
    fn triangle_edges(&self, out: &mut Vec<Transfer>) {
        for ab in 0..self.g.edge_count() {
            let (s, t) = self.e.edge_faces(ab);
            let (f, ft) = match (self.len(s), self.len(t)) {
                (ls, 3) if ls >= 5 => (s, t),
                (3, lt) if lt >= 5 => (t, s),
                _ => continue,
            };
            let (p, q) = self.g.endpoints(ab);
            let (dp, dq) = (self.deg(p), self.deg(q));
            let (from, to) = (Element::Face(f), Element::Face(ft));
            if dp == 4 && dq == 4 {
                let hit = [(p, q), (q, p)].into_iter().find_map(|(a, b)| self.r2_witness(f, ft, a, b).map(|w| (a, b, w)));
                let transfer = match hit {
                    Some((a, b, (x, ax, y))) => Transfer::new(
                        Rule::R2,
                        from,
                        to,
                        Some(ab),
                        TransferWitness { faces: vec![f, ft], vertices: vec![a, b, x, y], edges: vec![ab, ax], corner: None },
                    ),
                    None => Transfer::new(
                        Rule::R3,
                        from,
                        to,
                        Some(ab),
                        TransferWitness { faces: vec![f, ft], vertices: vec![p, q], edges: vec![ab], corner: None },
                    ),
                };
                out.push(transfer);
            } else if (dp == 4 && dq >= 5) || (dq == 4 && dp >= 5) {
                let (a, b) = if dp == 4 { (p, q) } else { (q, p) };
                out.push(Transfer::new(
                    Rule::R4,
                    from,
                    to,
                    Some(ab),
                    TransferWitness { faces: vec![f, ft], vertices: vec![a, b], edges: vec![ab], corner: None },
                ));
            }
        }
    }

    /// Unique vertex of N(v) - {a, b} on face `f`, if there is exactly one.
    fn unique_on_face(&self, v: Vertex, a: Vertex, b: Vertex, f: FaceId) -> Option<Vertex> {
        let mut on = self
            .g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| w != a && w != b && self.face_vertices[f].contains(&w));
        let first = on.next()?;
        on.next().is_none().then_some(first)
    }

    /// R5: a (>=6)-face and a 5-face on the sides of an edge joining a 3-vertex and a 4-vertex.
    fn r5(&self, out: &mut Vec<Transfer>) {
        for ab in 0..self.g.edge_count() {
            let (s, t) = self.e.edge_faces(ab);
            let (f, fp) = match (self.len(s), self.len(t)) {
                (ls, 5) if ls >= 6 => (s, t),
                (5, lt) if lt >= 6 => (t, s),
                _ => continue,
            };
            let (p, q) = self.g.endpoints(ab);
            let (a, b) = match (self.deg(p), self.deg(q)) {
                (3, 4) => (p, q),
                (4, 3) => (q, p),
                _ => continue,
            };
            let (Some(sa), Some(sb)) = (self.unique_on_face(a, a, b, fp), self.unique_on_face(b, a, b, fp)) else {
                continue;
            };
            if self.relaxed[sa] && self.relaxed[sb] {
                out.push(Transfer::new(
                    Rule::R5,
                    Element::Face(f),
                    Element::Face(fp),
                    Some(ab),
                    TransferWitness { faces: vec![f, fp], vertices: vec![a, b, sa, sb], edges: vec![ab], corner: None },
                ));
            }
        }
    }

    /// R6, quantified over (f, v, e, f'') with f' the face across e.
    fn r6(&self, out: &mut Vec<Transfer>) {
        for f in 0..self.e.face_count() {
            if self.len(f) < 6 {
                continue;
            }
            let f_edges = self.e.face(f).edge_set();
            for v in self.face_vertices[f].iter().copied().filter(|&v| self.deg(v) == 4) {
                for &e in f_edges.iter().filter(|&&e| {
                    let (p, q) = self.g.endpoints(e);
                    p == v || q == v
                }) {
                    let u = self.g.other_end(e, v);
                    if self.relaxed[u] {
                        continue;
                    }
                    let fp = self.e.across(e, f);
                    if fp == f || self.len(fp) != 5 {
                        continue;
                    }
                    for fpp in 0..self.e.face_count() {
                        if fpp == f || fpp == fp || self.len(fpp) != 5 {
                            continue;
                        }
                        let shared = self.e.shared_edges(fp, fpp);
                        if shared.len() != 1 {
                            continue;
                        }
                        let ep = *shared.iter().next().expect("one edge");
                        let (x, y) = self.g.endpoints(ep);
                        if x != v && y != v {
                            continue;
                        }
                        let nbrs: Vec<Vertex> =
                            self.g.neighbors(v).iter().copied().filter(|w| self.face_vertices[fpp].contains(w)).collect();
                        if nbrs.len() != 2 || nbrs.iter().any(|&w| self.deg(w) != 3) {
                            continue;
                        }
                        let near_triangle = self.e.adjacent_faces(fpp).into_iter().any(|h| self.len(h) == 3);
                        if !near_triangle {
                            continue;
                        }
                        out.push(Transfer::new(
                            Rule::R6,
                            Element::Face(f),
                            Element::Face(fpp),
                            Some(ep),
                            TransferWitness {
                                faces: vec![f, fp, fpp],
                                vertices: vec![v, u, nbrs[0], nbrs[1]],
                                edges: vec![e, ep],
                                corner: None,
                            },
                        ));
                    }
                }
            }
        }
    }
}

/// All transfers mandated by the rules, sorted canonically.
pub fn generate_transfers(e: &EmbeddedGraph, r: &RSet) -> Vec<Transfer> {
    let ctx = Ctx::new(e, r);
    let mut out = Vec::new();
    ctx.corners(Rule::R1, &mut out, |len| len >= 5, |d| d == 3, true, |_, _| true);
    ctx.triangle_edges(&mut out);
    ctx.r5(&mut out);
    ctx.r6(&mut out);
    ctx.corners(Rule::R7, &mut out, |len| len == 3, |d| d >= 5, false, |_, _| true);
    ctx.corners(Rule::R8, &mut out, |len| len == 5, |d| d >= 6, false, |f, i| {
        let (a, b) = e.corner_edges(f, i);
        !ctx.touches_triangle[a] && !ctx.touches_triangle[b]
    });
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChargeLedger {
    pub initial: BTreeMap<Element, Charge>,
    pub transfers: Vec<Transfer>,
    #[serde(rename = "final")]
    pub final_charges: BTreeMap<Element, Charge>,
    #[serde(rename = "total_twelfths")]
    pub total: Charge,
    /// `-4 (|V| - |E| + |F|)`.
    pub euler_total: Charge,
    pub euler_genus: i64,
}

impl ChargeLedger {
    pub fn initial_total(&self) -> Charge {
        self.initial.values().copied().sum()
    }

    pub fn final_total(&self) -> Charge {
        self.final_charges.values().copied().sum()
    }

    pub fn count(&self, rule: Rule) -> usize {
        self.transfers.iter().filter(|t| t.rule == rule).count()
    }
}

/// Applies all transfers to the initial charges.
pub fn settle(e: &EmbeddedGraph, r: &RSet) -> ChargeLedger {
    let initial = initial_charges(e);
    let transfers = generate_transfers(e, r);
    let mut final_charges = initial.clone();
    for t in &transfers {
        *final_charges.get_mut(&t.from).expect("known element") -= t.amount;
        *final_charges.get_mut(&t.to).expect("known element") += t.amount;
    }
    let total = final_charges.values().copied().sum();
    ChargeLedger { initial, transfers, final_charges, total, euler_total: euler_total(e), euler_genus: e.euler_genus() }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChargeReport {
    pub negatives: Vec<(Element, Charge)>,
    #[serde(rename = "total_twelfths")]
    pub total: Charge,
    pub euler_genus: i64,
    /// Final total equals the initial total and `-4 (|V| - |E| + |F|)`.
    pub conserved: bool,
    pub audits_hold: bool,
    pub audit_violations: Vec<LemmaId>,
    /// Audits hold, no charge is negative, and the total is positive.
    pub contradiction: bool,
    /// Some R1/R7/R8 transfer uses a vertex that its face walk visits more than once.
    pub repeated_incidence: bool,
}

pub fn charge_report(e: &EmbeddedGraph, ledger: &ChargeLedger, audit: &AuditReport) -> ChargeReport {
    let negatives: Vec<(Element, Charge)> =
        ledger.final_charges.iter().filter(|(_, c)| c.0 < 0).map(|(&x, &c)| (x, c)).collect();
    let conserved = ledger.final_total() == ledger.initial_total() && ledger.initial_total() == ledger.euler_total;
    let audits_hold = audit.counterexample_shaped();
    let repeated_incidence = ledger.transfers.iter().any(|t| {
        matches!(t.rule, Rule::R1 | Rule::R7 | Rule::R8) && {
            let f = t.witness.faces[0];
            let v = t.witness.vertices[0];
            e.face(f).corner_vertices().filter(|&x| x == v).count() > 1
        }
    });
    ChargeReport {
        contradiction: audits_hold && negatives.is_empty() && ledger.total.0 > 0 && ledger.euler_genus <= 2,
        negatives,
        total: ledger.total,
        euler_genus: ledger.euler_genus,
        conserved,
        audits_hold,
        audit_violations: audit.violated(),
        repeated_incidence,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Hypothesis,
    Embedding,
    Audit,
    Charges,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingSummary {
    pub euler_genus: i64,
    pub orientable: bool,
    pub face_lengths: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntReport {
    pub hypothesis: HypothesisReport,
    pub embedding: Option<EmbeddingSummary>,
    pub audit: Option<AuditReport>,
    pub charges: Option<ChargeReport>,
    /// First stage at which the instance stops looking like a counterexample.
    pub eliminated_at: Option<Stage>,
    pub contradiction: bool,
}

/// Hypothesis check, embedding search, audit and discharging in sequence,
/// stopping at the first stage the instance fails.
pub fn hunt(g: &Graph, r: &RSet, max_genus: usize) -> HuntReport {
    let hypothesis = hypothesis_check(g, r);
    let mut report =
        HuntReport { hypothesis, embedding: None, audit: None, charges: None, eliminated_at: None, contradiction: false };
    if !report.hypothesis.passes() {
        report.eliminated_at = Some(Stage::Hypothesis);
        return report;
    }
    if g.vertex_count() == 0 || !g.is_connected() {
        // Components would be embedded separately, so this is an audit matter.
        report.audit = Some(graph_audit(g, r));
        report.eliminated_at = Some(Stage::Audit);
        return report;
    }
    let Some(e) = embed_search(g, max_genus) else {
        report.eliminated_at = Some(Stage::Embedding);
        return report;
    };
    report.embedding = Some(EmbeddingSummary {
        euler_genus: e.euler_genus(),
        orientable: e.is_orientable(),
        face_lengths: (0..e.face_count()).map(|f| e.face_len(f)).collect(),
    });
    let audit = full_audit(&e, r);
    let audit_ok = audit.counterexample_shaped();
    let ledger = settle(&e, r);
    let charges = charge_report(&e, &ledger, &audit);
    report.eliminated_at = if !audit_ok {
        Some(Stage::Audit)
    } else if !charges.negatives.is_empty() || charges.total.0 <= 0 {
        Some(Stage::Charges)
    } else {
        None
    };
    report.contradiction = charges.contradiction;
    report.audit = Some(audit);
    report.charges = Some(charges);
    report
}
