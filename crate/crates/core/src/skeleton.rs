//! The nonalternating skeleton of a diagram and the bounds read off it.
//!
//! The skeleton has a vertex in every face whose boundary carries a signed
//! edge and one edge through every signed diagram edge, joining the faces on
//! either side. Around a face the signed sides alternate in sign, so each
//! vertex splits into 2-valent pieces by pairing every positive edge with its
//! counterclockwise (G_A) or clockwise (G_B) negative neighbor.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bracket::{bracket, extreme_summary_from, state_circles, Smoothing, StateCircles};
use crate::diagram::{Diagram, EdgeId, EdgeSign};
use crate::error::SkeletonError;
use crate::graph::{f_value, SimpleGraph};
use crate::polynomial::LaurentPoly;
use crate::unionfind::UnionFind;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeletonEdge {
    /// Vertex indices of the two faces the crossed edge separates.
    pub ends: [usize; 2],
    pub sign: EdgeSign,
    pub crossed: EdgeId,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skeleton {
    /// Face index (into [`Diagram::faces`]) hosting each vertex.
    pub vertex_faces: Vec<usize>,
    pub edges: Vec<SkeletonEdge>,
    /// Incident edge indices at each vertex, counterclockwise.
    pub rotation: Vec<Vec<usize>>,
}

impl Skeleton {
    pub fn vertex_count(&self) -> usize {
        self.vertex_faces.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Valency → number of vertices with it.
    pub fn valency_profile(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for r in &self.rotation {
            *m.entry(r.len()).or_insert(0) += 1;
        }
        m
    }

    /// Connected components; zero for the empty skeleton.
    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.vertex_count());
        for e in &self.edges {
            uf.union(e.ends[0], e.ends[1]);
        }
        uf.count()
    }

    /// True when no two edges join the same pair of vertices.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.edges.iter().all(|e| {
            let k = (e.ends[0].min(e.ends[1]), e.ends[0].max(e.ends[1]));
            e.ends[0] != e.ends[1] && seen.insert(k)
        })
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph skeleton {\n");
        for (v, f) in self.vertex_faces.iter().enumerate() {
            let _ = writeln!(s, "  v{v} [label=\"face {f}\"];");
        }
        for e in &self.edges {
            let (sym, color) = if e.sign == EdgeSign::Positive { ('+', "red") } else { ('-', "blue") };
            let _ =
                writeln!(s, "  v{} -- v{} [label=\"{}{}\", color={}];", e.ends[0], e.ends[1], sym, e.crossed, color);
        }
        s.push_str("}\n");
        s
    }
}

pub fn build_skeleton(d: &Diagram) -> Result<Skeleton, SkeletonError> {
    let faces = d.faces();
    let signs = d.edge_signs();
    let mut vertex_of_face = vec![usize::MAX; faces.len()];
    let mut vertex_faces = Vec::new();
    for (fi, f) in faces.iter().enumerate() {
        if f.sides.iter().any(|s| signs[&s.edge] != EdgeSign::Neutral) {
            vertex_of_face[fi] = vertex_faces.len();
            vertex_faces.push(fi);
        }
    }
    let edge_faces = d.edge_faces(&faces);
    let mut edges = Vec::new();
    let mut edge_index: BTreeMap<EdgeId, usize> = BTreeMap::new();
    for (e, sign) in &signs {
        if *sign == EdgeSign::Neutral {
            continue;
        }
        let fs = &edge_faces[e];
        edge_index.insert(*e, edges.len());
        edges.push(SkeletonEdge { ends: [vertex_of_face[fs[0]], vertex_of_face[fs[1]]], sign: *sign, crossed: *e });
    }
    let mut rotation = Vec::with_capacity(vertex_faces.len());
    for &fi in &vertex_faces {
        let around: Vec<usize> = faces[fi].sides.iter().filter_map(|s| edge_index.get(&s.edge).copied()).collect();
        let k = around.len();
        if k % 2 == 1 || (0..k).any(|i| edges[around[i]].sign == edges[around[(i + 1) % k]].sign) {
            return Err(SkeletonError::SignAlternation(fi));
        }
        rotation.push(around);
    }
    Ok(Skeleton { vertex_faces, edges, rotation })
}

/// Closed curves of `G_A` or `G_B`, each a cyclic list of skeleton edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveCollection {
    pub mode: Smoothing,
    pub curves: Vec<Vec<usize>>,
}

impl CurveCollection {
    pub fn count(&self) -> usize {
        self.curves.len()
    }
}

pub fn split(sk: &Skeleton, mode: Smoothing) -> CurveCollection {
    // partner[(vertex, edge)] = edge paired with it at that vertex.
    let mut partner: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (v, rot) in sk.rotation.iter().enumerate() {
        let k = rot.len();
        for i in 0..k {
            if sk.edges[rot[i]].sign != EdgeSign::Positive {
                continue;
            }
            let j = match mode {
                Smoothing::A => (i + 1) % k,
                Smoothing::B => (i + k - 1) % k,
            };
            partner.insert((v, rot[i]), rot[j]);
            partner.insert((v, rot[j]), rot[i]);
        }
    }
    let mut used = vec![false; sk.edges.len()];
    let mut curves = Vec::new();
    for start in 0..sk.edges.len() {
        if used[start] {
            continue;
        }
        let mut curve = Vec::new();
        let mut e = start;
        let mut v = sk.edges[start].ends[1];
        loop {
            used[e] = true;
            curve.push(e);
            let next = partner[&(v, e)];
            let ends = sk.edges[next].ends;
            v = if ends[0] == v { ends[1] } else { ends[0] };
            e = next;
            if e == start {
                break;
            }
        }
        curves.push(curve);
    }
    CurveCollection { mode, curves }
}

/// `|G_A| + |G_B| - v(G)`.
pub fn skeleton_excess(sk: &Skeleton) -> i64 {
    split(sk, Smoothing::A).count() as i64 + split(sk, Smoothing::B).count() as i64 - sk.vertex_count() as i64
}

/// `n + (|G_A| + |G_B| - v(G)) / 2`, rounded down, in `t`-units.
pub fn extreme_states_bound(d: &Diagram) -> Result<i64, SkeletonError> {
    let sk = build_skeleton(d)?;
    if sk.is_empty() {
        return Err(SkeletonError::Alternating);
    }
    Ok(d.crossing_count() as i64 + skeleton_excess(&sk).div_euclid(2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpanRule {
    /// `o = 3` gives `n - 2`.
    OThree,
    /// Even `o` gives `n - 1`.
    EvenO,
    /// Odd `o >= 5` gives `n - 3`.
    OddAtLeastFive,
    /// `p` skeleton components give `n - p` (even `o`) or `n - p - 1` (odd `o`).
    Components,
}

impl SpanRule {
    pub fn id(self) -> &'static str {
        match self {
            SpanRule::OThree => "o-three",
            SpanRule::EvenO => "even-o",
            SpanRule::OddAtLeastFive => "odd-o-at-least-five",
            SpanRule::Components => "components",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleBound {
    pub rule: SpanRule,
    pub bound: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanBound {
    /// Why no rule applies, if none does.
    pub inapplicable: Option<String>,
    pub rules: Vec<RuleBound>,
    pub best: Option<RuleBound>,
}

/// Span bounds in terms of `o(D)` for totally reduced nonalternating diagrams.
pub fn span_bound(d: &Diagram) -> Result<SpanBound, SkeletonError> {
    let none = |why: &str| SpanBound { inapplicable: Some(why.to_string()), rules: vec![], best: None };
    let o = d.o_length() as i64;
    if o == 0 {
        return Ok(none("alternating"));
    }
    if !d.is_totally_reduced() {
        return Ok(none("not totally reduced"));
    }
    let n = d.crossing_count() as i64;
    let p = build_skeleton(d)?.component_count() as i64;
    let mut rules = Vec::new();
    if o == 3 {
        rules.push(RuleBound { rule: SpanRule::OThree, bound: n - 2 });
    }
    if o % 2 == 0 {
        rules.push(RuleBound { rule: SpanRule::EvenO, bound: n - 1 });
    }
    if o % 2 == 1 && o >= 5 {
        rules.push(RuleBound { rule: SpanRule::OddAtLeastFive, bound: n - 3 });
    }
    rules.push(RuleBound { rule: SpanRule::Components, bound: if o % 2 == 0 { n - p } else { n - p - 1 } });
    let best = rules.iter().min_by_key(|r| (r.bound, r.rule)).cloned();
    Ok(SpanBound { inapplicable: None, rules, best })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chord {
    pub crossing: usize,
    pub circle: usize,
    /// Positions of the two arcs along the circle, ascending.
    pub ends: (usize, usize),
}

/// Chords of a uniform state joining a circle to itself, with edges between
/// chords whose endpoints alternate around their common circle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LandoGraph {
    pub smoothing: Smoothing,
    pub chords: Vec<Chord>,
    pub graph: SimpleGraph,
}

impl LandoGraph {
    pub fn is_empty(&self) -> bool {
        self.chords.is_empty()
    }

    /// Chords interleaving no other chord; any such chord forces `f = 0`.
    pub fn isolated_count(&self) -> usize {
        (0..self.chords.len()).filter(|v| self.graph.neighbors(*v).next().is_none()).count()
    }

    pub fn to_dot(&self, name: &str) -> String {
        let labels: Vec<String> = self.chords.iter().map(|c| format!("x{} on {}", c.crossing + 1, c.circle)).collect();
        self.graph.to_dot(name, &labels)
    }
}

fn lando_from_circles(sc: &StateCircles) -> LandoGraph {
    let chords: Vec<Chord> = sc
        .self_chords()
        .into_iter()
        .map(|x| {
            let (c, p) = sc.arc_position[2 * x];
            let (_, q) = sc.arc_position[2 * x + 1];
            Chord { crossing: x, circle: c, ends: (p.min(q), p.max(q)) }
        })
        .collect();
    let mut graph = SimpleGraph::new(chords.len());
    for i in 0..chords.len() {
        for j in i + 1..chords.len() {
            let (a, b) = (&chords[i], &chords[j]);
            if a.circle != b.circle {
                continue;
            }
            let inside = |t: usize| a.ends.0 < t && t < a.ends.1;
            if inside(b.ends.0) != inside(b.ends.1) {
                graph.add_edge(i, j);
            }
        }
    }
    LandoGraph { smoothing: sc.smoothing, chords, graph }
}

/// `(L_A, L_B)`: `L_A` lives on the all-A circles and controls `a_{S_A}`.
pub fn lando_graphs(d: &Diagram) -> (LandoGraph, LandoGraph) {
    (lando_from_circles(&state_circles(d, Smoothing::A)), lando_from_circles(&state_circles(d, Smoothing::B)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedExtremes {
    pub s_a: usize,
    pub s_b: usize,
    pub f_a: i128,
    pub f_b: i128,
    /// `(-1)^(|S_A| - 1) f(L_A)`.
    pub a_sa: i128,
    /// `(-1)^(|S_B| - 1) f(L_B)`.
    pub b_sb: i128,
}

fn sign_pow(k: usize) -> i128 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn predicted_extremes(d: &Diagram) -> PredictedExtremes {
    let sa = state_circles(d, Smoothing::A);
    let sb = state_circles(d, Smoothing::B);
    let (la, lb) = (lando_from_circles(&sa), lando_from_circles(&sb));
    let (f_a, f_b) = (f_value(&la.graph), f_value(&lb.graph));
    let (s_a, s_b) = (sa.count(), sb.count());
    PredictedExtremes { s_a, s_b, f_a, f_b, a_sa: sign_pow(s_a - 1) * f_a, b_sb: sign_pow(s_b - 1) * f_b }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "rule", content = "side")]
pub enum CertificateReason {
    /// Reduced alternating with at least one crossing.
    ReducedAlternating,
    /// One Lando graph is empty and the span is positive.
    EmptyLandoGraph(Smoothing),
    /// Both extreme coefficients are nonzero.
    BothExtremes,
    /// One Lando graph has nonzero `f` and the span is positive.
    NonzeroF(Smoothing),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "status", content = "reason")]
pub enum Certificate {
    Certified(CertificateReason),
    Unknown,
}

/// Certifies that the Jones polynomial is not 1. Never claims triviality.
pub fn nontriviality_certificate(d: &Diagram) -> Certificate {
    let computed = std::cell::OnceCell::new();
    certificate_inner(d, &|| computed.get_or_init(|| bracket(d).ok()).clone())
}

/// As [`nontriviality_certificate`], reusing a bracket already computed
/// (`None` when over budget).
pub fn nontriviality_certificate_with(d: &Diagram, known: Option<&LaurentPoly>) -> Certificate {
    certificate_inner(d, &|| known.cloned())
}

fn certificate_inner(d: &Diagram, bracket_of: &dyn Fn() -> Option<LaurentPoly>) -> Certificate {
    if d.crossing_count() == 0 {
        return Certificate::Unknown;
    }
    if d.is_alternating() && d.is_reduced() {
        return Certificate::Certified(CertificateReason::ReducedAlternating);
    }
    let (la, lb) = lando_graphs(d);
    let pred = predicted_extremes(d);
    // With one extreme coefficient known to be nonzero the polynomial is
    // nontrivial as soon as it has positive span.
    let positive_span = || bracket_of().and_then(|b| b.raw_span().ok()).is_some_and(|s| s > 0);
    if pred.f_a != 0 && pred.f_b != 0 {
        // Extremes at degrees c + 2|S_A| - 2 > -(c + 2|S_B| - 2).
        return Certificate::Certified(if la.is_empty() || lb.is_empty() {
            CertificateReason::EmptyLandoGraph(if la.is_empty() { Smoothing::A } else { Smoothing::B })
        } else {
            CertificateReason::BothExtremes
        });
    }
    for (l, side) in [(&la, Smoothing::A), (&lb, Smoothing::B)] {
        if l.is_empty() && positive_span() {
            return Certificate::Certified(CertificateReason::EmptyLandoGraph(side));
        }
    }
    for (f, side) in [(pred.f_a, Smoothing::A), (pred.f_b, Smoothing::B)] {
        if f != 0 && positive_span() {
            return Certificate::Certified(CertificateReason::NonzeroF(side));
        }
    }
    Certificate::Unknown
}

/// Everything the skeleton subcommand reports for one diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeletonReport {
    pub o: usize,
    pub vertices: usize,
    pub edges: usize,
    pub valency_profile: BTreeMap<usize, usize>,
    pub components: usize,
    pub simple: bool,
    pub g_a: usize,
    pub g_b: usize,
    pub extreme_states_bound: Option<i64>,
    pub span_bound: SpanBound,
    pub lando_a: (usize, usize),
    pub lando_b: (usize, usize),
    pub lando_isolated: (usize, usize),
    pub predicted: PredictedExtremes,
    pub certificate: Certificate,
}

pub fn skeleton_report(d: &Diagram) -> Result<SkeletonReport, SkeletonError> {
    let sk = build_skeleton(d)?;
    let (la, lb) = lando_graphs(d);
    let (g_a, g_b) = (split(&sk, Smoothing::A).count(), split(&sk, Smoothing::B).count());
    Ok(SkeletonReport {
        o: d.o_length(),
        vertices: sk.vertex_count(),
        edges: sk.edge_count(),
        valency_profile: sk.valency_profile(),
        components: sk.component_count(),
        simple: sk.is_simple(),
        g_a,
        g_b,
        extreme_states_bound: if sk.is_empty() { None } else { Some(extreme_states_bound(d)?) },
        span_bound: span_bound(d)?,
        lando_a: (la.graph.vertex_count(), la.graph.edge_count()),
        lando_b: (lb.graph.vertex_count(), lb.graph.edge_count()),
        lando_isolated: (la.isolated_count(), lb.isolated_count()),
        predicted: predicted_extremes(d),
        certificate: nontriviality_certificate(d),
    })
}

/// DOT text for `G`, `L_A` and `L_B`.
pub fn dot_bundle(d: &Diagram) -> Result<String, SkeletonError> {
    let sk = build_skeleton(d)?;
    let (la, lb) = lando_graphs(d);
    Ok(format!("{}{}{}", sk.to_dot(), la.to_dot("lando_a"), lb.to_dot("lando_b")))
}

/// Oracle-side extreme coefficients of the bracket, for comparisons.
pub fn observed_extremes(d: &Diagram, bracket: &LaurentPoly) -> (num_bigint::BigInt, num_bigint::BigInt) {
    let s = extreme_summary_from(d, bracket);
    (s.a_sa, s.b_sb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::{bracket_oracle, jones};
    use crate::diagram::parse_pd;
    use num_bigint::BigInt;

    const TREFOIL: &str = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";
    const KNOT_8_20: &str =
        "X(1,7,2,6) X(4,13,5,14) X(5,9,6,8) X(7,3,8,2) X(10,15,11,16) X(12,9,13,10) X(14,3,15,4) X(16,11,1,12)";

    #[test]
    fn alternating_skeleton_is_empty() {
        let t = parse_pd(TREFOIL).unwrap();
        let sk = build_skeleton(&t).unwrap();
        assert!(sk.is_empty());
        assert_eq!(sk.vertex_count(), 0);
        assert_eq!(extreme_states_bound(&t), Err(SkeletonError::Alternating));
        assert!(span_bound(&t).unwrap().inapplicable.is_some());
        let (la, lb) = lando_graphs(&t);
        assert!(la.is_empty() && lb.is_empty());
        assert_eq!(nontriviality_certificate(&t), Certificate::Certified(CertificateReason::ReducedAlternating));
    }

    #[test]
    fn skeleton_of_8_20() {
        for d in [parse_pd(KNOT_8_20).unwrap(), parse_pd(KNOT_8_20).unwrap().mirror()] {
            let sk = build_skeleton(&d).unwrap();
            assert_eq!(sk.edge_count(), 2 * d.o_length());
            assert!(sk.rotation.iter().all(|r| r.len() % 2 == 0));
            let v = jones(&d).unwrap();
            let bound = extreme_states_bound(&d).unwrap();
            assert!(v.span().unwrap() as i64 <= bound);
            let ga = split(&sk, Smoothing::A);
            let gb = split(&sk, Smoothing::B);
            let mut used: Vec<usize> = ga.curves.concat();
            used.sort();
            assert_eq!(used, (0..sk.edge_count()).collect::<Vec<_>>());
            assert!(gb.count() >= 1);
        }
    }

    #[test]
    fn predicted_matches_oracle_on_8_20() {
        let d = parse_pd(KNOT_8_20).unwrap();
        let b = bracket_oracle(&d).unwrap();
        let (a, bb) = observed_extremes(&d, &b);
        let p = predicted_extremes(&d);
        assert_eq!(a, BigInt::from(p.a_sa));
        assert_eq!(bb, BigInt::from(p.b_sb));
    }

    #[test]
    fn unknot_has_no_certificate() {
        assert_eq!(nontriviality_certificate(&Diagram::unknot()), Certificate::Unknown);
    }
}
