//! Batch audits: invariants per diagram, claim verdicts, a result cache
//! and report rendering.

mod cache;
mod claims;
mod grid;
mod report;

pub use cache::{cache_key, ResultCache};
pub use claims::{claim_ids, evaluate_claims, ClaimResult, Verdict, CLAIMS};
pub use grid::{corpus_items, family_grid, family_item, pretzel_grid};
pub use report::{render, Report, ReportFormat, Summary, CSV_HEADER, SCHEMA};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bracket::Smoothing;
use crate::bracket::{bracket, bracket_oracle_with_limit, extreme_summary_from, jones_from_bracket, SKEIN_LIMIT};
use crate::diagram::{Diagram, Orientation};
use crate::families::Family;
use crate::polynomial::LaurentPoly;
use crate::skeleton::{
    build_skeleton, lando_graphs, nontriviality_certificate_with, predicted_extremes, skeleton_excess, span_bound,
    split, Certificate, LandoGraph, PredictedExtremes, SpanBound,
};

/// Crossing ceilings for the two bracket evaluators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// State-sum oracle, used by oracle-backed claims.
    pub oracle_limit: usize,
    pub skein_limit: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { oracle_limit: 12, skein_limit: SKEIN_LIMIT }
    }
}

/// One diagram to audit.
#[derive(Clone, Debug)]
pub struct AuditItem {
    pub name: String,
    pub provenance: String,
    pub diagram: Diagram,
    pub family: Option<Family>,
    pub reference_jones: Option<LaurentPoly>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LandoSummary {
    pub vertices: usize,
    pub edges: usize,
    pub isolated: usize,
    pub bipartite: bool,
}

impl From<&LandoGraph> for LandoSummary {
    fn from(l: &LandoGraph) -> Self {
        LandoSummary {
            vertices: l.graph.vertex_count(),
            edges: l.graph.edge_count(),
            isolated: l.isolated_count(),
            bipartite: l.graph.is_bipartite(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeletonSummary {
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
    pub g_a: usize,
    pub g_b: usize,
    /// `|G_A| + |G_B| - v(G)`.
    pub excess: i64,
}

/// Everything computed about one diagram. Cached by [`cache_key`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub crossings: usize,
    pub components: usize,
    pub writhe: Option<i64>,
    pub gauss: Option<String>,
    pub o_length: usize,
    pub u_length: usize,
    /// Overpasses counted on the Gauss code.
    pub overpasses: Option<usize>,
    pub alternating: bool,
    pub reduced: bool,
    pub ii_reduced: bool,
    pub unbalanced_faces: usize,
    pub s_a: usize,
    pub s_b: usize,
    /// `None` when signs fail to alternate around some face.
    pub skeleton: Option<SkeletonSummary>,
    pub extreme_states_bound: Option<i64>,
    pub span_bound: Option<SpanBound>,
    pub lando_a: LandoSummary,
    pub lando_b: LandoSummary,
    pub predicted: PredictedExtremes,
    pub certificate: Certificate,
    /// Skein bracket; `None` over the skein budget.
    pub bracket: Option<LaurentPoly>,
    pub jones: Option<LaurentPoly>,
    pub jones_span: Option<u64>,
    /// Bracket coefficients at the `S_A` and `S_B` extreme degrees.
    pub observed_a: Option<i128>,
    pub observed_b: Option<i128>,
    /// State-sum bracket; `None` over the oracle budget.
    pub oracle_bracket: Option<LaurentPoly>,
    pub oracle_a: Option<i128>,
    pub oracle_b: Option<i128>,
}

impl Invariants {
    pub fn totally_reduced(&self) -> bool {
        self.reduced && self.ii_reduced
    }
}

fn extremes(d: &Diagram, b: &LaurentPoly) -> (Option<i128>, Option<i128>) {
    use num_traits::ToPrimitive;
    let s = extreme_summary_from(d, b);
    (s.a_sa.to_i128(), s.b_sb.to_i128())
}

pub fn compute_invariants(d: &Diagram, budget: &Budget) -> Invariants {
    let c = d.crossing_count();
    let gauss = d.to_gauss().ok();
    let skeleton = build_skeleton(d).ok().map(|sk| SkeletonSummary {
        vertices: sk.vertex_count(),
        edges: sk.edge_count(),
        components: sk.component_count(),
        g_a: split(&sk, Smoothing::A).count(),
        g_b: split(&sk, Smoothing::B).count(),
        excess: skeleton_excess(&sk),
    });
    let (la, lb) = lando_graphs(d);
    let predicted = predicted_extremes(d);
    let bracket = if c <= budget.skein_limit { bracket(d).ok() } else { None };
    let jones = bracket.as_ref().and_then(|b| jones_from_bracket(d, b).ok());
    let (observed_a, observed_b) = bracket.as_ref().map_or((None, None), |b| extremes(d, b));
    let oracle_bracket =
        if c <= budget.oracle_limit { bracket_oracle_with_limit(d, budget.oracle_limit).ok() } else { None };
    let (oracle_a, oracle_b) = oracle_bracket.as_ref().map_or((None, None), |b| extremes(d, b));
    Invariants {
        crossings: c,
        components: d.component_count(),
        writhe: d.writhe(Orientation::Forward).ok(),
        gauss: gauss.as_ref().map(|g| g.to_string()),
        o_length: d.o_length(),
        u_length: d.u_length(),
        overpasses: gauss.as_ref().filter(|_| c > 0).map(|g| g.overpass_count()),
        alternating: d.is_alternating(),
        reduced: d.is_reduced(),
        ii_reduced: d.is_ii_reduced(),
        unbalanced_faces: d.unbalanced_faces().len(),
        s_a: predicted.s_a,
        s_b: predicted.s_b,
        extreme_states_bound: skeleton.as_ref().filter(|s| s.edges > 0).map(|s| c as i64 + s.excess.div_euclid(2)),
        skeleton,
        span_bound: span_bound(d).ok(),
        lando_a: (&la).into(),
        lando_b: (&lb).into(),
        certificate: nontriviality_certificate_with(d, bracket.as_ref()),
        predicted,
        jones_span: jones.as_ref().and_then(|j| j.span().ok()),
        jones,
        bracket,
        observed_a,
        observed_b,
        oracle_bracket,
        oracle_a,
        oracle_b,
    }
}

/// Invariants and claim verdicts for one diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRecord {
    pub name: String,
    pub provenance: String,
    pub invariants: Invariants,
    pub claims: Vec<ClaimResult>,
}

impl AuditRecord {
    pub fn has_failure(&self) -> bool {
        self.claims.iter().any(|c| c.verdict == Verdict::Fail)
    }
}

#[derive(Clone, Debug, Default)]
pub struct AuditOptions {
    pub budget: Budget,
    /// Claim ids to evaluate; empty means all.
    pub claims: Vec<String>,
}

/// Audits every item, in parallel on the current rayon pool. Records come
/// back sorted by name; cached invariants are reused and new ones stored.
pub fn audit(items: &[AuditItem], opts: &AuditOptions, cache: Option<&mut ResultCache>) -> Vec<AuditRecord> {
    let keys: Vec<String> = items.iter().map(|it| cache_key(&it.diagram, &opts.budget)).collect();
    let cached: Vec<Option<Invariants>> =
        keys.iter().map(|k| cache.as_deref().and_then(|c| c.get(k).cloned())).collect();
    let mut records: Vec<(AuditRecord, Option<(String, Invariants)>)> = items
        .par_iter()
        .zip(cached.into_par_iter())
        .zip(keys.par_iter())
        .map(|((item, hit), key)| {
            let fresh = hit.is_none();
            let inv = hit.unwrap_or_else(|| compute_invariants(&item.diagram, &opts.budget));
            let claims = evaluate_claims(item, &inv, &opts.budget, &opts.claims);
            let store = fresh.then(|| (key.clone(), inv.clone()));
            (
                AuditRecord { name: item.name.clone(), provenance: item.provenance.clone(), invariants: inv, claims },
                store,
            )
        })
        .collect();
    if let Some(c) = cache {
        for (_, store) in &mut records {
            if let Some((k, inv)) = store.take() {
                c.insert(k, inv);
            }
        }
    }
    let mut out: Vec<AuditRecord> = records.into_iter().map(|(r, _)| r).collect();
    out.sort_by(|a, b| a.name.cmp(&b.name).then_with(|| a.provenance.cmp(&b.provenance)));
    out
}
