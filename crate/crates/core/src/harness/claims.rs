//! Registry of audited statements. Ids are stable; new claims go at the end.

use serde::{Deserialize, Serialize};

use super::{AuditItem, Budget, Invariants};
use crate::families::{family_predictions, ExtremeClaim, Family, FamilyPredictions, LandoShape};
use crate::skeleton::{Certificate, SpanRule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Inapplicable,
    SkippedBudget,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inapplicable => "inapplicable",
            Verdict::SkippedBudget => "skipped-budget",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim: String,
    pub verdict: Verdict,
    pub predicted: Option<String>,
    pub observed: Option<String>,
    pub note: Option<String>,
}

/// `(id, statement)` for every claim, in registration order.
pub const CLAIMS: &[(&str, &str)] = &[
    ("kauffman-murasugi", "reduced alternating knot: span = c and both extreme coefficients are +-1"),
    ("oracle-agreement", "skein bracket equals the state-sum bracket"),
    ("lando-vs-oracle", "(-1)^(|S|-1) f(L) equals the extreme bracket coefficients of the state sum"),
    ("o-equals-u", "o(D) = u(D)"),
    ("bridge-plus-o", "overpasses plus o(D) equals c(D)"),
    ("face-sign-balance", "every face has as many positive as negative edges"),
    ("skeleton-structure", "skeleton has 2 o(D) edges with signs alternating at every vertex"),
    ("extreme-states-bound", "span <= c + (|G_A| + |G_B| - v(G)) / 2"),
    ("span-bound-o3", "totally reduced, o = 3: span <= c - 2"),
    ("span-bound-even-o", "totally reduced, o even: span <= c - 1"),
    ("span-bound-odd-o", "totally reduced, o odd >= 5: span <= c - 3"),
    ("span-bound-components", "totally reduced, p skeleton components: span <= c - p (even o) or c - p - 1 (odd o)"),
    ("odd-o-excess", "totally reduced, o odd >= 5: |G_A| + |G_B| - v(G) <= -6"),
    ("certificate-sound", "a nontriviality certificate implies Jones polynomial != 1"),
    ("jones-reference", "Jones polynomial equals the reference table"),
    ("pretzel-crossings", "c(D) = sum |c_i|"),
    ("pretzel-o-length", "o(D) = cyclic sign changes of c_i"),
    ("pretzel-state-counts", "|S_A| = p_c + sum over negative c_i of -(c_i + 1); |S_B| likewise"),
    ("pretzel-span", "span = sum |c_i| - 1 (o even) or - 2 (o odd); c for o = 0"),
    ("pretzel-extreme-sign", "signs of a_{S_A} and b_{S_B} by parity"),
    ("pretzel-unit-extremes", "|c_i| > 1: extreme coefficients are +-1"),
    ("pretzel-lando-shape", "|c_i| > 1: both Lando graphs empty"),
    ("pretzel-nontrivial", "nontriviality certificate fires"),
    ("rational-crossings", "c(D) = sum a_i"),
    ("rational-o-length", "positive a_i: o(D) = 0"),
    ("rational-span", "positive a_i, reduced: span = c"),
    ("rational-unit-extremes", "positive a_i, reduced: extreme coefficients are +-1"),
    ("rational-nontrivial", "nontriviality certificate fires"),
    ("whitehead-crossings", "c(D') = 4 c(D) + 2 (+ 2|t|)"),
    ("whitehead-o-length", "untwisted: o(D') = 2 c(D) + 2 o(D) + 1"),
    ("whitehead-state-counts", "alternating companion: |S_A'| = 2|S_A| - 1, |S_B'| = 2|S_B| + 1, up to A/B exchange"),
    ("whitehead-span-bound", "span <= 4 c(D) - 1; alternating companion: <= 3 c(D) + 2"),
    ("whitehead-span", "alternating companion: span = 3 c(D) + 2"),
    ("whitehead-extremes", "alternating companion: both extremes nonzero (untwisted), at least one (twisted)"),
    ("whitehead-lando-shape", "alternating companion: one Lando graph empty, the other bipartite"),
    ("whitehead-crossing-number", "alternating companion: span(V') > c(D)"),
    ("whitehead-nontrivial", "alternating companion: nontriviality certificate fires"),
    ("cable-crossings", "c(D') = n^2 c(D) + |m| (n - 1)"),
    (
        "cable-state-counts",
        "alternating companion, |m| = 1: |S_A'| = n|S_A|, |S_B'| = n(|S_B| - 1) + 1, up to A/B exchange",
    ),
    ("cable-span", "alternating companion, |m| = 1: span = (n^2 + n) c / 2 + n - 1"),
    ("cable-extremes", "alternating companion: both extremes nonzero (|m| = 1), at least one otherwise"),
    ("cable-crossing-number", "alternating companion, |m| = 1: span(V') > c(D)"),
    ("cable-nontrivial", "alternating companion: nontriviality certificate fires"),
];

pub fn claim_ids() -> impl Iterator<Item = &'static str> {
    CLAIMS.iter().map(|(id, _)| *id)
}

struct Ctx<'a> {
    item: &'a AuditItem,
    inv: &'a Invariants,
    budget: &'a Budget,
    family: Option<(&'static str, FamilyPredictions)>,
}

fn result(claim: &str, verdict: Verdict, predicted: Option<String>, observed: Option<String>) -> ClaimResult {
    ClaimResult { claim: claim.to_string(), verdict, predicted, observed, note: None }
}

fn inapplicable(claim: &str) -> ClaimResult {
    result(claim, Verdict::Inapplicable, None, None)
}

fn skipped(claim: &str, why: &str) -> ClaimResult {
    ClaimResult { note: Some(why.to_string()), ..result(claim, Verdict::SkippedBudget, None, None) }
}

fn compare<T: PartialEq + std::fmt::Display>(claim: &str, predicted: T, observed: T) -> ClaimResult {
    let v = if predicted == observed { Verdict::Pass } else { Verdict::Fail };
    result(claim, v, Some(predicted.to_string()), Some(observed.to_string()))
}

fn check(claim: &str, ok: bool, predicted: String, observed: String) -> ClaimResult {
    result(claim, if ok { Verdict::Pass } else { Verdict::Fail }, Some(predicted), Some(observed))
}

fn opt(v: Option<i128>) -> String {
    v.map_or_else(|| "?".into(), |x| x.to_string())
}

fn is_unit(v: Option<i128>) -> bool {
    matches!(v, Some(1) | Some(-1))
}

impl Ctx<'_> {
    fn span_or_skip(&self, claim: &str) -> Result<u64, ClaimResult> {
        self.inv.jones_span.ok_or_else(|| skipped(claim, "bracket over the skein budget"))
    }

    fn general(&self, id: &str) -> ClaimResult {
        let inv = self.inv;
        let c = inv.crossings;
        match id {
            "kauffman-murasugi" => {
                if inv.components != 1 || c == 0 || !inv.alternating || !inv.reduced {
                    return inapplicable(id);
                }
                let span = match self.span_or_skip(id) {
                    Ok(s) => s,
                    Err(r) => return r,
                };
                let ok = span == c as u64 && is_unit(inv.observed_a) && is_unit(inv.observed_b);
                check(
                    id,
                    ok,
                    format!("span {c}, extremes +-1"),
                    format!("span {span}, extremes {} {}", opt(inv.observed_a), opt(inv.observed_b)),
                )
            }
            "oracle-agreement" => match (&inv.bracket, &inv.oracle_bracket) {
                _ if c > self.budget.oracle_limit => skipped(id, "over the oracle budget"),
                (Some(s), Some(o)) => compare(id, o.to_string(), s.to_string()),
                _ => skipped(id, "bracket unavailable"),
            },
            "lando-vs-oracle" => {
                if c > self.budget.oracle_limit || inv.oracle_bracket.is_none() {
                    return skipped(id, "over the oracle budget");
                }
                let p = &inv.predicted;
                compare(id, format!("{} {}", p.a_sa, p.b_sb), format!("{} {}", opt(inv.oracle_a), opt(inv.oracle_b)))
            }
            "o-equals-u" => compare(id, inv.o_length, inv.u_length),
            "bridge-plus-o" => match inv.overpasses {
                Some(b) if inv.components == 1 => compare(id, c, b + inv.o_length),
                _ => inapplicable(id),
            },
            "face-sign-balance" => compare(id, 0, inv.unbalanced_faces),
            "skeleton-structure" => match &inv.skeleton {
                Some(s) => compare(id, 2 * inv.o_length, s.edges),
                None => {
                    result(id, Verdict::Fail, Some("alternating signs".into()), Some("sign clash at a face".into()))
                }
            },
            "extreme-states-bound" => {
                let Some(bound) = inv.extreme_states_bound else { return inapplicable(id) };
                match self.span_or_skip(id) {
                    Ok(span) => check(id, span as i64 <= bound, format!("<= {bound}"), span.to_string()),
                    Err(r) => r,
                }
            }
            "span-bound-o3" | "span-bound-even-o" | "span-bound-odd-o" | "span-bound-components" => {
                let rule = match id {
                    "span-bound-o3" => SpanRule::OThree,
                    "span-bound-even-o" => SpanRule::EvenO,
                    "span-bound-odd-o" => SpanRule::OddAtLeastFive,
                    _ => SpanRule::Components,
                };
                let Some(rb) = inv.span_bound.as_ref().and_then(|sb| sb.rules.iter().find(|r| r.rule == rule)) else {
                    return inapplicable(id);
                };
                match self.span_or_skip(id) {
                    Ok(span) => check(id, span as i64 <= rb.bound, format!("<= {}", rb.bound), span.to_string()),
                    Err(r) => r,
                }
            }
            "odd-o-excess" => match &inv.skeleton {
                Some(s) if inv.totally_reduced() && inv.o_length % 2 == 1 && inv.o_length >= 5 => {
                    check(id, s.excess <= -6, "<= -6".into(), s.excess.to_string())
                }
                _ => inapplicable(id),
            },
            "certificate-sound" => {
                if !matches!(inv.certificate, Certificate::Certified(_)) {
                    return inapplicable(id);
                }
                match &inv.jones {
                    Some(j) => check(id, !j.is_one(), "V != 1".into(), j.to_string()),
                    None => skipped(id, "bracket over the skein budget"),
                }
            }
            "jones-reference" => match (&self.item.reference_jones, &inv.jones) {
                (None, _) => inapplicable(id),
                (Some(_), None) => skipped(id, "bracket over the skein budget"),
                (Some(want), Some(got)) => compare(id, want.to_string(), got.to_string()),
            },
            _ => inapplicable(id),
        }
    }

    fn family_claim(&self, kind: &str, suffix: &str, id: &str) -> ClaimResult {
        let Some((fk, p)) = &self.family else { return inapplicable(id) };
        if *fk != kind {
            return inapplicable(id);
        }
        let inv = self.inv;
        let certified = matches!(inv.certificate, Certificate::Certified(_));
        match suffix {
            "crossings" => p.crossings.map_or_else(|| inapplicable(id), |want| compare(id, want, inv.crossings)),
            "o-length" => p.o_length.map_or_else(|| inapplicable(id), |want| compare(id, want, inv.o_length)),
            "state-counts" => match p.state_counts {
                Some(law) => check(
                    id,
                    law.matches(inv.s_a, inv.s_b),
                    match law.exchanged {
                        Some((a, b)) => format!("{} {} or {a} {b}", law.s_a, law.s_b),
                        None => format!("{} {}", law.s_a, law.s_b),
                    },
                    format!("{} {}", inv.s_a, inv.s_b),
                ),
                None => inapplicable(id),
            },
            "span" => match p.span {
                Some(want) => self.span_or_skip(id).map_or_else(|r| r, |span| compare(id, want, span)),
                None => inapplicable(id),
            },
            "span-bound" => match p.span_at_most {
                Some(b) => self
                    .span_or_skip(id)
                    .map_or_else(|r| r, |span| check(id, span <= b, format!("<= {b}"), span.to_string())),
                None => inapplicable(id),
            },
            "extreme-sign" => {
                if p.a_sign.is_none() && p.b_sign.is_none() {
                    return inapplicable(id);
                }
                if inv.bracket.is_none() {
                    return skipped(id, "bracket over the skein budget");
                }
                let sign = |v: Option<i128>| v.map_or(0, |x| x.signum() as i8);
                let (oa, ob) = (sign(inv.observed_a), sign(inv.observed_b));
                let ok = p.a_sign.is_none_or(|s| s == oa) && p.b_sign.is_none_or(|s| s == ob);
                let show = |s: Option<i8>| s.map_or_else(|| "*".into(), |x| x.to_string());
                check(id, ok, format!("{} {}", show(p.a_sign), show(p.b_sign)), format!("{oa} {ob}"))
            }
            "extremes" => match p.extremes {
                Some(claim) => {
                    if inv.bracket.is_none() {
                        return skipped(id, "bracket over the skein budget");
                    }
                    let (a, b) = (inv.observed_a.unwrap_or(0) != 0, inv.observed_b.unwrap_or(0) != 0);
                    let ok = match claim {
                        ExtremeClaim::Both => a && b,
                        ExtremeClaim::AtLeastOne => a || b,
                    };
                    let want = if claim == ExtremeClaim::Both { "both nonzero" } else { "one nonzero" };
                    check(id, ok, want.into(), format!("{} {}", opt(inv.observed_a), opt(inv.observed_b)))
                }
                None => inapplicable(id),
            },
            "unit-extremes" => {
                if !p.unit_extremes {
                    return inapplicable(id);
                }
                if inv.bracket.is_none() {
                    return skipped(id, "bracket over the skein budget");
                }
                let ok = is_unit(inv.observed_a) && is_unit(inv.observed_b);
                check(id, ok, "+-1 +-1".into(), format!("{} {}", opt(inv.observed_a), opt(inv.observed_b)))
            }
            "lando-shape" => match p.lando {
                Some(shape) => {
                    let (a, b) = (&inv.lando_a, &inv.lando_b);
                    let ok = match shape {
                        LandoShape::BothEmpty => a.vertices == 0 && b.vertices == 0,
                        LandoShape::OneEmptyOtherBipartite => {
                            (a.vertices == 0 && b.bipartite) || (b.vertices == 0 && a.bipartite)
                        }
                    };
                    let want = if shape == LandoShape::BothEmpty { "both empty" } else { "one empty, one bipartite" };
                    let seen = format!(
                        "A {}v{}e{} B {}v{}e{}",
                        a.vertices,
                        a.edges,
                        if a.bipartite { " bipartite" } else { "" },
                        b.vertices,
                        b.edges,
                        if b.bipartite { " bipartite" } else { "" }
                    );
                    check(id, ok, want.into(), seen)
                }
                None => inapplicable(id),
            },
            "crossing-number" => match p.span_exceeds {
                Some(c) => self
                    .span_or_skip(id)
                    .map_or_else(|r| r, |span| check(id, span > c, format!("> {c}"), span.to_string())),
                None => inapplicable(id),
            },
            "nontrivial" => {
                if !p.nontrivial {
                    return inapplicable(id);
                }
                let jones_ok = inv.jones.as_ref().is_none_or(|j| !j.is_one());
                let observed = match (&inv.certificate, &inv.jones) {
                    (Certificate::Certified(r), _) => format!("certified {r:?}"),
                    (Certificate::Unknown, _) => "no certificate".to_string(),
                };
                check(id, certified && jones_ok, "certified".into(), observed)
            }
            _ => inapplicable(id),
        }
    }
}

/// Verdicts of the selected claims (all when `filter` is empty), sorted by id.
pub fn evaluate_claims(item: &AuditItem, inv: &Invariants, budget: &Budget, filter: &[String]) -> Vec<ClaimResult> {
    let family = item.family.as_ref().map(|f: &Family| (f.kind(), family_predictions(&item.diagram, f)));
    let ctx = Ctx { item, inv, budget, family };
    let mut out: Vec<ClaimResult> = claim_ids()
        .filter(|id| filter.is_empty() || filter.iter().any(|f| f == id))
        .map(|id| {
            let family_part = ["pretzel-", "rational-", "whitehead-", "cable-"]
                .iter()
                .find_map(|p| id.strip_prefix(p).map(|s| (&p[..p.len() - 1], s)));
            match family_part {
                Some((kind, suffix)) => ctx.family_claim(kind, suffix, id),
                None => ctx.general(id),
            }
        })
        .collect();
    out.sort_by(|a, b| a.claim.cmp(&b.claim));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn ids_are_unique() {
        let ids: BTreeSet<&str> = claim_ids().collect();
        assert_eq!(ids.len(), CLAIMS.len());
    }
}
