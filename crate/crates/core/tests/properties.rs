use proptest::prelude::*;

use bracketforge_core::bracket::{bracket, bracket_oracle, jones};
use bracketforge_core::corpus::bundled_all;
use bracketforge_core::diagram::moves::{add_clasp, add_kink, clasp_sites, KinkKind};
use bracketforge_core::harness::{
    audit, cache_key, corpus_items, render, AuditOptions, Budget, Report, ReportFormat, ResultCache,
};
use bracketforge_core::{Diagram, LaurentPoly, Variable};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-12i64..12, -50i64..50), 0..8).prop_map(|t| LaurentPoly::from_terms(Variable::A, t))
}

fn small_knot() -> impl Strategy<Value = Diagram> {
    let knots: Vec<Diagram> =
        bundled_all().into_iter().map(|e| e.diagram).filter(|d| d.crossing_count() <= 7).collect();
    (prop::sample::select(knots), any::<bool>()).prop_map(|(d, m)| if m { d.mirror() } else { d })
}

proptest! {
    #[test]
    fn ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &LaurentPoly::one(Variable::A), p.clone());
    }

    #[test]
    fn display_round_trips(p in poly()) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<LaurentPoly>().unwrap(), p);
    }

    #[test]
    fn kink_preserves_jones(d in small_knot(), edge in 0usize..64, kind in 0usize..4) {
        let edges = d.edges();
        let e = edges[edge % edges.len()];
        let k = add_kink(&d, e, KinkKind::ALL[kind]).unwrap();
        prop_assert_eq!(jones(&k).unwrap(), jones(&d).unwrap());
        // The bracket changes by -A^(+-3).
        let (bk, bd) = (bracket(&k).unwrap(), bracket(&d).unwrap());
        let ok = [3i64, -3].iter().any(|s| bk == bd.mono_mul(*s).neg());
        prop_assert!(ok);
    }

    #[test]
    fn clasp_preserves_bracket(d in small_knot(), site in 0usize..256, over in any::<bool>()) {
        let sites = clasp_sites(&d);
        let (f, i, j) = sites[site % sites.len()];
        let c = add_clasp(&d, f, i, j, over).unwrap();
        prop_assert_eq!(c.crossing_count(), d.crossing_count() + 2);
        prop_assert_eq!(bracket_oracle(&c).unwrap(), bracket(&d).unwrap());
    }

    #[test]
    fn mirror_inverts_bracket(d in small_knot()) {
        prop_assert_eq!(bracket(&d.mirror()).unwrap(), bracket(&d).unwrap().invert_variable());
    }

    #[test]
    fn cache_key_ignores_relabeling(d in small_knot(), edge in 0usize..64) {
        let budget = Budget::default();
        let edges = d.edges();
        let k = add_kink(&d, edges[edge % edges.len()], KinkKind::ALL[0]).unwrap();
        prop_assert_eq!(cache_key(&d, &budget), cache_key(&d.canonical(), &budget));
        prop_assert_ne!(cache_key(&d, &budget), cache_key(&k, &budget));
    }
}

fn sample_items(n: usize) -> Vec<bracketforge_core::harness::AuditItem> {
    let entries: Vec<_> = bundled_all().into_iter().step_by(7).take(n).collect();
    corpus_items(&entries, "bundled", &bracketforge_core::corpus::bundled_reference_jones())
}

#[test]
fn cache_round_trip_matches_fresh_run() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.jsonl");
    let items = sample_items(20);
    let opts = AuditOptions::default();
    let fresh = audit(&items, &opts, None);
    let mut cache = ResultCache::open(&path).unwrap();
    let first = audit(&items, &opts, Some(&mut cache));
    cache.flush().unwrap();
    let mut reopened = ResultCache::open(&path).unwrap();
    assert_eq!(reopened.len(), cache.len());
    let second = audit(&items, &opts, Some(&mut reopened));
    assert_eq!(fresh, first);
    assert_eq!(fresh, second);
}

#[test]
fn corrupt_cache_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.jsonl");
    std::fs::write(&path, "{not json\n").unwrap();
    assert!(ResultCache::open(&path).is_err());
}

#[test]
fn parallel_audit_equals_serial() {
    let items = sample_items(40);
    let opts = AuditOptions::default();
    let serial = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap().install(|| audit(&items, &opts, None));
    let parallel =
        rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap().install(|| audit(&items, &opts, None));
    assert_eq!(serial, parallel);
    let render_all = |recs| {
        let r = Report::new(recs, false);
        [ReportFormat::Json, ReportFormat::Csv, ReportFormat::Text].map(|f| render(&r, f).unwrap())
    };
    assert_eq!(render_all(serial), render_all(parallel));
}

#[test]
fn report_json_round_trips() {
    let report = Report::new(audit(&sample_items(15), &AuditOptions::default(), None), true);
    let text = render(&report, ReportFormat::Json).unwrap();
    let back: Report = serde_json::from_str(&text).unwrap();
    assert_eq!(back, report);
    assert!(report.generated_unix.is_some());
    let quiet = Report::new(report.records.clone(), false);
    assert!(!render(&quiet, ReportFormat::Json).unwrap().contains("generated_unix"));
}
