//! Report assembly and rendering as JSON, CSV or plain text.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{AuditRecord, Verdict};

pub const SCHEMA: &str = "bracketforge-audit/1";
pub const CSV_HEADER: [&str; 8] =
    ["name", "provenance", "crossings", "claim", "verdict", "predicted", "observed", "note"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "text" => Ok(ReportFormat::Text),
            other => Err(format!("unknown format {other:?}; expected json, csv or text")),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub records: usize,
    pub pass: usize,
    pub fail: usize,
    pub inapplicable: usize,
    pub skipped_budget: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    /// Seconds since the Unix epoch; omitted when suppressed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generated_unix: Option<u64>,
    pub summary: Summary,
    pub records: Vec<AuditRecord>,
}

impl Report {
    /// Sorts records by name and claims by id.
    pub fn new(mut records: Vec<AuditRecord>, timestamp: bool) -> Self {
        records.sort_by(|a, b| a.name.cmp(&b.name).then_with(|| a.provenance.cmp(&b.provenance)));
        let mut summary = Summary { records: records.len(), ..Default::default() };
        for r in &mut records {
            r.claims.sort_by(|a, b| a.claim.cmp(&b.claim));
            for c in &r.claims {
                match c.verdict {
                    Verdict::Pass => summary.pass += 1,
                    Verdict::Fail => summary.fail += 1,
                    Verdict::Inapplicable => summary.inapplicable += 1,
                    Verdict::SkippedBudget => summary.skipped_budget += 1,
                }
            }
        }
        let generated_unix = timestamp
            .then(|| std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).map(|d| d.as_secs()).ok())
            .flatten();
        Report { schema: SCHEMA.to_string(), generated_unix, summary, records }
    }

    pub fn has_failure(&self) -> bool {
        self.summary.fail > 0
    }
}

pub fn render(report: &Report, format: ReportFormat) -> Result<String, std::io::Error> {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report)?;
            s.push('\n');
            Ok(s)
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_HEADER)?;
            for r in &report.records {
                let crossings = r.invariants.crossings.to_string();
                for c in &r.claims {
                    w.write_record([
                        r.name.as_str(),
                        r.provenance.as_str(),
                        crossings.as_str(),
                        c.claim.as_str(),
                        c.verdict.as_str(),
                        c.predicted.as_deref().unwrap_or(""),
                        c.observed.as_deref().unwrap_or(""),
                        c.note.as_deref().unwrap_or(""),
                    ])?;
                }
            }
            let bytes = w.into_inner().map_err(|e| e.into_error())?;
            String::from_utf8(bytes).map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))
        }
        ReportFormat::Text => {
            let mut s = String::new();
            for r in &report.records {
                let _ = writeln!(s, "{} [{}] c={}", r.name, r.provenance, r.invariants.crossings);
                for c in r.claims.iter().filter(|c| c.verdict != Verdict::Inapplicable) {
                    let _ = write!(s, "  {:<26} {:<14}", c.claim, c.verdict.as_str());
                    if let (Some(p), Some(o)) = (&c.predicted, &c.observed) {
                        let _ = write!(s, " predicted {p}; observed {o}");
                    }
                    if let Some(n) = &c.note {
                        let _ = write!(s, " ({n})");
                    }
                    s.push('\n');
                }
            }
            let m = &report.summary;
            let _ = writeln!(
                s,
                "{} records: {} pass, {} fail, {} inapplicable, {} skipped-budget",
                m.records, m.pass, m.fail, m.inapplicable, m.skipped_budget
            );
            Ok(s)
        }
    }
}
