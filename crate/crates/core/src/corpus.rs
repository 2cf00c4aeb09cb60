//! Line-oriented corpus files: `<name> : <payload>` with `#` comments.
//!
//! Diagram files carry PD text; reference files carry Jones polynomials in
//! `t`. The bundled files cover the prime knots through ten crossings.

use std::collections::{BTreeMap, BTreeSet};

use crate::diagram::{parse_pd, Diagram};
use crate::error::CorpusError;
use crate::polynomial::{LaurentPoly, Variable};

pub const KNOTS_LE9_PD: &str = include_str!("../corpus/knots_le9.pd");
pub const KNOTS_LE9_JONES: &str = include_str!("../corpus/knots_le9.jones");
pub const KNOTS_10_PD: &str = include_str!("../corpus/knots_10.pd");
pub const KNOTS_10_JONES: &str = include_str!("../corpus/knots_10.jones");
pub const MOVE_PAIRS: &str = include_str!("../corpus/move_pairs.pd");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub diagram: Diagram,
}

fn records(text: &str) -> impl Iterator<Item = Result<(usize, &str, &str), CorpusError>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            return None;
        }
        Some(match line.split_once(':') {
            Some((name, rest)) if !name.trim().is_empty() => Ok((i + 1, name.trim(), rest.trim())),
            _ => Err(CorpusError::Syntax { line: i + 1 }),
        })
    })
}

/// Parses a PD corpus. An empty payload stands for the crossingless unknot.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, CorpusError> {
    let mut names = BTreeSet::new();
    let mut out = Vec::new();
    for rec in records(text) {
        let (line, name, payload) = rec?;
        if !names.insert(name.to_string()) {
            return Err(CorpusError::Duplicate(name.to_string()));
        }
        let diagram = if payload.is_empty() {
            Diagram::unknot()
        } else {
            parse_pd(payload).map_err(|source| CorpusError::Diagram { line, name: name.to_string(), source })?
        };
        out.push(CorpusEntry { name: name.to_string(), diagram });
    }
    Ok(out)
}

/// Parses `<name> : <polynomial in t>` lines.
pub fn parse_reference_jones(text: &str) -> Result<BTreeMap<String, LaurentPoly>, CorpusError> {
    let mut out = BTreeMap::new();
    for rec in records(text) {
        let (line, name, payload) = rec?;
        let p: LaurentPoly =
            payload.parse().map_err(|source| CorpusError::Poly { line, name: name.to_string(), source })?;
        let p = if p.variable() == Variable::TQuarter {
            p
        } else {
            // A constant parses without a variable; retag it.
            LaurentPoly::from_terms(Variable::TQuarter, p.terms().map(|(e, c)| (e, c.clone())))
        };
        if out.insert(name.to_string(), p).is_some() {
            return Err(CorpusError::Duplicate(name.to_string()));
        }
    }
    Ok(out)
}

/// Prime knots with at most nine crossings, 8_20 included.
pub fn bundled_le9() -> Vec<CorpusEntry> {
    parse_corpus(KNOTS_LE9_PD).expect("bundled corpus parses")
}

pub fn bundled_10() -> Vec<CorpusEntry> {
    parse_corpus(KNOTS_10_PD).expect("bundled corpus parses")
}

/// Both bundled diagram files in table order.
pub fn bundled_all() -> Vec<CorpusEntry> {
    let mut v = bundled_le9();
    v.extend(bundled_10());
    v
}

pub fn bundled_reference_jones() -> BTreeMap<String, LaurentPoly> {
    let mut m = parse_reference_jones(KNOTS_LE9_JONES).expect("bundled references parse");
    m.extend(parse_reference_jones(KNOTS_10_JONES).expect("bundled references parse"));
    m
}

/// Looks up a bundled knot by table name, e.g. `3_1`.
pub fn bundled_knot(name: &str) -> Option<Diagram> {
    bundled_all().into_iter().find(|e| e.name == name).map(|e| e.diagram)
}

/// Diagram pairs related by a Reidemeister move; entries are named
/// `<move>-<k>-before` and `<move>-<k>-after`.
pub fn bundled_move_pairs() -> Vec<(String, Diagram, Diagram)> {
    let entries = parse_corpus(MOVE_PAIRS).expect("bundled move pairs parse");
    let mut by_name: BTreeMap<String, Diagram> = entries.into_iter().map(|e| (e.name, e.diagram)).collect();
    let stems: Vec<String> = by_name.keys().filter_map(|n| n.strip_suffix("-before").map(str::to_string)).collect();
    stems
        .into_iter()
        .filter_map(|stem| {
            let before = by_name.remove(&format!("{stem}-before"))?;
            let after = by_name.remove(&format!("{stem}-after"))?;
            Some((stem, before, after))
        })
        .collect()
}

/// Writes entries back in corpus format.
pub fn render_corpus<'a>(entries: impl IntoIterator<Item = (&'a str, &'a Diagram)>) -> String {
    let mut out = String::new();
    for (name, d) in entries {
        out.push_str(name);
        out.push_str(" : ");
        out.push_str(&d.to_pd_string());
        out.push('\n');
    }
    out
}
