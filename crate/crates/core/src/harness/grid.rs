//! Audit inputs: corpus entries and the standard family grid.

use std::collections::BTreeMap;

use super::AuditItem;
use crate::corpus::{bundled_knot, CorpusEntry};
use crate::error::FamilyError;
use crate::families::{CableSpec, Family, PretzelSpec, RationalSpec, WhiteheadSpec};
use crate::polynomial::LaurentPoly;

pub fn corpus_items(
    entries: &[CorpusEntry],
    source: &str,
    references: &BTreeMap<String, LaurentPoly>,
) -> Vec<AuditItem> {
    entries
        .iter()
        .map(|e| AuditItem {
            name: e.name.clone(),
            provenance: format!("corpus {source}"),
            diagram: e.diagram.clone(),
            family: None,
            reference_jones: references.get(&e.name).cloned(),
        })
        .collect()
}

/// Generates the diagram; `name` doubles as the record name.
pub fn family_item(name: String, provenance: String, family: Family) -> Result<AuditItem, FamilyError> {
    let diagram = family.generate()?;
    Ok(AuditItem { name, provenance, diagram, family: Some(family), reference_jones: None })
}

/// Knot-valid pretzels with `n` entries drawn from `±magnitudes` and at most
/// `max_crossings` crossings, in lexicographic order of the entries.
pub fn pretzel_grid(lengths: &[usize], magnitudes: &[i64], max_crossings: usize) -> Vec<PretzelSpec> {
    let mut values: Vec<i64> = magnitudes.iter().flat_map(|m| [-m, *m]).collect();
    values.sort_unstable();
    values.dedup();
    let mut out = Vec::new();
    for &n in lengths {
        let k = values.len();
        for code in 0..k.pow(n as u32) {
            let c = (0..n).map(|i| values[code / k.pow((n - 1 - i) as u32) % k]).collect();
            let spec = PretzelSpec::new(c);
            if spec.is_knot() && spec.crossing_count() <= max_crossings {
                out.push(spec);
            }
        }
    }
    out
}

/// Pretzel grid, small rationals, and doubles and cables of the figure-eight
/// and both trefoils.
pub fn family_grid() -> Result<Vec<AuditItem>, FamilyError> {
    let mut items = Vec::new();
    for spec in pretzel_grid(&[3, 5], &[2, 3, 4], 14) {
        let name = spec.to_string();
        items.push(family_item(name, "pretzel".into(), Family::Pretzel(spec))?);
    }
    for a in
        [vec![3], vec![5], vec![2, 2], vec![3, 2], vec![2, 1, 1], vec![2, 1, 1, 2], vec![3, 1, 2], vec![2, 2, 2, 2]]
    {
        let spec = RationalSpec::new(a);
        let name = spec.to_string();
        items.push(family_item(name, "rational".into(), Family::Rational(spec))?);
    }
    let mut companions: Vec<(String, crate::diagram::Diagram)> = Vec::new();
    if let Some(t) = bundled_knot("3_1") {
        companions.push(("3_1".into(), t.clone()));
        companions.push(("3_1*".into(), t.mirror()));
    }
    companions.extend(bundled_knot("4_1").map(|f| ("4_1".into(), f)));
    for (cname, comp) in &companions {
        for twists in [0, 1, -1] {
            for clasp_positive in [true, false] {
                let spec = WhiteheadSpec { companion: comp.clone(), twists, clasp_positive };
                let fam = Family::Whitehead(spec);
                let name = format!("W({cname}, {})", fam.parameters());
                items.push(family_item(name, format!("whitehead of {cname}"), fam)?);
            }
        }
        for m in [1, -1] {
            let fam = Family::Cable(CableSpec { companion: comp.clone(), n: 2, m });
            let name = format!("Cable({cname}, {})", fam.parameters());
            items.push(family_item(name, format!("cable of {cname}"), fam)?);
        }
    }
    Ok(items)
}
