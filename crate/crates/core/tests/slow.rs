//! Large-diagram checks. Run with `cargo test -- --ignored`.

use bracketforge_core::bracket::{bracket_oracle, bracket_skein};
use bracketforge_core::corpus::bundled_knot;
use bracketforge_core::families::{cable, whitehead_double, CableSpec, WhiteheadSpec};

#[test]
#[ignore = "slow: 2^22 states"]
fn oracle_agrees_with_skein_at_22_crossings() {
    let k = bundled_knot("3_1").unwrap();
    let d = whitehead_double(&WhiteheadSpec { companion: k, twists: 4, clasp_positive: true }).unwrap();
    assert_eq!(d.crossing_count(), 22);
    let start = std::time::Instant::now();
    let oracle = bracket_oracle(&d).unwrap();
    println!("22-crossing state sum in {:?}", start.elapsed());
    assert_eq!(oracle, bracket_skein(&d).unwrap());
}

#[test]
#[ignore = "slow: 2^19 states"]
fn figure_eight_cable_at_19_crossings() {
    let k = bundled_knot("4_1").unwrap();
    let d = cable(&CableSpec { companion: k, n: 2, m: 3 }).unwrap();
    assert_eq!(d.crossing_count(), 19);
    assert_eq!(bracket_oracle(&d).unwrap(), bracket_skein(&d).unwrap());
}
