use bracketforge_core::bracket::{bracket_oracle, bracket_skein, jones_from_bracket};
use bracketforge_core::corpus::{bundled_all, bundled_reference_jones};

#[test]
fn jones_matches_reference_table() {
    let refs = bundled_reference_jones();
    let mut mismatched = Vec::new();
    for e in bundled_all() {
        let b = bracket_skein(&e.diagram).unwrap();
        let v = jones_from_bracket(&e.diagram, &b).unwrap();
        if refs[&e.name] != v {
            mismatched.push(e.name.clone());
        }
    }
    assert!(mismatched.is_empty(), "{mismatched:?}");
}

#[test]
fn skein_matches_oracle_through_ten_crossings() {
    for e in bundled_all() {
        assert_eq!(bracket_skein(&e.diagram).unwrap(), bracket_oracle(&e.diagram).unwrap(), "{}", e.name);
    }
}
