//! Reidemeister moves that increase crossing number, used to build
//! pairs of diagrams of the same knot.

use super::{braid_closure, Diagram, EdgeId, Slot};
use crate::error::DiagramError;

/// Which of the four curls a first move inserts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct KinkKind {
    /// The strand enters the new crossing on the under-strand.
    pub under_first: bool,
    /// Loop on the other side of the strand.
    pub flipped: bool,
}

impl KinkKind {
    pub const ALL: [KinkKind; 4] = [
        KinkKind { under_first: false, flipped: false },
        KinkKind { under_first: false, flipped: true },
        KinkKind { under_first: true, flipped: false },
        KinkKind { under_first: true, flipped: true },
    ];
}

fn tuples(d: &Diagram) -> Vec<[u32; 4]> {
    d.crossings().iter().map(|r| r.incident.map(|e| e.0)).collect()
}

fn set(t: &mut [[u32; 4]], s: Slot, label: u32) {
    t[s / 4][s % 4] = label;
}

/// Inserts a curl on edge `e`.
pub fn add_kink(d: &Diagram, e: EdgeId, kind: KinkKind) -> Result<Diagram, DiagramError> {
    let mut t = tuples(d);
    let next = d.edge_count() as u32 + 1;
    let (p, q, r) = if d.is_unknot_constant() {
        (1, 2, 1)
    } else {
        let [x, a] = d.edge_slots(e)?;
        let (p, q, r) = (e.0, next, next + 1);
        set(&mut t, x, p);
        set(&mut t, a, r);
        (p, q, r)
    };
    t.push(match (kind.under_first, kind.flipped) {
        (true, false) => [p, q, q, r],
        (true, true) => [p, r, q, q],
        (false, false) => [q, q, r, p],
        (false, true) => [q, p, r, q],
    });
    Ok(Diagram::from_labels(&t)?.canonical())
}

/// Pairs of distinct sides of a common face, as `(face, side, side)`.
pub fn clasp_sites(d: &Diagram) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for (fi, f) in d.faces().iter().enumerate() {
        for i in 0..f.sides.len() {
            for j in 0..f.sides.len() {
                if i != j && f.sides[i].edge != f.sides[j].edge {
                    out.push((fi, i, j));
                }
            }
        }
    }
    out
}

/// Second move: pushes a finger of side `i` of `face` across side `j`,
/// over it when `finger_over`.
pub fn add_clasp(d: &Diagram, face: usize, i: usize, j: usize, finger_over: bool) -> Result<Diagram, DiagramError> {
    let faces = d.faces();
    let f = faces.get(face).ok_or_else(|| DiagramError::NoMoveSite(format!("face {face}")))?;
    let (si, sj) = match (f.sides.get(i), f.sides.get(j)) {
        (Some(a), Some(b)) if i != j && a.edge != b.edge => (*a, *b),
        _ => return Err(DiagramError::NoMoveSite(format!("sides {i},{j} of face {face}"))),
    };
    let mut t = tuples(d);
    let next = d.edge_count() as u32 + 1;
    let (s1, s2, s3) = (si.edge.0, next, next + 1);
    let (t1, t2, t3) = (sj.edge.0, next + 2, next + 3);
    set(&mut t, si.exit, s1);
    set(&mut t, si.arrival, s3);
    set(&mut t, sj.exit, t1);
    set(&mut t, sj.arrival, t3);
    if finger_over {
        t.push([t3, s1, t2, s2]);
        t.push([t2, s3, t1, s2]);
    } else {
        t.push([s1, t2, s2, t3]);
        t.push([s3, t1, s2, t2]);
    }
    Ok(Diagram::from_labels(&t)?.canonical())
}

/// Positions where a braid word contains `s_i s_j s_i` with `|i - j| = 1`
/// and all three letters of one sign.
pub fn braid_relation_sites(word: &[i32]) -> Vec<usize> {
    (0..word.len().saturating_sub(2))
        .filter(|&k| {
            let (a, b, c) = (word[k], word[k + 1], word[k + 2]);
            a == c && (a - b).abs() == 1 && a.signum() == b.signum()
        })
        .collect()
}

/// Third move realized on a braid closure: replaces `s_i s_j s_i` at `at`
/// by `s_j s_i s_j` and returns both closures.
pub fn braid_r3_pair(strands: usize, word: &[i32], at: usize) -> Result<(Diagram, Diagram), DiagramError> {
    if !braid_relation_sites(word).contains(&at) {
        return Err(DiagramError::NoMoveSite(format!("braid position {at}")));
    }
    let mut other = word.to_vec();
    let (a, b) = (word[at], word[at + 1]);
    other[at] = b;
    other[at + 1] = a;
    other[at + 2] = b;
    Ok((braid_closure(strands, word)?, braid_closure(strands, &other)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_pd, Orientation};

    const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

    #[test]
    fn kinks_change_writhe_by_one() {
        let t = parse_pd(TREFOIL).unwrap();
        let w = t.writhe(Orientation::Forward).unwrap();
        let mut seen = Vec::new();
        for kind in KinkKind::ALL {
            for e in t.edges() {
                let k = add_kink(&t, e, kind).unwrap();
                assert_eq!(k.crossing_count(), 4);
                assert!(k.is_knot());
                let dw = k.writhe(Orientation::Forward).unwrap() - w;
                assert_eq!(dw.abs(), 1);
                seen.push(dw);
            }
        }
        assert!(seen.contains(&1) && seen.contains(&-1));
        let u = add_kink(&Diagram::unknot(), EdgeId(1), KinkKind::default()).unwrap();
        assert_eq!(u.crossing_count(), 1);
    }

    #[test]
    fn clasps_add_two_crossings() {
        let t = parse_pd(TREFOIL).unwrap();
        let sites = clasp_sites(&t);
        assert!(!sites.is_empty());
        for (f, i, j) in sites {
            for over in [false, true] {
                let c = add_clasp(&t, f, i, j, over).unwrap();
                assert_eq!(c.crossing_count(), 5);
                assert!(c.is_knot());
                assert_eq!(c.writhe(Orientation::Forward).unwrap(), t.writhe(Orientation::Forward).unwrap());
                assert!(!c.is_ii_reduced());
            }
        }
        assert!(add_clasp(&t, 0, 0, 0, true).is_err());
    }

    #[test]
    fn braid_relation() {
        assert_eq!(braid_relation_sites(&[1, 2, 1, 1]), vec![0]);
        assert_eq!(braid_relation_sites(&[1, -2, 1]), Vec::<usize>::new());
        let (a, b) = braid_r3_pair(3, &[1, 2, 1, 1], 0).unwrap();
        assert_eq!(a.crossing_count(), b.crossing_count());
        assert!(a.is_knot() && b.is_knot());
        assert!(braid_r3_pair(3, &[1, 2, 2], 0).is_err());
    }
}
