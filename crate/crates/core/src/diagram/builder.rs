use std::collections::BTreeMap;

use super::{Diagram, DiagramError};
use crate::unionfind::UnionFind;

/// Assembles a diagram from crossings whose arcs are glued afterwards.
///
/// Labels handed out by [`PdBuilder::fresh`] are provisional; [`PdBuilder::join`]
/// identifies two of them, and arcs that touch no crossing simply pass their
/// identity through. `finish` relabels densely and canonicalizes.
#[derive(Clone, Debug, Default)]
pub struct PdBuilder {
    labels: UnionFind,
    records: Vec<[usize; 4]>,
}

impl PdBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn fresh(&mut self) -> usize {
        self.labels.push()
    }

    pub fn join(&mut self, a: usize, b: usize) {
        self.labels.union(a, b);
    }

    /// Adds a crossing with labels counterclockwise from the incoming under-strand.
    pub fn crossing(&mut self, labels: [usize; 4]) {
        self.records.push(labels);
    }

    pub fn crossing_count(&self) -> usize {
        self.records.len()
    }

    pub fn finish(mut self) -> Result<Diagram, DiagramError> {
        let mut dense: BTreeMap<usize, u32> = BTreeMap::new();
        let mut tuples = Vec::with_capacity(self.records.len());
        for rec in self.records.clone() {
            let mut t = [0u32; 4];
            for (i, l) in rec.iter().enumerate() {
                let root = self.labels.find(*l);
                let next = dense.len() as u32 + 1;
                t[i] = *dense.entry(root).or_insert(next);
            }
            tuples.push(t);
        }
        Ok(Diagram::from_labels(&tuples)?.canonical())
    }
}

/// Closure of a braid on `strands` strands. Letter `i` is the generator
/// twisting positions `i` and `i + 1` (1-based) positively, `-i` its inverse.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<Diagram, DiagramError> {
    if word.is_empty() {
        return Err(DiagramError::Empty);
    }
    let mut b = PdBuilder::new();
    let bottom: Vec<usize> = (0..strands).map(|_| b.fresh()).collect();
    let mut cur = bottom.clone();
    for &letter in word {
        let i = letter.unsigned_abs() as usize;
        if i == 0 || i >= strands {
            return Err(DiagramError::Malformed(format!("braid letter {letter} on {strands} strands")));
        }
        let (sw, se) = (cur[i - 1], cur[i]);
        let (nw, ne) = (b.fresh(), b.fresh());
        if letter > 0 {
            // Over-strand runs SW to NE.
            b.crossing([se, ne, nw, sw]);
        } else {
            b.crossing([sw, se, ne, nw]);
        }
        cur[i - 1] = nw;
        cur[i] = ne;
    }
    for (top, bot) in cur.iter().zip(&bottom) {
        b.join(*top, *bot);
    }
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Orientation;

    #[test]
    fn trefoil_from_braid() {
        let d = braid_closure(2, &[1, 1, 1]).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert!(d.is_knot());
        assert!(d.is_alternating());
        assert_eq!(d.writhe(Orientation::Forward).unwrap(), 3);
        let m = braid_closure(2, &[-1, -1, -1]).unwrap();
        assert_eq!(m.writhe(Orientation::Forward).unwrap(), -3);
    }

    #[test]
    fn figure_eight_from_braid() {
        let d = braid_closure(3, &[1, -2, 1, -2]).unwrap();
        assert!(d.is_knot());
        assert_eq!(d.writhe(Orientation::Forward).unwrap(), 0);
        assert!(d.is_alternating());
    }

    #[test]
    fn two_component_closure() {
        let d = braid_closure(2, &[1, 1]).unwrap();
        assert_eq!(d.component_count(), 2);
        assert!(d.writhe(Orientation::Forward).is_err());
    }

    #[test]
    fn bad_letters() {
        assert!(braid_closure(2, &[2]).is_err());
        assert!(braid_closure(2, &[]).is_err());
    }
}
