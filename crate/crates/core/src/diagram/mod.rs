//! Planar diagrams of knots in PD notation.
//!
//! A crossing record lists the four incident edges counterclockwise, starting
//! at the incoming under-strand. Positions 0 and 2 therefore carry the
//! under-strand and positions 1 and 3 the over-strand. Every derived quantity
//! in this module (faces, edge signs, Gauss codes) depends only on that
//! cyclic order and the under/over split; orientation only matters for the
//! writhe, which is computed by traversing the strand.

mod builder;
mod gauss;
pub mod moves;

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

pub use builder::{braid_closure, PdBuilder};
pub use gauss::{GaussCode, Passage};

use crate::error::DiagramError;
use crate::unionfind::UnionFind;

/// Label of an arc of the universe between two crossings. Labels are dense
/// `1..=2c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeId(pub u32);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One crossing: incident edges counterclockwise from the incoming under-strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrossingRecord {
    pub incident: [EdgeId; 4],
}

impl CrossingRecord {
    pub fn new(labels: [u32; 4]) -> Self {
        CrossingRecord { incident: labels.map(EdgeId) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeSign {
    /// Over-strand at both endpoints.
    Positive,
    /// Under-strand at both endpoints.
    Negative,
    Neutral,
}

/// A position at a crossing, encoded as `4 * crossing + position`.
pub type Slot = usize;

#[inline]
pub fn slot(crossing: usize, pos: usize) -> Slot {
    4 * crossing + (pos % 4)
}

#[inline]
pub fn slot_crossing(s: Slot) -> usize {
    s / 4
}

#[inline]
pub fn slot_pos(s: Slot) -> usize {
    s % 4
}

/// Slot at the same crossing rotated by `k` quarter turns counterclockwise.
#[inline]
pub fn rotate_slot(s: Slot, k: usize) -> Slot {
    4 * (s / 4) + (s % 4 + k) % 4
}

/// One side of a face: the edge leaving `exit` and arriving at `arrival`,
/// traversed with the face on the left.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FaceSide {
    pub edge: EdgeId,
    pub exit: Slot,
    pub arrival: Slot,
}

/// A region of the complement of the universe; sides are listed
/// counterclockwise around the region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub sides: Vec<FaceSide>,
}

impl Face {
    /// Corner occupied at the far end of each side, as `4 * crossing + k`
    /// where corner `k` lies between positions `k` and `k + 1`.
    pub fn corners(&self) -> impl Iterator<Item = usize> + '_ {
        self.sides.iter().map(|s| rotate_slot(s.arrival, 3))
    }
}

/// Two-coloring of the faces of an alternating diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceColoring {
    /// Indexed like [`Diagram::faces`]. Shaded faces are those whose corners
    /// are B-corners; the state circles of the all-A state run around them.
    pub shaded: Vec<bool>,
}

impl FaceColoring {
    pub fn shaded_count(&self) -> usize {
        self.shaded.iter().filter(|s| **s).count()
    }

    pub fn unshaded_count(&self) -> usize {
        self.shaded.len() - self.shaded_count()
    }
}

/// Direction in which a knot is traversed when signing crossings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Orientation {
    /// The direction given by the PD convention at crossing 1.
    #[default]
    Forward,
    Reverse,
}

/// A validated knot or link diagram. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    crossings: Vec<CrossingRecord>,
    /// For each slot, the other slot carrying the same edge.
    partner: Vec<Slot>,
}

impl Diagram {
    /// The crossingless unknot. PD text cannot express it.
    pub fn unknot() -> Self {
        Diagram { crossings: Vec::new(), partner: Vec::new() }
    }

    pub fn from_crossings(records: Vec<CrossingRecord>) -> Result<Self, DiagramError> {
        if records.is_empty() {
            return Err(DiagramError::Empty);
        }
        let c = records.len();
        let n_edges = 2 * c as u32;
        let mut seen: BTreeMap<u32, Vec<Slot>> = BTreeMap::new();
        for (x, rec) in records.iter().enumerate() {
            for (p, e) in rec.incident.iter().enumerate() {
                seen.entry(e.0).or_default().push(slot(x, p));
            }
        }
        for (&label, slots) in &seen {
            if slots.len() != 2 {
                return Err(DiagramError::EdgeMultiplicity { label, count: slots.len() });
            }
        }
        if let Some((&label, _)) = seen.iter().find(|(l, _)| **l == 0 || **l > n_edges) {
            return Err(DiagramError::SparseLabels { expected: n_edges, found: label });
        }
        let mut partner = vec![0; 4 * c];
        for slots in seen.values() {
            partner[slots[0]] = slots[1];
            partner[slots[1]] = slots[0];
        }
        let mut uf = UnionFind::new(c);
        for s in 0..4 * c {
            uf.union(slot_crossing(s), slot_crossing(partner[s]));
        }
        if uf.count() != 1 {
            return Err(DiagramError::Disconnected);
        }
        let d = Diagram { crossings: records, partner };
        let faces = d.face_orbits().len();
        if faces != c + 2 {
            return Err(DiagramError::NonPlanar { crossings: c, faces, expected: c + 2 });
        }
        Ok(d)
    }

    pub fn from_labels(tuples: &[[u32; 4]]) -> Result<Self, DiagramError> {
        Self::from_crossings(tuples.iter().map(|t| CrossingRecord::new(*t)).collect())
    }

    pub fn crossings(&self) -> &[CrossingRecord] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn is_unknot_constant(&self) -> bool {
        self.crossings.is_empty()
    }

    #[inline]
    pub fn label(&self, s: Slot) -> EdgeId {
        self.crossings[slot_crossing(s)].incident[slot_pos(s)]
    }

    #[inline]
    pub fn partner(&self, s: Slot) -> Slot {
        self.partner[s]
    }

    /// The two slots carrying `e`.
    pub fn edge_slots(&self, e: EdgeId) -> Result<[Slot; 2], DiagramError> {
        let mut found = Vec::with_capacity(2);
        for s in 0..self.partner.len() {
            if self.label(s) == e {
                found.push(s);
            }
        }
        match found.as_slice() {
            [a, b] => Ok([*a, *b]),
            _ => Err(DiagramError::UnknownEdge(e.0)),
        }
    }

    /// All edge labels in ascending order.
    pub fn edges(&self) -> Vec<EdgeId> {
        let mut v: Vec<EdgeId> = (0..self.partner.len()).map(|s| self.label(s)).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Strand components, each as the cyclic list of slots at which the
    /// traversal arrives at a crossing.
    pub fn components(&self) -> Vec<Vec<Slot>> {
        let n = self.partner.len();
        let mut visited = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut s = start;
            loop {
                visited[s] = true;
                let exit = rotate_slot(s, 2);
                visited[exit] = true;
                comp.push(s);
                s = self.partner[exit];
                if s == start {
                    break;
                }
            }
            comps.push(comp);
        }
        comps
    }

    pub fn component_count(&self) -> usize {
        if self.crossings.is_empty() {
            1
        } else {
            self.components().len()
        }
    }

    pub fn is_knot(&self) -> bool {
        self.component_count() == 1
    }

    /// Knot traversal starting by arriving at position 0 of the first crossing.
    fn knot_walk(&self) -> Result<Vec<Slot>, DiagramError> {
        let comps = self.components();
        if comps.len() != 1 {
            return Err(DiagramError::NotAKnot(comps.len()));
        }
        Ok(comps.into_iter().next().unwrap_or_default())
    }

    /// Slots visited as the face on the left is followed: from an arrival at
    /// position `q`, leave through position `q - 1`.
    fn face_orbits(&self) -> Vec<Vec<Slot>> {
        let n = self.partner.len();
        let mut visited = vec![false; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut arrival = start;
            loop {
                visited[arrival] = true;
                orbit.push(arrival);
                let exit = rotate_slot(arrival, 3);
                arrival = self.partner[exit];
                if arrival == start {
                    break;
                }
            }
            orbits.push(orbit);
        }
        orbits
    }

    /// Faces of the universe. The crossingless unknot has two faces with no sides.
    pub fn faces(&self) -> Vec<Face> {
        if self.crossings.is_empty() {
            return vec![Face { sides: vec![] }, Face { sides: vec![] }];
        }
        self.face_orbits()
            .into_iter()
            .map(|orbit| {
                // orbit[i] is an arrival; the side leading to orbit[i+1] leaves
                // from rotate(orbit[i], 3).
                let k = orbit.len();
                let sides = (0..k)
                    .map(|i| {
                        let exit = rotate_slot(orbit[i], 3);
                        FaceSide { edge: self.label(exit), exit, arrival: orbit[(i + 1) % k] }
                    })
                    .collect();
                Face { sides }
            })
            .collect()
    }

    /// Face index of every corner `4 * crossing + k`.
    pub fn corner_faces(&self, faces: &[Face]) -> Vec<usize> {
        let mut out = vec![usize::MAX; self.partner.len()];
        for (fi, f) in faces.iter().enumerate() {
            for corner in f.corners() {
                out[corner] = fi;
            }
        }
        out
    }

    /// For each edge (indexed by `label - 1`) the two faces it separates:
    /// `(left of exit→arrival as stored in the face, other)`.
    pub fn edge_faces(&self, faces: &[Face]) -> BTreeMap<EdgeId, Vec<usize>> {
        let mut out: BTreeMap<EdgeId, Vec<usize>> = BTreeMap::new();
        for (fi, f) in faces.iter().enumerate() {
            for side in &f.sides {
                out.entry(side.edge).or_default().push(fi);
            }
        }
        out
    }

    pub fn edge_sign(&self, e: EdgeId) -> Result<EdgeSign, DiagramError> {
        let [a, b] = self.edge_slots(e)?;
        Ok(self.sign_of_slots(a, b))
    }

    fn sign_of_slots(&self, a: Slot, b: Slot) -> EdgeSign {
        match (slot_pos(a) % 2, slot_pos(b) % 2) {
            (1, 1) => EdgeSign::Positive,
            (0, 0) => EdgeSign::Negative,
            _ => EdgeSign::Neutral,
        }
    }

    pub fn edge_signs(&self) -> BTreeMap<EdgeId, EdgeSign> {
        let mut out = BTreeMap::new();
        for s in 0..self.partner.len() {
            let p = self.partner[s];
            if s < p {
                out.insert(self.label(s), self.sign_of_slots(s, p));
            }
        }
        out
    }

    pub fn o_length(&self) -> usize {
        self.edge_signs().values().filter(|s| **s == EdgeSign::Positive).count()
    }

    pub fn u_length(&self) -> usize {
        self.edge_signs().values().filter(|s| **s == EdgeSign::Negative).count()
    }

    /// Faces whose boundary carries different numbers of positive and
    /// negative edges.
    pub fn unbalanced_faces(&self) -> Vec<usize> {
        let signs = self.edge_signs();
        let count = |f: &Face, want: EdgeSign| f.sides.iter().filter(|s| signs[&s.edge] == want).count();
        self.faces()
            .iter()
            .enumerate()
            .filter(|(_, f)| count(f, EdgeSign::Positive) != count(f, EdgeSign::Negative))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn to_gauss(&self) -> Result<GaussCode, DiagramError> {
        if self.crossings.is_empty() {
            return Ok(GaussCode::default());
        }
        let walk = self.knot_walk()?;
        Ok(GaussCode::new(
            walk.iter()
                .map(|s| {
                    let passage = if slot_pos(*s) % 2 == 1 { Passage::Over } else { Passage::Under };
                    (slot_crossing(*s) as u32 + 1, passage)
                })
                .collect(),
        ))
    }

    /// Per-crossing signs by the right-hand rule, in crossing order.
    pub fn crossing_signs(&self, orientation: Orientation) -> Result<Vec<i8>, DiagramError> {
        let c = self.crossings.len();
        if c == 0 {
            return Ok(Vec::new());
        }
        let walk = self.knot_walk()?;
        let mut under_in = vec![usize::MAX; c];
        let mut over_in = vec![usize::MAX; c];
        for s in walk {
            let (x, p) = (slot_crossing(s), slot_pos(s));
            let p = match orientation {
                Orientation::Forward => p,
                Orientation::Reverse => (p + 2) % 4,
            };
            if p % 2 == 0 {
                under_in[x] = p;
            } else {
                over_in[x] = p;
            }
        }
        Ok((0..c).map(|x| if over_in[x] == (under_in[x] + 3) % 4 { 1 } else { -1 }).collect())
    }

    pub fn writhe(&self, orientation: Orientation) -> Result<i64, DiagramError> {
        Ok(self.crossing_signs(orientation)?.iter().map(|s| *s as i64).sum())
    }

    /// `b(D) = c(D) - o(D)`; zero for the crossingless unknot.
    pub fn bridge_number(&self) -> usize {
        self.crossing_count() - self.o_length()
    }

    pub fn is_alternating(&self) -> bool {
        self.o_length() == 0
    }

    /// No crossing has the same face at two opposite corners.
    pub fn is_reduced(&self) -> bool {
        let faces = self.faces();
        let cf = self.corner_faces(&faces);
        (0..self.crossings.len()).all(|x| cf[slot(x, 0)] != cf[slot(x, 2)] && cf[slot(x, 1)] != cf[slot(x, 3)])
    }

    /// Crossings with the same face at opposite corners.
    pub fn nugatory_crossings(&self) -> Vec<usize> {
        let faces = self.faces();
        let cf = self.corner_faces(&faces);
        (0..self.crossings.len())
            .filter(|x| cf[slot(*x, 0)] == cf[slot(*x, 2)] || cf[slot(*x, 1)] == cf[slot(*x, 3)])
            .collect()
    }

    /// No bigon face whose boundary strand is over (or under) at both of its
    /// crossings, i.e. no bigon carrying a signed edge.
    pub fn is_ii_reduced(&self) -> bool {
        let signs = self.edge_signs();
        self.faces().iter().all(|f| f.sides.len() != 2 || f.sides.iter().all(|s| signs[&s.edge] == EdgeSign::Neutral))
    }

    pub fn is_totally_reduced(&self) -> bool {
        self.is_reduced() && self.is_ii_reduced()
    }

    /// Checkerboard coloring of an alternating diagram.
    pub fn checkerboard(&self) -> Result<FaceColoring, DiagramError> {
        if !self.is_alternating() {
            return Err(DiagramError::NotAlternating);
        }
        let faces = self.faces();
        if self.crossings.is_empty() {
            return Ok(FaceColoring { shaded: vec![true, false] });
        }
        let ef = self.edge_faces(&faces);
        let mut adj = vec![Vec::new(); faces.len()];
        for fs in ef.values() {
            adj[fs[0]].push(fs[1]);
            adj[fs[1]].push(fs[0]);
        }
        let mut color: Vec<Option<bool>> = vec![None; faces.len()];
        // The face holding corner 0 of crossing 0 is a B-corner face.
        let cf = self.corner_faces(&faces);
        let root = cf[slot(0, 0)];
        color[root] = Some(true);
        let mut queue = VecDeque::from([root]);
        while let Some(f) = queue.pop_front() {
            let cur = color[f].unwrap_or(true);
            for &g in &adj[f] {
                match color[g] {
                    None => {
                        color[g] = Some(!cur);
                        queue.push_back(g);
                    }
                    Some(c) if c == cur => return Err(DiagramError::NotAlternating),
                    Some(_) => {}
                }
            }
        }
        Ok(FaceColoring { shaded: color.into_iter().map(|c| c.unwrap_or(false)).collect() })
    }

    /// Mirror image: every crossing switched.
    pub fn mirror(&self) -> Diagram {
        if self.crossings.is_empty() {
            return self.clone();
        }
        let records = self
            .crossings
            .iter()
            .map(|r| {
                let [a, b, c, d] = r.incident;
                CrossingRecord { incident: [b, c, d, a] }
            })
            .collect();
        let raw = Diagram { crossings: records, partner: self.partner_after_rotation(1) };
        raw.canonical()
    }

    fn partner_after_rotation(&self, k: usize) -> Vec<Slot> {
        // Rotating every record left by k moves position p to p - k.
        let n = self.partner.len();
        let mut out = vec![0; n];
        for s in 0..n {
            let ns = rotate_slot(s, 4 - k);
            out[ns] = rotate_slot(self.partner[s], 4 - k);
        }
        out
    }

    /// Relabels edges `1..=2c` along the strand traversal and rotates each
    /// record so that position 0 is the incoming under-strand. Links are
    /// traversed component by component.
    pub fn canonical(&self) -> Diagram {
        if self.crossings.is_empty() {
            return self.clone();
        }
        let c = self.crossings.len();
        let mut new_label = vec![0u32; 4 * c];
        let mut rotate = vec![false; c];
        let mut next = 1u32;
        let mut visited = vec![false; 4 * c];
        let mut order: Vec<Slot> = Vec::new();
        // Start every component at an under position so position 0 stays incoming
        // whenever possible.
        let starts: Vec<Slot> = (0..4 * c).filter(|s| slot_pos(*s) % 2 == 0).chain(0..4 * c).collect();
        for start in starts {
            if visited[start] {
                continue;
            }
            let mut s = start;
            loop {
                visited[s] = true;
                let exit = rotate_slot(s, 2);
                visited[exit] = true;
                order.push(s);
                s = self.partner[exit];
                if s == start {
                    break;
                }
            }
        }
        for &arr in &order {
            // The edge arriving at `arr` gets the next label.
            let prev = self.partner[arr];
            new_label[arr] = next;
            new_label[prev] = next;
            next += 1;
            if slot_pos(arr) == 2 {
                rotate[slot_crossing(arr)] = true;
            }
        }
        let records = (0..c)
            .map(|x| {
                let mut labels = [0u32; 4];
                for (p, l) in labels.iter_mut().enumerate() {
                    *l = new_label[slot(x, p)];
                }
                if rotate[x] {
                    labels.rotate_left(2);
                }
                CrossingRecord::new(labels)
            })
            .collect::<Vec<_>>();
        Diagram::from_crossings(records).expect("relabeling preserves validity")
    }

    /// PD text, e.g. `X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)`. Empty for the unknot.
    pub fn to_pd_string(&self) -> String {
        self.crossings
            .iter()
            .map(|r| {
                let [a, b, c, d] = r.incident;
                format!("X({a},{b},{c},{d})")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_pd_string())
    }
}

/// Parses whitespace-separated `X(a,b,c,d)` tokens.
pub fn parse_pd(text: &str) -> Result<Diagram, DiagramError> {
    let mut records = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix("X(")
            .or_else(|| rest.strip_prefix("X["))
            .ok_or_else(|| DiagramError::Malformed(rest.chars().take(16).collect()))?;
        let close = body.find([')', ']']).ok_or_else(|| DiagramError::Malformed(rest.chars().take(16).collect()))?;
        let nums: Result<Vec<u32>, _> = body[..close].split(',').map(|t| t.trim().parse::<u32>()).collect();
        let nums = nums.map_err(|_| DiagramError::Malformed(body[..close].to_string()))?;
        let tuple: [u32; 4] = nums.try_into().map_err(|_| DiagramError::Malformed(body[..close].to_string()))?;
        records.push(CrossingRecord::new(tuple));
        rest = body[close + 1..].trim_start_matches([' ', '\t', ',']).trim_start();
    }
    Diagram::from_crossings(records)
}

/// Splices two knot diagrams along neutral edges, keeping every new edge
/// neutral. The result is canonical.
pub fn connected_sum(d1: &Diagram, e1: EdgeId, d2: &Diagram, e2: EdgeId) -> Result<Diagram, DiagramError> {
    if d2.is_unknot_constant() {
        return Ok(d1.clone());
    }
    if d1.is_unknot_constant() {
        return Ok(d2.clone());
    }
    for (d, e) in [(d1, e1), (d2, e2)] {
        if d.edge_sign(e)? != EdgeSign::Neutral {
            return Err(DiagramError::SignedEdge(e.0));
        }
    }
    let arrival_of = |d: &Diagram, e: EdgeId| -> Result<(Slot, Slot), DiagramError> {
        let walk = d.knot_walk()?;
        let [a, b] = d.edge_slots(e)?;
        let arr = if walk.contains(&a) { a } else { b };
        Ok((d.partner(arr), arr))
    };
    let (x1, a1) = arrival_of(d1, e1)?;
    let (x2, a2) = arrival_of(d2, e2)?;
    let off = d1.edge_count() as u32;
    let c1 = d1.crossing_count();

    let mut labels: Vec<[u32; 4]> = d1.crossings.iter().map(|r| r.incident.map(|e| e.0)).collect();
    labels.extend(d2.crossings.iter().map(|r| r.incident.map(|e| e.0 + off)));
    let mut set = |s: Slot, l: u32| labels[slot_crossing(s)][slot_pos(s)] = l;
    let (x2, a2) = (x2 + 4 * c1, a2 + 4 * c1);
    // Both new edges stay neutral only if each joins an over end to an under
    // end; when the splice edges leave crossings of different type, the
    // second summand is traversed backwards.
    let (join_x1, join_a1) = if slot_pos(x1) % 2 == slot_pos(x2) % 2 { (a2, x2) } else { (x2, a2) };
    set(x1, e1.0);
    set(join_x1, e1.0);
    set(join_a1, e2.0 + off);
    set(a1, e2.0 + off);
    let d = Diagram::from_labels(&labels)?;
    Ok(d.canonical())
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const TREFOIL_LEFT: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
    pub(crate) const TREFOIL_RIGHT: &str = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";
    const FIGURE_EIGHT: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
    const KNOT_8_20: &str =
        "X(1,7,2,6) X(4,13,5,14) X(5,9,6,8) X(7,3,8,2) X(10,15,11,16) X(12,9,13,10) X(14,3,15,4) X(16,11,1,12)";
    /// Two-crossing unknot with a bigon whose strand is under at both ends.
    pub(crate) const CLASP_UNKNOT: &str = "X(1,4,2,1) X(3,3,2,4)";
    pub(crate) const KINK: &str = "X(1,2,2,1)";

    #[test]
    fn parses_trefoil() {
        let d = parse_pd(TREFOIL_LEFT).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.faces().len(), 5);
        assert!(d.is_knot());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(parse_pd(""), Err(DiagramError::Empty));
        assert!(matches!(parse_pd("X(1,1,1,2)"), Err(DiagramError::EdgeMultiplicity { label: 1, count: 3 })));
        assert!(matches!(parse_pd("X(1,2,3)"), Err(DiagramError::Malformed(_))));
        assert!(matches!(parse_pd("Y(1,2,3,4)"), Err(DiagramError::Malformed(_))));
        assert!(matches!(parse_pd("X(1,5,2,5) X(3,6,4,6)"), Err(DiagramError::EdgeMultiplicity { .. })));
        // Two separate kinks share no edge.
        assert_eq!(parse_pd("X(1,2,2,1) X(3,4,4,3)"), Err(DiagramError::Disconnected));
        // Each label twice but the rotation system is not planar.
        assert!(matches!(parse_pd("X(1,2,1,2)"), Err(DiagramError::NonPlanar { .. })));
        assert!(matches!(parse_pd("X(1,2,2,7)"), Err(DiagramError::EdgeMultiplicity { .. })));
    }

    #[test]
    fn face_invariants() {
        for text in [TREFOIL_LEFT, FIGURE_EIGHT, KNOT_8_20, CLASP_UNKNOT, KINK] {
            let d = parse_pd(text).unwrap();
            let faces = d.faces();
            assert_eq!(faces.len(), d.crossing_count() + 2);
            let signs = d.edge_signs();
            let mut seen = BTreeMap::new();
            for f in &faces {
                let pos = f.sides.iter().filter(|s| signs[&s.edge] == EdgeSign::Positive).count();
                let neg = f.sides.iter().filter(|s| signs[&s.edge] == EdgeSign::Negative).count();
                assert_eq!(pos, neg, "{text}");
                for s in &f.sides {
                    *seen.entry(s.edge).or_insert(0) += 1;
                }
            }
            assert!(seen.values().all(|n| *n == 2));
        }
        let d20 = parse_pd(KNOT_8_20).unwrap();
        assert_eq!(d20.faces().len(), 10);
    }

    #[test]
    fn gauss_codes() {
        let d = parse_pd(TREFOIL_LEFT).unwrap();
        let g = d.to_gauss().unwrap();
        assert_eq!(g.to_string(), "U1 O3 U2 O1 U3 O2");
        assert!(g.is_alternating());
        assert_eq!(g.o_length(), 0);
        let k = parse_pd(KINK).unwrap().to_gauss().unwrap();
        assert_eq!(k.len(), 2);
        assert_eq!(k.o_length(), 0);
    }

    #[test]
    fn signs_and_lengths() {
        let d = parse_pd(TREFOIL_LEFT).unwrap();
        assert!(d.edge_signs().values().all(|s| *s == EdgeSign::Neutral));
        assert_eq!(d.o_length(), 0);
        let d20 = parse_pd(KNOT_8_20).unwrap();
        assert_eq!(d20.o_length(), d20.u_length());
        assert!(d20.o_length() > 0);
        assert_eq!(d20.o_length(), d20.to_gauss().unwrap().o_length());
    }

    #[test]
    fn writhe_and_mirror() {
        let left = parse_pd(TREFOIL_LEFT).unwrap();
        let right = parse_pd(TREFOIL_RIGHT).unwrap();
        assert_eq!(left.writhe(Orientation::Forward).unwrap(), -3);
        assert_eq!(right.writhe(Orientation::Forward).unwrap(), 3);
        assert_eq!(right.writhe(Orientation::Reverse).unwrap(), 3);
        assert_eq!(left.mirror().writhe(Orientation::Forward).unwrap(), 3);
        let d20 = parse_pd(KNOT_8_20).unwrap();
        assert_eq!(d20.mirror().writhe(Orientation::Forward).unwrap(), -d20.writhe(Orientation::Forward).unwrap());
        let kink = parse_pd(KINK).unwrap();
        assert_eq!(kink.writhe(Orientation::Forward).unwrap().abs(), 1);
        assert_eq!(kink.mirror().writhe(Orientation::Forward).unwrap(), -kink.writhe(Orientation::Forward).unwrap());
    }

    #[test]
    fn bridge_number_convention() {
        assert_eq!(parse_pd(TREFOIL_LEFT).unwrap().bridge_number(), 3);
        assert_eq!(Diagram::unknot().bridge_number(), 0);
        let clasp = parse_pd(CLASP_UNKNOT).unwrap();
        assert_eq!(clasp.bridge_number() + clasp.o_length(), 2);
        assert_eq!(clasp.bridge_number(), clasp.to_gauss().unwrap().overpass_count());
    }

    #[test]
    fn reducedness() {
        let t = parse_pd(TREFOIL_LEFT).unwrap();
        assert!(t.is_alternating() && t.is_reduced() && t.is_ii_reduced() && t.is_totally_reduced());
        let kinked = moves::add_kink(&t, EdgeId(1), moves::KinkKind::default()).unwrap();
        assert!(!kinked.is_reduced());
        assert_eq!(kinked.nugatory_crossings().len(), 1);
        let clasp = parse_pd(CLASP_UNKNOT).unwrap();
        assert_eq!(clasp.o_length(), 1);
        assert!(!clasp.is_ii_reduced());
        assert!(!clasp.is_totally_reduced());
    }

    #[test]
    fn canonical_preserves_structure() {
        let d = parse_pd(KNOT_8_20).unwrap();
        let c = d.canonical();
        assert_eq!(c.o_length(), d.o_length());
        assert_eq!(c.writhe(Orientation::Forward).unwrap(), d.writhe(Orientation::Forward).unwrap());
        assert_eq!(c.canonical(), c);
        assert_eq!(parse_pd(&c.to_pd_string()).unwrap(), c);
    }

    #[test]
    fn connected_sums() {
        let t = parse_pd(TREFOIL_LEFT).unwrap();
        let s = connected_sum(&t, EdgeId(1), &t, EdgeId(1)).unwrap();
        assert_eq!(s.crossing_count(), 6);
        assert_eq!(s.o_length(), 0);
        assert!(s.is_knot());
        let s2 = connected_sum(&t, EdgeId(1), &t, EdgeId(2)).unwrap();
        assert_eq!(s2.o_length(), 0);
        assert!(s2.is_knot());
        assert_eq!(connected_sum(&t, EdgeId(1), &Diagram::unknot(), EdgeId(1)).unwrap(), t);
        let d20 = parse_pd(KNOT_8_20).unwrap();
        let signed = *d20.edge_signs().iter().find(|(_, s)| **s != EdgeSign::Neutral).unwrap().0;
        assert_eq!(connected_sum(&d20, signed, &t, EdgeId(1)), Err(DiagramError::SignedEdge(signed.0)));
    }

    #[test]
    fn checkerboard_coloring() {
        let t = parse_pd(TREFOIL_LEFT).unwrap();
        let col = t.checkerboard().unwrap();
        assert_eq!(col.shaded_count() + col.unshaded_count(), 5);
        let faces = t.faces();
        let ef = t.edge_faces(&faces);
        for fs in ef.values() {
            assert_ne!(col.shaded[fs[0]], col.shaded[fs[1]]);
        }
        assert!(parse_pd(FIGURE_EIGHT).unwrap().checkerboard().is_ok());
        assert_eq!(parse_pd(KNOT_8_20).unwrap().checkerboard(), Err(DiagramError::NotAlternating));
    }
}
