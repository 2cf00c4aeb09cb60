//! Kauffman bracket, Jones polynomial and extreme states.
//!
//! At a crossing the A-smoothing joins positions 0–1 and 2–3, the
//! B-smoothing joins 1–2 and 3–0. The bracket is
//! `sum over states of A^(a - b) * (-A^2 - A^-2)^(|S| - 1)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagram::{slot, slot_crossing, slot_pos, Diagram, Orientation, Slot};
use crate::error::BracketError;
use crate::polynomial::{normalize_to_jones, LaurentPoly, Variable};
use crate::unionfind::UnionFind;

/// Default crossing ceiling for exhaustive state enumeration.
pub const DEFAULT_ORACLE_LIMIT: usize = 24;
/// Coefficients of the skein evaluator are kept in `i128`; every coefficient
/// of a bracket on `c` crossings is bounded by `4^c`.
pub const SKEIN_LIMIT: usize = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Smoothing {
    A,
    B,
}

impl Smoothing {
    /// Slot pairs joined at one crossing, as positions.
    fn pairs(self) -> [(usize, usize); 2] {
        match self {
            Smoothing::A => [(0, 1), (2, 3)],
            Smoothing::B => [(1, 2), (3, 0)],
        }
    }

    /// Which of the two arcs of this smoothing contains position `p`.
    fn arc_of(self, p: usize) -> usize {
        match self {
            Smoothing::A => p / 2,
            Smoothing::B => {
                if p == 1 || p == 2 {
                    0
                } else {
                    1
                }
            }
        }
    }

    pub fn other(self) -> Smoothing {
        match self {
            Smoothing::A => Smoothing::B,
            Smoothing::B => Smoothing::A,
        }
    }
}

/// A smoothing choice at every crossing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct State {
    choices: Vec<Smoothing>,
}

impl State {
    pub fn uniform(c: usize, s: Smoothing) -> Self {
        State { choices: vec![s; c] }
    }

    /// Bit `x` of `mask` set means crossing `x` gets the B-smoothing.
    pub fn from_mask(c: usize, mask: u64) -> Self {
        State { choices: (0..c).map(|x| if mask >> x & 1 == 1 { Smoothing::B } else { Smoothing::A }).collect() }
    }

    pub fn choices(&self) -> &[Smoothing] {
        &self.choices
    }

    pub fn a_count(&self) -> usize {
        self.choices.iter().filter(|s| **s == Smoothing::A).count()
    }

    pub fn b_count(&self) -> usize {
        self.choices.len() - self.a_count()
    }
}

/// Number of circles after smoothing every crossing as `state` says.
pub fn resolve(d: &Diagram, state: &State) -> usize {
    let c = d.crossing_count();
    if c == 0 {
        return 1;
    }
    assert_eq!(state.choices.len(), c, "state must assign every crossing");
    let mut uf = UnionFind::new(2 * c);
    for (x, s) in state.choices.iter().enumerate() {
        for (p, q) in s.pairs() {
            uf.union(edge_index(d, slot(x, p)), edge_index(d, slot(x, q)));
        }
    }
    uf.count()
}

#[inline]
fn edge_index(d: &Diagram, s: Slot) -> usize {
    d.label(s).0 as usize - 1
}

/// Per-crossing smoothing arcs as pairs of edge indices, packed for the
/// enumeration loop.
struct ArcTable {
    n_edges: usize,
    a: Vec<[(u8, u8); 2]>,
    b: Vec<[(u8, u8); 2]>,
}

impl ArcTable {
    fn new(d: &Diagram) -> Self {
        let c = d.crossing_count();
        let arcs = |s: Smoothing| -> Vec<[(u8, u8); 2]> {
            (0..c)
                .map(|x| s.pairs().map(|(p, q)| (edge_index(d, slot(x, p)) as u8, edge_index(d, slot(x, q)) as u8)))
                .collect()
        };
        ArcTable { n_edges: 2 * c, a: arcs(Smoothing::A), b: arcs(Smoothing::B) }
    }

    fn loops(&self, mask: u64) -> usize {
        let mut parent = [0u8; 128];
        for (i, p) in parent.iter_mut().enumerate().take(self.n_edges) {
            *p = i as u8;
        }
        fn find(parent: &mut [u8; 128], mut x: u8) -> u8 {
            while parent[x as usize] != x {
                let g = parent[parent[x as usize] as usize];
                parent[x as usize] = g;
                x = g;
            }
            x
        }
        let mut comps = self.n_edges;
        for x in 0..self.a.len() {
            let arcs = if mask >> x & 1 == 1 { &self.b[x] } else { &self.a[x] };
            for &(u, v) in arcs {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru != rv {
                    parent[ru as usize] = rv;
                    comps -= 1;
                }
            }
        }
        comps
    }
}

fn delta_powers(n: usize) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::one(Variable::A)];
    for k in 1..n {
        out.push(&out[k - 1] * &LaurentPoly::loop_factor());
    }
    out
}

/// Exhaustive state sum over all `2^c` states.
pub fn bracket_oracle(d: &Diagram) -> Result<LaurentPoly, BracketError> {
    bracket_oracle_with_limit(d, DEFAULT_ORACLE_LIMIT)
}

pub fn bracket_oracle_with_limit(d: &Diagram, limit: usize) -> Result<LaurentPoly, BracketError> {
    let c = d.crossing_count();
    if c > limit.min(63) {
        return Err(BracketError::LimitExceeded { crossings: c, limit: limit.min(63) });
    }
    if c == 0 {
        return Ok(LaurentPoly::one(Variable::A));
    }
    let table = ArcTable::new(d);
    // counts[b * width + loops]
    let width = c + 2;
    let total: u64 = 1 << c;
    let chunk_bits = c.min(12);
    let chunks = total >> chunk_bits;
    let counts = (0..chunks)
        .into_par_iter()
        .fold(
            || vec![0u64; (c + 1) * width],
            |mut acc, ch| {
                let base = ch << chunk_bits;
                for mask in base..base + (1u64 << chunk_bits) {
                    let b = mask.count_ones() as usize;
                    acc[b * width + table.loops(mask)] += 1;
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; (c + 1) * width],
            |mut x, y| {
                x.iter_mut().zip(y).for_each(|(a, b)| *a += b);
                x
            },
        );
    let deltas = delta_powers(width);
    let mut out = LaurentPoly::zero(Variable::A);
    for b in 0..=c {
        for loops in 1..width {
            let n = counts[b * width + loops];
            if n == 0 {
                continue;
            }
            let a = c - b;
            let term = deltas[loops - 1].mono_mul(a as i64 - b as i64).scale(&BigInt::from(n));
            out = &out + &term;
        }
    }
    Ok(out)
}

/// Dense `i128` polynomial in `A` centered at `offset`.
#[derive(Clone)]
struct DensePoly {
    coeffs: Vec<i128>,
}

impl DensePoly {
    fn add_shifted(&mut self, src: &DensePoly, shift: i64, loops: usize) {
        let mut cur = std::borrow::Cow::Borrowed(&src.coeffs);
        for _ in 0..loops {
            let mut next = vec![0i128; cur.len()];
            for (i, v) in cur.iter().enumerate() {
                if *v != 0 {
                    next[i + 2] -= v;
                    next[i - 2] -= v;
                }
            }
            cur = std::borrow::Cow::Owned(next);
        }
        for (i, v) in cur.iter().enumerate() {
            if *v != 0 {
                let j = (i as i64 + shift) as usize;
                self.coeffs[j] += v;
            }
        }
    }
}

/// Bracket by smoothing crossings one at a time along a frontier.
///
/// Crossings are absorbed in an order that greedily maximizes the number of
/// strands closed off at each step (lowest index on ties). After each step
/// the partial result depends only on how the loose strand ends are paired
/// up, so partial sums with the same pairing are merged; in a planar diagram
/// these pairings are noncrossing and stay few.
pub fn bracket_skein(d: &Diagram) -> Result<LaurentPoly, BracketError> {
    let c = d.crossing_count();
    if c == 0 {
        return Ok(LaurentPoly::one(Variable::A));
    }
    if c > SKEIN_LIMIT {
        return Err(BracketError::LimitExceeded { crossings: c, limit: SKEIN_LIMIT });
    }
    let offset = 3 * c + 4;
    let len = 2 * offset + 1;
    let n_slots = 4 * c;
    let mut processed = vec![false; c];
    let mut frontier: Vec<Slot> = Vec::new();
    let mut states: HashMap<Vec<u16>, DensePoly> = HashMap::new();
    let mut unit = DensePoly { coeffs: vec![0; len] };
    unit.coeffs[offset] = 1;
    states.insert(Vec::new(), unit);
    let mut mate = vec![usize::MAX; n_slots];

    for step in 0..c {
        let last = step + 1 == c;
        let x = (0..c)
            .filter(|x| !processed[*x])
            .max_by_key(|x| {
                let closed = (0..4).filter(|p| processed[slot_crossing(d.partner(slot(*x, *p)))]).count();
                (closed, std::cmp::Reverse(*x))
            })
            .expect("an unprocessed crossing remains");
        processed[x] = true;
        let new_frontier: Vec<Slot> = {
            let mut v: Vec<Slot> = frontier.iter().copied().filter(|s| slot_crossing(d.partner(*s)) != x).collect();
            v.extend((0..4).map(|p| slot(x, p)).filter(|s| !processed[slot_crossing(d.partner(*s))]));
            v.sort_unstable();
            v
        };
        // Edges to glue: both ends now processed, at least one end at x.
        let glue: Vec<(Slot, Slot)> = (0..4)
            .map(|p| slot(x, p))
            .filter_map(|s| {
                let q = d.partner(s);
                let y = slot_crossing(q);
                if (y == x && s < q) || (y != x && processed[y]) {
                    Some((s, q))
                } else {
                    None
                }
            })
            .collect();

        let mut next: HashMap<Vec<u16>, DensePoly> = HashMap::new();
        for (key, poly) in &states {
            for (sm, shift) in [(Smoothing::A, 1i64), (Smoothing::B, -1i64)] {
                for (i, &f) in frontier.iter().enumerate() {
                    mate[f] = frontier[key[i] as usize];
                }
                for (p, q) in sm.pairs() {
                    mate[slot(x, p)] = slot(x, q);
                    mate[slot(x, q)] = slot(x, p);
                }
                let mut loops = 0usize;
                for &(s, q) in &glue {
                    let (a, b) = (mate[s], mate[q]);
                    if a == q {
                        loops += 1;
                    } else {
                        mate[a] = b;
                        mate[b] = a;
                    }
                }
                let new_key: Vec<u16> = new_frontier
                    .iter()
                    .map(|f| new_frontier.binary_search(&mate[*f]).expect("mate lies on the frontier") as u16)
                    .collect();
                let loops = if last { loops.checked_sub(1).expect("final step closes a loop") } else { loops };
                next.entry(new_key)
                    .or_insert_with(|| DensePoly { coeffs: vec![0; len] })
                    .add_shifted(poly, shift, loops);
            }
        }
        states = next;
        frontier = new_frontier;
    }
    let result = states.remove(&Vec::new()).expect("frontier empties after the last crossing");
    Ok(LaurentPoly::from_terms(
        Variable::A,
        result
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0)
            .map(|(i, v)| (i as i64 - offset as i64, BigInt::from(*v))),
    ))
}

/// The bracket by the fastest available evaluator.
pub fn bracket(d: &Diagram) -> Result<LaurentPoly, BracketError> {
    bracket_skein(d)
}

pub fn jones(d: &Diagram) -> Result<LaurentPoly, BracketError> {
    let w = d.writhe(Orientation::Forward)?;
    Ok(normalize_to_jones(&bracket(d)?, w)?)
}

pub fn jones_from_bracket(d: &Diagram, bracket: &LaurentPoly) -> Result<LaurentPoly, BracketError> {
    let w = d.writhe(Orientation::Forward)?;
    Ok(normalize_to_jones(bracket, w)?)
}

/// Circles of a uniform state, each as the cyclic sequence of smoothing arcs
/// it runs through. Arc `(x, k)` is arc `k` of crossing `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateCircles {
    pub smoothing: Smoothing,
    pub circles: Vec<Vec<(usize, usize)>>,
    /// `(circle, position)` of every arc, indexed `2 * x + k`.
    pub arc_position: Vec<(usize, usize)>,
}

impl StateCircles {
    pub fn count(&self) -> usize {
        self.circles.len().max(1)
    }

    /// Circle holding arc `k` of crossing `x`.
    pub fn circle_of(&self, x: usize, k: usize) -> usize {
        self.arc_position[2 * x + k].0
    }

    /// Crossings whose two arcs lie on one circle.
    pub fn self_chords(&self) -> Vec<usize> {
        (0..self.arc_position.len() / 2).filter(|x| self.circle_of(*x, 0) == self.circle_of(*x, 1)).collect()
    }
}

pub fn state_circles(d: &Diagram, smoothing: Smoothing) -> StateCircles {
    let c = d.crossing_count();
    let mut arc_position = vec![(usize::MAX, 0); 2 * c];
    let mut circles = Vec::new();
    for start in 0..2 * c {
        if arc_position[start].0 != usize::MAX {
            continue;
        }
        let id = circles.len();
        let mut circle = Vec::new();
        let (x0, k0) = (start / 2, start % 2);
        // Walk out of the arc through its second slot.
        let mut x = x0;
        let mut k = k0;
        let mut out_pos = smoothing.pairs()[k0].1;
        loop {
            arc_position[2 * x + k] = (id, circle.len());
            circle.push((x, k));
            let q = d.partner(slot(x, out_pos));
            let (y, p) = (slot_crossing(q), slot_pos(q));
            let ky = smoothing.arc_of(p);
            let (u, v) = smoothing.pairs()[ky];
            let other = if p == u { v } else { u };
            if (y, ky) == (x0, k0) {
                break;
            }
            x = y;
            k = ky;
            out_pos = other;
        }
        circles.push(circle);
    }
    StateCircles { smoothing, circles, arc_position }
}

/// Data of the all-A and all-B states and the matching extreme coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremeStateSummary {
    pub crossings: usize,
    pub s_a: usize,
    pub s_b: usize,
    /// `c + 2|S_A| - 2`.
    pub max_s_a: i64,
    /// `-(c + 2|S_B| - 2)`.
    pub min_s_b: i64,
    /// Coefficient of the bracket at `max_s_a`.
    pub a_sa: BigInt,
    /// Coefficient of the bracket at `min_s_b`.
    pub b_sb: BigInt,
    pub max_deg: Option<i64>,
    pub min_deg: Option<i64>,
}

impl ExtremeStateSummary {
    /// The bracket lies between the extreme-state degrees.
    pub fn bounds_hold(&self) -> bool {
        match (self.max_deg, self.min_deg) {
            (Some(hi), Some(lo)) => hi <= self.max_s_a && lo >= self.min_s_b,
            _ => true,
        }
    }
}

pub fn extreme_summary(d: &Diagram) -> Result<ExtremeStateSummary, BracketError> {
    let b = bracket(d)?;
    Ok(extreme_summary_from(d, &b))
}

pub fn extreme_summary_from(d: &Diagram, bracket: &LaurentPoly) -> ExtremeStateSummary {
    let c = d.crossing_count();
    let s_a = resolve(d, &State::uniform(c, Smoothing::A));
    let s_b = resolve(d, &State::uniform(c, Smoothing::B));
    let max_s_a = c as i64 + 2 * s_a as i64 - 2;
    let min_s_b = -(c as i64 + 2 * s_b as i64 - 2);
    let summary = ExtremeStateSummary {
        crossings: c,
        s_a,
        s_b,
        max_s_a,
        min_s_b,
        a_sa: bracket.coeff_at(max_s_a),
        b_sb: bracket.coeff_at(min_s_b),
        max_deg: bracket.max_deg().ok(),
        min_deg: bracket.min_deg().ok(),
    };
    debug_assert!(summary.bounds_hold(), "bracket exceeds extreme-state degrees");
    summary
}

/// No crossing has both of its all-A arcs on one state circle.
pub fn is_plus_adequate(d: &Diagram) -> bool {
    state_circles(d, Smoothing::A).self_chords().is_empty()
}

pub fn is_minus_adequate(d: &Diagram) -> bool {
    state_circles(d, Smoothing::B).self_chords().is_empty()
}

/// Adequacy straight from the definition: every other state has a strictly
/// smaller top degree (resp. larger bottom degree) than the extreme state.
pub fn adequacy_brute_force(d: &Diagram, limit: usize) -> Result<(bool, bool), BracketError> {
    let c = d.crossing_count();
    if c > limit.min(30) {
        return Err(BracketError::LimitExceeded { crossings: c, limit: limit.min(30) });
    }
    if c == 0 {
        return Ok((true, true));
    }
    let table = ArcTable::new(d);
    let full: u64 = (1 << c) - 1;
    let top = |mask: u64| {
        let b = mask.count_ones() as i64;
        (c as i64 - 2 * b) + 2 * table.loops(mask) as i64 - 2
    };
    let bottom = |mask: u64| {
        let b = mask.count_ones() as i64;
        (c as i64 - 2 * b) - 2 * table.loops(mask) as i64 + 2
    };
    let (top_a, bottom_b) = (top(0), bottom(full));
    let plus = (1..=full).into_par_iter().all(|m| top(m) < top_a);
    let minus = (0..full).into_par_iter().all(|m| bottom(m) > bottom_b);
    Ok((plus, minus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{moves, parse_pd, EdgeId};

    const TREFOIL_LEFT: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
    const TREFOIL_RIGHT: &str = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";
    const FIGURE_EIGHT: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
    const KINK: &str = "X(1,2,2,1)";

    fn a(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Variable::A, terms.iter().copied())
    }

    #[test]
    fn smoothing_trefoil_by_hand() {
        let t = parse_pd(TREFOIL_LEFT).unwrap();
        let sa = resolve(&t, &State::uniform(3, Smoothing::A));
        let sb = resolve(&t, &State::uniform(3, Smoothing::B));
        assert_eq!(sa + sb, 5);
        assert!((sa, sb) == (2, 3) || (sa, sb) == (3, 2));
    }

    #[test]
    fn kink_brackets() {
        let k = parse_pd(KINK).unwrap();
        let b = bracket_oracle(&k).unwrap();
        assert!(b == a(&[(3, -1)]) || b == a(&[(-3, -1)]), "{b}");
        assert_eq!(bracket_skein(&k).unwrap(), b);
        assert!(jones(&k).unwrap().is_one());
        let loops = resolve(&k, &State::uniform(1, Smoothing::A));
        assert!(loops == 1 || loops == 2);
        // Exactly one side is adequate.
        assert_ne!(is_plus_adequate(&k), is_minus_adequate(&k));
    }

    #[test]
    fn trefoil_bracket_and_jones() {
        let t = parse_pd(TREFOIL_RIGHT).unwrap();
        let b = bracket_oracle(&t).unwrap();
        assert_eq!(b.raw_span().unwrap(), 12);
        assert_eq!(bracket_skein(&t).unwrap(), b);
        let v = jones(&t).unwrap();
        assert_eq!(v.to_string(), "t + t^3 - t^4");
        assert_eq!(v.span().unwrap(), 3);
        let vm = jones(&t.mirror()).unwrap();
        assert_eq!(vm, v.invert_variable());
    }

    #[test]
    fn figure_eight_is_amphichiral() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        let v = jones(&d).unwrap();
        assert_eq!(v.to_string(), "t^-2 - t^-1 + 1 - t + t^2");
        assert_eq!(v, v.invert_variable());
    }

    #[test]
    fn unknot_constant() {
        let u = Diagram::unknot();
        assert!(bracket_oracle(&u).unwrap().is_one());
        assert!(bracket_skein(&u).unwrap().is_one());
        assert!(jones(&u).unwrap().is_one());
        let s = extreme_summary(&u).unwrap();
        assert_eq!((s.s_a, s.s_b), (1, 1));
    }

    #[test]
    fn limit_is_enforced() {
        let t = parse_pd(TREFOIL_LEFT).unwrap();
        assert!(matches!(
            bracket_oracle_with_limit(&t, 2),
            Err(BracketError::LimitExceeded { crossings: 3, limit: 2 })
        ));
    }

    #[test]
    fn extreme_coefficients_of_alternating() {
        for text in [TREFOIL_LEFT, TREFOIL_RIGHT, FIGURE_EIGHT] {
            let d = parse_pd(text).unwrap();
            let s = extreme_summary(&d).unwrap();
            assert!(s.bounds_hold());
            assert_eq!(s.a_sa.magnitude(), &1u32.into());
            assert_eq!(s.b_sb.magnitude(), &1u32.into());
            assert!(is_plus_adequate(&d) && is_minus_adequate(&d));
            assert_eq!(adequacy_brute_force(&d, 12).unwrap(), (true, true));
            let col = d.checkerboard().unwrap();
            assert_eq!(col.shaded_count(), s.s_a);
            assert_eq!(col.unshaded_count(), s.s_b);
        }
    }

    #[test]
    fn state_circles_cover_arcs() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        for sm in [Smoothing::A, Smoothing::B] {
            let sc = state_circles(&d, sm);
            assert_eq!(sc.count(), resolve(&d, &State::uniform(4, sm)));
            assert_eq!(sc.circles.iter().map(|c| c.len()).sum::<usize>(), 8);
        }
    }

    #[test]
    fn clasp_keeps_bracket() {
        let t = parse_pd(TREFOIL_LEFT).unwrap();
        let b = bracket(&t).unwrap();
        for (f, i, j) in moves::clasp_sites(&t).into_iter().take(6) {
            for over in [true, false] {
                let c = moves::add_clasp(&t, f, i, j, over).unwrap();
                assert_eq!(bracket_oracle(&c).unwrap(), b);
            }
        }
        for kind in moves::KinkKind::ALL {
            let k = moves::add_kink(&t, EdgeId(2), kind).unwrap();
            let kb = bracket_oracle(&k).unwrap();
            assert!(kb == b.mono_mul(3).neg() || kb == b.mono_mul(-3).neg());
            assert_eq!(jones(&k).unwrap(), jones(&t).unwrap());
        }
    }
}
