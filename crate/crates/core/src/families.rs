//! Generators for pretzel, rational, Whitehead-double and cable diagrams,
//! with the closed-form predictions attached to each family.
//!
//! Twist regions are drawn on a square grid. A crossing whose over-strand
//! rises from south-west to north-east is a positive half-twist.

use num_integer::Integer;

use crate::diagram::{Diagram, EdgeId, EdgeSign, PdBuilder, Slot};
use crate::error::FamilyError;

/// Adds a crossing from its four geometric ends.
fn half_twist(b: &mut PdBuilder, [nw, ne, sw, se]: [usize; 4], rising_over: bool) {
    if rising_over {
        b.crossing([nw, sw, se, ne]);
    } else {
        b.crossing([ne, nw, sw, se]);
    }
}

/// Ends of a four-ended tangle.
#[derive(Clone, Copy, Debug)]
struct Tangle {
    nw: usize,
    ne: usize,
    sw: usize,
    se: usize,
}

impl Tangle {
    fn horizontal(b: &mut PdBuilder) -> Self {
        let (top, bottom) = (b.fresh(), b.fresh());
        Tangle { nw: top, ne: top, sw: bottom, se: bottom }
    }

    fn vertical(b: &mut PdBuilder) -> Self {
        let (left, right) = (b.fresh(), b.fresh());
        Tangle { nw: left, ne: right, sw: left, se: right }
    }

    /// `|k|` half-twists of the two right ends.
    fn twist_right(&mut self, b: &mut PdBuilder, k: i64, rising: bool) {
        for _ in 0..k.unsigned_abs() {
            let (ne, se) = (b.fresh(), b.fresh());
            half_twist(b, [self.ne, ne, self.se, se], rising == (k > 0));
            self.ne = ne;
            self.se = se;
        }
    }

    /// `|k|` half-twists of the two bottom ends.
    fn twist_bottom(&mut self, b: &mut PdBuilder, k: i64, rising: bool) {
        for _ in 0..k.unsigned_abs() {
            let (sw, se) = (b.fresh(), b.fresh());
            half_twist(b, [self.sw, self.se, sw, se], rising == (k > 0));
            self.sw = sw;
            self.se = se;
        }
    }

    /// Joins the two upper ends and the two lower ends.
    fn close(self, b: &mut PdBuilder) {
        b.join(self.nw, self.ne);
        b.join(self.sw, self.se);
    }
}

fn finish_knot(b: PdBuilder, what: String) -> Result<Diagram, FamilyError> {
    let d = b.finish()?;
    if d.is_knot() {
        Ok(d)
    } else {
        Err(FamilyError::NotAKnot(what))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PretzelSpec {
    pub c: Vec<i64>,
}

impl PretzelSpec {
    pub fn new(c: Vec<i64>) -> Self {
        PretzelSpec { c }
    }

    /// Knot when `n` is odd and every entry odd, or exactly one entry is even.
    pub fn is_knot(&self) -> bool {
        let even = self.c.iter().filter(|c| *c % 2 == 0).count();
        (self.c.len() % 2 == 1 && even == 0) || even == 1
    }

    /// Sign changes `c_i -> c_{i+1}`, read cyclically.
    pub fn sign_changes(&self) -> usize {
        let n = self.c.len();
        (0..n).filter(|&i| (self.c[i] > 0) != (self.c[(i + 1) % n] > 0)).count()
    }

    pub fn crossing_count(&self) -> usize {
        self.c.iter().map(|c| c.unsigned_abs() as usize).sum()
    }
}

impl std::fmt::Display for PretzelSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.c.iter().map(i64::to_string).collect();
        write!(f, "P({})", parts.join(","))
    }
}

/// Columns of vertical twists side by side, closed over the top and
/// under the bottom.
pub fn pretzel(spec: &PretzelSpec) -> Result<Diagram, FamilyError> {
    if spec.c.len() < 2 || spec.c.contains(&0) {
        return Err(FamilyError::InvalidSpec(format!("{spec}: need at least two nonzero entries")));
    }
    if !spec.is_knot() {
        return Err(FamilyError::NotAKnot(spec.to_string()));
    }
    let mut b = PdBuilder::new();
    let mut columns = Vec::with_capacity(spec.c.len());
    for &ci in &spec.c {
        let mut t = Tangle::vertical(&mut b);
        t.twist_bottom(&mut b, ci, true);
        columns.push(t);
    }
    for pair in columns.windows(2) {
        b.join(pair[0].ne, pair[1].nw);
        b.join(pair[0].se, pair[1].sw);
    }
    let (first, last) = (columns[0], columns[columns.len() - 1]);
    Tangle { nw: first.nw, ne: last.ne, sw: first.sw, se: last.se }.close(&mut b);
    finish_knot(b, spec.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalSpec {
    pub a: Vec<i64>,
}

impl RationalSpec {
    pub fn new(a: Vec<i64>) -> Self {
        RationalSpec { a }
    }

    pub fn crossing_count(&self) -> usize {
        self.a.iter().map(|a| a.unsigned_abs() as usize).sum()
    }
}

impl std::fmt::Display for RationalSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.a.iter().map(i64::to_string).collect();
        write!(f, "C({})", parts.join(","))
    }
}

/// Twists alternate between the right and bottom ends, the last one on
/// the right, then the upper and lower ends are joined. Positive entries
/// give an alternating diagram; negative entries twist the other way.
pub fn rational(spec: &RationalSpec) -> Result<Diagram, FamilyError> {
    if spec.a.is_empty() || spec.a.contains(&0) {
        return Err(FamilyError::InvalidSpec(format!("{spec}: need nonzero twist counts")));
    }
    let n = spec.a.len();
    let mut b = PdBuilder::new();
    let mut t = if n % 2 == 1 { Tangle::horizontal(&mut b) } else { Tangle::vertical(&mut b) };
    for (i, &ai) in spec.a.iter().enumerate() {
        if (n - i) % 2 == 1 {
            t.twist_right(&mut b, ai, true);
        } else {
            t.twist_bottom(&mut b, ai, true);
        }
    }
    t.close(&mut b);
    finish_knot(b, spec.to_string())
}

/// Every crossing of `d` replaced by an `n x n` grid of crossings; each
/// edge carries `n` parallel strands. Returns, for every edge in `cut`,
/// the strand labels leaving the first slot and those entering the second,
/// both ordered left to right along the direction of travel. Those
/// strands are left for the caller to connect.
fn parallel_copy(
    b: &mut PdBuilder,
    d: &Diagram,
    n: usize,
    cut: &[EdgeId],
) -> Result<Vec<(Vec<usize>, Vec<usize>)>, FamilyError> {
    // ends[slot][k]: strand k at that slot, left to right facing outward.
    let mut ends: Vec<Vec<usize>> = vec![Vec::new(); 4 * d.crossing_count()];
    for x in 0..d.crossing_count() {
        let v: Vec<Vec<usize>> = (0..n).map(|_| (0..=n).map(|_| b.fresh()).collect()).collect();
        let h: Vec<Vec<usize>> = (0..n).map(|_| (0..=n).map(|_| b.fresh()).collect()).collect();
        for i in 0..n {
            for j in 0..n {
                // Under-strand runs south to north, as in the companion.
                b.crossing([v[i][j], h[j][i + 1], v[i][j + 1], h[j][i]]);
            }
        }
        ends[4 * x] = (0..n).map(|k| v[n - 1 - k][0]).collect();
        ends[4 * x + 1] = (0..n).map(|k| h[n - 1 - k][n]).collect();
        ends[4 * x + 2] = (0..n).map(|k| v[k][n]).collect();
        ends[4 * x + 3] = (0..n).map(|k| h[k][0]).collect();
    }
    let lanes =
        |s: Slot, t: Slot| -> (Vec<usize>, Vec<usize>) { (ends[s].clone(), ends[t].iter().rev().copied().collect()) };
    let mut out = Vec::new();
    for e in cut {
        let [s, t] = d.edge_slots(*e)?;
        out.push(lanes(s, t));
    }
    for e in d.edges() {
        if cut.contains(&e) {
            continue;
        }
        let [s, t] = d.edge_slots(e)?;
        let (from, to) = lanes(s, t);
        for (x, y) in from.iter().zip(&to) {
            b.join(*x, *y);
        }
    }
    Ok(out)
}

/// Braid letter on parallel strands running in the direction of travel.
fn braid_letter(b: &mut PdBuilder, lanes: &mut [usize], letter: i64) {
    let i = letter.unsigned_abs() as usize;
    let (sw, se) = (lanes[i - 1], lanes[i]);
    let (nw, ne) = (b.fresh(), b.fresh());
    half_twist(b, [nw, ne, sw, se], letter > 0);
    lanes[i - 1] = nw;
    lanes[i] = ne;
}

fn join_lanes(b: &mut PdBuilder, from: &[usize], to: &[usize]) {
    for (x, y) in from.iter().zip(to) {
        b.join(*x, *y);
    }
}

fn check_companion(d: &Diagram) -> Result<EdgeId, FamilyError> {
    if d.is_unknot_constant() {
        return Err(FamilyError::InvalidSpec("companion has no crossings".into()));
    }
    if !d.is_knot() {
        return Err(FamilyError::NotAKnot("companion".into()));
    }
    first_neutral_edge(d).ok_or(FamilyError::NoNeutralEdge)
}

/// Lowest-labelled edge that is neither positive nor negative.
pub fn first_neutral_edge(d: &Diagram) -> Option<EdgeId> {
    d.edge_signs().into_iter().find(|(_, s)| *s == EdgeSign::Neutral).map(|(e, _)| e)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhiteheadSpec {
    pub companion: Diagram,
    /// Full twists between the two parallel strands; each adds two crossings.
    pub twists: i64,
    /// `true` puts the first hook over the second at the upper clasp crossing.
    pub clasp_positive: bool,
}

impl WhiteheadSpec {
    pub fn untwisted(companion: Diagram) -> Self {
        WhiteheadSpec { companion, twists: 0, clasp_positive: true }
    }
}

/// Edge carrying the extra twists of a double: the first one after the
/// clasp edge sharing no face with it, else the first other edge.
fn twist_edge(d: &Diagram, clasp: EdgeId) -> EdgeId {
    let faces = d.faces();
    let edge_faces = d.edge_faces(&faces);
    let near = &edge_faces[&clasp];
    let others: Vec<EdgeId> = d.edges().into_iter().filter(|e| *e != clasp).collect();
    others.iter().find(|e| edge_faces[e].iter().all(|f| !near.contains(f))).or(others.first()).copied().unwrap_or(clasp)
}

/// Blackboard-framed double of the companion with a two-crossing clasp on
/// its first neutral edge.
pub fn whitehead_double(spec: &WhiteheadSpec) -> Result<Diagram, FamilyError> {
    let d = &spec.companion;
    let clasp = check_companion(d)?;
    let twist_at = if spec.twists != 0 { Some(twist_edge(d, clasp)).filter(|e| *e != clasp) } else { None };
    let mut cut = vec![clasp];
    cut.extend(twist_at);
    let mut b = PdBuilder::new();
    let lanes = parallel_copy(&mut b, d, 2, &cut)?;

    let (from, to) = &lanes[0];
    let mut from = from.clone();
    if twist_at.is_none() {
        for _ in 0..2 * spec.twists.unsigned_abs() {
            braid_letter(&mut b, &mut from, spec.twists.signum());
        }
    }
    // Hook p-q-r turns back towards the start, hook u-v-w towards the end;
    // q crosses both strands of the second hook.
    let (p, q, r) = (from[0], b.fresh(), from[1]);
    let (u, v, w) = (to[0], b.fresh(), to[1]);
    if spec.clasp_positive {
        b.crossing([u, p, v, q]);
        b.crossing([r, w, q, v]);
    } else {
        b.crossing([q, u, p, v]);
        b.crossing([w, q, v, r]);
    }
    if twist_at.is_some() {
        let (tf, tt) = &lanes[1];
        let mut tf = tf.clone();
        for _ in 0..2 * spec.twists.unsigned_abs() {
            braid_letter(&mut b, &mut tf, spec.twists.signum());
        }
        join_lanes(&mut b, &tf, tt);
    }
    finish_knot(b, "Whitehead double".into())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CableSpec {
    pub companion: Diagram,
    pub n: usize,
    /// Number of adjacent clasp blocks; the sign picks the twist direction.
    pub m: i64,
}

/// `n` parallel copies joined through `|m|` blocks `s_1 s_2 ... s_{n-1}`
/// on the first neutral edge.
pub fn cable(spec: &CableSpec) -> Result<Diagram, FamilyError> {
    if spec.n < 2 || spec.m == 0 {
        return Err(FamilyError::InvalidSpec(format!("cable needs n >= 2 and m != 0, got n={} m={}", spec.n, spec.m)));
    }
    let gcd = (spec.n as i64).gcd(&spec.m);
    if gcd != 1 {
        return Err(FamilyError::NotCoprime { n: spec.n, m: spec.m, gcd });
    }
    let clasp = check_companion(&spec.companion)?;
    let mut b = PdBuilder::new();
    let lanes = parallel_copy(&mut b, &spec.companion, spec.n, &[clasp])?;
    let (from, to) = &lanes[0];
    let mut cur = from.clone();
    for _ in 0..spec.m.unsigned_abs() {
        for i in 1..spec.n as i64 {
            braid_letter(&mut b, &mut cur, i * spec.m.signum());
        }
    }
    join_lanes(&mut b, &cur, to);
    finish_knot(b, format!("{}_{} cable", spec.n, spec.m))
}

/// Generator parameters of a family member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Pretzel(PretzelSpec),
    Rational(RationalSpec),
    Whitehead(WhiteheadSpec),
    Cable(CableSpec),
}

impl Family {
    pub fn generate(&self) -> Result<Diagram, FamilyError> {
        match self {
            Family::Pretzel(s) => pretzel(s),
            Family::Rational(s) => rational(s),
            Family::Whitehead(s) => whitehead_double(s),
            Family::Cable(s) => cable(s),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Family::Pretzel(_) => "pretzel",
            Family::Rational(_) => "rational",
            Family::Whitehead(_) => "whitehead",
            Family::Cable(_) => "cable",
        }
    }

    /// Parameters without the companion diagram.
    pub fn parameters(&self) -> String {
        match self {
            Family::Pretzel(s) => s.to_string(),
            Family::Rational(s) => s.to_string(),
            Family::Whitehead(s) => format!("twists={} clasp={}", s.twists, if s.clasp_positive { '+' } else { '-' }),
            Family::Cable(s) => format!("n={} m={}", s.n, s.m),
        }
    }
}

/// How many extreme bracket coefficients are predicted nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtremeClaim {
    Both,
    AtLeastOne,
}

/// Predicted shape of the two Lando graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LandoShape {
    BothEmpty,
    OneEmptyOtherBipartite,
}

/// Predicted `(|S_A|, |S_B|)`. `exchanged` is the same law with the roles
/// of A and B reversed, when the construction allows either.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct StateCountLaw {
    pub s_a: usize,
    pub s_b: usize,
    pub exchanged: Option<(usize, usize)>,
}

impl StateCountLaw {
    pub fn matches(&self, s_a: usize, s_b: usize) -> bool {
        (s_a, s_b) == (self.s_a, self.s_b) || self.exchanged == Some((s_a, s_b))
    }
}

/// Closed-form values for one family member; `None` where no formula
/// applies under the stated hypotheses.
#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct FamilyPredictions {
    pub crossings: Option<usize>,
    pub o_length: Option<usize>,
    pub state_counts: Option<StateCountLaw>,
    /// Span of the Jones polynomial in `t`.
    pub span: Option<u64>,
    pub span_at_most: Option<u64>,
    /// Sign of the bracket coefficient at the `S_A` extreme.
    pub a_sign: Option<i8>,
    pub b_sign: Option<i8>,
    pub extremes: Option<ExtremeClaim>,
    /// Predicted extreme coefficients are `+1` or `-1`.
    pub unit_extremes: bool,
    pub lando: Option<LandoShape>,
    /// Jones span predicted to exceed this companion crossing count.
    pub span_exceeds: Option<u64>,
    pub nontrivial: bool,
}

fn parity_sign(k: i64) -> i8 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Span, extreme signs and o-length of a pretzel knot's standard diagram.
pub fn pretzel_predictions(spec: &PretzelSpec) -> FamilyPredictions {
    let c = spec.crossing_count() as u64;
    let o = spec.sign_changes();
    let wide = spec.c.iter().all(|x| x.abs() > 1);
    let pos: Vec<i64> = spec.c.iter().copied().filter(|x| *x > 0).collect();
    let neg: Vec<i64> = spec.c.iter().copied().filter(|x| *x < 0).collect();
    let mixed = !pos.is_empty() && !neg.is_empty();
    let span = match (o, wide) {
        (0, _) => Some(c),
        (_, false) => None,
        (o, true) if o % 2 == 0 => Some(c - 1),
        _ => Some(c - 2),
    };
    let neg_sum: i64 = neg.iter().map(|x| -(x + 1)).sum();
    let pos_sum: i64 = pos.iter().map(|x| x - 1).sum();
    FamilyPredictions {
        crossings: Some(c as usize),
        o_length: Some(o),
        state_counts: mixed.then(|| StateCountLaw {
            s_a: (pos.len() as i64 + neg_sum) as usize,
            s_b: (neg.len() as i64 + pos_sum) as usize,
            exchanged: None,
        }),
        span,
        a_sign: (!spec.c.contains(&-1)).then(|| parity_sign(pos.len() as i64 - 1 + neg_sum)),
        b_sign: (!spec.c.contains(&1)).then(|| parity_sign(neg.len() as i64 - 1 + pos_sum)),
        extremes: wide.then_some(ExtremeClaim::Both),
        unit_extremes: wide,
        lando: wide.then_some(LandoShape::BothEmpty),
        nontrivial: true,
        ..Default::default()
    }
}

/// Every applicable prediction for `d`, generated from `family`.
pub fn family_predictions(d: &Diagram, family: &Family) -> FamilyPredictions {
    match family {
        Family::Pretzel(s) => pretzel_predictions(s),
        Family::Rational(s) => {
            let c = s.crossing_count();
            let positive = s.a.iter().all(|a| *a > 0);
            let reduced = positive && d.is_reduced() && c > 0;
            FamilyPredictions {
                crossings: Some(c),
                o_length: positive.then_some(0),
                span: reduced.then_some(c as u64),
                extremes: reduced.then_some(ExtremeClaim::Both),
                unit_extremes: reduced,
                lando: reduced.then_some(LandoShape::BothEmpty),
                nontrivial: reduced,
                ..Default::default()
            }
        }
        Family::Whitehead(s) => {
            let k = &s.companion;
            let (c, o) = (k.crossing_count() as u64, k.o_length() as u64);
            let tr = k.is_totally_reduced() && c > 0;
            let alt = tr && k.is_alternating();
            let untwisted = s.twists == 0;
            let mut p = FamilyPredictions {
                crossings: Some((4 * c + 2 + 2 * s.twists.unsigned_abs()) as usize),
                o_length: untwisted.then_some((2 * c + 2 * o + 1) as usize),
                span_at_most: (untwisted && tr).then(|| 4 * c - 1),
                nontrivial: alt,
                extremes: alt.then_some(ExtremeClaim::AtLeastOne),
                ..Default::default()
            };
            if alt && untwisted {
                let (sa, sb) = companion_states(k);
                p.state_counts =
                    Some(StateCountLaw { s_a: 2 * sa - 1, s_b: 2 * sb + 1, exchanged: Some((2 * sa + 1, 2 * sb - 1)) });
                p.span_at_most = Some(3 * c + 2);
                p.span = Some(3 * c + 2);
                p.extremes = Some(ExtremeClaim::Both);
                p.lando = Some(LandoShape::OneEmptyOtherBipartite);
                p.span_exceeds = Some(c);
            }
            p
        }
        Family::Cable(s) => {
            let k = &s.companion;
            let (c, n) = (k.crossing_count() as u64, s.n as u64);
            let alt = k.is_totally_reduced() && k.is_alternating() && c > 0;
            let mut p = FamilyPredictions {
                crossings: Some((n * n * c + s.m.unsigned_abs() * (n - 1)) as usize),
                nontrivial: alt,
                extremes: alt.then_some(ExtremeClaim::AtLeastOne),
                ..Default::default()
            };
            if alt && s.m.abs() == 1 {
                let (sa, sb) = companion_states(k);
                let k = s.n;
                p.state_counts = Some(StateCountLaw {
                    s_a: k * sa,
                    s_b: k * (sb - 1) + 1,
                    exchanged: Some((k * (sa - 1) + 1, k * sb)),
                });
                p.span = Some((n * n + n) * c / 2 + n - 1);
                p.extremes = Some(ExtremeClaim::Both);
                p.span_exceeds = Some(c);
            }
            p
        }
    }
}

fn companion_states(d: &Diagram) -> (usize, usize) {
    (
        crate::bracket::state_circles(d, crate::bracket::Smoothing::A).count(),
        crate::bracket::state_circles(d, crate::bracket::Smoothing::B).count(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::{jones, state_circles, Smoothing};
    use crate::corpus::{bundled_knot, bundled_reference_jones};

    fn states(d: &Diagram) -> (usize, usize) {
        (state_circles(d, Smoothing::A).count(), state_circles(d, Smoothing::B).count())
    }

    fn jones_up_to_mirror(d: &Diagram, knot: &str) -> bool {
        let want = &bundled_reference_jones()[knot];
        let got = jones(d).unwrap();
        &got == want || got.invert_variable() == *want
    }

    #[test]
    fn pretzel_basics() {
        let p = pretzel(&PretzelSpec::new(vec![3, 3, 3])).unwrap();
        assert_eq!(p.crossing_count(), 9);
        assert!(p.is_alternating());
        assert!(jones_up_to_mirror(&p, "9_35"));
        let t34 = pretzel(&PretzelSpec::new(vec![-2, 3, 3])).unwrap();
        assert!(jones_up_to_mirror(&t34, "8_19"));
        let p = pretzel(&PretzelSpec::new(vec![-2, 3, 7])).unwrap();
        assert_eq!(p.crossing_count(), 12);
        assert_eq!(p.o_length(), 2);
        assert!(pretzel(&PretzelSpec::new(vec![2, 3])).is_ok());
        assert!(matches!(pretzel(&PretzelSpec::new(vec![2, 4])), Err(FamilyError::NotAKnot(_))));
    }

    #[test]
    fn pretzel_sign_convention() {
        let p = pretzel(&PretzelSpec::new(vec![1, 1, 1])).unwrap();
        let m = pretzel(&PretzelSpec::new(vec![-1, -1, -1])).unwrap();
        let w = p.writhe(crate::Orientation::Forward).unwrap();
        assert_eq!(w.abs(), 3);
        assert_eq!(m.writhe(crate::Orientation::Forward).unwrap(), -w);
        assert!(jones_up_to_mirror(&p, "3_1"));
    }

    #[test]
    fn rational_basics() {
        let t = rational(&RationalSpec::new(vec![3])).unwrap();
        assert!(jones_up_to_mirror(&t, "3_1"));
        let f = rational(&RationalSpec::new(vec![2, 2])).unwrap();
        assert_eq!(f.crossing_count(), 4);
        assert!(f.is_alternating());
        assert!(jones_up_to_mirror(&f, "4_1"));
        let g = rational(&RationalSpec::new(vec![2, 1, 1])).unwrap();
        assert_eq!(g.o_length(), 0);
        let k = rational(&RationalSpec::new(vec![3, 2])).unwrap();
        assert!(jones_up_to_mirror(&k, "5_2"));
        assert!(rational(&RationalSpec::new(vec![2])).is_err());
    }

    #[test]
    fn whitehead_of_trefoil() {
        let t = bundled_knot("3_1").unwrap();
        for clasp_positive in [true, false] {
            let w = whitehead_double(&WhiteheadSpec { companion: t.clone(), twists: 0, clasp_positive }).unwrap();
            assert_eq!(w.crossing_count(), 14);
            assert_eq!(w.o_length(), 7);
            assert!(w.is_totally_reduced());
        }
        let w = whitehead_double(&WhiteheadSpec { companion: t.clone(), twists: 2, clasp_positive: true }).unwrap();
        assert_eq!(w.crossing_count(), 18);
    }

    #[test]
    fn cable_of_trefoil() {
        let t = bundled_knot("3_1").unwrap();
        let c = cable(&CableSpec { companion: t.clone(), n: 2, m: 1 }).unwrap();
        assert_eq!(c.crossing_count(), 13);
        let c3 = cable(&CableSpec { companion: t.clone(), n: 3, m: 2 }).unwrap();
        assert_eq!(c3.crossing_count(), 27 + 4);
        assert!(matches!(cable(&CableSpec { companion: t, n: 2, m: 2 }), Err(FamilyError::NotCoprime { .. })));
    }

    #[test]
    fn satellite_predictions_hold_for_small_companions() {
        let t = bundled_knot("3_1").unwrap();
        let companions = [t.mirror(), t, bundled_knot("4_1").unwrap()];
        for k in &companions {
            let mut fams: Vec<Family> = [true, false]
                .map(|clasp_positive| {
                    Family::Whitehead(WhiteheadSpec { companion: k.clone(), twists: 0, clasp_positive })
                })
                .into();
            fams.extend([1, -1].map(|m| Family::Cable(CableSpec { companion: k.clone(), n: 2, m })));
            for fam in &fams {
                let d = fam.generate().unwrap();
                let p = family_predictions(&d, fam);
                let (sa, sb) = states(&d);
                assert!(p.state_counts.unwrap().matches(sa, sb), "{}", fam.parameters());
                assert_eq!(Some(jones(&d).unwrap().span().unwrap()), p.span, "{}", fam.parameters());
            }
        }
    }
}
