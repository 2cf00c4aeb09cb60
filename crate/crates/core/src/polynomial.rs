//! Exact one-variable Laurent polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Two variables are supported. Bracket polynomials live in `A`. Jones
//! polynomials live in `t`, but exponents are stored in quarter units so the
//! substitution `A = t^(-1/4)` never leaves the integers: the stored exponent
//! `e` stands for `t^(e/4)`.
//!
//! Unless stated otherwise, every method taking or returning an exponent works
//! in stored units.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::PolyError;

/// Which indeterminate a polynomial is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variable {
    /// Kauffman bracket variable.
    A,
    /// Jones variable `t`, exponents stored multiplied by four.
    TQuarter,
}

impl Variable {
    fn symbol(self) -> char {
        match self {
            Variable::A => 'A',
            Variable::TQuarter => 't',
        }
    }
}

/// Sparse Laurent polynomial. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    var: Variable,
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero(var: Variable) -> Self {
        LaurentPoly { var, terms: BTreeMap::new() }
    }

    pub fn one(var: Variable) -> Self {
        Self::monomial(var, 0, 1)
    }

    pub fn monomial(var: Variable, exponent: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(var);
        p.add_term(exponent, coeff.into());
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(var: Variable, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// The bracket loop factor `-A^2 - A^-2`.
    pub fn loop_factor() -> Self {
        Self::from_terms(Variable::A, [(2, -1), (-2, -1)])
    }

    pub fn variable(&self) -> Variable {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exponent: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exponent) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_var(&self, other: &Self) -> Result<(), PolyError> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(PolyError::VariableMismatch { left: self.var, right: other.var })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_var(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_var(other)?;
        let mut out = Self::zero(self.var);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { var: self.var, terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    /// Multiplies by `var^shift` (stored units).
    pub fn mono_mul(&self, shift: i64) -> Self {
        LaurentPoly { var: self.var, terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(self.var);
        for (e, c) in &self.terms {
            out.add_term(*e, c * k);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.var);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces every exponent `e` by `-e`.
    pub fn invert_variable(&self) -> Self {
        LaurentPoly { var: self.var, terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    pub fn coeff_at(&self, exponent: i64) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn max_deg(&self) -> Result<i64, PolyError> {
        self.terms.keys().next_back().copied().ok_or(PolyError::ZeroPolynomial)
    }

    pub fn min_deg(&self) -> Result<i64, PolyError> {
        self.terms.keys().next().copied().ok_or(PolyError::ZeroPolynomial)
    }

    /// Span in stored exponent units.
    pub fn raw_span(&self) -> Result<u64, PolyError> {
        Ok((self.max_deg()? - self.min_deg()?) as u64)
    }

    /// Span in the polynomial's natural units: `A`-units for brackets and
    /// `t`-units for Jones polynomials.
    pub fn span(&self) -> Result<u64, PolyError> {
        let raw = self.raw_span()?;
        match self.var {
            Variable::A => Ok(raw),
            Variable::TQuarter if raw % 4 == 0 => Ok(raw / 4),
            Variable::TQuarter => Err(PolyError::NonIntegralExponent(raw as i64)),
        }
    }

    /// True when every stored exponent is a multiple of four, i.e. the
    /// polynomial is an honest Laurent polynomial in `t`.
    pub fn has_integral_t_exponents(&self) -> bool {
        self.terms.keys().all(|e| e % 4 == 0)
    }

    /// Coefficient of the highest / lowest term.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    pub fn trailing_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next()
    }

    /// True for the constant polynomial 1.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }
}

/// Turns a bracket into a Jones polynomial: multiply by `(-A)^(-3w)` then
/// substitute `A = t^(-1/4)`.
pub fn normalize_to_jones(bracket: &LaurentPoly, writhe: i64) -> Result<LaurentPoly, PolyError> {
    if bracket.var != Variable::A {
        return Err(PolyError::VariableMismatch { left: bracket.var, right: Variable::A });
    }
    let shift = -3 * writhe;
    let sign = if shift.rem_euclid(2) == 0 { BigInt::one() } else { -BigInt::one() };
    let mut out = LaurentPoly::zero(Variable::TQuarter);
    for (e, c) in &bracket.terms {
        out.add_term(-(e + shift), c * &sign);
    }
    if let Some(bad) = out.terms.keys().find(|e| *e % 4 != 0) {
        return Err(PolyError::NonIntegralExponent(*bad));
    }
    Ok(out)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl std::ops::$trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            /// Panics when the variables differ; use the `try_` form to get an error.
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$try(rhs).expect("polynomial variable mismatch")
            }
        }
        impl std::ops::$trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl std::ops::Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(&self)
    }
}

impl fmt::Display for LaurentPoly {
    /// Ascending exponents, e.g. `-A^-4 + 2 + A^4`. Jones polynomials print in
    /// `t`; exponents that are not whole print as `t^(5/4)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let sym = self.var.symbol();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            let mono = match self.var {
                Variable::A => monomial_text(sym, *e, 1),
                Variable::TQuarter => monomial_text(sym, *e, 4),
            };
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{mag}{mono}")?,
            }
        }
        Ok(())
    }
}

fn monomial_text(sym: char, exponent: i64, denom: i64) -> String {
    if exponent == 0 {
        return String::new();
    }
    if exponent % denom == 0 {
        let k = exponent / denom;
        if k == 1 {
            sym.to_string()
        } else {
            format!("{sym}^{k}")
        }
    } else {
        let g = num_integer::gcd(exponent.abs(), denom);
        format!("{sym}^({}/{})", exponent / g, denom / g)
    }
}

impl FromStr for LaurentPoly {
    type Err = PolyError;

    /// Parses the canonical rendering. The variable is inferred from the
    /// symbol (`A` or `t`); a pure constant parses as a bracket in `A`.
    fn from_str(s: &str) -> Result<Self, PolyError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(PolyError::Parse("empty polynomial".into()));
        }
        if compact == "0" {
            return Ok(LaurentPoly::zero(Variable::A));
        }
        let var = if compact.contains('t') {
            if compact.contains('A') {
                return Err(PolyError::Parse("mixed variables".into()));
            }
            Variable::TQuarter
        } else {
            Variable::A
        };
        let sym = var.symbol();
        let scale = if var == Variable::TQuarter { 4 } else { 1 };

        // Split into signed terms; a sign right after '^' or '(' belongs to an exponent.
        let bytes: Vec<char> = compact.chars().collect();
        let mut pieces = Vec::new();
        let mut start = 0;
        for i in 1..bytes.len() {
            if (bytes[i] == '+' || bytes[i] == '-') && bytes[i - 1] != '^' && bytes[i - 1] != '(' {
                pieces.push(bytes[start..i].iter().collect::<String>());
                start = i;
            }
        }
        pieces.push(bytes[start..].iter().collect::<String>());

        let mut p = LaurentPoly::zero(var);
        for piece in pieces {
            let (negative, body) = match piece.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, piece.strip_prefix('+').unwrap_or(&piece)),
            };
            let bad = || PolyError::Parse(format!("bad term `{piece}`"));
            let (coeff_txt, mono) = match body.find(sym) {
                Some(pos) => (&body[..pos], Some(&body[pos + 1..])),
                None => (body, None),
            };
            let coeff_txt = coeff_txt.strip_suffix('*').unwrap_or(coeff_txt);
            let mut coeff: BigInt = if coeff_txt.is_empty() {
                if mono.is_none() {
                    return Err(bad());
                }
                BigInt::one()
            } else {
                coeff_txt.parse().map_err(|_| bad())?
            };
            if negative {
                coeff = -coeff;
            }
            let exponent = match mono {
                None => 0,
                Some("") => scale,
                Some(rest) => {
                    let rest = rest.strip_prefix('^').ok_or_else(bad)?;
                    let rest = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
                    match rest.split_once('/') {
                        Some((num, den)) => {
                            let num: i64 = num.parse().map_err(|_| bad())?;
                            let den: i64 = den.parse().map_err(|_| bad())?;
                            if den == 0 || (num * scale) % den != 0 {
                                return Err(bad());
                            }
                            num * scale / den
                        }
                        None => rest.parse::<i64>().map_err(|_| bad())? * scale,
                    }
                }
            };
            p.add_term(exponent, coeff);
        }
        Ok(p)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        // A bare constant would lose its variable, so tag Jones constants.
        let text = self.to_string();
        if self.var == Variable::TQuarter && !text.contains('t') {
            serializer.serialize_str(&format!("{text} + 0t"))
        } else {
            serializer.serialize_str(&text)
        }
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Variable::A, terms.iter().copied())
    }

    #[test]
    fn addition_cancels() {
        let p = a(&[(2, 1), (-2, 1)]);
        let q = a(&[(-2, -1)]);
        assert_eq!(&p + &q, a(&[(2, 1)]));
    }

    #[test]
    fn loop_factor_squared() {
        let d = LaurentPoly::loop_factor();
        assert_eq!(&d * &d, a(&[(4, 1), (0, 2), (-4, 1)]));
    }

    #[test]
    fn mono_mul_shifts() {
        assert_eq!(LaurentPoly::one(Variable::A).mono_mul(-3), a(&[(-3, 1)]));
    }

    #[test]
    fn span_and_degrees() {
        let p = a(&[(4, 1), (-4, 1)]);
        assert_eq!(p.span().unwrap(), 8);
        assert_eq!(p.max_deg().unwrap(), 4);
        assert_eq!(p.min_deg().unwrap(), -4);
        assert_eq!(LaurentPoly::one(Variable::A).coeff_at(0), BigInt::one());
        assert_eq!(LaurentPoly::zero(Variable::A).span(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn mismatched_variables_error() {
        let p = LaurentPoly::one(Variable::A);
        let q = LaurentPoly::one(Variable::TQuarter);
        assert!(matches!(p.try_add(&q), Err(PolyError::VariableMismatch { .. })));
        assert!(matches!(p.try_mul(&q), Err(PolyError::VariableMismatch { .. })));
    }

    #[test]
    fn normalization_of_trivial_cases() {
        let one = LaurentPoly::one(Variable::A);
        assert!(normalize_to_jones(&one, 0).unwrap().is_one());
        // A positive kink has bracket -A^3 and writhe +1.
        let kink = a(&[(3, -1)]);
        assert!(normalize_to_jones(&kink, 1).unwrap().is_one());
        assert!(matches!(normalize_to_jones(&a(&[(1, 1)]), 0), Err(PolyError::NonIntegralExponent(_))));
    }

    #[test]
    fn rendering() {
        assert_eq!(a(&[(-4, -1), (0, 2), (4, 1)]).to_string(), "-A^-4 + 2 + A^4");
        let j = LaurentPoly::from_terms(Variable::TQuarter, [(4, 1), (12, 1), (16, -1)]);
        assert_eq!(j.to_string(), "t + t^3 - t^4");
        assert_eq!(LaurentPoly::from_terms(Variable::TQuarter, [(5, 3)]).to_string(), "3t^(5/4)");
        assert_eq!(LaurentPoly::zero(Variable::A).to_string(), "0");
    }

    #[test]
    fn parsing_round_trips_examples() {
        for text in ["-A^-4 + 2 + A^4", "t + t^3 - t^4", "-t^-5 + 2t^-2 - t", "3t^(5/4)", "A", "-7", "12A^-30"] {
            let p: LaurentPoly = text.parse().unwrap();
            assert_eq!(p.to_string(), text);
        }
        assert!("A^".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("A + t".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn serde_keeps_jones_constants_in_t() {
        let one = LaurentPoly::one(Variable::TQuarter);
        let json = serde_json::to_string(&one).unwrap();
        let back: LaurentPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, one);
    }

    fn poly_strategy() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-8i64..8, -5i64..5), 0..6).prop_map(|t| LaurentPoly::from_terms(Variable::A, t))
    }

    proptest! {
        #[test]
        fn ring_axioms(p in poly_strategy(), q in poly_strategy(), r in poly_strategy()) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn display_parse_round_trip(p in poly_strategy()) {
            let back: LaurentPoly = p.to_string().parse().unwrap();
            prop_assert_eq!(back.terms().collect::<Vec<_>>(), p.terms().collect::<Vec<_>>());
        }
    }
}
