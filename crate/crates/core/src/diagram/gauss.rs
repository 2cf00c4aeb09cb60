use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::DiagramError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Passage {
    Over,
    Under,
}

/// Cyclic sequence of crossing passages along a knot. Crossings are named
/// by their 1-based index in the PD record list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussCode {
    passages: Vec<(u32, Passage)>,
}

impl GaussCode {
    pub fn new(passages: Vec<(u32, Passage)>) -> Self {
        GaussCode { passages }
    }

    pub fn passages(&self) -> &[(u32, Passage)] {
        &self.passages
    }

    pub fn len(&self) -> usize {
        self.passages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.passages.is_empty()
    }

    /// Every crossing must appear exactly once over and once under.
    pub fn validate(&self) -> Result<(), DiagramError> {
        let mut seen: BTreeMap<u32, (usize, usize)> = BTreeMap::new();
        for (x, p) in &self.passages {
            let e = seen.entry(*x).or_default();
            match p {
                Passage::Over => e.0 += 1,
                Passage::Under => e.1 += 1,
            }
        }
        match seen.iter().find(|(_, c)| **c != (1, 1)) {
            Some((x, _)) => Err(DiagramError::Malformed(format!("crossing {x} in Gauss code"))),
            None => Ok(()),
        }
    }

    fn cyclic_pairs(&self, p: Passage) -> usize {
        let n = self.passages.len();
        (0..n).filter(|i| self.passages[*i].1 == p && self.passages[(i + 1) % n].1 == p).count()
    }

    /// Consecutive over-over pairs, counted cyclically.
    pub fn o_length(&self) -> usize {
        self.cyclic_pairs(Passage::Over)
    }

    pub fn u_length(&self) -> usize {
        self.cyclic_pairs(Passage::Under)
    }

    pub fn is_alternating(&self) -> bool {
        self.o_length() == 0 && self.u_length() == 0
    }

    /// Number of maximal cyclic runs of over-passages.
    pub fn overpass_count(&self) -> usize {
        let n = self.passages.len();
        (0..n)
            .filter(|i| self.passages[*i].1 == Passage::Over && self.passages[(i + n - 1) % n].1 == Passage::Under)
            .count()
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .passages
            .iter()
            .map(|(x, p)| format!("{}{}", if *p == Passage::Over { 'O' } else { 'U' }, x))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for GaussCode {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let passages = s
            .split_whitespace()
            .map(|tok| {
                let (head, num) = tok.split_at(1);
                let p = match head {
                    "O" | "o" => Passage::Over,
                    "U" | "u" => Passage::Under,
                    _ => return Err(DiagramError::Malformed(tok.to_string())),
                };
                let x = num.parse::<u32>().map_err(|_| DiagramError::Malformed(tok.to_string()))?;
                Ok((x, p))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let g = GaussCode { passages };
        g.validate()?;
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_counts() {
        let g: GaussCode = "O1 U2 O3 U1 O2 U3".parse().unwrap();
        assert_eq!(g.to_string(), "O1 U2 O3 U1 O2 U3");
        assert!(g.is_alternating());
        assert_eq!(g.overpass_count(), 3);
        let h: GaussCode = "O1 O2 U1 U2".parse().unwrap();
        assert_eq!(h.o_length(), 1);
        assert_eq!(h.u_length(), 1);
        assert_eq!(h.overpass_count(), 1);
        // Over-run wrapping around the end.
        let w: GaussCode = "O1 U1 U2 O2".parse().unwrap();
        assert_eq!(w.o_length(), 1);
        assert_eq!(w.overpass_count(), 1);
    }

    #[test]
    fn rejects_invalid() {
        assert!("O1 O1".parse::<GaussCode>().is_err());
        assert!("X1 U1".parse::<GaussCode>().is_err());
        assert!("O1 U2".parse::<GaussCode>().is_err());
    }
}
