//! Text grammar for weights and roots, used by the CLI and the tests.
//!
//! ```text
//! weight   := KIND '[' coords? (';' tail)? ']'
//! KIND     := 'A' | 'B' | 'C' | 'D'
//! coords   := rational (',' rational)*
//! rational := ['-'] digits ['/' digits]
//! tail     := 'zero' | 'lin(' rational ',' rational ')'
//! root     := 'e' j '-' 'e' i | 'e' j '+' 'e' i | 'e' i | '2e' i
//! ```
//!
//! Examples: `A[1,-1]`, `B[3/2,1;zero]`, `A[;lin(0,-2)]`, `e3-e1`, `2e4`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::weight::{Rat, Tail, Weight};
use super::{Root, RootShape, RootSystemKind};
use crate::error::{Error, Result};

pub(crate) fn parse_rational(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational '{s}'"));
    if s.is_empty() {
        return Err(bad());
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer = BigInt::from_str(num_str.trim()).map_err(|_| bad())?;
    let denom = match den_str {
        Some(d) => BigInt::from_str(d.trim()).map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() || denom < BigInt::zero() {
        return Err(bad());
    }
    Ok(Rat::new(numer, denom))
}

pub(crate) fn format_rational(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.kind().letter())?;
        let coords: Vec<String> = self.prefix().iter().map(format_rational).collect();
        write!(f, "{}", coords.join(","))?;
        if let Tail::Linear { a, b } = self.tail() {
            write!(f, ";lin({},{})", format_rational(a), format_rational(b))?;
        }
        write!(f, "]")
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Weight> {
        let s = s.trim();
        let mut chars = s.chars();
        let kind_char = chars.next().ok_or_else(|| Error::Parse("empty weight".into()))?;
        let kind = RootSystemKind::from_letter(kind_char)?;
        let rest: String = chars.collect();
        let body = rest
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("weight '{s}' is missing brackets")))?;
        let (coord_part, tail_part) = match body.split_once(';') {
            Some((c, t)) => (c, Some(t)),
            None => (body, None),
        };
        let mut prefix = Vec::new();
        let coord_part = coord_part.trim();
        if !coord_part.is_empty() {
            for piece in coord_part.split(',') {
                prefix.push(parse_rational(piece)?);
            }
        }
        let tail = match tail_part.map(str::trim) {
            None | Some("zero") => Tail::Zero,
            Some(t) => {
                let inner = t
                    .strip_prefix("lin(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse(format!("invalid tail '{t}'")))?;
                let (a, b) = inner
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("invalid tail '{t}'")))?;
                Tail::Linear { a: parse_rational(a)?, b: parse_rational(b)? }
            }
        };
        Ok(Weight::new(kind, prefix, tail))
    }
}

impl Root {
    /// Parses the root grammar for a fixed kind (the grammar itself does not
    /// carry the kind).
    pub fn parse(kind: RootSystemKind, s: &str) -> Result<Root> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid root '{s}'"));
        let parse_idx = |t: &str| -> Result<u32> {
            t.parse::<u32>().map_err(|_| bad()).and_then(|i| {
                if i >= 1 {
                    Ok(i)
                } else {
                    Err(bad())
                }
            })
        };
        if let Some(rest) = s.strip_prefix("2e") {
            let i = parse_idx(rest)?;
            return Root::new(kind, RootShape::Long { i });
        }
        let rest = s.strip_prefix('e').ok_or_else(bad)?;
        if let Some((j_str, i_part)) = rest.split_once('-') {
            let j = parse_idx(j_str)?;
            let i = parse_idx(i_part.strip_prefix('e').ok_or_else(bad)?)?;
            if i >= j {
                return Err(Error::IllegalRootShape);
            }
            return Root::new(kind, RootShape::JMinusI { i, j });
        }
        if let Some((j_str, i_part)) = rest.split_once('+') {
            let j = parse_idx(j_str)?;
            let i = parse_idx(i_part.strip_prefix('e').ok_or_else(bad)?)?;
            if i >= j {
                return Err(Error::IllegalRootShape);
            }
            return Root::new(kind, RootShape::JPlusI { i, j });
        }
        let i = parse_idx(rest)?;
        Root::new(kind, RootShape::Short { i })
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shape() {
            RootShape::JMinusI { i, j } => write!(f, "e{j}-e{i}"),
            RootShape::JPlusI { i, j } => write!(f, "e{j}+e{i}"),
            RootShape::Short { i } => write!(f, "e{i}"),
            RootShape::Long { i } => write!(f, "2e{i}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_grammar_round_trips() {
        for text in ["A[1,-1]", "B[3/2,1]", "A[;lin(0,-2)]", "D[]", "C[5/3,-1/2;lin(1,-1)]"] {
            let w: Weight = text.parse().unwrap();
            let printed = w.to_string();
            let reparsed: Weight = printed.parse().unwrap();
            assert_eq!(w, reparsed, "{text} -> {printed}");
        }
    }

    #[test]
    fn tail_spelling_variants() {
        let w1: Weight = "B[3/2,1;zero]".parse().unwrap();
        let w2: Weight = "B[3/2,1]".parse().unwrap();
        assert_eq!(w1, w2);
        // an explicit lin(0,0) canonicalizes to the zero tail
        let w3: Weight = "B[3/2,1;lin(0,0)]".parse().unwrap();
        assert_eq!(w1, w3);
    }

    #[test]
    fn bad_weights_are_rejected() {
        assert!("Z[0]".parse::<Weight>().is_err());
        assert!("A[1".parse::<Weight>().is_err());
        assert!("A[1/0]".parse::<Weight>().is_err());
        assert!("A[;lin(1)]".parse::<Weight>().is_err());
    }

    #[test]
    fn root_grammar_round_trips() {
        let cases = [
            (RootSystemKind::AInf, "e3-e1"),
            (RootSystemKind::BInf, "e2+e1"),
            (RootSystemKind::BInf, "e1"),
            (RootSystemKind::CInf, "2e4"),
        ];
        for (kind, text) in cases {
            let r = Root::parse(kind, text).unwrap();
            assert_eq!(r.to_string(), text);
        }
        assert!(Root::parse(RootSystemKind::AInf, "e1+e2").is_err());
        assert!(Root::parse(RootSystemKind::AInf, "e1").is_err());
        assert!(Root::parse(RootSystemKind::DInf, "2e1").is_err());
    }
}
