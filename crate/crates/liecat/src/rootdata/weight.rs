//! Weights: rational ε-coordinate sequences with a finite prefix and a tail
//! rule, so that predicates quantifying over all of h* stay decidable.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::RootSystemKind;

pub(crate) type Rat = BigRational;

pub(crate) fn rat_i64(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Coordinate rule for all indices beyond the explicit prefix.
///
/// `Linear { a, b }` means λ_i = a + b·i there; `Zero` is the common case
/// λ_i = 0. `Linear` with a = b = 0 canonicalizes to `Zero`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tail {
    Zero,
    Linear { a: Rat, b: Rat },
}

impl Tail {
    pub(crate) fn coeffs(&self) -> (Rat, Rat) {
        match self {
            Tail::Zero => (Rat::zero(), Rat::zero()),
            Tail::Linear { a, b } => (a.clone(), b.clone()),
        }
    }

    fn value_at(&self, i: u32) -> Rat {
        match self {
            Tail::Zero => Rat::zero(),
            Tail::Linear { a, b } => a + b * rat_i64(i as i64),
        }
    }
}

/// A weight in the ε-basis: an explicit rational prefix plus a tail rule.
///
/// Weights are canonicalized on construction (trailing prefix entries that
/// match the tail are trimmed, and a zero linear tail becomes `Tail::Zero`),
/// so equality and hashing agree with equality of coordinate functions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    kind: RootSystemKind,
    prefix: Vec<Rat>,
    tail: Tail,
}

impl Weight {
    pub fn new(kind: RootSystemKind, mut prefix: Vec<Rat>, tail: Tail) -> Weight {
        let tail = match tail {
            Tail::Linear { a, b } if a.is_zero() && b.is_zero() => Tail::Zero,
            t => t,
        };
        while let Some(last) = prefix.last() {
            let i = prefix.len() as u32;
            if *last == tail.value_at(i) {
                prefix.pop();
            } else {
                break;
            }
        }
        Weight { kind, prefix, tail }
    }

    pub fn zero(kind: RootSystemKind) -> Weight {
        Weight { kind, prefix: Vec::new(), tail: Tail::Zero }
    }

    pub fn from_ints(kind: RootSystemKind, coords: &[i64]) -> Weight {
        Weight::new(kind, coords.iter().map(|&c| rat_i64(c)).collect(), Tail::Zero)
    }

    pub fn kind(&self) -> RootSystemKind {
        self.kind
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    /// Length of the canonical explicit prefix.
    pub fn prefix_len(&self) -> u32 {
        self.prefix.len() as u32
    }

    pub fn prefix(&self) -> &[Rat] {
        &self.prefix
    }

    /// Coordinate λ_i (1-indexed).
    pub fn coord(&self, i: u32) -> Rat {
        assert!(i >= 1, "coordinates are 1-indexed");
        match self.prefix.get((i - 1) as usize) {
            Some(c) => c.clone(),
            None => self.tail.value_at(i),
        }
    }

    /// The canonical ρ-coordinate: ρ_i = i (A, C), i − 1/2 (B), i − 1 (D).
    /// These are exactly the vectors with ⟨ρ, α∨⟩ = 1 on every simple root.
    pub fn rho_coord(kind: RootSystemKind, i: u32) -> Rat {
        let base = rat_i64(i as i64);
        match kind {
            RootSystemKind::AInf | RootSystemKind::CInf => base,
            RootSystemKind::BInf => base - Rat::new(BigInt::one(), BigInt::from(2)),
            RootSystemKind::DInf => base - Rat::one(),
        }
    }

    /// (λ + ρ)_i.
    pub fn shifted_coord(&self, i: u32) -> Rat {
        self.coord(i) + Weight::rho_coord(self.kind, i)
    }

    /// Copy of the weight with finitely many coordinates replaced.
    pub(crate) fn with_coords(&self, changes: &[(u32, Rat)]) -> Weight {
        let max_idx = changes.iter().map(|&(i, _)| i).max().unwrap_or(0);
        let len = (self.prefix.len() as u32).max(max_idx);
        let mut coords: Vec<Rat> = (1..=len).map(|i| self.coord(i)).collect();
        for (i, v) in changes {
            coords[(*i - 1) as usize] = v.clone();
        }
        Weight::new(self.kind, coords, self.tail.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalization_trims_prefix_matching_tail() {
        // (1, -2, 0, 0) with zero tail is the same function as (1, -2).
        let w1 = Weight::from_ints(RootSystemKind::AInf, &[1, -2, 0, 0]);
        let w2 = Weight::from_ints(RootSystemKind::AInf, &[1, -2]);
        assert_eq!(w1, w2);
        assert_eq!(w1.prefix_len(), 2);

        // A linear tail written out explicitly collapses too.
        let lin = Tail::Linear { a: rat_i64(0), b: rat_i64(-2) };
        let w3 = Weight::new(
            RootSystemKind::AInf,
            vec![rat_i64(-2), rat_i64(-4), rat_i64(-6)],
            lin.clone(),
        );
        let w4 = Weight::new(RootSystemKind::AInf, vec![], lin);
        assert_eq!(w3, w4);
        assert_eq!(w3.coord(5), rat_i64(-10));
    }

    #[test]
    fn zero_linear_tail_is_zero_tail() {
        let w = Weight::new(
            RootSystemKind::BInf,
            vec![],
            Tail::Linear { a: rat_i64(0), b: rat_i64(0) },
        );
        assert_eq!(*w.tail(), Tail::Zero);
    }

    #[test]
    fn rho_pairs_to_one_on_simple_roots() {
        use crate::rootdata::{rho_pairing, Root};
        for kind in RootSystemKind::ALL {
            for k in 1..=8 {
                let alpha = Root::simple(kind, k).unwrap();
                assert_eq!(rho_pairing(kind, &alpha).unwrap(), rat_i64(1), "{kind:?} alpha_{k}");
            }
        }
    }
}
