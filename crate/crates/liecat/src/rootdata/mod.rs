//! Exact arithmetic for weights, roots, the partial order on weights, finite
//! order intervals, and Kostant partition counts for the four one-sided
//! infinite root systems and their finite-rank truncations.
//!
//! Coordinates are always ε-basis coordinates indexed from 1. Simple roots
//! are numbered so that rank grows by appending indices:
//!
//! * `A`: α_k = ε_{k+1} − ε_k  (k ≥ 1)
//! * `B`: α_1 = ε_1, α_k = ε_k − ε_{k−1}  (k ≥ 2)
//! * `C`: α_1 = 2ε_1, α_k = ε_k − ε_{k−1}  (k ≥ 2)
//! * `D`: α_1 = ε_1 + ε_2, α_k = ε_k − ε_{k−1}  (k ≥ 2)

mod grammar;
mod kostant;
mod lattice;
mod root;
mod weight;

pub use kostant::kostant_partition;
pub use lattice::{
    add_lattice, interval, lattice_diff, leq, weight_diff, LatticeElement, WeightInterval,
};
pub use root::{
    pairing, positive_roots_up_to, reflect_dot, rho_pairing, roots_under, shifted_pairing, Root,
    RootShape,
};
pub use weight::{Tail, Weight};

pub(crate) use weight::Rat;

#[cfg(test)]
pub(crate) use weight::rat_i64;

use crate::error::{Error, Result};

/// The four one-sided infinite Dynkin diagrams and their finite truncations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootSystemKind {
    AInf,
    BInf,
    CInf,
    DInf,
}

impl RootSystemKind {
    pub const ALL: [RootSystemKind; 4] = [
        RootSystemKind::AInf,
        RootSystemKind::BInf,
        RootSystemKind::CInf,
        RootSystemKind::DInf,
    ];

    pub fn letter(self) -> char {
        match self {
            RootSystemKind::AInf => 'A',
            RootSystemKind::BInf => 'B',
            RootSystemKind::CInf => 'C',
            RootSystemKind::DInf => 'D',
        }
    }

    pub fn from_letter(c: char) -> Result<Self> {
        match c {
            'A' => Ok(RootSystemKind::AInf),
            'B' => Ok(RootSystemKind::BInf),
            'C' => Ok(RootSystemKind::CInf),
            'D' => Ok(RootSystemKind::DInf),
            other => Err(Error::Parse(format!("unknown root-system kind '{other}'"))),
        }
    }

    /// Smallest rank at which the kind has a well-formed truncation.
    pub fn min_rank(self) -> u32 {
        match self {
            RootSystemKind::DInf => 2,
            _ => 1,
        }
    }

    /// Number of simple generators available in the rank-`n` truncation.
    /// For `A` the rank-`n` group is the symmetric group on `n` letters.
    pub fn generator_count(self, n: u32) -> u32 {
        match self {
            RootSystemKind::AInf => n.saturating_sub(1),
            _ => n,
        }
    }

    /// Number of positive roots of the rank-`n` truncation.
    pub fn positive_root_count(self, n: u32) -> u64 {
        let n = n as u64;
        match self {
            RootSystemKind::AInf => n * (n - 1) / 2,
            RootSystemKind::BInf | RootSystemKind::CInf => n * n,
            RootSystemKind::DInf => n * (n - 1),
        }
    }
}

impl std::fmt::Display for RootSystemKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.letter())
    }
}
