//! Positive roots per kind, coroot pairings, and the dot reflection.

use num_bigint::BigInt;
use num_traits::Zero;

use super::weight::{rat_i64, Rat, Weight};
use super::RootSystemKind;
use crate::error::{Error, Result};

/// Shape of a positive root in ε-coordinates. Indices satisfy 1 ≤ i < j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootShape {
    /// ε_j − ε_i
    JMinusI { i: u32, j: u32 },
    /// ε_j + ε_i
    JPlusI { i: u32, j: u32 },
    /// ε_i (kind B only)
    Short { i: u32 },
    /// 2ε_i (kind C only)
    Long { i: u32 },
}

/// A positive root of a fixed kind. Construction validates shape legality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    kind: RootSystemKind,
    shape: RootShape,
}

impl Root {
    pub fn new(kind: RootSystemKind, shape: RootShape) -> Result<Root> {
        let ok = match shape {
            RootShape::JMinusI { i, j } => i >= 1 && i < j,
            RootShape::JPlusI { i, j } => i >= 1 && i < j && kind != RootSystemKind::AInf,
            RootShape::Short { i } => i >= 1 && kind == RootSystemKind::BInf,
            RootShape::Long { i } => i >= 1 && kind == RootSystemKind::CInf,
        };
        if ok {
            Ok(Root { kind, shape })
        } else {
            Err(Error::IllegalRootShape)
        }
    }

    /// The k-th simple root of the kind (k ≥ 1).
    pub fn simple(kind: RootSystemKind, k: u32) -> Result<Root> {
        if k == 0 {
            return Err(Error::BadGenerator("generator indices start at 1".into()));
        }
        let shape = match (kind, k) {
            (RootSystemKind::AInf, k) => RootShape::JMinusI { i: k, j: k + 1 },
            (RootSystemKind::BInf, 1) => RootShape::Short { i: 1 },
            (RootSystemKind::CInf, 1) => RootShape::Long { i: 1 },
            (RootSystemKind::DInf, 1) => RootShape::JPlusI { i: 1, j: 2 },
            (_, k) => RootShape::JMinusI { i: k - 1, j: k },
        };
        Root::new(kind, shape)
    }

    pub fn kind(&self) -> RootSystemKind {
        self.kind
    }

    pub fn shape(&self) -> RootShape {
        self.shape
    }

    /// ε-coordinates of the root as (index, coefficient) pairs.
    pub fn coords(&self) -> Vec<(u32, i64)> {
        match self.shape {
            RootShape::JMinusI { i, j } => vec![(i, -1), (j, 1)],
            RootShape::JPlusI { i, j } => vec![(i, 1), (j, 1)],
            RootShape::Short { i } => vec![(i, 1)],
            RootShape::Long { i } => vec![(i, 2)],
        }
    }

    /// Largest ε-index the root touches.
    pub fn max_index(&self) -> u32 {
        match self.shape {
            RootShape::JMinusI { j, .. } | RootShape::JPlusI { j, .. } => j,
            RootShape::Short { i } | RootShape::Long { i } => i,
        }
    }
}

fn check_kind(lambda: &Weight, alpha: &Root) -> Result<()> {
    if lambda.kind() == alpha.kind() {
        Ok(())
    } else {
        Err(Error::IllegalRootShape)
    }
}

/// ⟨λ, α∨⟩ in exact rational arithmetic.
pub fn pairing(lambda: &Weight, alpha: &Root) -> Result<Rat> {
    check_kind(lambda, alpha)?;
    Ok(pairing_of(|i| lambda.coord(i), alpha))
}

/// ⟨ρ, α∨⟩ for the canonical ρ of the kind. Positive on every positive root.
pub fn rho_pairing(kind: RootSystemKind, alpha: &Root) -> Result<Rat> {
    if kind != alpha.kind() {
        return Err(Error::IllegalRootShape);
    }
    Ok(pairing_of(|i| Weight::rho_coord(kind, i), alpha))
}

/// ⟨λ + ρ, α∨⟩.
pub fn shifted_pairing(lambda: &Weight, alpha: &Root) -> Result<Rat> {
    check_kind(lambda, alpha)?;
    Ok(pairing_of(|i| lambda.shifted_coord(i), alpha))
}

fn pairing_of(coord: impl Fn(u32) -> Rat, alpha: &Root) -> Rat {
    match alpha.shape() {
        RootShape::JMinusI { i, j } => coord(j) - coord(i),
        RootShape::JPlusI { i, j } => coord(j) + coord(i),
        RootShape::Short { i } => coord(i) * rat_i64(2),
        RootShape::Long { i } => coord(i),
    }
}

/// The dot reflection s_α · λ = λ − ⟨λ+ρ, α∨⟩ α.
pub fn reflect_dot(lambda: &Weight, alpha: &Root) -> Result<Weight> {
    let c = shifted_pairing(lambda, alpha)?;
    if c.is_zero() {
        return Ok(lambda.clone());
    }
    let changes: Vec<(u32, Rat)> = alpha
        .coords()
        .into_iter()
        .map(|(i, coeff)| (i, lambda.coord(i) - &c * rat_i64(coeff)))
        .collect();
    Ok(lambda.with_coords(&changes))
}

/// All positive roots of the rank-`n` truncation, in a deterministic order.
pub fn positive_roots_up_to(kind: RootSystemKind, n: u32) -> Vec<Root> {
    let mut out = Vec::new();
    match kind {
        RootSystemKind::BInf => {
            for i in 1..=n {
                out.push(Root::new(kind, RootShape::Short { i }).unwrap());
            }
        }
        RootSystemKind::CInf => {
            for i in 1..=n {
                out.push(Root::new(kind, RootShape::Long { i }).unwrap());
            }
        }
        _ => {}
    }
    for j in 2..=n {
        for i in 1..j {
            out.push(Root::new(kind, RootShape::JMinusI { i, j }).unwrap());
            if kind != RootSystemKind::AInf {
                out.push(Root::new(kind, RootShape::JPlusI { i, j }).unwrap());
            }
        }
    }
    out
}

/// Positive roots α with simple-root coordinates dominated componentwise by
/// `c`: exactly the roots that can occur in a decomposition of the lattice
/// element with those coordinates.
pub fn roots_under(kind: RootSystemKind, c: &[BigInt]) -> Vec<Root> {
    // a root whose simple coordinates live in the window can still touch one
    // ε-index beyond it (kind A always, kind D through ε_2 ± ε_1)
    let max_idx = c.len() as u32 + 1;
    positive_roots_up_to(kind, max_idx)
        .into_iter()
        .filter(|alpha| {
            let ac = super::lattice::root_simple_coords(alpha);
            ac.len() <= c.len() && ac.iter().zip(c.iter()).all(|(a, b)| a <= b)
        })
        .collect()
}
