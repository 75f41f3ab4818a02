//! The root lattice, the partial order λ ⪯ μ iff μ−λ is a nonnegative
//! integer combination of simple roots, and finite order intervals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::root::Root;
use super::weight::{Rat, Weight};
use super::RootSystemKind;
use crate::error::{Error, Result};

/// A finitely supported integer vector in ε-coordinates, living in the
/// ℤ-span of the roots of its kind.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeElement {
    kind: RootSystemKind,
    coords: Vec<BigInt>,
}

impl LatticeElement {
    /// Builds a lattice element from dense integer ε-coordinates, verifying
    /// membership in the ℤ-span of the roots (A: zero coordinate sum;
    /// C and D: even coordinate sum; B: no constraint).
    pub fn new(kind: RootSystemKind, mut coords: Vec<BigInt>) -> Result<LatticeElement> {
        while coords.last().map(|c| c.is_zero()).unwrap_or(false) {
            coords.pop();
        }
        let sum: BigInt = coords.iter().sum();
        let in_span = match kind {
            RootSystemKind::AInf => sum.is_zero(),
            RootSystemKind::BInf => true,
            RootSystemKind::CInf | RootSystemKind::DInf => sum.is_even(),
        };
        if in_span {
            Ok(LatticeElement { kind, coords })
        } else {
            Err(Error::Parse(format!(
                "coordinates are not in the {} root lattice",
                kind.letter()
            )))
        }
    }

    pub fn from_ints(kind: RootSystemKind, coords: &[i64]) -> Result<LatticeElement> {
        LatticeElement::new(kind, coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The lattice element of a single positive root.
    pub fn from_root(alpha: &Root) -> LatticeElement {
        let mut coords = vec![BigInt::zero(); alpha.max_index() as usize];
        for (i, c) in alpha.coords() {
            coords[(i - 1) as usize] = BigInt::from(c);
        }
        LatticeElement { kind: alpha.kind(), coords }
    }

    pub fn kind(&self) -> RootSystemKind {
        self.kind
    }

    /// Dense ε-coordinates with trailing zeros trimmed.
    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coord(&self, i: u32) -> BigInt {
        self.coords.get((i - 1) as usize).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coordinates in the simple-root basis, via the closed-form inversion
    /// of the change of basis. Entries may be negative; positivity is what
    /// the partial order asks about.
    ///
    /// Closed forms for β in ε-coordinates (β_i = 0 beyond the support):
    /// * A: c_k = −Σ_{i≤k} β_i
    /// * B: c_k = Σ_{i≥k} β_i
    /// * C: c_1 = (Σ_i β_i)/2, c_k = Σ_{i≥k} β_i (k ≥ 2)
    /// * D: c_1 = (Σ_i β_i)/2, c_2 = c_1 − β_1, c_k = Σ_{i≥k} β_i (k ≥ 3)
    pub fn simple_coords(&self) -> Vec<BigInt> {
        let n = self.coords.len();
        match self.kind {
            RootSystemKind::AInf => {
                // c has one entry per simple root touched: k = 1..n-1.
                let mut out = Vec::with_capacity(n.saturating_sub(1));
                let mut acc = BigInt::zero();
                for k in 0..n.saturating_sub(1) {
                    acc += &self.coords[k];
                    out.push(-acc.clone());
                }
                trim(out)
            }
            RootSystemKind::BInf => {
                let mut out = vec![BigInt::zero(); n];
                let mut acc = BigInt::zero();
                for k in (0..n).rev() {
                    acc += &self.coords[k];
                    out[k] = acc.clone();
                }
                trim(out)
            }
            RootSystemKind::CInf | RootSystemKind::DInf => {
                let mut out = vec![BigInt::zero(); n.max(1)];
                let mut tail_sums = vec![BigInt::zero(); n + 1];
                for k in (0..n).rev() {
                    tail_sums[k] = &tail_sums[k + 1] + &self.coords[k];
                }
                let total = tail_sums.first().cloned().unwrap_or_else(BigInt::zero);
                out[0] = total / 2; // lattice membership guarantees evenness
                if self.kind == RootSystemKind::CInf {
                    for k in 1..n {
                        out[k] = tail_sums[k].clone();
                    }
                } else {
                    if n >= 2 || !out[0].is_zero() {
                        if out.len() < 2 {
                            out.resize(2, BigInt::zero());
                        }
                        out[1] = &out[0] - self.coords.first().cloned().unwrap_or_else(BigInt::zero);
                    }
                    for k in 2..n {
                        out[k] = tail_sums[k].clone();
                    }
                }
                trim(out)
            }
        }
    }

    /// True iff the element is a ℤ≥0-combination of simple roots.
    pub fn is_dominant_sum(&self) -> bool {
        self.simple_coords().iter().all(|c| !c.is_negative())
    }

    pub fn checked_sub(&self, other: &LatticeElement) -> LatticeElement {
        debug_assert_eq!(self.kind, other.kind);
        let n = self.coords.len().max(other.coords.len());
        let coords = (1..=n as u32).map(|i| self.coord(i) - other.coord(i)).collect();
        LatticeElement::new(self.kind, coords).expect("lattice is closed under subtraction")
    }
}

/// Simple-root coordinates of a positive root.
pub(crate) fn root_simple_coords(alpha: &Root) -> Vec<BigInt> {
    LatticeElement::from_root(alpha).simple_coords()
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

/// μ − λ as a rational coordinate vector; errors if the two weights are not
/// comparable by construction (different kinds or tail rules).
pub fn weight_diff(mu: &Weight, lambda: &Weight) -> Result<Vec<Rat>> {
    if mu.kind() != lambda.kind() {
        return Err(Error::KindMismatch);
    }
    if mu.tail() != lambda.tail() {
        return Err(Error::TailMismatch);
    }
    let n = mu.prefix_len().max(lambda.prefix_len());
    Ok((1..=n).map(|i| mu.coord(i) - lambda.coord(i)).collect())
}

fn integer_diff(mu: &Weight, lambda: &Weight) -> Result<Option<Vec<BigInt>>> {
    let diff = weight_diff(mu, lambda)?;
    if diff.iter().all(|d| d.is_integer()) {
        Ok(Some(diff.into_iter().map(|d| d.to_integer()).collect()))
    } else {
        Ok(None)
    }
}

/// μ − λ as a lattice element, when it is one.
pub fn lattice_diff(mu: &Weight, lambda: &Weight) -> Result<Option<LatticeElement>> {
    match integer_diff(mu, lambda)? {
        None => Ok(None),
        Some(coords) => Ok(LatticeElement::new(mu.kind(), coords).ok()),
    }
}

/// λ ⪯ μ: μ − λ is a ℤ≥0-combination of simple roots.
pub fn leq(lambda: &Weight, mu: &Weight) -> Result<bool> {
    match lattice_diff(mu, lambda)? {
        None => Ok(false),
        Some(beta) => Ok(beta.is_dominant_sum()),
    }
}

/// The finite interval {μ : λ ⪯ μ ⪯ ν} together with its bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightInterval {
    pub lo: Weight,
    pub hi: Weight,
    pub members: Vec<Weight>,
}

impl WeightInterval {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.members.contains(w)
    }
}

/// Enumerates the interval {μ : λ ⪯ μ ⪯ ν} by walking all simple-root
/// coefficient vectors dominated by those of ν − λ. Members come back in a
/// deterministic order: by height (sum of simple coefficients), then by
/// coefficient vector.
pub fn interval(lambda: &Weight, nu: &Weight) -> Result<WeightInterval> {
    if !leq(lambda, nu)? {
        return Err(Error::NotComparable);
    }
    let beta = lattice_diff(nu, lambda)?.expect("leq checked");
    let c = beta.simple_coords();
    let mut vectors: Vec<Vec<BigInt>> = vec![Vec::new()];
    for bound in &c {
        let mut next = Vec::new();
        for v in &vectors {
            let mut t = BigInt::zero();
            while &t <= bound {
                let mut nv = v.clone();
                nv.push(t.clone());
                next.push(nv);
                t += 1;
            }
        }
        vectors = next;
    }
    vectors.sort_by_key(|v| (v.iter().sum::<BigInt>(), v.clone()));
    let members = vectors
        .into_iter()
        .map(|v| add_simple_combination(lambda, &v))
        .collect();
    Ok(WeightInterval { lo: lambda.clone(), hi: nu.clone(), members })
}

/// λ + Σ_k v_k α_k.
pub(crate) fn add_simple_combination(lambda: &Weight, v: &[BigInt]) -> Weight {
    let kind = lambda.kind();
    let mut eps: Vec<BigInt> = Vec::new();
    for (k, coeff) in v.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let alpha = Root::simple(kind, (k + 1) as u32).unwrap();
        for (i, c) in alpha.coords() {
            if eps.len() < i as usize {
                eps.resize(i as usize, BigInt::zero());
            }
            eps[(i - 1) as usize] += coeff * BigInt::from(c);
        }
    }
    let changes: Vec<(u32, Rat)> = eps
        .iter()
        .enumerate()
        .filter(|(_, d)| !d.is_zero())
        .map(|(idx, d)| {
            let i = (idx + 1) as u32;
            (i, lambda.coord(i) + Rat::from_integer(d.clone()))
        })
        .collect();
    lambda.with_coords(&changes)
}

/// Adds a lattice element to a weight.
pub fn add_lattice(lambda: &Weight, beta: &LatticeElement) -> Weight {
    debug_assert_eq!(lambda.kind(), beta.kind());
    let changes: Vec<(u32, Rat)> = beta
        .coords()
        .iter()
        .enumerate()
        .filter(|(_, d)| !d.is_zero())
        .map(|(idx, d)| {
            let i = (idx + 1) as u32;
            (i, lambda.coord(i) + Rat::from_integer(d.clone()))
        })
        .collect();
    lambda.with_coords(&changes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::weight::rat_i64;
    use crate::rootdata::Tail;

    fn a(coords: &[i64]) -> Weight {
        Weight::from_ints(RootSystemKind::AInf, coords)
    }

    #[test]
    fn leq_examples() {
        let zero = Weight::zero(RootSystemKind::AInf);
        let low = a(&[1, -1]);
        assert!(leq(&low, &zero).unwrap());
        assert!(!leq(&zero, &low).unwrap());

        let czero = Weight::zero(RootSystemKind::CInf);
        let ctwo = Weight::from_ints(RootSystemKind::CInf, &[2]);
        assert!(leq(&czero, &ctwo).unwrap());
    }

    #[test]
    fn leq_rejects_mismatched_tails() {
        let zero = Weight::zero(RootSystemKind::AInf);
        let lin = Weight::new(
            RootSystemKind::AInf,
            vec![],
            Tail::Linear { a: rat_i64(0), b: rat_i64(-2) },
        );
        assert_eq!(leq(&zero, &lin).unwrap_err(), Error::TailMismatch);

        let bzero = Weight::zero(RootSystemKind::BInf);
        assert_eq!(leq(&zero, &bzero).unwrap_err(), Error::KindMismatch);
    }

    #[test]
    fn non_integral_difference_is_not_comparable() {
        let zero = Weight::zero(RootSystemKind::AInf);
        let half = Weight::new(
            RootSystemKind::AInf,
            vec![Rat::new(BigInt::from(1), BigInt::from(2)), Rat::new(BigInt::from(-1), BigInt::from(2))],
            Tail::Zero,
        );
        assert!(!leq(&half, &zero).unwrap());
        assert!(!leq(&zero, &half).unwrap());
    }

    #[test]
    fn simple_coords_invert_the_basis_change() {
        // Every simple root must come back as a unit vector.
        for kind in RootSystemKind::ALL {
            for k in 1..=6u32 {
                let alpha = Root::simple(kind, k).unwrap();
                let c = LatticeElement::from_root(&alpha).simple_coords();
                let mut expected = vec![BigInt::zero(); k as usize];
                expected[(k - 1) as usize] = BigInt::from(1);
                assert_eq!(c, expected, "{kind:?} alpha_{k}");
            }
        }
        // And every positive root must be a nonnegative combination.
        for kind in RootSystemKind::ALL {
            for alpha in crate::rootdata::positive_roots_up_to(kind, 6) {
                assert!(
                    LatticeElement::from_root(&alpha).is_dominant_sum(),
                    "{kind:?} {alpha:?}"
                );
            }
        }
    }

    #[test]
    fn interval_examples() {
        let zero = Weight::zero(RootSystemKind::AInf);
        let single = interval(&zero, &zero).unwrap();
        assert_eq!(single.members, vec![zero.clone()]);

        let lam = a(&[1, -1]); // 0 − α_1
        let iv = interval(&lam, &zero).unwrap();
        assert_eq!(iv.len(), 2);
        assert!(iv.contains(&lam) && iv.contains(&zero));

        let lam2 = a(&[1, 0, -1]); // 0 − α_1 − α_2
        let iv2 = interval(&lam2, &zero).unwrap();
        assert_eq!(iv2.len(), 4);

        assert_eq!(interval(&zero, &lam).unwrap_err(), Error::NotComparable);
    }

    #[test]
    fn interval_members_are_exactly_the_order_interval() {
        let zero = Weight::zero(RootSystemKind::BInf);
        let lo = Weight::from_ints(RootSystemKind::BInf, &[-1, -1]);
        let iv = interval(&lo, &zero).unwrap();
        for m in &iv.members {
            assert!(leq(&lo, m).unwrap());
            assert!(leq(m, &zero).unwrap());
        }
        // Exhaustive recount through a separate enumeration of small vectors.
        let beta = lattice_diff(&zero, &lo).unwrap().unwrap();
        let c = beta.simple_coords();
        let expected: BigInt = c.iter().map(|b| b + 1).product();
        assert_eq!(BigInt::from(iv.len()), expected);
    }

    #[test]
    fn partial_order_axioms_on_samples() {
        let kinds = RootSystemKind::ALL;
        for kind in kinds {
            let base = Weight::from_ints(kind, &[2, 0, -2]);
            let mut sample = vec![base.clone()];
            for alpha in crate::rootdata::positive_roots_up_to(kind, 4) {
                sample.push(super::add_lattice(&base, &LatticeElement::from_root(&alpha)));
            }
            for x in &sample {
                assert!(leq(x, x).unwrap(), "reflexive");
                for y in &sample {
                    if leq(x, y).unwrap() && leq(y, x).unwrap() {
                        assert_eq!(x, y, "antisymmetric");
                    }
                    for z in &sample {
                        if leq(x, y).unwrap() && leq(y, z).unwrap() {
                            assert!(leq(x, z).unwrap(), "transitive");
                        }
                    }
                }
            }
        }
    }
}
