//! Kostant partition counts: the number of multisets of positive roots
//! summing to a given lattice element. These are exactly the weight-space
//! dimensions of Verma modules.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::lattice::{root_simple_coords, LatticeElement};
use super::RootSystemKind;

/// Counts multisets of positive roots with sum β by dynamic programming in
/// the simple-root coordinate lattice. Returns 0 for any β outside the
/// ℤ≥0-span of the simple roots.
pub fn kostant_partition(kind: RootSystemKind, beta: &LatticeElement) -> BigUint {
    debug_assert_eq!(kind, beta.kind());
    let c = beta.simple_coords();
    if c.iter().any(|x| x.is_negative()) {
        return BigUint::zero();
    }
    if c.is_empty() {
        return BigUint::one();
    }
    let roots: Vec<Vec<BigInt>> = super::root::roots_under(kind, &c)
        .iter()
        .map(|alpha| {
            let mut rc = root_simple_coords(alpha);
            rc.resize(c.len(), BigInt::zero());
            rc
        })
        .collect();
    let mut memo: HashMap<(usize, Vec<BigInt>), BigUint> = HashMap::new();
    count_from(&roots, 0, &c, &mut memo)
}

fn count_from(
    roots: &[Vec<BigInt>],
    idx: usize,
    remaining: &[BigInt],
    memo: &mut HashMap<(usize, Vec<BigInt>), BigUint>,
) -> BigUint {
    if remaining.iter().all(|x| x.is_zero()) {
        return BigUint::one();
    }
    if idx == roots.len() {
        return BigUint::zero();
    }
    let key = (idx, remaining.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    let mut rem = remaining.to_vec();
    loop {
        total += count_from(roots, idx + 1, &rem, memo);
        // take one more copy of roots[idx], if it still fits
        let fits = rem
            .iter()
            .zip(roots[idx].iter())
            .all(|(r, a)| r >= a);
        if !fits {
            break;
        }
        for (r, a) in rem.iter_mut().zip(roots[idx].iter()) {
            *r -= a;
        }
    }
    memo.insert(key, total.clone());
    total
}
