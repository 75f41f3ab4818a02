//! Block membership: two weights lie in the same block exactly when one is
//! in the integral Weyl dot-orbit of the other. Decided by canonicalizing
//! both weights to the minimal orbit representative of a finite-rank window.

use num_traits::Signed;

use super::classify::zero_shifted_index;
use crate::error::{Error, Result};
use crate::rootdata::{
    lattice_diff, positive_roots_up_to, reflect_dot, shifted_pairing, Root, RootSystemKind,
    Weight,
};
use crate::weyl::{from_word, WeylElement, Word};

/// Smallest truncation rank containing everything the given weights touch.
/// Orbit walks confined to this window already see the stable multiplicity
/// data; callers re-verify by widening the window one step.
pub(crate) fn window_rank(kind: RootSystemKind, weights: &[&Weight]) -> u32 {
    let support = weights.iter().map(|w| w.prefix_len()).max().unwrap_or(0);
    support.max(kind.min_rank()).max(1)
}

/// Walks λ downward with dot reflections s_α for positive roots α of the
/// rank-n window whose shifted pairing is a positive integer, until none
/// applies. The result is the unique minimal representative of the orbit of
/// λ under the integral Weyl group of the window.
pub(crate) fn integral_weyl_min(lambda: &Weight, rank: u32) -> Weight {
    let roots: Vec<Root> = positive_roots_up_to(lambda.kind(), rank);
    let mut cur = lambda.clone();
    'walk: loop {
        for alpha in &roots {
            let t = shifted_pairing(&cur, alpha).expect("root of the same kind");
            if t.is_integer() && t.is_positive() {
                cur = reflect_dot(&cur, alpha).expect("root of the same kind");
                continue 'walk;
            }
        }
        return cur;
    }
}

/// Simple-reflection walk for integral orbits, recording the letters so
/// that the returned element x satisfies x·ν = λ for the minimal ν.
pub(crate) fn orbit_normalize(lambda: &Weight, rank: u32) -> (Weight, WeylElement) {
    let kind = lambda.kind();
    let gens = kind.generator_count(rank);
    let mut cur = lambda.clone();
    let mut letters = Vec::new();
    'walk: loop {
        for k in 1..=gens {
            let alpha = Root::simple(kind, k).expect("valid generator");
            let t = shifted_pairing(&cur, &alpha).expect("same kind");
            if t.is_integer() && t.is_positive() {
                cur = reflect_dot(&cur, &alpha).expect("same kind");
                letters.push(k);
                continue 'walk;
            }
        }
        break;
    }
    let x = from_word(kind, &Word(letters)).expect("letters are valid generators");
    (cur, x)
}

/// Weyl elements act on λ+ρ by signed permutations, so over the indices
/// where two candidate weights disagree, the (absolute) shifted values must
/// agree as multisets. A cheap necessary condition that rejects almost all
/// non-members before the orbit walk runs.
fn orbit_multiset_prefilter(lambda: &Weight, mu: &Weight) -> bool {
    let n = lambda.prefix_len().max(mu.prefix_len());
    let signed = lambda.kind() != RootSystemKind::AInf;
    let mut left = Vec::new();
    let mut right = Vec::new();
    for i in 1..=n {
        let a = lambda.shifted_coord(i);
        let b = mu.shifted_coord(i);
        if a == b {
            continue;
        }
        if signed {
            left.push(if a < num_traits::Zero::zero() { -a } else { a });
            right.push(if b < num_traits::Zero::zero() { -b } else { b });
        } else {
            left.push(a);
            right.push(b);
        }
    }
    left.sort();
    right.sort();
    left == right
}

/// True iff μ lies in the integral Weyl dot-orbit of λ, i.e. the two
/// weights lie in the same block.
pub fn same_block(lambda: &Weight, mu: &Weight) -> Result<bool> {
    if lambda.kind() != mu.kind() {
        return Err(Error::KindMismatch);
    }
    if lambda == mu {
        return Ok(true);
    }
    // μ − λ must land in the root lattice; otherwise no Weyl element links them
    if lattice_diff(mu, lambda)?.is_none() {
        return Ok(false);
    }
    if !orbit_multiset_prefilter(lambda, mu) {
        return Ok(false);
    }
    let kind = lambda.kind();
    let mut rank = window_rank(kind, &[lambda, mu]);
    if kind == RootSystemKind::DInf {
        // a vanishing shifted coordinate lets a sign-change pair absorb the
        // parity constraint; the window must reach it
        if let Some(i) = zero_shifted_index(lambda) {
            rank = rank.max(i);
        }
    }
    Ok(integral_weyl_min(lambda, rank) == integral_weyl_min(mu, rank))
}
