//! Verma-module predicates: simplicity, finite length, strong linkage, and
//! homomorphism dimensions.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::classify::classify;
use crate::error::{Error, Result};
use crate::rootdata::{
    lattice_diff, reflect_dot, roots_under, shifted_pairing, LatticeElement, Root, Weight,
};

/// A witness for strong linkage: applying the dot reflections of `roots`
/// left to right maps `end` down to `start` through a descending chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkageChain {
    pub start: Weight,
    pub end: Weight,
    pub roots: Vec<Root>,
}

impl LinkageChain {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

/// The Verma module M(λ) is simple iff λ is antidominant.
pub fn verma_is_simple(lambda: &Weight) -> Result<bool> {
    Ok(classify(lambda)?.antidominant)
}

/// The Verma module M(λ) has finite length iff λ is almost antidominant.
pub fn verma_has_finite_length(lambda: &Weight) -> Result<bool> {
    Ok(classify(lambda)?.almost_antidominant)
}

/// Searches for a chain of dot reflections with positive-integer shifted
/// pairings carrying μ down to λ. Breadth-first over the finite interval
/// between the two weights; every step strictly lowers the weight, so the
/// state space is the orbit section inside the interval.
pub fn strong_linkage_chain(lambda: &Weight, mu: &Weight) -> Result<Option<LinkageChain>> {
    if lambda.kind() != mu.kind() {
        return Err(Error::KindMismatch);
    }
    if lambda == mu {
        return Ok(Some(LinkageChain { start: lambda.clone(), end: mu.clone(), roots: vec![] }));
    }
    // the difference must be finitely supported for the search to make sense
    let diff = lattice_diff(mu, lambda)?;
    let Some(diff) = diff else { return Ok(None) };
    if !diff.is_dominant_sum() {
        return Ok(None);
    }

    let kind = lambda.kind();
    let mut parents: HashMap<Weight, (Weight, Root)> = HashMap::new();
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut queue: VecDeque<Weight> = VecDeque::new();
    seen.insert(mu.clone());
    queue.push_back(mu.clone());

    while let Some(nu) = queue.pop_front() {
        let rem = lattice_diff(&nu, lambda)?.expect("stays in the lattice window");
        let rem_c = rem.simple_coords();
        for alpha in roots_under(kind, &rem_c) {
            let t = shifted_pairing(&nu, &alpha)?;
            if !t.is_integer() || !t.is_positive() {
                continue;
            }
            // s_α·ν = ν − t·α must stay at or above λ
            let step = scaled_root(&alpha, &t.to_integer());
            let new_rem = rem.checked_sub(&step);
            if !new_rem.is_dominant_sum() {
                continue;
            }
            let next = reflect_dot(&nu, &alpha)?;
            if !seen.insert(next.clone()) {
                continue;
            }
            parents.insert(next.clone(), (nu.clone(), alpha));
            if &next == lambda {
                return Ok(Some(reconstruct(lambda, mu, &parents)));
            }
            queue.push_back(next);
        }
    }
    Ok(None)
}

fn scaled_root(alpha: &Root, t: &BigInt) -> LatticeElement {
    let mut coords = vec![BigInt::zero(); alpha.max_index() as usize];
    for (i, c) in alpha.coords() {
        coords[(i - 1) as usize] = t * BigInt::from(c);
    }
    LatticeElement::new(alpha.kind(), coords).expect("multiple of a root is in the lattice")
}

fn reconstruct(
    lambda: &Weight,
    mu: &Weight,
    parents: &HashMap<Weight, (Weight, Root)>,
) -> LinkageChain {
    // walk back from λ to μ, collecting the reflections in application order
    let mut roots_rev = Vec::new();
    let mut cur = lambda.clone();
    while &cur != mu {
        let (prev, alpha) = parents.get(&cur).expect("parent chain is complete");
        roots_rev.push(*alpha);
        cur = prev.clone();
    }
    roots_rev.reverse();
    LinkageChain { start: lambda.clone(), end: mu.clone(), roots: roots_rev }
}

/// dim Hom(M(λ), M(μ)): 1 iff λ is strongly linked to μ, else 0.
pub fn verma_hom_dim(lambda: &Weight, mu: &Weight) -> Result<u8> {
    Ok(match strong_linkage_chain(lambda, mu)? {
        Some(_) => 1,
        None => 0,
    })
}
