//! Shared helpers for the integration tests: a tiny deterministic generator
//! and random weight construction.

use liecat::rootdata::{RootSystemKind, Tail, Weight};
use num_bigint::BigInt;
use num_rational::BigRational;

/// xorshift64*: deterministic, seedable, no dependencies.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    /// Uniform in [0, n).
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Uniform in [lo, hi].
    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }
}

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A random weight with a supported tail: short rational prefix over either
/// the zero tail or a small linear tail.
pub fn random_weight(rng: &mut Rng, kind: RootSystemKind) -> Weight {
    let len = rng.below(4) as usize;
    let prefix: Vec<BigRational> = (0..len)
        .map(|_| {
            let den = if rng.chance(1, 3) { 2 } else { 1 };
            rat(rng.int(-2 * den, 2 * den), den)
        })
        .collect();
    let tail = if rng.chance(1, 2) {
        Tail::Zero
    } else {
        Tail::Linear { a: rat(rng.int(-1, 1), 1), b: rat(rng.int(-2, 1), 1) }
    };
    Weight::new(kind, prefix, tail)
}

/// A random regular integral weight: integer prefixes over the zero tail,
/// resampled until the classification is regular.
pub fn random_regular_integral(rng: &mut Rng, kind: RootSystemKind) -> Weight {
    loop {
        let len = rng.below(4) as usize;
        let coords: Vec<i64> = (0..len).map(|_| rng.int(-3, 3)).collect();
        let w = Weight::from_ints(kind, &coords);
        let class = liecat::category_o::classify(&w).expect("classify is total here");
        if class.integral && class.regular {
            return w;
        }
    }
}
