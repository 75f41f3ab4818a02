//! Independent brute-force ground truth for small instances: the
//! R-polynomial route to Kazhdan-Lusztig polynomials, all-reduced-words
//! Bruhat tests, exhaustive Kostant partition enumeration, and the
//! character-subtraction multiplicity recursion. None of these consult the
//! KL cache or the main recursion; independence is the point.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::category_o::{
    composition_series_window, same_block, simple_weight_dim, MultiplicityTable,
};
use crate::category_o::verma_weight_dim_cached;
use crate::error::{Error, Result};
use crate::kl::KlCache;
use crate::poly::LaurentPolynomial;
use crate::rootdata::{interval, positive_roots_up_to, LatticeElement, RootSystemKind, Weight};
use crate::weyl::{descent, length, lower_bruhat_interval, minimal_rank, Side, WeylElement};

/// Rank ceiling for the exhaustive oracles. Factorial growth makes larger
/// ranks pointless at desk scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBound {
    pub a_rank: u32,
    pub bcd_rank: u32,
}

impl Default for OracleBound {
    fn default() -> Self {
        OracleBound { a_rank: 4, bcd_rank: 3 }
    }
}

impl OracleBound {
    pub fn rank_for(&self, kind: RootSystemKind) -> u32 {
        match kind {
            RootSystemKind::AInf => self.a_rank,
            _ => self.bcd_rank,
        }
    }

    fn check(&self, x: &WeylElement, y: &WeylElement) -> Result<()> {
        if minimal_rank(x, y)? > self.rank_for(x.kind()) {
            Err(Error::OracleBoundExceeded)
        } else {
            Ok(())
        }
    }
}

/// Outcome of an oracle sweep: every mismatch is reported with both values.
#[derive(Debug, Clone, Default)]
pub struct OracleReport {
    pub name: String,
    pub checked: u64,
    pub mismatches: Vec<Mismatch>,
}

#[derive(Debug, Clone)]
pub struct Mismatch {
    pub input: String,
    pub main_value: String,
    pub oracle_value: String,
}

impl OracleReport {
    pub fn new(name: &str) -> Self {
        OracleReport { name: name.to_string(), checked: 0, mismatches: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn record(&mut self, input: String, main_value: String, oracle_value: String) {
        self.checked += 1;
        if main_value != oracle_value {
            self.mismatches.push(Mismatch { input, main_value, oracle_value });
        }
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "{}: ok ({} checked)", self.name, self.checked)
        } else {
            writeln!(
                f,
                "{}: FAILED ({} mismatches out of {} checked)",
                self.name,
                self.mismatches.len(),
                self.checked
            )?;
            for m in self.mismatches.iter().take(10) {
                writeln!(f, "  {} : main={} oracle={}", m.input, m.main_value, m.oracle_value)?;
            }
            if self.mismatches.len() > 10 {
                writeln!(f, "  …")?;
            }
            Ok(())
        }
    }
}

/// The R-polynomial R_{x,y}(q) by the standard right-descent recursion.
pub fn r_polynomial(
    kind: RootSystemKind,
    x: &WeylElement,
    y: &WeylElement,
    bound: &OracleBound,
) -> Result<LaurentPolynomial> {
    if x.kind() != kind || y.kind() != kind {
        return Err(Error::KindMismatch);
    }
    bound.check(x, y)?;
    let mut memo = HashMap::new();
    Ok(r_rec(x, y, &mut memo))
}

fn r_rec(
    x: &WeylElement,
    y: &WeylElement,
    memo: &mut HashMap<(WeylElement, WeylElement), LaurentPolynomial>,
) -> LaurentPolynomial {
    if x == y {
        return LaurentPolynomial::one();
    }
    if length(x) >= length(y) {
        return LaurentPolynomial::zero();
    }
    let key = (x.clone(), y.clone());
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let kind = y.kind();
    let rank = crate::weyl::minimal_rank(x, y).expect("same kind");
    let s_idx = (1..=kind.generator_count(rank))
        .find(|&k| descent(y, k, Side::Right).expect("valid generator"))
        .expect("non-identity element has a right descent");
    let s = WeylElement::simple(kind, s_idx).unwrap();
    let ys = crate::weyl::compose(y, &s);
    let xs = crate::weyl::compose(x, &s);
    let result = if length(&xs) < length(x) {
        r_rec(&xs, &ys, memo)
    } else {
        // (q − 1) R_{x, ys} + q R_{xs, ys}
        let q_minus_one = LaurentPolynomial::from_coeffs(0, vec![-1, 1]);
        let a = &q_minus_one * &r_rec(x, &ys, memo);
        let b = r_rec(&xs, &ys, memo).shift(1);
        &a + &b
    };
    memo.insert(key, result.clone());
    result
}

/// Kazhdan-Lusztig polynomials solved from the R-polynomials through the
/// defining triangular system, entirely avoiding the descent recursion of
/// the main path: q^{ℓ(y)−ℓ(x)} P_{x,y}(1/q) = Σ_{x ≤ z ≤ y} R_{x,z} P_{z,y}
/// plus the degree bound pins P_{x,y} uniquely.
pub fn kl_from_r(
    kind: RootSystemKind,
    x: &WeylElement,
    y: &WeylElement,
    bound: &OracleBound,
) -> Result<LaurentPolynomial> {
    if x.kind() != kind || y.kind() != kind {
        return Err(Error::KindMismatch);
    }
    bound.check(x, y)?;
    let mut r_memo = HashMap::new();
    let mut p_memo = HashMap::new();
    let interval_of_y = lower_bruhat_interval(y);
    Ok(kl_solve(x, y, &interval_of_y, &mut r_memo, &mut p_memo))
}

fn kl_solve(
    x: &WeylElement,
    y: &WeylElement,
    interval_of_y: &[WeylElement],
    r_memo: &mut HashMap<(WeylElement, WeylElement), LaurentPolynomial>,
    p_memo: &mut HashMap<WeylElement, LaurentPolynomial>,
) -> LaurentPolynomial {
    if x == y {
        return LaurentPolynomial::one();
    }
    if length(x) >= length(y) {
        return LaurentPolynomial::zero();
    }
    if let Some(p) = p_memo.get(x) {
        return p.clone();
    }
    let gap = length(y) as i64 - length(x) as i64;
    // F = Σ_{x < z ≤ y} R_{x,z} P_{z,y}
    let mut f = LaurentPolynomial::zero();
    for z in interval_of_y {
        if z == x {
            continue;
        }
        let r = r_rec(x, z, r_memo);
        if r.is_zero() {
            continue;
        }
        let p = kl_solve(z, y, interval_of_y, r_memo, p_memo);
        if p.is_zero() {
            continue;
        }
        f = &f + &(&r * &p);
    }
    // q^gap · P(1/q) − P = F, and deg P ≤ (gap−1)/2, so the low half of F
    // is −P
    let p = f.truncate_above((gap - 1).div_euclid(2)).scale(-1);
    // consistency: the full functional equation must hold
    let lhs = &p.bar().shift(gap) - &p;
    debug_assert_eq!(lhs, f, "R-to-KL functional equation failed for {x} {y}");
    p_memo.insert(x.clone(), p.clone());
    p
}

/// Bruhat order by the raw definition: some reduced word of y contains a
/// reduced word of x as a subword. All reduced words of y are enumerated.
pub fn brute_bruhat_leq(
    kind: RootSystemKind,
    x: &WeylElement,
    y: &WeylElement,
    bound: &OracleBound,
) -> Result<bool> {
    if x.kind() != kind || y.kind() != kind {
        return Err(Error::KindMismatch);
    }
    bound.check(x, y)?;
    if x.is_identity() {
        return Ok(true);
    }
    let lx = length(x) as usize;
    for word in all_reduced_words(y) {
        if subsequences_hit(&word, lx, x) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Every reduced word of w, by peeling right descents in all ways.
pub fn all_reduced_words(w: &WeylElement) -> Vec<Vec<u32>> {
    fn go(w: &WeylElement, memo: &mut HashMap<WeylElement, Vec<Vec<u32>>>) -> Vec<Vec<u32>> {
        if w.is_identity() {
            return vec![vec![]];
        }
        if let Some(ws) = memo.get(w) {
            return ws.clone();
        }
        let kind = w.kind();
        let rank = crate::weyl::minimal_rank_of(w);
        let mut words = Vec::new();
        for k in 1..=kind.generator_count(rank) {
            if descent(w, k, Side::Right).expect("valid generator") {
                let shorter = crate::weyl::compose(w, &WeylElement::simple(kind, k).unwrap());
                for mut word in go(&shorter, memo) {
                    word.push(k);
                    words.push(word);
                }
            }
        }
        memo.insert(w.clone(), words.clone());
        words
    }
    go(w, &mut HashMap::new())
}

fn subsequences_hit(word: &[u32], take: usize, target: &WeylElement) -> bool {
    fn go(word: &[u32], pos: usize, left: usize, acc: &WeylElement, target: &WeylElement) -> bool {
        if left == 0 {
            return acc == target;
        }
        if word.len() - pos < left {
            return false;
        }
        // use position `pos` or skip it
        let with = crate::weyl::compose(acc, &WeylElement::simple(target.kind(), word[pos]).unwrap());
        go(word, pos + 1, left - 1, &with, target) || go(word, pos + 1, left, acc, target)
    }
    go(word, 0, take, &WeylElement::identity(target.kind()), target)
}

/// Exhaustive Kostant partition count: depth-first over multisets of
/// positive roots in ε-coordinates, ordered to avoid duplicates. Completely
/// independent of the simple-coordinate dynamic program.
pub fn kostant_partition_bruteforce(kind: RootSystemKind, beta: &LatticeElement) -> BigUint {
    // the weight Σ i·β_i strictly decreases with every root chosen
    let coords = beta.coords();
    if coords.is_empty() {
        return BigUint::from(1u8);
    }
    let max_idx = coords.len() as u32;
    let roots: Vec<Vec<i64>> = positive_roots_up_to(kind, max_idx)
        .iter()
        .map(|alpha| {
            let mut v = vec![0i64; coords.len()];
            for (i, c) in alpha.coords() {
                v[(i - 1) as usize] = c;
            }
            v
        })
        .collect();
    let target: Vec<BigInt> = coords.to_vec();
    fn weight(v: &[BigInt]) -> BigInt {
        v.iter().enumerate().map(|(i, c)| c * BigInt::from(i as u64 + 1)).sum()
    }
    fn go(roots: &[Vec<i64>], idx: usize, remaining: &mut Vec<BigInt>) -> BigUint {
        let w = weight(remaining);
        if w.is_zero() {
            return if remaining.iter().all(|c| c.is_zero()) {
                BigUint::from(1u8)
            } else {
                BigUint::zero()
            };
        }
        if w.is_negative() || idx == roots.len() {
            return BigUint::zero();
        }
        let mut total = BigUint::zero();
        // skip this root entirely
        total += go(roots, idx + 1, remaining);
        // or take it one more time and stay on it
        for (r, a) in remaining.iter_mut().zip(roots[idx].iter()) {
            *r -= BigInt::from(*a);
        }
        total += go(roots, idx, remaining);
        for (r, a) in remaining.iter_mut().zip(roots[idx].iter()) {
            *r += BigInt::from(*a);
        }
        total
    }
    let mut remaining = target;
    go(&roots, 0, &mut remaining)
}

/// Composition multiplicities of M(λ) over the window [lo, λ] through the
/// character-subtraction recursion: walking the orbit weights downward,
/// the multiplicity at ξ is what remains of dim M(λ)^ξ after the known
/// simples above are subtracted.
pub fn multiplicities_by_char_subtraction(
    lambda: &Weight,
    lo: &Weight,
    cache: &KlCache,
) -> Result<MultiplicityTable> {
    let window = interval(lo, lambda)?;
    // orbit weights, highest first (window members come sorted ascending)
    let mut orbit: Vec<Weight> = Vec::new();
    for mu in window.members.iter().rev() {
        if same_block(lambda, mu)? {
            orbit.push(mu.clone());
        }
    }
    let mut m: BTreeMap<Weight, BigInt> = BTreeMap::new();
    for xi in &orbit {
        let mut value = BigInt::from(verma_weight_dim_cached(lambda, xi, cache)?);
        for (prev, count) in &m {
            if count.is_zero() {
                continue;
            }
            let l_dim = simple_weight_dim(prev, xi, cache)?;
            value -= count * BigInt::from(l_dim);
        }
        if value.is_negative() {
            return Err(Error::Internal(format!(
                "character subtraction went negative at {xi} for M({lambda})"
            )));
        }
        m.insert(xi.clone(), value);
    }
    let mut entries = BTreeMap::new();
    for (k, v) in m {
        if v.is_zero() {
            continue;
        }
        let small = u64::try_from(&v)
            .map_err(|_| Error::Internal("multiplicity does not fit in u64".into()))?;
        entries.insert(k, small);
    }
    Ok(MultiplicityTable { base: lambda.clone(), window, entries })
}

/// A regular integral block truncated at a finite rank: the bottom
/// (antidominant) representative and the full dot-orbit of the base under
/// W_rank, sorted ascending by height.
pub fn block_orbit(base: &Weight, rank: u32) -> Result<(Weight, Vec<Weight>)> {
    let kind = base.kind();
    let mut orbit: Vec<Weight> = Vec::new();
    for w in crate::weyl::all_elements(kind, rank) {
        let lam = crate::weyl::apply_dot(&w, base)?;
        if !orbit.contains(&lam) {
            orbit.push(lam);
        }
    }
    let bottom = crate::category_o::integral_weyl_min(base, rank);
    let mut keyed: Vec<(BigUint, Weight)> = orbit
        .into_iter()
        .map(|lam| {
            let beta = crate::rootdata::lattice_diff(&lam, &bottom)
                .expect("same tail")
                .expect("orbit stays in one lattice coset");
            let height: BigInt = beta.simple_coords().iter().sum();
            (height.to_biguint().expect("heights above the minimum are nonnegative"), lam)
        })
        .collect();
    keyed.sort();
    Ok((bottom, keyed.into_iter().map(|(_, w)| w).collect()))
}

/// Sweep: the descent-recursion Kazhdan-Lusztig polynomials against the
/// R-polynomial route, over all pairs of W_rank for each kind.
pub fn kl_oracle_sweep(bound: &OracleBound, cache: &KlCache) -> OracleReport {
    let mut report = OracleReport::new("kl-vs-r-oracle");
    for kind in RootSystemKind::ALL {
        let rank = bound.rank_for(kind);
        let elems = crate::weyl::all_elements(kind, rank);
        for y in &elems {
            // solve the whole column above y at once on the oracle side
            let interval_of_y = lower_bruhat_interval(y);
            let mut r_memo = HashMap::new();
            let mut p_memo = HashMap::new();
            for x in &elems {
                let main = crate::kl::kl_poly(kind, x, y, cache).expect("same kind");
                let oracle = kl_solve(x, y, &interval_of_y, &mut r_memo, &mut p_memo);
                report.record(
                    format!("{} P({}, {})", kind.letter(), x, y),
                    main.to_string(),
                    oracle.to_string(),
                );
            }
        }
    }
    report
}

/// The nonconstant KL landscape of one truncation: pairs (x, y) whose
/// polynomial is neither 0 nor 1, computed by the oracle route.
pub fn nonconstant_kl_pairs(
    kind: RootSystemKind,
    rank: u32,
) -> Vec<(WeylElement, WeylElement, LaurentPolynomial)> {
    let elems = crate::weyl::all_elements(kind, rank);
    let mut out = Vec::new();
    for y in &elems {
        let interval_of_y = lower_bruhat_interval(y);
        let mut r_memo = HashMap::new();
        let mut p_memo = HashMap::new();
        for x in &elems {
            let p = kl_solve(x, y, &interval_of_y, &mut r_memo, &mut p_memo);
            if !p.is_zero() && p != LaurentPolynomial::one() {
                out.push((x.clone(), y.clone(), p));
            }
        }
    }
    out
}

/// Sweep: subword-property Bruhat order against the all-reduced-words
/// definition, over all pairs of W_rank for each kind. The reduced words of
/// each upper element are enumerated once and shared across the column.
pub fn bruhat_oracle_sweep(bound: &OracleBound) -> OracleReport {
    let mut report = OracleReport::new("bruhat-vs-all-words");
    for kind in RootSystemKind::ALL {
        let rank = bound.rank_for(kind);
        let elems = crate::weyl::all_elements(kind, rank);
        for y in &elems {
            let words = all_reduced_words(y);
            for x in &elems {
                let main = crate::weyl::bruhat_leq(x, y).expect("same kind");
                let oracle = x.is_identity()
                    || words.iter().any(|word| subsequences_hit(word, length(x) as usize, x));
                report.record(
                    format!("{} {} <= {}", kind.letter(), x, y),
                    main.to_string(),
                    oracle.to_string(),
                );
            }
        }
    }
    report
}

/// Sweep: the Kostant partition dynamic program against exhaustive multiset
/// enumeration, for every coefficient vector over the first `window` simple
/// roots with coefficient sum at most `max_sum`.
pub fn kostant_oracle_sweep(max_sum: u32, window: u32) -> OracleReport {
    let mut report = OracleReport::new("kostant-vs-enumeration");
    for kind in RootSystemKind::ALL {
        let mut stack = vec![Vec::<u32>::new()];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == window as usize {
                let beta = combo(kind, &prefix);
                let dp = crate::rootdata::kostant_partition(kind, &beta);
                let brute = kostant_partition_bruteforce(kind, &beta);
                report.record(
                    format!("{} c={prefix:?}", kind.letter()),
                    dp.to_string(),
                    brute.to_string(),
                );
                continue;
            }
            let used: u32 = prefix.iter().sum();
            for c in 0..=(max_sum - used) {
                let mut next = prefix.clone();
                next.push(c);
                stack.push(next);
            }
        }
    }
    report
}

fn combo(kind: RootSystemKind, coeffs: &[u32]) -> LatticeElement {
    let mut coords = vec![BigInt::zero(); coeffs.len() + 1];
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let alpha = crate::rootdata::Root::simple(kind, (k + 1) as u32).unwrap();
        for (i, a) in alpha.coords() {
            coords[(i - 1) as usize] += BigInt::from(a) * BigInt::from(c);
        }
    }
    LatticeElement::new(kind, coords).expect("combination of simple roots")
}

/// Sweep: the KL multiplicity pipeline against character subtraction on the
/// block of `base` truncated at `rank`, including the character-consistency
/// identity dim M(λ)^ζ = Σ_μ [M(λ):L(μ)]·dim L(μ)^ζ over every window.
pub fn multiplicity_pipeline_sweep(
    base: &Weight,
    rank: u32,
    cache: &KlCache,
) -> Result<OracleReport> {
    let kind = base.kind();
    let mut report =
        OracleReport::new(&format!("multiplicities-{}-rank-{rank}", kind.letter()));
    let (bottom, orbit) = block_orbit(base, rank)?;
    for lam in &orbit {
        let main = composition_series_window(lam, &bottom, lam, cache)?;
        let oracle = multiplicities_by_char_subtraction(lam, &bottom, cache)?;
        report.record(
            format!("{} block table at {lam}", kind.letter()),
            format!("{:?}", main.rows()),
            format!("{:?}", oracle.rows()),
        );
        // character consistency across the whole window
        for zeta in &main.window.members {
            let mut total = BigInt::zero();
            for (mu, mult) in &main.entries {
                let l_dim = simple_weight_dim(mu, zeta, cache)?;
                total += BigInt::from(*mult) * BigInt::from(l_dim);
            }
            let direct = verma_weight_dim_cached(lam, zeta, cache)?;
            report.record(
                format!("{} ch M({lam}) at {zeta}", kind.letter()),
                direct.to_string(),
                total.to_string(),
            );
        }
    }
    Ok(report)
}

/// Runs every oracle sweep; `selfcheck` in the CLI prints these.
pub fn selfcheck(bound: &OracleBound, cache: &KlCache) -> Result<Vec<OracleReport>> {
    let mut reports = vec![
        kl_oracle_sweep(bound, cache),
        bruhat_oracle_sweep(bound),
        kostant_oracle_sweep(6, 4),
    ];
    for kind in RootSystemKind::ALL {
        let base = Weight::zero(kind);
        let rank = bound.rank_for(kind);
        reports.push(multiplicity_pipeline_sweep(&base, rank, cache)?);
    }
    Ok(reports)
}
