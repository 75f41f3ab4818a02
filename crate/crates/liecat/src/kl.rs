//! Kazhdan-Lusztig polynomials P_{x,y}(q) by the descent recursion with
//! μ-coefficient correction terms, memoized through a shareable cache with
//! optional append-only disk backing.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write as IoWrite};
use std::path::{Path, PathBuf};
use std::sync::{Mutex, RwLock};

use crate::error::{Error, Result};
use crate::poly::LaurentPolynomial;
use crate::rootdata::RootSystemKind;
use crate::weyl::{
    self, bruhat_leq, compose, descent, from_word, length, lower_bruhat_interval, minimal_rank,
    to_reduced_word, Side, WeylElement, Word,
};

type Key = (RootSystemKind, Vec<u32>, Vec<u32>);

struct DiskState {
    path: Option<PathBuf>,
    loaded: bool,
    appender: Option<File>,
}

/// Append-only memo of KL polynomials keyed by normalized reduced words.
///
/// Reads are concurrent; writes are idempotent (a key always maps to the
/// same polynomial), so racing writers are harmless. The optional disk
/// backing is a line-based UTF-8 file loaded lazily on first use; malformed
/// lines are skipped with a warning and never trusted.
pub struct KlCache {
    mem: RwLock<HashMap<Key, LaurentPolynomial>>,
    intervals: RwLock<HashMap<WeylElement, std::sync::Arc<Vec<WeylElement>>>>,
    // memos for simple-character weight dimensions and Kostant counts;
    // in-memory only
    dims: RwLock<HashMap<(crate::rootdata::Weight, crate::rootdata::Weight), num_bigint::BigUint>>,
    kostant: RwLock<HashMap<crate::rootdata::LatticeElement, num_bigint::BigUint>>,
    disk: Mutex<DiskState>,
}

impl Default for KlCache {
    fn default() -> Self {
        Self::new()
    }
}

impl KlCache {
    /// In-memory cache.
    pub fn new() -> Self {
        KlCache {
            mem: RwLock::new(HashMap::new()),
            intervals: RwLock::new(HashMap::new()),
            dims: RwLock::new(HashMap::new()),
            kostant: RwLock::new(HashMap::new()),
            disk: Mutex::new(DiskState { path: None, loaded: true, appender: None }),
        }
    }

    /// Cache backed by an append-only file, loaded lazily.
    pub fn with_file(path: impl AsRef<Path>) -> Self {
        KlCache {
            mem: RwLock::new(HashMap::new()),
            intervals: RwLock::new(HashMap::new()),
            dims: RwLock::new(HashMap::new()),
            kostant: RwLock::new(HashMap::new()),
            disk: Mutex::new(DiskState {
                path: Some(path.as_ref().to_path_buf()),
                loaded: false,
                appender: None,
            }),
        }
    }

    pub fn len(&self) -> usize {
        self.ensure_loaded();
        self.mem.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn ensure_loaded(&self) {
        let mut disk = self.disk.lock().unwrap();
        if disk.loaded {
            return;
        }
        disk.loaded = true;
        let path = disk.path.clone().expect("unloaded cache always has a path");
        if path.exists() {
            match File::open(&path) {
                Ok(f) => {
                    let mut mem = self.mem.write().unwrap();
                    for (lineno, line) in BufReader::new(f).lines().enumerate() {
                        let Ok(line) = line else { break };
                        if line.trim().is_empty() {
                            continue;
                        }
                        match parse_cache_line(&line) {
                            Some((key, poly)) => {
                                mem.insert(key, poly);
                            }
                            None => {
                                eprintln!(
                                    "warning: skipping malformed KL cache line {} in {}",
                                    lineno + 1,
                                    path.display()
                                );
                            }
                        }
                    }
                }
                Err(err) => {
                    eprintln!("warning: cannot read KL cache {}: {err}", path.display());
                }
            }
        }
        match OpenOptions::new().create(true).append(true).open(&path) {
            Ok(f) => disk.appender = Some(f),
            Err(err) => {
                eprintln!("warning: KL cache {} is not writable: {err}", path.display());
            }
        }
    }

    fn get(&self, key: &Key) -> Option<LaurentPolynomial> {
        self.ensure_loaded();
        self.mem.read().unwrap().get(key).cloned()
    }

    fn insert(&self, key: Key, poly: LaurentPolynomial) {
        self.ensure_loaded();
        let fresh = self.mem.write().unwrap().insert(key.clone(), poly.clone()).is_none();
        if fresh {
            let mut disk = self.disk.lock().unwrap();
            if let Some(f) = disk.appender.as_mut() {
                let _ = writeln!(f, "{}", format_cache_line(&key, &poly));
            }
        }
    }

    /// The memoized lower Bruhat interval [e, v].
    pub(crate) fn bruhat_interval(&self, v: &WeylElement) -> std::sync::Arc<Vec<WeylElement>> {
        if let Some(iv) = self.intervals.read().unwrap().get(v) {
            return iv.clone();
        }
        let iv = std::sync::Arc::new(lower_bruhat_interval(v));
        self.intervals.write().unwrap().entry(v.clone()).or_insert(iv).clone()
    }

    pub(crate) fn dim_memo_get(
        &self,
        key: &(crate::rootdata::Weight, crate::rootdata::Weight),
    ) -> Option<num_bigint::BigUint> {
        self.dims.read().unwrap().get(key).cloned()
    }

    pub(crate) fn dim_memo_put(
        &self,
        key: (crate::rootdata::Weight, crate::rootdata::Weight),
        value: num_bigint::BigUint,
    ) {
        self.dims.write().unwrap().insert(key, value);
    }

    /// Kostant partition count memoized across queries.
    pub(crate) fn kostant(&self, beta: &crate::rootdata::LatticeElement) -> num_bigint::BigUint {
        if let Some(v) = self.kostant.read().unwrap().get(beta) {
            return v.clone();
        }
        let v = crate::rootdata::kostant_partition(beta.kind(), beta);
        self.kostant.write().unwrap().insert(beta.clone(), v.clone());
        v
    }
}

fn format_cache_line(key: &Key, poly: &LaurentPolynomial) -> String {
    let (kind, xw, yw) = key;
    let coeffs: Vec<String> = poly.nonneg_coeff_vec().iter().map(|c| c.to_string()).collect();
    format!(
        "{} {} {} : {}",
        kind.letter(),
        Word(xw.clone()),
        Word(yw.clone()),
        coeffs.join(" ")
    )
}

fn parse_cache_line(line: &str) -> Option<(Key, LaurentPolynomial)> {
    let (head, coeff_part) = line.split_once(" : ")?;
    let mut it = head.split_whitespace();
    let kind = RootSystemKind::from_letter(it.next()?.chars().next()?).ok()?;
    let xw: Word = it.next()?.parse().ok()?;
    let yw: Word = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    let mut coeffs = Vec::new();
    for tok in coeff_part.split_whitespace() {
        coeffs.push(tok.parse::<i64>().ok()?);
    }
    if coeffs.is_empty() {
        return None;
    }
    // sanity: words must multiply out in their kind
    from_word(kind, &xw).ok()?;
    from_word(kind, &yw).ok()?;
    Some(((kind, xw.0, yw.0), LaurentPolynomial::from_nonneg_coeff_vec(&coeffs)))
}

fn cache_key(kind: RootSystemKind, x: &WeylElement, y: &WeylElement) -> Key {
    (kind, to_reduced_word(x).0, to_reduced_word(y).0)
}

/// P_{x,y}(q), computed inside the smallest truncation containing x and y.
/// Zero when x ≰ y, one when x = y.
pub fn kl_poly(
    kind: RootSystemKind,
    x: &WeylElement,
    y: &WeylElement,
    cache: &KlCache,
) -> Result<LaurentPolynomial> {
    if x.kind() != kind || y.kind() != kind {
        return Err(Error::KindMismatch);
    }
    let rank = minimal_rank(x, y)?;
    Ok(kl_rec(kind, x, y, rank, cache))
}

/// Same recursion with the descent scan capped at the generators of W_rank.
/// The polynomial does not depend on the rank; `stabilization_check` uses
/// this entry point as a regression guard.
pub(crate) fn kl_poly_at_rank(
    kind: RootSystemKind,
    x: &WeylElement,
    y: &WeylElement,
    rank: u32,
    cache: &KlCache,
) -> Result<LaurentPolynomial> {
    if x.kind() != kind || y.kind() != kind {
        return Err(Error::KindMismatch);
    }
    let needed = minimal_rank(x, y)?;
    if rank < needed {
        return Err(Error::RankTooSmall);
    }
    Ok(kl_rec(kind, x, y, rank, cache))
}

fn kl_rec(
    kind: RootSystemKind,
    x: &WeylElement,
    y: &WeylElement,
    rank: u32,
    cache: &KlCache,
) -> LaurentPolynomial {
    if x == y {
        return LaurentPolynomial::one();
    }
    if length(x) >= length(y) || !bruhat_leq(x, y).expect("same kind") {
        return LaurentPolynomial::zero();
    }
    let key = cache_key(kind, x, y);
    if let Some(p) = cache.get(&key) {
        return p;
    }

    // smallest right descent of y
    let s_idx = (1..=kind.generator_count(rank))
        .find(|&k| descent(y, k, Side::Right).expect("valid generator"))
        .expect("non-identity elements have a right descent");
    let s = WeylElement::simple(kind, s_idx).unwrap();
    let v = compose(y, &s); // ys, one step shorter
    let xs = compose(x, &s);
    let c = length(&xs) < length(x);

    // q^{1-c} P_{xs,v} + q^c P_{x,v}
    let first = kl_rec(kind, &xs, &v, rank, cache).shift(if c { 0 } else { 1 });
    let second = kl_rec(kind, x, &v, rank, cache).shift(if c { 1 } else { 0 });
    let mut result = &first + &second;

    // − Σ μ(z, v) q^{(ℓ(y)−ℓ(z))/2} P_{x,z} over z < v with zs < z
    let ly = length(y) as i64;
    for z in cache.bruhat_interval(&v).iter() {
        if z == &v {
            continue;
        }
        let lz = length(z) as i64;
        let lv = ly - 1;
        if (lv - lz) % 2 == 0 {
            continue; // μ vanishes unless the length gap is odd
        }
        if !descent(z, s_idx, Side::Right).expect("valid generator") {
            continue;
        }
        if !bruhat_leq(x, z).expect("same kind") {
            continue;
        }
        let mu = kl_rec(kind, z, &v, rank, cache).coeff((lv - lz - 1) / 2);
        if mu == 0 {
            continue;
        }
        let term = kl_rec(kind, x, z, rank, cache).scale(mu).shift((ly - lz) / 2);
        result = &result - &term;
    }

    debug_assert!(result.min_degree().map(|d| d >= 0).unwrap_or(true));
    debug_assert!(result.coeff(0) == 1);
    debug_assert!(
        result.degree().unwrap_or(0) * 2 <= length(y) as i64 - length(x) as i64 - 1,
        "degree bound violated for P_{{{x}, {y}}}"
    );
    cache.insert(key, result.clone());
    result
}

/// μ(x, y): the coefficient of q^{(ℓ(y)−ℓ(x)−1)/2} in P_{x,y}. Zero when the
/// length gap is even or x ≰ y.
pub fn mu_coeff(
    kind: RootSystemKind,
    x: &WeylElement,
    y: &WeylElement,
    cache: &KlCache,
) -> Result<i64> {
    if x.kind() != kind || y.kind() != kind {
        return Err(Error::KindMismatch);
    }
    let gap = length(y) as i64 - length(x) as i64;
    if gap <= 0 || gap % 2 == 0 || !bruhat_leq(x, y)? {
        return Ok(0);
    }
    Ok(kl_poly(kind, x, y, cache)?.coeff((gap - 1) / 2))
}

/// Recomputes P_{x,y} with the generator scan capped at ranks m, m+1, …,
/// m + extra_ranks (m minimal) using fresh scratch caches, and reports
/// whether all runs agree. The recursion is rank-local, so this is a
/// regression guard rather than a mathematical necessity.
pub fn stabilization_check(
    kind: RootSystemKind,
    x: &WeylElement,
    y: &WeylElement,
    extra_ranks: u32,
    cache: &KlCache,
) -> Result<bool> {
    let m = minimal_rank(x, y)?;
    let reference = kl_poly(kind, x, y, cache)?;
    for rank in m..=m + extra_ranks {
        let scratch = KlCache::new();
        let p = kl_poly_at_rank(kind, x, y, rank, &scratch)?;
        if p != reference {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Signed inverse-KL coefficient (−1)^{ℓ(x)−ℓ(y)} P_{y,x}(1) for y ≤ x in
/// Bruhat order, else 0: the coefficient of a Verma character in the
/// character of a simple module over a regular integral block.
pub fn inverse_kl_at_one(
    kind: RootSystemKind,
    x: &WeylElement,
    y: &WeylElement,
    cache: &KlCache,
) -> Result<i64> {
    if x.kind() != kind || y.kind() != kind {
        return Err(Error::KindMismatch);
    }
    if x == y {
        return Ok(1);
    }
    if !bruhat_leq(y, x)? {
        return Ok(0);
    }
    let value = kl_poly(kind, y, x, cache)?.eval_one();
    let gap = length(x) as i64 - length(y) as i64;
    Ok(if gap % 2 == 0 { value } else { -value })
}

/// Multiplicity of a Verma factor in a regular integral block:
/// P_{w⁰x, w⁰y}(1) inside the rank-`rank` truncation.
pub(crate) fn twisted_kl_at_one(
    kind: RootSystemKind,
    x: &WeylElement,
    y: &WeylElement,
    rank: u32,
    cache: &KlCache,
) -> Result<i64> {
    let w0 = weyl::longest_element(kind, rank)?;
    let wx = compose(&w0, x);
    let wy = compose(&w0, y);
    Ok(kl_poly(kind, &wx, &wy, cache)?.eval_one())
}
