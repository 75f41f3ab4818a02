//! The direct-limit Weyl group as finitely supported (signed) permutations
//! of the positive integers: products, lengths, reduced words, descents,
//! Bruhat order, and the dot action on weights.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rootdata::{shifted_pairing, Rat, Root, RootShape, RootSystemKind, Weight};

/// One image value: w(ε_i) = ±ε_index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Image {
    index: u32,
    negative: bool,
}

/// A finitely supported signed permutation. Kind A carries no signs, B and C
/// carry arbitrary signs, D keeps the number of sign changes even. Identity
/// entries are never stored, so equality and hashing are structural.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylElement {
    kind: RootSystemKind,
    map: BTreeMap<u32, Image>,
}

impl WeylElement {
    pub fn identity(kind: RootSystemKind) -> Self {
        WeylElement { kind, map: BTreeMap::new() }
    }

    /// The simple reflection s_k in the generator numbering of the simple
    /// roots: s_1 is the sign change at 1 (B, C), the signed swap of {1,2}
    /// (D), or the transposition (1 2) (A); s_k for k ≥ 2 is the
    /// transposition (k−1 k), except in kind A where s_k = (k k+1).
    pub fn simple(kind: RootSystemKind, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::BadGenerator("generator indices start at 1".into()));
        }
        let mut map = BTreeMap::new();
        match (kind, k) {
            (RootSystemKind::AInf, k) => {
                map.insert(k, Image { index: k + 1, negative: false });
                map.insert(k + 1, Image { index: k, negative: false });
            }
            (RootSystemKind::BInf | RootSystemKind::CInf, 1) => {
                map.insert(1, Image { index: 1, negative: true });
            }
            (RootSystemKind::DInf, 1) => {
                map.insert(1, Image { index: 2, negative: true });
                map.insert(2, Image { index: 1, negative: true });
            }
            (_, k) => {
                map.insert(k - 1, Image { index: k, negative: false });
                map.insert(k, Image { index: k - 1, negative: false });
            }
        }
        Ok(WeylElement { kind, map })
    }

    /// Builds an element from explicit images of 1..=n. Used by exhaustive
    /// sweeps; validates bijectivity and the sign discipline of the kind.
    pub(crate) fn from_images(kind: RootSystemKind, images: &[(u32, bool)]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut negatives = 0usize;
        for &(idx, neg) in images {
            if idx == 0 || idx as usize > n || seen[(idx - 1) as usize] {
                return Err(Error::Internal("not a permutation".into()));
            }
            seen[(idx - 1) as usize] = true;
            if neg {
                negatives += 1;
            }
        }
        if kind == RootSystemKind::AInf && negatives > 0 {
            return Err(Error::Internal("kind A admits no sign changes".into()));
        }
        if kind == RootSystemKind::DInf && negatives % 2 == 1 {
            return Err(Error::Internal("kind D requires an even number of sign changes".into()));
        }
        let mut map = BTreeMap::new();
        for (pos, &(idx, neg)) in images.iter().enumerate() {
            let src = (pos + 1) as u32;
            if idx == src && !neg {
                continue;
            }
            map.insert(src, Image { index: idx, negative: neg });
        }
        Ok(WeylElement { kind, map })
    }

    pub fn kind(&self) -> RootSystemKind {
        self.kind
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_empty()
    }

    fn image(&self, i: u32) -> Image {
        self.map.get(&i).copied().unwrap_or(Image { index: i, negative: false })
    }

    /// Indices the element moves (or sign-flips).
    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.map.keys().copied()
    }

    pub fn support_max(&self) -> u32 {
        self.map.keys().next_back().copied().unwrap_or(0)
    }

    fn compose_unchecked(&self, rhs: &WeylElement) -> WeylElement {
        // (self ∘ rhs)(i): apply rhs first.
        let mut map = BTreeMap::new();
        let keys: Vec<u32> = self.map.keys().chain(rhs.map.keys()).copied().collect();
        for i in keys {
            let inner = rhs.image(i);
            let outer = self.image(inner.index);
            let img = Image { index: outer.index, negative: inner.negative ^ outer.negative };
            if img.index == i && !img.negative {
                map.remove(&i);
                continue;
            }
            map.insert(i, img);
        }
        WeylElement { kind: self.kind, map }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut map = BTreeMap::new();
        for (&i, img) in &self.map {
            map.insert(img.index, Image { index: i, negative: img.negative });
        }
        WeylElement { kind: self.kind, map }
    }
}

/// u ∘ v (v acts first).
pub fn multiply(u: &WeylElement, v: &WeylElement) -> Result<WeylElement> {
    if u.kind != v.kind {
        return Err(Error::KindMismatch);
    }
    Ok(u.compose_unchecked(v))
}

pub(crate) fn compose(u: &WeylElement, v: &WeylElement) -> WeylElement {
    debug_assert_eq!(u.kind, v.kind);
    u.compose_unchecked(v)
}

/// Sign of a two-term vector a·ε_p + b·ε_q (p ≠ q): negative iff the
/// coefficient at the larger index is negative.
fn two_term_negative(p: u32, a_neg: bool, q: u32, b_neg: bool) -> bool {
    if p > q {
        a_neg
    } else {
        b_neg
    }
}

/// True iff w maps the positive root α to a negative root.
fn sends_root_negative(w: &WeylElement, alpha: &Root) -> bool {
    match alpha.shape() {
        RootShape::JMinusI { i, j } => {
            let a = w.image(i);
            let b = w.image(j);
            // w(ε_j − ε_i) = (sign_b)ε_{b} − (sign_a)ε_{a}
            two_term_negative(b.index, b.negative, a.index, !a.negative)
        }
        RootShape::JPlusI { i, j } => {
            let a = w.image(i);
            let b = w.image(j);
            two_term_negative(b.index, b.negative, a.index, a.negative)
        }
        RootShape::Short { i } | RootShape::Long { i } => w.image(i).negative,
    }
}

/// Coxeter length: the number of positive roots of the support window that
/// w makes negative.
pub fn length(w: &WeylElement) -> u64 {
    let n = w.support_max();
    if n == 0 {
        return 0;
    }
    crate::rootdata::positive_roots_up_to(w.kind, n)
        .iter()
        .filter(|alpha| sends_root_negative(w, alpha))
        .count() as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Left or right descent test via root images.
pub fn descent(w: &WeylElement, k: u32, side: Side) -> Result<bool> {
    let alpha = Root::simple(w.kind(), k)?;
    Ok(match side {
        // ℓ(w s_k) < ℓ(w) iff w(α_k) < 0
        Side::Right => sends_root_negative(w, &alpha),
        // ℓ(s_k w) < ℓ(w) iff w⁻¹(α_k) < 0
        Side::Left => sends_root_negative(&w.inverse(), &alpha),
    })
}

/// A word in the simple generators. `from_word` multiplies left to right.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        write!(f, "{}", parts.join("."))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s == "e" {
            return Ok(Word(Vec::new()));
        }
        let mut letters = Vec::new();
        for part in s.split('.') {
            let k: u32 = part
                .parse()
                .map_err(|_| Error::BadGenerator(format!("invalid letter '{part}'")))?;
            if k == 0 {
                return Err(Error::BadGenerator("generator indices start at 1".into()));
            }
            letters.push(k);
        }
        Ok(Word(letters))
    }
}

/// Product of the simple reflections named by the word, left to right.
pub fn from_word(kind: RootSystemKind, word: &Word) -> Result<WeylElement> {
    let mut w = WeylElement::identity(kind);
    for &k in &word.0 {
        w = w.compose_unchecked(&WeylElement::simple(kind, k)?);
    }
    Ok(w)
}

/// The canonical reduced word: repeatedly strips the smallest right descent.
/// Its length equals the Coxeter length.
pub fn to_reduced_word(w: &WeylElement) -> Word {
    let mut letters_rev = Vec::new();
    let mut cur = w.clone();
    while !cur.is_identity() {
        let rank = minimal_rank_of(&cur);
        let gens = cur.kind.generator_count(rank);
        let mut stripped = false;
        for k in 1..=gens {
            if descent(&cur, k, Side::Right).expect("valid generator") {
                letters_rev.push(k);
                cur = cur.compose_unchecked(&WeylElement::simple(cur.kind, k).unwrap());
                stripped = true;
                break;
            }
        }
        assert!(stripped, "every non-identity element has a right descent in its own rank");
    }
    letters_rev.reverse();
    Word(letters_rev)
}

pub(crate) fn minimal_rank_of(w: &WeylElement) -> u32 {
    w.support_max().max(w.kind.min_rank())
}

/// Smallest n with x, y ∈ W_n.
pub fn minimal_rank(x: &WeylElement, y: &WeylElement) -> Result<u32> {
    if x.kind != y.kind {
        return Err(Error::KindMismatch);
    }
    Ok(minimal_rank_of(x).max(minimal_rank_of(y)))
}

/// Bruhat order via the subword property against the canonical reduced word
/// of y, with a memoized deletion search.
pub fn bruhat_leq(x: &WeylElement, y: &WeylElement) -> Result<bool> {
    if x.kind != y.kind {
        return Err(Error::KindMismatch);
    }
    if x.is_identity() {
        return Ok(true);
    }
    if length(x) > length(y) {
        return Ok(false);
    }
    let word = to_reduced_word(y);
    let mut memo: HashMap<(WeylElement, usize), bool> = HashMap::new();
    Ok(subword_match(x, &word.0, 0, &mut memo))
}

fn subword_match(
    x: &WeylElement,
    word: &[u32],
    pos: usize,
    memo: &mut HashMap<(WeylElement, usize), bool>,
) -> bool {
    if x.is_identity() {
        return true;
    }
    let remaining = word.len() - pos;
    if length(x) as usize > remaining {
        return false;
    }
    let key = (x.clone(), pos);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let s = word[pos];
    // either position `pos` is unused, or it is the first letter of a
    // reduced expression of x, which requires s to be a left descent
    let mut ok = subword_match(x, word, pos + 1, memo);
    if !ok && descent(x, s, Side::Left).expect("valid generator") {
        let sx = WeylElement::simple(x.kind, s).unwrap().compose_unchecked(x);
        ok = subword_match(&sx, word, pos + 1, memo);
    }
    memo.insert(key, ok);
    ok
}

/// The full lower Bruhat interval [e, v]: scanning a reduced word of v and
/// closing under right multiplication yields exactly {z : z ≤ v}.
pub fn lower_bruhat_interval(v: &WeylElement) -> Vec<WeylElement> {
    let word = to_reduced_word(v);
    let mut set: Vec<WeylElement> = vec![WeylElement::identity(v.kind)];
    let mut seen: HashSet<WeylElement> = set.iter().cloned().collect();
    for &k in &word.0 {
        let s = WeylElement::simple(v.kind, k).unwrap();
        let mut new_elems = Vec::new();
        for z in &set {
            let zs = z.compose_unchecked(&s);
            if seen.insert(zs.clone()) {
                new_elems.push(zs);
            }
        }
        set.extend(new_elems);
    }
    set
}

/// The longest element of the rank-n truncation: the order-reversing
/// permutation (A), −1 on all of 1..=n (B, C), and −1 with the sign at
/// index 1 restored when n is odd (D; index 1 is the fork end in this
/// ascending numbering, so this is the parity-respecting choice).
pub fn longest_element(kind: RootSystemKind, n: u32) -> Result<WeylElement> {
    if n < kind.min_rank() {
        return Err(Error::RankTooSmall);
    }
    let images: Vec<(u32, bool)> = match kind {
        RootSystemKind::AInf => (1..=n).map(|i| (n + 1 - i, false)).collect(),
        RootSystemKind::BInf | RootSystemKind::CInf => (1..=n).map(|i| (i, true)).collect(),
        RootSystemKind::DInf => (1..=n).map(|i| (i, !(n % 2 == 1 && i == 1))).collect(),
    };
    WeylElement::from_images(kind, &images)
}

/// The dot action w·λ = w(λ+ρ) − ρ, touching only the support of w.
pub fn apply_dot(w: &WeylElement, lambda: &Weight) -> Result<Weight> {
    if w.kind != lambda.kind() {
        return Err(Error::KindMismatch);
    }
    let winv = w.inverse();
    let changes: Vec<(u32, Rat)> = w
        .map
        .keys()
        .map(|&i| {
            let src = winv.image(i);
            let mut v = lambda.shifted_coord(src.index);
            if src.negative {
                v = -v;
            }
            (i, v - Weight::rho_coord(w.kind, i))
        })
        .collect();
    Ok(lambda.with_coords(&changes))
}

/// True iff s_α·λ − λ lies in the root lattice, i.e. ⟨λ+ρ, α∨⟩ ∈ ℤ.
pub fn reflection_is_integral(lambda: &Weight, alpha: &Root) -> Result<bool> {
    Ok(shifted_pairing(lambda, alpha)?.is_integer())
}

/// All elements of the rank-n truncation W_n. Exhaustive; intended for
/// small-rank sweeps and the oracle module.
pub fn all_elements(kind: RootSystemKind, n: u32) -> Vec<WeylElement> {
    let perms = permutations(n);
    let mut out = Vec::new();
    match kind {
        RootSystemKind::AInf => {
            for p in &perms {
                let images: Vec<(u32, bool)> = p.iter().map(|&i| (i, false)).collect();
                out.push(WeylElement::from_images(kind, &images).unwrap());
            }
        }
        _ => {
            for p in &perms {
                for mask in 0u32..(1 << n) {
                    if kind == RootSystemKind::DInf && mask.count_ones() % 2 == 1 {
                        continue;
                    }
                    let images: Vec<(u32, bool)> = p
                        .iter()
                        .enumerate()
                        .map(|(pos, &i)| (i, mask & (1 << pos) != 0))
                        .collect();
                    out.push(WeylElement::from_images(kind, &images).unwrap());
                }
            }
        }
    }
    out
}

fn permutations(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut items: Vec<u32> = (1..=n).collect();
    heap_permute(items.len(), &mut items, &mut out);
    out
}

fn heap_permute(k: usize, items: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if k <= 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(k - 1, items, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", to_reduced_word(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::reflect_dot;

    fn s(kind: RootSystemKind, k: u32) -> WeylElement {
        WeylElement::simple(kind, k).unwrap()
    }

    fn w(kind: RootSystemKind, letters: &[u32]) -> WeylElement {
        from_word(kind, &Word(letters.to_vec())).unwrap()
    }

    #[test]
    fn multiply_examples() {
        let a = RootSystemKind::AInf;
        let e = WeylElement::identity(a);
        let s1 = s(a, 1);
        assert_eq!(multiply(&e, &s1).unwrap(), s1);
        assert_eq!(multiply(&s1, &s1).unwrap(), e);
        let three_cycle = multiply(&s1, &s(a, 2)).unwrap();
        assert_eq!(three_cycle.support_max(), 3);
        assert_eq!(length(&three_cycle), 2);
        assert_eq!(
            multiply(&s1, &s(RootSystemKind::BInf, 1)).unwrap_err(),
            Error::KindMismatch
        );
    }

    #[test]
    fn length_examples() {
        for kind in RootSystemKind::ALL {
            assert_eq!(length(&WeylElement::identity(kind)), 0);
            for k in 1..=4 {
                assert_eq!(length(&s(kind, k)), 1, "{kind:?} s_{k}");
            }
        }
        let a3_longest = longest_element(RootSystemKind::AInf, 3).unwrap();
        assert_eq!(length(&a3_longest), 3);
    }

    #[test]
    fn longest_element_lengths_match_positive_root_counts() {
        for kind in RootSystemKind::ALL {
            for n in kind.min_rank()..=5 {
                let w0 = longest_element(kind, n).unwrap();
                assert_eq!(length(&w0), kind.positive_root_count(n), "{kind:?} rank {n}");
                // w0 is an involution with every generator of W_n a descent
                assert!(multiply(&w0, &w0).unwrap().is_identity());
                for k in 1..=kind.generator_count(n) {
                    assert!(descent(&w0, k, Side::Right).unwrap());
                    assert!(descent(&w0, k, Side::Left).unwrap());
                }
            }
        }
        assert_eq!(longest_element(RootSystemKind::DInf, 1).unwrap_err(), Error::RankTooSmall);
        assert_eq!(length(&longest_element(RootSystemKind::BInf, 2).unwrap()), 4);
        assert_eq!(length(&longest_element(RootSystemKind::DInf, 2).unwrap()), 2);
    }

    #[test]
    fn words_round_trip_and_braid() {
        let a = RootSystemKind::AInf;
        assert_eq!(to_reduced_word(&WeylElement::identity(a)), Word(vec![]));
        assert_eq!(w(a, &[1, 2, 1]), w(a, &[2, 1, 2]));
        let b = RootSystemKind::BInf;
        assert_eq!(w(b, &[1, 2, 1, 2]), w(b, &[2, 1, 2, 1]));
        for kind in RootSystemKind::ALL {
            for letters in [vec![1u32, 2], vec![2, 3, 2], vec![1, 2, 3, 1]] {
                let x = w(kind, &letters);
                let word = to_reduced_word(&x);
                assert_eq!(from_word(kind, &word).unwrap(), x);
                assert_eq!(word.len() as u64, length(&x));
            }
        }
    }

    #[test]
    fn descent_examples() {
        let a = RootSystemKind::AInf;
        assert!(!descent(&WeylElement::identity(a), 3, Side::Left).unwrap());
        assert!(descent(&s(a, 1), 1, Side::Left).unwrap());
        let s1s2 = w(a, &[1, 2]);
        assert!(descent(&s1s2, 2, Side::Right).unwrap());
        assert!(!descent(&s1s2, 1, Side::Right).unwrap());
    }

    #[test]
    fn descent_agrees_with_length_difference() {
        for kind in RootSystemKind::ALL {
            for x in all_elements(kind, 3) {
                for k in 1..=kind.generator_count(4) {
                    let sk = s(kind, k);
                    let right = length(&multiply(&x, &sk).unwrap()) < length(&x);
                    assert_eq!(descent(&x, k, Side::Right).unwrap(), right, "{kind:?} {x:?} {k}");
                    let left = length(&multiply(&sk, &x).unwrap()) < length(&x);
                    assert_eq!(descent(&x, k, Side::Left).unwrap(), left);
                }
            }
        }
    }

    #[test]
    fn bruhat_examples() {
        let a = RootSystemKind::AInf;
        let y = w(a, &[2, 1, 3, 2]);
        assert!(bruhat_leq(&WeylElement::identity(a), &y).unwrap());
        assert!(!bruhat_leq(&s(a, 1), &s(a, 2)).unwrap());
        assert!(bruhat_leq(&s(a, 2), &y).unwrap());
    }

    #[test]
    fn lower_interval_sizes() {
        let a = RootSystemKind::AInf;
        // [e, w0(S_3)] is the whole of S_3
        let w0 = longest_element(a, 3).unwrap();
        assert_eq!(lower_bruhat_interval(&w0).len(), 6);
        let w0b2 = longest_element(RootSystemKind::BInf, 2).unwrap();
        assert_eq!(lower_bruhat_interval(&w0b2).len(), 8);
    }

    #[test]
    fn minimal_rank_examples() {
        let a = RootSystemKind::AInf;
        let e = WeylElement::identity(a);
        assert_eq!(minimal_rank(&e, &e).unwrap(), 1);
        assert_eq!(minimal_rank(&s(a, 3), &s(a, 1)).unwrap(), 4);
        let d = RootSystemKind::DInf;
        assert_eq!(minimal_rank(&s(d, 1), &s(d, 1)).unwrap(), 2);
    }

    #[test]
    fn apply_dot_matches_reflections_along_words() {
        let a = RootSystemKind::AInf;
        let zero = Weight::zero(a);
        assert_eq!(apply_dot(&s(a, 1), &zero).unwrap(), Weight::from_ints(a, &[1, -1]));

        for kind in RootSystemKind::ALL {
            let lam = Weight::from_ints(kind, &[2, 0, -1]);
            for letters in [vec![1u32, 2], vec![2, 1], vec![1, 2, 3, 1]] {
                let x = w(kind, &letters);
                let via_element = apply_dot(&x, &lam).unwrap();
                // fold reflections right-to-left: x·λ = s_{k1}·(s_{k2}·(…·λ))
                let mut via_roots = lam.clone();
                for &k in letters.iter().rev() {
                    let alpha = Root::simple(kind, k).unwrap();
                    via_roots = reflect_dot(&via_roots, &alpha).unwrap();
                }
                assert_eq!(via_element, via_roots, "{kind:?} {letters:?}");
            }
        }
    }

    #[test]
    fn apply_dot_inverse_is_inverse() {
        for kind in RootSystemKind::ALL {
            let lam: Weight = format!("{}[5/2,-1,3]", kind.letter()).parse().unwrap();
            let x = w(kind, &[1, 2, 3]);
            let there = apply_dot(&x, &lam).unwrap();
            let back = apply_dot(&x.inverse(), &there).unwrap();
            assert_eq!(back, lam);
        }
    }

    #[test]
    fn reflection_integrality_examples() {
        let a = RootSystemKind::AInf;
        let alpha = Root::simple(a, 1).unwrap();
        assert!(reflection_is_integral(&Weight::zero(a), &alpha).unwrap());
        let half: Weight = "A[1/2]".parse().unwrap();
        assert!(!reflection_is_integral(&half, &alpha).unwrap());
        let both: Weight = "A[1/2,1/2]".parse().unwrap();
        assert!(reflection_is_integral(&both, &alpha).unwrap());
    }

    #[test]
    fn group_orders() {
        assert_eq!(all_elements(RootSystemKind::AInf, 4).len(), 24);
        assert_eq!(all_elements(RootSystemKind::BInf, 3).len(), 48);
        assert_eq!(all_elements(RootSystemKind::CInf, 2).len(), 8);
        assert_eq!(all_elements(RootSystemKind::DInf, 3).len(), 24);
    }

    #[test]
    fn length_is_subadditive_exhaustively() {
        for kind in RootSystemKind::ALL {
            for n in [3u32, 4] {
                let elems = all_elements(kind, n);
                for u in &elems {
                    for v in &elems {
                        let prod = multiply(u, v).unwrap();
                        assert!(length(&prod) <= length(u) + length(v));
                    }
                }
            }
        }
    }

    #[test]
    fn small_longest_elements() {
        // rank 2 of kind A is the transposition (1 2)
        assert_eq!(longest_element(RootSystemKind::AInf, 2).unwrap(), s(RootSystemKind::AInf, 1));
        // rank 2 of kind B is −1, reached by 1.2.1.2
        assert_eq!(
            longest_element(RootSystemKind::BInf, 2).unwrap(),
            w(RootSystemKind::BInf, &[1, 2, 1, 2])
        );
    }
}
