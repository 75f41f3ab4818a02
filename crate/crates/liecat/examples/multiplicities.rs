//! Composition-factor multiplicities of Verma modules over regular
//! integral blocks, through two independent pipelines: Kazhdan-Lusztig
//! evaluations and the character-subtraction recursion.
//!
//! ```bash
//! cargo run -p liecat --example multiplicities
//! ```

use liecat::category_o::{composition_series_window, multiplicity};
use liecat::kl::KlCache;
use liecat::oracle::multiplicities_by_char_subtraction;
use liecat::rootdata::{RootSystemKind, Weight};
use liecat::weyl::{apply_dot, from_word, Word};

fn main() {
    let a = RootSystemKind::AInf;
    let cache = KlCache::new();
    let zero = Weight::zero(a);
    let dot = |letters: &[u32]| {
        apply_dot(&from_word(a, &Word(letters.to_vec())).unwrap(), &zero).unwrap()
    };

    // the multiplicity-two factor of the rank-4 principal block
    let lam = dot(&[1, 3]);
    let mu = dot(&[1, 2, 3, 2, 1]);
    println!("[M({lam}) : L({mu})] = {}", multiplicity(&lam, &mu, &cache).unwrap());

    // a full composition-series window, KL route; the window bottom is the
    // antidominant weight of the rank-4 block
    let bottom = dot(&[1, 2, 1, 3, 2, 1]);
    let table = composition_series_window(&lam, &bottom, &lam, &cache).unwrap();
    println!("factors of M({lam}) over [{bottom}, {lam}]:");
    for (w, m) in table.rows() {
        println!("  L({w}) : {m}");
    }

    // and the character-subtraction route lands on the same table
    let by_chars = multiplicities_by_char_subtraction(&lam, &bottom, &cache).unwrap();
    println!("character subtraction agrees: {}", table.entries == by_chars.entries);
}
