//! Truncated BGG reciprocity: inside the truncation below a fixed weight,
//! simple objects acquire injective hulls with finite co-Verma filtrations,
//! and the filtration multiplicities equal composition multiplicities. The
//! table reports both sides through independent pipelines.
//!
//! ```bash
//! cargo run -p liecat --example bgg_reciprocity
//! ```

use liecat::category_o::{injective_character_dim, truncated_reciprocity_table};
use liecat::kl::KlCache;
use liecat::rootdata::{kostant_partition, lattice_diff, RootSystemKind, Weight};
use liecat::weyl::{apply_dot, from_word, Word};

fn main() {
    let a = RootSystemKind::AInf;
    let cache = KlCache::new();
    let zero = Weight::zero(a);
    let dot = |letters: &[u32]| {
        apply_dot(&from_word(a, &Word(letters.to_vec())).unwrap(), &zero).unwrap()
    };

    // truncate the rank-3 principal block at its top and look at the socle
    // weight two steps down
    let top = zero.clone();
    let mu = dot(&[1, 2]);
    println!("I^(<= {top})({mu}) filtration:");
    for row in truncated_reciprocity_table(&top, &mu, &cache).unwrap() {
        println!(
            "  V({}) appears {} time(s); [M({}) : L({mu})] = {}",
            row.nu, row.verma_mult_in_p, row.nu, row.comp_mult_in_m
        );
    }

    // a character value of the truncated injective
    let zeta = dot(&[2, 1, 2]);
    println!(
        "dim I^(<= {top})({mu}) at {zeta}: {}",
        injective_character_dim(&top, &mu, &zeta, &cache).unwrap()
    );

    // truncating at the top of its own orbit degenerates the injective to a
    // single co-Verma: the character is a plain partition count
    let beta = lattice_diff(&mu, &zeta).unwrap().unwrap();
    println!(
        "dim I^(<= {mu})({mu}) at {zeta}: {} = kostant {}",
        injective_character_dim(&mu, &mu, &zeta, &cache).unwrap(),
        kostant_partition(a, &beta)
    );
}
