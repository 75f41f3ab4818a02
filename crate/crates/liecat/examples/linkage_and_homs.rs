//! Strong linkage chains and Verma homomorphism dimensions. A nonzero map
//! M(λ) → M(μ) exists exactly when a descending chain of dot reflections
//! with positive-integer shifted pairings carries μ down to λ.
//!
//! ```bash
//! cargo run -p liecat --example linkage_and_homs
//! ```

use liecat::category_o::{strong_linkage_chain, verma_hom_dim};
use liecat::rootdata::{RootSystemKind, Weight};
use liecat::weyl::{apply_dot, from_word, Word};

fn main() {
    let zero = Weight::zero(RootSystemKind::AInf);

    // walk the zero weight down two reflections inside the rank-3 world
    let w = from_word(RootSystemKind::AInf, &Word(vec![2, 1])).unwrap();
    let low = apply_dot(&w, &zero).unwrap();
    println!("target {low}");

    match strong_linkage_chain(&low, &zero).unwrap() {
        None => println!("  not linked"),
        Some(chain) => {
            let roots: Vec<String> = chain.roots.iter().map(|r| r.to_string()).collect();
            println!("  linked through [{}]", roots.join(", "));
        }
    }

    // hom dimensions: always 0 or 1, and 1 forces the order relation
    println!("dim Hom(M({low}), M({zero})) = {}", verma_hom_dim(&low, &zero).unwrap());
    println!("dim Hom(M({zero}), M({low})) = {}", verma_hom_dim(&zero, &low).unwrap());

    // off the orbit nothing maps
    let stranger: Weight = "A[2,-2]".parse().unwrap();
    println!(
        "dim Hom(M({stranger}), M({zero})) = {}",
        verma_hom_dim(&stranger, &zero).unwrap()
    );
}
