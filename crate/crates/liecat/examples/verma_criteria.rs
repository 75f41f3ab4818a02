//! Decide simplicity and finite length of Verma modules. At infinite rank a
//! dominant highest weight no longer forces finite length: the zero weight
//! heads an infinite-length Verma module.
//!
//! ```bash
//! cargo run -p liecat --example verma_criteria
//! ```

use liecat::category_o::{verma_has_finite_length, verma_is_simple};
use liecat::rootdata::Weight;

fn show(text: &str) {
    let w: Weight = text.parse().unwrap();
    println!(
        "M({w}): simple = {}, finite length = {}",
        verma_is_simple(&w).unwrap(),
        verma_has_finite_length(&w).unwrap()
    );
}

fn main() {
    // antidominant highest weight: the Verma module is simple
    show("A[;lin(0,-2)]");

    // the zero weight of every kind: dominant, infinitely many ways down
    show("A[]");
    show("B[]");
    show("C[]");
    show("D[]");

    // finitely many positive-integer pairings: finite length without
    // simplicity
    show("A[-5;lin(0,-2)]");
}
