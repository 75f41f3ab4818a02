//! Classify weights across the four kinds: integrality, regularity,
//! dominance and antidominance, including their "almost" variants that only
//! make sense at infinite rank.
//!
//! ```bash
//! cargo run -p liecat --example classify_weights
//! ```

use liecat::category_o::classify;
use liecat::rootdata::Weight;

fn show(text: &str) {
    let w: Weight = text.parse().unwrap();
    let c = classify(&w).unwrap();
    println!("{w}");
    println!("  integral            {}", c.integral);
    println!("  regular             {}", c.regular);
    println!("  dominant            {}", c.dominant);
    println!("  almost dominant     {}", c.almost_dominant);
    println!("  antidominant        {}", c.antidominant);
    println!("  almost antidominant {}", c.almost_antidominant);
}

fn main() {
    // the zero weight: dominant in every kind, never antidominant
    show("A[]");

    // the strictly decreasing tail λ_i = −2i: a regular antidominant weight
    show("A[;lin(0,-2)]");

    // a finite perturbation spoils antidominance but keeps the almost flag
    show("A[-5;lin(0,-2)]");

    // a half-integer coordinate breaks integrality against the zero tail
    show("A[1/2]");

    // the all-halves weight of kind D is integral: roots pair coordinates
    // in sums and differences only
    show("D[;lin(1/2,0)]");

    // a singular weight: (λ+ρ) = (2, 2, 3, …) repeats a coordinate
    show("A[1]");
}
