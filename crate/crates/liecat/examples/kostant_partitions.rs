//! Kostant partition counts and Verma weight-space dimensions. The number
//! of ways to write a root-lattice element as a multiset of positive roots
//! is exactly dim M(λ)^ξ at ξ = λ − β.
//!
//! ```bash
//! cargo run -p liecat --example kostant_partitions
//! ```

use liecat::category_o::verma_weight_dim;
use liecat::rootdata::{kostant_partition, LatticeElement, RootSystemKind, Weight};

fn main() {
    // α_1 + α_2 in kind A: {α_1, α_2} and {ε_3 − ε_1}
    let a = RootSystemKind::AInf;
    let beta = LatticeElement::from_ints(a, &[-1, 0, 1]).unwrap();
    println!("A partitions of alpha_1 + alpha_2: {}", kostant_partition(a, &beta));

    // ε_1 + ε_2 in kind B: three decompositions
    let b = RootSystemKind::BInf;
    let beta_b = LatticeElement::from_ints(b, &[1, 1]).unwrap();
    println!("B partitions of e1 + e2: {}", kostant_partition(b, &beta_b));

    // counts grow quickly with the height
    let tall = LatticeElement::from_ints(b, &[2, 3, 1]).unwrap();
    println!("B partitions of (2,3,1): {}", kostant_partition(b, &tall));

    // the same numbers as weight-space dimensions of a Verma module
    let zero = Weight::zero(a);
    for text in ["A[]", "A[1,-1]", "A[1,0,-1]", "A[2,0,-2]"] {
        let xi: Weight = text.parse().unwrap();
        println!("dim M(A[])^({xi}) = {}", verma_weight_dim(&zero, &xi).unwrap());
    }
}
