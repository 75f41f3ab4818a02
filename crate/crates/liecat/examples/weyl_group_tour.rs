//! The direct-limit Weyl groups as finitely supported signed permutations:
//! words, lengths, descents, Bruhat order, longest elements of the finite
//! truncations, and the dot action on weights.
//!
//! ```bash
//! cargo run -p liecat --example weyl_group_tour
//! ```

use liecat::rootdata::{RootSystemKind, Weight};
use liecat::weyl::{
    apply_dot, bruhat_leq, descent, from_word, length, longest_element, minimal_rank,
    to_reduced_word, Side, WeylElement, Word,
};

fn main() {
    for kind in RootSystemKind::ALL {
        let w0 = longest_element(kind, 4).unwrap();
        println!(
            "{kind:?}: longest element of rank 4 has length {} and word {}",
            length(&w0),
            to_reduced_word(&w0)
        );
    }

    let a = RootSystemKind::AInf;
    let x = from_word(a, &Word(vec![2, 1, 3, 2])).unwrap();
    println!("x = {x}, length {}", length(&x));
    println!("  right descent at 2: {}", descent(&x, 2, Side::Right).unwrap());
    println!("  e <= x: {}", bruhat_leq(&WeylElement::identity(a), &x).unwrap());
    let s2 = WeylElement::simple(a, 2).unwrap();
    println!("  s2 <= x: {}", bruhat_leq(&s2, &x).unwrap());
    println!("  minimal rank of (x, s2): {}", minimal_rank(&x, &s2).unwrap());

    // braid relation: two words, one element
    let lhs = from_word(a, &Word(vec![1, 2, 1])).unwrap();
    let rhs = from_word(a, &Word(vec![2, 1, 2])).unwrap();
    println!("braid 1.2.1 = 2.1.2: {}", lhs == rhs);

    // the dot action touches only the support of the element
    let lam: Weight = "B[1,-2;lin(0,-1)]".parse().unwrap();
    let w = from_word(RootSystemKind::BInf, &Word(vec![1, 2])).unwrap();
    println!("{w} · {lam} = {}", apply_dot(&w, &lam).unwrap());
}
