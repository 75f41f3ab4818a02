//! Kazhdan-Lusztig polynomials in the finite truncations: the recursion,
//! μ-coefficients, the rank-independence of P_{x,y}, and the two singular
//! classes of the rank-4 symmetric group.
//!
//! ```bash
//! cargo run -p liecat --example kl_polynomials
//! ```

use liecat::kl::{kl_poly, mu_coeff, stabilization_check, KlCache};
use liecat::oracle::{kl_from_r, OracleBound};
use liecat::rootdata::RootSystemKind;
use liecat::weyl::{from_word, WeylElement, Word};

fn main() {
    let a = RootSystemKind::AInf;
    let cache = KlCache::new();
    let w = |letters: &[u32]| from_word(a, &Word(letters.to_vec())).unwrap();

    // the permutation 3412 and its singular locus generator
    let y = w(&[2, 1, 3, 2]);
    let x = w(&[2]);
    let p = kl_poly(a, &x, &y, &cache).unwrap();
    println!("P({x}, {y}) = {p}");
    println!("  value at 1: {}", p.eval_one());
    println!("  mu coefficient: {}", mu_coeff(a, &x, &y, &cache).unwrap());

    // the identity column of the same element
    let e = WeylElement::identity(a);
    println!("P(e, {y}) = {}", kl_poly(a, &e, &y, &cache).unwrap());

    // the other singular class, 4231 over 2143
    let y2 = w(&[1, 2, 3, 2, 1]);
    let x2 = w(&[1, 3]);
    println!("P({x2}, {y2}) = {}", kl_poly(a, &x2, &y2, &cache).unwrap());

    // the independent R-polynomial route agrees
    let bound = OracleBound::default();
    println!("R-route check: {}", kl_from_r(a, &x, &y, &bound).unwrap());

    // polynomials do not depend on the ambient rank
    println!(
        "stable across three extra ranks: {}",
        stabilization_check(a, &x, &y, 3, &cache).unwrap()
    );
}
