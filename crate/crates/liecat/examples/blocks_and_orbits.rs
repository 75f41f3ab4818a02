//! Block membership: two weights lie in the same block exactly when an
//! integral Weyl element carries one dot-orbit onto the other. The block
//! test works for non-integral weights too, where only part of the Weyl
//! group acts integrally.
//!
//! ```bash
//! cargo run -p liecat --example blocks_and_orbits
//! ```

use liecat::category_o::same_block;
use liecat::oracle::block_orbit;
use liecat::rootdata::{RootSystemKind, Weight};
use liecat::weyl::{apply_dot, WeylElement};

fn main() {
    let zero = Weight::zero(RootSystemKind::AInf);
    let s1 = WeylElement::simple(RootSystemKind::AInf, 1).unwrap();
    let refl = apply_dot(&s1, &zero).unwrap();
    println!("{zero} ~ {refl}: {}", same_block(&zero, &refl).unwrap());

    // a root-lattice translate that is not an orbit point
    let off: Weight = "A[2,-2]".parse().unwrap();
    println!("{zero} ~ {off}: {}", same_block(&zero, &off).unwrap());

    // non-integral weights with a partially integral Weyl group
    let half: Weight = "A[1/2,1/2]".parse().unwrap();
    let half_refl = apply_dot(&s1, &half).unwrap();
    println!("{half} ~ {half_refl}: {}", same_block(&half, &half_refl).unwrap());

    // the full rank-3 principal block of kind B: 48 orbit weights between
    // the antidominant bottom and the dominant top
    let (bottom, orbit) = block_orbit(&Weight::zero(RootSystemKind::BInf), 3).unwrap();
    println!(
        "B rank-3 principal block: {} weights, bottom {bottom}, top {}",
        orbit.len(),
        orbit.last().unwrap()
    );
}
