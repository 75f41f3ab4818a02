//! Exact combinatorics of Verma modules over the infinite-rank classical
//! Lie algebras gl∞ (kind `A`), so∞ (kinds `B` and `D`), and sp∞ (kind `C`)
//! with their one-sided Dynkin Borel subalgebras.
//!
//! Everything is exact: rationals are arbitrary precision, polynomials have
//! integer coefficients, and every predicate that quantifies over the
//! infinitely many positive roots is decided in closed form. Weights are
//! rational coordinate sequences with a finite prefix and a tail rule
//! (`zero` or `lin(a,b)` for λ_i = a + b·i), which keeps dominance,
//! antidominance, integrality and regularity decidable at infinite rank.
//!
//! ## Start with the examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p liecat --example classify_weights    # weight classes and tails
//! cargo run -p liecat --example verma_criteria      # simplicity, finite length
//! cargo run -p liecat --example linkage_and_homs    # strong linkage, hom dims
//! cargo run -p liecat --example weyl_group_tour     # signed permutations, Bruhat order
//! cargo run -p liecat --example kostant_partitions  # partition counts, weight spaces
//! cargo run -p liecat --example kl_polynomials      # Kazhdan-Lusztig recursion
//! cargo run -p liecat --example blocks_and_orbits   # block membership, orbits
//! cargo run -p liecat --example multiplicities      # composition factors, two routes
//! cargo run -p liecat --example bgg_reciprocity     # truncated reciprocity tables
//! ```
//!
//! ## Module map
//!
//! * [`rootdata`]: weights, roots, pairings, the order `⪯`, finite
//!   intervals, Kostant partitions.
//! * [`weyl`]: the direct-limit Weyl group as finitely supported signed
//!   permutations; words, lengths, Bruhat order, the dot action.
//! * [`kl`]: Kazhdan-Lusztig polynomials with a shareable, optionally
//!   disk-backed cache.
//! * [`category_o`]: the category-O level API: classification, Verma
//!   predicates, blocks, multiplicities, truncated BGG reciprocity.
//! * [`oracle`]: independent brute-force ground truth for small ranks;
//!   `liecat selfcheck` runs it from the command line.
//! * [`cli`]: the `liecat` binary.
//!
//! ## A taste
//!
//! ```
//! use liecat::category_o::{multiplicity, verma_is_simple};
//! use liecat::kl::KlCache;
//! use liecat::rootdata::Weight;
//!
//! let cache = KlCache::new();
//! let zero: Weight = "A[]".parse().unwrap();
//! let reflected: Weight = "A[1,-1]".parse().unwrap();
//! assert_eq!(multiplicity(&zero, &reflected, &cache).unwrap(), 1);
//!
//! let anti: Weight = "A[;lin(0,-2)]".parse().unwrap();
//! assert!(verma_is_simple(&anti).unwrap());
//! ```

pub mod category_o;
pub mod cli;
pub mod error;
pub mod kl;
pub mod oracle;
pub mod poly;
pub mod rootdata;
pub mod weyl;

pub use error::{Error, Result};
pub use poly::LaurentPolynomial;
pub use rootdata::{LatticeElement, Root, RootShape, RootSystemKind, Tail, Weight, WeightInterval};
pub use weyl::{Side, WeylElement, Word};
