//! The category-O level API: weight classification, Verma predicates,
//! strong linkage, block membership, composition multiplicities, characters,
//! and truncated BGG reciprocity.

mod blocks;
mod classify;
mod linkage;
mod mult;

pub use blocks::same_block;
pub use classify::{classify, WeightClass};
pub use linkage::{
    strong_linkage_chain, verma_has_finite_length, verma_hom_dim, verma_is_simple, LinkageChain,
};
pub use mult::{
    composition_series_window, injective_character_dim, multiplicity,
    multiplicity_with_stabilization, simple_weight_dim, truncated_reciprocity_table,
    verma_weight_dim, MultiplicityTable, ReciprocityRow,
};

pub(crate) use blocks::integral_weyl_min;
pub(crate) use mult::verma_weight_dim_cached;
