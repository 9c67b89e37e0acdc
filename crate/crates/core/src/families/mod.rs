//! Weight specs, the family generators, and the ballot/`H_t` combinatorics.

mod ballot;
mod generate;
mod spec;

pub use ballot::{
    ballot_monomials, binomial, find_ht_subset, complement_pairing, gen_h_t, ht_bijection, ht_index, is_ballot,
    SubsetFamily,
};
pub use generate::{gen_complete_uniform, gen_linear_sperner, gen_mod_p, is_prime};
pub use spec::WeightSpec;
