//! Sylow-subgroup invariants and structural subgroups.

mod arith;
mod composition;
mod structure;
mod sylow;

pub use arith::{digit_sum, exact_log, factorize, is_pi_number, is_prime, p_part, prime_divisors};
pub use composition::{
    composition_factors, composition_factors_with, is_internal_direct_product, minimal_normal_subgroups,
    simple_subnormals, CompositionData, CompositionFactor, SimpleSubnormals, TieBreak,
};
pub use structure::{
    fitting, frattini, is_nilpotent, is_simple, is_soluble, o_p_core, o_pi_core, o_upper_pi, quotient_is_nilpotent,
    structure_predicates, StructurePredicates,
};
pub use sylow::{elementary_quotient_rank, invariant_profile, min_generators, pgroup_frattini, sylow_subgroup, InvariantProfile};
