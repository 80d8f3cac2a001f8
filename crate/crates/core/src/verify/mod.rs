//! Checkers that turn the theorems and supporting results into report
//! records.

mod bounds;
mod checks;
mod context;
mod oracles;
mod record;
mod theorem_a;
mod theorem_b;

pub use bounds::{
    case_i_bound, complement_bound, constants, example_image_bound, frattini_index_bound, g_sequence,
    schreier_bound, wolf_bound, wolf_max_order, BoundConstants, SatLog, SATURATION_LOG2, SLACK,
};
pub use checks::{
    comporb_check, example_check, fitting_quotient_check, gl_check, join_primes, profile_check,
    simple_group_checks, simple_group_record, structure_check, tate_check, theorem_a_check, theorem_b_check,
    theorem_c_check,
};
pub use context::{Budgets, CharTester, GroupContext};
pub use oracles::{
    max_nilpotent_by_odd_part, max_nilpotent_exhaustive, max_nilpotent_p_prime, symmetric_group, vdovin_check,
    vdovin_prediction, wolf_check, VDOVIN_EXHAUSTIVE_DEGREE, VDOVIN_MAX_DEGREE,
};
pub use record::{CheckRecord, Status};
pub use theorem_a::{
    conjugation_orbits, max_char_nonnilpotent_kernel, theorem_a_classify, CaseReport, PrimeOrbits, TheoremAReport,
};
pub use theorem_b::{theorem_b_verify, TheoremBReport};
