//! Group constructors, group files, suite configuration and the runner.

mod builtins;
mod config;
mod field;
mod file;
mod spec;
mod suite;

pub use builtins::{
    alt, closed_form_order, cyclic, dihedral, direct_product, elem_abelian, gl2_3, paper_example, q8, sl2, sl23,
    swap_product, sym, MAX_DEGREE, REGISTRY, SL2_FIELDS,
};
pub use config::{BudgetOverrides, Check, Format, GroupSpec, SuiteConfig, ALL_CHECKS, DEFAULT_CORPUS};
pub use field::Field;
pub use file::{load_group, parse_group, save_group, GroupFile};
pub use spec::{Arg, Built, GroupExpr};
pub use suite::{emit_report, render_json, render_text, run_check, run_suite, Summary, GLOBAL_GROUP};
