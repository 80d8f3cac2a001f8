//! Element tables, subgroups and the basic subgroup constructions.

mod aut;
mod lattice;
mod ops;
mod quotient;
mod table;

pub use aut::{automorphism_generators, is_characteristic, AutGenerators, AutStatus, Automorphism, Characteristic};
pub use lattice::{subgroup_lattice, LatticeBudget, SubgroupLattice};
pub use ops::*;
pub use quotient::{quotient, Quotient};
pub use table::{ElementTable, Subgroup, CAYLEY_LIMIT};
