//! Permutation-group toolkit for checking Frattini-subgroup bounds on a corpus
//! of small groups.

pub mod algebra;
pub mod corpus;
pub mod error;
pub mod invariants;
pub mod par;
pub mod perm;
pub mod verify;

pub use error::{Error, Result};
