//! Permutations, stabilizer chains and permutation groups.

mod chain;
mod group;
mod permutation;

pub use chain::{ChainElements, StabilizerChain};
pub use group::{orbit, Group, Orbit};
pub use permutation::Permutation;
#[allow(unused_imports)]
pub(crate) use permutation::{gcd, lcm};
