//! Permutations, permutation groups and their actions.

mod action;
mod bsgs;
mod group;
mod permutation;
mod table;

pub use action::{
    block_system_joining, fixed_point_count, is_2_transitive, is_block_system, is_primitive,
    is_transitive, minimal_blocks, normalizer_bruteforce, orbit, orbits, rank,
    stabilizer_bruteforce, BlockSystem,
};
pub use bsgs::{Bsgs, Level};
pub use group::{PermGroup, DEFAULT_ENUMERATION_CAP};
pub use permutation::Permutation;
pub use table::{ElementTable, SubgroupHandle};
