//! Subgroups of prime-power order in finite permutation groups.
//!
//! The crate builds small groups as permutation groups, counts their
//! subgroups of order `p^a` exactly, checks the classical congruences those
//! counts satisfy, and classifies integers as realizable subgroup counts.

pub mod arith;
pub mod error;
pub mod perm;

pub use error::{Error, Result};
pub mod field;
pub mod groups;
pub mod hallpoly;
pub mod counting;
pub mod corpus;
pub mod verify;
pub mod report;
pub mod cli;
