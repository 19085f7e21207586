//! Exact Boolean operations on lattice polygonal regions, with inner and outer
//! roundings back onto the integer lattice.
//!
//! Every result comes as a bracket `inner ⊆ exact ⊆ outer` where both roundings have
//! integer vertices and stay within Hausdorff distance √2 of the exact region.

pub mod arrangement;
pub mod cli;
pub mod decomposition;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod oracle;
pub mod rounding;
pub mod setops;
pub mod verify;

pub use error::{Error, Result};
