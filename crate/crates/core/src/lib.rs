//! Exact computations for diagram monoids: partition, Brauer, Jones and
//! planar partition monoids, plus full transformation semigroups.
//!
//! The crate builds J-class structure, projection and Graham-Houghton graphs,
//! decides generation of ideals by idempotents, evaluates the associated
//! counting sequences and cross-checks them with brute force.

pub mod counting;
pub mod diagram;
pub mod error;
pub mod graphs;
pub mod oracle;
pub mod repdims;
pub mod semigroup;
pub mod tables;

pub use error::{Error, Result};
