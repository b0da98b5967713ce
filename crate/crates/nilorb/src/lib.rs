//! Partition-level combinatorics of nilpotent orbits in the classical and
//! exceptional complex simple Lie algebras: parametrization, dimensions,
//! closure order, parity collapse, parabolic induction, the "little orbit"
//! conditions, jet-scheme equation generation, and curated data for the
//! exceptional types.

pub mod error;
pub mod excdata;
pub mod induction;
pub mod jets;
pub mod orbits;
pub mod partitions;
pub mod rc;
pub mod rootsys;

pub use error::{Error, Result};
pub use orbits::{Algebra, Orbit};
pub use partitions::{EpsClass, Partition};
