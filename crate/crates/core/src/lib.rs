//! Nilpotent-orbit calculus for real classical groups.
//!
//! Complex orbits are labelled by column partitions, K-orbits by signed
//! column diagrams. On top of these the crate implements descent, theta lift
//! and induction of orbits, component groups and admissible orbit data, the
//! descent-chain construction and the resulting unipotent counts. The
//! [`oracle`] module recomputes the combinatorial answers from explicit
//! integer matrices.

pub mod complex_orbits;
pub mod diagrams;
pub mod error;
pub mod isotropy;
pub mod oracle;
pub mod real_orbits;
pub mod unipotent;

pub use error::{Error, Result};
