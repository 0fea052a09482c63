//! Partition statistics tied to Ramanujan's congruence modulo 5.
//!
//! The crate covers the classical statistics (Dyson rank, Andrews-Garvan
//! crank, Stanley's srank), the stcrank statistic and the two bijections
//! behind it, t-cores and the 5-core crank with its orbit operators, and an
//! exact truncated q-series kernel used to check generating-function
//! identities against brute-force enumeration.

pub mod cores;
pub mod error;
pub mod partition;
pub mod qseries;
pub mod stanley;
pub mod stats;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{partition_count, partitions, Partition};
