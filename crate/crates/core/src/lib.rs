//! Exact enumeration of decorated lattice paths and trees.
//!
//! Every family is reachable three ways: a closed-form coefficient formula,
//! a truncated power-series expansion, and an exhaustive generator.

pub mod asymptotics;
pub mod biject;
pub mod error;
pub mod gfpaths;
pub mod gftrees;
pub mod numkernel;
pub mod pathgen;
pub mod series;
pub mod treegen;

pub use error::{Error, Result};
