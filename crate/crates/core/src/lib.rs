//! Exact Wigner 2j/3j/6j symbols, spin-network evaluation, tetrahedral
//! geometry and Ponzano–Regge asymptotics.

pub mod cli;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod km;
pub mod network;
pub mod semiclassical;
pub mod symbols;

pub use error::{Error, Result};
pub use exact::{ExactRadical, HalfInt};
