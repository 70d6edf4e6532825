//! Exact symbolic engine for formal deformation quantization on flat charts.
//!
//! The crate builds star products (standard/Weyl exponential, Gutt, flat
//! Fedosov), equivalence transformations and representations, and decides
//! algebraic conditions — adaptedness to a coisotropic submanifold,
//! projectability, recursive obstructions, reduction — with exact rational
//! or Gaussian-rational arithmetic throughout. Every check is a
//! zero-vs-nonzero decision; there is no floating point anywhere.

pub mod algebra;
pub mod casebook;
pub mod coiso;
pub mod error;
pub mod fedosov;
pub mod gutt;
pub mod report;
pub mod starprod;
pub mod textio;

pub use error::{Error, Result};
