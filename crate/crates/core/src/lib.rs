//! Exact arithmetic for pseudoalgebras, pseudobialgebras and Lie
//! pseudobialgebras over a cocommutative Hopf algebra.

pub mod algebra;
pub mod bialgebra;
pub mod check;
pub mod cohomology;
pub mod error;
pub mod hopf;
pub mod lie;
pub mod lincomb;
pub mod literal;
pub mod module;
pub mod pseudotensor;
pub mod sample;
pub mod ybe;

pub use error::{Error, Result};
