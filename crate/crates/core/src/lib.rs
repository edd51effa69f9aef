//! Optimal cube factors of Fibonacci cubes and matchable Lucas cubes.

pub mod error;
pub mod graphs;
pub mod oeis;
pub mod polynomials;
pub mod report;
pub mod sequences;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use polynomials::{CubeFactorPolynomial, Family};
