//! Exact local data, constant assembly, and enumeration for counting integer
//! matrices with a fixed irreducible characteristic polynomial.

pub mod arith;
pub mod error;
pub mod poly;
pub mod rational;

pub use error::{Error, Result};
pub use poly::IntPolynomial;
pub use rational::ExactRational;
