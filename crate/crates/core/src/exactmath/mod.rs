//! Exact rational arithmetic and linear algebra.

mod matrix;
mod rational;

pub use matrix::{RationalMatrix, RowEchelon};
pub use rational::{ParseRationalError, Rational};
