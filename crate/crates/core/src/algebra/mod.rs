//! Exact arithmetic: rationals, integer polynomials, real cyclotomic
//! combinations, real algebraic numbers, and quadratic towers.

pub mod cyclotomic;
pub mod expr;
pub mod interval;
pub mod poly;
pub mod rational;
pub mod real;
pub mod scalar;
pub mod tower;

pub use cyclotomic::{CycReal, FracCyc};
pub use rational::Rat;
pub use real::{AlgebraError, AlgebraicReal};
pub use scalar::ExactScalar;
pub use tower::Tw;
