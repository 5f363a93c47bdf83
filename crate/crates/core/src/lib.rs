//! Exact-arithmetic Coxeter diagrams, two-dimensional Gale diagrams, and the
//! classification search for compact hyperbolic Coxeter n-polytopes with
//! n+3 facets.

pub mod algebra;
pub mod diagram;
pub mod gale;
pub mod search;
