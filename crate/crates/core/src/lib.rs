//! Exact computation of degenerate Stirling polynomials of the second kind,
//! degenerate r-Whitney numbers, and Carlitz degenerate Bernoulli and Euler
//! polynomials over the polynomial ring `Q[x, l]`, where `l` stands for the
//! degeneracy parameter lambda.
//!
//! Every quantity is computed by at least two independent routes (closed-form
//! sums, recurrences, truncated generating functions) and the [`verify`]
//! module checks that the routes agree exactly.

pub mod deg_stirling;
pub mod degenerate;
pub mod difference;
pub mod egf;
pub mod error;
pub mod euler_bernoulli;
pub mod gf_oracle;
pub mod poly;
pub mod rational;
pub mod stirling;
pub mod verify;
pub mod whitney;

pub use egf::EgfSeries;
pub use error::{Error, Result};
pub use poly::MultiPoly;
pub use rational::Rational;
pub use whitney::WhitneyParams;
