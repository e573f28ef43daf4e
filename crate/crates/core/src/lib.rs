//! Exact Jack, shifted Jack and multivariate Bernoulli polynomials.
//!
//! Everything is computed over `Q` with arbitrary-precision rationals; the
//! Jack parameter is `d/2` for a positive rational `d`.

pub mod error;
pub mod linalg;
pub mod partition;
pub mod rational;
pub mod raw;
pub mod sympoly;

pub mod jack;
pub mod memo;
pub mod shifted;

pub mod bernoulli;
pub mod closed_forms;
pub mod series;

pub mod cache;
pub mod cli;
pub mod json;
pub mod report;
pub mod suites;

pub use error::{Error, Result};
pub use partition::Partition;
pub use rational::Rational;
pub use sympoly::SymPoly;
