//! Characteristic quasi-polynomials of Linial arrangements via shift operators.
//!
//! Exact rational arithmetic throughout; floating point only appears when
//! locating roots numerically in [`rootverify`].

pub mod arith;
pub mod arrangement;
pub mod cli;
pub mod ehrhart;
pub mod error;
pub mod eulerian;
pub mod poly;
pub mod quasipoly;
pub mod rational;
pub mod rootsystem;
pub mod rootverify;

pub use arrangement::{oracle_count, Linial};
pub use error::{Error, Result};
pub use poly::{Degree, RatPoly};
pub use quasipoly::{OperatorPoly, QuasiPoly};
pub use rational::Q;
pub use rootsystem::{catalog, catalog_str, Family, Label, RootSystemInfo};
