//! Exact umbral calculus for Riordan arrays.
//!
//! Every sequence is a truncated moment sequence of rationals. Umbrae are
//! combined through their exponential generating functions, and a pair of
//! umbrae `(gamma, alpha)` generates either an exponential or an ordinary
//! Riordan array. All arithmetic is exact.
//!
//! ```
//! use riordan::identities::arrays;
//!
//! let t = arrays::catalan(8).triangle(5).unwrap();
//! assert_eq!(t.to_csv().lines().last(), Some("14,14,9,4,1"));
//! ```

#![allow(clippy::needless_range_loop)]

pub mod coefficients;
pub mod error;
pub mod genpowers;
pub mod identities;
pub mod recursions;
pub mod riordan;
pub mod series;
pub mod sheffer;
pub mod umbra;

pub use coefficients::Rational;
pub use error::{Error, Result};
pub use riordan::{Flavor, RiordanArray, Triangle};
pub use series::{Series, DEFAULT_ORDER};
pub use umbra::{Named, Umbra};
