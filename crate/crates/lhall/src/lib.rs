//! Exact arithmetic for lecture hall combinatorics.
//!
//! The crate has three layers:
//!
//! * [`exactmath`] — big rationals, Laurent polynomials in (u, v), truncated
//!   q-series with Laurent coefficients, multivariate polynomials, and exact
//!   determinants.
//! * combinatorics — [`partitions`], the four truncated lecture hall
//!   families in [`lhcomb`], lecture hall tableaux in [`tableaux`], and the
//!   lattice path models in [`paths`].
//! * [`qjacobi`] — little q-Jacobi polynomials, their mixed moments, and the
//!   identities tying the moments back to the combinatorics.
//!
//! Everything is exact: integers and rationals are arbitrary precision and
//! q-series are truncated at an explicit cap, so two equal caps compare
//! coefficient-for-coefficient.
//!
//! ```
//! use lhall::lhcomb::{enum_set, genfun_closed, Variant};
//!
//! // the five anti-lecture hall compositions in AL_{2,1} of weight ≤ 4
//! let set = enum_set(Variant::AL, 2, 1, 4).unwrap();
//! assert_eq!(set.len(), 5);
//!
//! // and the closed product formula agrees with direct enumeration
//! let closed = genfun_closed(Variant::AL, 2, 1, 4).unwrap();
//! let count: Vec<i64> = closed.counts().iter().map(|c| c.try_into().unwrap()).collect();
//! assert_eq!(count, [1, 1, 1, 1, 1]);
//! ```

pub mod error;
pub mod exactmath;
pub mod lhcomb;
pub mod partitions;
pub mod paths;
pub mod qjacobi;
pub mod tableaux;

pub use error::{Error, Result};
