//! Exact arithmetic kernels: big rationals, Laurent polynomials in u and v,
//! truncated q-series, multivariate polynomials, and determinants over all
//! four rings.
//!
//! Everything here is immutable after construction and every operation is a
//! pure function of its inputs, so values are freely shareable across
//! threads and identical inputs give bit-identical outputs.
//!
//! ```
//! use lhall::exactmath::{det, gauss_binomial, parse_rat, qpoch_series,
//!                        qpoch_inverse_series, LaurentPoly, QSeries};
//!
//! // (q; q)_2 = (1 − q)(1 − q²) = 1 − q − q² + q³
//! let p = qpoch_series(&LaurentPoly::one(), 1, 2, 4);
//! let counts: Vec<i64> = p.counts().iter().map(|c| c.try_into().unwrap()).collect();
//! assert_eq!(counts, [1, -1, -1, 1, 0]);
//!
//! // a q-Pochhammer times its inverse expansion is exactly 1 up to the cap
//! let pinv = qpoch_inverse_series(&LaurentPoly::one(), 1, 2, 4).unwrap();
//! assert_eq!(&p * &pinv, QSeries::one(4));
//!
//! // Gaussian binomials are exact polynomials in q
//! let b = gauss_binomial(4, 2, 8);
//! let counts: Vec<i64> = b.counts().iter().map(|c| c.try_into().unwrap()).collect();
//! assert_eq!(counts, [1, 1, 2, 1, 1, 0, 0, 0, 0]);
//!
//! // determinants over exact rationals
//! let m = vec![
//!     vec![parse_rat("1/2").unwrap(), parse_rat("1/3").unwrap()],
//!     vec![parse_rat("1/4").unwrap(), parse_rat("1/5").unwrap()],
//! ];
//! assert_eq!(det(&m).unwrap(), parse_rat("1/60").unwrap());
//! ```

pub mod det;
pub mod laurent;
pub mod multipoly;
pub mod qseries;
pub mod rational;

pub use det::{det, det_bareiss, det_cofactor, DetElem};
pub use laurent::LaurentPoly;
pub use multipoly::MultiPoly;
pub use qseries::{gauss_binomial, gauss_binomial_poly, qpoch_inverse_series, qpoch_series, QSeries};
pub use rational::{format_rat, parse_rat, rat_abs, rat_pow, Int, Rat};
