//! Big rationals and the fixed "p/q" parsing format.
//!
//! All numeric specializations of q, u, v, a, b and the x-variables go
//! through [`Rat`]. Parsing accepts decimal integer strings and "p/q"
//! fractions only; floats are rejected so no binary rounding can leak in.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Arbitrary-precision rational, always reduced, denominator > 0.
pub type Rat = num_rational::BigRational;

/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Parse a rational from a `"p/q"` or plain integer decimal string.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::BadRational(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        None => {
            let n: Int = s.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(n))
        }
        Some((p, q)) => {
            let p: Int = p.trim().parse().map_err(|_| bad())?;
            let q: Int = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// Render a rational in the same canonical "p/q" format `parse_rat` accepts.
pub fn format_rat(r: &Rat) -> String {
    if r.denom() == &Int::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// |r|, used in tail-bound arithmetic.
pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}

/// Exact integer power with negative exponents allowed (r must be nonzero
/// when e < 0).
pub fn rat_pow(r: &Rat, e: i64) -> Rat {
    if e >= 0 {
        num_traits::pow::pow(r.clone(), e as usize)
    } else {
        num_traits::pow::pow(r.clone().recip(), (-e) as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "-3", "1/2", "-7/3", "22/7"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
    }

    #[test]
    fn parse_reduces() {
        assert_eq!(format_rat(&parse_rat("4/6").unwrap()), "2/3");
        assert_eq!(format_rat(&parse_rat("3/-6").unwrap()), "-1/2");
    }

    #[test]
    fn rejects_floats_and_garbage() {
        assert!(parse_rat("0.5").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }
}
