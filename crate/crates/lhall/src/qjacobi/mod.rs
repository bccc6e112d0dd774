//! Little q-Jacobi polynomials, their moments, and moment identities.
//!
//! Everything here works in one of two regimes: exact rational evaluation
//! at a chosen point (q, a, b) — with a = −uv, b = −u/v when the (u, v)
//! parametrization is used — or truncated q-series with Laurent (u, v)
//! coefficients. Each check states its regime.
//!
//! ```
//! use lhall::exactmath::{parse_rat, Rat};
//! use lhall::qjacobi::{little_q_jacobi, mu_mixed, nu_mixed, SpecParams};
//! use num_traits::{One, Zero};
//!
//! let params = SpecParams::from_ab(
//!     parse_rat("1/3").unwrap(),
//!     parse_rat("-1/10").unwrap(),
//!     parse_rat("-1/7").unwrap(),
//! ).unwrap();
//!
//! // monic p_2(x), cross-checked internally between the three-term
//! // recurrence and the basic hypergeometric sum
//! let p = little_q_jacobi(2, &params).unwrap();
//! assert!(p.is_monic());
//! assert_eq!(p.degree(), Some(2));
//!
//! // the mixed and dual mixed moment matrices are exactly inverse
//! for i in 0..5u64 {
//!     for j in 0..5u64 {
//!         let mut s = Rat::zero();
//!         for k in 0..5u64 {
//!             s += mu_mixed(i, k, &params).unwrap() * nu_mixed(k, j, &params).unwrap();
//!         }
//!         assert_eq!(s == Rat::one(), i == j);
//!     }
//! }
//! ```

mod detid;
mod functional;
mod moments;
mod multivar;
mod unipoly;

pub use detid::{det_lemma_check, det_prop_check, draw_params, ParamDraw};
pub use functional::{functional_univariate, selberg_check, SelbergReport};
pub use moments::{
    dual_N, mixed_moment_M, moment_product_check, mu_mixed, mu_series, mu_vs_alhc, nu_mixed,
    nu_series, nu_vs_lhp,
};
pub use multivar::{expansion_check, multivariate_p, schur_poly};
pub use unipoly::{little_q_jacobi, UniPoly};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{Int, Rat};

/// An exact rational specialization point for (q, a, b).
#[derive(Clone, PartialEq, Debug)]
pub struct SpecParams {
    q: Rat,
    a: Rat,
    b: Rat,
}

impl SpecParams {
    /// Parameters in the (a, b) form; requires 0 < q < 1.
    pub fn from_ab(q: Rat, a: Rat, b: Rat) -> Result<Self> {
        if q <= Rat::zero() || q >= Rat::one() {
            return Err(Error::BadParams("q must satisfy 0 < q < 1".into()));
        }
        Ok(SpecParams { q, a, b })
    }

    /// Parameters in the (u, v) form: a = −uv, b = −u/v.
    pub fn from_uv(q: Rat, u: Rat, v: Rat) -> Result<Self> {
        if v.is_zero() {
            return Err(Error::BadParams("v must be nonzero".into()));
        }
        let a = -(&u * &v);
        let b = -(&u / &v);
        SpecParams::from_ab(q, a, b)
    }

    pub fn q(&self) -> &Rat {
        &self.q
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }
}

/// q^e for integer e (negative exponents allowed).
pub(crate) fn qpow(q: &Rat, e: i64) -> Rat {
    crate::exactmath::rat_pow(q, e)
}

/// Pochhammer (c; q)_k = ∏_{m=0}^{k−1} (1 − c q^m).
pub(crate) fn qpoch(c: &Rat, q: &Rat, k: u64) -> Rat {
    let mut acc = Rat::one();
    let mut cq = c.clone();
    for _ in 0..k {
        acc *= Rat::one() - &cq;
        cq *= q;
    }
    acc
}

/// Pochhammer that must be invertible at the chosen point.
pub(crate) fn qpoch_nonzero(c: &Rat, q: &Rat, k: u64) -> Result<Rat> {
    let p = qpoch(c, q, k);
    if p.is_zero() {
        return Err(Error::VanishingDenominator("factor vanishes at the chosen point".into()));
    }
    Ok(p)
}

/// Gaussian binomial [n k]_q at a rational q.
pub(crate) fn qbinom_rat(n: u64, k: u64, q: &Rat) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let mut num = Rat::one();
    let mut den = Rat::one();
    for m in 0..k {
        num *= Rat::one() - qpow(q, (n - m) as i64);
        den *= Rat::one() - qpow(q, (m + 1) as i64);
    }
    num / den
}

pub(crate) fn binom2(k: i64) -> i64 {
    k * (k - 1) / 2
}

pub(crate) fn int(x: i64) -> Rat {
    Rat::from_integer(Int::from(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::parse_rat;

    #[test]
    fn params_forms_agree() {
        let p = SpecParams::from_uv(
            parse_rat("1/3").unwrap(),
            parse_rat("1/5").unwrap(),
            parse_rat("2/7").unwrap(),
        )
        .unwrap();
        assert_eq!(p.a(), &parse_rat("-2/35").unwrap());
        assert_eq!(p.b(), &parse_rat("-7/10").unwrap());
        assert!(SpecParams::from_ab(int(2), int(1), int(1)).is_err());
        assert!(SpecParams::from_uv(parse_rat("1/3").unwrap(), int(1), int(0)).is_err());
    }

    #[test]
    fn pochhammer_and_binomial() {
        let q = parse_rat("1/2").unwrap();
        // (q; q)_2 = (1 − 1/2)(1 − 1/4) = 3/8
        assert_eq!(qpoch(&q, &q, 2), parse_rat("3/8").unwrap());
        // [4 2]_q = (1−q³)(1−q⁴)/((1−q)(1−q²)) = 1 + q + 2q² + q³ + q⁴
        // at q = 1/2: 1 + 1/2 + 1/2 + 1/8 + 1/16 = 35/16
        let b = qbinom_rat(4, 2, &q);
        assert_eq!(b, parse_rat("35/16").unwrap());
        assert_eq!(qbinom_rat(3, 5, &q), Rat::zero());
        assert!(qpoch_nonzero(&Rat::one(), &q, 1).is_err());
    }
}
