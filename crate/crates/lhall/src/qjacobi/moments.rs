//! Mixed and dual mixed moments of the little q-Jacobi polynomials, their
//! multivariate determinant forms, and the moment product checks.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{det, LaurentPoly, QSeries, Rat};
use crate::lhcomb::{genfun_closed, genfun_enum, Variant};
use crate::partitions::Partition;
use crate::tableaux::{ls_product, OrderType};

use super::{binom2, qbinom_rat, qpoch, qpoch_nonzero, qpow, SpecParams};

/// Mixed moment μ_{n,k} = [n k] (aq^{k+1})_{n−k} / (abq^{2k+2})_{n−k};
/// zero when n < k.
pub fn mu_mixed(n: u64, k: u64, params: &SpecParams) -> Result<Rat> {
    if n < k {
        return Ok(Rat::zero());
    }
    let (q, a) = (params.q(), params.a());
    let ab = params.a() * params.b();
    let num = qpoch(&(a * qpow(q, (k + 1) as i64)), q, n - k);
    let den = qpoch_nonzero(&(&ab * qpow(q, (2 * k + 2) as i64)), q, n - k)?;
    Ok(qbinom_rat(n, k, q) * num / den)
}

/// Dual mixed moment ν_{n,k} = (−1)^{n−k} q^{C(n−k,2)} [n k]
/// (aq^{k+1})_{n−k} / (abq^{n+k+1})_{n−k}; zero when n < k.
pub fn nu_mixed(n: u64, k: u64, params: &SpecParams) -> Result<Rat> {
    if n < k {
        return Ok(Rat::zero());
    }
    let (q, a) = (params.q(), params.a());
    let ab = params.a() * params.b();
    let num = qpoch(&(a * qpow(q, (k + 1) as i64)), q, n - k);
    let den = qpoch_nonzero(&(&ab * qpow(q, (n + k + 1) as i64)), q, n - k)?;
    let sign = if (n - k) % 2 == 0 { Rat::one() } else { -Rat::one() };
    Ok(sign * qpow(q, binom2((n - k) as i64)) * qbinom_rat(n, k, q) * num / den)
}

/// μ_{n,k} at a = −uv, b = −u/v, as a truncated q-series with Laurent
/// (u, v) coefficients. Equals the AL_{n,n−k} generating function.
pub fn mu_series(n: u64, k: u64, cap: usize) -> Result<QSeries> {
    if n < k {
        return Ok(QSeries::zero(cap));
    }
    genfun_closed(Variant::AL, n, n - k, cap)
}

/// ν_{n,k} at a = −uv, b = −u/v, as a truncated q-series. Equals
/// (−1)^{n−k} times the L_{n,n−k} generating function.
pub fn nu_series(n: u64, k: u64, cap: usize) -> Result<QSeries> {
    if n < k {
        return Ok(QSeries::zero(cap));
    }
    let s = genfun_closed(Variant::L, n, n - k, cap)?;
    Ok(if (n - k) % 2 == 0 {
        s
    } else {
        s.scale(&LaurentPoly::from_int(-1))
    })
}

/// Regime B check: μ_{n,k} closed form equals the anti-lecture-hall
/// enumeration up to cap.
pub fn mu_vs_alhc(n: u64, k: u64, cap: usize) -> Result<bool> {
    Ok(mu_series(n, k, cap)? == genfun_enum(Variant::AL, n, n - k, cap)?)
}

/// Regime B check: ν_{n,k} closed form equals (−1)^{n−k} times the
/// lecture-hall enumeration up to cap.
pub fn nu_vs_lhp(n: u64, k: u64, cap: usize) -> Result<bool> {
    let enumd = genfun_enum(Variant::L, n, n - k, cap)?;
    let signed = if (n - k) % 2 == 0 {
        enumd
    } else {
        enumd.scale(&LaurentPoly::from_int(-1))
    };
    Ok(nu_series(n, k, cap)? == signed)
}

fn moment_det<F>(lam: &Partition, mu: &Partition, n: u64, entry: F) -> Result<Rat>
where
    F: Fn(u64, u64) -> Result<Rat>,
{
    if lam.len() > n as usize {
        return Err(Error::BadParams("partition has more than n parts".into()));
    }
    if n == 0 {
        return Ok(Rat::one());
    }
    let mut m = Vec::with_capacity(n as usize);
    for i in 1..=n {
        let mut row = Vec::with_capacity(n as usize);
        for j in 1..=n {
            row.push(entry(lam.part(i as usize) + n - i, mu.part(j as usize) + n - j)?);
        }
        m.push(row);
    }
    let d = det(&m)?;
    debug_assert!(lam.contains(mu) || d.is_zero());
    Ok(d)
}

/// Multivariate mixed moment M_{λ,μ}(n) = det(μ_{λᵢ+n−i, μⱼ+n−j}).
#[allow(non_snake_case)]
pub fn mixed_moment_M(lam: &Partition, mu: &Partition, n: u64, params: &SpecParams) -> Result<Rat> {
    moment_det(lam, mu, n, |a, b| mu_mixed(a, b, params))
}

/// Multivariate dual mixed moment N_{λ,μ}(n) = det(ν_{λᵢ+n−i, μⱼ+n−j}).
#[allow(non_snake_case)]
pub fn dual_N(lam: &Partition, mu: &Partition, n: u64, params: &SpecParams) -> Result<Rat> {
    moment_det(lam, mu, n, |a, b| nu_mixed(a, b, params))
}

/// M_{λ,μ}(n) as a truncated q-series via closed-form μ entries.
pub(crate) fn moment_series_m(
    lam: &Partition,
    mu: &Partition,
    n: u64,
    cap: usize,
) -> Result<QSeries> {
    if n == 0 {
        return Ok(QSeries::one(cap));
    }
    let mut m = Vec::with_capacity(n as usize);
    for i in 1..=n {
        let mut row = Vec::with_capacity(n as usize);
        for j in 1..=n {
            row.push(mu_series(lam.part(i as usize) + n - i, mu.part(j as usize) + n - j, cap)?);
        }
        m.push(row);
    }
    det(&m)
}

/// N_{λ,μ}(n) as a truncated q-series via closed-form ν entries.
pub(crate) fn moment_series_n(
    lam: &Partition,
    mu: &Partition,
    n: u64,
    cap: usize,
) -> Result<QSeries> {
    if n == 0 {
        return Ok(QSeries::one(cap));
    }
    let mut m = Vec::with_capacity(n as usize);
    for i in 1..=n {
        let mut row = Vec::with_capacity(n as usize);
        for j in 1..=n {
            row.push(nu_series(lam.part(i as usize) + n - i, mu.part(j as usize) + n - j, cap)?);
        }
        m.push(row);
    }
    det(&m)
}

/// Regime B check of the two moment product formulas: the determinant
/// forms of M_{λ,∅} and N_{λ,∅} equal the tableau products of types
/// (≥,>) and (−1)^{|λ|}·(<,≤) respectively, up to cap.
pub fn moment_product_check(lam: &Partition, n: u64, cap: usize) -> Result<bool> {
    let empty = Partition::empty();
    let m_det = moment_series_m(lam, &empty, n, cap)?;
    if m_det != ls_product(lam, n, OrderType::GeGt, cap)? {
        return Ok(false);
    }
    let n_det = moment_series_n(lam, &empty, n, cap)?;
    let prod = ls_product(lam, n, OrderType::LtLe, cap)?;
    let signed = if lam.size() % 2 == 0 {
        prod
    } else {
        prod.scale(&LaurentPoly::from_int(-1))
    };
    Ok(n_det == signed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::parse_rat;
    use crate::lhcomb::{e_series, h_series};

    fn params() -> SpecParams {
        SpecParams::from_ab(
            parse_rat("1/3").unwrap(),
            parse_rat("-1/10").unwrap(),
            parse_rat("-1/7").unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn mu_edge_values() {
        let p = params();
        // μ_{n,n} = 1 and a product formula for μ_{n,0}
        for n in 0..=6 {
            assert_eq!(mu_mixed(n, n, &p).unwrap(), Rat::one());
            assert_eq!(nu_mixed(n, n, &p).unwrap(), Rat::one());
        }
        let (q, a) = (p.q().clone(), p.a().clone());
        let ab = p.a() * p.b();
        for n in 0..=6u64 {
            let direct = qpoch(&(&a * &q), &q, n) / qpoch(&(&ab * &q * &q), &q, n);
            assert_eq!(mu_mixed(n, 0, &p).unwrap(), direct);
        }
        assert_eq!(mu_mixed(2, 5, &p).unwrap(), Rat::zero());
    }

    #[test]
    fn mu_nu_matrices_are_inverse() {
        // Σ_i μ_{m,i} ν_{i,n} = δ_{m,n} for m, n ≤ 8 at two parameter draws
        for (a, b) in [("-1/10", "-1/7"), ("2/9", "3/11")] {
            let p = SpecParams::from_ab(
                parse_rat("1/3").unwrap(),
                parse_rat(a).unwrap(),
                parse_rat(b).unwrap(),
            )
            .unwrap();
            for m in 0..=8u64 {
                for n in 0..=8u64 {
                    let mut s = Rat::zero();
                    let mut t = Rat::zero();
                    for i in 0..=8u64 {
                        s += mu_mixed(m, i, &p).unwrap() * nu_mixed(i, n, &p).unwrap();
                        t += nu_mixed(m, i, &p).unwrap() * mu_mixed(i, n, &p).unwrap();
                    }
                    let expect = if m == n { Rat::one() } else { Rat::zero() };
                    assert_eq!(s, expect, "μν at ({m},{n})");
                    assert_eq!(t, expect, "νμ at ({m},{n})");
                }
            }
        }
    }

    #[test]
    fn series_match_enumeration() {
        for n in 0..=5u64 {
            for k in 0..=n {
                assert!(mu_vs_alhc(n, k, 12).unwrap(), "μ vs AL at ({n},{k})");
                assert!(nu_vs_lhp(n, k, 12).unwrap(), "ν vs L at ({n},{k})");
            }
        }
    }

    #[test]
    fn mu_is_h_series_instance() {
        // μ_{3,1} with a = −uv, b = −u/v equals h_2^{(2)}
        assert_eq!(mu_series(3, 1, 12).unwrap(), h_series(2, 2, 12));
        // ν_{3,1} carries (−1)^{3−1} = +1, so it equals e_2^{(3)}; ν_{3,2}
        // carries (−1)^{3−2} = −1, so it equals −e_1^{(3)}
        assert_eq!(nu_series(3, 1, 12).unwrap(), e_series(3, 2, 12));
        assert_eq!(
            nu_series(3, 2, 12).unwrap(),
            e_series(3, 1, 12).scale(&LaurentPoly::from_int(-1))
        );
    }

    #[test]
    fn moment_dets_basic() {
        let p = params();
        let lam = Partition::parse("2,1").unwrap();
        // M_{λ,λ} = 1 (unitriangular) and μ ⊄ λ gives 0
        assert_eq!(mixed_moment_M(&lam, &lam, 3, &p).unwrap(), Rat::one());
        assert_eq!(dual_N(&lam, &lam, 3, &p).unwrap(), Rat::one());
        let big = Partition::parse("3").unwrap();
        assert_eq!(mixed_moment_M(&lam, &big, 3, &p).unwrap(), Rat::zero());
        // n = 1 reduces to the univariate moment
        let one_part = Partition::parse("4").unwrap();
        assert_eq!(
            mixed_moment_M(&one_part, &Partition::empty(), 1, &p).unwrap(),
            mu_mixed(4, 0, &p).unwrap()
        );
        assert!(mixed_moment_M(&lam, &lam, 1, &p).is_err());
    }

    #[test]
    fn moment_products_small_battery() {
        for lam in Partition::enumerate_up_to(4, 4) {
            for n in (lam.len() as u64).max(1)..=4 {
                assert!(
                    moment_product_check(&lam, n, 12).unwrap(),
                    "moment product failed for {:?}, n={n}",
                    lam.parts()
                );
            }
        }
    }

    #[test]
    fn dual_sign_pattern() {
        // N_{(1),∅}(1) = −e_1^{(1)} and matches the signed product
        let lam = Partition::parse("1").unwrap();
        let n_det = moment_series_n(&lam, &Partition::empty(), 1, 12).unwrap();
        assert_eq!(n_det, e_series(1, 1, 12).scale(&LaurentPoly::from_int(-1)));
        // its (−1)^{|λ|}-unsigned version has nonnegative integer structure
        let unsigned = n_det.scale(&LaurentPoly::from_int(-1));
        assert_eq!(unsigned, ls_product(&lam, 1, OrderType::LtLe, 12).unwrap());
    }
}
