//! Multivariate little q-Jacobi polynomials as bialternants and the Schur
//! expansion checks in both evaluation regimes.

use num_traits::One;

use crate::error::{Error, Result};
use crate::exactmath::{det, LaurentPoly, MultiPoly, QSeries, Rat};
use crate::partitions::{Partition, SkewShape};
use crate::tableaux::{ls_series, OrderType};

use super::moments::{moment_series_m, moment_series_n};
use super::unipoly::UniPoly;
use super::{dual_N, little_q_jacobi, mixed_moment_M, SpecParams};

/// A univariate polynomial placed in variable `i` of an n-variable ring.
fn lift(f: &UniPoly, nvars: usize, i: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(nvars);
    for (d, c) in f.coeffs().iter().enumerate() {
        let mut exps = vec![0u32; nvars];
        exps[i] = d as u32;
        out = &out + &MultiPoly::monomial(nvars, exps, c.clone());
    }
    out
}

/// Bialternant det(f_{λⱼ+n−j}(xᵢ)) / Δ(x) with exact Vandermonde division.
fn bialternant<F>(lam: &Partition, n: u64, entry: F) -> Result<MultiPoly>
where
    F: Fn(u64, usize) -> Result<MultiPoly>,
{
    if lam.len() > n as usize {
        return Err(Error::BadParams("partition has more than n parts".into()));
    }
    let nv = n as usize;
    if nv == 0 {
        return Ok(MultiPoly::one(0));
    }
    let mut m = Vec::with_capacity(nv);
    for i in 0..nv {
        let mut row = Vec::with_capacity(nv);
        for j in 1..=nv {
            row.push(entry(lam.part(j) + n - j as u64, i)?);
        }
        m.push(row);
    }
    det(&m)?.div_exact_vandermonde()
}

/// The Schur polynomial s_λ(x₁,…,xₙ) via the bialternant formula.
pub fn schur_poly(lam: &Partition, n: u64) -> Result<MultiPoly> {
    let nv = n as usize;
    bialternant(lam, n, |d, i| {
        let mut exps = vec![0u32; nv];
        exps[i] = d as u32;
        Ok(MultiPoly::monomial(nv, exps, Rat::one()))
    })
}

/// The multivariate little q-Jacobi polynomial
/// p_λ(x₁,…,xₙ) = det(p_{λⱼ+n−j}(xᵢ)) / Δ(x).
pub fn multivariate_p(lam: &Partition, n: u64, params: &SpecParams) -> Result<MultiPoly> {
    let nv = n as usize;
    let max_deg = lam.part(1) + n - 1;
    let mut polys = Vec::with_capacity(max_deg as usize + 1);
    for d in 0..=max_deg {
        polys.push(little_q_jacobi(d, params)?);
    }
    bialternant(lam, n, |d, i| Ok(lift(&polys[d as usize], nv, i)))
}

/// Both expansion identities at the chosen point (regime A), plus the
/// regime-B identification of the expansion coefficients with skew tableau
/// series up to `cap`:
/// s_λ = Σ_{μ⊆λ} M_{λ,μ} p_μ and p_λ = Σ_{μ⊆λ} N_{λ,μ} s_μ, with
/// M_{λ,μ} = LS^{(≥,>)}_{λ/μ} and N_{λ,μ} = (−1)^{|λ/μ|} LS^{(<,≤)}_{λ/μ}.
pub fn expansion_check(lam: &Partition, n: u64, params: &SpecParams, cap: usize) -> Result<bool> {
    let subs = lam.sub_partitions();

    // regime A: exact multivariate polynomial identities at params
    let s_lam = schur_poly(lam, n)?;
    let p_lam = multivariate_p(lam, n, params)?;
    let mut m_side = MultiPoly::zero(n as usize);
    let mut n_side = MultiPoly::zero(n as usize);
    for mu in &subs {
        let m = MultiPoly::constant(n as usize, mixed_moment_M(lam, mu, n, params)?);
        m_side = &m_side + &(&multivariate_p(mu, n, params)? * &m);
        let nn = MultiPoly::constant(n as usize, dual_N(lam, mu, n, params)?);
        n_side = &n_side + &(&schur_poly(mu, n)? * &nn);
    }
    if m_side != s_lam || n_side != p_lam {
        return Ok(false);
    }

    // regime B: coefficients match the skew tableau q-series up to cap
    for mu in &subs {
        let shape = SkewShape::new(lam.clone(), mu.clone())?;
        let m_det = moment_series_m(lam, mu, n, cap)?;
        if m_det != ls_series(&shape, n, OrderType::GeGt, cap)? {
            return Ok(false);
        }
        let n_det = moment_series_n(lam, mu, n, cap)?;
        let mut lt = ls_series(&shape, n, OrderType::LtLe, cap)?;
        if shape.num_cells() % 2 == 1 {
            lt = lt.scale(&LaurentPoly::from_int(-1));
        }
        if n_det != lt {
            return Ok(false);
        }
        // sign pattern: the unsigned dual coefficient series has
        // nonnegative integer coefficients
        let unsigned: QSeries = if shape.num_cells() % 2 == 1 {
            n_det.scale(&LaurentPoly::from_int(-1))
        } else {
            n_det
        };
        for d in 0..=cap {
            for (_, c) in unsigned.coeff(d).terms() {
                if c < &crate::exactmath::Int::from(0) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::parse_rat;
    use crate::qjacobi::int;

    fn params() -> SpecParams {
        SpecParams::from_uv(
            parse_rat("1/3").unwrap(),
            parse_rat("1/5").unwrap(),
            parse_rat("2/7").unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn schur_small_cases() {
        // s_(1)(x₁,x₂) = x₁ + x₂
        let s1 = schur_poly(&Partition::parse("1").unwrap(), 2).unwrap();
        let expect = &MultiPoly::var(2, 0) + &MultiPoly::var(2, 1);
        assert_eq!(s1, expect);
        // s_(1,1)(x₁,x₂) = x₁x₂
        let s11 = schur_poly(&Partition::parse("1,1").unwrap(), 2).unwrap();
        assert_eq!(s11, &MultiPoly::var(2, 0) * &MultiPoly::var(2, 1));
        // s_∅ = 1
        assert_eq!(schur_poly(&Partition::empty(), 3).unwrap(), MultiPoly::one(3));
        // s_(2,1)(1,1,1) = 8
        let s21 = schur_poly(&Partition::parse("2,1").unwrap(), 3).unwrap();
        assert_eq!(s21.eval(&[int(1), int(1), int(1)]), int(8));
    }

    #[test]
    fn multivariate_p_base_cases() {
        let p = params();
        assert_eq!(
            multivariate_p(&Partition::empty(), 2, &p).unwrap(),
            MultiPoly::one(2)
        );
        // n = 1 is the univariate polynomial itself
        let lam = Partition::parse("3").unwrap();
        let uni = little_q_jacobi(3, &p).unwrap();
        assert_eq!(multivariate_p(&lam, 1, &p).unwrap(), lift(&uni, 1, 0));
    }

    #[test]
    fn multivariate_p_is_symmetric_and_monic() {
        let p = params();
        let lam = Partition::parse("2,1").unwrap();
        let poly = multivariate_p(&lam, 3, &p).unwrap();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            assert_eq!(poly.swap_vars(i, j), poly);
        }
        // p_λ = m_λ + lower order: coefficient of x₁²x₂ is 1
        assert_eq!(poly.coeff(&[2, 1, 0]), Rat::one());
    }

    #[test]
    fn expansion_battery() {
        let p = params();
        for lam in Partition::enumerate_up_to(4, 3) {
            for n in (lam.len() as u64).max(1)..=3 {
                assert!(
                    expansion_check(&lam, n, &p, 10).unwrap(),
                    "expansion failed for {:?}, n={n}",
                    lam.parts()
                );
            }
        }
    }

    #[test]
    fn expansion_one_box_by_hand() {
        // s_(1) = p_(1) + M_{(1),∅}·1 at n = 2
        let p = params();
        let lam = Partition::parse("1").unwrap();
        let s = schur_poly(&lam, 2).unwrap();
        let pl = multivariate_p(&lam, 2, &p).unwrap();
        let m = mixed_moment_M(&lam, &Partition::empty(), 2, &p).unwrap();
        let rhs = &pl + &MultiPoly::constant(2, m);
        assert_eq!(s, rhs);
    }
}
