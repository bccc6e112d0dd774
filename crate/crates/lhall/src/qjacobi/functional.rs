//! The little q-Jacobi linear functionals as certified partial sums.
//!
//! The univariate functional is L(f) = Σ_{k≥0} (bq)_k/(q)_k (aq)^k f(q^k).
//! The multivariate functional is the n-fold Jackson q-integral of
//! f·Δ(x)²·∏ xᵢ^α (qxᵢ)_∞/(qbxᵢ)_∞ over [0,1]^n with a = q^α. On the
//! q-lattice xᵢ = q^{kᵢ} the weight xᵢ^α appears only as a^{kᵢ}, so the
//! summand is rational and no fractional power of q is ever needed; the
//! (1−q)^n Jackson prefactors cancel in every moment ratio. All truncation
//! errors are bounded by exact geometric majorants.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{rat_abs, rat_pow, Rat};
use crate::partitions::Partition;

use super::multivar::schur_poly;
use super::unipoly::UniPoly;
use super::{qpoch, qpow, SpecParams};

/// Geometric majorant constants; errors out where the majorant argument
/// reaches 1 and certification is impossible.
struct Majorants {
    /// |aq|, the term ratio of the outer sum
    r: Rat,
    /// bound on each per-variable infinite product |(q^{k+1})_∞/(bq^{k+1})_∞|
    w: Rat,
    /// ∏-tail half-width after truncating the products at K factors
    s1: Rat,
}

fn majorants(p: &SpecParams, terms: u64) -> Result<Majorants> {
    let q = p.q();
    let r = rat_abs(p.a()) * q;
    if r >= Rat::one() {
        return Err(Error::Divergent("|aq| ≥ 1".into()));
    }
    let geo = q / (Rat::one() - q);
    let sigma_b = rat_abs(p.b()) * &geo;
    if sigma_b >= Rat::one() {
        return Err(Error::Divergent("|b|q/(1−q) ≥ 1".into()));
    }
    let w = (Rat::one() - sigma_b).recip();
    let s1 = (Rat::one() + rat_abs(p.b())) * rat_pow(q, terms as i64 + 1) / (Rat::one() - q);
    if s1 >= Rat::one() {
        return Err(Error::Divergent("K too small to certify product tails".into()));
    }
    Ok(Majorants { r, w, s1 })
}

/// Partial sum of the univariate functional with a certified tail bound:
/// returns (Σ_{k<K} (bq)_k/(q)_k (aq)^k f(q^k), bound on the dropped tail).
pub fn functional_univariate(f: &UniPoly, params: &SpecParams, terms: u64) -> Result<(Rat, Rat)> {
    if terms == 0 {
        return Err(Error::BadParams("need at least one term".into()));
    }
    let (q, a, b) = (params.q(), params.a(), params.b());
    let maj = majorants(params, terms)?;
    let geo = q / (Rat::one() - q);
    if geo >= Rat::one() {
        return Err(Error::Divergent("q/(1−q) ≥ 1".into()));
    }
    let mut value = Rat::zero();
    let mut weight = Rat::one(); // (bq)_k/(q)_k (aq)^k
    let mut xk = Rat::one(); // q^k
    for k in 0..terms {
        value += &weight * f.eval(&xk);
        let den = Rat::one() - q * &xk;
        if den.is_zero() {
            return Err(Error::VanishingDenominator("factor vanishes at the chosen point".into()));
        }
        weight = weight * (Rat::one() - b * q * &xk) / den * (a * q);
        xk *= q;
        let _ = k;
    }
    // |(bq)_k/(q)_k| ≤ ∏(1+|b|q^m)/∏(1−q^m) ≤ 1/((1−σ_b)(1−σ_q))
    let c = &maj.w * (Rat::one() - geo).recip();
    let bound = c * f.coeff_norm() * rat_pow(&maj.r, terms as i64) / (Rat::one() - &maj.r);
    Ok((value, bound))
}

/// The outcome of a Selberg-type moment check: the partial-sum ratio
/// 𝔏_K(s_λ)/𝔏_K(1), the closed product-formula value, and a certified
/// bound on |exact ratio − partial ratio|.
#[derive(Clone, Debug)]
pub struct SelbergReport {
    pub lhs: Rat,
    pub rhs: Rat,
    pub bound: Rat,
}

impl SelbergReport {
    /// The identity holds within certification and the bound meets `tol`.
    pub fn passes(&self, tol: &Rat) -> bool {
        rat_abs(&(&self.lhs - &self.rhs)) <= &self.bound + tol && &self.bound <= tol
    }
}

/// Closed product for the moment M_λ(n):
/// ∏_{i<j} (q^{λⱼ+n−j}−q^{λᵢ+n−i})/(q^{i−1}−q^{j−1})
/// · ∏_i (aq^{n−i+1})_{λᵢ}/(abq^{2n−i+1})_{λᵢ}.
fn moment_closed(lam: &Partition, n: u64, p: &SpecParams) -> Result<Rat> {
    let (q, a) = (p.q(), p.a());
    let ab = p.a() * p.b();
    let mut out = Rat::one();
    for i in 1..=n {
        for j in (i + 1)..=n {
            let num = qpow(q, (lam.part(j as usize) + n - j) as i64)
                - qpow(q, (lam.part(i as usize) + n - i) as i64);
            let den = qpow(q, (i - 1) as i64) - qpow(q, (j - 1) as i64);
            out = out * num / den;
        }
    }
    for i in 1..=n {
        let li = lam.part(i as usize);
        let num = qpoch(&(a * qpow(q, (n - i + 1) as i64)), q, li);
        let den = qpoch(&(&ab * qpow(q, (2 * n - i + 1) as i64)), q, li);
        if den.is_zero() {
            return Err(Error::VanishingDenominator("factor vanishes at the chosen point".into()));
        }
        out = out * num / den;
    }
    Ok(out)
}

/// Certified check of the Selberg-type moment formula: the n-fold
/// q-integral ratio 𝔏(s_λ)/𝔏(1), summed over kᵢ < K with the infinite
/// products truncated at K factors, against the closed product.
pub fn selberg_check(
    lam: &Partition,
    n: u64,
    params: &SpecParams,
    terms: u64,
) -> Result<SelbergReport> {
    if lam.len() > n as usize {
        return Err(Error::BadParams("partition has more than n parts".into()));
    }
    if terms == 0 {
        return Err(Error::BadParams("need at least one term".into()));
    }
    let rhs = moment_closed(lam, n, params)?;
    if n == 0 {
        return Ok(SelbergReport {
            lhs: Rat::one(),
            rhs,
            bound: Rat::zero(),
        });
    }
    let (q, a, b) = (params.q(), params.a(), params.b());
    let maj = majorants(params, terms)?;
    let k = terms as usize;

    // Per-variable weights g_i = (aq)^i ∏_{j=i+1}^{K} (1−q^j)/(1−bq^j),
    // the products truncated at factor index K so the dropped tail starts
    // at q^{K+1} for every i. All weights are rescaled by the common
    // qq = ∏_{j=1}^{K}(1−bq^j): the ratio 𝔏(s_λ)/𝔏(1) is unchanged, but
    // the scaled weights share smooth denominators, so the accumulating
    // sums stay small. The bounds are rescaled by |qq|^n to match.
    let mut p_fac = Vec::with_capacity(k); // 1 − q^j
    let mut q_fac = Vec::with_capacity(k); // 1 − bq^j
    let mut qj = q.clone();
    for _ in 0..k {
        let bf = Rat::one() - b * &qj;
        if bf.is_zero() {
            return Err(Error::VanishingDenominator(
                "factor vanishes at the chosen point".into(),
            ));
        }
        p_fac.push(Rat::one() - &qj);
        q_fac.push(bf);
        qj *= q;
    }
    let mut xs = Vec::with_capacity(k);
    let mut g = Vec::with_capacity(k);
    let mut absg = Vec::with_capacity(k);
    let mut xi = Rat::one();
    let mut aqi = Rat::one();
    let mut qq = Rat::one();
    for i in 0..k {
        // g̃_i = (aq)^i · ∏_{j>i} P_j · ∏_{j≤i} Q_j = g_i · qq
        let mut gi = aqi.clone();
        for pj in &p_fac[i..] {
            gi *= pj;
        }
        for qf in &q_fac[..i] {
            gi *= qf;
        }
        absg.push(rat_abs(&gi));
        g.push(gi);
        xs.push(xi.clone());
        xi *= q;
        aqi *= a * q;
        qq *= &q_fac[i];
    }

    let schur = schur_poly(lam, n)?;
    let s_sup = schur.eval(&vec![Rat::one(); n as usize]); // nonneg coeffs

    // multi-index sweep over {0,…,K−1}^n
    let mut num = Rat::zero();
    let mut den = Rat::zero();
    let mut abs_num = Rat::zero();
    let mut abs_den = Rat::zero();
    let mut idx = vec![0usize; n as usize];
    loop {
        // Δ(x)² vanishes on repeated indices, so those terms drop out
        if idx.iter().enumerate().all(|(p, &i)| idx[..p].iter().all(|&j| j != i)) {
            let point: Vec<Rat> = idx.iter().map(|&i| xs[i].clone()).collect();
            let mut w = Rat::one();
            for i in 0..point.len() {
                for j in (i + 1)..point.len() {
                    let d = &point[i] - &point[j];
                    w *= &d * &d;
                }
            }
            let mut absw = rat_abs(&w);
            for &i in &idx {
                w *= &g[i];
                absw *= &absg[i];
            }
            num += &w * schur.eval(&point);
            abs_num += &absw * &s_sup;
            den += &w;
            abs_den += &absw;
        }
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                break;
            }
            idx[pos] += 1;
            if idx[pos] < k {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
        if pos == idx.len() {
            break;
        }
    }
    if den.is_zero() {
        return Err(Error::Divergent("partial normalization vanished".into()));
    }

    // tail of the outer sums: all terms with some kᵢ ≥ K, bounded by
    // S·Wⁿ·((1/(1−r))ⁿ − ((1−r^K)/(1−r))ⁿ) with |Δ²| ≤ 1
    let full = (Rat::one() - &maj.r).recip();
    let part = (Rat::one() - rat_pow(&maj.r, terms as i64)) * &full;
    let nn = n as i64;
    let box_defect = rat_pow(&full, nn) - rat_pow(&part, nn);
    let scale = rat_pow(&rat_abs(&qq), nn);
    let tail_num = &s_sup * rat_pow(&maj.w, nn) * &box_defect * &scale;
    let tail_den = rat_pow(&maj.w, nn) * &box_defect * &scale;

    // truncating each infinite product at K factors scales every kept term
    // by a factor in [(1−s₁)ⁿ, (1−s₁)^{−n}]
    let rel = rat_pow(&(Rat::one() - &maj.s1), -nn) - Rat::one();
    let beta_num = tail_num + &rel * &abs_num;
    let beta_den = tail_den + &rel * &abs_den;

    let abs_bk = rat_abs(&den);
    if abs_bk <= beta_den {
        return Err(Error::Divergent(
            "K too small: normalization not separated from its error bound".into(),
        ));
    }
    let bound = (&beta_num * &abs_bk + &beta_den * rat_abs(&num))
        / (&abs_bk * (&abs_bk - &beta_den));
    Ok(SelbergReport {
        lhs: num / den,
        rhs,
        bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::parse_rat;
    use crate::qjacobi::{int, little_q_jacobi, mu_mixed};

    fn params() -> SpecParams {
        SpecParams::from_ab(
            parse_rat("1/3").unwrap(),
            parse_rat("-1/10").unwrap(),
            parse_rat("-1/7").unwrap(),
        )
        .unwrap()
    }

    fn xn(n: usize) -> UniPoly {
        let mut c = vec![Rat::zero(); n + 1];
        c[n] = Rat::one();
        UniPoly::new(c)
    }

    #[test]
    fn univariate_moments_within_bound() {
        let p = params();
        let (l1, b1) = functional_univariate(&UniPoly::one(), &p, 80).unwrap();
        for n in 0..=5usize {
            let (ln, bn) = functional_univariate(&xn(n), &p, 80).unwrap();
            let ratio = &ln / &l1;
            let closed = mu_mixed(n as u64, 0, &p).unwrap();
            // crude ratio bound from the two certified bounds
            let tol = (&bn + &b1) / (rat_abs(&l1) - &b1);
            assert!(rat_abs(&(ratio - closed)) <= tol, "moment n={n}");
        }
        let (z, _) = functional_univariate(&UniPoly::zero(), &p, 10).unwrap();
        assert_eq!(z, Rat::zero());
    }

    #[test]
    fn orthogonality_within_bound() {
        let p = params();
        let p2 = little_q_jacobi(2, &p).unwrap();
        let p3 = little_q_jacobi(3, &p).unwrap();
        let (val, bound) = functional_univariate(&(&p2 * &p3), &p, 80).unwrap();
        assert!(rat_abs(&val) <= bound);
    }

    #[test]
    fn selberg_empty_shape() {
        let r = selberg_check(&Partition::empty(), 2, &params(), 30).unwrap();
        assert_eq!(r.rhs, Rat::one());
        assert!(r.passes(&parse_rat("1/1000000000").unwrap()));
    }

    #[test]
    fn selberg_univariate_agrees_with_moment() {
        let p = params();
        let lam = Partition::parse("1").unwrap();
        let r = selberg_check(&lam, 1, &p, 60).unwrap();
        assert_eq!(r.rhs, mu_mixed(1, 0, &p).unwrap());
        let tol = rat_pow(&int(10).recip(), 20);
        assert!(r.passes(&tol), "bound = {}", r.bound);
    }

    #[test]
    fn selberg_two_variables() {
        let p = params();
        let tol = rat_pow(&int(10).recip(), 15);
        for shape in ["1", "2", "1,1", "2,1"] {
            let lam = Partition::parse(shape).unwrap();
            let r = selberg_check(&lam, 2, &p, 50).unwrap();
            assert!(
                r.passes(&tol),
                "λ = {shape}: lhs−rhs = {}, bound = {}",
                crate::exactmath::format_rat(&(&r.lhs - &r.rhs)),
                crate::exactmath::format_rat(&r.bound)
            );
        }
    }
}
