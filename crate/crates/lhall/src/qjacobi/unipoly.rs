//! Dense univariate polynomials over exact rationals and the monic little
//! q-Jacobi polynomials, built by two independent routes that must agree.

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::Rat;

use super::{binom2, qpoch, qpoch_nonzero, qpow, SpecParams};

/// A polynomial in x with rational coefficients, stored densely in
/// ascending degree with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, Rat::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly {
            coeffs: vec![Rat::one()],
        }
    }

    pub fn x() -> Self {
        UniPoly {
            coeffs: vec![Rat::zero(), Rat::one()],
        }
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> Rat {
        self.coeffs.get(d).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, Rat::is_one)
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sum of coefficient absolute values: a bound for |p(x)| on |x| ≤ 1.
    pub fn coeff_norm(&self) -> Rat {
        self.coeffs
            .iter()
            .map(crate::exactmath::rat_abs)
            .fold(Rat::zero(), |a, b| a + b)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|d| self.coeff(d) - rhs.coeff(d)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

/// Recurrence coefficient A_m = q^m(1−aq^{m+1})(1−abq^{m+1}) /
/// ((1−abq^{2m+1})(1−abq^{2m+2})).
fn coeff_a(m: u64, p: &SpecParams) -> Result<Rat> {
    let (q, a) = (p.q(), p.a());
    let ab = p.a() * p.b();
    let num = qpow(q, m as i64)
        * (Rat::one() - a * qpow(q, (m + 1) as i64))
        * (Rat::one() - &ab * qpow(q, (m + 1) as i64));
    let den = (Rat::one() - &ab * qpow(q, (2 * m + 1) as i64))
        * (Rat::one() - &ab * qpow(q, (2 * m + 2) as i64));
    if den.is_zero() {
        return Err(Error::VanishingDenominator("factor vanishes at the chosen point".into()));
    }
    Ok(num / den)
}

/// Recurrence coefficient C_m = aq^m(1−q^m)(1−bq^m) /
/// ((1−abq^{2m})(1−abq^{2m+1})).
fn coeff_c(m: u64, p: &SpecParams) -> Result<Rat> {
    let (q, a, b) = (p.q(), p.a(), p.b());
    let ab = a * b;
    let num = a
        * qpow(q, m as i64)
        * (Rat::one() - qpow(q, m as i64))
        * (Rat::one() - b * qpow(q, m as i64));
    let den = (Rat::one() - &ab * qpow(q, (2 * m) as i64))
        * (Rat::one() - &ab * qpow(q, (2 * m + 1) as i64));
    if den.is_zero() {
        return Err(Error::VanishingDenominator("factor vanishes at the chosen point".into()));
    }
    Ok(num / den)
}

/// The three-term recurrence route: p_{m+1} = (x − b_m) p_m − λ_m p_{m−1}
/// with b_m = A_m + C_m, λ_m = A_{m−1} C_m.
fn jacobi_recurrence(n: u64, p: &SpecParams) -> Result<UniPoly> {
    let mut prev = UniPoly::zero();
    let mut cur = UniPoly::one();
    for m in 0..n {
        let bm = coeff_a(m, p)? + coeff_c(m, p)?;
        let lm = if m == 0 {
            Rat::zero()
        } else {
            coeff_a(m - 1, p)? * coeff_c(m, p)?
        };
        let next = &(&(&UniPoly::x() - &UniPoly::constant(bm)) * &cur) - &prev.scale(&lm);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// The basic hypergeometric route:
/// p_n(x) = (aq)_n / ((−1)^n q^{−C(n,2)} (abq^{n+1})_n)
/// · Σ_j (q^{−n})_j (abq^{n+1})_j / ((q)_j (aq)_j) (qx)^j.
fn jacobi_hypergeometric(n: u64, p: &SpecParams) -> Result<UniPoly> {
    let (q, a) = (p.q(), p.a());
    let ab = p.a() * p.b();
    let aq = a * q;
    let abq_n1 = &ab * qpow(q, (n + 1) as i64);
    let lead_den = qpoch_nonzero(&abq_n1, q, n)?;
    let sign = if n % 2 == 0 { Rat::one() } else { -Rat::one() };
    let prefactor = qpoch(&aq, q, n) / (sign * qpow(q, -binom2(n as i64)) * lead_den);

    let q_neg_n = qpow(q, -(n as i64));
    let mut coeffs = vec![Rat::zero(); n as usize + 1];
    let mut term = Rat::one(); // the j-th summand divided by x^j
    for j in 0..=n {
        coeffs[j as usize] = &prefactor * &term;
        if j < n {
            let num = (Rat::one() - &q_neg_n * qpow(q, j as i64))
                * (Rat::one() - &abq_n1 * qpow(q, j as i64));
            let den = (Rat::one() - qpow(q, (j + 1) as i64)) * (Rat::one() - &aq * qpow(q, j as i64));
            if den.is_zero() {
                return Err(Error::VanishingDenominator("factor vanishes at the chosen point".into()));
            }
            term = term * num / den * q;
        }
    }
    Ok(UniPoly::new(coeffs))
}

/// The monic little q-Jacobi polynomial of degree n, computed by both the
/// three-term recurrence and the hypergeometric sum; the two constructions
/// must agree exactly.
pub fn little_q_jacobi(n: u64, params: &SpecParams) -> Result<UniPoly> {
    let rec = jacobi_recurrence(n, params)?;
    let hyp = jacobi_hypergeometric(n, params)?;
    if rec != hyp {
        return Err(Error::Invalid(
            "recurrence and hypergeometric constructions disagree".into(),
        ));
    }
    if !rec.is_monic() || rec.degree() != Some(n as usize) {
        return Err(Error::Invalid("polynomial is not monic of stated degree".into()));
    }
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::parse_rat;
    use crate::qjacobi::int;

    fn params() -> SpecParams {
        SpecParams::from_ab(
            parse_rat("1/3").unwrap(),
            parse_rat("-1/10").unwrap(),
            parse_rat("-1/7").unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn base_cases() {
        let p = params();
        assert_eq!(little_q_jacobi(0, &p).unwrap(), UniPoly::one());
        // p_1 = x − b_0 with b_0 = A_0 (C_0 = 0)
        let a0 = coeff_a(0, &p).unwrap();
        assert_eq!(coeff_c(0, &p).unwrap(), Rat::zero());
        let p1 = little_q_jacobi(1, &p).unwrap();
        assert_eq!(p1, UniPoly::new(vec![-a0, Rat::one()]));
    }

    #[test]
    fn dual_routes_agree_at_many_draws() {
        // xorshift-style deterministic draws over small rationals
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut done = 0;
        while done < 20 {
            let qn = (next() % 7 + 1) as i64;
            let qd = qn + (next() % 7 + 1) as i64;
            let a = int((next() % 19) as i64 - 9) / int((next() % 9 + 1) as i64);
            let b = int((next() % 19) as i64 - 9) / int((next() % 9 + 1) as i64);
            let Ok(p) = SpecParams::from_ab(int(qn) / int(qd), a, b) else {
                continue;
            };
            match little_q_jacobi(10, &p) {
                Ok(poly) => {
                    assert!(poly.is_monic());
                    done += 1;
                }
                // pole of a recurrence denominator: redraw
                Err(Error::VanishingDenominator(_)) => {}
                Err(e) => panic!("unexpected error: {e}"),
            }
        }
    }

    #[test]
    fn eval_and_arith() {
        let f = UniPoly::new(vec![int(1), int(-2), int(3)]); // 1 − 2x + 3x²
        assert_eq!(f.eval(&int(2)), int(9));
        assert_eq!(f.coeff_norm(), int(6));
        let g = &f * &UniPoly::x();
        assert_eq!(g.degree(), Some(3));
        assert_eq!(&g - &g, UniPoly::zero());
    }
}
