//! Power series in q truncated at a fixed degree cap, with Laurent
//! polynomial coefficients in u, v.
//!
//! Every arithmetic result is re-truncated to the shared cap, so truncation
//! is a ring homomorphism from the full series ring. Mixing caps is a
//! programming error and panics; identity checks must never silently lose
//! precision.

use crate::error::{Error, Result};
use crate::exactmath::laurent::LaurentPoly;
use crate::exactmath::rational::{rat_pow, Int, Rat};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Truncated q-series: coefficients of q^0 .. q^cap, inclusive.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    cap: usize,
    coeffs: Vec<LaurentPoly>,
}

impl QSeries {
    pub fn zero(cap: usize) -> Self {
        QSeries {
            cap,
            coeffs: vec![LaurentPoly::zero(); cap + 1],
        }
    }

    pub fn one(cap: usize) -> Self {
        let mut s = QSeries::zero(cap);
        s.coeffs[0] = LaurentPoly::one();
        s
    }

    /// The single term `c * q^deg` (zero if deg > cap).
    pub fn monomial(c: LaurentPoly, deg: usize, cap: usize) -> Self {
        let mut s = QSeries::zero(cap);
        if deg <= cap {
            s.coeffs[deg] = c;
        }
        s
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn coeff(&self, deg: usize) -> &LaurentPoly {
        &self.coeffs[deg]
    }

    /// Add `c * q^deg` in place (ignored beyond the cap).
    pub fn add_term(&mut self, deg: usize, c: &LaurentPoly) {
        if deg <= self.cap {
            self.coeffs[deg] = &self.coeffs[deg] + c;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn check_cap(&self, rhs: &QSeries) {
        assert_eq!(
            self.cap, rhs.cap,
            "QSeries cap mismatch: {} vs {}",
            self.cap, rhs.cap
        );
    }

    /// Multiply by q^m (truncating).
    pub fn shift_q(&self, m: usize) -> QSeries {
        let mut out = QSeries::zero(self.cap);
        if m <= self.cap {
            for d in 0..=self.cap - m {
                out.coeffs[d + m] = self.coeffs[d].clone();
            }
        }
        out
    }

    /// Multiply every coefficient by a Laurent polynomial.
    pub fn scale(&self, c: &LaurentPoly) -> QSeries {
        let coeffs = self.coeffs.iter().map(|a| a * c).collect();
        QSeries {
            cap: self.cap,
            coeffs,
        }
    }

    /// Substitute v ↦ v⁻¹ in every coefficient.
    pub fn invert_v(&self) -> QSeries {
        let coeffs = self.coeffs.iter().map(|a| a.invert_v()).collect();
        QSeries {
            cap: self.cap,
            coeffs,
        }
    }

    /// Multiplicative inverse; requires the constant coefficient to be an
    /// invertible Laurent monomial (±u^a v^b).
    pub fn inverse(&self) -> Result<QSeries> {
        let c0inv = self.coeffs[0]
            .invert_monomial()
            .ok_or(Error::NonInvertibleFactor(0))?;
        let mut inv = QSeries::zero(self.cap);
        inv.coeffs[0] = c0inv.clone();
        for d in 1..=self.cap {
            // coefficient of q^d in (self * inv) must vanish
            let mut acc = LaurentPoly::zero();
            for i in 1..=d {
                acc = &acc + &(&self.coeffs[i] * &inv.coeffs[d - i]);
            }
            inv.coeffs[d] = &(-&acc) * &c0inv;
        }
        Ok(inv)
    }

    /// Sum of all coefficients evaluated at exact rational q, u, v (the
    /// truncated series as a polynomial in q).
    pub fn eval(&self, q: &Rat, u: &Rat, v: &Rat) -> Result<Rat> {
        let mut acc = Rat::zero();
        for (d, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += c.eval(u, v)? * rat_pow(q, d as i64);
            }
        }
        Ok(acc)
    }

    /// Set u = v = 1 and report the integer coefficient sequence.
    pub fn counts(&self) -> Vec<Int> {
        let one = Rat::one();
        self.coeffs
            .iter()
            .map(|c| c.eval(&one, &one).expect("u=v=1 never fails").to_integer())
            .collect()
    }

    /// Degree of the first coefficient where the two series differ.
    pub fn first_mismatch(&self, rhs: &QSeries) -> Option<usize> {
        self.check_cap(rhs);
        (0..=self.cap).find(|&d| self.coeffs[d] != rhs.coeffs[d])
    }

    /// Canonical JSON form: `{"cap": c, "coeffs": [laurent, ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "cap": self.cap,
            "coeffs": self.coeffs.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(val: &serde_json::Value) -> Result<Self> {
        let cap = val["cap"]
            .as_u64()
            .ok_or_else(|| Error::Invalid("missing cap".into()))? as usize;
        let arr = val["coeffs"]
            .as_array()
            .ok_or_else(|| Error::Invalid("missing coeffs".into()))?;
        if arr.len() != cap + 1 {
            return Err(Error::Invalid("coeffs length must be cap+1".into()));
        }
        let coeffs = arr
            .iter()
            .map(LaurentPoly::from_json)
            .collect::<Result<Vec<_>>>()?;
        Ok(QSeries { cap, coeffs })
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        self.check_cap(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        QSeries {
            cap: self.cap,
            coeffs,
        }
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        self.check_cap(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        QSeries {
            cap: self.cap,
            coeffs,
        }
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        let coeffs = self.coeffs.iter().map(|a| -a).collect();
        QSeries {
            cap: self.cap,
            coeffs,
        }
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        self.check_cap(rhs);
        let mut out = QSeries::zero(self.cap);
        for i in 0..=self.cap {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(self.cap - i) {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] = &out.coeffs[i + j] + &(&self.coeffs[i] * &rhs.coeffs[j]);
            }
        }
        out
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c:?})q^{d}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.cap + 1)
    }
}

/// (c·q^m; q)_k = ∏_{i=0}^{k-1} (1 - c q^{m+i}), truncated at `cap`.
///
/// `c` must be a single Laurent term (or zero); k = 0 gives 1.
pub fn qpoch_series(c: &LaurentPoly, m: u32, k: u32, cap: usize) -> QSeries {
    let mut out = QSeries::one(cap);
    for i in 0..k {
        let mut factor = QSeries::one(cap);
        let deg = (m + i) as usize;
        factor.add_term(deg, &(-c));
        out = &out * &factor;
    }
    out
}

/// ∏_{i=0}^{k-1} 1/(1 - c q^{m+i}), truncated at `cap`.
///
/// Every factor must be an invertible power series in q, i.e. m ≥ 1 (or
/// k = 0). The product with `qpoch_series(c, m, k, cap)` is 1 up to cap.
pub fn qpoch_inverse_series(c: &LaurentPoly, m: u32, k: u32, cap: usize) -> Result<QSeries> {
    if k > 0 && m == 0 {
        return Err(Error::NonInvertibleFactor(0));
    }
    let mut out = QSeries::one(cap);
    for i in 0..k {
        // geometric series for 1/(1 - c q^{m+i})
        let deg = (m + i) as usize;
        let mut factor = QSeries::one(cap);
        let mut power = LaurentPoly::one();
        let mut d = deg;
        while d <= cap {
            power = &power * c;
            factor.add_term(d, &power);
            d += deg;
        }
        out = &out * &factor;
    }
    Ok(out)
}

/// The Gaussian binomial coefficient [n k]_q as a truncated series.
///
/// Exact polynomial of degree k(n-k); zero when k < 0 or k > n. Computed by
/// the Pascal recurrence over dense integer polynomials.
pub fn gauss_binomial(n: i64, k: i64, cap: usize) -> QSeries {
    if k < 0 || k > n {
        return QSeries::zero(cap);
    }
    let poly = gauss_binomial_poly(n as usize, k as usize);
    let mut out = QSeries::zero(cap);
    for (d, c) in poly.iter().enumerate() {
        out.add_term(d, &LaurentPoly::monomial(c.clone(), 0, 0));
    }
    out
}

/// [n k]_q as a dense integer coefficient vector (exact, no truncation).
pub fn gauss_binomial_poly(n: usize, k: usize) -> Vec<Int> {
    // [n k] = [n-1 k-1] + q^k [n-1 k]
    let mut row: Vec<Vec<Int>> = vec![vec![Int::one()]]; // row for m=0: [0 0] = 1
    for m in 1..=n {
        let mut next: Vec<Vec<Int>> = Vec::with_capacity(m + 1);
        for j in 0..=m {
            if j == 0 || j == m {
                next.push(vec![Int::one()]);
                continue;
            }
            let a = &row[j - 1];
            let b = &row[j];
            let deg = a.len().max(b.len() + j);
            let mut c = vec![Int::zero(); deg];
            for (d, x) in a.iter().enumerate() {
                c[d] += x;
            }
            for (d, x) in b.iter().enumerate() {
                c[d + j] += x;
            }
            next.push(c);
        }
        row = next;
    }
    row.swap_remove(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ipoly(c: i64) -> LaurentPoly {
        LaurentPoly::from_int(c)
    }

    #[test]
    fn qpoch_basic() {
        // (q;q)_2 = (1-q)(1-q^2) = 1 - q - q^2 + q^3
        let s = qpoch_series(&ipoly(1), 1, 2, 4);
        let counts = s.counts();
        assert_eq!(
            counts,
            [1, -1, -1, 1, 0].map(Int::from).to_vec()
        );
    }

    #[test]
    fn qpoch_empty_product() {
        let s = qpoch_series(&LaurentPoly::monomial(Int::from(-1), 1, 1), 7, 0, 5);
        assert_eq!(s, QSeries::one(5));
    }

    #[test]
    fn qpoch_single_factor_with_uv() {
        // c = -uv, m=2, k=1 -> 1 + uv q^2
        let c = LaurentPoly::monomial(Int::from(-1), 1, 1);
        let s = qpoch_series(&c, 2, 1, 3);
        let mut expect = QSeries::one(3);
        expect.add_term(2, &LaurentPoly::monomial(Int::one(), 1, 1));
        assert_eq!(s, expect);
    }

    #[test]
    fn qpoch_inverse_geometric() {
        // 1/(1 - u^2 q^4) to cap 9 = 1 + u^2 q^4 + u^4 q^8
        let c = LaurentPoly::monomial(Int::one(), 2, 0);
        let s = qpoch_inverse_series(&c, 4, 1, 9).unwrap();
        let mut expect = QSeries::one(9);
        expect.add_term(4, &LaurentPoly::monomial(Int::one(), 2, 0));
        expect.add_term(8, &LaurentPoly::monomial(Int::one(), 4, 0));
        assert_eq!(s, expect);
    }

    #[test]
    fn qpoch_inverse_is_inverse() {
        let c = LaurentPoly::monomial(Int::from(-1), 1, 1);
        let a = qpoch_series(&c, 2, 3, 12);
        let b = qpoch_inverse_series(&c, 2, 3, 12).unwrap();
        assert_eq!(&a * &b, QSeries::one(12));
    }

    #[test]
    fn qpoch_inverse_rejects_constant_factor() {
        assert!(qpoch_inverse_series(&ipoly(1), 0, 1, 4).is_err());
    }

    #[test]
    fn gauss_binomial_42() {
        // [4 2] = 1 + q + 2q^2 + q^3 + q^4
        let s = gauss_binomial(4, 2, 6);
        assert_eq!(
            s.counts(),
            [1, 1, 2, 1, 1, 0, 0].map(Int::from).to_vec()
        );
    }

    #[test]
    fn gauss_binomial_edges() {
        assert_eq!(gauss_binomial(7, 0, 3), QSeries::one(3));
        assert!(gauss_binomial(3, 5, 3).is_zero());
        assert!(gauss_binomial(3, -1, 3).is_zero());
    }

    #[test]
    fn series_inverse_roundtrip() {
        let c = LaurentPoly::monomial(Int::from(2), 1, -1);
        let s = qpoch_series(&c, 1, 2, 10);
        let inv = s.inverse().unwrap();
        assert_eq!(&s * &inv, QSeries::one(10));
    }

    #[test]
    #[should_panic(expected = "cap mismatch")]
    fn cap_mismatch_panics() {
        let _ = &QSeries::one(3) + &QSeries::one(4);
    }

    #[test]
    fn json_roundtrip() {
        let c = LaurentPoly::monomial(Int::from(-1), 1, 1);
        let s = qpoch_series(&c, 1, 3, 8);
        let back = QSeries::from_json(&s.to_json()).unwrap();
        assert_eq!(s, back);
    }
}
