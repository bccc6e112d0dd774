//! Exact determinants over the four coefficient rings.
//!
//! Cofactor expansion is used up to 6×6; larger matrices go through
//! fraction-free (Bareiss) elimination, whose divisions are exact in the
//! underlying ring. If a ring element cannot be divided exactly (e.g. a
//! truncated series pivot with positive q-valuation), the computation falls
//! back to cofactor expansion, so results are always exact and identical.

use crate::error::{Error, Result};
use crate::exactmath::laurent::LaurentPoly;
use crate::exactmath::multipoly::MultiPoly;
use crate::exactmath::qseries::QSeries;
use crate::exactmath::rational::Rat;
use num_traits::{One, Zero};

/// Ring operations needed by the determinant routines. `zero_like`/`one_like`
/// carry structural context (the q-series cap, the variable count) from an
/// existing element.
pub trait DetElem: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Exact quotient self / rhs, or None when it cannot be certified.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
    /// Structural compatibility (equal caps, equal nvars).
    fn compatible(&self, rhs: &Self) -> bool;
}

impl DetElem for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
    fn compatible(&self, _rhs: &Self) -> bool {
        true
    }
}

impl DetElem for QSeries {
    fn zero_like(&self) -> Self {
        QSeries::zero(self.cap())
    }
    fn one_like(&self) -> Self {
        QSeries::one(self.cap())
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        QSeries::is_zero(self)
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        // Only a divisor with an invertible constant coefficient keeps the
        // quotient fully determined at the shared cap.
        let inv = rhs.inverse().ok()?;
        Some(self.mul(&inv))
    }
    fn compatible(&self, rhs: &Self) -> bool {
        self.cap() == rhs.cap()
    }
}

impl DetElem for LaurentPoly {
    fn zero_like(&self) -> Self {
        LaurentPoly::zero()
    }
    fn one_like(&self) -> Self {
        LaurentPoly::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn exact_div(&self, _rhs: &Self) -> Option<Self> {
        None // cofactor fallback; Laurent matrices stay small
    }
    fn compatible(&self, _rhs: &Self) -> bool {
        true
    }
}

impl DetElem for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.nvars())
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.nvars())
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn exact_div(&self, _rhs: &Self) -> Option<Self> {
        None
    }
    fn compatible(&self, rhs: &Self) -> bool {
        self.nvars() == rhs.nvars()
    }
}

/// Exact determinant of a square matrix.
pub fn det<T: DetElem>(m: &[Vec<T>]) -> Result<T> {
    let n = m.len();
    if n == 0 {
        return Err(Error::NonSquareMatrix);
    }
    for row in m {
        if row.len() != n {
            return Err(Error::NonSquareMatrix);
        }
        for e in row {
            if !e.compatible(&m[0][0]) {
                return Err(Error::CapMismatch(0, 0));
            }
        }
    }
    if n <= 6 {
        Ok(det_cofactor(m))
    } else {
        Ok(det_bareiss(m).unwrap_or_else(|| det_cofactor(m)))
    }
}

/// Cofactor expansion along the first row (reference route for tests).
pub fn det_cofactor<T: DetElem>(m: &[Vec<T>]) -> T {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = m[0][0].zero_like();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<T>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(|c| m[i][c].clone())
                    .collect()
            })
            .collect();
        let cof = m[0][j].mul(&det_cofactor(&minor));
        acc = if j % 2 == 0 {
            acc.add(&cof)
        } else {
            acc.sub(&cof)
        };
    }
    acc
}

/// Bareiss fraction-free elimination. Returns None when a required exact
/// division is unavailable (caller falls back to cofactor expansion).
pub fn det_bareiss<T: DetElem>(m: &[Vec<T>]) -> Option<T> {
    let n = m.len();
    let mut a: Vec<Vec<T>> = m.to_vec();
    let mut prev = a[0][0].one_like();
    let mut sign_flip = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            // pivot search with row swap
            let r = ((k + 1)..n).find(|&r| !a[r][k].is_zero())?;
            a.swap(k, r);
            sign_flip = !sign_flip;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.exact_div(&prev)?;
            }
        }
        for i in (k + 1)..n {
            a[i][k] = a[i][k].zero_like();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Some(if sign_flip { d.neg() } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::parse_rat;

    fn rmat(entries: &[&[&str]]) -> Vec<Vec<Rat>> {
        entries
            .iter()
            .map(|row| row.iter().map(|s| parse_rat(s).unwrap()).collect())
            .collect()
    }

    #[test]
    fn det_1x1_and_identity() {
        let m = rmat(&[&["5/3"]]);
        assert_eq!(det(&m).unwrap(), parse_rat("5/3").unwrap());
        let id = rmat(&[&["1", "0", "0"], &["0", "1", "0"], &["0", "0", "1"]]);
        assert_eq!(det(&id).unwrap(), parse_rat("1").unwrap());
    }

    #[test]
    fn det_2x2_rational() {
        // [[1/2,1/3],[1/4,1/5]] -> 1/10 - 1/12 = 1/60
        let m = rmat(&[&["1/2", "1/3"], &["1/4", "1/5"]]);
        assert_eq!(det(&m).unwrap(), parse_rat("1/60").unwrap());
    }

    #[test]
    fn ragged_rejected() {
        let m = vec![
            vec![parse_rat("1").unwrap(), parse_rat("2").unwrap()],
            vec![parse_rat("3").unwrap()],
        ];
        assert!(det(&m).is_err());
    }

    #[test]
    fn bareiss_matches_cofactor_on_rationals() {
        // deterministic pseudo-random entries
        let mut state: u64 = 0x9e3779b97f4a7c15;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            ((state >> 33) % 19) as i64 - 9
        };
        for n in 2..=5 {
            let m: Vec<Vec<Rat>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| Rat::new(next().into(), (1 + (next().abs() % 5)).into()))
                        .collect()
                })
                .collect();
            assert_eq!(det_bareiss(&m).unwrap(), det_cofactor(&m));
        }
    }

    #[test]
    fn bareiss_matches_cofactor_on_qseries() {
        use crate::exactmath::laurent::LaurentPoly;
        use crate::exactmath::qseries::qpoch_series;
        let cap = 8;
        let n = 3;
        let m: Vec<Vec<QSeries>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = LaurentPoly::monomial((1 + ((i + 2 * j) % 3) as i64).into(), 1, 0);
                        qpoch_series(&c, 1 + ((i * j) % 3) as u32, 2, cap)
                    })
                    .collect()
            })
            .collect();
        assert_eq!(det_bareiss(&m).unwrap(), det_cofactor(&m));
    }
}
