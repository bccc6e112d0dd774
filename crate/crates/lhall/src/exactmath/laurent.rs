//! Integer-coefficient Laurent polynomials in the formal variables u and v.
//!
//! These are the coefficients of the truncated q-series: the statistics
//! u^{|⌊·⌋|} v^{o(⌊·⌋)} live here. Exponents may be negative (v⁻¹ shows up
//! in the bar-family formulas), coefficients are exact big integers, and no
//! zero terms are ever stored.

use crate::error::{Error, Result};
use crate::exactmath::rational::{rat_pow, Int, Rat};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact Laurent polynomial in u, v over the integers.
///
/// Terms are keyed by `(u_exp, v_exp)`; the map never contains a zero
/// coefficient, so equality is structural.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<(i64, i64), Int>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(Int::one(), 0, 0)
    }

    pub fn from_int(n: i64) -> Self {
        LaurentPoly::monomial(Int::from(n), 0, 0)
    }

    /// The single term `coeff * u^ue * v^ve`.
    pub fn monomial(coeff: Int, ue: i64, ve: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((ue, ve), coeff);
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).map_or(false, |c| c.is_one())
    }

    /// If the polynomial is a single term, return `(u_exp, v_exp, coeff)`.
    pub fn as_monomial(&self) -> Option<(i64, i64, &Int)> {
        if self.terms.len() == 1 {
            let ((ue, ve), c) = self.terms.iter().next().unwrap();
            Some((*ue, *ve, c))
        } else {
            None
        }
    }

    /// Multiplicative inverse, defined only for ±(u^a v^b) terms.
    pub fn invert_monomial(&self) -> Option<LaurentPoly> {
        let (ue, ve, c) = self.as_monomial()?;
        if c.abs().is_one() {
            Some(LaurentPoly::monomial(c.clone(), -ue, -ve))
        } else {
            None
        }
    }

    /// Substitute v ↦ v⁻¹ (negate every v-exponent).
    pub fn invert_v(&self) -> LaurentPoly {
        let terms = self
            .terms
            .iter()
            .map(|(&(ue, ve), c)| ((ue, -ve), c.clone()))
            .collect();
        LaurentPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &Int)> {
        self.terms.iter()
    }

    fn insert_add(&mut self, key: (i64, i64), c: Int) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Evaluate at exact rational values of u and v. Negative v-exponents
    /// require v ≠ 0 (and likewise for u).
    pub fn eval(&self, u: &Rat, v: &Rat) -> Result<Rat> {
        let mut acc = Rat::zero();
        for (&(ue, ve), c) in &self.terms {
            if (ue < 0 && u.is_zero()) || (ve < 0 && v.is_zero()) {
                return Err(Error::VanishingDenominator(
                    "negative exponent at zero".into(),
                ));
            }
            acc += Rat::from_integer(c.clone()) * rat_pow(u, ue) * rat_pow(v, ve);
        }
        Ok(acc)
    }

    /// Canonical JSON form: a sorted list of `[u_exp, v_exp, "coeff"]`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(&(ue, ve), c)| {
                    serde_json::json!([ue, ve, c.to_string()])
                })
                .collect(),
        )
    }

    pub fn from_json(val: &serde_json::Value) -> Result<Self> {
        let arr = val
            .as_array()
            .ok_or_else(|| Error::Invalid("expected JSON array of terms".into()))?;
        let mut out = LaurentPoly::zero();
        for t in arr {
            let t = t
                .as_array()
                .filter(|t| t.len() == 3)
                .ok_or_else(|| Error::Invalid("expected [ue, ve, coeff] term".into()))?;
            let ue = t[0]
                .as_i64()
                .ok_or_else(|| Error::Invalid("u-exponent must be an integer".into()))?;
            let ve = t[1]
                .as_i64()
                .ok_or_else(|| Error::Invalid("v-exponent must be an integer".into()))?;
            let c: Int = t[2]
                .as_str()
                .ok_or_else(|| Error::Invalid("coefficient must be a decimal string".into()))?
                .parse()
                .map_err(|_| Error::Invalid("bad coefficient".into()))?;
            out.insert_add((ue, ve), c);
        }
        Ok(out)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert_add(*k, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert_add(*k, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| (*k, -c.clone()))
            .collect();
        LaurentPoly { terms }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.insert_add((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(ue, ve), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            if ue != 0 {
                write!(f, "*u^{ue}")?;
            }
            if ve != 0 {
                write!(f, "*v^{ve}")?;
            }
        }
        Ok(())
    }
}
