//! Exact multivariate polynomials in x₁..xₙ over big rationals.
//!
//! Used for the bialternant constructions: Schur polynomials, multivariate
//! little q-Jacobi polynomials, and the exact Vandermonde divisions they
//! need.

use crate::error::{Error, Result};
use crate::exactmath::rational::Rat;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Multivariate polynomial; terms map exponent vectors to rational
/// coefficients, never storing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, Rat::one())
    }

    /// The variable x_i (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mut p = MultiPoly::zero(nvars);
        p.terms.insert(exps, Rat::one());
        p
    }

    /// c · x^exps
    pub fn monomial(nvars: usize, exps: Vec<u32>, c: Rat) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    fn insert_add(&mut self, exps: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
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

    pub fn eval(&self, xs: &[Rat]) -> Rat {
        assert_eq!(xs.len(), self.nvars);
        let mut acc = Rat::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in xs.iter().zip(exps) {
                term *= num_traits::pow::pow(x.clone(), e as usize);
            }
            acc += term;
        }
        acc
    }

    /// Substitute x_i ← x_j (variable identification), keeping nvars.
    pub fn subst_var(&self, i: usize, j: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (exps, c) in &self.terms {
            let mut e = exps.clone();
            e[j] += e[i];
            e[i] = 0;
            out.insert_add(e, c.clone());
        }
        out
    }

    /// Swap variables x_i and x_j.
    pub fn swap_vars(&self, i: usize, j: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (exps, c) in &self.terms {
            let mut e = exps.clone();
            e.swap(i, j);
            out.insert_add(e, c.clone());
        }
        out
    }

    /// Exact division by the linear factor (x_i − x_j), i ≠ j.
    ///
    /// Synthetic division treating the polynomial as univariate in x_i; the
    /// remainder is the substitution x_i ← x_j and must vanish.
    pub fn div_exact_linear(&self, i: usize, j: usize) -> Result<MultiPoly> {
        assert_ne!(i, j);
        // split by degree in x_i
        let mut by_deg: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (exps, c) in &self.terms {
            let d = exps[i];
            let mut e = exps.clone();
            e[i] = 0;
            by_deg
                .entry(d)
                .or_insert_with(|| MultiPoly::zero(self.nvars))
                .insert_add(e, c.clone());
        }
        // remainder = substitution x_i = x_j must be zero
        if !self.subst_var(i, j).is_zero() {
            return Err(Error::InexactDivision);
        }
        // quotient = sum over d>=1 of A_d * (x_i^{d-1} + x_i^{d-2} x_j + ... + x_j^{d-1})
        let mut out = MultiPoly::zero(self.nvars);
        for (&d, coef) in &by_deg {
            for t in 0..d {
                // x_i^t * x_j^{d-1-t} * coef
                for (exps, c) in &coef.terms {
                    let mut e = exps.clone();
                    e[i] += t;
                    e[j] += d - 1 - t;
                    out.insert_add(e, c.clone());
                }
            }
        }
        Ok(out)
    }

    /// The Vandermonde product Δ(x) = ∏_{i<j} (x_i − x_j).
    pub fn vandermonde(nvars: usize) -> MultiPoly {
        let mut p = MultiPoly::one(nvars);
        for i in 0..nvars {
            for j in (i + 1)..nvars {
                let factor = &MultiPoly::var(nvars, i) - &MultiPoly::var(nvars, j);
                p = &p * &factor;
            }
        }
        p
    }

    /// Exact division by Δ(x), asserting a zero remainder at every factor.
    pub fn div_exact_vandermonde(&self) -> Result<MultiPoly> {
        let mut p = self.clone();
        for i in 0..self.nvars {
            for j in (i + 1)..self.nvars {
                p = p.div_exact_linear(i, j)?;
            }
        }
        Ok(p)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), -c.clone()))
            .collect();
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_add(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    write!(f, "*x{}^{}", i + 1, e)?;
                }
            }
        }
        Ok(())
    }
}
