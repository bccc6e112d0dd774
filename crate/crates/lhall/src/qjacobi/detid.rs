//! The two determinant evaluations behind the dual moment product formula,
//! checked exactly at rational points, plus a deterministic parameter
//! sampler for running them at many draws.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{det, rat_pow, Rat};

use super::{int, qpoch, qpow};

/// A rational evaluation point for the determinant identities.
#[derive(Clone, Debug)]
pub struct ParamDraw {
    pub xs: Vec<Rat>,
    pub a: Rat,
    pub b: Rat,
    pub q: Rat,
}

/// Deterministic xorshift64 sampler over small rationals. Degenerate draws
/// (coincident points, vanishing Pochhammer factors) make the checks return
/// an error; step the seed and redraw.
pub fn draw_params(seed: u64, n: usize) -> ParamDraw {
    struct Rng(u64);
    impl Rng {
        fn next(&mut self) -> u64 {
            self.0 ^= self.0 << 13;
            self.0 ^= self.0 >> 7;
            self.0 ^= self.0 << 17;
            self.0
        }
        fn small(&mut self, lo: i64, hi: i64) -> i64 {
            lo + (self.next() % (hi - lo + 1) as u64) as i64
        }
        fn nonzero(&mut self, lo: i64, hi: i64) -> i64 {
            loop {
                let v = self.small(lo, hi);
                if v != 0 {
                    return v;
                }
            }
        }
    }
    let mut rng = Rng(seed.wrapping_mul(0x9e3779b97f4a7c15) | 1);
    let qn = rng.small(1, 7);
    let q = int(qn) / int(qn + rng.small(1, 7));
    let a = int(rng.nonzero(-9, 9)) / int(rng.small(1, 9));
    let b = int(rng.nonzero(-9, 9)) / int(rng.small(1, 9));
    let xs = (0..n)
        .map(|_| int(rng.nonzero(-19, 19)) / int(rng.small(1, 9)))
        .collect();
    ParamDraw { xs, a, b, q }
}

fn check_point(p: &ParamDraw) -> Result<()> {
    for (i, x) in p.xs.iter().enumerate() {
        if x.is_zero() {
            return Err(Error::BadParams("x values must be nonzero".into()));
        }
        if p.xs[..i].contains(x) {
            return Err(Error::BadParams("x values must be distinct".into()));
        }
    }
    if p.b.is_zero() {
        return Err(Error::BadParams("b must be nonzero".into()));
    }
    Ok(())
}

fn vandermonde_value(xs: &[Rat]) -> Rat {
    let mut v = Rat::one();
    for i in 0..xs.len() {
        for j in (i + 1)..xs.len() {
            v *= &xs[j] - &xs[i];
        }
    }
    v
}

fn nonzero(r: Rat) -> Result<Rat> {
    if r.is_zero() {
        return Err(Error::VanishingDenominator("factor vanishes at the chosen point".into()));
    }
    Ok(r)
}

/// det(1/((axⱼ)ᵢ(b/xⱼ)ᵢ)) = (−1)^{C(n+1,2)} b^{−n²} q^{−C(n+1,3)} x₁…xₙ
/// ∏_{i<j}(b−axᵢxⱼ)(xⱼ−xᵢ) / ∏ⱼ(axⱼ)ₙ(q^{1−n}b^{−1}xⱼ)ₙ,
/// together with its equivalent polynomial form
/// det(xⱼ^{i−1}(aqⁱxⱼ)_{n−i}(bxⱼ)_{n−i}) = ∏_{i<j}(1−abq^{n−1}xᵢxⱼ)(xⱼ−xᵢ).
/// The rational form follows from the polynomial form by substituting
/// b ↦ q^{1−n}/b and flipping each (b/xⱼ)ᵢ with the standard reversal
/// (c)ᵢ = (−c)ᵢ q^{C(i,2)} (q^{1−i}/c)ᵢ.
pub fn det_lemma_check(p: &ParamDraw) -> Result<bool> {
    check_point(p)?;
    let n = p.xs.len();
    let (q, a, b) = (&p.q, &p.a, &p.b);
    if n == 0 {
        return Ok(true);
    }

    // rational form
    let mut m = Vec::with_capacity(n);
    for i in 1..=n {
        let mut row = Vec::with_capacity(n);
        for x in &p.xs {
            let d = nonzero(qpoch(&(a * x), q, i as u64))?
                * nonzero(qpoch(&(b / x), q, i as u64))?;
            row.push(d.recip());
        }
        m.push(row);
    }
    let lhs = det(&m)?;

    let nn = n as i64;
    let sign = if (nn + 1) * nn / 2 % 2 == 0 { Rat::one() } else { -Rat::one() };
    let mut rhs = sign * rat_pow(b, -nn * nn) * qpow(q, -(nn + 1) * nn * (nn - 1) / 6);
    for x in &p.xs {
        rhs *= x;
    }
    for i in 0..n {
        for j in (i + 1)..n {
            rhs *= (b - a * &p.xs[i] * &p.xs[j]) * (&p.xs[j] - &p.xs[i]);
        }
    }
    for x in &p.xs {
        rhs /= nonzero(qpoch(&(a * x), q, n as u64))?;
        rhs /= nonzero(qpoch(&(qpow(q, 1 - nn) / b * x), q, n as u64))?;
    }
    if lhs != rhs {
        return Ok(false);
    }

    // polynomial form
    let mut m2 = Vec::with_capacity(n);
    for i in 1..=n {
        let mut row = Vec::with_capacity(n);
        for x in &p.xs {
            row.push(
                rat_pow(x, i as i64 - 1)
                    * qpoch(&(a * qpow(q, i as i64) * x), q, (n - i) as u64)
                    * qpoch(&(b * x), q, (n - i) as u64),
            );
        }
        m2.push(row);
    }
    let lhs2 = det(&m2)?;
    let mut rhs2 = vandermonde_value(&p.xs);
    for i in 0..n {
        for j in (i + 1)..n {
            rhs2 *= Rat::one() - a * b * qpow(q, nn - 1) * &p.xs[i] * &p.xs[j];
        }
    }
    Ok(lhs2 == rhs2)
}

/// det(xⱼ^i (b/xⱼ)ᵢ/(axⱼ)ᵢ) = ∏ᵢ(abqⁱ)_{i−1}(xᵢ−b)/(axᵢ)ₙ ∏_{i<j}(xⱼ−xᵢ),
/// together with its polynomial form
/// det(xⱼ^i(b/xⱼ)ᵢ(aqⁱxⱼ)_{n−i}) = ∏ᵢ(abqⁱ)_{i−1}(xᵢ−b) ∏_{i<j}(xⱼ−xᵢ).
pub fn det_prop_check(p: &ParamDraw) -> Result<bool> {
    check_point(p)?;
    let n = p.xs.len();
    let (q, a, b) = (&p.q, &p.a, &p.b);
    if n == 0 {
        return Ok(true);
    }
    let ab = a * b;

    let mut m = Vec::with_capacity(n);
    for i in 1..=n {
        let mut row = Vec::with_capacity(n);
        for x in &p.xs {
            row.push(
                rat_pow(x, i as i64) * qpoch(&(b / x), q, i as u64)
                    / nonzero(qpoch(&(a * x), q, i as u64))?,
            );
        }
        m.push(row);
    }
    let lhs = det(&m)?;
    let mut rhs = vandermonde_value(&p.xs);
    for (i, x) in p.xs.iter().enumerate() {
        rhs *= qpoch(&(&ab * qpow(q, i as i64 + 1)), q, i as u64) * (x - b)
            / nonzero(qpoch(&(a * x), q, n as u64))?;
    }
    if lhs != rhs {
        return Ok(false);
    }

    let mut m2 = Vec::with_capacity(n);
    for i in 1..=n {
        let mut row = Vec::with_capacity(n);
        for x in &p.xs {
            row.push(
                rat_pow(x, i as i64)
                    * qpoch(&(b / x), q, i as u64)
                    * qpoch(&(a * qpow(q, i as i64) * x), q, (n - i) as u64),
            );
        }
        m2.push(row);
    }
    let lhs2 = det(&m2)?;
    let mut rhs2 = vandermonde_value(&p.xs);
    for (i, x) in p.xs.iter().enumerate() {
        rhs2 *= qpoch(&(&ab * qpow(q, i as i64 + 1)), q, i as u64) * (x - b);
    }
    Ok(lhs2 == rhs2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_draws(n: usize, want: usize) {
        let mut seed = 1u64;
        let mut done = 0;
        while done < want {
            let draw = draw_params(seed, n);
            seed += 1;
            match (det_lemma_check(&draw), det_prop_check(&draw)) {
                (Ok(l), Ok(p)) => {
                    assert!(l, "lemma failed at {draw:?}");
                    assert!(p, "prop failed at {draw:?}");
                    done += 1;
                }
                // degenerate draw: redraw
                _ => {}
            }
        }
    }

    #[test]
    fn single_variable_trivial() {
        run_draws(1, 5);
    }

    #[test]
    fn twenty_draws_n3() {
        run_draws(3, 20);
    }

    #[test]
    fn five_draws_n5() {
        run_draws(5, 5);
    }

    #[test]
    fn degenerate_draws_rejected() {
        let p = ParamDraw {
            xs: vec![int(1), int(1)],
            a: int(1) / int(2),
            b: int(1) / int(3),
            q: int(1) / int(2),
        };
        assert!(det_lemma_check(&p).is_err());
        let z = ParamDraw {
            xs: vec![int(0)],
            a: int(1),
            b: int(1),
            q: int(1) / int(2),
        };
        assert!(det_prop_check(&z).is_err());
    }
}
