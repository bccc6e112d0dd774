//! Lecture hall partitions, anti-lecture hall compositions, their truncated
//! variants, the h/e lecture hall functions, closed-form generating
//! functions, and the combinatorial orthogonality.
//!
//! All ratio comparisons are integer cross-multiplications; no floats.
//!
//! ```
//! use lhall::lhcomb::{genfun_closed, genfun_enum, orthogonality_check, Variant};
//!
//! // the closed product formulas reproduce direct enumeration
//! for variant in [Variant::L, Variant::LBar, Variant::AL, Variant::ALBar] {
//!     let by_enum = genfun_enum(variant, 4, 3, 10).unwrap();
//!     let closed = genfun_closed(variant, 4, 3, 10).unwrap();
//!     assert_eq!(by_enum, closed);
//! }
//!
//! // the h and e lecture hall functions are biorthogonal
//! for m in 0..4 {
//!     for n in 0..4 {
//!         assert!(orthogonality_check(m, n, 10));
//!     }
//! }
//! ```

use crate::error::{Error, Result};
use crate::exactmath::{
    gauss_binomial, qpoch_inverse_series, qpoch_series, Int, LaurentPoly, QSeries,
};

/// The four truncated families.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variant {
    /// L_{n,k}: λ₁/n > λ₂/(n-1) > … > λ_k/(n-k+1) ≥ 0, floor statistics.
    L,
    /// L̄_{n,k}: weak chain ending > 0, ceiling statistics.
    LBar,
    /// AL_{n,k}: α₁/(n-k+1) ≥ … ≥ α_k/n ≥ 0, floor statistics.
    AL,
    /// ĀL_{n,k}: strict chain ending > 0, ceiling statistics.
    ALBar,
}

impl Variant {
    pub fn parse(s: &str) -> Result<Variant> {
        match s {
            "L" => Ok(Variant::L),
            "Lbar" => Ok(Variant::LBar),
            "AL" => Ok(Variant::AL),
            "ALbar" => Ok(Variant::ALBar),
            _ => Err(Error::BadParams(format!("unknown variant {s:?}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::L => "L",
            Variant::LBar => "Lbar",
            Variant::AL => "AL",
            Variant::ALBar => "ALbar",
        }
    }

    /// The denominator sequence S for given (n, k).
    pub fn denominators(self, n: u64, k: u64) -> Vec<u64> {
        match self {
            Variant::L | Variant::LBar => (0..k).map(|i| n - i).collect(),
            Variant::AL | Variant::ALBar => (0..k).map(|i| n - k + 1 + i).collect(),
        }
    }

    /// Whether consecutive ratios compare strictly.
    fn strict_chain(self) -> bool {
        matches!(self, Variant::L | Variant::ALBar)
    }

    /// Whether the final ratio must be > 0 (else ≥ 0).
    fn strict_end(self) -> bool {
        matches!(self, Variant::LBar | Variant::ALBar)
    }

    /// Bar variants use ceiling statistics.
    pub fn uses_ceiling(self) -> bool {
        matches!(self, Variant::LBar | Variant::ALBar)
    }
}

/// A member of one of the four truncated lecture hall families.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundedSequence {
    variant: Variant,
    n: u64,
    k: u64,
    entries: Vec<u64>,
}

impl BoundedSequence {
    pub fn new(variant: Variant, n: u64, k: u64, entries: Vec<u64>) -> Result<Self> {
        if entries.len() as u64 != k || k > n {
            return Err(Error::BadParams(format!(
                "need 0 <= k <= n entries, got {} for (n,k)=({n},{k})",
                entries.len()
            )));
        }
        let s = BoundedSequence {
            variant,
            n,
            k,
            entries,
        };
        if !s.is_valid() {
            return Err(Error::InvalidChain(variant.name()));
        }
        Ok(s)
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// Check the variant's chain of inequalities by cross-multiplication.
    pub fn is_valid(&self) -> bool {
        let s = self.variant.denominators(self.n, self.k);
        let strict = self.variant.strict_chain();
        for w in 0..self.entries.len().saturating_sub(1) {
            let (a, sa) = (self.entries[w], s[w]);
            let (b, sb) = (self.entries[w + 1], s[w + 1]);
            // a/sa REL b/sb  <=>  a*sb REL b*sa
            let (lhs, rhs) = ((a as u128) * (sb as u128), (b as u128) * (sa as u128));
            if strict {
                if lhs <= rhs {
                    return false;
                }
            } else if lhs < rhs {
                return false;
            }
        }
        if let Some(&last) = self.entries.last() {
            if self.variant.strict_end() {
                if last == 0 {
                    return false;
                }
            }
        }
        true
    }

    /// |entries|
    pub fn weight(&self) -> u64 {
        self.entries.iter().sum()
    }

    /// ⌊·⌋_S or ⌈·⌉_S per the variant.
    pub fn stats(&self) -> Vec<u64> {
        let s = self.variant.denominators(self.n, self.k);
        self.entries
            .iter()
            .zip(&s)
            .map(|(&a, &d)| {
                if self.variant.uses_ceiling() {
                    a.div_ceil(d)
                } else {
                    a / d
                }
            })
            .collect()
    }

    /// The weight monomial u^{|stats|} v^{o(stats)} as a Laurent term.
    pub fn uv_monomial(&self) -> LaurentPoly {
        let stats = self.stats();
        let ue: u64 = stats.iter().sum();
        let ve = stats.iter().filter(|&&m| m % 2 == 1).count() as u64;
        LaurentPoly::monomial(Int::from(1), ue as i64, ve as i64)
    }

    /// Entry-wise +1: the bijection L_{n,k} → L̄_{n,k}, AL_{n,k} → ĀL_{n,k}.
    pub fn plus_map(&self) -> Result<BoundedSequence> {
        let target = match self.variant {
            Variant::L => Variant::LBar,
            Variant::AL => Variant::ALBar,
            _ => {
                return Err(Error::BadParams(
                    "plus_map expects an L or AL member".into(),
                ))
            }
        };
        BoundedSequence::new(
            target,
            self.n,
            self.k,
            self.entries.iter().map(|&e| e + 1).collect(),
        )
    }

    /// Entry-wise −1: inverse of `plus_map`.
    pub fn minus_map(&self) -> Result<BoundedSequence> {
        let target = match self.variant {
            Variant::LBar => Variant::L,
            Variant::ALBar => Variant::AL,
            _ => {
                return Err(Error::BadParams(
                    "minus_map expects an Lbar or ALbar member".into(),
                ))
            }
        };
        if self.entries.iter().any(|&e| e == 0) {
            return Err(Error::InvalidChain(self.variant.name()));
        }
        BoundedSequence::new(
            target,
            self.n,
            self.k,
            self.entries.iter().map(|&e| e - 1).collect(),
        )
    }
}

/// All members of the family with entry sum ≤ cap, in lexicographic order.
///
/// The search is pruned by the remaining weight budget; entries are
/// nonnegative so the pruning is exact and the enumeration complete.
pub fn enum_set(variant: Variant, n: u64, k: u64, cap: u64) -> Result<Vec<BoundedSequence>> {
    if k > n {
        return Err(Error::BadParams(format!("need 0 <= k <= n, got ({n},{k})")));
    }
    let denoms = variant.denominators(n, k);
    let mut out = Vec::new();
    let mut entries: Vec<u64> = Vec::with_capacity(k as usize);
    fn rec(
        variant: Variant,
        denoms: &[u64],
        budget: u64,
        entries: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        let pos = entries.len();
        if pos == denoms.len() {
            out.push(entries.clone());
            return;
        }
        let last = pos == denoms.len() - 1;
        let lo = if last && variant.strict_end() { 1 } else { 0 };
        // chain bound from the previous entry: a/s_prev REL e/s_cur
        let hi = if pos == 0 {
            budget
        } else {
            let a = entries[pos - 1] as u128;
            let sp = denoms[pos - 1] as u128;
            let sc = denoms[pos] as u128;
            let bound = if variant.strict_chain() {
                // e * sp < a * sc  =>  e <= ceil(a*sc/sp) - 1; a = 0 kills
                // the branch outright
                match (a * sc).div_ceil(sp) {
                    0 => return,
                    b => b - 1,
                }
            } else {
                // e * sp <= a * sc => e <= floor(a*sc/sp)
                (a * sc) / sp
            };
            budget.min(bound.min(u64::MAX as u128) as u64)
        };
        for e in lo..=hi {
            entries.push(e);
            rec(variant, denoms, budget - e, entries, out);
            entries.pop();
        }
        // lo > hi: dead branch, nothing emitted
    }
    let mut raw = Vec::new();
    rec(variant, &denoms, cap, &mut entries, &mut raw);
    for entries in raw {
        out.push(BoundedSequence {
            variant,
            n,
            k,
            entries,
        });
    }
    Ok(out)
}

/// Generating function Σ u^{|stats|} v^{o(stats)} q^{|entries|} over the
/// enumerated set, truncated at `cap`.
pub fn genfun_enum(variant: Variant, n: u64, k: u64, cap: usize) -> Result<QSeries> {
    let mut series = QSeries::zero(cap);
    for s in enum_set(variant, n, k, cap as u64)? {
        series.add_term(s.weight() as usize, &s.uv_monomial());
    }
    Ok(series)
}

/// The four closed product formulas, expanded as truncated series.
///
/// The ĀL formula is derived from the AL one through the entry-shift
/// bijection (prefactor (uvq)^k, v ↦ v⁻¹); the published display for ĀL
/// carries a denominator typo, which the enumeration oracle confirms.
pub fn genfun_closed(variant: Variant, n: u64, k: u64, cap: usize) -> Result<QSeries> {
    if k > n {
        return Err(Error::BadParams(format!("need 0 <= k <= n, got ({n},{k})")));
    }
    let ki = k as u32;
    let binom = gauss_binomial(n as i64, k as i64, cap);
    let minus_uv = LaurentPoly::monomial(Int::from(-1), 1, 1);
    let minus_u_vinv = LaurentPoly::monomial(Int::from(-1), 1, -1);
    let u2 = LaurentPoly::monomial(Int::from(1), 2, 0);
    let series = match variant {
        Variant::L => {
            // q^C(k,2) [n k] (-uv q^{n-k+1})_k / (u^2 q^{2n-k+1})_k
            let num = qpoch_series(&minus_uv, (n - k + 1) as u32, ki, cap);
            let den = qpoch_inverse_series(&u2, (2 * n - k + 1) as u32, ki, cap)?;
            let shift = (k * k.saturating_sub(1) / 2) as usize;
            (&(&binom * &num) * &den).shift_q(shift)
        }
        Variant::LBar => {
            // u^k v^k q^C(k+1,2) [n k] (-u v^{-1} q^{n-k+1})_k / (u^2 q^{2n-k+1})_k
            let num = qpoch_series(&minus_u_vinv, (n - k + 1) as u32, ki, cap);
            let den = qpoch_inverse_series(&u2, (2 * n - k + 1) as u32, ki, cap)?;
            let shift = (k * (k + 1) / 2) as usize;
            let ukvk = LaurentPoly::monomial(Int::from(1), k as i64, k as i64);
            (&(&binom * &num) * &den).shift_q(shift).scale(&ukvk)
        }
        Variant::AL => {
            // [n k] (-uv q^{n-k+1})_k / (u^2 q^{2n-2k+2})_k
            let num = qpoch_series(&minus_uv, (n - k + 1) as u32, ki, cap);
            let den = qpoch_inverse_series(&u2, (2 * n - 2 * k + 2) as u32, ki, cap)?;
            &(&binom * &num) * &den
        }
        Variant::ALBar => {
            // (uvq)^k [n k] (-u v^{-1} q^{n-k+1})_k / (u^2 q^{2n-2k+2})_k
            let num = qpoch_series(&minus_u_vinv, (n - k + 1) as u32, ki, cap);
            let den = qpoch_inverse_series(&u2, (2 * n - 2 * k + 2) as u32, ki, cap)?;
            let ukvk = LaurentPoly::monomial(Int::from(1), k as i64, k as i64);
            (&(&binom * &num) * &den).shift_q(k as usize).scale(&ukvk)
        }
    };
    Ok(series)
}

/// h_k^{(n)}(\vec q; u, v) = ĀL-free generating function of AL_{n+k-1,k}.
///
/// k = 0 gives 1; computed by enumeration so the closed forms stay
/// independent oracles.
pub fn h_series(n: u64, k: i64, cap: usize) -> QSeries {
    if k < 0 {
        return QSeries::zero(cap);
    }
    if k == 0 {
        return QSeries::one(cap);
    }
    debug_assert!(n >= 1);
    genfun_enum(Variant::AL, n + k as u64 - 1, k as u64, cap)
        .expect("AL parameters always valid for n>=1, k>=1")
}

/// e_k^{(n)}(\vec q; u, v) = generating function of L_{n,k}; zero for k < 0
/// or k > n.
pub fn e_series(n: u64, k: i64, cap: usize) -> QSeries {
    if k < 0 || k as u64 > n {
        return QSeries::zero(cap);
    }
    if k == 0 {
        return QSeries::one(cap);
    }
    genfun_enum(Variant::L, n, k as u64, cap).expect("L parameters valid for 0<=k<=n")
}

/// h̄_k^{(n)}(\vec q; u, v): ceiling statistics over ĀL_{n+k-1,k}.
pub fn hbar_series(n: u64, k: i64, cap: usize) -> QSeries {
    if k < 0 {
        return QSeries::zero(cap);
    }
    if k == 0 {
        return QSeries::one(cap);
    }
    genfun_enum(Variant::ALBar, n + k as u64 - 1, k as u64, cap)
        .expect("ALbar parameters always valid for n>=1, k>=1")
}

/// ē_k^{(n)}(\vec q; u, v): ceiling statistics over L̄_{n,k}.
pub fn ebar_series(n: u64, k: i64, cap: usize) -> QSeries {
    if k < 0 || k as u64 > n {
        return QSeries::zero(cap);
    }
    if k == 0 {
        return QSeries::one(cap);
    }
    genfun_enum(Variant::LBar, n, k as u64, cap).expect("Lbar parameters valid for 0<=k<=n")
}

/// The combinatorial orthogonality of the h/e families at the principal
/// specialization:
///   Σ_i h^{(i+1)}_{m-i} (-1)^{i-n} e^{(i)}_{i-n} = δ_{m,n}
/// and the e-then-h variant, both up to `cap`.
pub fn orthogonality_check(m: u64, n: u64, cap: usize) -> bool {
    let delta = if m == n {
        QSeries::one(cap)
    } else {
        QSeries::zero(cap)
    };
    let mut he = QSeries::zero(cap);
    let mut eh = QSeries::zero(cap);
    for i in 0..=m {
        // h^{(i+1)}_{m-i} * (-1)^{i-n} * e^{(i)}_{i-n}
        let e_term = e_series(i, i as i64 - n as i64, cap);
        if !e_term.is_zero() {
            let h_term = h_series(i + 1, (m - i) as i64, cap);
            let prod = &h_term * &e_term;
            he = if (i as i64 - n as i64) % 2 == 0 {
                &he + &prod
            } else {
                &he - &prod
            };
        }
        // (-1)^{m-i} e^{(m)}_{m-i} * h^{(n+1)}_{i-n}
        if i as i64 - n as i64 >= 0 {
            let h_term = h_series(n + 1, i as i64 - n as i64, cap);
            let e_term = e_series(m, (m - i) as i64, cap);
            if !e_term.is_zero() {
                let prod = &e_term * &h_term;
                eh = if (m - i) % 2 == 0 {
                    &eh + &prod
                } else {
                    &eh - &prod
                };
            }
        }
    }
    he == delta && eh == delta
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::QSeries;

    #[test]
    fn enum_contains_nw_fixture_composition() {
        // the worked example α = (5,4,5,5,3,3) in AL_{8,6}
        let set = enum_set(Variant::AL, 8, 6, 25).unwrap();
        assert!(set
            .iter()
            .any(|s| s.entries() == [5, 4, 5, 5, 3, 3]));
    }

    #[test]
    fn enum_contains_ne_fixture_partition() {
        // the worked example λ = (15,12,8,5,3,0) in L_{8,6}
        let set = enum_set(Variant::L, 8, 6, 43).unwrap();
        assert!(set
            .iter()
            .any(|s| s.entries() == [15, 12, 8, 5, 3, 0]));
    }

    #[test]
    fn enum_k0_single_empty() {
        let set = enum_set(Variant::L, 4, 0, 10).unwrap();
        assert_eq!(set.len(), 1);
        assert!(set[0].entries().is_empty());
    }

    #[test]
    fn lecture_hall_theorem_truncation() {
        // Σ_{λ∈L_n} q^{|λ|} = 1/(q;q^2)_n up to the cap. A weak chain in
        // L_n that hits zero stays zero, so L_n = ⊔_j L̄_{n,j} zero-padded.
        let cap = 12;
        for n in 1..=5u64 {
            let mut lhs = QSeries::zero(cap);
            for j in 0..=n {
                for s in enum_set(Variant::LBar, n, j, cap as u64).unwrap() {
                    lhs.add_term(s.weight() as usize, &LaurentPoly::one());
                }
            }
            // 1/(q;q^2)_n = ∏_{i=0}^{n-1} 1/(1 - q^{2i+1})
            let mut rhs = QSeries::one(cap);
            for i in 0..n {
                let f = qpoch_inverse_series(&LaurentPoly::one(), (2 * i + 1) as u32, 1, cap)
                    .unwrap();
                rhs = &rhs * &f;
            }
            assert_eq!(lhs, rhs, "lecture hall theorem failed at n={n}");
        }
    }

    #[test]
    fn anti_lecture_hall_theorem_truncation() {
        // Σ_{α∈AL_n} q^{|α|} = (-q;q)_n/(q^2;q)_n up to the cap
        let cap = 12;
        for n in 1..=5u64 {
            let mut lhs = QSeries::zero(cap);
            for s in enum_set(Variant::AL, n, n, cap as u64).unwrap() {
                lhs.add_term(s.weight() as usize, &LaurentPoly::one());
            }
            let num = qpoch_series(&LaurentPoly::from_int(-1), 1, n as u32, cap);
            let den = qpoch_inverse_series(&LaurentPoly::one(), 2, n as u32, cap).unwrap();
            let rhs = &num * &den;
            assert_eq!(lhs, rhs, "anti-lecture hall theorem failed at n={n}");
        }
    }

    #[test]
    fn closed_matches_enum_all_variants() {
        let cap = 12;
        for variant in [Variant::L, Variant::LBar, Variant::AL, Variant::ALBar] {
            for n in 0..=5u64 {
                for k in 0..=n {
                    let by_enum = genfun_enum(variant, n, k, cap).unwrap();
                    let closed = genfun_closed(variant, n, k, cap).unwrap();
                    assert_eq!(
                        by_enum,
                        closed,
                        "variant {variant:?} (n,k)=({n},{k}) first mismatch at q^{:?}",
                        by_enum.first_mismatch(&closed)
                    );
                }
            }
        }
    }

    #[test]
    fn al21_explicit_product() {
        // hand-derived closed form of (AL, 2, 1):
        // [2 1] (-uvq^2)_1 / (u^2 q^4)_1 = (1+q)(1+uvq^2)/(1-u^2q^4)
        let cap = 10;
        let lhs = genfun_enum(Variant::AL, 2, 1, cap).unwrap();
        let a = qpoch_series(&LaurentPoly::from_int(-1), 1, 1, cap); // 1+q... (1 - (-1)q)
        let b = qpoch_series(&LaurentPoly::monomial(Int::from(-1), 1, 1), 2, 1, cap);
        let c = qpoch_inverse_series(&LaurentPoly::monomial(Int::from(1), 2, 0), 4, 1, cap)
            .unwrap();
        let rhs = &(&a * &b) * &c;
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn lbar_is_shifted_l_with_v_inverted() {
        // L̄_{n,k}(u,v,q) = (uvq)^k L_{n,k}(u, 1/v, q)
        let cap = 12;
        for n in 1..=4u64 {
            for k in 0..=n {
                let lbar = genfun_enum(Variant::LBar, n, k, cap).unwrap();
                let l = genfun_enum(Variant::L, n, k, cap).unwrap();
                let shifted = l
                    .invert_v()
                    .shift_q(k as usize)
                    .scale(&LaurentPoly::monomial(Int::from(1), k as i64, k as i64));
                assert_eq!(lbar, shifted, "(n,k)=({n},{k})");
            }
        }
    }

    #[test]
    fn plus_map_bijection_and_weight_shift() {
        for n in 1..=5u64 {
            for k in 0..=n {
                let l_set = enum_set(Variant::L, n, k, 12).unwrap();
                for s in &l_set {
                    let plus = s.plus_map().unwrap();
                    assert_eq!(plus.weight(), s.weight() + k);
                    // ⌈λ⁺⌉ = ⌊λ⌋⁺
                    let expect: Vec<u64> = s.stats().iter().map(|&x| x + 1).collect();
                    assert_eq!(plus.stats(), expect);
                    assert_eq!(plus.minus_map().unwrap(), *s);
                }
                // image-completeness up to the shifted cap
                let lbar_set = enum_set(Variant::LBar, n, k, 12 + k).unwrap();
                let images: Vec<_> = l_set.iter().map(|s| s.plus_map().unwrap()).collect();
                for t in &lbar_set {
                    assert!(images.contains(t), "{t:?} not hit by plus_map");
                }
                assert_eq!(images.len(), l_set.len());
            }
        }
    }

    #[test]
    fn plus_map_trivial_example() {
        let s = BoundedSequence::new(Variant::L, 1, 1, vec![0]).unwrap();
        let p = s.plus_map().unwrap();
        assert_eq!(p.variant(), Variant::LBar);
        assert_eq!(p.entries(), [1]);
        assert_eq!(p.stats(), vec![1]);
    }

    #[test]
    fn h_series_is_closed_al_formula() {
        // h_{n-k}^{(k+1)}(\vec q) = AL_{n,n-k}(u,v,q)
        let cap = 12;
        for n in 1..=5u64 {
            for k in 0..=n {
                let h = h_series(k + 1, (n - k) as i64, cap);
                let closed = genfun_closed(Variant::AL, n, n - k, cap).unwrap();
                assert_eq!(h, closed, "(n,k)=({n},{k})");
            }
        }
    }

    #[test]
    fn e_series_edges() {
        assert_eq!(e_series(3, 0, 8), QSeries::one(8));
        assert!(e_series(3, 4, 8).is_zero());
        assert!(e_series(3, -1, 8).is_zero());
    }

    #[test]
    fn orthogonality_grid() {
        for m in 0..=6 {
            for n in 0..=6 {
                assert!(orthogonality_check(m, n, 10), "(m,n)=({m},{n})");
            }
        }
    }
}
