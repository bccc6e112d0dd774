//! Lecture hall tableaux: the four order types, enumeration, lecture hall
//! Schur series, Jacobi–Trudi determinants, product formulas, and the
//! entry-shift bijection between floor and ceiling types.
//!
//! A tableau of type (n, ≺₁, ≺₂) fills the cells of a skew shape λ/μ with
//! nonnegative integers so that T(i,j)/(n+c(i,j)) ≺₁ T(i,j+1)/(n+c(i,j+1))
//! along rows and ≺₂ down columns, where c(i,j) = j−i. All ratio
//! comparisons are integer cross-multiplications.
//!
//! ```
//! use lhall::partitions::{Partition, SkewShape};
//! use lhall::tableaux::{enumerate, jacobi_trudi, ls_product, ls_series, JtForm, OrderType};
//!
//! // eleven (≥,>)-tableaux of shape (2,1) with n = 3 and entry sum ≤ 4
//! let lam = Partition::parse("2,1").unwrap();
//! let shape = SkewShape::straight(lam.clone());
//! assert_eq!(enumerate(&shape, 3, OrderType::GeGt, 4).unwrap().len(), 11);
//!
//! // series = both Jacobi–Trudi determinants = closed product
//! let by_enum = ls_series(&shape, 3, OrderType::GeGt, 10).unwrap();
//! assert_eq!(jacobi_trudi(&shape, 3, OrderType::GeGt, JtForm::H, 10).unwrap(), by_enum);
//! assert_eq!(jacobi_trudi(&shape, 3, OrderType::GeGt, JtForm::E, 10).unwrap(), by_enum);
//! assert_eq!(ls_product(&lam, 3, OrderType::GeGt, 10).unwrap(), by_enum);
//! ```

use crate::error::{Error, Result};
use crate::exactmath::{
    det, qpoch_inverse_series, qpoch_series, Int, LaurentPoly, QSeries,
};
use crate::lhcomb::{ebar_series, e_series, hbar_series, h_series};
use crate::partitions::{content, Partition, SkewShape};
use num_traits::Zero;

/// The comparison in one direction of a tableau type.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Ineq {
    Lt,
    Le,
    Gt,
    Ge,
}

impl Ineq {
    /// a/da REL b/db by cross-multiplication.
    fn holds(self, a: u64, da: u64, b: u64, db: u64) -> bool {
        let (lhs, rhs) = ((a as u128) * (db as u128), (b as u128) * (da as u128));
        match self {
            Ineq::Lt => lhs < rhs,
            Ineq::Le => lhs <= rhs,
            Ineq::Gt => lhs > rhs,
            Ineq::Ge => lhs >= rhs,
        }
    }
}

/// The four supported tableau types.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrderType {
    /// (≥, >): floor weight, nonnegative entries.
    GeGt,
    /// (<, ≤): floor weight, nonnegative entries.
    LtLe,
    /// (>, ≥): ceiling weight, positive entries.
    GtGe,
    /// (≤, <): ceiling weight, positive entries.
    LeLt,
}

impl OrderType {
    pub fn parse(s: &str) -> Result<OrderType> {
        match s {
            "ge-gt" => Ok(OrderType::GeGt),
            "lt-le" => Ok(OrderType::LtLe),
            "gt-ge" => Ok(OrderType::GtGe),
            "le-lt" => Ok(OrderType::LeLt),
            _ => Err(Error::BadParams(format!("unknown tableau type {s:?}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OrderType::GeGt => "ge-gt",
            OrderType::LtLe => "lt-le",
            OrderType::GtGe => "gt-ge",
            OrderType::LeLt => "le-lt",
        }
    }

    pub fn row(self) -> Ineq {
        match self {
            OrderType::GeGt => Ineq::Ge,
            OrderType::LtLe => Ineq::Lt,
            OrderType::GtGe => Ineq::Gt,
            OrderType::LeLt => Ineq::Le,
        }
    }

    pub fn col(self) -> Ineq {
        match self {
            OrderType::GeGt => Ineq::Gt,
            OrderType::LtLe => Ineq::Le,
            OrderType::GtGe => Ineq::Ge,
            OrderType::LeLt => Ineq::Lt,
        }
    }

    /// Bar types use ceiling statistics and positive entries.
    pub fn is_bar(self) -> bool {
        matches!(self, OrderType::GtGe | OrderType::LeLt)
    }
}

/// A filling of a skew shape, stored row-major over the shape's cells.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tableau {
    shape: SkewShape,
    n: u64,
    otype: OrderType,
    entries: Vec<u64>,
}

impl Tableau {
    /// Build and validate a tableau from row-major entries.
    pub fn new(shape: SkewShape, n: u64, otype: OrderType, entries: Vec<u64>) -> Result<Tableau> {
        if (shape.outer().len() as u64) > n {
            return Err(Error::BadParams(format!(
                "shape has {} rows but n = {n}",
                shape.outer().len()
            )));
        }
        if entries.len() as u64 != shape.num_cells() {
            return Err(Error::BadParams(format!(
                "shape has {} cells, got {} entries",
                shape.num_cells(),
                entries.len()
            )));
        }
        let t = Tableau {
            shape,
            n,
            otype,
            entries,
        };
        if !t.validate() {
            return Err(Error::InvalidChain(t.otype.name()));
        }
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn order_type(&self) -> OrderType {
        self.otype
    }

    /// Row-major entries over the shape's cells.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    fn cell_index(&self, i: usize, j: usize) -> Option<usize> {
        let cells = self.shape.cells();
        cells.iter().position(|&c| c == (i, j))
    }

    /// Denominator n + c(i,j); positive because j ≥ 1 and i ≤ ℓ(λ) ≤ n.
    fn denom(&self, i: usize, j: usize) -> u64 {
        let d = self.n as i64 + content(i, j);
        assert!(d >= 1, "denominator {d} at cell ({i},{j})");
        d as u64
    }

    /// Check every row and column adjacency, plus positivity for bar types.
    pub fn validate(&self) -> bool {
        if self.otype.is_bar() && self.entries.iter().any(|&e| e == 0) {
            return false;
        }
        let cells = self.shape.cells();
        for (idx, &(i, j)) in cells.iter().enumerate() {
            let a = self.entries[idx];
            let da = self.denom(i, j);
            if let Some(right) = self.cell_index(i, j + 1) {
                let b = self.entries[right];
                if !self.otype.row().holds(a, da, b, self.denom(i, j + 1)) {
                    return false;
                }
            }
            if let Some(below) = self.cell_index(i + 1, j) {
                let b = self.entries[below];
                if !self.otype.col().holds(a, da, b, self.denom(i + 1, j)) {
                    return false;
                }
            }
        }
        true
    }

    /// Sum of entries (the q-exponent of the weight).
    pub fn entry_sum(&self) -> u64 {
        self.entries.iter().sum()
    }

    /// The (u, v) part of the weight: u^{Σ f(T(s))} v^{#odd f(T(s))} where
    /// f is the floor (bar = false) or ceiling of T(s)/(n+c(s)).
    pub fn uv_weight(&self, bar: bool) -> LaurentPoly {
        let mut ue = 0u64;
        let mut ve = 0u64;
        for (idx, &(i, j)) in self.shape.cells().iter().enumerate() {
            let d = self.denom(i, j);
            let e = self.entries[idx];
            let f = if bar { e.div_ceil(d) } else { e / d };
            ue += f;
            ve += f % 2;
        }
        LaurentPoly::monomial(Int::from(1), ue as i64, ve as i64)
    }

    /// The natural weight for the tableau's type: floor statistics for
    /// (≥,>) and (<,≤), ceiling for the bar types.
    pub fn natural_uv_weight(&self) -> LaurentPoly {
        self.uv_weight(self.otype.is_bar())
    }

    /// Entry-wise +1: the bijection (≥,>) → (>,≥) and (<,≤) → (≤,<).
    pub fn plus(&self) -> Result<Tableau> {
        let target = match self.otype {
            OrderType::GeGt => OrderType::GtGe,
            OrderType::LtLe => OrderType::LeLt,
            _ => return Err(Error::BadParams("plus expects a floor-type tableau".into())),
        };
        Tableau::new(
            self.shape.clone(),
            self.n,
            target,
            self.entries.iter().map(|&e| e + 1).collect(),
        )
    }

    /// Entry-wise −1: inverse of [`Tableau::plus`].
    pub fn minus(&self) -> Result<Tableau> {
        let target = match self.otype {
            OrderType::GtGe => OrderType::GeGt,
            OrderType::LeLt => OrderType::LtLe,
            _ => return Err(Error::BadParams("minus expects a bar-type tableau".into())),
        };
        if self.entries.iter().any(|&e| e == 0) {
            return Err(Error::InvalidChain(self.otype.name()));
        }
        Tableau::new(
            self.shape.clone(),
            self.n,
            target,
            self.entries.iter().map(|&e| e - 1).collect(),
        )
    }
}

/// All tableaux of the given shape and type with entry sum ≤ cap.
///
/// Cells are filled row-major, so each cell's left and top neighbors are
/// already placed; the neighbor inequalities translate into an integer
/// interval per cell via ceiling/floor division, intersected with the
/// remaining weight budget.
pub fn enumerate(shape: &SkewShape, n: u64, otype: OrderType, cap: u64) -> Result<Vec<Tableau>> {
    if (shape.outer().len() as u64) > n {
        return Err(Error::BadParams(format!(
            "shape has {} rows but n = {n}",
            shape.outer().len()
        )));
    }
    let cells = shape.cells();
    // indices of left/top neighbors, if in shape
    let neighbor = |i: usize, j: usize| cells.iter().position(|&c| c == (i, j));
    let mut lefts = Vec::with_capacity(cells.len());
    let mut tops = Vec::with_capacity(cells.len());
    let mut denoms = Vec::with_capacity(cells.len());
    for &(i, j) in &cells {
        lefts.push(if j >= 2 { neighbor(i, j - 1) } else { None });
        tops.push(if i >= 2 { neighbor(i - 1, j) } else { None });
        let d = n as i64 + content(i, j);
        assert!(d >= 1);
        denoms.push(d as u64);
    }

    // the bound on cell value t from a placed neighbor a: a/da ≺ t/d
    // Ge: t ≤ ⌊a·d/da⌋        Gt: t ≤ ⌈a·d/da⌉ − 1 (dead branch if a = 0)
    // Le: t ≥ ⌈a·d/da⌉        Lt: t ≥ ⌊a·d/da⌋ + 1
    let upper = |rel: Ineq, a: u64, da: u64, d: u64| -> Option<u64> {
        let x = (a as u128) * (d as u128);
        let b = match rel {
            Ineq::Ge => x / da as u128,
            Ineq::Gt => match x.div_ceil(da as u128) {
                0 => return None,
                y => y - 1,
            },
            _ => unreachable!(),
        };
        Some(b.min(u64::MAX as u128) as u64)
    };
    let lower = |rel: Ineq, a: u64, da: u64, d: u64| -> u64 {
        let x = (a as u128) * (d as u128);
        let b = match rel {
            Ineq::Le => x.div_ceil(da as u128),
            Ineq::Lt => x / da as u128 + 1,
            _ => unreachable!(),
        };
        b.min(u64::MAX as u128) as u64
    };
    let upper_bounded = matches!(otype.row(), Ineq::Ge | Ineq::Gt);

    let mut out = Vec::new();
    let mut entries: Vec<u64> = Vec::with_capacity(cells.len());
    #[allow(clippy::too_many_arguments)]
    fn rec(
        otype: OrderType,
        denoms: &[u64],
        lefts: &[Option<usize>],
        tops: &[Option<usize>],
        upper_bounded: bool,
        upper: &dyn Fn(Ineq, u64, u64, u64) -> Option<u64>,
        lower: &dyn Fn(Ineq, u64, u64, u64) -> u64,
        budget: u64,
        entries: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        let pos = entries.len();
        if pos == denoms.len() {
            out.push(entries.clone());
            return;
        }
        let d = denoms[pos];
        let mut lo = if otype.is_bar() { 1 } else { 0 };
        let mut hi = budget;
        for (nb, rel) in [(lefts[pos], otype.row()), (tops[pos], otype.col())] {
            if let Some(idx) = nb {
                let (a, da) = (entries[idx], denoms[idx]);
                if upper_bounded {
                    match upper(rel, a, da, d) {
                        Some(b) => hi = hi.min(b),
                        None => return,
                    }
                } else {
                    lo = lo.max(lower(rel, a, da, d));
                }
            }
        }
        if lo > hi {
            return;
        }
        for e in lo..=hi {
            entries.push(e);
            rec(
                otype,
                denoms,
                lefts,
                tops,
                upper_bounded,
                upper,
                lower,
                budget - e,
                entries,
                out,
            );
            entries.pop();
        }
    }
    let mut raw = Vec::new();
    rec(
        otype,
        &denoms,
        &lefts,
        &tops,
        upper_bounded,
        &upper,
        &lower,
        cap,
        &mut entries,
        &mut raw,
    );
    for entries in raw {
        out.push(Tableau {
            shape: shape.clone(),
            n,
            otype,
            entries,
        });
    }
    debug_assert!(out.iter().all(Tableau::validate));
    Ok(out)
}

/// The lecture hall Schur series at the principal specialization,
/// Σ_T u^{…} v^{…} q^{Σ entries} truncated at `cap`; ceiling statistics for
/// bar types.
pub fn ls_series(shape: &SkewShape, n: u64, otype: OrderType, cap: usize) -> Result<QSeries> {
    let mut series = QSeries::zero(cap);
    for t in enumerate(shape, n, otype, cap as u64)? {
        series.add_term(t.entry_sum() as usize, &t.natural_uv_weight());
    }
    Ok(series)
}

/// Which of the two Jacobi–Trudi determinants to evaluate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum JtForm {
    /// Determinant in complete homogeneous lecture hall functions.
    H,
    /// Determinant in elementary lecture hall functions.
    E,
}

/// The Jacobi–Trudi determinant for the shape/type, at the principal
/// specialization.
///
/// Type (≥,>): det(h^{(n−j+1+μⱼ)}_{λᵢ−μⱼ−i+j}) over ℓ(λ) rows, or
/// det(e^{(n+j−1−μ'ⱼ)}_{λ'ᵢ−μ'ⱼ−i+j}) over ℓ(λ'). Type (<,≤) swaps the
/// roles: det(e^{(n−i+λᵢ)}_{λᵢ−μⱼ−i+j}) and det(h^{(n+i−λ'ᵢ)}_{λ'ᵢ−μ'ⱼ−i+j}).
/// Bar types use the same index patterns with h̄/ē.
pub fn jacobi_trudi(
    shape: &SkewShape,
    n: u64,
    otype: OrderType,
    form: JtForm,
    cap: usize,
) -> Result<QSeries> {
    if (shape.outer().len() as u64) > n {
        return Err(Error::BadParams(format!(
            "shape has {} rows but n = {n}",
            shape.outer().len()
        )));
    }
    let bar = otype.is_bar();
    let h = |sup: i64, k: i64, cap: usize| -> QSeries {
        debug_assert!(sup >= 1 || k <= 0, "h superscript {sup} with k = {k}");
        if k > 0 && sup < 1 {
            return QSeries::zero(cap);
        }
        let sup = sup.max(1) as u64;
        if bar {
            hbar_series(sup, k, cap)
        } else {
            h_series(sup, k, cap)
        }
    };
    let e = |sup: i64, k: i64, cap: usize| -> QSeries {
        if k > 0 && (sup < 0 || k > sup) {
            return QSeries::zero(cap);
        }
        let sup = sup.max(0) as u64;
        if bar {
            ebar_series(sup, k, cap)
        } else {
            e_series(sup, k, cap)
        }
    };

    let lam = shape.outer();
    let mu = shape.inner();
    let lam_c = lam.conjugate();
    let mu_c = mu.conjugate();
    let ni = n as i64;

    // (matrix size, entry builder) per (type, form)
    let row_indexed = matches!(otype, OrderType::GeGt | OrderType::GtGe) == (form == JtForm::H);
    let size = if row_indexed { lam.len() } else { lam_c.len() };
    if size == 0 {
        return Ok(QSeries::one(cap));
    }
    let mut matrix = Vec::with_capacity(size);
    for i in 1..=size as i64 {
        let mut row = Vec::with_capacity(size);
        for j in 1..=size as i64 {
            let entry = match (otype, form) {
                (OrderType::GeGt | OrderType::GtGe, JtForm::H) => {
                    let k = lam.part(i as usize) as i64 - mu.part(j as usize) as i64 - i + j;
                    h(ni - j + 1 + mu.part(j as usize) as i64, k, cap)
                }
                (OrderType::GeGt | OrderType::GtGe, JtForm::E) => {
                    let k = lam_c.part(i as usize) as i64 - mu_c.part(j as usize) as i64 - i + j;
                    e(ni + j - 1 - mu_c.part(j as usize) as i64, k, cap)
                }
                (OrderType::LtLe | OrderType::LeLt, JtForm::E) => {
                    let k = lam.part(i as usize) as i64 - mu.part(j as usize) as i64 - i + j;
                    e(ni - i + lam.part(i as usize) as i64, k, cap)
                }
                (OrderType::LtLe | OrderType::LeLt, JtForm::H) => {
                    let k = lam_c.part(i as usize) as i64 - mu_c.part(j as usize) as i64 - i + j;
                    h(ni + i - lam_c.part(i as usize) as i64, k, cap)
                }
            };
            row.push(entry);
        }
        matrix.push(row);
    }
    det(&matrix)
}

/// Exact division of dense integer polynomials; the remainder must vanish.
fn div_exact_dense(num: &[Int], den: &[Int]) -> Result<Vec<Int>> {
    let dd = den.len() - 1;
    assert!(!den[dd].is_zero());
    if num.len() < den.len() {
        if num.iter().all(|c| c.is_zero()) {
            return Ok(vec![Int::from(0)]);
        }
        return Err(Error::InexactDivision);
    }
    let mut rem = num.to_vec();
    let mut quot = vec![Int::from(0); num.len() - dd];
    for i in (0..quot.len()).rev() {
        let lead = rem[i + dd].clone();
        if lead.is_zero() {
            continue;
        }
        let (q, r) = num_integer::Integer::div_rem(&lead, &den[dd]);
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        quot[i] = q.clone();
        for (k, dc) in den.iter().enumerate() {
            rem[i + k] -= &q * dc;
        }
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(Error::InexactDivision);
    }
    Ok(quot)
}

fn dense_mul(a: &[Int], b: &[Int]) -> Vec<Int> {
    let mut out = vec![Int::from(0); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// 1 − q^m as a dense polynomial.
fn one_minus_qm(m: u64) -> Vec<Int> {
    let mut p = vec![Int::from(0); m as usize + 1];
    p[0] = Int::from(1);
    p[m as usize] = Int::from(-1);
    p
}

/// The Vandermonde-ratio factor
/// ∏_{1≤i<j≤n} (q^{λⱼ+n−j} − q^{λᵢ+n−i})/(q^{i−1} − q^{j−1})
/// as (shift, dense polynomial): each factor is q^{λⱼ+n−j−i+1}·
/// (1−q^{λᵢ−λⱼ+j−i})/(1−q^{j−i}); the polynomial part divides exactly.
fn vandermonde_ratio(lam: &Partition, n: u64) -> Result<(u64, Vec<Int>)> {
    // per-factor shifts a−(i−1) may be negative, but the total is n(λ) ≥ 0
    let mut shift = 0i64;
    let mut num: Vec<Int> = vec![Int::from(1)];
    let mut den: Vec<Int> = vec![Int::from(1)];
    for i in 1..=n {
        for j in (i + 1)..=n {
            let a = lam.part(j as usize) + n - j;
            let b = lam.part(i as usize) + n - i;
            debug_assert!(b > a);
            shift += a as i64 - (i as i64 - 1);
            num = dense_mul(&num, &one_minus_qm(b - a));
            den = dense_mul(&den, &one_minus_qm(j - i));
        }
    }
    debug_assert_eq!(shift, lam.n_stat() as i64);
    Ok((shift as u64, div_exact_dense(&num, &den)?))
}

/// The closed product formula for a straight shape, expanded at the
/// principal specialization:
///
/// * (≥,>): V(λ,n) ∏ᵢ (−uvq^{n−i+1})_{λᵢ} / (u²q^{2n−i+1})_{λᵢ};
/// * (<,≤): the same with prefactor q^{n(λ')−n(λ)}, denominator
///   (u²q^{n−i+1+λᵢ})_{n−i+λᵢ}, and extra factors
///   ∏_{i<j}(1 − u²q^{2n+λᵢ+λⱼ−i−j+1});
/// * bar types: multiply by (uvq)^{|λ|} and substitute v ↦ v⁻¹,
///
/// where V(λ,n) is the Vandermonde ratio computed by exact division.
pub fn ls_product(lam: &Partition, n: u64, otype: OrderType, cap: usize) -> Result<QSeries> {
    if lam.len() as u64 > n {
        return Err(Error::BadParams(format!(
            "partition has {} parts but n = {n}",
            lam.len()
        )));
    }
    let lam_c = lam.conjugate();
    // q-prefactor for the (<,≤)-style formulas can be negative; work at an
    // enlarged cap and divide by q at the end when needed.
    let prefactor: i64 = match otype {
        OrderType::GeGt => 0,
        OrderType::GtGe => lam.size() as i64,
        OrderType::LtLe => lam_c.n_stat() as i64 - lam.n_stat() as i64,
        OrderType::LeLt => lam.size() as i64 + lam_c.n_stat() as i64 - lam.n_stat() as i64,
    };
    let down = (-prefactor).max(0) as usize;
    let up = prefactor.max(0) as usize;
    let wcap = cap + down;

    let (vshift, vpoly) = vandermonde_ratio(lam, n)?;
    let mut series = QSeries::zero(wcap);
    for (d, c) in vpoly.iter().enumerate() {
        if !c.is_zero() && vshift as usize + d <= wcap {
            series.add_term(
                vshift as usize + d,
                &LaurentPoly::monomial(c.clone(), 0, 0),
            );
        }
    }

    let bar = otype.is_bar();
    let m_uv = LaurentPoly::monomial(Int::from(-1), 1, if bar { -1 } else { 1 });
    let u2 = LaurentPoly::monomial(Int::from(1), 2, 0);
    for i in 1..=n {
        let li = lam.part(i as usize) as u32;
        if li == 0 && matches!(otype, OrderType::GeGt | OrderType::GtGe) {
            continue;
        }
        series = &series * &qpoch_series(&m_uv, (n - i + 1) as u32, li, wcap);
        match otype {
            OrderType::GeGt | OrderType::GtGe => {
                series = &series * &qpoch_inverse_series(&u2, (2 * n - i + 1) as u32, li, wcap)?;
            }
            OrderType::LtLe | OrderType::LeLt => {
                let m = (n - i + 1) as u32 + li;
                let k = (n - i) as u32 + li;
                series = &series * &qpoch_inverse_series(&u2, m, k, wcap)?;
            }
        }
    }
    if matches!(otype, OrderType::LtLe | OrderType::LeLt) {
        for i in 1..=n {
            for j in (i + 1)..=n {
                let m = 2 * n + lam.part(i as usize) + lam.part(j as usize) - i - j + 1;
                series = &series * &qpoch_series(&u2, m as u32, 1, wcap);
            }
        }
    }
    if bar {
        let k = lam.size() as i64;
        series = series.scale(&LaurentPoly::monomial(Int::from(1), k, k));
    }
    if down > 0 {
        // divide by q^down: low-order coefficients must vanish
        let mut out = QSeries::zero(cap);
        for d in 0..down {
            if !series.coeff(d).is_zero() {
                return Err(Error::InexactDivision);
            }
        }
        for d in 0..=cap {
            out.add_term(d, series.coeff(d + down));
        }
        Ok(out)
    } else {
        Ok(series.shift_q(up))
    }
}

/// The tableau displayed in the running example: n = 5, λ = (6,6,4,3),
/// μ = (3,1), type (≥,>), floor weight u³v³ and ceiling weight u¹³v¹¹.
pub fn example_tableau() -> Tableau {
    let shape = SkewShape::new(
        Partition::new(vec![6, 6, 4, 3]).unwrap(),
        Partition::new(vec![3, 1]).unwrap(),
    )
    .unwrap();
    Tableau::new(
        shape,
        5,
        OrderType::GeGt,
        vec![9, 4, 3, 5, 6, 4, 3, 1, 2, 2, 1, 0, 1, 0, 0],
    )
    .expect("the example tableau is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Rat;

    fn shape(outer: &[u64], inner: &[u64]) -> SkewShape {
        SkewShape::new(
            Partition::new(outer.to_vec()).unwrap(),
            Partition::new(inner.to_vec()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn example_tableau_validates_and_weighs() {
        let t = example_tableau();
        assert!(t.validate());
        assert_eq!(t.entry_sum(), 41);
        assert_eq!(t.uv_weight(false), LaurentPoly::monomial(Int::from(1), 3, 3));
        assert_eq!(
            t.uv_weight(true),
            LaurentPoly::monomial(Int::from(1), 13, 11)
        );
    }

    #[test]
    fn example_tableau_perturbation_invalid() {
        let t = example_tableau();
        // lowering the entry in row 1, column 5 from 4 to 2 breaks the row
        // inequality against column 6 (2/9 ≥ 3/10 fails)
        let mut entries = t.entries().to_vec();
        entries[1] = 2;
        assert!(Tableau::new(t.shape().clone(), 5, OrderType::GeGt, entries).is_err());
    }

    #[test]
    fn empty_shape_is_valid_and_unit() {
        let s = shape(&[], &[]);
        let t = Tableau::new(s.clone(), 3, OrderType::GeGt, vec![]).unwrap();
        assert!(t.validate());
        assert_eq!(ls_series(&s, 3, OrderType::GeGt, 8).unwrap(), QSeries::one(8));
    }

    #[test]
    fn single_row_is_h_series() {
        let cap = 10;
        for n in 1..=4u64 {
            for k in 1..=3usize {
                let s = shape(&[k as u64], &[]);
                let ls = ls_series(&s, n, OrderType::GeGt, cap).unwrap();
                assert_eq!(ls, h_series(n, k as i64, cap), "(n,k)=({n},{k})");
            }
        }
    }

    #[test]
    fn single_column_is_e_series() {
        let cap = 10;
        for n in 1..=4u64 {
            for k in 1..=3u64 {
                if k > n {
                    continue;
                }
                let s = shape(&vec![1; k as usize], &[]);
                let ls = ls_series(&s, n, OrderType::GeGt, cap).unwrap();
                assert_eq!(ls, e_series(n, k as i64, cap), "(n,k)=({n},{k})");
            }
        }
    }

    #[test]
    fn count_at_cap_zero() {
        // shape (1), n = 2, cap 0: only the all-zero filling
        let s = shape(&[1], &[]);
        assert_eq!(enumerate(&s, 2, OrderType::GeGt, 0).unwrap().len(), 1);
    }

    #[test]
    fn jacobi_trudi_both_forms_match_series() {
        let cap = 9;
        let cases = [
            (vec![2u64, 1], vec![], 3u64),
            (vec![2, 2], vec![1], 3),
            (vec![3, 1], vec![1], 3),
            (vec![2, 1, 1], vec![1], 3),
            (vec![1, 1], vec![], 2),
        ];
        for (outer, inner, n) in cases {
            let s = shape(&outer, &inner);
            for otype in [
                OrderType::GeGt,
                OrderType::LtLe,
                OrderType::GtGe,
                OrderType::LeLt,
            ] {
                let ls = ls_series(&s, n, otype, cap).unwrap();
                for form in [JtForm::H, JtForm::E] {
                    let jt = jacobi_trudi(&s, n, otype, form, cap).unwrap();
                    assert_eq!(
                        ls,
                        jt,
                        "shape {outer:?}/{inner:?} n={n} type {otype:?} form {form:?}, \
                         first mismatch at q^{:?}",
                        ls.first_mismatch(&jt)
                    );
                }
            }
        }
    }

    #[test]
    fn jacobi_trudi_single_cell_reduces_to_h() {
        let s = shape(&[2], &[]);
        let jt = jacobi_trudi(&s, 3, OrderType::GeGt, JtForm::H, 10).unwrap();
        assert_eq!(jt, h_series(3, 2, 10));
    }

    #[test]
    fn ls_product_matches_series_all_types() {
        let cap = 9;
        for n in 1..=3u64 {
            for lam in Partition::enumerate_up_to(4, n as usize) {
                for otype in [
                    OrderType::GeGt,
                    OrderType::LtLe,
                    OrderType::GtGe,
                    OrderType::LeLt,
                ] {
                    let s = SkewShape::new(lam.clone(), Partition::new(vec![]).unwrap()).unwrap();
                    let ls = ls_series(&s, n, otype, cap).unwrap();
                    let prod = ls_product(&lam, n, otype, cap).unwrap();
                    assert_eq!(
                        ls,
                        prod,
                        "λ={lam} n={n} type {otype:?}, first mismatch at q^{:?}",
                        ls.first_mismatch(&prod)
                    );
                }
            }
        }
    }

    #[test]
    fn ls_product_empty_partition() {
        let lam = Partition::new(vec![]).unwrap();
        for otype in [
            OrderType::GeGt,
            OrderType::LtLe,
            OrderType::GtGe,
            OrderType::LeLt,
        ] {
            assert_eq!(ls_product(&lam, 3, otype, 8).unwrap(), QSeries::one(8));
        }
    }

    #[test]
    fn ls_series_uv0_is_principal_schur() {
        // at u = v = 0, type (≥,>) on a straight shape gives
        // s_λ(1, q, …, q^{n−1}); for λ with one row this is the Gaussian
        // binomial [n+k−1, k], checked against complete enumeration of
        // bounded reverse SSYT below in the generic case
        let cap = 10;
        let zero = Rat::from_integer(0.into());
        let one = Rat::from_integer(1.into());
        for n in 1..=4u64 {
            for lam in Partition::enumerate_up_to(4, n as usize) {
                let s = SkewShape::new(lam.clone(), Partition::new(vec![]).unwrap()).unwrap();
                let ls = ls_series(&s, n, OrderType::GeGt, cap).unwrap();
                // Schur principal specialization by direct reverse-SSYT
                // enumeration with entries < n
                let mut schur = QSeries::zero(cap);
                for t in enumerate(&s, n, OrderType::GeGt, cap as u64).unwrap() {
                    if t.entries().iter().all(|&e| e < n) {
                        schur.add_term(t.entry_sum() as usize, &LaurentPoly::one());
                    }
                }
                // evaluate u = v = 0 by dropping terms with positive u-exp
                let q = Rat::new(1.into(), 7.into());
                let lhs = ls.eval(&q, &zero, &zero).unwrap();
                let rhs = schur.eval(&q, &one, &one).unwrap();
                assert_eq!(lhs, rhs, "λ={lam} n={n}");
            }
        }
    }

    #[test]
    fn plus_bijection_on_small_shape() {
        let s = shape(&[2, 1], &[]);
        let n = 3;
        let floor_set = enumerate(&s, n, OrderType::GeGt, 8).unwrap();
        let bar_set = enumerate(&s, n, OrderType::GtGe, 8 + 3).unwrap();
        let images: Vec<_> = floor_set.iter().map(|t| t.plus().unwrap()).collect();
        assert_eq!(images.len(), bar_set.len());
        for t in &bar_set {
            assert!(images.contains(t));
        }
        for (t, p) in floor_set.iter().zip(&images) {
            assert_eq!(p.minus().unwrap(), *t);
            assert_eq!(p.entry_sum(), t.entry_sum() + 3);
            // ceiling weight of T⁺ = floor weight of T with u·v per cell,
            // v-parity flipped
            let fw = t.uv_weight(false);
            let cw = p.uv_weight(true);
            let cells = 3i64;
            assert_eq!(
                cw,
                &fw.invert_v() * &LaurentPoly::monomial(Int::from(1), cells, cells)
            );
        }
    }

    #[test]
    fn plus_on_example_tableau() {
        let t = example_tableau();
        let p = t.plus().unwrap();
        assert_eq!(p.order_type(), OrderType::GtGe);
        assert_eq!(p.entry_sum(), 41 + 15);
        assert_eq!(
            p.uv_weight(true),
            LaurentPoly::monomial(Int::from(1), 3 + 15, 15 - 3)
        );
    }

    #[test]
    fn stability_in_n() {
        // type (≥,>) coefficients of q^d stabilize once every entry is
        // strictly below every denominator; the shape has two rows, so the
        // smallest denominator is n−1 and entry sums ≤ 6 need n ≥ 9
        let s = shape(&[2, 1], &[1]);
        let cap = 6;
        let series: Vec<QSeries> = (9..=12)
            .map(|n| ls_series(&s, n, OrderType::GeGt, cap).unwrap())
            .collect();
        for w in series.windows(2) {
            assert_eq!(w[0], w[1]);
        }
    }
}
