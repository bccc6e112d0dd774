//! Lecture hall lattice paths.
//!
//! The lecture hall lattice has vertices (i−1, j/i) and (i, j/i) for i ≥ 1,
//! j ≥ 0; an NW-path moves north and west and is determined by the heights
//! of its west steps. The strict lecture hall lattice shifts the left
//! endpoint of each diagonal edge down by 1/i², so an NE-path (north and
//! northeast steps) encodes strict ratio chains. Paths to (b, ∞) are stored
//! finitely by their west/northeast step numerators; all heights are exact
//! rationals.
//!
//! ```
//! use lhall::lhcomb::{BoundedSequence, Variant};
//! use lhall::partitions::{Partition, SkewShape};
//! use lhall::paths::{lgv_check, path_from_sequence, sequence_from_path};
//!
//! // an anti-lecture hall composition round-trips through its NW path
//! let alpha = BoundedSequence::new(Variant::AL, 8, 6, vec![5, 4, 5, 5, 3, 3]).unwrap();
//! let path = path_from_sequence(&alpha).unwrap();
//! assert_eq!(path.weight_q(), 25);
//! assert_eq!(sequence_from_path(&path).unwrap(), alpha);
//!
//! // and the LGV determinants agree with direct tableau enumeration
//! let shape = SkewShape::straight(Partition::parse("2,1").unwrap());
//! assert!(lgv_check(&shape, 3, 8).unwrap());
//! ```

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{det, Int, LaurentPoly, QSeries, Rat};
use crate::lhcomb::{e_series, h_series, BoundedSequence, Variant};
use crate::partitions::SkewShape;
use crate::tableaux::{ls_series, OrderType, Tableau};

/// Which lattice the path lives on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PathKind {
    /// North/west steps on the lecture hall lattice, from (start, 0) to
    /// (end, ∞) with start ≥ end.
    Nw,
    /// North/northeast steps on the strict lattice, from
    /// (start, −1/(start+1)²) to (end, ∞) with start ≤ end.
    Ne,
}

/// A path to (end, ∞), stored by the numerators of its non-north steps.
///
/// For an NW-path the i-th leftmost west step crosses column end+i at
/// height numerators[i−1]/(end+i). For an NE-path the i-th rightmost
/// northeast step arrives at column end+1−i at height
/// numerators[i−1]/(end+1−i).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticePath {
    kind: PathKind,
    start_col: u64,
    end_col: u64,
    numerators: Vec<u64>,
}

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

impl LatticePath {
    pub fn new(kind: PathKind, start_col: u64, end_col: u64, numerators: Vec<u64>) -> Result<Self> {
        let steps = match kind {
            PathKind::Nw => {
                if start_col < end_col {
                    return Err(Error::BadParams("NW path must move west".into()));
                }
                start_col - end_col
            }
            PathKind::Ne => {
                if start_col > end_col {
                    return Err(Error::BadParams("NE path must move east".into()));
                }
                end_col - start_col
            }
        };
        if numerators.len() as u64 != steps {
            return Err(Error::BadParams(format!(
                "path spans {steps} columns but has {} step heights",
                numerators.len()
            )));
        }
        let p = LatticePath {
            kind,
            start_col,
            end_col,
            numerators,
        };
        if !p.is_valid() {
            return Err(Error::InvalidChain(match kind {
                PathKind::Nw => "NW",
                PathKind::Ne => "NE",
            }));
        }
        Ok(p)
    }

    pub fn kind(&self) -> PathKind {
        self.kind
    }

    pub fn start_col(&self) -> u64 {
        self.start_col
    }

    pub fn end_col(&self) -> u64 {
        self.end_col
    }

    pub fn numerators(&self) -> &[u64] {
        &self.numerators
    }

    /// Column of the i-th stored step (1-based).
    fn step_col(&self, i: usize) -> u64 {
        match self.kind {
            PathKind::Nw => self.end_col + i as u64,
            PathKind::Ne => self.end_col + 1 - i as u64,
        }
    }

    /// A path is a monotone sequence of north and west/northeast moves;
    /// its step heights form a weak (NW) or strict (NE) ratio chain.
    fn is_valid(&self) -> bool {
        for i in 0..self.numerators.len().saturating_sub(1) {
            let (a, da) = (self.numerators[i], self.step_col(i + 1));
            let (b, db) = (self.numerators[i + 1], self.step_col(i + 2));
            let (lhs, rhs) = ((a as u128) * (db as u128), (b as u128) * (da as u128));
            match self.kind {
                PathKind::Nw if lhs < rhs => return false,
                PathKind::Ne if lhs <= rhs => return false,
                _ => {}
            }
        }
        true
    }

    /// Sum of step numerators: |α| or |λ|, the q-exponent of the weight.
    pub fn weight_q(&self) -> u64 {
        self.numerators.iter().sum()
    }

    /// u^{Σ ⌊t/col⌋} v^{#odd ⌊t/col⌋} over the non-north steps.
    pub fn uv_monomial(&self) -> LaurentPoly {
        let mut ue = 0u64;
        let mut ve = 0u64;
        for (i, &t) in self.numerators.iter().enumerate() {
            let f = t / self.step_col(i + 1);
            ue += f;
            ve += f % 2;
        }
        LaurentPoly::monomial(Int::from(1), ue as i64, ve as i64)
    }

    /// Occupied height interval in column `c`: (low, high), high = None at
    /// the infinite end. Interval endpoints are lattice vertices and the
    /// path passes through every lattice vertex between them, so two paths
    /// share a vertex iff their intervals overlap in some column.
    fn interval(&self, c: u64) -> Option<(Rat, Option<Rat>)> {
        match self.kind {
            PathKind::Nw => {
                if c > self.start_col || c < self.end_col {
                    return None;
                }
                let lo = if c == self.start_col {
                    Rat::zero()
                } else {
                    let i = (c - self.end_col) as usize; // step c+1 → c
                    rat(self.numerators[i] as i64, (c + 1) as i64)
                };
                let hi = if c == self.end_col {
                    None
                } else {
                    let i = (c - self.end_col) as usize; // step c → c−1
                    Some(rat(self.numerators[i - 1] as i64, c as i64))
                };
                Some((lo, hi))
            }
            PathKind::Ne => {
                if c < self.start_col || c > self.end_col {
                    return None;
                }
                let lo = if c == self.start_col {
                    -Rat::new(Int::from(1), Int::from(((c + 1) * (c + 1)) as i64))
                } else {
                    let i = (self.end_col + 1 - c) as usize; // arrival into c
                    rat(self.numerators[i - 1] as i64, c as i64)
                };
                let hi = if c == self.end_col {
                    None
                } else {
                    // departure toward c+1, offset one square below
                    let i = (self.end_col - c) as usize;
                    let d = (c + 1) as i64;
                    Some(rat(self.numerators[i - 1] as i64, d) - Rat::new(Int::one(), Int::from(d * d)))
                };
                Some((lo, hi))
            }
        }
    }
}

/// The path encoding of a truncated lecture hall sequence:
/// AL_{n,k} ↔ NW((n,0),(n−k,∞)) and L_{n,k} ↔ NE((n−k,·),(n,∞)).
pub fn path_from_sequence(s: &BoundedSequence) -> Result<LatticePath> {
    match s.variant() {
        Variant::AL => LatticePath::new(PathKind::Nw, s.n(), s.n() - s.k(), s.entries().to_vec()),
        Variant::L => LatticePath::new(PathKind::Ne, s.n() - s.k(), s.n(), s.entries().to_vec()),
        v => Err(Error::BadParams(format!(
            "paths encode AL or L sequences, got {}",
            v.name()
        ))),
    }
}

/// Inverse of [`path_from_sequence`].
pub fn sequence_from_path(p: &LatticePath) -> Result<BoundedSequence> {
    match p.kind {
        PathKind::Nw => BoundedSequence::new(
            Variant::AL,
            p.start_col,
            p.start_col - p.end_col,
            p.numerators.clone(),
        ),
        PathKind::Ne => BoundedSequence::new(
            Variant::L,
            p.end_col,
            p.end_col - p.start_col,
            p.numerators.clone(),
        ),
    }
}

/// Whether two paths on the same lattice share no vertex.
pub fn vertex_disjoint(a: &LatticePath, b: &LatticePath) -> bool {
    if a.kind != b.kind {
        return true;
    }
    let (lo_c, hi_c) = match a.kind {
        PathKind::Nw => (
            a.end_col.max(b.end_col),
            a.start_col.min(b.start_col),
        ),
        PathKind::Ne => (
            a.start_col.max(b.start_col),
            a.end_col.min(b.end_col),
        ),
    };
    for c in lo_c..=hi_c.max(lo_c) {
        if c > hi_c {
            break;
        }
        if let (Some((lo1, hi1)), Some((lo2, hi2))) = (a.interval(c), b.interval(c)) {
            let below1 = hi1.map_or(true, |h| lo2 <= h);
            let below2 = hi2.map_or(true, |h| lo1 <= h);
            if below1 && below2 {
                return false;
            }
        }
    }
    true
}

/// Whether all paths in the family are pairwise vertex-disjoint.
pub fn family_disjoint(paths: &[LatticePath]) -> bool {
    for i in 0..paths.len() {
        for j in (i + 1)..paths.len() {
            if !vertex_disjoint(&paths[i], &paths[j]) {
                return false;
            }
        }
    }
    true
}

/// Row-by-row encoding of a type (≥,>) tableau as n non-intersecting
/// NW-paths, row i running from (λᵢ+n−i, 0) to (μᵢ+n−i, ∞).
pub fn tableau_to_paths_nw(t: &Tableau) -> Result<Vec<LatticePath>> {
    if t.order_type() != OrderType::GeGt {
        return Err(Error::TypeMismatch {
            expected: "ge-gt".into(),
            got: t.order_type().name().into(),
        });
    }
    let n = t.n();
    let lam = t.shape().outer();
    let mu = t.shape().inner();
    let cells = t.shape().cells();
    let mut out = Vec::with_capacity(n as usize);
    for i in 1..=n {
        let li = lam.part(i as usize);
        let mi = mu.part(i as usize);
        let row: Vec<u64> = cells
            .iter()
            .zip(t.entries())
            .filter(|(&(r, _), _)| r as u64 == i)
            .map(|(_, &e)| e)
            .collect();
        debug_assert_eq!(row.len() as u64, li - mi);
        out.push(LatticePath::new(PathKind::Nw, li + n - i, mi + n - i, row)?);
    }
    debug_assert!(family_disjoint(&out));
    Ok(out)
}

/// Column-by-column encoding of a type (≥,>) tableau as ℓ(λ') = λ₁
/// non-intersecting NE-paths on the strict lattice, column i running from
/// (n−λ'ᵢ+i−1, ·) to (n−μ'ᵢ+i−1, ∞).
pub fn tableau_to_paths_ne(t: &Tableau) -> Result<Vec<LatticePath>> {
    if t.order_type() != OrderType::GeGt {
        return Err(Error::TypeMismatch {
            expected: "ge-gt".into(),
            got: t.order_type().name().into(),
        });
    }
    let n = t.n();
    let lam_c = t.shape().outer().conjugate();
    let mu_c = t.shape().inner().conjugate();
    let cells = t.shape().cells();
    let mut out = Vec::new();
    for i in 1..=t.shape().outer().part(1) {
        let li = lam_c.part(i as usize);
        let mi = mu_c.part(i as usize);
        // column entries top to bottom = numerators rightmost first
        let col: Vec<u64> = cells
            .iter()
            .zip(t.entries())
            .filter(|(&(_, c), _)| c as u64 == i)
            .map(|(_, &e)| e)
            .collect();
        debug_assert_eq!(col.len() as u64, li - mi);
        out.push(LatticePath::new(
            PathKind::Ne,
            n - li + i - 1,
            n - mi + i - 1,
            col,
        )?);
    }
    debug_assert!(family_disjoint(&out));
    Ok(out)
}

/// Rebuild the type (≥,>) tableau from its NW-path family; the family must
/// be non-intersecting and ordered as produced by [`tableau_to_paths_nw`].
pub fn paths_to_tableau_nw(paths: &[LatticePath], n: u64) -> Result<Tableau> {
    if paths.len() as u64 != n {
        return Err(Error::BadParams(format!(
            "expected {n} NW paths, got {}",
            paths.len()
        )));
    }
    if !family_disjoint(paths) {
        return Err(Error::Invalid("path family is not vertex-disjoint".into()));
    }
    let mut lam = Vec::new();
    let mut mu = Vec::new();
    let mut entries = Vec::new();
    for (idx, p) in paths.iter().enumerate() {
        if p.kind != PathKind::Nw {
            return Err(Error::TypeMismatch {
                expected: "NW".into(),
                got: "NE".into(),
            });
        }
        let i = idx as u64 + 1;
        let li = (p.start_col + i).checked_sub(n).ok_or(Error::Invalid(
            "path endpoints inconsistent with n".into(),
        ))?;
        let mi = (p.end_col + i).checked_sub(n).ok_or(Error::Invalid(
            "path endpoints inconsistent with n".into(),
        ))?;
        lam.push(li);
        mu.push(mi);
        entries.extend_from_slice(&p.numerators);
    }
    let shape = SkewShape::new(
        crate::partitions::Partition::new(lam)?,
        crate::partitions::Partition::new(mu)?,
    )?;
    Tableau::new(shape, n, OrderType::GeGt, entries)
}

/// Rebuild the type (≥,>) tableau from its NE-path family.
pub fn paths_to_tableau_ne(paths: &[LatticePath], n: u64) -> Result<Tableau> {
    if !family_disjoint(paths) {
        return Err(Error::Invalid("path family is not vertex-disjoint".into()));
    }
    let mut lam_c = Vec::new();
    let mut mu_c = Vec::new();
    let mut cols: Vec<Vec<u64>> = Vec::new();
    for (idx, p) in paths.iter().enumerate() {
        if p.kind != PathKind::Ne {
            return Err(Error::TypeMismatch {
                expected: "NE".into(),
                got: "NW".into(),
            });
        }
        let i = idx as u64 + 1;
        let li = (n + i - 1).checked_sub(p.start_col).ok_or(Error::Invalid(
            "path endpoints inconsistent with n".into(),
        ))?;
        let mi = (n + i - 1).checked_sub(p.end_col).ok_or(Error::Invalid(
            "path endpoints inconsistent with n".into(),
        ))?;
        lam_c.push(li);
        mu_c.push(mi);
        cols.push(p.numerators.clone());
    }
    let lam = crate::partitions::Partition::new(lam_c)?.conjugate();
    let mu = crate::partitions::Partition::new(mu_c)?.conjugate();
    let shape = SkewShape::new(lam, mu)?;
    // reassemble row-major entries from the columns
    let mut entries = Vec::with_capacity(shape.num_cells() as usize);
    for (i, j) in shape.cells() {
        let col = &cols[j - 1];
        let offset = i - 1 - shape.inner().conjugate().part(j) as usize;
        entries.push(col[offset]);
    }
    Tableau::new(shape, n, OrderType::GeGt, entries)
}

/// The Lindström–Gessel–Viennot cross-check: the tableau series equals both
/// the NW determinant det(W_{λᵢ+n−i, μⱼ+n−j}) with W_{a,b} = h^{(b+1)}_{a−b}
/// and the NE determinant det(E_{n−λ'ᵢ+i−1, n−μ'ⱼ+j−1}) with
/// E_{a,b} = e^{(b)}_{b−a}, and the direct sum over verified
/// non-intersecting families.
pub fn lgv_check(shape: &SkewShape, n: u64, cap: usize) -> Result<bool> {
    // direct sum over families obtained from the tableaux, with the
    // disjointness and weight agreement checked path-by-path
    let mut direct = QSeries::zero(cap);
    for t in crate::tableaux::enumerate(shape, n, OrderType::GeGt, cap as u64)? {
        let fam = tableau_to_paths_nw(&t)?;
        if !family_disjoint(&fam) {
            return Ok(false);
        }
        let q: u64 = fam.iter().map(LatticePath::weight_q).sum();
        let mut uv = LaurentPoly::one();
        for p in &fam {
            uv = &uv * &p.uv_monomial();
        }
        if q != t.entry_sum() || uv != t.natural_uv_weight() {
            return Ok(false);
        }
        direct.add_term(q as usize, &uv);
    }

    let lam = shape.outer();
    let mu = shape.inner();
    // NW determinant over n rows
    let w = |a: i64, b: i64| -> QSeries {
        if a < b {
            QSeries::zero(cap)
        } else {
            h_series((b + 1) as u64, a - b, cap)
        }
    };
    let size = n as usize;
    let mut rhs_w = QSeries::one(cap);
    if size > 0 {
        let m: Vec<Vec<QSeries>> = (1..=size as i64)
            .map(|i| {
                (1..=size as i64)
                    .map(|j| {
                        w(
                            lam.part(i as usize) as i64 + n as i64 - i,
                            mu.part(j as usize) as i64 + n as i64 - j,
                        )
                    })
                    .collect()
            })
            .collect();
        rhs_w = det(&m)?;
    }

    // NE determinant over ℓ(λ') rows
    let lam_c = lam.conjugate();
    let mu_c = mu.conjugate();
    let e = |a: i64, b: i64| -> QSeries {
        if b < a || b < 0 {
            QSeries::zero(cap)
        } else {
            e_series(b as u64, b - a, cap)
        }
    };
    let size_e = lam_c.len();
    let mut rhs_e = QSeries::one(cap);
    if size_e > 0 {
        let m: Vec<Vec<QSeries>> = (1..=size_e as i64)
            .map(|i| {
                (1..=size_e as i64)
                    .map(|j| {
                        e(
                            n as i64 - lam_c.part(i as usize) as i64 + i - 1,
                            n as i64 - mu_c.part(j as usize) as i64 + j - 1,
                        )
                    })
                    .collect()
            })
            .collect();
        rhs_e = det(&m)?;
    }

    let series = ls_series(shape, n, OrderType::GeGt, cap)?;
    Ok(direct == series && rhs_w == series && rhs_e == series)
}

/// Fixed-point decimal for scale·x with four fractional digits, computed in
/// integer arithmetic so output is deterministic.
fn svg_coord(x: &Rat, scale: u64) -> String {
    let scaled = x * Rat::from_integer(Int::from(scale as i64 * 10_000));
    let rounded: Int = scaled.round().to_integer();
    let neg = rounded < Int::from(0);
    let abs = if neg { -rounded } else { rounded };
    let s = abs.to_string();
    let (int_part, frac_part) = if s.len() > 4 {
        (s[..s.len() - 4].to_string(), s[s.len() - 4..].to_string())
    } else {
        ("0".to_string(), format!("{s:0>4}"))
    };
    format!("{}{}.{}", if neg { "-" } else { "" }, int_part, frac_part)
}

/// Render a family of paths as a standalone SVG document. Heights are drawn
/// exactly (times `scale`), with the infinite tail cut one unit above the
/// highest step.
pub fn svg_document(paths: &[LatticePath], scale: u64) -> String {
    let mut ymax = Rat::one();
    let mut xmax = 1u64;
    for p in paths {
        xmax = xmax.max(p.start_col).max(p.end_col);
        for (i, &t) in p.numerators.iter().enumerate() {
            let h = rat(t as i64, p.step_col(i + 1) as i64) + Rat::one();
            if h > ymax {
                ymax = h;
            }
        }
    }
    let width = svg_coord(&Rat::from_integer(Int::from((xmax + 1) as i64)), scale);
    let height = svg_coord(&(&ymax + &Rat::one()), scale);
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    ));
    // y grows downward in SVG; flip via ymax
    let flip = |y: &Rat| -> Rat { &ymax - y };
    for p in paths {
        let mut pts: Vec<(Rat, Rat)> = Vec::new();
        match p.kind {
            PathKind::Nw => {
                let mut y = Rat::zero();
                pts.push((Rat::from_integer(Int::from(p.start_col as i64)), y.clone()));
                for (i, &t) in p.numerators.iter().enumerate().rev() {
                    let c = p.step_col(i + 1);
                    let h = rat(t as i64, c as i64);
                    if h != y {
                        pts.push((Rat::from_integer(Int::from(c as i64)), h.clone()));
                    }
                    pts.push((Rat::from_integer(Int::from((c - 1) as i64)), h.clone()));
                    y = h;
                }
                pts.push((Rat::from_integer(Int::from(p.end_col as i64)), ymax.clone()));
            }
            PathKind::Ne => {
                let start = Rat::from_integer(Int::from(p.start_col as i64));
                let off = Rat::new(Int::one(), Int::from(((p.start_col + 1) * (p.start_col + 1)) as i64));
                let mut y = -off;
                pts.push((start, y.clone()));
                for (i, &t) in p.numerators.iter().enumerate().rev() {
                    let c = p.step_col(i + 1);
                    let arrive = rat(t as i64, c as i64);
                    let depart = &arrive - &Rat::new(Int::one(), Int::from((c * c) as i64));
                    if depart != y {
                        pts.push((Rat::from_integer(Int::from((c - 1) as i64)), depart));
                    }
                    pts.push((Rat::from_integer(Int::from(c as i64)), arrive.clone()));
                    y = arrive;
                }
                pts.push((Rat::from_integer(Int::from(p.end_col as i64)), ymax.clone()));
            }
        }
        let coords: Vec<String> = pts
            .iter()
            .map(|(x, y)| format!("{},{}", svg_coord(x, scale), svg_coord(&flip(y), scale)))
            .collect();
        out.push_str(&format!(
            "  <polyline fill=\"none\" stroke=\"red\" stroke-width=\"2\" points=\"{}\"/>\n",
            coords.join(" ")
        ));
    }
    out.push_str("</svg>\n");
    out
}
