//! Integer partitions, skew shapes, and their statistics.

use crate::error::{Error, Result};
use std::fmt;

/// A partition: weakly decreasing positive parts, stored without trailing
/// zeros. Indexing beyond the length yields 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadPartition(format!("{parts:?} is not weakly decreasing")));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Parse comma-separated parts; empty string or "0" is the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<u64>().map_err(|_| Error::BadPartition(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// λ_i with the convention λ_i = 0 for i > ℓ(λ). 1-based.
    pub fn part(&self, i: usize) -> u64 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// |λ| = Σ λ_i
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Column lengths of the diagram; an involution.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(1) as usize;
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j as u64).count() as u64)
            .collect();
        Partition { parts }
    }

    /// n(λ) = Σ (i-1) λ_i
    pub fn n_stat(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p)
            .sum()
    }

    /// Cell-wise containment μ ⊆ λ.
    pub fn contains(&self, mu: &Partition) -> bool {
        (1..=mu.len()).all(|i| mu.part(i) <= self.part(i))
    }

    /// All partitions μ ⊆ self.
    pub fn sub_partitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current: Vec<u64> = Vec::new();
        fn rec(lam: &Partition, row: usize, current: &mut Vec<u64>, out: &mut Vec<Partition>) {
            if row > lam.len() {
                out.push(Partition::new(current.clone()).unwrap());
                return;
            }
            let upper = lam.part(row).min(if row == 1 { u64::MAX } else { current[row - 2] });
            for p in 0..=upper {
                current.push(p);
                rec(lam, row + 1, current, out);
                current.pop();
            }
        }
        rec(self, 1, &mut current, &mut out);
        out.sort();
        out.dedup();
        out
    }

    /// All partitions of size ≤ cap with at most max_len parts.
    pub fn enumerate_up_to(cap: u64, max_len: usize) -> Vec<Partition> {
        let mut out = vec![Partition::empty()];
        fn rec(budget: u64, max_part: u64, rows: usize, current: &mut Vec<u64>, out: &mut Vec<Partition>) {
            if rows == 0 {
                return;
            }
            for p in 1..=budget.min(max_part) {
                current.push(p);
                out.push(Partition::new(current.clone()).unwrap());
                rec(budget - p, p, rows - 1, current, out);
                current.pop();
            }
        }
        let mut current = Vec::new();
        rec(cap, cap, max_len, &mut current, &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The content c(i,j) = j - i of a cell (1-based row and column).
pub fn content(i: usize, j: usize) -> i64 {
    j as i64 - i as i64
}

/// A skew shape λ/μ with μ ⊆ λ. Cells are {(i,j) : μ_i < j ≤ λ_i}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                inner: inner.to_string(),
                outer: outer.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn num_cells(&self) -> u64 {
        self.outer.size() - self.inner.size()
    }

    /// Cells in row-major order, 1-based (i, j).
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.outer.len() {
            for j in (self.inner.part(i) + 1)..=self.outer.part(i) {
                out.push((i, j as usize));
            }
        }
        out
    }

    /// The conjugate skew shape λ'/μ'.
    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[6, 6, 4, 3]).conjugate(), p(&[4, 4, 4, 3, 2, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[1, 1, 1]).conjugate(), p(&[3]));
    }

    #[test]
    fn conjugate_involutive_exhaustive() {
        for lam in Partition::enumerate_up_to(12, 12) {
            assert_eq!(lam.conjugate().conjugate(), lam);
        }
    }

    #[test]
    fn n_stat_examples() {
        assert_eq!(p(&[2, 1]).n_stat(), 1);
        assert_eq!(Partition::empty().n_stat(), 0);
        assert_eq!(p(&[3, 3, 2]).n_stat(), 7);
    }

    #[test]
    fn n_stat_conjugate_identity() {
        // n(λ') = Σ C(λ_i, 2), the classical identity
        for lam in Partition::enumerate_up_to(10, 10) {
            let binom_sum: u64 = lam.parts().iter().map(|&p| p * (p - 1) / 2).sum();
            assert_eq!(lam.conjugate().n_stat(), binom_sum);
        }
    }

    #[test]
    fn content_examples() {
        assert_eq!(content(1, 1), 0);
        assert_eq!(content(2, 6), 4);
        assert_eq!(content(4, 1), -3);
    }

    #[test]
    fn contains_examples() {
        assert!(p(&[6, 6, 4, 3]).contains(&p(&[3, 1])));
        assert!(Partition::empty().contains(&Partition::empty()));
        assert!(!p(&[2, 2]).contains(&p(&[3])));
    }

    #[test]
    fn contains_is_partial_order() {
        let all = Partition::enumerate_up_to(8, 8);
        for a in &all {
            assert!(a.contains(a));
        }
        for a in &all {
            for b in &all {
                if a.contains(b) && b.contains(a) {
                    assert_eq!(a, b);
                }
            }
        }
        // transitivity on a subsample (cubic check on the full set is slow)
        let small = Partition::enumerate_up_to(5, 5);
        for a in &small {
            for b in &small {
                if !a.contains(b) {
                    continue;
                }
                for c in &small {
                    if b.contains(c) {
                        assert!(a.contains(c));
                    }
                }
            }
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!(Partition::parse("6,6,4,3").unwrap(), p(&[6, 6, 4, 3]));
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert_eq!(Partition::parse("0").unwrap(), Partition::empty());
        assert!(Partition::parse("1,3").is_err());
    }

    #[test]
    fn skew_cells_row_major() {
        let s = SkewShape::new(p(&[3, 2]), p(&[1])).unwrap();
        assert_eq!(s.cells(), vec![(1, 2), (1, 3), (2, 1), (2, 2)]);
        assert_eq!(s.num_cells(), 4);
    }

    #[test]
    fn skew_containment_enforced() {
        assert!(SkewShape::new(p(&[2]), p(&[3])).is_err());
    }

    #[test]
    fn sub_partitions_of_21() {
        let subs = p(&[2, 1]).sub_partitions();
        let expect: Vec<Partition> = [vec![], vec![1], vec![1, 1], vec![2], vec![2, 1]]
            .into_iter()
            .map(|v| Partition::new(v).unwrap())
            .collect();
        let mut expect = expect;
        expect.sort();
        assert_eq!(subs, expect);
    }
}
