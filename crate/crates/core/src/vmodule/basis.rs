use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::combin::{lambda_of, Subset};

/// The sizes `(m_1, ..., m_r)` of the per-group subsets: one l-weight space
/// of the coincident module.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sector(pub Vec<usize>);

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, m) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

/// Basis labelled by tuples of subsets `(A^(1), ..., A^(r))`, stored as one
/// mask over all `n` positions with group `s` in bits
/// `offset(s)..offset(s) + n_s`.
///
/// Ordered by sector, then by grade `Σ_s |λ^{A^(s)}|`, then by mask, so that
/// each sector is a contiguous range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    sizes: Vec<usize>,
    offsets: Vec<usize>,
    masks: Vec<u64>,
    grades: Vec<usize>,
    index: BTreeMap<u64, usize>,
    sectors: Vec<(Sector, Range<usize>)>,
}

impl Basis {
    pub fn new(sizes: &[usize]) -> Self {
        let n: usize = sizes.iter().sum();
        assert!(n < 64, "basis over {n} positions is too large");
        let mut offsets = Vec::with_capacity(sizes.len());
        let mut off = 0;
        for &s in sizes {
            offsets.push(off);
            off += s;
        }
        let parts = |mask: u64| -> Vec<Subset> {
            sizes
                .iter()
                .zip(&offsets)
                .map(|(&ns, &o)| Subset::from_mask(ns, (mask >> o) & ((1u64 << ns) - 1)))
                .collect()
        };
        let mut keyed: Vec<(Sector, usize, u64)> = (0..1u64 << n)
            .map(|mask| {
                let ps = parts(mask);
                let sector = Sector(ps.iter().map(Subset::len).collect());
                let grade = ps.iter().map(|a| lambda_of(a).size()).sum();
                (sector, grade, mask)
            })
            .collect();
        keyed.sort();
        let mut sectors: Vec<(Sector, Range<usize>)> = Vec::new();
        for (i, (sector, _, _)) in keyed.iter().enumerate() {
            match sectors.last_mut() {
                Some((s, r)) if s == sector => r.end = i + 1,
                _ => sectors.push((sector.clone(), i..i + 1)),
            }
        }
        let masks: Vec<u64> = keyed.iter().map(|k| k.2).collect();
        let grades = keyed.iter().map(|k| k.1).collect();
        let index = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        Basis { sizes: sizes.to_vec(), offsets, masks, grades, index, sectors }
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn group_sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn offset(&self, s: usize) -> usize {
        self.offsets[s]
    }

    pub fn mask(&self, i: usize) -> u64 {
        self.masks[i]
    }

    pub fn index_of(&self, mask: u64) -> Option<usize> {
        self.index.get(&mask).copied()
    }

    /// `Σ_s |λ^{A^(s)}|`
    pub fn grade(&self, i: usize) -> usize {
        self.grades[i]
    }

    /// The per-group subsets of element `i`.
    pub fn parts(&self, i: usize) -> Vec<Subset> {
        self.split(self.masks[i])
    }

    pub fn split(&self, mask: u64) -> Vec<Subset> {
        self.sizes
            .iter()
            .zip(&self.offsets)
            .map(|(&ns, &o)| Subset::from_mask(ns, (mask >> o) & ((1u64 << ns) - 1)))
            .collect()
    }

    pub fn join(&self, parts: &[Subset]) -> u64 {
        assert_eq!(parts.len(), self.sizes.len());
        parts.iter().zip(&self.offsets).map(|(a, &o)| a.mask() << o).fold(0, |x, y| x | y)
    }

    pub fn sector_of(&self, i: usize) -> Sector {
        Sector(self.parts(i).iter().map(Subset::len).collect())
    }

    /// Sectors in basis order with their index ranges.
    pub fn sectors(&self) -> &[(Sector, Range<usize>)] {
        &self.sectors
    }

    pub fn sector_range(&self, sector: &Sector) -> Option<Range<usize>> {
        self.sectors.iter().find(|(s, _)| s == sector).map(|(_, r)| r.clone())
    }

    /// Human-readable label such as `{1,2}|{}`.
    pub fn label(&self, i: usize) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        for (k, a) in self.parts(i).iter().enumerate() {
            if k > 0 {
                out.push('|');
            }
            let _ = write!(out, "{a}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_and_sectors() {
        let b = Basis::new(&[2, 1]);
        assert_eq!(b.len(), 8);
        let labels: Vec<String> = (0..b.len()).map(|i| b.label(i)).collect();
        assert_eq!(labels, ["{}|{}", "{}|{1}", "{1}|{}", "{2}|{}", "{1}|{1}", "{2}|{1}", "{1,2}|{}", "{1,2}|{1}"]);
        let sectors: Vec<(Vec<usize>, Range<usize>)> = b.sectors().iter().map(|(s, r)| (s.0.clone(), r.clone())).collect();
        assert_eq!(sectors[2], (alloc::vec![1, 0], 2..4));
        assert_eq!(b.grade(3), 1);
        for i in 0..b.len() {
            assert_eq!(b.index_of(b.mask(i)), Some(i));
            assert_eq!(b.join(&b.parts(i)), b.mask(i));
        }
    }

    #[test]
    fn grades_within_sector_are_sorted() {
        let b = Basis::new(&[3, 2]);
        for (_, r) in b.sectors() {
            assert!(r.clone().zip(r.clone().skip(1)).all(|(i, j)| b.grade(i) <= b.grade(j)));
        }
    }
}
