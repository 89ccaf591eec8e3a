use alloc::vec::Vec;
use core::fmt;
use core::hash::{Hash, Hasher};

use super::CombinError;

/// A subset of `{1, ..., n}` stored as a bitmask; element `i` is bit `i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Subset {
    n: usize,
    mask: u64,
}

impl Subset {
    pub fn new(n: usize, elems: &[usize]) -> Result<Self, CombinError> {
        if n > 64 {
            return Err(CombinError::AmbientTooLarge(n));
        }
        let mut mask = 0u64;
        for &e in elems {
            if e == 0 || e > n {
                return Err(CombinError::ElementOutOfRange { n, elem: e });
            }
            mask |= 1 << (e - 1);
        }
        Ok(Subset { n, mask })
    }

    /// Panics if bits above `n` are set.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64);
        assert!(n == 64 || mask >> n == 0, "mask {mask:#b} has bits beyond {n}");
        Subset { n, mask }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_mask(n, 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i <= self.n && self.mask & (1 << (i - 1)) != 0
    }

    /// Elements in increasing order.
    pub fn elements(&self) -> Vec<usize> {
        (1..=self.n).filter(|&i| self.contains(i)).collect()
    }

    pub fn complement(&self) -> Self {
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        Subset { n: self.n, mask: full & !self.mask }
    }

    pub fn with(&self, i: usize) -> Self {
        assert!(i >= 1 && i <= self.n);
        Subset { n: self.n, mask: self.mask | 1 << (i - 1) }
    }

    pub fn without(&self, i: usize) -> Self {
        assert!(i >= 1 && i <= self.n);
        Subset { n: self.n, mask: self.mask & !(1 << (i - 1)) }
    }

    /// All subsets of `{1..n}` of size `m`, in increasing mask order.
    pub fn all_of_size(n: usize, m: usize) -> Vec<Subset> {
        assert!(n < 64, "enumeration limited to n < 64");
        (0u64..1 << n).filter(|x| x.count_ones() as usize == m).map(|mask| Subset { n, mask }).collect()
    }

    /// The lattice path: for `j = 1..n` a step up if `j` is in the subset,
    /// otherwise a step right. Returns the visited points, origin first.
    pub fn lattice_path(&self) -> Vec<(usize, usize)> {
        let mut p = (0, 0);
        let mut out = alloc::vec![p];
        for j in 1..=self.n {
            if self.contains(j) {
                p.1 += 1;
            } else {
                p.0 += 1;
            }
            out.push(p);
        }
        out
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.elements().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Weakly decreasing sequence of non-negative integers. Trailing zeros are
/// kept (the number of parts matters for evaluation in a fixed number of
/// variables) but ignored by equality and hashing.
#[derive(Clone, Debug, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Panics if `parts` is not weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts {parts:?} are not weakly decreasing");
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of stored parts, zeros included.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based `i`; zero past the stored parts.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    fn nonzero(&self) -> &[usize] {
        let k = self.parts.iter().position(|&p| p == 0).unwrap_or(self.parts.len());
        &self.parts[..k]
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        Partition { parts: (1..=first).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect() }
    }
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.nonzero() == other.nonzero()
    }
}

impl Eq for Partition {}

impl Hash for Partition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.nonzero().hash(state);
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// The partition with `|A|` parts `λ_{m+1-i} = A_i - i`.
pub fn lambda_of(a: &Subset) -> Partition {
    let mut parts: Vec<usize> = a.elements().iter().enumerate().map(|(i, &e)| e - (i + 1)).collect();
    parts.reverse();
    Partition { parts }
}

/// Inverse of [`lambda_of`]: the `m`-subset of `{1..n}` with `A_i = λ_{m+1-i} + i`,
/// where `m` is the number of stored parts.
pub fn subset_of(lambda: &Partition, n: usize) -> Result<Subset, CombinError> {
    let m = lambda.len();
    if m > n || lambda.part(1) > n - m {
        return Err(CombinError::DoesNotFit { parts: lambda.parts().to_vec(), rows: m, cols: n.saturating_sub(m) });
    }
    let elems: Vec<usize> = (1..=m).map(|i| lambda.part(m + 1 - i) + i).collect();
    Subset::new(n, &elems)
}

/// `(-1)^{|λ^B|}`, the sign of the shuffle putting `B` before its complement.
pub fn sign_w(b: &Subset) -> i64 {
    if lambda_of(b).size() % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn s(n: usize, e: &[usize]) -> Subset {
        Subset::new(n, e).unwrap()
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_of(&s(9, &[1, 3, 6, 7])).parts(), &[3, 3, 1, 0]);
        assert_eq!(lambda_of(&s(9, &[2, 4, 5, 8, 9])).parts(), &[4, 4, 2, 2, 1]);
        assert!(lambda_of(&s(9, &[])).is_empty());
    }

    #[test]
    fn lambda_sizes_of_complements_add_up() {
        for n in 0..=8 {
            for m in 0..=n {
                for a in Subset::all_of_size(n, m) {
                    let total = lambda_of(&a).size() + lambda_of(&a.complement()).size();
                    assert_eq!(total, m * (n - m));
                    assert_eq!(subset_of(&lambda_of(&a), n).unwrap(), a);
                }
            }
        }
    }

    #[test]
    fn partition_equality_ignores_trailing_zeros() {
        assert_eq!(Partition::new(vec![2, 1, 0, 0]), Partition::new(vec![2, 1]));
        assert_ne!(Partition::new(vec![2, 1]), Partition::new(vec![2, 2]));
        assert_eq!(Partition::new(vec![3, 1, 1]).conjugate().parts(), &[3, 1, 1]);
        assert_eq!(Partition::new(vec![4, 2]).conjugate().parts(), &[2, 2, 1, 1]);
    }

    // sign of the permutation i -> (B_1..B_k, comp B_1..) by inversion count
    fn brute_sign(b: &Subset) -> i64 {
        let mut w = b.elements();
        w.extend(b.complement().elements());
        let inv = (0..w.len()).flat_map(|i| (i + 1..w.len()).map(move |j| (i, j))).filter(|&(i, j)| w[i] > w[j]).count();
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn sign_w_is_the_shuffle_sign() {
        assert_eq!(sign_w(&s(9, &[2, 4, 5, 8, 9])), -1);
        assert_eq!(sign_w(&s(5, &[])), 1);
        assert_eq!(sign_w(&s(5, &[1, 2, 3])), 1);
        for n in 0..=8 {
            for m in 0..=n {
                for b in Subset::all_of_size(n, m) {
                    assert_eq!(sign_w(&b), brute_sign(&b), "{b}");
                    let both = sign_w(&b) * sign_w(&b.complement());
                    assert_eq!(both, if (m * (n - m)) % 2 == 0 { 1 } else { -1 });
                }
            }
        }
    }

    #[test]
    fn lattice_path_ends_at_frame_corner() {
        let a = s(9, &[1, 3, 6, 7]);
        let path = a.lattice_path();
        assert_eq!(path.len(), 10);
        assert_eq!(path[1], (0, 1));
        assert_eq!(*path.last().unwrap(), (5, 4));
    }
}
