use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul};

/// Polynomial in `t` with non-negative integer coefficients; `coeffs[k]`
/// multiplies `t^k`. Trailing zeros are trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct TPoly {
    coeffs: Vec<u64>,
}

impl TPoly {
    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    pub fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        TPoly { coeffs: vec![1] }
    }

    /// `c · t^k`
    pub fn monomial(c: u64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `t = 1`, the sum of the coefficients.
    pub fn eval_one(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// Substitute `t ↦ t^k`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k > 0);
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; (self.coeffs.len() - 1) * k + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c;
        }
        TPoly { coeffs }
    }

    /// Coefficients of the even powers `t^0, t^2, t^4, ...`.
    pub fn even_coeffs(&self) -> Vec<u64> {
        self.coeffs.iter().step_by(2).copied().collect()
    }

    pub fn has_only_even_powers(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(|&c| c == 0)
    }

    /// Symmetric about the middle degree.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Coefficients weakly increase, then weakly decrease.
    pub fn is_unimodal(&self) -> bool {
        let mut falling = false;
        for w in self.coeffs.windows(2) {
            if w[1] < w[0] {
                falling = true;
            } else if falling && w[1] > w[0] {
                return false;
            }
        }
        true
    }
}

impl Add<&TPoly> for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        TPoly::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Mul<&TPoly> for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TPoly::from_coeffs(coeffs)
    }
}

impl Add for TPoly {
    type Output = TPoly;
    fn add(self, rhs: TPoly) -> TPoly {
        &self + &rhs
    }
}

impl Mul for TPoly {
    type Output = TPoly;
    fn mul(self, rhs: TPoly) -> TPoly {
        &self * &rhs
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{c}t")?,
                (_, 1) => write!(f, "t^{k}")?,
                _ => write!(f, "{c}t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_shape() {
        let a = TPoly::from_coeffs(vec![1, 1]);
        let sq = &a * &a;
        assert_eq!(sq.coeffs(), &[1, 2, 1]);
        assert!(sq.is_palindromic() && sq.is_unimodal());
        assert_eq!(sq.substitute_power(2).coeffs(), &[1, 0, 2, 0, 1]);
        assert_eq!(sq.substitute_power(2).even_coeffs(), vec![1, 2, 1]);
        assert!(sq.substitute_power(2).has_only_even_powers());
        assert_eq!(sq.eval_one(), 4);
        assert!(!TPoly::from_coeffs(vec![2, 1, 2]).is_unimodal());
        assert_eq!(sq.to_string(), "1 + 2t + t^2");
    }
}
