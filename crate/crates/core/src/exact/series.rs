use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{ExactError, Field};

/// Direction of a formal expansion: `Plus` in non-negative powers of `u`,
/// `Minus` in non-positive powers.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `+1` or `-1`.
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Truncated formal power series in `u` (sign `Plus`) or in `u⁻¹` (sign
/// `Minus`).
///
/// `coeffs[k]` is the coefficient of `u^{±k}` for `k = 0..=order`. Everything
/// beyond `order` is unknown, not zero.
#[derive(Clone, PartialEq, Debug)]
pub struct USeries<F> {
    sign: Sign,
    coeffs: Vec<F>,
}

impl<F: Field> USeries<F> {
    pub fn zero(sign: Sign, order: usize) -> Self {
        USeries { sign, coeffs: vec![F::zero(); order + 1] }
    }

    pub fn one(sign: Sign, order: usize) -> Self {
        let mut s = Self::zero(sign, order);
        s.coeffs[0] = F::one();
        s
    }

    /// Build from explicit coefficients; `coeffs[k]` multiplies `u^{±k}`.
    pub fn from_coeffs(sign: Sign, coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least its constant term");
        USeries { sign, coeffs }
    }

    /// Expansion of `num(u) / den(u)`, where `num[i]` and `den[i]` are the
    /// coefficients of `u^i`.
    ///
    /// For `Plus` the constant term of `den` must be nonzero; for `Minus` the
    /// degree of `num` may not exceed the degree of `den`. Otherwise the
    /// expansion does not exist in the requested direction.
    pub fn from_rational(num: &[F], den: &[F], sign: Sign, order: usize) -> Result<Self, ExactError> {
        let trim = |p: &[F]| -> Vec<F> {
            let mut v = p.to_vec();
            while v.last().is_some_and(|c| c.is_zero()) {
                v.pop();
            }
            v
        };
        let num = trim(num);
        let den = trim(den);
        if den.is_empty() {
            return Err(ExactError::ZeroDenominator);
        }
        if num.is_empty() {
            return Ok(Self::zero(sign, order));
        }
        let (n, d, shift) = match sign {
            Sign::Plus => (num, den, 0),
            Sign::Minus => {
                // substitute v = 1/u and multiply through by v^deg(den)
                let dn = num.len() - 1;
                let dd = den.len() - 1;
                if dn > dd {
                    return Err(ExactError::NotExpandable);
                }
                let n: Vec<F> = num.into_iter().rev().collect();
                let d: Vec<F> = den.into_iter().rev().collect();
                (n, d, dd - dn)
            }
        };
        if d[0].is_zero() {
            return Err(ExactError::NotExpandable);
        }
        let d0_inv = d[0].inv();
        let mut out = vec![F::zero(); order + 1];
        for k in 0..=order {
            if k < shift {
                continue;
            }
            let j = k - shift;
            let mut acc = n.get(j).cloned().unwrap_or_else(F::zero);
            for i in 1..d.len().min(k + 1) {
                if !d[i].is_zero() && !out[k - i].is_zero() {
                    acc = acc - d[i].clone() * out[k - i].clone();
                }
            }
            out[k] = acc * d0_inv.clone();
        }
        Ok(USeries { sign, coeffs: out })
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Coefficient of `u^s`. Exponents on the wrong side of zero give zero;
    /// exponents past the truncation order give `None`.
    pub fn mode(&self, s: i64) -> Option<F> {
        let k = s * self.sign.as_i64();
        if k < 0 {
            return Some(F::zero());
        }
        self.coeffs.get(k as usize).cloned()
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        USeries { sign: self.sign, coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn scale(&self, c: &F) -> Self {
        USeries { sign: self.sign, coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect() }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, ExactError> {
        if self.sign != rhs.sign {
            return Err(ExactError::SignMismatch);
        }
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order).map(|k| self.coeffs[k].clone() + rhs.coeffs[k].clone()).collect();
        Ok(USeries { sign: self.sign, coeffs })
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, ExactError> {
        if self.sign != rhs.sign {
            return Err(ExactError::SignMismatch);
        }
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![F::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(USeries { sign: self.sign, coeffs })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.sign, self.order());
        for _ in 0..e {
            acc = acc.try_mul(self).expect("same sign");
        }
        acc
    }
}

impl<F: Field> fmt::Display for USeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let e = k as i64 * self.sign.as_i64();
            if e == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c})u^{e}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(u^{})", (self.order() as i64 + 1) * self.sign.as_i64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rational, Rational};
    use alloc::vec::Vec;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn r(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rational(x, 1)).collect()
    }

    #[test]
    fn geometric_series_both_directions() {
        // 1 / (1 - 2u) = sum 2^k u^k
        let s = USeries::from_rational(&r(&[1]), &r(&[1, -2]), Sign::Plus, 4).unwrap();
        assert_eq!(s.coeffs(), &r(&[1, 2, 4, 8, 16])[..]);
        // 1 / (1 - 2u) = -(1/2) u^-1 - (1/4) u^-2 - ...
        let s = USeries::from_rational(&r(&[1]), &r(&[1, -2]), Sign::Minus, 3).unwrap();
        assert_eq!(s.coeffs(), &[Rational::zero(), rational(-1, 2), rational(-1, 4), rational(-1, 8)][..]);
        assert_eq!(s.mode(-2), Some(rational(-1, 4)));
        assert_eq!(s.mode(1), Some(Rational::zero()));
        assert_eq!(s.mode(-4), None);
    }

    #[test]
    fn expansion_obstructions() {
        assert_eq!(
            USeries::from_rational(&r(&[1]), &r(&[0, 1]), Sign::Plus, 2),
            Err(ExactError::NotExpandable)
        );
        assert_eq!(
            USeries::from_rational(&r(&[0, 0, 1]), &r(&[1, 1]), Sign::Minus, 2),
            Err(ExactError::NotExpandable)
        );
        let a = USeries::<Rational>::one(Sign::Plus, 2);
        let b = USeries::<Rational>::one(Sign::Minus, 2);
        assert_eq!(a.try_mul(&b), Err(ExactError::SignMismatch));
    }

    fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = alloc::vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    proptest! {
        // multiplying the expansion back by the denominator recovers the numerator
        #[test]
        fn expansion_inverts_multiplication(
            num in proptest::collection::vec(-5i64..=5, 1..4),
            den_tail in proptest::collection::vec(-5i64..=5, 0..3),
            d0 in prop_oneof![-3i64..=-1, 1i64..=3],
        ) {
            let mut den = alloc::vec![d0];
            den.extend(den_tail);
            let order = 6;
            let s = USeries::from_rational(&r(&num), &r(&den), Sign::Plus, order).unwrap();
            let prod = poly_mul(s.coeffs(), &r(&den));
            for k in 0..=order {
                let expect = num.get(k).map(|&x| rational(x, 1)).unwrap_or_else(Rational::zero);
                prop_assert_eq!(&prod[k], &expect);
            }
        }

        // the Minus expansion of f(u) is the Plus expansion of f(1/v)
        #[test]
        fn minus_is_plus_in_inverse_variable(
            num in proptest::collection::vec(-5i64..=5, 1..3),
            den_head in proptest::collection::vec(-5i64..=5, 2..3),
            lead in prop_oneof![-3i64..=-1, 1i64..=3],
        ) {
            let mut den = den_head;
            den.push(lead);
            let order = 5;
            let minus = USeries::from_rational(&r(&num), &r(&den), Sign::Minus, order).unwrap();
            // f(1/v) = v^{dd-dn} rev(num)(v) / rev(den)(v)
            let dd = den.len() - 1;
            let mut rn: Vec<i64> = alloc::vec![0; dd + 1 - num.len()];
            rn.extend(num.iter().rev());
            let rd: Vec<i64> = den.iter().rev().copied().collect();
            let plus = USeries::from_rational(&r(&rn), &r(&rd), Sign::Plus, order).unwrap();
            prop_assert_eq!(minus.coeffs(), plus.coeffs());
        }
    }
}
