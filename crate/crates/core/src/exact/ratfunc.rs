use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{EpsPoly, ExactError, Field, Rational};

/// Element of `ℚ(ε)` stored as `num / den` with `gcd(num, den) = 1` and a
/// monic denominator. Every constructor and operation re-establishes this
/// normal form, so structural equality is equality of functions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EpsRational {
    num: EpsPoly,
    den: EpsPoly,
}

impl EpsRational {
    /// Reduce `num / den` to normal form.
    pub fn new(num: EpsPoly, den: EpsPoly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Self::reduce_unchecked(num, den))
    }

    fn reduce_unchecked(num: EpsPoly, den: EpsPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = EpsPoly::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            EpsRational { num, den }
        } else {
            let inv = lc.recip();
            EpsRational { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    /// Re-reduce an arbitrary representation; the identity on values already
    /// in normal form.
    pub fn reduce(&self) -> Self {
        Self::reduce_unchecked(self.num.clone(), self.den.clone())
    }

    pub fn from_poly(p: EpsPoly) -> Self {
        EpsRational { num: p, den: EpsPoly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(EpsPoly::constant(c))
    }

    /// `c · ε^k` for any integer `k`.
    pub fn eps_power(c: Rational, k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(EpsPoly::monomial(c, k as usize))
        } else if c.is_zero() {
            Self::zero()
        } else {
            EpsRational {
                num: EpsPoly::constant(c),
                den: EpsPoly::monomial(Rational::one(), k.unsigned_abs() as usize),
            }
        }
    }

    /// The element `ε`.
    pub fn eps() -> Self {
        Self::from_poly(EpsPoly::eps())
    }

    pub fn num(&self) -> &EpsPoly {
        &self.num
    }

    pub fn den(&self) -> &EpsPoly {
        &self.den
    }

    /// Value of the function at `ε = 0`.
    pub fn eval_at_zero(&self) -> Result<Rational, ExactError> {
        self.eval(&Rational::zero())
    }

    /// Value at a rational point; a vanishing denominator is a pole.
    pub fn eval(&self, x: &Rational) -> Result<Rational, ExactError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(ExactError::PoleAtZero);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn is_regular_at_zero(&self) -> bool {
        !self.den.coeff(0).is_zero()
    }
}

impl Zero for EpsRational {
    fn zero() -> Self {
        EpsRational { num: EpsPoly::zero(), den: EpsPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for EpsRational {
    fn one() -> Self {
        Self::from_poly(EpsPoly::one())
    }
}

impl Add<&EpsRational> for &EpsRational {
    type Output = EpsRational;
    fn add(self, rhs: &EpsRational) -> EpsRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return EpsRational::from_poly(&self.num + &rhs.num);
            }
            return EpsRational::reduce_unchecked(&self.num + &rhs.num, self.den.clone());
        }
        let g = EpsPoly::gcd(&self.den, &rhs.den);
        if g.is_one() {
            // coprime denominators: the cross-multiplied form is already reduced
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            if num.is_zero() {
                return EpsRational::zero();
            }
            return EpsRational { num, den: &self.den * &rhs.den };
        }
        let ld = self.den.div_rem(&g).0;
        let rd = rhs.den.div_rem(&g).0;
        let num = &(&self.num * &rd) + &(&rhs.num * &ld);
        EpsRational::reduce_unchecked(num, &ld * &rhs.den)
    }
}

impl Neg for &EpsRational {
    type Output = EpsRational;
    fn neg(self) -> EpsRational {
        EpsRational { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub<&EpsRational> for &EpsRational {
    type Output = EpsRational;
    fn sub(self, rhs: &EpsRational) -> EpsRational {
        self + &(-rhs)
    }
}

impl Mul<&EpsRational> for &EpsRational {
    type Output = EpsRational;
    fn mul(self, rhs: &EpsRational) -> EpsRational {
        if self.is_zero() || rhs.is_zero() {
            return EpsRational::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return EpsRational::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel so the product needs no further reduction
        let g1 = EpsPoly::gcd(&self.num, &rhs.den);
        let g2 = EpsPoly::gcd(&rhs.num, &self.den);
        let (n1, d2) = if g1.is_one() { (self.num.clone(), rhs.den.clone()) } else { (self.num.div_rem(&g1).0, rhs.den.div_rem(&g1).0) };
        let (n2, d1) = if g2.is_one() { (rhs.num.clone(), self.den.clone()) } else { (rhs.num.div_rem(&g2).0, self.den.div_rem(&g2).0) };
        let den = &d1 * &d2;
        let num = &n1 * &n2;
        let lc = den.leading().expect("nonzero").clone();
        if lc.is_one() {
            EpsRational { num, den }
        } else {
            let inv = lc.recip();
            EpsRational { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }
}

impl Div<&EpsRational> for &EpsRational {
    type Output = EpsRational;
    fn div(self, rhs: &EpsRational) -> EpsRational {
        assert!(!rhs.is_zero(), "division by zero rational function");
        let inv = EpsRational::reduce_unchecked(rhs.den.clone(), rhs.num.clone());
        self * &inv
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for EpsRational {
            type Output = EpsRational;
            fn $m(self, rhs: EpsRational) -> EpsRational {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for EpsRational {
    type Output = EpsRational;
    fn neg(self) -> EpsRational {
        -&self
    }
}

impl Field for EpsRational {
    fn from_rational(r: &Rational) -> Self {
        Self::constant(r.clone())
    }
}

impl fmt::Display for EpsRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;
    use alloc::vec::Vec;

    fn p(cs: &[i64]) -> EpsPoly {
        EpsPoly::from_coeffs(cs.iter().map(|&c| rational(c, 1)).collect())
    }

    fn rf(n: &[i64], d: &[i64]) -> EpsRational {
        EpsRational::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn reduce_examples() {
        // (e^2 - e) / e = e - 1
        assert_eq!(rf(&[0, -1, 1], &[0, 1]), rf(&[-1, 1], &[1]));
        // (2e + 2) / 4 = (e + 1) / 2, with the 1/2 absorbed into the numerator
        let r = rf(&[2, 2], &[4]);
        assert!(r.den().is_one());
        let half: Vec<_> = r.num().coeffs().to_vec();
        assert_eq!(half, [rational(1, 2), rational(1, 2)]);
        // (e^2 - 1) / (e - 1) = e + 1
        assert_eq!(rf(&[-1, 0, 1], &[-1, 1]), rf(&[1, 1], &[1]));
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert_eq!(EpsRational::new(p(&[1]), p(&[])), Err(ExactError::ZeroDenominator));
    }

    #[test]
    fn eval_at_zero_examples() {
        assert_eq!(rf(&[3, 1], &[2, 1]).eval_at_zero(), Ok(rational(3, 2)));
        assert_eq!(rf(&[0, -1, 1], &[0, 1]).eval_at_zero(), Ok(rational(-1, 1)));
        assert_eq!(rf(&[1], &[0, 1]).eval_at_zero(), Err(ExactError::PoleAtZero));
    }

    #[test]
    fn field_operations_stay_normalised() {
        let a = rf(&[1], &[0, 1]); // 1/e
        let b = rf(&[-1], &[0, 1]);
        assert!((&a + &b).is_zero());
        let c = &a * &rf(&[0, 2], &[1]);
        assert_eq!(c, EpsRational::constant(rational(2, 1)));
        let d = &rf(&[1], &[1, 1]) + &rf(&[1], &[-1, 1]); // 1/(1+e) + 1/(e-1)
        assert_eq!(d, rf(&[0, 2], &[-1, 0, 1]));
        assert_eq!(&d / &d, EpsRational::one());
    }
}
