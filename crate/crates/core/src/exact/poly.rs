use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Rational;

/// Dense univariate polynomial in `ε` over the rationals.
///
/// `coeffs[k]` is the coefficient of `ε^k`; the highest stored coefficient is
/// never zero, so the zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct EpsPoly {
    coeffs: Vec<Rational>,
}

impl EpsPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        EpsPoly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c · ε^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        EpsPoly { coeffs }
    }

    /// The polynomial `ε`.
    pub fn eps() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Multiplicity of `ε` as a factor (`None` for zero).
    pub fn eps_valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        EpsPoly { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// Divide through by the leading coefficient. The zero polynomial is
    /// returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) if !lc.is_one() => {
                let inv = lc.recip();
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &EpsPoly) -> (EpsPoly, EpsPoly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (EpsPoly::from_coeffs(quot), EpsPoly::from_coeffs(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &EpsPoly, b: &EpsPoly) -> EpsPoly {
        let (Some(va), Some(vb)) = (a.eps_valuation(), b.eps_valuation()) else {
            return if a.is_zero() { b.monic() } else { a.monic() };
        };
        let a = a.shift_down(va);
        let b = b.shift_down(vb);
        let core = if modular::coprime(&a.coeffs, &b.coeffs) { Self::one() } else { Self::euclid(&a, &b) };
        let v = va.min(vb);
        if v == 0 {
            core
        } else {
            &core * &Self::monomial(Rational::one(), v)
        }
    }

    fn euclid(a: &EpsPoly, b: &EpsPoly) -> EpsPoly {
        let mut x = a.monic();
        let mut y = b.monic();
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r.monic();
        }
        x
    }

    // divide by ε^k, which must divide self
    fn shift_down(&self, k: usize) -> EpsPoly {
        EpsPoly { coeffs: self.coeffs[k..].to_vec() }
    }
}

// Coprimality certificate from a reduction modulo a prime: when no
// denominator or leading coefficient vanishes mod p, the degree of the gcd
// mod p bounds the degree of the rational gcd from above.
mod modular {
    use alloc::vec::Vec;
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{ToPrimitive, Zero};

    use super::Rational;

    const P: u64 = (1 << 61) - 1;

    fn mulm(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % P as u128) as u64
    }

    fn powm(mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = mulm(r, a);
            }
            a = mulm(a, a);
            e >>= 1;
        }
        r
    }

    fn reduce(x: &BigInt) -> u64 {
        x.mod_floor(&BigInt::from(P)).to_u64().expect("residue fits")
    }

    fn image(coeffs: &[Rational]) -> Option<Vec<u64>> {
        coeffs
            .iter()
            .map(|c| {
                let d = reduce(c.denom());
                (d != 0).then(|| mulm(reduce(c.numer()), powm(d, P - 2)))
            })
            .collect()
    }

    fn degree_of_gcd(mut x: Vec<u64>, mut y: Vec<u64>) -> usize {
        let trim = |v: &mut Vec<u64>| {
            while v.last() == Some(&0) {
                v.pop();
            }
        };
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let dy = y.len() - 1;
            let inv = powm(y[dy], P - 2);
            while x.len() > dy {
                let dx = x.len() - 1;
                let c = mulm(x[dx], inv);
                for i in 0..=dy {
                    let t = mulm(c, y[i]);
                    x[dx - dy + i] = (x[dx - dy + i] + P - t) % P;
                }
                trim(&mut x);
            }
            core::mem::swap(&mut x, &mut y);
        }
        x.len().saturating_sub(1)
    }

    pub(super) fn coprime(a: &[Rational], b: &[Rational]) -> bool {
        let (Some(x), Some(y)) = (image(a), image(b)) else { return false };
        if x.last().is_none_or(|c| c.is_zero()) || y.last().is_none_or(|c| c.is_zero()) {
            return false;
        }
        degree_of_gcd(x, y) == 0
    }
}

impl Zero for EpsPoly {
    fn zero() -> Self {
        EpsPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for EpsPoly {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Add<&EpsPoly> for &EpsPoly {
    type Output = EpsPoly;
    fn add(self, rhs: &EpsPoly) -> EpsPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        EpsPoly::from_coeffs(coeffs)
    }
}

impl Sub<&EpsPoly> for &EpsPoly {
    type Output = EpsPoly;
    fn sub(self, rhs: &EpsPoly) -> EpsPoly {
        self + &(-rhs)
    }
}

impl Neg for &EpsPoly {
    type Output = EpsPoly;
    fn neg(self) -> EpsPoly {
        EpsPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul<&EpsPoly> for &EpsPoly {
    type Output = EpsPoly;
    fn mul(self, rhs: &EpsPoly) -> EpsPoly {
        if self.is_zero() || rhs.is_zero() {
            return EpsPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        EpsPoly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for EpsPoly {
            type Output = EpsPoly;
            fn $m(self, rhs: EpsPoly) -> EpsPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for EpsPoly {
    type Output = EpsPoly;
    fn neg(self) -> EpsPoly {
        -&self
    }
}

impl fmt::Display for EpsPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})e")?,
                _ => write!(f, "({c})e^{k}")?,
            }
        }
        Ok(())
    }
}
