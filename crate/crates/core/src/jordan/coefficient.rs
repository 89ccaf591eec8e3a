use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coincident::gamma_series;
use crate::combin::binomial;
use crate::exact::{Field, Rational, Sign, USeries};
use crate::vmodule::{Sector, SpectralConfig};

/// `P_{m,n;r}(q) = Σ_{p1=r-n+2}^{r} (-1)^{r-p1} C(n+p1-1, p1)
///   Σ_{p2=0}^{m-1} C(m-1, p2) C(n-m-1, r-p1-p2) q^{2(2 p2 - r + p1)}`.
pub fn p_polynomial(m: usize, n: usize, r: usize, q: &Rational) -> Rational {
    let (m, n, r) = (m as i64, n as i64, r as i64);
    let mut total = Rational::zero();
    for p1 in (r - n + 2)..=r {
        let outer = binomial(n + p1 - 1, p1);
        if outer.is_zero() {
            continue;
        }
        let sign = if (r - p1) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        for p2 in 0..m {
            let c = binomial(m - 1, p2) * binomial(n - m - 1, r - p1 - p2);
            if c.is_zero() {
                continue;
            }
            let coeff = Rational::from_integer(&sign * &outer * c);
            total += coeff * q.powi(2 * (2 * p2 - r + p1));
        }
    }
    total
}

/// `N^±_{m,n;±r} = a^{±r-1} q^{±n-(1±1)m} (q⁻² - q²) P_{m,n;r-1}(q)` for
/// `r ≥ 1`.
pub fn n_coefficient(m: usize, n: usize, r: usize, sign: Sign, q: &Rational, a: &Rational) -> Rational {
    assert!(r >= 1, "N is defined for r ≥ 1");
    let (r_signed, q_exp) = match sign {
        Sign::Plus => (r as i64, n as i64 - 2 * m as i64),
        Sign::Minus => (-(r as i64), -(n as i64)),
    };
    a.powi(r_signed - 1) * q.powi(q_exp) * (q.powi(-2) - q.powi(2)) * p_polynomial(m, n, r - 1, q)
}

/// The `u⁻¹` modes of the expansion behind [`n_series`]:
/// `a^{-r-1} q^{2m-n} (q⁻² - q²) P_{m,n;r-1}(q⁻¹)`. The printed minus branch
/// of [`n_coefficient`] differs from the expansion; this is the form that
/// matches it.
pub fn n_minus_coefficient(m: usize, n: usize, r: usize, q: &Rational, a: &Rational) -> Rational {
    assert!(r >= 1, "N is defined for r ≥ 1");
    a.powi(-(r as i64) - 1) * q.powi(2 * m as i64 - n as i64) * (q.powi(-2) - q.powi(2)) * p_polynomial(m, n, r - 1, &q.recip())
}

// -q u / (q⁻¹ - q a u) + q⁻¹ u / (q - q⁻¹ a u)
fn box_weight(q: &Rational, a: &Rational, sign: Sign, order: usize) -> USeries<Rational> {
    let qi = q.recip();
    let zero = Rational::zero();
    let inner = USeries::from_rational(&[zero.clone(), -q.clone()], &[qi.clone(), -(q * a)], sign, order).expect("a ≠ 0");
    let wh = USeries::from_rational(&[zero, qi.clone()], &[q.clone(), -(&qi * a)], sign, order).expect("a ≠ 0");
    inner.try_add(&wh).expect("same sign")
}

/// `γ_{m,n}(u) (-q u / (q⁻¹ - q a u) + q⁻¹ u / (q - q⁻¹ a u))` through order
/// `order`, whose modes are the `N^±_{m,n;±r}`.
pub fn n_series(m: usize, n: usize, sign: Sign, order: usize, q: &Rational, a: &Rational) -> USeries<Rational> {
    let qi = q.recip();
    let one = Rational::one();
    let inside = USeries::from_rational(&[qi.clone(), -(q * a)], &[one.clone(), -a.clone()], sign, order).expect("a ≠ 0");
    let outside = USeries::from_rational(&[q.clone(), -(&qi * a)], &[one, -a.clone()], sign, order).expect("a ≠ 0");
    let gamma = inside.pow(m as u32).try_mul(&outside.pow((n - m) as u32)).expect("same sign");
    gamma.try_mul(&box_weight(q, a, sign, order)).expect("same sign")
}

/// Coefficient series of the one-box move in group `s` inside the leading
/// part of `ψ^±(u)` on a sector: the full `γ(u)` times the box weight at the
/// coincident value of group `s`.
pub fn leading_series(cfg: &SpectralConfig, sector: &Sector, s: usize, sign: Sign, order: usize) -> USeries<Rational> {
    let gamma = gamma_series(cfg, sector, sign, order);
    gamma.try_mul(&box_weight(cfg.q(), &cfg.center(s), sign, order)).expect("same sign")
}
