use alloc::vec;
use alloc::vec::Vec;

use super::{lambda_of, Subset};
use crate::exact::TPoly;
use num_bigint::BigInt;
use num_traits::One;

/// Binomial coefficient for any integer top: `x (x-1) ... (x-k+1) / k!`,
/// and zero when `k < 0` or `0 ≤ x < k`.
pub fn binomial(x: i64, k: i64) -> BigInt {
    if k < 0 || (x >= 0 && k > x) {
        return BigInt::from(0);
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(x - i) / BigInt::from(i + 1);
    }
    acc
}

/// The Gaussian binomial `[n choose m]_t`, by the recurrence
/// `[n, m] = [n-1, m-1] + t^m [n-1, m]`.
///
/// Panics if `m > n`.
pub fn gaussian_binomial(n: usize, m: usize) -> TPoly {
    assert!(m <= n, "gaussian_binomial({n}, {m})");
    // row[j] holds [i, j] for the current i
    let mut row: Vec<TPoly> = vec![TPoly::one()];
    for i in 1..=n {
        let mut next = Vec::with_capacity(i + 1);
        for j in 0..=i {
            let p = if j == 0 || j == i {
                TPoly::one()
            } else {
                &row[j - 1] + &(&TPoly::monomial(1, j) * &row[j])
            };
            next.push(p);
        }
        row = next;
    }
    row.swap_remove(m)
}

/// Same polynomial counted directly: the coefficient of `t^k` is the number
/// of `m`-subsets `A` with `|λ^A| = k`.
pub fn gaussian_binomial_by_enumeration(n: usize, m: usize) -> TPoly {
    let mut coeffs = vec![0u64; m * (n - m) + 1];
    for a in Subset::all_of_size(n, m) {
        coeffs[lambda_of(&a).size()] += 1;
    }
    TPoly::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generalized_binomial() {
        assert_eq!(binomial(5, 2), 10.into());
        assert_eq!(binomial(2, 5), 0.into());
        assert_eq!(binomial(3, -1), 0.into());
        assert_eq!(binomial(-1, 3), (-1).into());
        assert_eq!(binomial(-3, 2), 6.into());
        assert_eq!(binomial(0, 0), 1.into());
        for x in -6i64..=6 {
            for k in 1i64..=6 {
                // Pascal's rule holds for every integer top
                assert_eq!(binomial(x, k), binomial(x - 1, k) + binomial(x - 1, k - 1), "{x} {k}");
            }
        }
    }

    #[test]
    fn examples() {
        assert_eq!(gaussian_binomial(4, 2).coeffs(), &[1, 1, 2, 1, 1]);
        assert_eq!(gaussian_binomial(5, 2).coeffs(), &[1, 1, 2, 2, 2, 1, 1]);
        assert_eq!(gaussian_binomial(7, 0), TPoly::one());
        assert_eq!(gaussian_binomial(0, 0), TPoly::one());
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn recurrence_matches_enumeration_and_shape() {
        for n in 0..=12 {
            for m in 0..=n {
                let g = gaussian_binomial(n, m);
                assert_eq!(g, gaussian_binomial_by_enumeration(n, m), "[{n} {m}]");
                assert!(g.is_palindromic() && g.is_unimodal());
                assert_eq!(g.eval_one(), binom(n as u64, m as u64));
                assert_eq!(g.degree(), Some(m * (n - m)));
            }
        }
    }
}
