use alloc::vec::Vec;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{rational, Field, Rational};

/// Default cap on the total degree of the Drinfeld polynomial.
pub const DEFAULT_MAX_DEGREE: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("q = {0} is not allowed (q must not be 0, 1 or -1)")]
    BadQ(Rational),
    #[error("root {0} is zero")]
    ZeroRoot(usize),
    #[error("root {0} is listed twice; merge the multiplicities")]
    DuplicateRoot(Rational),
    #[error("root {0} has multiplicity zero")]
    EmptyGroup(Rational),
    #[error("group {group} repeats the perturbation direction {alpha}")]
    RepeatedAlpha { group: usize, alpha: Rational },
    #[error("total degree {degree} exceeds the cap {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("root {later} is q^2 times the earlier root {earlier}; list them in the other order")]
    Ordering { earlier: Rational, later: Rational },
    #[error("spectral values coincide or are zero at the chosen specialization")]
    Degenerate,
}

/// One root of the Drinfeld polynomial with its multiplicity, recorded as
/// the perturbation directions `α_1, ..., α_{n_s}` of the coincident copies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    root: Rational,
    alphas: Vec<Rational>,
}

impl Group {
    pub fn new(root: Rational, alphas: Vec<Rational>) -> Self {
        Group { root, alphas }
    }

    /// Directions `α_i = i + seed` for `i = 1..=size`.
    pub fn with_seed(root: Rational, size: usize, seed: &Rational) -> Self {
        let alphas = (1..=size as i64).map(|i| rational(i, 1) + seed).collect();
        Group { root, alphas }
    }

    /// The Drinfeld root `a`: the group contributes `(1 - a u)^{n_s}`.
    pub fn root(&self) -> &Rational {
        &self.root
    }

    pub fn size(&self) -> usize {
        self.alphas.len()
    }

    pub fn alphas(&self) -> &[Rational] {
        &self.alphas
    }
}

/// Everything needed to build a standard module and its coincident
/// degeneration: `q`, the groups of coincident roots, and the truncation
/// order of all `u`-series.
///
/// The spectral values of the V-basis are `a_i = a^(s) q + ε α_i^(s)`, so that
/// at `ε = 0` the Drinfeld polynomial is `∏_s (1 - a^(s) u)^{n_s}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralConfig {
    q: Rational,
    groups: Vec<Group>,
    truncation: usize,
}

impl SpectralConfig {
    /// Validates the data. `truncation` defaults to `2n + 2`.
    pub fn new(q: Rational, groups: Vec<Group>, truncation: Option<usize>, max_degree: usize) -> Result<Self, ConfigError> {
        if q.is_zero() || q.is_one() || q == -Rational::one() {
            return Err(ConfigError::BadQ(q));
        }
        for (s, g) in groups.iter().enumerate() {
            if g.root.is_zero() {
                return Err(ConfigError::ZeroRoot(s + 1));
            }
            if g.alphas.is_empty() {
                return Err(ConfigError::EmptyGroup(g.root.clone()));
            }
            if groups[..s].iter().any(|h| h.root == g.root) {
                return Err(ConfigError::DuplicateRoot(g.root.clone()));
            }
            for (i, a) in g.alphas.iter().enumerate() {
                if g.alphas[..i].contains(a) {
                    return Err(ConfigError::RepeatedAlpha { group: s + 1, alpha: a.clone() });
                }
            }
        }
        let degree: usize = groups.iter().map(Group::size).sum();
        if degree > max_degree.min(63) {
            return Err(ConfigError::DegreeTooLarge { degree, max: max_degree.min(63) });
        }
        let q2 = &q * &q;
        for (k, later) in groups.iter().enumerate() {
            for earlier in &groups[..k] {
                // a later root may not be q^2 times an earlier one
                if &later.root / &earlier.root == q2 {
                    return Err(ConfigError::Ordering { earlier: earlier.root.clone(), later: later.root.clone() });
                }
            }
        }
        let truncation = truncation.unwrap_or(2 * degree + 2);
        Ok(SpectralConfig { q, groups, truncation })
    }

    /// Groups from `(root, multiplicity)` pairs with `α_i = i + seed`.
    pub fn from_roots(
        q: Rational,
        roots: &[(Rational, usize)],
        alpha_seed: &Rational,
        truncation: Option<usize>,
        max_degree: usize,
    ) -> Result<Self, ConfigError> {
        let groups = roots.iter().map(|(a, m)| Group::with_seed(a.clone(), *m, alpha_seed)).collect();
        Self::new(q, groups, truncation, max_degree)
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn groups(&self) -> &[Group] {
        &self.groups
    }

    pub fn group_sizes(&self) -> Vec<usize> {
        self.groups.iter().map(Group::size).collect()
    }

    /// Total degree `n = Σ n_s`.
    pub fn degree(&self) -> usize {
        self.groups.iter().map(Group::size).sum()
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn with_truncation(&self, truncation: usize) -> Self {
        SpectralConfig { truncation, ..self.clone() }
    }

    /// The coincident spectral value `a^(s) q` of group `s`.
    pub fn center(&self, s: usize) -> Rational {
        &self.groups[s].root * &self.q
    }

    /// Group of the global position `i` (0-based).
    pub fn group_of(&self, i: usize) -> usize {
        let mut left = i;
        for (s, g) in self.groups.iter().enumerate() {
            if left < g.size() {
                return s;
            }
            left -= g.size();
        }
        panic!("position {i} out of range");
    }

    /// `a_i = a^(s) q + ε α_i^(s)` in global order.
    pub fn spectral_values<F: Field>(&self, eps: &F) -> Vec<F> {
        let mut out = Vec::with_capacity(self.degree());
        for s in 0..self.groups.len() {
            let c = F::from_rational(&self.center(s));
            for a in &self.groups[s].alphas {
                out.push(c.clone() + eps.clone() * F::from_rational(a));
            }
        }
        out
    }

    /// Whether the values at `ε` are nonzero, pairwise distinct, and never
    /// in ratio `q^{±2}`.
    pub fn is_generic_at(&self, eps: &Rational) -> bool {
        let a: Vec<Rational> = self.spectral_values(eps);
        let q2 = &self.q * &self.q;
        if a.iter().any(Zero::is_zero) {
            return false;
        }
        (0..a.len()).all(|i| {
            (0..a.len()).all(|j| i == j || (a[i] != a[j] && &a[i] / &a[j] != q2))
        })
    }

    /// The first of `1/7, 1/11, 1/13, ...` (reciprocal primes) at which
    /// [`is_generic_at`](Self::is_generic_at) holds.
    pub fn generic_eps(&self) -> Rational {
        (7i64..)
            .filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0))
            .map(|p| rational(1, p))
            .find(|e| self.is_generic_at(e))
            .expect("only finitely many specializations are degenerate")
    }
}
