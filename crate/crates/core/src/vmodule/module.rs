use alloc::vec;
use alloc::vec::Vec;

use super::{Basis, ConfigError, SpectralConfig};
use crate::exact::{EpsRational, Field, Rational, Sign, USeries};
use crate::linalg::SparseMatrix;

/// Anything that provides the generator modes of a module on a fixed basis.
///
/// Implemented by the V-basis module and by the coincident limit, and by test
/// doubles that corrupt one generator.
pub trait ModeSource<F: Field> {
    fn dim(&self) -> usize;
    fn q(&self) -> F;
    /// Spectral values `a_i`, used for the highest l-weight.
    fn spectral_values(&self) -> Vec<F>;
    fn xplus(&self, t: i64) -> SparseMatrix<F>;
    fn xminus(&self, t: i64) -> SparseMatrix<F>;
    /// `φ^±_{±r}` for `r = 0..=order`.
    fn phi_modes(&self, sign: Sign, order: usize) -> Vec<SparseMatrix<F>>;
}

/// The module with basis `V_A`, `A ⊆ {1..n}`, at pairwise distinct spectral
/// values, over a field `F` (rationals at a specialized `ε`, or rational
/// functions of `ε`).
#[derive(Clone, Debug)]
pub struct VModule<F> {
    cfg: SpectralConfig,
    basis: Basis,
    q: F,
    a: Vec<F>,
    // pair[j][k] = (a_j q - a_k q⁻¹) / (a_j - a_k)
    pair: Vec<Vec<F>>,
}

impl<F: Field> VModule<F> {
    /// Module at the given value of `ε`. Fails if two spectral values
    /// coincide or one vanishes.
    pub fn new(cfg: &SpectralConfig, eps: F) -> Result<Self, ConfigError> {
        let a: Vec<F> = cfg.spectral_values(&eps);
        let q = F::from_rational(cfg.q());
        let qi = q.inv();
        let n = a.len();
        if a.iter().any(|x| x.is_zero()) {
            return Err(ConfigError::Degenerate);
        }
        let mut pair = vec![vec![F::zero(); n]; n];
        for j in 0..n {
            for k in 0..n {
                if j == k {
                    continue;
                }
                let d = a[j].clone() - a[k].clone();
                if d.is_zero() {
                    return Err(ConfigError::Degenerate);
                }
                pair[j][k] = (a[j].clone() * q.clone() - a[k].clone() * qi.clone()) / d;
            }
        }
        Ok(VModule { cfg: cfg.clone(), basis: Basis::new(&cfg.group_sizes()), q, a, pair })
    }

    pub fn config(&self) -> &SpectralConfig {
        &self.cfg
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn values(&self) -> &[F] {
        &self.a
    }

    /// `x^+_t V_A = Σ_{j∈A} a_j^t ∏_{k∉A} (a_j q - a_k q⁻¹)/(a_j - a_k) V_{A∖{j}}`
    pub fn xplus(&self, t: i64) -> SparseMatrix<F> {
        let n = self.a.len();
        let powers: Vec<F> = self.a.iter().map(|x| x.powi(t)).collect();
        let mut m = SparseMatrix::zeros(self.basis.len(), self.basis.len());
        for col in 0..self.basis.len() {
            let mask = self.basis.mask(col);
            for j in (0..n).filter(|&j| mask >> j & 1 == 1) {
                let mut c = powers[j].clone();
                for k in (0..n).filter(|&k| mask >> k & 1 == 0) {
                    c = c * self.pair[j][k].clone();
                }
                let row = self.basis.index_of(mask & !(1 << j)).expect("basis is closed");
                m.set(row, col, c);
            }
        }
        m
    }

    /// `x^-_t V_A = Σ_{j∉A} a_j^t ∏_{k∈A} (a_k q - a_j q⁻¹)/(a_k - a_j) V_{A∪{j}}`
    pub fn xminus(&self, t: i64) -> SparseMatrix<F> {
        let n = self.a.len();
        let powers: Vec<F> = self.a.iter().map(|x| x.powi(t)).collect();
        let mut m = SparseMatrix::zeros(self.basis.len(), self.basis.len());
        for col in 0..self.basis.len() {
            let mask = self.basis.mask(col);
            for j in (0..n).filter(|&j| mask >> j & 1 == 0) {
                let mut c = powers[j].clone();
                for k in (0..n).filter(|&k| mask >> k & 1 == 1) {
                    c = c * self.pair[k][j].clone();
                }
                let row = self.basis.index_of(mask | 1 << j).expect("basis is closed");
                m.set(row, col, c);
            }
        }
        m
    }

    /// Eigenvalue series of `φ^±(u)` on every basis vector:
    /// `∏_{j∈A} (q⁻¹ - q a_j u)/(1 - a_j u) · ∏_{j∉A} (q - q⁻¹ a_j u)/(1 - a_j u)`.
    pub fn phi_series(&self, sign: Sign, order: usize) -> Vec<USeries<F>> {
        let q = self.q.clone();
        let qi = q.inv();
        let d = q.clone() - qi.clone();
        // Each factor is c_0 + c Σ_{k≥1} z^k with z = a_j (resp. a_j⁻¹ for
        // φ⁻). For φ⁻ the variable is rescaled by D = ∏ a_j so that all
        // coefficients stay polynomial in the a_j; mode r is divided by D^r.
        let total = self.a.iter().fold(F::one(), |acc, a| acc * a.clone());
        let zs: Vec<F> = match sign {
            Sign::Plus => self.a.clone(),
            Sign::Minus => (0..self.a.len())
                .map(|j| (0..self.a.len()).filter(|&i| i != j).fold(F::one(), |acc, i| acc * self.a[i].clone()))
                .collect(),
        };
        let factor = |c0: F, c: F, z: &F| {
            let mut coeffs = Vec::with_capacity(order + 1);
            coeffs.push(c0);
            let mut zk = F::one();
            for _ in 1..=order {
                zk = zk * z.clone();
                coeffs.push(c.clone() * zk.clone());
            }
            USeries::from_coeffs(sign, coeffs)
        };
        let (inside, outside): (Vec<_>, Vec<_>) = match sign {
            Sign::Plus => (
                zs.iter().map(|z| factor(qi.clone(), -d.clone(), z)).collect(),
                zs.iter().map(|z| factor(q.clone(), d.clone(), z)).collect(),
            ),
            Sign::Minus => (
                zs.iter().map(|z| factor(q.clone(), d.clone(), z)).collect(),
                zs.iter().map(|z| factor(qi.clone(), -d.clone(), z)).collect(),
            ),
        };
        let unscale = match sign {
            Sign::Plus => None,
            Sign::Minus => Some(total.inv()),
        };
        (0..self.basis.len())
            .map(|i| {
                let mask = self.basis.mask(i);
                let prod = (0..self.a.len()).fold(USeries::one(sign, order), |acc, j| {
                    let f = if mask >> j & 1 == 1 { &inside[j] } else { &outside[j] };
                    acc.try_mul(f).expect("same sign")
                });
                match &unscale {
                    None => prod,
                    Some(s) => {
                        let mut sk = F::one();
                        let coeffs = prod
                            .coeffs()
                            .iter()
                            .map(|c| {
                                let v = c.clone() * sk.clone();
                                sk = sk.clone() * s.clone();
                                v
                            })
                            .collect();
                        USeries::from_coeffs(sign, coeffs)
                    }
                }
            })
            .collect()
    }

    pub fn phi(&self, sign: Sign, r: usize) -> SparseMatrix<F> {
        self.phi_modes(sign, r).pop().expect("at least mode 0")
    }

    pub fn phi_modes(&self, sign: Sign, order: usize) -> Vec<SparseMatrix<F>> {
        let series = self.phi_series(sign, order);
        (0..=order)
            .map(|r| SparseMatrix::diagonal(series.iter().map(|s| s.coeffs()[r].clone()).collect()))
            .collect()
    }
}

impl VModule<EpsRational> {
    /// Entries as rational functions of `ε`.
    pub fn symbolic(cfg: &SpectralConfig) -> Self {
        Self::new(cfg, EpsRational::eps()).expect("distinct directions give distinct values for generic ε")
    }
}

impl VModule<Rational> {
    /// Entries at the specialization [`SpectralConfig::generic_eps`].
    pub fn specialized(cfg: &SpectralConfig) -> Self {
        Self::new(cfg, cfg.generic_eps()).expect("generic specialization")
    }
}

impl<F: Field> ModeSource<F> for VModule<F> {
    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn q(&self) -> F {
        self.q.clone()
    }

    fn spectral_values(&self) -> Vec<F> {
        self.a.clone()
    }

    fn xplus(&self, t: i64) -> SparseMatrix<F> {
        VModule::xplus(self, t)
    }

    fn xminus(&self, t: i64) -> SparseMatrix<F> {
        VModule::xminus(self, t)
    }

    fn phi_modes(&self, sign: Sign, order: usize) -> Vec<SparseMatrix<F>> {
        VModule::phi_modes(self, sign, order)
    }
}
