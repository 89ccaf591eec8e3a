use alloc::format;
use alloc::vec::Vec;

use super::{LimitError, ZChangeOfBasis};
use crate::exact::{EpsRational, Rational, Sign};
use crate::linalg::SparseMatrix;
use crate::vmodule::{Basis, ModeSource, SpectralConfig, VModule};

/// `M⁻¹ · ρ_V · M` reduced and evaluated at `ε = 0`. Any entry with a pole
/// is reported by its basis labels.
///
/// See [`ZChangeOfBasis::conjugate_at_zero`].
pub fn limit_mode(
    cob: &ZChangeOfBasis,
    rho_v: &SparseMatrix<EpsRational>,
    mode: &str,
) -> Result<SparseMatrix<Rational>, LimitError> {
    let basis = cob.basis();
    cob.conjugate_at_zero(rho_v).map_err(|(i, j)| LimitError::Singular {
        mode: mode.into(),
        row: basis.label(i),
        col: basis.label(j),
    })
}

fn phi_limits(
    cob: &ZChangeOfBasis,
    v: &VModule<EpsRational>,
    sign: Sign,
    order: usize,
) -> Result<Vec<SparseMatrix<Rational>>, LimitError> {
    v.phi_modes(sign, order)
        .iter()
        .enumerate()
        .map(|(r, m)| limit_mode(cob, m, &format!("phi{sign}_{r}")))
        .collect()
}

/// Limits of the Cartan modes `φ^±_{±r}`, `r ≤ order`, without the `x^±`
/// modes.
pub fn limit_phi_modes(cfg: &SpectralConfig, sign: Sign, order: usize) -> Result<Vec<SparseMatrix<Rational>>, LimitError> {
    phi_limits(&ZChangeOfBasis::build(cfg), &VModule::symbolic(cfg), sign, order)
}

/// Generator modes of the coincident module in the Z-basis, for
/// `x^±_t` with `t ∈ [-window, window + 1]` and `φ^±_{±r}` with `r ≤ order`.
#[derive(Clone, Debug)]
pub struct LimitModule {
    cfg: SpectralConfig,
    basis: Basis,
    window: i64,
    xplus: Vec<SparseMatrix<Rational>>,
    xminus: Vec<SparseMatrix<Rational>>,
    phi_plus: Vec<SparseMatrix<Rational>>,
    phi_minus: Vec<SparseMatrix<Rational>>,
}

impl LimitModule {
    pub fn build(cfg: &SpectralConfig, window: usize, order: usize) -> Result<Self, LimitError> {
        let cob = ZChangeOfBasis::build(cfg);
        let v = VModule::symbolic(cfg);
        let w = window as i64;
        let mut xplus = Vec::new();
        let mut xminus = Vec::new();
        for t in -w..=w + 1 {
            xplus.push(limit_mode(&cob, &v.xplus(t), &format!("x+_{t}"))?);
            xminus.push(limit_mode(&cob, &v.xminus(t), &format!("x-_{t}"))?);
        }
        let phi_plus = phi_limits(&cob, &v, Sign::Plus, order)?;
        let phi_minus = phi_limits(&cob, &v, Sign::Minus, order)?;
        Ok(LimitModule { cfg: cfg.clone(), basis: cob.basis().clone(), window: w, xplus, xminus, phi_plus, phi_minus })
    }

    pub fn config(&self) -> &SpectralConfig {
        &self.cfg
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn window(&self) -> usize {
        self.window as usize
    }

    pub fn order(&self) -> usize {
        self.phi_plus.len() - 1
    }

    /// Panics outside `[-window, window + 1]`.
    pub fn xplus(&self, t: i64) -> &SparseMatrix<Rational> {
        &self.xplus[(t + self.window) as usize]
    }

    pub fn xminus(&self, t: i64) -> &SparseMatrix<Rational> {
        &self.xminus[(t + self.window) as usize]
    }

    /// `φ^±_{±r}`; panics past the order.
    pub fn phi(&self, sign: Sign, r: usize) -> &SparseMatrix<Rational> {
        match sign {
            Sign::Plus => &self.phi_plus[r],
            Sign::Minus => &self.phi_minus[r],
        }
    }
}

impl ModeSource<Rational> for LimitModule {
    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn q(&self) -> Rational {
        self.cfg.q().clone()
    }

    fn spectral_values(&self) -> Vec<Rational> {
        self.cfg.spectral_values(&Rational::from_integer(0.into()))
    }

    fn xplus(&self, t: i64) -> SparseMatrix<Rational> {
        LimitModule::xplus(self, t).clone()
    }

    fn xminus(&self, t: i64) -> SparseMatrix<Rational> {
        LimitModule::xminus(self, t).clone()
    }

    fn phi_modes(&self, sign: Sign, order: usize) -> Vec<SparseMatrix<Rational>> {
        (0..=order).map(|r| self.phi(sign, r).clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rational, Field};
    use crate::vmodule::{verify_highest_weight, verify_relations};

    fn cfg(roots: &[(i64, usize)]) -> SpectralConfig {
        let roots: Vec<(Rational, usize)> = roots.iter().map(|&(a, m)| (rational(a, 1), m)).collect();
        SpectralConfig::from_roots(rational(2, 1), &roots, &rational(0, 1), None, 10).unwrap()
    }

    #[test]
    fn motivating_singularity_is_resolved() {
        let c = cfg(&[(1, 2)]);
        let v = VModule::symbolic(&c);
        let b = v.basis();
        // in the V-basis x^+_0 V_{1} has a 1/ε coefficient
        let e = v.xplus(0).entry(b.index_of(0).unwrap(), b.index_of(1).unwrap());
        assert!(!e.is_regular_at_zero());
        let lim = LimitModule::build(&c, 1, 3).unwrap();
        assert!(!lim.xplus(0).is_zero());
    }

    #[test]
    fn one_factor_unchanged() {
        let c = cfg(&[(3, 1)]);
        let lim = LimitModule::build(&c, 2, 4).unwrap();
        let v = VModule::new(&c, rational(0, 1)).unwrap();
        for t in -2..=3 {
            assert_eq!(lim.xplus(t), &v.xplus(t));
            assert_eq!(lim.xminus(t), &v.xminus(t));
        }
        assert_eq!(lim.phi_modes(Sign::Minus, 4), v.phi_modes(Sign::Minus, 4));
    }

    #[test]
    fn cartan_mode_zero_is_scalar_per_sector() {
        let c = cfg(&[(1, 3), (5, 1)]);
        let lim = LimitModule::build(&c, 0, 2).unwrap();
        let p0 = lim.phi(Sign::Plus, 0);
        assert!(p0.is_diagonal());
        for i in 0..lim.basis().len() {
            let k = lim.basis().mask(i).count_ones() as i64;
            assert_eq!(p0.entry(i, i), rational(2, 1).powi(4 - 2 * k));
        }
    }

    #[test]
    fn limit_module_is_a_module() {
        for roots in [&[(1, 3)][..], &[(1, 2), (3, 1)]] {
            let c = cfg(roots);
            let lim = LimitModule::build(&c, 1, c.truncation()).unwrap();
            assert!(verify_relations(&lim, 1, c.truncation()).passed());
            assert!(verify_highest_weight(&ModeView(&lim, 1), 1).passed());
        }
    }

    // highest weight check on a window-limited view
    struct ModeView<'a>(&'a LimitModule, usize);

    impl ModeSource<Rational> for ModeView<'_> {
        fn dim(&self) -> usize {
            self.0.dim()
        }
        fn q(&self) -> Rational {
            ModeSource::q(self.0)
        }
        fn spectral_values(&self) -> Vec<Rational> {
            self.0.spectral_values()
        }
        fn xplus(&self, t: i64) -> SparseMatrix<Rational> {
            self.0.xplus(t).clone()
        }
        fn xminus(&self, t: i64) -> SparseMatrix<Rational> {
            self.0.xminus(t).clone()
        }
        fn phi_modes(&self, sign: Sign, order: usize) -> Vec<SparseMatrix<Rational>> {
            self.0.phi_modes(sign, order.min(self.1))
        }
    }
}
