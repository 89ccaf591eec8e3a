use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{leading_series, JordanError, LWeightSpace};
use crate::coincident::{gamma_series, limit_phi_modes, phi_combinatorial_modes, LimitError};
use crate::exact::{Rational, Sign};
use crate::linalg::SparseMatrix;
use crate::vmodule::SpectralConfig;

/// Where the Cartan modes of the coincident module come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhiSource {
    /// Exact limit of the conjugated V-basis action.
    Limit,
    /// The closed Pieri-rule action on the Z-basis.
    Combinatorial,
}

/// `φ^±_{±r}` on the whole coincident module for `r ≤ order`.
#[derive(Clone, Debug)]
pub struct CartanModes {
    plus: Vec<SparseMatrix<Rational>>,
    minus: Vec<SparseMatrix<Rational>>,
}

impl CartanModes {
    pub fn build(cfg: &SpectralConfig, order: usize, source: PhiSource) -> Result<Self, LimitError> {
        let (plus, minus) = match source {
            PhiSource::Limit => (limit_phi_modes(cfg, Sign::Plus, order)?, limit_phi_modes(cfg, Sign::Minus, order)?),
            PhiSource::Combinatorial => {
                (phi_combinatorial_modes(cfg, Sign::Plus, order), phi_combinatorial_modes(cfg, Sign::Minus, order))
            }
        };
        Ok(CartanModes { plus, minus })
    }

    pub fn order(&self) -> usize {
        self.plus.len() - 1
    }

    pub fn phi(&self, sign: Sign, r: usize) -> Option<&SparseMatrix<Rational>> {
        match sign {
            Sign::Plus => self.plus.get(r),
            Sign::Minus => self.minus.get(r),
        }
    }
}

/// `ψ^±_{±r} = φ^±_{±r} - γ_{±r} id` on one l-weight space. Every entry must
/// strictly raise the grade; `ψ_0` must vanish.
pub fn psi_mode(space: &LWeightSpace, cartan: &CartanModes, sign: Sign, r: usize) -> Result<SparseMatrix<Rational>, JordanError> {
    let phi = cartan.phi(sign, r).ok_or(JordanError::OrderTooLarge { r, order: cartan.order() })?;
    let gamma = gamma_series(space.config(), space.sector(), sign, r).coeffs()[r].clone();
    let mut psi = space.restrict(phi);
    for i in 0..space.dim() {
        psi.add_to(i, i, -gamma.clone());
    }
    if let Some((i, j, _)) = psi.iter().find(|(i, j, v)| !v.is_zero() && space.grade(*i) <= space.grade(*j)) {
        return Err(JordanError::TriangularityViolation {
            mode: format!("psi{sign}_{r}"),
            sector: format!("{}", space.sector()),
            row: space.label(i),
            col: space.label(j),
        });
    }
    Ok(psi)
}

/// The part of `ψ` raising the grade by exactly one, and its predicted form
/// `Σ_s c_s X^(s)` with `c_s` the `r`-th mode of [`leading_series`].
pub fn leading_part(space: &LWeightSpace, psi: &SparseMatrix<Rational>, sign: Sign, r: usize) -> (SparseMatrix<Rational>, SparseMatrix<Rational>) {
    let dim = space.dim();
    let mut actual = SparseMatrix::zeros(dim, dim);
    for (i, j, v) in psi.iter() {
        if space.grade(i) == space.grade(j) + 1 {
            actual.set(i, j, v.clone());
        }
    }
    let cfg = space.config();
    let predicted = (0..cfg.groups().len()).fold(SparseMatrix::zeros(dim, dim), |acc, s| {
        let c = leading_series(cfg, space.sector(), s, sign, r).coeffs()[r].clone();
        acc.add(&space.raising(s).scale(&c))
    });
    (actual, predicted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;
    use crate::jordan::{jordan_oracle, predicted_chains, xyh_maps};
    use crate::vmodule::Sector;

    fn cfg(roots: &[(i64, usize)]) -> SpectralConfig {
        let roots: Vec<(Rational, usize)> = roots.iter().map(|&(a, m)| (rational(a, 1), m)).collect();
        SpectralConfig::from_roots(rational(2, 1), &roots, &rational(0, 1), None, 10).unwrap()
    }

    #[test]
    fn mode_zero_vanishes_and_leading_part_is_x() {
        for roots in [&[(1, 4)][..], &[(1, 2), (3, 2)]] {
            let c = cfg(roots);
            let cartan = CartanModes::build(&c, 3, PhiSource::Limit).unwrap();
            for sp in LWeightSpace::all(&c) {
                for sign in [Sign::Plus, Sign::Minus] {
                    assert!(psi_mode(&sp, &cartan, sign, 0).unwrap().is_zero());
                    for r in 1..=3 {
                        let psi = psi_mode(&sp, &cartan, sign, r).unwrap();
                        let (actual, predicted) = leading_part(&sp, &psi, sign, r);
                        assert_eq!(actual, predicted, "{roots:?} {} {sign} {r}", sp.sector());
                    }
                }
            }
        }
    }

    #[test]
    fn full_sector_is_one_dimensional() {
        let c = cfg(&[(1, 3)]);
        let cartan = CartanModes::build(&c, 2, PhiSource::Combinatorial).unwrap();
        let sp = LWeightSpace::new(&c, &Sector(alloc::vec![3])).unwrap();
        assert_eq!(sp.dim(), 1);
        assert!(psi_mode(&sp, &cartan, Sign::Plus, 1).unwrap().is_zero());
        assert!(matches!(psi_mode(&sp, &cartan, Sign::Plus, 3), Err(JordanError::OrderTooLarge { .. })));
    }

    #[test]
    fn chain_table_from_psi() {
        let c = cfg(&[(1, 6)]);
        let cartan = CartanModes::build(&c, 1, PhiSource::Limit).unwrap();
        for (m, want) in [(1, &[6][..]), (2, &[9, 5, 1]), (3, &[10, 6, 4])] {
            let sp = LWeightSpace::new(&c, &Sector(alloc::vec![m])).unwrap();
            let psi = psi_mode(&sp, &cartan, Sign::Plus, 1).unwrap();
            assert_eq!(jordan_oracle(&psi).unwrap().chain_lengths, want);
            assert_eq!(jordan_oracle(&xyh_maps(&sp).x).unwrap().chain_lengths, predicted_chains(&sp));
        }
    }

    #[test]
    fn triangularity_violation_is_reported() {
        let c = cfg(&[(1, 2)]);
        let mut cartan = CartanModes::build(&c, 1, PhiSource::Combinatorial).unwrap();
        let sp = LWeightSpace::new(&c, &Sector(alloc::vec![1])).unwrap();
        let i = sp.range().start;
        // a lowering entry
        cartan.plus[1].set(i, i + 1, rational(1, 1));
        assert!(matches!(psi_mode(&sp, &cartan, Sign::Plus, 1), Err(JordanError::TriangularityViolation { .. })));
    }
}
