use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::Range;

use num_traits::One;

use super::JordanError;
use crate::combin::{gaussian_binomial, pieri_e, Subset};
use crate::exact::{Rational, TPoly};
use crate::linalg::SparseMatrix;
use crate::vmodule::{Basis, Sector, SpectralConfig};

/// The l-weight space of one sector `(m_s)` of the coincident module: the
/// span of the `Z_A` with `|A^(s)| = m_s` for every group.
#[derive(Clone, Debug)]
pub struct LWeightSpace {
    cfg: SpectralConfig,
    basis: Basis,
    sector: Sector,
    range: Range<usize>,
}

impl LWeightSpace {
    pub fn new(cfg: &SpectralConfig, sector: &Sector) -> Result<Self, JordanError> {
        let basis = Basis::new(&cfg.group_sizes());
        let range = basis.sector_range(sector).ok_or_else(|| JordanError::UnknownSector(format!("{sector}")))?;
        Ok(LWeightSpace { cfg: cfg.clone(), basis, sector: sector.clone(), range })
    }

    /// Every sector, in basis order.
    pub fn all(cfg: &SpectralConfig) -> Vec<Self> {
        let basis = Basis::new(&cfg.group_sizes());
        basis
            .sectors()
            .iter()
            .map(|(sector, range)| LWeightSpace {
                cfg: cfg.clone(),
                basis: basis.clone(),
                sector: sector.clone(),
                range: range.clone(),
            })
            .collect()
    }

    pub fn config(&self) -> &SpectralConfig {
        &self.cfg
    }

    pub fn sector(&self) -> &Sector {
        &self.sector
    }

    /// Positions of this space inside the full module basis.
    pub fn range(&self) -> Range<usize> {
        self.range.clone()
    }

    pub fn dim(&self) -> usize {
        self.range.len()
    }

    /// Grade of the `i`-th local basis vector.
    pub fn grade(&self, i: usize) -> usize {
        self.basis.grade(self.range.start + i)
    }

    /// `Σ_s m_s (n_s - m_s)`, the top grade.
    pub fn top_grade(&self) -> usize {
        self.cfg.group_sizes().iter().zip(&self.sector.0).map(|(&n, &m)| m * (n - m)).sum()
    }

    /// Number of basis vectors in each grade `0..=top_grade`.
    pub fn grade_dims(&self) -> Vec<usize> {
        let mut dims = alloc::vec![0; self.top_grade() + 1];
        for i in 0..self.dim() {
            dims[self.grade(i)] += 1;
        }
        dims
    }

    /// `∏_s [n_s choose m_s]_t`.
    pub fn gaussian_product(&self) -> TPoly {
        self.cfg
            .group_sizes()
            .iter()
            .zip(&self.sector.0)
            .fold(TPoly::one(), |acc, (&n, &m)| &acc * &gaussian_binomial(n, m))
    }

    pub fn parts(&self, i: usize) -> Vec<Subset> {
        self.basis.parts(self.range.start + i)
    }

    pub fn label(&self, i: usize) -> String {
        self.basis.label(self.range.start + i)
    }

    fn local(&self, parts: &[Subset]) -> usize {
        self.basis.index_of(self.basis.join(parts)).expect("same sector") - self.range.start
    }

    /// The diagonal block of a full-module matrix on this space.
    pub fn restrict(&self, full: &SparseMatrix<Rational>) -> SparseMatrix<Rational> {
        let idx: Vec<usize> = self.range.clone().collect();
        full.submatrix(&idx, &idx)
    }

    /// `X` acting on group `s` only: `Z_A ↦ Σ_{C ∈ e(A^(s), 1)} Z_C`.
    pub fn raising(&self, s: usize) -> SparseMatrix<Rational> {
        let mut x = SparseMatrix::zeros(self.dim(), self.dim());
        for j in 0..self.dim() {
            let parts = self.parts(j);
            for c in pieri_e(&parts[s], 1) {
                let mut to = parts.clone();
                to[s] = c;
                x.add_to(self.local(&to), j, Rational::one());
            }
        }
        x
    }
}

/// The `sl2` triple `(X, Y, H)` on an l-weight space.
#[derive(Clone, Debug, PartialEq)]
pub struct Sl2Triple {
    pub x: SparseMatrix<Rational>,
    pub y: SparseMatrix<Rational>,
    pub h: SparseMatrix<Rational>,
}

impl Sl2Triple {
    /// `[H, X] = 2X`, `[H, Y] = -2Y`, `[X, Y] = H`.
    pub fn relations_hold(&self) -> bool {
        let two = Rational::from_integer(2.into());
        self.h.commutator(&self.x) == self.x.scale(&two)
            && self.h.commutator(&self.y) == self.y.scale(&-two)
            && self.x.commutator(&self.y) == self.h
    }
}

/// `X` adds one box in some group; `Y Z_A = Σ (n_s - b) b Z_B` over the `B`
/// with `A ∈ e(B, 1)` in one group, `b` the element of `B ∖ A`; `H` is
/// `2k - Σ_s m_s (n_s - m_s)` on grade `k`.
pub fn xyh_maps(space: &LWeightSpace) -> Sl2Triple {
    let dim = space.dim();
    let groups = space.cfg.group_sizes();
    let x = (0..groups.len()).fold(SparseMatrix::zeros(dim, dim), |acc, s| acc.add(&space.raising(s)));
    let mut y = SparseMatrix::zeros(dim, dim);
    for j in 0..dim {
        let parts = space.parts(j);
        for (s, a) in parts.iter().enumerate() {
            let n = groups[s];
            // B = A with b + 1 replaced by b
            for b in 1..n {
                if a.contains(b + 1) && !a.contains(b) {
                    let mut to = parts.clone();
                    to[s] = a.without(b + 1).with(b);
                    y.add_to(space.local(&to), j, Rational::from_integer(((n - b) * b).into()));
                }
            }
        }
    }
    let top = space.top_grade() as i64;
    let h = SparseMatrix::diagonal((0..dim).map(|i| Rational::from_integer((2 * space.grade(i) as i64 - top).into())).collect());
    Sl2Triple { x, y, h }
}

/// Jordan chain lengths of `X` read off the grade dimensions: the `t`-th
/// chain has length `#{k : dim G_k ≥ t}`.
pub fn predicted_chains(space: &LWeightSpace) -> Vec<usize> {
    let dims = space.grade_dims();
    let tallest = dims.iter().copied().max().unwrap_or(0);
    (1..=tallest).map(|t| dims.iter().filter(|&&d| d >= t).count()).collect()
}
