//! Jordan structure of the Cartan modes on the l-weight spaces of the
//! coincident module.
//!
//! Each sector `(m_s)` is an l-weight space. On it `ψ^±(u) = φ^±(u) - γ(u)`
//! is nilpotent and strictly raises the grade `Σ_s |λ^{A^(s)}|`. The leading
//! part of `ψ` is a multiple of the raising operator of an `sl2` action on the
//! grading poset, which fixes the Jordan type.

mod coefficient;
mod oracle;
mod psi;
mod space;
mod theorem;

pub use coefficient::{leading_series, n_coefficient, n_minus_coefficient, n_series, p_polynomial};
pub use oracle::{jordan_oracle, JordanProfile};
pub use psi::{leading_part, psi_mode, CartanModes, PhiSource};
pub use space::{predicted_chains, xyh_maps, LWeightSpace, Sl2Triple};
pub use theorem::{verify_sector_thx, verify_theorem_thx, ModeCheck, SectorThx, ThxOptions, ThxReport};

use alloc::string::String;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JordanError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix of dimension {dim} is not nilpotent")]
    NotNilpotent { dim: usize },
    #[error("sector {0} does not occur in the module")]
    UnknownSector(String),
    #[error("psi mode {mode} on sector {sector} has entry ({row}, {col}) that does not raise the grade")]
    TriangularityViolation { mode: String, sector: String, row: String, col: String },
    #[error("mode {r} exceeds the computed order {order}")]
    OrderTooLarge { r: usize, order: usize },
}
