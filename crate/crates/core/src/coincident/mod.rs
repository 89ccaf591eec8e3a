//! The Z-basis, exact `ε → 0` limits of the generator modes, and the Pieri
//! form of the limiting Cartan action.

mod closed_form;
mod consistency;
mod limit;
mod pieri_phi;
mod zbasis;

pub use closed_form::{x_closed_form, CoefficientReading};
pub use consistency::{verify_limit_consistency, ConsistencyReport, PhiComparison, XComparison};
pub use limit::{limit_mode, limit_phi_modes, LimitModule};
pub use pieri_phi::{gamma_series, phi_combinatorial, phi_combinatorial_modes, pieri_factors_commute};
pub use zbasis::ZChangeOfBasis;

use alloc::string::String;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LimitError {
    #[error("entry ({row}, {col}) of {mode} has a pole at epsilon = 0")]
    Singular { mode: String, row: String, col: String },
}
