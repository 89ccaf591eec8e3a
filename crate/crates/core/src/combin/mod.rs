//! Subsets, partitions, Pieri sets, Gaussian binomials and symmetric
//! function evaluation.

mod gaussian;
mod pieri;
mod subset;
mod symmetric;

pub use gaussian::{binomial, gaussian_binomial, gaussian_binomial_by_enumeration};
pub use pieri::{pieri_e, pieri_h};
pub use subset::{lambda_of, sign_w, subset_of, Partition, Subset};
pub use symmetric::{
    complete_eval, elem_eval, hall_littlewood_r, permutations, schur_eval, schur_eval_bialternant,
    schur_eval_tableau,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinError {
    #[error("subset of {{1..{n}}} cannot contain {elem}")]
    ElementOutOfRange { n: usize, elem: usize },
    #[error("ambient size {0} exceeds 64")]
    AmbientTooLarge(usize),
    #[error("partition {parts:?} does not fit in a {rows}x{cols} frame")]
    DoesNotFit { parts: alloc::vec::Vec<usize>, rows: usize, cols: usize },
    #[error("expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("repeated variable values: the symmetrized sum needs a limit")]
    RequiresLimit,
    #[error("variable value zero where an inverse power is needed")]
    ZeroVariable,
}
