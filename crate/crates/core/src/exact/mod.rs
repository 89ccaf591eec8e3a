//! Exact coefficient arithmetic.

mod field;
mod poly;
mod ratfunc;
mod series;
mod tpoly;

pub use field::{rational, Field, Rational};
pub use poly::EpsPoly;
pub use ratfunc::EpsRational;
pub use series::{Sign, USeries};
pub use tpoly::TPoly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("rational function with zero denominator")]
    ZeroDenominator,
    #[error("rational function has a pole at epsilon = 0")]
    PoleAtZero,
    #[error("denominator has zero constant term in the expansion variable")]
    NotExpandable,
    #[error("series expanded in u and in 1/u cannot be combined")]
    SignMismatch,
}
