//! Exact computations for standard modules of the quantum loop algebra of sl2.
//!
//! The crate builds the thin standard module in its diagonal V-basis over the
//! field of rational functions in a deformation parameter `ε`, conjugates it
//! into the Schur-polynomial Z-basis, takes the coincident limit `ε → 0`
//! exactly, and analyses the Jordan structure of the Cartan modes on every
//! l-weight space.  Everything is exact: rationals are arbitrary precision and
//! no floating point is used anywhere.
//!
//! Module map:
//!
//! * [`exact`] – coefficient domains (rationals, polynomials and rational
//!   functions in `ε`, truncated series in `u`, integer polynomials in `t`).
//! * [`linalg`] – sparse matrices over a generic field and exact rank.
//! * [`combin`] – subsets, partitions, Pieri sets, Gaussian binomials and
//!   symmetric function evaluation.
//! * [`vmodule`] – the V-basis module, its mode matrices and relation checks.
//! * [`coincident`] – the Z-basis, exact limits and the Pieri form of the
//!   Cartan action.
//! * [`jordan`] – sl2 structure on the l-weight spaces and the Jordan oracle.
//! * [`chars`] – q-characters, q,t-characters and their comparison with the
//!   Jordan grades.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod chars;
pub mod coincident;
pub mod combin;
pub mod error;
pub mod exact;
pub mod jordan;
pub mod linalg;
pub mod vmodule;

pub use error::Error;
pub use exact::{EpsPoly, EpsRational, Field, Rational, Sign, TPoly, USeries};
