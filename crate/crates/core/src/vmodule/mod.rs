//! The thin standard module in the V-basis, where every Cartan mode is
//! diagonal, together with checks of the defining relations.

mod basis;
mod checks;
mod config;
mod module;
mod relations;

pub use basis::{Basis, Sector};
pub use checks::{verify_highest_weight, verify_lowering_identity, HighestWeightReport, LoweringReport};
pub use config::{ConfigError, Group, SpectralConfig, DEFAULT_MAX_DEGREE};
pub use module::{ModeSource, VModule};
pub use relations::{verify_relations, Relation, RelationCheck, RelationReport, Residual};
