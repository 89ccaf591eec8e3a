use thiserror::Error;

use crate::coincident::LimitError;
use crate::combin::CombinError;
use crate::exact::ExactError;
use crate::jordan::JordanError;
use crate::vmodule::ConfigError;

/// Umbrella error for callers that drive several stages at once.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Combin(#[from] CombinError),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Limit(#[from] LimitError),
    #[error(transparent)]
    Jordan(#[from] JordanError),
}
