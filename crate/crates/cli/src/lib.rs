//! Command-line front end for `qtjordan-core`: parses a run configuration,
//! drives the verifications and renders text or JSON reports.
//!
//! Exit codes: 0 when every assertion holds, 1 on a verification failure,
//! 2 on a configuration error.

pub mod commands;
pub mod config;
pub mod render;
pub mod report;

use thiserror::Error;

pub use commands::run;
pub use config::{parse_rational, parse_roots, Command, Format, RootSpec, RunConfig};
pub use report::Report;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    /// A computation stopped, e.g. a pole in a limit or a non-nilpotent map.
    #[error("computation failed: {0}")]
    Compute(String),
}

impl From<qtjordan_core::Error> for CliError {
    fn from(e: qtjordan_core::Error) -> Self {
        match e {
            qtjordan_core::Error::Config(c) => CliError::Config(c.to_string()),
            other => CliError::Compute(other.to_string()),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Compute(_) => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Config(_) => "config",
            CliError::Compute(_) => "compute",
        }
    }
}

/// Output text and exit code for one run.
pub fn execute(cfg: &RunConfig) -> (String, i32) {
    match run(cfg) {
        Ok(rep) => (render_report(&rep, cfg.format), if rep.passed() { 0 } else { 1 }),
        Err(e) => (render_error(cfg.command, &e, cfg.format), e.exit_code()),
    }
}

pub fn render_report(rep: &Report, format: Format) -> String {
    match format {
        Format::Text => render::text(rep),
        Format::Json => json(rep),
    }
}

pub fn render_error(command: Command, e: &CliError, format: Format) -> String {
    match format {
        Format::Text => format!("{command}: {e}\n"),
        Format::Json => json(&report::ErrorReport {
            schema_version: report::SCHEMA_VERSION,
            command,
            error: report::ErrorBody { kind: e.kind().into(), message: e.to_string() },
        }),
    }
}

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}
