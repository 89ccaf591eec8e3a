//! Serializable reports, one per subcommand. Rationals are written as
//! strings (`"5/2"`) so that JSON stays exact.

use serde::{Deserialize, Serialize};

use crate::config::{Command, RunConfig};

/// Schema version stamped into every JSON document.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEntry {
    pub root: String,
    pub multiplicity: usize,
}

/// The validated run parameters echoed into each report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub roots: Vec<RootEntry>,
    pub q: String,
    pub alpha_seed: String,
    pub truncation: usize,
    pub window: usize,
    pub max_degree: usize,
}

impl ConfigEcho {
    pub fn new(run: &RunConfig, truncation: usize) -> Self {
        ConfigEcho {
            roots: run
                .roots
                .iter()
                .map(|r| RootEntry { root: r.root.to_string(), multiplicity: r.multiplicity })
                .collect(),
            q: run.q.to_string(),
            alpha_seed: run.alpha_seed.to_string(),
            truncation,
            window: run.window,
            max_degree: run.max_degree,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationSummary {
    pub relation: String,
    pub checks: usize,
    pub failures: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationFailure {
    pub relation: String,
    pub signs: Vec<String>,
    pub indices: Vec<i64>,
    pub row: usize,
    pub col: usize,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationsSection {
    pub passed: bool,
    pub summary: Vec<RelationSummary>,
    /// At most the first 20 failures.
    pub failures: Vec<RelationFailure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationsReport {
    pub schema_version: u32,
    pub command: Command,
    pub config: ConfigEcho,
    pub passed: bool,
    pub relations: RelationsSection,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QcharTerm {
    /// `[a, e]` pairs of `Y_a^e`, ordered by `a`.
    pub exponents: Vec<(String, i64)>,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QcharReport {
    pub schema_version: u32,
    pub command: Command,
    pub config: ConfigEcho,
    pub monomials: Vec<QcharTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QtcharTerm {
    pub exponents: Vec<(String, i64)>,
    /// `tpoly[k]` is the coefficient of `t^k`.
    pub tpoly: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QtcharReport {
    pub schema_version: u32,
    pub command: Command,
    pub config: ConfigEcho,
    pub monomials: Vec<QtcharTerm>,
}

/// One l-weight space under `ψ^+_1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanRow {
    pub sector: Vec<usize>,
    pub dim: usize,
    pub chains: Vec<usize>,
    pub grade_dims: Vec<usize>,
    /// Sorted coefficients of the Gaussian-binomial product.
    pub expected: Vec<usize>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanReport {
    pub schema_version: u32,
    pub command: Command,
    pub config: ConfigEcho,
    pub passed: bool,
    pub sectors: Vec<JordanRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormEntry {
    pub which: String,
    pub t: i64,
    pub reading: String,
    pub differences: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitSection {
    pub passed: bool,
    /// Set when some limit mode has a pole.
    pub error: Option<String>,
    pub phi_checks: usize,
    pub phi_mismatches: usize,
    pub factors_commute: bool,
    /// Defining relations on the limit module.
    pub relations: Option<RelationsSection>,
    /// Informational: closed-form `x^±` against the limit, single group only.
    pub closed_form: Vec<ClosedFormEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sl2Section {
    pub passed: bool,
    pub failing_sectors: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModeRow {
    pub r: usize,
    pub leading: Vec<String>,
    pub asserted: bool,
    pub grade_dims: Vec<usize>,
    pub chains: Vec<usize>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThxRow {
    pub sector: Vec<usize>,
    pub dim: usize,
    pub expected: Vec<usize>,
    pub predicted_chains: Vec<usize>,
    pub x_matches: bool,
    pub modes: Vec<ModeRow>,
    pub joint_grade_dims: Vec<usize>,
    pub joint_kernel_matches: bool,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThxSection {
    pub passed: bool,
    /// Informational: single-mode kernels equal the joint filtration.
    pub joint_kernel_claim_holds: bool,
    pub sectors: Vec<ThxRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThRow {
    pub sector: Vec<usize>,
    pub monomial: String,
    pub tpoly: Vec<u64>,
    pub sorted: Vec<u64>,
    pub sigma: Vec<usize>,
    pub grade_dims: Vec<usize>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThSection {
    pub passed: bool,
    pub t_one_matches_qchar: bool,
    pub total_dim: u64,
    pub expected_total: u64,
    pub sectors: Vec<ThRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub command: Command,
    pub config: ConfigEcho,
    pub passed: bool,
    pub relations: RelationsSection,
    pub limit: LimitSection,
    pub sl2: Sl2Section,
    pub thx: Option<ThxSection>,
    pub th: Option<ThSection>,
    /// Stages that could not run, with the reason.
    pub errors: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub schema_version: u32,
    pub command: Command,
    pub error: ErrorBody,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Report {
    Relations(RelationsReport),
    Qchar(QcharReport),
    Qtchar(QtcharReport),
    Jordan(JordanReport),
    Verify(VerifyReport),
}

impl Report {
    /// Whether every assertion the command makes held. Character listings
    /// assert nothing.
    pub fn passed(&self) -> bool {
        match self {
            Report::Relations(r) => r.passed,
            Report::Qchar(_) | Report::Qtchar(_) => true,
            Report::Jordan(r) => r.passed,
            Report::Verify(r) => r.passed,
        }
    }
}
