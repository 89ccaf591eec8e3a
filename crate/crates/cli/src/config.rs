use std::fmt;
use std::str::FromStr;

use qtjordan_core::vmodule::{SpectralConfig, DEFAULT_MAX_DEGREE};
use qtjordan_core::Rational;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Relations,
    Qchar,
    Qtchar,
    Jordan,
    Verify,
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Command::Relations => "relations",
            Command::Qchar => "qchar",
            Command::Qtchar => "qtchar",
            Command::Jordan => "jordan",
            Command::Verify => "verify",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// One `a:multiplicity` entry of `--roots`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSpec {
    pub root: Rational,
    pub multiplicity: usize,
}

/// Parsed command line, before validation against the module constraints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub roots: Vec<RootSpec>,
    pub q: Rational,
    pub alpha_seed: Rational,
    pub truncation: Option<usize>,
    pub window: usize,
    pub max_degree: usize,
    pub format: Format,
}

impl RunConfig {
    /// Defaults: `q = 2`, seed 0, window 2, degree cap 10, text output.
    pub fn new(command: Command, roots: Vec<RootSpec>) -> Self {
        RunConfig {
            command,
            roots,
            q: Rational::from_integer(2.into()),
            alpha_seed: Rational::from_integer(0.into()),
            truncation: None,
            window: 2,
            max_degree: DEFAULT_MAX_DEGREE,
            format: Format::Text,
        }
    }

    pub fn spectral(&self) -> Result<SpectralConfig, CliError> {
        if self.roots.is_empty() {
            return Err(CliError::Config("--roots: at least one root is required".into()));
        }
        let pairs: Vec<(Rational, usize)> = self.roots.iter().map(|r| (r.root.clone(), r.multiplicity)).collect();
        SpectralConfig::from_roots(self.q.clone(), &pairs, &self.alpha_seed, self.truncation, self.max_degree)
            .map_err(|e| CliError::Config(e.to_string()))
    }

    /// `3:1,5:2` style rendering of the roots.
    pub fn roots_string(&self) -> String {
        let parts: Vec<String> = self.roots.iter().map(|r| format!("{}:{}", r.root, r.multiplicity)).collect();
        parts.join(",")
    }
}

/// A rational literal `n` or `p/q`.
pub fn parse_rational(flag: &str, s: &str) -> Result<Rational, CliError> {
    let s = s.trim();
    if let Some((_, d)) = s.split_once('/') {
        if d.trim().trim_start_matches(['+', '-']).chars().all(|c| c == '0') {
            return Err(CliError::Config(format!("{flag}: '{s}' has a zero denominator")));
        }
    }
    Rational::from_str(s).map_err(|_| CliError::Config(format!("{flag}: '{s}' is not a rational literal")))
}

/// Comma-separated `a:multiplicity` entries. Repeated roots are rejected with
/// the positions of both entries.
pub fn parse_roots(s: &str) -> Result<Vec<RootSpec>, CliError> {
    let mut out: Vec<RootSpec> = Vec::new();
    for (k, entry) in s.split(',').enumerate() {
        let pos = k + 1;
        let entry = entry.trim();
        let err = |why: String| CliError::Config(format!("--roots: entry {pos} ('{entry}'): {why}"));
        let Some((a, m)) = entry.split_once(':') else {
            return Err(err("expected a:multiplicity".into()));
        };
        let root = parse_rational("root", a).map_err(|e| err(e.to_string()))?;
        let multiplicity: usize = m
            .trim()
            .parse()
            .ok()
            .filter(|&m| m > 0)
            .ok_or_else(|| err(format!("multiplicity '{}' is not a positive integer", m.trim())))?;
        if root == Rational::from_integer(0.into()) {
            return Err(err("root must be nonzero".into()));
        }
        if let Some(prev) = out.iter().position(|r| r.root == root) {
            return Err(err(format!("root {root} already given in entry {}; merge the multiplicities", prev + 1)));
        }
        out.push(RootSpec { root, multiplicity });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn roots_grammar() {
        let roots = parse_roots("3:1, 5/2:2,-1:3").unwrap();
        assert_eq!(roots.len(), 3);
        assert_eq!(roots[1], RootSpec { root: r(5, 2), multiplicity: 2 });
        assert_eq!(roots[2].root, r(-1, 1));
        for bad in ["3", "3:0", "3:x", "x:1", "0:1", "1/0:1", "3:1,3:2", ""] {
            assert!(parse_roots(bad).is_err(), "{bad}");
        }
        let msg = parse_roots("3:1,4:1,3:2").unwrap_err().to_string();
        assert!(msg.contains("entry 3") && msg.contains("entry 1"), "{msg}");
    }

    #[test]
    fn validation_errors() {
        let mut cfg = RunConfig::new(Command::Relations, parse_roots("3:1,5:1").unwrap());
        assert!(cfg.spectral().is_ok());
        cfg.q = r(1, 1);
        assert!(cfg.spectral().is_err());
        cfg.q = r(2, 1);
        cfg.roots = parse_roots("3:1,12:1").unwrap();
        assert!(cfg.spectral().unwrap_err().to_string().contains("q^2"));
        cfg.roots = parse_roots("1:11").unwrap();
        assert!(cfg.spectral().is_err());
        cfg.max_degree = 11;
        assert!(cfg.spectral().is_ok());
    }
}
