use qtjordan_core::chars::{qchar_standard, qtchar_standard, sector_monomial, verify_theorem_th, YMonomial};
use qtjordan_core::coincident::{verify_limit_consistency, CoefficientReading, LimitModule};
use qtjordan_core::jordan::{
    jordan_oracle, psi_mode, verify_sector_thx, xyh_maps, CartanModes, LWeightSpace, PhiSource, SectorThx, ThxOptions,
    ThxReport,
};
use qtjordan_core::vmodule::{verify_relations, Basis, RelationReport, SpectralConfig, VModule};
use qtjordan_core::{Error, Sign};
use rayon::prelude::*;

use crate::config::{Command, RunConfig};
use crate::report::*;
use crate::CliError;

const MAX_LISTED_FAILURES: usize = 20;

fn exponents(m: &YMonomial) -> Vec<(String, i64)> {
    m.exponents().map(|(a, e)| (a.to_string(), e)).collect()
}

fn relations_section(rep: &RelationReport) -> RelationsSection {
    RelationsSection {
        passed: rep.passed(),
        summary: rep
            .summary()
            .into_iter()
            .map(|(rel, checks, failures)| RelationSummary { relation: rel.to_string(), checks, failures })
            .collect(),
        failures: rep
            .failures()
            .take(MAX_LISTED_FAILURES)
            .map(|c| {
                let res = c.residual.as_ref().expect("failed check has a residual");
                RelationFailure {
                    relation: c.relation.to_string(),
                    signs: c.signs.iter().map(ToString::to_string).collect(),
                    indices: c.indices.clone(),
                    row: res.row,
                    col: res.col,
                    value: res.value.clone(),
                }
            })
            .collect(),
    }
}

// sectors in basis order, each monomial listed once
fn sector_monomials(cfg: &SpectralConfig) -> Vec<YMonomial> {
    let basis = Basis::new(&cfg.group_sizes());
    let mut out: Vec<YMonomial> = Vec::new();
    for (sector, _) in basis.sectors() {
        let m = sector_monomial(cfg, sector);
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out
}

/// Defining relations on the V-basis module at a generic rational `ε`.
pub fn cmd_relations(run: &RunConfig) -> Result<RelationsReport, CliError> {
    let cfg = run.spectral()?;
    let v = VModule::specialized(&cfg);
    let rel = relations_section(&verify_relations(&v, run.window, cfg.truncation()));
    Ok(RelationsReport {
        schema_version: SCHEMA_VERSION,
        command: Command::Relations,
        config: ConfigEcho::new(run, cfg.truncation()),
        passed: rel.passed,
        relations: rel,
    })
}

pub fn cmd_qchar(run: &RunConfig) -> Result<QcharReport, CliError> {
    let cfg = run.spectral()?;
    let chi = qchar_standard(&cfg);
    let monomials = sector_monomials(&cfg)
        .into_iter()
        .map(|m| QcharTerm { multiplicity: chi.get(&m).copied().unwrap_or(0), exponents: exponents(&m) })
        .collect();
    Ok(QcharReport {
        schema_version: SCHEMA_VERSION,
        command: Command::Qchar,
        config: ConfigEcho::new(run, cfg.truncation()),
        monomials,
    })
}

pub fn cmd_qtchar(run: &RunConfig) -> Result<QtcharReport, CliError> {
    let cfg = run.spectral()?;
    let chi = qtchar_standard(&cfg);
    let monomials = sector_monomials(&cfg)
        .into_iter()
        .map(|m| QtcharTerm {
            tpoly: chi.get(&m).map(|p| p.coeffs().to_vec()).unwrap_or_default(),
            exponents: exponents(&m),
        })
        .collect();
    Ok(QtcharReport {
        schema_version: SCHEMA_VERSION,
        command: Command::Qtchar,
        config: ConfigEcho::new(run, cfg.truncation()),
        monomials,
    })
}

/// Jordan type of `ψ^+_1` on every l-weight space of the coincident module.
pub fn cmd_jordan(run: &RunConfig) -> Result<JordanReport, CliError> {
    let cfg = run.spectral()?;
    let cartan = CartanModes::build(&cfg, 1, PhiSource::Limit).map_err(Error::from)?;
    let spaces = LWeightSpace::all(&cfg);
    let sectors = spaces
        .par_iter()
        .map(|sp| -> Result<JordanRow, Error> {
            let profile = jordan_oracle(&psi_mode(sp, &cartan, Sign::Plus, 1)?)?;
            let mut expected: Vec<usize> = sp.gaussian_product().coeffs().iter().map(|&c| c as usize).collect();
            expected.sort_unstable_by(|a, b| b.cmp(a));
            Ok(JordanRow {
                sector: sp.sector().0.clone(),
                dim: sp.dim(),
                matches: profile.grade_dims == expected,
                chains: profile.chain_lengths,
                grade_dims: profile.grade_dims,
                expected,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(JordanReport {
        schema_version: SCHEMA_VERSION,
        command: Command::Jordan,
        config: ConfigEcho::new(run, cfg.truncation()),
        passed: sectors.iter().all(|r| r.matches),
        sectors,
    })
}

// The window's relations involve Cartan modes up to 2·window + 1 only; the
// full truncation is exercised on the generic module.
fn limit_section(cfg: &SpectralConfig, window: usize) -> LimitSection {
    let order = 2 * window + 1;
    let lim = match LimitModule::build(cfg, window, order) {
        Ok(l) => l,
        Err(e) => {
            return LimitSection {
                passed: false,
                error: Some(e.to_string()),
                phi_checks: 0,
                phi_mismatches: 0,
                factors_commute: false,
                relations: None,
                closed_form: Vec::new(),
            }
        }
    };
    let cons = verify_limit_consistency(&lim, window);
    let rel = relations_section(&verify_relations(&lim, window, order));
    LimitSection {
        passed: cons.passed() && rel.passed,
        error: None,
        phi_checks: cons.phi.len(),
        phi_mismatches: cons.phi.iter().filter(|c| !c.equal).count(),
        factors_commute: cons.factors_commute,
        relations: Some(rel),
        closed_form: cons
            .x
            .iter()
            .map(|x| ClosedFormEntry {
                which: format!("x{}", x.which),
                t: x.t,
                reading: match x.reading {
                    CoefficientReading::UpperForMinus => "upper-for-minus".into(),
                    CoefficientReading::LowerForMinus => "lower-for-minus".into(),
                },
                differences: x.differences.len(),
            })
            .collect(),
    }
}

fn thx_row(s: &SectorThx) -> ThxRow {
    ThxRow {
        sector: s.sector.0.clone(),
        dim: s.dim,
        expected: s.expected.clone(),
        predicted_chains: s.predicted_chains.clone(),
        x_matches: s.x_matches,
        modes: s
            .modes
            .iter()
            .map(|m| ModeRow {
                r: m.r,
                leading: m.leading.iter().map(ToString::to_string).collect(),
                asserted: m.asserted,
                grade_dims: m.profile.grade_dims.clone(),
                chains: m.profile.chain_lengths.clone(),
                matches: m.matches,
            })
            .collect(),
        joint_grade_dims: s.joint_grade_dims.clone(),
        joint_kernel_matches: s.joint_kernel_matches,
        passed: s.passed(),
    }
}

/// Sector-parallel version of the Jordan-type theorem check.
pub fn thx_parallel(cfg: &SpectralConfig, opts: &ThxOptions) -> Result<ThxReport, Error> {
    let order = opts.modes.iter().copied().max().unwrap_or(1).max(opts.window);
    let cartan = CartanModes::build(cfg, order, opts.source)?;
    let sectors = LWeightSpace::all(cfg)
        .par_iter()
        .map(|sp| verify_sector_thx(sp, &cartan, opts))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ThxReport { sectors })
}

/// Relations, limit consistency, sl2 structure, the Jordan-type theorem and
/// the q,t-character theorem.
pub fn cmd_verify(run: &RunConfig) -> Result<VerifyReport, CliError> {
    let cfg = run.spectral()?;
    let mut errors = Vec::new();
    let relations = relations_section(&verify_relations(&VModule::specialized(&cfg), run.window, cfg.truncation()));
    let limit = limit_section(&cfg, run.window);
    let spaces = LWeightSpace::all(&cfg);
    let failing_sectors: Vec<Vec<usize>> = spaces
        .par_iter()
        .filter(|sp| !xyh_maps(sp).relations_hold())
        .map(|sp| sp.sector().0.clone())
        .collect();
    let sl2 = Sl2Section { passed: failing_sectors.is_empty(), failing_sectors };
    let opts = ThxOptions { window: run.window, ..ThxOptions::default() };
    let (thx, th) = match thx_parallel(&cfg, &opts) {
        Ok(rep) => {
            let th = verify_theorem_th(&cfg, &rep);
            let th = ThSection {
                passed: th.passed(),
                t_one_matches_qchar: th.t_one_matches_qchar,
                total_dim: th.total_dim,
                expected_total: th.expected_total,
                sectors: th
                    .sectors
                    .iter()
                    .map(|s| ThRow {
                        sector: s.sector.0.clone(),
                        monomial: s.monomial.to_string(),
                        tpoly: s.tpoly.coeffs().to_vec(),
                        sorted: s.sorted.clone(),
                        sigma: s.sigma.clone(),
                        grade_dims: s.grade_dims.clone(),
                        passed: s.passed,
                    })
                    .collect(),
            };
            let thx = ThxSection {
                passed: rep.passed(),
                joint_kernel_claim_holds: rep.joint_kernel_claim_holds(),
                sectors: rep.sectors.iter().map(thx_row).collect(),
            };
            (Some(thx), Some(th))
        }
        Err(e) => {
            errors.push(format!("thx: {e}"));
            (None, None)
        }
    };
    let passed = relations.passed
        && limit.passed
        && sl2.passed
        && thx.as_ref().is_some_and(|t| t.passed)
        && th.as_ref().is_some_and(|t| t.passed);
    Ok(VerifyReport {
        schema_version: SCHEMA_VERSION,
        command: Command::Verify,
        config: ConfigEcho::new(run, cfg.truncation()),
        passed,
        relations,
        limit,
        sl2,
        thx,
        th,
        errors,
    })
}

pub fn run(run: &RunConfig) -> Result<Report, CliError> {
    Ok(match run.command {
        Command::Relations => Report::Relations(cmd_relations(run)?),
        Command::Qchar => Report::Qchar(cmd_qchar(run)?),
        Command::Qtchar => Report::Qtchar(cmd_qtchar(run)?),
        Command::Jordan => Report::Jordan(cmd_jordan(run)?),
        Command::Verify => Report::Verify(cmd_verify(run)?),
    })
}
