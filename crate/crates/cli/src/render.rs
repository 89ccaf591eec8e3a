use std::fmt::Write;

use qtjordan_core::TPoly;

use crate::report::*;

fn monomial(exps: &[(String, i64)]) -> String {
    if exps.is_empty() {
        return "1".into();
    }
    let parts: Vec<String> = exps
        .iter()
        .map(|(a, e)| if *e == 1 { format!("Y[{a}]") } else { format!("Y[{a}]^{e}") })
        .collect();
    parts.join(" ")
}

fn list<T: ToString>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    parts.join(",")
}

fn sector(v: &[usize]) -> String {
    format!("({})", list(v))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn header(out: &mut String, cmd: &str, c: &ConfigEcho) {
    let roots: Vec<String> = c.roots.iter().map(|r| format!("{}:{}", r.root, r.multiplicity)).collect();
    let _ = writeln!(
        out,
        "{cmd} roots={} q={} alpha-seed={} window={} truncation={}",
        roots.join(","),
        c.q,
        c.alpha_seed,
        c.window,
        c.truncation
    );
}

fn relations_lines(out: &mut String, indent: &str, r: &RelationsSection) {
    for s in &r.summary {
        let _ = writeln!(out, "{indent}{:<8} {:>6} checks {:>4} failed", s.relation, s.checks, s.failures);
    }
    for f in &r.failures {
        let _ = writeln!(
            out,
            "{indent}  failed {} signs [{}] modes [{}] first residual ({}, {}) = {}",
            f.relation,
            f.signs.join(","),
            list(&f.indices),
            f.row,
            f.col,
            f.value
        );
    }
}

// left-aligned columns sized to their widest cell
fn table(out: &mut String, rows: &[Vec<String>]) {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..ncols).map(|j| rows.iter().filter_map(|r| r.get(j)).map(|c| c.chars().count()).max().unwrap_or(0)).collect();
    for r in rows {
        let mut line = String::new();
        for (j, c) in r.iter().enumerate() {
            if j + 1 == r.len() {
                line.push_str(c);
            } else {
                let _ = write!(line, "{c:<w$}  ", w = widths[j]);
            }
        }
        let _ = writeln!(out, "{}", line.trim_end());
    }
}

pub fn text(report: &Report) -> String {
    let mut out = String::new();
    match report {
        Report::Relations(r) => {
            header(&mut out, "relations", &r.config);
            relations_lines(&mut out, "  ", &r.relations);
            let _ = writeln!(out, "result: {}", verdict(r.passed));
        }
        Report::Qchar(r) => {
            for m in &r.monomials {
                let _ = writeln!(out, "{} : {}", monomial(&m.exponents), m.multiplicity);
            }
        }
        Report::Qtchar(r) => {
            for m in &r.monomials {
                let _ = writeln!(out, "{} : {}", monomial(&m.exponents), TPoly::from_coeffs(m.tpoly.clone()));
            }
        }
        Report::Jordan(r) => {
            header(&mut out, "jordan", &r.config);
            let mut rows = vec![["sector", "dim", "chains", "grade dims", "expected", "ok"].map(String::from).to_vec()];
            for s in &r.sectors {
                rows.push(vec![
                    sector(&s.sector),
                    s.dim.to_string(),
                    list(&s.chains),
                    list(&s.grade_dims),
                    list(&s.expected),
                    if s.matches { "yes" } else { "NO" }.into(),
                ]);
            }
            table(&mut out, &rows);
            let _ = writeln!(out, "result: {}", verdict(r.passed));
        }
        Report::Verify(r) => verify_text(&mut out, r),
    }
    out
}

fn verify_text(out: &mut String, r: &VerifyReport) {
    header(out, "verify", &r.config);
    let total: usize = r.relations.summary.iter().map(|s| s.checks).sum();
    let _ = writeln!(out, "  relations  {}  {total} checks on the generic module", verdict(r.relations.passed));
    relations_lines(out, "    ", &r.relations);

    let l = &r.limit;
    match &l.error {
        Some(e) => {
            let _ = writeln!(out, "  limit      FAIL  {e}");
        }
        None => {
            let rel_checks: usize = l.relations.iter().flat_map(|s| &s.summary).map(|s| s.checks).sum();
            let _ = writeln!(
                out,
                "  limit      {}  phi modes {}/{} agree, Pieri factors commute: {}, {rel_checks} relation checks",
                verdict(l.passed),
                l.phi_checks - l.phi_mismatches,
                l.phi_checks,
                l.factors_commute
            );
            if let Some(rel) = &l.relations {
                if !rel.passed {
                    relations_lines(out, "    ", rel);
                }
            }
            if !l.closed_form.is_empty() {
                let agree = l.closed_form.iter().filter(|c| c.differences == 0).count();
                let _ = writeln!(out, "    closed-form x modes (info): {agree}/{} agree with the limit", l.closed_form.len());
            }
        }
    }

    if r.sl2.passed {
        let _ = writeln!(out, "  sl2        pass");
    } else {
        let bad: Vec<String> = r.sl2.failing_sectors.iter().map(|s| sector(s)).collect();
        let _ = writeln!(out, "  sl2        FAIL  on {}", bad.join(" "));
    }

    match &r.thx {
        Some(t) => {
            let asserted: usize = t.sectors.iter().flat_map(|s| &s.modes).filter(|m| m.asserted).count();
            let _ = writeln!(out, "  thx        {}  {} sectors, {asserted} mode checks asserted", verdict(t.passed), t.sectors.len());
            for s in t.sectors.iter().filter(|s| !s.passed) {
                let modes: Vec<String> =
                    s.modes.iter().map(|m| format!("r={} grades {} ({})", m.r, list(&m.grade_dims), verdict(!m.asserted || m.matches))).collect();
                let _ = writeln!(
                    out,
                    "    {} expected {} X chains ok: {}; {}",
                    sector(&s.sector),
                    list(&s.expected),
                    s.x_matches,
                    modes.join("; ")
                );
            }
            let finer: Vec<String> = t.sectors.iter().filter(|s| !s.joint_kernel_matches).map(|s| sector(&s.sector)).collect();
            if finer.is_empty() {
                let _ = writeln!(out, "    joint kernel filtration (info): equals ker (psi+_1)^k on every sector");
            } else {
                let _ = writeln!(out, "    joint kernel filtration (info): finer on {}", finer.join(" "));
            }
        }
        None => {
            let _ = writeln!(out, "  thx        FAIL  not run");
        }
    }
    match &r.th {
        Some(t) => {
            let _ = writeln!(
                out,
                "  th         {}  t=1 equals q-character: {}, total dimension {} (expected {})",
                verdict(t.passed),
                t.t_one_matches_qchar,
                t.total_dim,
                t.expected_total
            );
            for s in t.sectors.iter().filter(|s| !s.passed) {
                let _ = writeln!(out, "    {} {} sorted {} grades {}", sector(&s.sector), s.monomial, list(&s.sorted), list(&s.grade_dims));
            }
        }
        None => {
            let _ = writeln!(out, "  th         FAIL  not run");
        }
    }
    for e in &r.errors {
        let _ = writeln!(out, "  error: {e}");
    }
    let _ = writeln!(out, "result: {}", verdict(r.passed));
}
