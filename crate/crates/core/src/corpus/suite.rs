//! Runs a suite configuration and renders reports.

use std::fs;
use std::path::Path;

use serde_json::json;

use crate::corpus::builtins::gl2_3;
use crate::corpus::config::{Check, Format, SuiteConfig};
use crate::corpus::spec::Built;
use crate::error::{Error, Result};
use crate::par;
use crate::verify::{
    comporb_check, example_check, fitting_quotient_check, gl_check, profile_check, simple_group_checks,
    structure_check, tate_check, theorem_a_check, theorem_b_check, theorem_c_check, vdovin_check, wolf_check,
    Budgets, CheckRecord, GroupContext, Status,
};

/// Group label used for suite-wide checks.
pub const GLOBAL_GROUP: &str = "global";

pub fn run_check(ctx: &GroupContext, check: &Check) -> Vec<CheckRecord> {
    match check {
        Check::Profile => profile_check(ctx),
        Check::Structure => structure_check(ctx),
        Check::Tate => tate_check(ctx),
        Check::Cor23 => fitting_quotient_check(ctx),
        Check::ThmA => theorem_a_check(ctx),
        Check::ThmB => theorem_b_check(ctx),
        Check::ThmC(p, q) => theorem_c_check(ctx, *p, *q),
        Check::Comporb(pi) => comporb_check(ctx, pi),
        Check::Bgp => simple_group_checks(ctx),
        Check::Gl => gl_check(ctx),
        Check::Example => example_check(ctx),
        Check::Wolf | Check::Vdovin(_) => Vec::new(),
    }
}

fn run_global(check: &Check, budgets: &Budgets) -> Vec<CheckRecord> {
    match check {
        Check::Wolf => vec![match gl2_3() {
            Ok(g) => wolf_check(&g, &budgets.lattice),
            Err(e) => CheckRecord::from_error(GLOBAL_GROUP, "wolf", &e),
        }],
        Check::Vdovin(ns) => ns.iter().map(|&n| vdovin_check(n)).collect(),
        _ => Vec::new(),
    }
}

fn run_group(name: &str, built: &Built, budgets: Budgets, checks: &[&Check]) -> Vec<CheckRecord> {
    let ctx = match GroupContext::new(name, built.group.clone(), budgets) {
        Ok(ctx) => ctx,
        Err(e) => return checks.iter().map(|c| CheckRecord::from_error(name, &c.to_string(), &e)).collect(),
    };
    let ctx = match built.example {
        Some((p, e)) => ctx.with_example(p, e),
        None => ctx,
    };
    checks.iter().flat_map(|c| run_check(&ctx, c)).collect()
}

/// Runs every check on every group. Groups are evaluated in parallel; the
/// result is ordered by corpus position, then check name, with suite-wide
/// checks last. Only configuration problems are errors.
pub fn run_suite(config: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    config.validate()?;
    let built: Vec<(String, Built, Budgets)> = config
        .groups
        .iter()
        .map(|spec| Ok((spec.name(), spec.expr.build()?, spec.overrides.apply(&config.budgets))))
        .collect::<Result<_>>()?;
    let local: Vec<&Check> = config.checks.iter().filter(|c| !c.is_global()).collect();
    let global: Vec<&Check> = config.checks.iter().filter(|c| c.is_global()).collect();
    let mut tasks: Vec<Option<usize>> = Vec::new();
    if !local.is_empty() {
        tasks.extend((0..built.len()).map(Some));
    }
    tasks.extend(global.iter().map(|_| None).take(1));
    let results = par::map(&tasks, |task| match task {
        Some(i) => {
            let (name, b, budgets) = &built[*i];
            run_group(name, b, *budgets, &local)
        }
        None => global.iter().flat_map(|c| run_global(c, &config.budgets)).collect(),
    });
    let mut keyed: Vec<(usize, CheckRecord)> = tasks
        .iter()
        .zip(results)
        .flat_map(|(task, recs)| {
            let index = task.unwrap_or(usize::MAX);
            recs.into_iter().map(move |r| (index, r))
        })
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1.check).cmp(&(b.0, &b.1.check)));
    Ok(keyed.into_iter().map(|(_, r)| r).collect())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(records: &[CheckRecord]) -> Summary {
        let mut s = Summary::default();
        for r in records {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }
}

impl std::fmt::Display for Summary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} pass / {} fail / {} skipped", self.pass, self.fail, self.skipped)
    }
}

/// Short text for the table: the skip reason, or the failed sub-checks.
fn note(r: &CheckRecord) -> String {
    match r.status {
        Status::Skipped => r.detail.get("reason").and_then(|v| v.as_str()).unwrap_or("").to_string(),
        Status::Fail => match r.detail.get("checks").and_then(|v| v.as_object()) {
            Some(checks) => {
                let failed: Vec<&str> =
                    checks.iter().filter(|(_, v)| v.as_bool() == Some(false)).map(|(k, _)| k.as_str()).collect();
                failed.join(", ")
            }
            None => r.detail.get("error").and_then(|v| v.as_str()).unwrap_or("").to_string(),
        },
        Status::Pass => String::new(),
    }
}

pub fn render_text(records: &[CheckRecord]) -> String {
    let rows: Vec<[String; 4]> = records
        .iter()
        .map(|r| [r.group.clone(), r.check.clone(), r.status.to_string(), note(r)])
        .collect();
    let header = ["group", "check", "status", "note"].map(String::from);
    let mut widths = [0usize; 3];
    for row in std::iter::once(&header).chain(&rows) {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(&header).chain(&rows) {
        let line = format!("{:<w0$}  {:<w1$}  {:<w2$}  {}", row[0], row[1], row[2], row[3], w0 = widths[0], w1 = widths[1], w2 = widths[2]);
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out.push_str(&Summary::of(records).to_string());
    out.push('\n');
    out
}

pub fn render_json(records: &[CheckRecord]) -> String {
    let mut s = serde_json::to_string_pretty(&json!(records)).expect("records serialize");
    s.push('\n');
    s
}

/// Renders the report and writes it to `path` when given.
pub fn emit_report(records: &[CheckRecord], format: Format, path: Option<&Path>) -> Result<String> {
    let text = match format {
        Format::Json => render_json(records),
        Format::Text => render_text(records),
    };
    if let Some(path) = path {
        fs::write(path, &text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}
