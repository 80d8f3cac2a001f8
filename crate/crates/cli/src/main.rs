use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use frattini_lab::corpus::{emit_report, Check, Format, GroupExpr, GroupSpec, Summary, SuiteConfig};
use frattini_lab::invariants::{composition_factors, fitting, frattini, structure_predicates};
use frattini_lab::verify::{vdovin_check, Budgets, GroupContext, Status};
use frattini_lab::{par, Error};

/// Verification harness for Frattini-subgroup bounds on small permutation groups.
#[derive(Parser)]
#[command(name = "frattini-lab", version, about)]
struct Cli {
    /// Run everything on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite (the default corpus unless groups are given).
    Verify(VerifyArgs),
    /// Print the invariant profile of one group.
    Info(InfoArgs),
    /// Run a standalone oracle.
    #[command(subcommand)]
    Oracle(Oracle),
}

#[derive(Args)]
struct BudgetArgs {
    /// Largest group order that is enumerated.
    #[arg(long)]
    max_order: Option<u64>,
    /// Largest group order for the automorphism search.
    #[arg(long)]
    aut_budget: Option<u64>,
    /// Largest number of subgroups in a lattice enumeration.
    #[arg(long)]
    lattice_budget: Option<usize>,
}

impl BudgetArgs {
    fn apply(&self, b: &mut Budgets) {
        if let Some(v) = self.max_order {
            b.max_order = v as u128;
            b.normal = b.normal.max(v as u128);
        }
        if let Some(v) = self.aut_budget {
            b.aut = v as u128;
        }
        if let Some(v) = self.lattice_budget {
            b.lattice.max_subgroups = v;
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// JSON suite configuration.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Group expression such as `sym(4)` or `file:group.json`; repeatable.
    #[arg(long = "group")]
    groups: Vec<String>,
    /// Comma-separated checks, e.g. `tate,thmA,thmC(2,3)`, or `all`.
    #[arg(long)]
    checks: Option<String>,
    #[command(flatten)]
    budgets: BudgetArgs,
    /// Report format: json or text.
    #[arg(long)]
    format: Option<String>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct InfoArgs {
    /// Group expression.
    group: String,
    #[command(flatten)]
    budgets: BudgetArgs,
    /// Output format: json or text.
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Subcommand)]
enum Oracle {
    /// Largest nilpotent subgroup of Sym(n).
    Vdovin { n: usize },
}

/// Configuration problems, reported with exit code 2.
struct ConfigError(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for ConfigError {
    fn from(e: E) -> Self {
        ConfigError(e.into())
    }
}

fn suite_config(args: &VerifyArgs) -> Result<SuiteConfig, ConfigError> {
    let mut config = match &args.config {
        Some(path) => SuiteConfig::load(path)?,
        None if args.groups.is_empty() => SuiteConfig::default_corpus(),
        None => SuiteConfig::new(Vec::new(), Vec::new()),
    };
    if !args.groups.is_empty() {
        config.groups = args.groups.iter().map(|g| GroupSpec::parse(g)).collect::<Result<_, _>>()?;
    }
    match &args.checks {
        Some(list) => config.checks = Check::parse_list(list)?,
        None if config.checks.is_empty() => config.checks = Check::parse_list("all")?,
        None => {}
    }
    args.budgets.apply(&mut config.budgets);
    if let Some(f) = &args.format {
        config.format = f.parse()?;
    }
    if args.out.is_some() {
        config.out = args.out.clone();
    }
    config.validate()?;
    Ok(config)
}

fn verify(args: &VerifyArgs) -> Result<ExitCode, ConfigError> {
    let config = suite_config(args)?;
    let records = frattini_lab::corpus::run_suite(&config)?;
    let text = emit_report(&records, config.format, config.out.as_deref())?;
    let summary = Summary::of(&records);
    match &config.out {
        Some(path) => eprintln!("{summary} -> {}", path.display()),
        None => print!("{text}"),
    }
    Ok(ExitCode::from(exit_status(&summary)))
}

/// 0 when nothing failed, 1 otherwise. Skips never fail a run.
fn exit_status(summary: &Summary) -> u8 {
    u8::from(summary.fail > 0)
}

fn info(args: &InfoArgs) -> Result<ExitCode, ConfigError> {
    let format: Format = args.format.parse()?;
    let spec = GroupExpr::parse(&args.group)?;
    let built = spec.build()?;
    let mut budgets = Budgets::default();
    args.budgets.apply(&mut budgets);
    let degree = built.group.degree();
    let ctx = GroupContext::new(spec.to_string(), built.group, budgets)?;
    let profile = ctx.profile();
    let show = |r: frattini_lab::Result<String>| r.unwrap_or_else(|e| format!("skipped ({e})"));
    let pred = structure_predicates(&ctx.g, budgets.normal);
    let fit = fitting(&ctx.g).order();
    let phi = show(frattini(&ctx.g, &budgets.lattice).map(|p| p.order().to_string()));
    let comp = show(composition_factors(&ctx.g, budgets.normal).map(|c| {
        c.factor_orders().iter().map(u128::to_string).collect::<Vec<_>>().join(", ")
    }));
    let d_p: Vec<String> = profile.d_p.iter().map(|(p, d)| format!("d_{p} = {d}")).collect();
    match format {
        Format::Json => {
            let v = json!({
                "group": ctx.name,
                "degree": degree,
                "order": profile.order.to_string(),
                "d_p": profile.d_p.iter().map(|(p, d)| (p.to_string(), json!(d))).collect::<serde_json::Map<_, _>>(),
                "d_sigma": profile.d_sigma,
                "d_max": profile.d_max,
                "p_max": profile.p_max,
                "nilpotent": pred.as_ref().ok().map(|p| p.nilpotent),
                "soluble": pred.as_ref().ok().map(|p| p.soluble),
                "simple": pred.as_ref().ok().map(|p| p.simple),
                "fitting_order": fit,
                "frattini_order": phi,
                "composition_factors": comp,
            });
            println!("{}", serde_json::to_string_pretty(&v).expect("serializes"));
        }
        Format::Text => {
            println!("group             {}", ctx.name);
            println!("degree            {degree}");
            println!("order             {}", profile.order);
            println!("sylow ranks       {}", d_p.join(", "));
            println!("d_sigma           {}", profile.d_sigma);
            println!("d_max             {}", profile.d_max);
            println!("p_max             {}", profile.p_max);
            match &pred {
                Ok(p) => println!("nilpotent/soluble/simple  {}/{}/{}", p.nilpotent, p.soluble, p.simple),
                Err(e) => println!("structure         skipped ({e})"),
            }
            println!("|F(G)|            {fit}");
            println!("|Phi(G)|          {phi}");
            println!("composition       {comp}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn oracle(cmd: &Oracle) -> Result<ExitCode, ConfigError> {
    match cmd {
        Oracle::Vdovin { n } => {
            let record = vdovin_check(*n);
            println!("{}", serde_json::to_string_pretty(&record).context("serializing record")?);
            Ok(if record.status == Status::Fail { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
    }
}

fn configure_threads() -> Result<(), ConfigError> {
    if let Ok(value) = std::env::var("FRATTINI_LAB_THREADS") {
        let n: usize = value
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Error::Config(format!("FRATTINI_LAB_THREADS must be a positive integer, got {value:?}")))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("configuring the thread pool")?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| {
        par::set_enabled(!cli.sequential);
        match &cli.command {
            Command::Verify(args) => verify(args),
            Command::Info(args) => info(args),
            Command::Oracle(cmd) => oracle(cmd),
        }
    });
    match result {
        Ok(code) => code,
        Err(ConfigError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_set_the_exit_status() {
        let summary = |pass, fail, skipped| Summary { pass, fail, skipped };
        assert_eq!(exit_status(&summary(3, 0, 0)), 0);
        assert_eq!(exit_status(&summary(0, 0, 4)), 0);
        assert_eq!(exit_status(&summary(3, 1, 2)), 1);
    }
}
