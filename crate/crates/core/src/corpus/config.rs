//! Check names and suite configuration.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::corpus::spec::GroupExpr;
use crate::error::{Error, Result};
use crate::invariants::is_prime;
use crate::verify::Budgets;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    Profile,
    Structure,
    Tate,
    Cor23,
    ThmA,
    ThmB,
    ThmC(u64, u64),
    Comporb(Vec<u64>),
    Bgp,
    Gl,
    Example,
    Wolf,
    Vdovin(Vec<usize>),
}

/// The checks `all` expands to.
pub const ALL_CHECKS: &str =
    "profile,structure,tate,cor23,thmA,thmB,thmC(2,3),thmC(2,5),comporb(2),comporb(2,3),comporb(2,5),comporb(2,3,5),bgp,gl,example,wolf,vdovin(3,4,5,6,7,8)";

impl Check {
    /// Checks evaluated once per suite rather than once per group.
    pub fn is_global(&self) -> bool {
        matches!(self, Check::Wolf | Check::Vdovin(_))
    }

    /// Parses a comma-separated list; commas inside parentheses belong to the
    /// check's parameters. `all` expands to [`ALL_CHECKS`].
    pub fn parse_list(text: &str) -> Result<Vec<Check>> {
        let mut out: Vec<Check> = Vec::new();
        let mut depth = 0i32;
        let mut start = 0;
        let mut items = Vec::new();
        for (i, c) in text.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    items.push(&text[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
            if depth < 0 {
                return Err(Error::Config(format!("unbalanced parentheses in check list {text:?}")));
            }
        }
        if depth != 0 {
            return Err(Error::Config(format!("unbalanced parentheses in check list {text:?}")));
        }
        items.push(&text[start..]);
        for item in items.into_iter().map(str::trim).filter(|s| !s.is_empty()) {
            let parsed = if item == "all" { Check::parse_list(ALL_CHECKS)? } else { vec![item.parse()?] };
            for c in parsed {
                if !out.contains(&c) {
                    out.push(c);
                }
            }
        }
        Ok(out)
    }
}

fn parse_params(name: &str, body: &str) -> Result<Vec<u64>> {
    body.split(',')
        .map(|s| {
            s.trim().parse::<u64>().map_err(|_| Error::Config(format!("{name}: invalid parameter {:?}", s.trim())))
        })
        .collect()
}

fn primes(name: &str, ps: &[u64]) -> Result<()> {
    if ps.is_empty() {
        return Err(Error::Config(format!("{name}: needs at least one prime")));
    }
    match ps.iter().find(|&&p| !is_prime(p)) {
        Some(p) => Err(Error::Config(format!("{name}: {p} is not prime"))),
        None => Ok(()),
    }
}

impl std::str::FromStr for Check {
    type Err = Error;

    fn from_str(text: &str) -> Result<Check> {
        let text = text.trim();
        let (name, params) = match text.split_once('(') {
            Some((n, rest)) => {
                let body = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Config(format!("check {text:?}: missing ')'")))?;
                (n.trim(), Some(parse_params(n.trim(), body)?))
            }
            None => (text, None),
        };
        let plain = |c: Check| match &params {
            None => Ok(c),
            Some(_) => Err(Error::Config(format!("check {name} takes no parameters"))),
        };
        match name {
            "profile" => plain(Check::Profile),
            "structure" => plain(Check::Structure),
            "tate" => plain(Check::Tate),
            "cor23" => plain(Check::Cor23),
            "thmA" => plain(Check::ThmA),
            "thmB" => plain(Check::ThmB),
            "bgp" => plain(Check::Bgp),
            "gl" => plain(Check::Gl),
            "example" => plain(Check::Example),
            "wolf" => plain(Check::Wolf),
            "thmC" => match params.as_deref() {
                Some(&[p, q]) if p != q => {
                    primes(name, &[p, q])?;
                    Ok(Check::ThmC(p, q))
                }
                _ => Err(Error::Config("thmC takes two distinct primes, e.g. thmC(2,3)".into())),
            },
            "comporb" => {
                let mut ps = params.ok_or_else(|| Error::Config("comporb takes a prime set, e.g. comporb(2,3)".into()))?;
                primes(name, &ps)?;
                ps.sort_unstable();
                ps.dedup();
                Ok(Check::Comporb(ps))
            }
            "vdovin" => {
                let ns = params.ok_or_else(|| Error::Config("vdovin takes degrees, e.g. vdovin(3,4,5)".into()))?;
                Ok(Check::Vdovin(ns.into_iter().map(|n| n as usize).collect()))
            }
            _ => Err(Error::Config(format!(
                "unknown check {name:?}; known: profile, structure, tate, cor23, thmA, thmB, thmC(p,q), comporb(π), bgp, gl, example, wolf, vdovin(n,...), all"
            ))),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        match self {
            Check::Profile => write!(f, "profile"),
            Check::Structure => write!(f, "structure"),
            Check::Tate => write!(f, "tate"),
            Check::Cor23 => write!(f, "cor23"),
            Check::ThmA => write!(f, "thmA"),
            Check::ThmB => write!(f, "thmB"),
            Check::ThmC(p, q) => write!(f, "thmC({p},{q})"),
            Check::Comporb(pi) => write!(f, "comporb({})", join(pi)),
            Check::Bgp => write!(f, "bgp"),
            Check::Gl => write!(f, "gl"),
            Check::Example => write!(f, "example"),
            Check::Wolf => write!(f, "wolf"),
            Check::Vdovin(ns) => {
                write!(f, "vdovin({})", join(&ns.iter().map(|&n| n as u64).collect::<Vec<_>>()))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Text,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(Error::Config(format!("unknown format {s:?}; expected json or text"))),
        }
    }
}

/// Optional replacements for individual budget fields.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BudgetOverrides {
    pub max_order: Option<u64>,
    pub normal: Option<u64>,
    pub aut: Option<u64>,
    pub lattice_subgroups: Option<usize>,
    pub lattice_order: Option<usize>,
    pub min_generators: Option<u64>,
}

impl BudgetOverrides {
    pub fn apply(&self, base: &Budgets) -> Budgets {
        let mut b = *base;
        if let Some(v) = self.max_order {
            b.max_order = v as u128;
        }
        if let Some(v) = self.normal {
            b.normal = v as u128;
        }
        if let Some(v) = self.aut {
            b.aut = v as u128;
        }
        if let Some(v) = self.lattice_subgroups {
            b.lattice.max_subgroups = v;
        }
        if let Some(v) = self.lattice_order {
            b.lattice.max_order = v;
        }
        if let Some(v) = self.min_generators {
            b.min_generators = v as u128;
        }
        b
    }
}

/// One corpus entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub expr: GroupExpr,
    pub overrides: BudgetOverrides,
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec> {
        Ok(GroupSpec { expr: GroupExpr::parse(text)?, overrides: BudgetOverrides::default() })
    }

    pub fn name(&self) -> String {
        self.expr.to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub groups: Vec<GroupSpec>,
    pub checks: Vec<Check>,
    pub budgets: Budgets,
    pub format: Format,
    pub out: Option<PathBuf>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GroupEntry {
    Expr(String),
    Full {
        group: Option<String>,
        file: Option<PathBuf>,
        #[serde(default)]
        budgets: BudgetOverrides,
    },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CheckList {
    One(String),
    Many(Vec<String>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    groups: Vec<GroupEntry>,
    #[serde(default)]
    checks: Option<CheckList>,
    #[serde(default)]
    budgets: BudgetOverrides,
    #[serde(default)]
    format: Option<String>,
    #[serde(default)]
    out: Option<PathBuf>,
}

impl SuiteConfig {
    pub fn new(groups: Vec<GroupSpec>, checks: Vec<Check>) -> SuiteConfig {
        SuiteConfig { groups, checks, budgets: Budgets::default(), format: Format::Json, out: None }
    }

    /// Parses a JSON config. Relative group-file paths resolve against
    /// `base_dir`.
    pub fn from_json(text: &str, base_dir: &Path, origin: &str) -> Result<SuiteConfig> {
        let file: ConfigFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            location: format!("{origin}: line {}, column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        let resolve = |expr: GroupExpr| match expr {
            GroupExpr::File(p) if p.is_relative() => GroupExpr::File(base_dir.join(p)),
            other => other,
        };
        let mut groups = Vec::new();
        for (i, entry) in file.groups.into_iter().enumerate() {
            let spec = match entry {
                GroupEntry::Expr(s) => GroupSpec { expr: resolve(GroupExpr::parse(&s)?), overrides: Default::default() },
                GroupEntry::Full { group: Some(g), file: None, budgets } => {
                    GroupSpec { expr: resolve(GroupExpr::parse(&g)?), overrides: budgets }
                }
                GroupEntry::Full { group: None, file: Some(f), budgets } => {
                    GroupSpec { expr: resolve(GroupExpr::File(f)), overrides: budgets }
                }
                GroupEntry::Full { .. } => {
                    return Err(Error::Parse {
                        location: format!("{origin}: field groups[{i}]"),
                        message: "needs exactly one of group or file".into(),
                    })
                }
            };
            groups.push(spec);
        }
        let checks = match file.checks {
            None => Vec::new(),
            Some(CheckList::One(s)) => Check::parse_list(&s)?,
            Some(CheckList::Many(v)) => Check::parse_list(&v.join(","))?,
        };
        let config = SuiteConfig {
            groups,
            checks,
            budgets: file.budgets.apply(&Budgets::default()),
            format: file.format.as_deref().map(str::parse).transpose()?.unwrap_or_default(),
            out: file.out,
        };
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<SuiteConfig> {
        let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let base = path.parent().unwrap_or(Path::new("."));
        SuiteConfig::from_json(&text, base, &path.display().to_string())
    }

    /// The pinned default corpus with every check.
    pub fn default_corpus() -> SuiteConfig {
        let mut c = SuiteConfig::from_json(DEFAULT_CORPUS, Path::new("."), "default corpus")
            .expect("pinned corpus parses");
        if c.checks.is_empty() {
            c.checks = Check::parse_list("all").expect("check list parses");
        }
        c
    }

    pub fn validate(&self) -> Result<()> {
        if self.groups.is_empty() && self.checks.iter().any(|c| !c.is_global()) {
            return Err(Error::Config("no groups given".into()));
        }
        if self.checks.is_empty() {
            return Err(Error::Config("no checks given".into()));
        }
        let b = &self.budgets;
        let all = self.groups.iter().map(|g| g.overrides.apply(b)).chain([*b]);
        for b in all {
            let positive = b.max_order > 0
                && b.normal > 0
                && b.aut > 0
                && b.lattice.max_subgroups > 0
                && b.lattice.max_order > 0
                && b.min_generators > 0;
            if !positive {
                return Err(Error::Config("budgets must be positive".into()));
            }
        }
        Ok(())
    }
}

/// The default corpus, pinned in the repository.
pub const DEFAULT_CORPUS: &str = include_str!("../../corpus/default.json");
