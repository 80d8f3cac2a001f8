//! Group expressions such as `swap_product(alt(5))` and their evaluation.

use std::fmt;
use std::path::PathBuf;

use crate::corpus::builtins::{self, REGISTRY};
use crate::corpus::file::load_group;
use crate::error::{Error, Result};
use crate::perm::Group;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arg {
    Int(u64),
    Group(GroupExpr),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupExpr {
    Builtin { name: String, args: Vec<Arg> },
    File(PathBuf),
}

/// A constructed group and, for the semilinear example family, its `(p, e)`.
#[derive(Clone, Debug)]
pub struct Built {
    pub group: Group,
    pub example: Option<(u64, u32)>,
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arg::Int(n) => write!(f, "{n}"),
            Arg::Group(g) => write!(f, "{g}"),
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Builtin { name, args } if args.is_empty() => write!(f, "{name}"),
            GroupExpr::Builtin { name, args } => {
                let parts: Vec<String> = args.iter().map(Arg::to_string).collect();
                write!(f, "{name}({})", parts.join(","))
            }
            GroupExpr::File(path) => write!(f, "file:{}", path.display()),
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { location: format!("column {} of {:?}", self.pos + 1, self.text), message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.text[self.pos..].chars().next().filter(|&c| pred(c)) {
            self.pos += c.len_utf8();
        }
        &self.text[start..self.pos]
    }

    fn expr(&mut self) -> Result<GroupExpr> {
        let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
        if name.is_empty() || !name.starts_with(|c: char| c.is_ascii_alphabetic()) {
            return Err(self.error("expected a group name"));
        }
        let mut args = Vec::new();
        if self.eat('(') {
            loop {
                match self.peek() {
                    Some(c) if c.is_ascii_digit() => {
                        let digits = self.take_while(|c| c.is_ascii_digit());
                        let n = digits.parse().map_err(|_| self.error("integer out of range"))?;
                        args.push(Arg::Int(n));
                    }
                    Some(_) => args.push(Arg::Group(self.expr()?)),
                    None => return Err(self.error("unclosed parenthesis")),
                }
                if self.eat(')') {
                    break;
                }
                if !self.eat(',') {
                    return Err(self.error("expected ',' or ')'"));
                }
            }
        }
        Ok(GroupExpr::Builtin { name: name.to_string(), args })
    }
}

impl GroupExpr {
    /// Parses `name`, `name(args)`, `file:PATH` or a path ending in `.json`.
    pub fn parse(text: &str) -> Result<GroupExpr> {
        let trimmed = text.trim();
        if let Some(path) = trimmed.strip_prefix("file:") {
            return Ok(GroupExpr::File(PathBuf::from(path)));
        }
        if trimmed.ends_with(".json") {
            return Ok(GroupExpr::File(PathBuf::from(trimmed)));
        }
        let mut p = Parser { text: trimmed, pos: 0 };
        let expr = p.expr()?;
        if p.peek().is_some() {
            return Err(p.error("trailing input"));
        }
        Ok(expr)
    }

    /// Constructs the group, validating names and parameters.
    pub fn build(&self) -> Result<Built> {
        let (name, args) = match self {
            GroupExpr::File(path) => return Ok(Built { group: load_group(path)?, example: None }),
            GroupExpr::Builtin { name, args } => (name.as_str(), args),
        };
        let ints = || -> Result<Vec<u64>> {
            args.iter()
                .map(|a| match a {
                    Arg::Int(n) => Ok(*n),
                    Arg::Group(g) => Err(Error::Config(format!("{name}: expected an integer, found {g}"))),
                })
                .collect()
        };
        let groups = || -> Result<Vec<Group>> {
            args.iter()
                .map(|a| match a {
                    Arg::Group(g) => Ok(g.build()?.group),
                    Arg::Int(n) => Err(Error::Config(format!("{name}: expected a group, found {n}"))),
                })
                .collect()
        };
        let arity = |want: usize, got: &[u64]| -> Result<()> {
            if got.len() == want {
                Ok(())
            } else {
                Err(Error::Config(format!("{name} takes {want} integer parameter(s), got {}", got.len())))
            }
        };
        let mut example = None;
        let group = match name {
            "cyclic" | "dihedral" | "sym" | "alt" | "sl2" => {
                let a = ints()?;
                arity(1, &a)?;
                match name {
                    "cyclic" => builtins::cyclic(a[0])?,
                    "dihedral" => builtins::dihedral(a[0])?,
                    "sym" => builtins::sym(a[0])?,
                    "alt" => builtins::alt(a[0])?,
                    _ => builtins::sl2(a[0])?,
                }
            }
            "elem_abelian" | "paper_example" => {
                let a = ints()?;
                arity(2, &a)?;
                if name == "elem_abelian" {
                    builtins::elem_abelian(a[0], a[1])?
                } else {
                    let g = builtins::paper_example(a[0], a[1])?;
                    example = Some((a[0], a[1] as u32));
                    g
                }
            }
            "q8" | "sl23" | "gl2_3" => {
                arity(0, &ints()?)?;
                match name {
                    "q8" => builtins::q8()?,
                    "sl23" => builtins::sl23()?,
                    _ => builtins::gl2_3()?,
                }
            }
            "direct_product" => builtins::direct_product(&groups()?)?,
            "swap_product" => {
                let g = groups()?;
                if g.len() != 1 {
                    return Err(Error::Config("swap_product takes exactly one group".into()));
                }
                builtins::swap_product(&g[0])?
            }
            _ => {
                return Err(Error::Config(format!("unknown group {name:?}; known: {}, file:PATH", REGISTRY.join(", "))))
            }
        };
        Ok(Built { group: group.with_name(self.to_string()), example })
    }
}
