//! Constructor expressions:
//!
//! ```text
//! expr := skeleton(m, k) | simplex(m) | Z(d, t, r) | join(expr, expr)
//!       | clique(<edge list path>) | file(<facet file path>)
//! ```

use std::fmt;
use std::path::{Path, PathBuf};

use lapgap::extremal::{build_z, ZParams};
use lapgap::{parse_edge_list, parse_facet_file, SimplicialComplex};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Skeleton(usize, isize),
    Simplex(usize),
    Z(usize, usize, usize),
    Join(Box<Expr>, Box<Expr>),
    Clique(PathBuf),
    File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at position {pos}: {msg}")]
pub struct ParseError {
    /// Byte offset into the expression.
    pub pos: usize,
    pub msg: String,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos, msg: msg.into() })
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            match self.rest().chars().next() {
                Some(found) => self.err(format!("expected `{c}`, found `{found}`")),
                None => self.err(format!("expected `{c}`, found end of input")),
            }
        }
    }

    fn ident(&mut self) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let len = self.rest().find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).unwrap_or(self.rest().len());
        if len == 0 {
            return self.err("expected a constructor name");
        }
        let name = &self.rest()[..len];
        self.pos += len;
        Ok(name)
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let rest = self.rest();
        let sign = usize::from(rest.starts_with('-'));
        let digits = rest[sign..].find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len() - sign);
        if digits == 0 {
            return self.err("expected an integer");
        }
        let text = &rest[..sign + digits];
        self.pos += sign + digits;
        text.parse().map_err(|_| ParseError { pos: start, msg: format!("integer `{text}` out of range") })
    }

    fn uint(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        let v = self.int()?;
        usize::try_from(v)
            .map_err(|_| ParseError { pos: start, msg: format!("expected a non-negative integer, got {v}") })
    }

    /// Raw text up to the next `)`.
    fn path(&mut self) -> Result<PathBuf, ParseError> {
        self.skip_ws();
        let len = self.rest().find(')').unwrap_or(self.rest().len());
        let raw = self.rest()[..len].trim_end();
        if raw.is_empty() {
            return self.err("expected a file path");
        }
        self.pos += raw.len();
        Ok(PathBuf::from(raw))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let name = self.ident()?;
        self.eat('(')?;
        let e = match name {
            "skeleton" => {
                let m = self.uint()?;
                self.eat(',')?;
                let kpos = self.pos;
                let k = self.int()?;
                let k = isize::try_from(k).map_err(|_| ParseError { pos: kpos, msg: "k out of range".into() })?;
                Expr::Skeleton(m, k)
            }
            "simplex" => Expr::Simplex(self.uint()?),
            "Z" => {
                let d = self.uint()?;
                self.eat(',')?;
                let t = self.uint()?;
                self.eat(',')?;
                let r = self.uint()?;
                Expr::Z(d, t, r)
            }
            "join" => {
                let a = self.expr()?;
                self.eat(',')?;
                let b = self.expr()?;
                Expr::Join(Box::new(a), Box::new(b))
            }
            "clique" => Expr::Clique(self.path()?),
            "file" => Expr::File(self.path()?),
            other => {
                return Err(ParseError {
                    pos: start,
                    msg: format!("unknown constructor `{other}`; expected skeleton, simplex, Z, join, clique or file"),
                })
            }
        };
        self.eat(')')?;
        Ok(e)
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if !p.rest().is_empty() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

impl Expr {
    pub fn build(&self) -> Result<SimplicialComplex, CliError> {
        Ok(match self {
            Expr::Skeleton(m, k) => SimplicialComplex::skeleton(*m, *k)?,
            Expr::Simplex(m) => SimplicialComplex::simplex(*m),
            Expr::Z(d, t, r) => build_z(ZParams::new(*d, *t, *r)?),
            Expr::Join(a, b) => a.build()?.join(&b.build()?),
            Expr::Clique(path) => {
                let (n, edges) = parse_edge_list(&read_file(path)?)?;
                SimplicialComplex::clique_complex(n, &edges)?
            }
            Expr::File(path) => parse_facet_file(&read_file(path)?)?,
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Skeleton(m, k) => write!(f, "skeleton({m},{k})"),
            Expr::Simplex(m) => write!(f, "simplex({m})"),
            Expr::Z(d, t, r) => write!(f, "Z({d},{t},{r})"),
            Expr::Join(a, b) => write!(f, "join({a},{b})"),
            Expr::Clique(p) => write!(f, "clique({})", p.display()),
            Expr::File(p) => write!(f, "file({})", p.display()),
        }
    }
}
