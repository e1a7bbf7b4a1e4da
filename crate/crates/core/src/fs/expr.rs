//! A small expression language for FS^op modules built from projectives,
//! and the height bound each construction certifies.

use std::fmt;

use serde::Serialize;

use super::sequence::{dim_projective, seq_convolve, seq_shift, seq_sum, DimSequence};
use crate::error::{Error, Result};

/// `P<d>`, `shift(e, k)`, `conv(e, e)` and `sum(e, ...)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Projective(usize),
    Shift(Box<Expr>, usize),
    Conv(Box<Expr>, Box<Expr>),
    Sum(Vec<Expr>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Projective(d) => write!(f, "P{d}"),
            Expr::Shift(e, k) => write!(f, "shift({e},{k})"),
            Expr::Conv(a, b) => write!(f, "conv({a},{b})"),
            Expr::Sum(parts) => {
                let parts: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "sum({})", parts.join(","))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HeightRule {
    /// `P_d` has height `d`.
    Projective,
    /// Shifting preserves height.
    Shift,
    /// Heights add under convolution.
    Convolution,
    /// Direct sums, like sub- and quotient modules and extensions, take the
    /// maximum.
    Sum,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub rule: HeightRule,
    pub expr: String,
    pub bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeightCertificate {
    pub bound: usize,
    /// Steps in evaluation order, innermost first.
    pub trace: Vec<TraceStep>,
}

impl Expr {
    pub fn parse(input: &str) -> Result<Expr> {
        let tokens: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { tokens, pos: 0 };
        let e = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(Error::Parse(format!(
                "trailing input at position {}",
                p.pos
            )));
        }
        Ok(e)
    }

    pub fn evaluate(&self, len: usize) -> DimSequence {
        match self {
            Expr::Projective(d) => dim_projective(*d, len),
            Expr::Shift(e, k) => seq_shift(&e.evaluate(len + k), *k),
            Expr::Conv(a, b) => seq_convolve(&a.evaluate(len), &b.evaluate(len)),
            Expr::Sum(parts) => seq_sum(&parts.iter().map(|p| p.evaluate(len)).collect::<Vec<_>>()),
        }
    }

    pub fn height(&self) -> HeightCertificate {
        let mut trace = Vec::new();
        let bound = self.trace_into(&mut trace);
        HeightCertificate { bound, trace }
    }

    fn trace_into(&self, trace: &mut Vec<TraceStep>) -> usize {
        let (rule, bound) = match self {
            Expr::Projective(d) => (HeightRule::Projective, *d),
            Expr::Shift(e, _) => (HeightRule::Shift, e.trace_into(trace)),
            Expr::Conv(a, b) => (
                HeightRule::Convolution,
                a.trace_into(trace) + b.trace_into(trace),
            ),
            Expr::Sum(parts) => (
                HeightRule::Sum,
                parts.iter().map(|p| p.trace_into(trace)).max().unwrap_or(0),
            ),
        };
        trace.push(TraceStep {
            rule,
            expr: self.to_string(),
            bound,
        });
        bound
    }
}

struct Parser {
    tokens: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.tokens.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "expected '{c}' at position {}",
                self.pos
            )))
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.tokens[start..self.pos].iter().collect();
        s.parse()
            .map_err(|_| Error::Parse(format!("expected a number at position {start}")))
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        self.tokens[start..self.pos].iter().collect()
    }

    fn expr(&mut self) -> Result<Expr> {
        let start = self.pos;
        match self.ident().as_str() {
            "P" => Ok(Expr::Projective(self.number()?)),
            "shift" => {
                self.expect('(')?;
                let e = self.expr()?;
                self.expect(',')?;
                let k = self.number()?;
                self.expect(')')?;
                Ok(Expr::Shift(Box::new(e), k))
            }
            "conv" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(')')?;
                Ok(Expr::Conv(Box::new(a), Box::new(b)))
            }
            "sum" => {
                self.expect('(')?;
                let mut parts = vec![self.expr()?];
                while self.peek() == Some(',') {
                    self.pos += 1;
                    parts.push(self.expr()?);
                }
                self.expect(')')?;
                Ok(Expr::Sum(parts))
            }
            other => Err(Error::Parse(format!(
                "unknown term '{other}' at position {start}"
            ))),
        }
    }
}
