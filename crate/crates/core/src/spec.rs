//! Textual series descriptions.
//!
//! ```text
//! builtin:geometric_h(2,1/3)
//! builtin:xcotx order:8
//! coeffs:[1, -1/2, 3]
//! ```

use std::fmt;
use std::str::FromStr;

use num::Zero;

use crate::builtins::{Builtin, Kind};
use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};
use crate::series::Series;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Builtin(Builtin),
    Coeffs(Vec<Rational>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesSpec {
    pub source: Source,
    /// Truncation order written in the spec, if any.
    pub order: Option<usize>,
}

impl SeriesSpec {
    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text).spec()
    }

    /// Expansion to `order` (explicit coefficients are zero-padded or
    /// truncated).
    pub fn series(&self, order: usize) -> Series {
        match &self.source {
            Source::Builtin(b) => b.series(order),
            Source::Coeffs(c) => Series::new(c.clone(), order),
        }
    }

    /// Whether the described series is an `H` (triangle of `x·H`) or a `G`
    /// (triangle of itself). Explicit coefficients with a nonzero constant
    /// term are `H`; otherwise `G`.
    pub fn kind(&self) -> Kind {
        match &self.source {
            Source::Builtin(b) => b.kind(),
            Source::Coeffs(c) => match c.first() {
                Some(c0) if !c0.is_zero() => Kind::H,
                _ => Kind::G,
            },
        }
    }

    /// The series whose composita is this spec's triangle, to `order`.
    pub fn generator(&self, order: usize) -> Series {
        match (&self.source, self.kind()) {
            (Source::Builtin(b), _) => b.generator(order),
            (Source::Coeffs(_), Kind::H) => self.series(order.saturating_sub(1)).shift_up(),
            (Source::Coeffs(_), Kind::G) => self.series(order),
        }
    }
}

impl FromStr for SeriesSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.source {
            Source::Builtin(b) => write!(f, "builtin:{b}")?,
            Source::Coeffs(c) => {
                let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
                write!(f, "coeffs:[{}]", parts.join(","))?;
            }
        }
        if let Some(order) = self.order {
            write!(f, " order:{order}")?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { text, pos: 0 }
    }

    fn error(&self, at: usize, message: impl Into<String>) -> Error {
        let before = &self.text[..at];
        let line = before.matches('\n').count() + 1;
        let column = before.rfind('\n').map_or(at, |nl| at - nl - 1) + 1;
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(self.pos, format!("expected `{token}`")))
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> (usize, &'a str) {
        self.skip_ws();
        let start = self.pos;
        let len = self
            .rest()
            .find(|c: char| !pred(c))
            .unwrap_or(self.rest().len());
        self.pos += len;
        (start, &self.text[start..self.pos])
    }

    fn rational(&mut self) -> Result<Rational> {
        let (start, tok) = self.take_while(|c| c.is_ascii_digit() || matches!(c, '-' | '+' | '/'));
        if tok.is_empty() {
            return Err(self.error(start, "expected a rational number"));
        }
        parse_rational(tok).ok_or_else(|| self.error(start, format!("invalid rational `{tok}`")))
    }

    /// Comma-separated rationals up to `close`; the opener is already eaten.
    fn list(&mut self, close: &str) -> Result<Vec<Rational>> {
        let mut values = Vec::new();
        if self.eat(close) {
            return Ok(values);
        }
        loop {
            values.push(self.rational()?);
            if self.eat(close) {
                return Ok(values);
            }
            self.expect(",")?;
        }
    }

    fn spec(mut self) -> Result<SeriesSpec> {
        self.skip_ws();
        let source = if self.eat("builtin:") {
            let (start, name) = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
            if name.is_empty() {
                return Err(self.error(start, "expected a builtin name"));
            }
            let params = if self.eat("(") {
                self.list(")")?
            } else {
                Vec::new()
            };
            Source::Builtin(
                Builtin::from_spec(name, &params).map_err(|e| self.error(start, e.to_string()))?,
            )
        } else if self.eat("coeffs:") {
            self.expect("[")?;
            Source::Coeffs(self.list("]")?)
        } else {
            return Err(self.error(self.pos, "expected `builtin:` or `coeffs:`"));
        };
        let order = if self.eat("order:") {
            let (start, digits) = self.take_while(|c| c.is_ascii_digit());
            Some(
                digits
                    .parse()
                    .map_err(|_| self.error(start, "expected a non-negative order"))?,
            )
        } else {
            None
        };
        self.skip_ws();
        if !self.rest().is_empty() {
            return Err(self.error(self.pos, "unexpected trailing input"));
        }
        Ok(SeriesSpec { source, order })
    }
}
