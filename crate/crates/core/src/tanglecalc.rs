//! Tangle and knot descriptions: pretzel triples, Montesinos slope lists and
//! closures of tangle sums, with a small text syntax.
//!
//! ```text
//! expr       := closure | tangle
//! closure    := "C(" tangle ")"
//! tangle     := term { "+" term }
//! term       := rational | "(" tangle ")" | pretzel | montesinos
//! rational   := integer "/" integer | integer
//! pretzel    := "P(" integer "," integer "," integer ")"
//! montesinos := "M(" rational { "," rational } ")"
//! ```
//!
//! Whitespace is ignored everywhere. `+` is left associative.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::Fraction;

/// Largest integer magnitude accepted by the parser.
pub const MAX_INPUT_MAGNITUDE: i64 = 1_000_000;

/// Twist counts of a three-strand pretzel knot, in input order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PretzelTriple {
    pub p: i64,
    pub q: i64,
    pub r: i64,
}

impl PretzelTriple {
    pub const fn new(p: i64, q: i64, r: i64) -> Self {
        PretzelTriple { p, q, r }
    }

    pub fn from_array([p, q, r]: [i64; 3]) -> Self {
        PretzelTriple { p, q, r }
    }

    pub fn to_array(self) -> [i64; 3] {
        [self.p, self.q, self.r]
    }

    pub fn mirror(self) -> Self {
        PretzelTriple::new(-self.p, -self.q, -self.r)
    }

    pub fn has_zero(self) -> bool {
        self.to_array().contains(&0)
    }
}

impl fmt::Display for PretzelTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({},{},{})", self.p, self.q, self.r)
    }
}

/// Canonical representative of a pretzel triple up to permutation and mirror.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct NormalizedPretzel {
    pub triple: PretzelTriple,
    /// True when `triple` is the mirror of the input.
    pub mirror: bool,
}

/// Sorts the entries ascending and picks, between the triple and its mirror,
/// the one with fewer negative entries; ties go to the lexicographically
/// smaller sorted triple.
pub fn normalize_pretzel(t: PretzelTriple) -> NormalizedPretzel {
    fn key(mut v: [i64; 3]) -> (usize, [i64; 3]) {
        v.sort_unstable();
        (v.iter().filter(|x| **x < 0).count(), v)
    }
    let direct = key(t.to_array());
    let mirrored = key(t.mirror().to_array());
    if mirrored < direct {
        NormalizedPretzel {
            triple: PretzelTriple::from_array(mirrored.1),
            mirror: true,
        }
    } else {
        NormalizedPretzel {
            triple: PretzelTriple::from_array(direct.1),
            mirror: false,
        }
    }
}

/// Slopes `[1/p, 1/q, 1/r]` of the three rational tangles in series.
pub fn pretzel_to_montesinos(t: PretzelTriple) -> Result<Vec<Fraction>> {
    t.to_array()
        .iter()
        .map(|&m| {
            if m == 0 {
                Err(Error::DegenerateTangle(format!(
                    "twist count 0 in {t} has no slope 1/m"
                )))
            } else {
                Fraction::unit(m)
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum TangleExpr {
    Rational(Fraction),
    Sum(Box<TangleExpr>, Box<TangleExpr>),
    Pretzel(PretzelTriple),
    Montesinos(Vec<Fraction>),
    Closure(Box<TangleExpr>),
}

impl TangleExpr {
    pub fn sum(left: TangleExpr, right: TangleExpr) -> TangleExpr {
        TangleExpr::Sum(Box::new(left), Box::new(right))
    }

    pub fn closure(inner: TangleExpr) -> TangleExpr {
        TangleExpr::Closure(Box::new(inner))
    }

    /// Closure only at the root and no empty Montesinos lists.
    pub fn is_well_formed(&self) -> bool {
        fn tangle_ok(e: &TangleExpr) -> bool {
            match e {
                TangleExpr::Rational(_) | TangleExpr::Pretzel(_) => true,
                TangleExpr::Montesinos(v) => !v.is_empty(),
                TangleExpr::Sum(l, r) => tangle_ok(l) && tangle_ok(r),
                TangleExpr::Closure(_) => false,
            }
        }
        match self {
            TangleExpr::Closure(inner) => tangle_ok(inner),
            other => tangle_ok(other),
        }
    }

    /// The summands of a (nested) sum, left to right. A non-sum is its own
    /// single summand.
    pub fn summands(&self) -> Vec<&TangleExpr> {
        let mut out = Vec::new();
        fn walk<'a>(e: &'a TangleExpr, out: &mut Vec<&'a TangleExpr>) {
            match e {
                TangleExpr::Sum(l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
                other => out.push(other),
            }
        }
        walk(self, &mut out);
        out
    }
}

impl fmt::Display for TangleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TangleExpr::Rational(s) => write!(f, "{s}"),
            TangleExpr::Sum(l, r) => {
                write_summand(f, l)?;
                f.write_str(" + ")?;
                write_summand(f, r)
            }
            TangleExpr::Pretzel(t) => write!(f, "{t}"),
            TangleExpr::Montesinos(slopes) => {
                f.write_str("M(")?;
                for (i, s) in slopes.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{s}")?;
                }
                f.write_str(")")
            }
            TangleExpr::Closure(inner) => write!(f, "C({inner})"),
        }
    }
}

fn write_summand(f: &mut fmt::Formatter<'_>, e: &TangleExpr) -> fmt::Result {
    match e {
        TangleExpr::Sum(..) => write!(f, "({e})"),
        other => write!(f, "{other}"),
    }
}

pub fn print_expr(e: &TangleExpr) -> String {
    e.to_string()
}

pub fn parse_expr(text: &str) -> Result<TangleExpr> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let expr = if parser.peek() == Some(b'C') {
        parser.bump();
        parser.expect(b'(')?;
        let inner = parser.tangle()?;
        parser.expect(b')')?;
        TangleExpr::closure(inner)
    } else {
        parser.tangle()?
    };
    match parser.peek() {
        None => Ok(expr),
        Some(c) => Err(parser.error(format!("unexpected '{}'", c as char))),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn expect(&mut self, want: u8) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!(
                "expected '{}', found '{}'",
                want as char, c as char
            ))),
            None => Err(self.error(format!("expected '{}', found end of input", want as char))),
        }
    }

    fn tangle(&mut self) -> Result<TangleExpr> {
        let mut acc = self.term()?;
        while self.peek() == Some(b'+') {
            self.bump();
            let rhs = self.term()?;
            acc = TangleExpr::sum(acc, rhs);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<TangleExpr> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let inner = self.tangle()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'P') => {
                self.bump();
                self.expect(b'(')?;
                let p = self.integer()?;
                self.expect(b',')?;
                let q = self.integer()?;
                self.expect(b',')?;
                let r = self.integer()?;
                self.expect(b')')?;
                Ok(TangleExpr::Pretzel(PretzelTriple::new(p, q, r)))
            }
            Some(b'M') => {
                self.bump();
                self.expect(b'(')?;
                let mut slopes = vec![self.rational()?];
                while self.peek() == Some(b',') {
                    self.bump();
                    slopes.push(self.rational()?);
                }
                self.expect(b')')?;
                Ok(TangleExpr::Montesinos(slopes))
            }
            Some(b'C') => Err(self.error("closure is only allowed at the top level")),
            Some(_) => Ok(TangleExpr::Rational(self.rational()?)),
            None => Err(self.error("expected a tangle, found end of input")),
        }
    }

    fn rational(&mut self) -> Result<Fraction> {
        let numer = self.integer()?;
        if self.peek() != Some(b'/') {
            return Ok(Fraction::from_integer(numer));
        }
        self.bump();
        let at = self.peek().map(|_| self.pos).unwrap_or(self.pos);
        let denom = self.integer()?;
        if denom == 0 {
            return Err(Error::Syntax {
                pos: at,
                message: "slope denominator is zero".to_string(),
            });
        }
        Fraction::new(numer, denom)
    }

    fn integer(&mut self) -> Result<i64> {
        let start = match self.peek() {
            Some(_) => self.pos,
            None => return Err(self.error("expected an integer, found end of input")),
        };
        let negative = match self.src[self.pos] {
            b'-' => {
                self.bump();
                true
            }
            b'+' => {
                self.bump();
                false
            }
            _ => false,
        };
        self.skip_ws();
        let digits_start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if digits_start == self.pos {
            return Err(match self.src.get(self.pos) {
                Some(c) => self.error(format!("expected an integer, found '{}'", *c as char)),
                None => self.error("expected an integer, found end of input"),
            });
        }
        // Digits are ASCII, so the slice is valid UTF-8.
        let digits = std::str::from_utf8(&self.src[digits_start..self.pos]).unwrap_or_default();
        let magnitude = digits
            .parse::<i64>()
            .ok()
            .filter(|m| *m <= MAX_INPUT_MAGNITUDE)
            .ok_or_else(|| Error::Syntax {
                pos: start,
                message: format!("integer exceeds {MAX_INPUT_MAGNITUDE} in magnitude"),
            })?;
        Ok(if negative { -magnitude } else { magnitude })
    }
}

/// Sufficient syntactic condition for a closed sum of tangles to be a large
/// algebraic knot: the top-level sum splits into two sides, each a sum of at
/// least two rational tangles of slope `1/m` with `|m| >= 2`.
///
/// This does not decide essentiality of the splitting sphere.
pub fn is_large_algebraic(e: &TangleExpr) -> Result<bool> {
    let TangleExpr::Closure(inner) = e else {
        return Err(Error::Shape(format!("expected a closure C(...), got {e}")));
    };
    let TangleExpr::Sum(left, right) = inner.as_ref() else {
        return Ok(false);
    };
    let side_ok = |side: &TangleExpr| {
        let parts = side.summands();
        parts.len() >= 2
            && parts.iter().all(|t| match t {
                TangleExpr::Rational(s) => s.unit_denominator().is_some_and(|m| m.abs() >= 2),
                _ => false,
            })
    };
    Ok(side_ok(left) && side_ok(right))
}
