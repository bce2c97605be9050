//! Representativity bounds with the rules that produced them.
//!
//! A report starts from `lower = 1` with no upper bound and applies each
//! listed [`Rule`] in order; [`replay`] reproduces the bounds from the rules
//! alone.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linktrace::{pretzel_components, region_components};
use crate::surfacescan::{scan_checked, ScanRow};
use crate::tanglecalc::{is_large_algebraic, normalize_pretzel, PretzelTriple, TangleExpr};

/// Normalized triples with representativity exactly 3.
pub const EXCEPTIONAL: [PretzelTriple; 2] =
    [PretzelTriple::new(-2, 3, 3), PretzelTriple::new(-2, 3, 5)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase")]
pub enum BoundEffect {
    Upper(i64),
    Lower(i64),
    Exact(i64),
    /// Informational; leaves the bounds unchanged.
    Note,
}

impl fmt::Display for BoundEffect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundEffect::Upper(n) => write!(f, "r(K) <= {n}"),
            BoundEffect::Lower(n) => write!(f, "r(K) >= {n}"),
            BoundEffect::Exact(n) => write!(f, "r(K) = {n}"),
            BoundEffect::Note => f.write_str("note"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rule {
    pub name: String,
    pub citation: String,
    pub effect: BoundEffect,
    /// True when the rule's hypothesis was only checked syntactically.
    pub conditional: bool,
}

impl Rule {
    fn new(name: &str, citation: impl Into<String>, effect: BoundEffect) -> Rule {
        Rule {
            name: name.to_string(),
            citation: citation.into(),
            effect,
            conditional: false,
        }
    }

    fn conditional(mut self) -> Rule {
        self.conditional = true;
        self
    }
}

/// Torus knot type of an exceptional pretzel knot. `None` parameters mean
/// the knot is known to be a torus knot without naming which one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TorusKnot {
    pub p: Option<i64>,
    pub q: Option<i64>,
    pub mirror: bool,
}

impl fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p, self.q) {
            (Some(p), Some(q)) => write!(f, "T({p},{q})"),
            _ => f.write_str("torus knot (parameters unspecified)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepReport {
    pub input: String,
    pub normalized: String,
    pub mirror: Option<bool>,
    pub is_knot: Option<bool>,
    pub bridge_upper: Option<i64>,
    pub torus: Option<TorusKnot>,
    pub lower: i64,
    pub upper: i64,
    pub exact: Option<i64>,
    pub rules: Vec<Rule>,
    pub surfaces: Vec<ScanRow>,
}

/// Bounds obtained by applying `rules` in order from `lower = 1`.
pub fn replay(rules: &[Rule]) -> (i64, Option<i64>, Option<i64>) {
    let mut lower = 1;
    let mut upper: Option<i64> = None;
    let mut exact = None;
    for rule in rules {
        match rule.effect {
            BoundEffect::Upper(n) => upper = Some(upper.map_or(n, |u| u.min(n))),
            BoundEffect::Lower(n) => lower = lower.max(n),
            BoundEffect::Exact(n) => {
                lower = n;
                upper = Some(n);
                exact = Some(n);
            }
            BoundEffect::Note => {}
        }
    }
    (lower, upper, exact)
}

fn components(t: PretzelTriple) -> Result<usize> {
    if t.has_zero() {
        Ok(region_components(&t.to_array()))
    } else {
        pretzel_components(t)
    }
}

fn require_knot(t: PretzelTriple) -> Result<()> {
    match components(t)? {
        1 => Ok(()),
        components => Err(Error::NotAKnot { components }),
    }
}

/// `P(0,q,r)` with `|q|, |r| >= 2` is `T(2,q) # T(2,r)`.
fn is_composite(t: PretzelTriple) -> bool {
    let a = t.to_array();
    a.iter().filter(|x| **x == 0).count() == 1 && a.iter().all(|x| *x == 0 || x.abs() >= 2)
}

/// Upper bound on the bridge number read off the pretzel presentation.
pub fn bridge_upper(t: PretzelTriple) -> Result<i64> {
    require_knot(t)?;
    Ok(bridge_bound(t))
}

fn bridge_bound(t: PretzelTriple) -> i64 {
    if t.to_array().iter().all(|x| x.abs() >= 2) || is_composite(t) {
        3
    } else {
        2
    }
}

pub fn torus_pretzel(t: PretzelTriple) -> Option<TorusKnot> {
    let n = normalize_pretzel(t);
    let sign = if n.mirror { -1 } else { 1 };
    let known = |q: i64| TorusKnot {
        p: Some(3),
        q: Some(sign * q),
        mirror: n.mirror,
    };
    match n.triple.to_array() {
        [-2, 3, 3] => Some(known(4)),
        [-2, 3, 5] => Some(known(5)),
        [1, 1, 1] => Some(TorusKnot {
            p: None,
            q: None,
            mirror: n.mirror,
        }),
        _ => None,
    }
}

/// `r(K) <= 2 ts(K)`.
pub fn tangle_string_bound(ts: u64) -> Result<i64> {
    if ts == 0 {
        return Err(Error::InvalidParameter(
            "tangle string number must be at least 1".into(),
        ));
    }
    i64::try_from(ts)
        .ok()
        .and_then(|v| v.checked_mul(2))
        .ok_or(Error::Overflow)
}

/// Reads a pretzel triple out of the shapes that denote one.
fn as_pretzel(e: &TangleExpr) -> Result<Option<PretzelTriple>> {
    let unit_triple = |slopes: Vec<crate::exactmath::Fraction>| -> Option<PretzelTriple> {
        let ms: Vec<i64> = slopes.iter().filter_map(|s| s.unit_denominator()).collect();
        (slopes.len() == 3 && ms.len() == 3).then(|| PretzelTriple::new(ms[0], ms[1], ms[2]))
    };
    let inner = match e {
        TangleExpr::Closure(inner) => inner.as_ref(),
        other => other,
    };
    match inner {
        TangleExpr::Pretzel(t) => Ok(Some(*t)),
        TangleExpr::Montesinos(slopes) => unit_triple(slopes.clone()).map(Some).ok_or_else(|| {
            Error::Unsupported(format!(
                "{e}: only Montesinos knots with three slopes 1/m are classified"
            ))
        }),
        TangleExpr::Sum(..) if matches!(e, TangleExpr::Closure(_)) => {
            let slopes: Option<Vec<_>> = inner
                .summands()
                .into_iter()
                .map(|s| match s {
                    TangleExpr::Rational(f) => Some(*f),
                    _ => None,
                })
                .collect();
            Ok(slopes.and_then(unit_triple))
        }
        _ => Ok(None),
    }
}

pub fn representativity_bounds(e: &TangleExpr) -> Result<RepReport> {
    match as_pretzel(e)? {
        Some(t) => pretzel_report(e, t),
        None => closure_report(e),
    }
}

fn pretzel_report(e: &TangleExpr, t: PretzelTriple) -> Result<RepReport> {
    require_knot(t)?;
    let normalized = normalize_pretzel(t);
    let bridge = bridge_bound(t);
    let mut rules = vec![Rule::new(
        "bridge-number bound",
        format!("r(K) <= b(K), and the pretzel presentation has b(K) <= {bridge}"),
        BoundEffect::Upper(bridge),
    )];

    let degenerate = t.to_array().iter().any(|x| x.abs() <= 1);
    let mut surfaces = Vec::new();
    if degenerate {
        rules.push(Rule::new(
            "degenerate twist region",
            "some |entry| <= 1 leaves at most two essential twist regions, and every such knot has r(K) <= 2",
            BoundEffect::Upper(2),
        ));
        if is_composite(t) {
            rules.push(Rule::new(
                "tangle string bound",
                "r(K) <= 2 ts(K), with ts(K) = 1 for a composite knot",
                BoundEffect::Upper(tangle_string_bound(1)?),
            ));
        }
    } else {
        surfaces = scan_checked(t)?.rows;
        let effect = if EXCEPTIONAL.contains(&normalized.triple) {
            BoundEffect::Exact(3)
        } else {
            BoundEffect::Upper(2)
        };
        rules.push(Rule::new(
            "pretzel classification",
            "with |p|,|q|,|r| >= 2, r(P(p,q,r)) = 3 exactly for ±(-2,3,3) and ±(-2,3,5), otherwise r <= 2",
            effect,
        ));
    }

    let torus = torus_pretzel(t);
    if torus.is_some() {
        rules.push(Rule::new(
            "torus pretzel knots",
            "torus knots among pretzel knots: ±(1,1,1), ±(-2,3,3) = T(3,±4), ±(-2,3,5) = T(3,±5)",
            BoundEffect::Note,
        ));
    }

    finish(RepReport {
        input: e.to_string(),
        normalized: normalized.triple.to_string(),
        mirror: Some(normalized.mirror),
        is_knot: Some(true),
        bridge_upper: Some(bridge),
        torus,
        lower: 1,
        upper: 0,
        exact: None,
        rules,
        surfaces,
    })
}

/// Number of rational tangles a summand contributes, provided each of them
/// is non-integral.
fn nonintegral_pieces(side: &TangleExpr) -> Option<usize> {
    side.summands()
        .into_iter()
        .map(|s| match s {
            TangleExpr::Rational(f) => (!f.is_integer()).then_some(1),
            TangleExpr::Montesinos(v) => v.iter().all(|f| !f.is_integer()).then_some(v.len()),
            TangleExpr::Pretzel(t) => t.to_array().iter().all(|x| x.abs() >= 2).then_some(3),
            _ => None,
        })
        .sum()
}

fn closure_report(e: &TangleExpr) -> Result<RepReport> {
    let TangleExpr::Closure(inner) = e else {
        return Err(Error::Unsupported(format!(
            "{e} is a tangle; close it with C(...) to describe a knot"
        )));
    };
    let TangleExpr::Sum(left, right) = inner.as_ref() else {
        return Err(Error::Unsupported(format!(
            "{e}: expected a closed sum of tangles"
        )));
    };

    let mut rules = Vec::new();
    let leaves = inner.summands();
    let bridge = leaves
        .iter()
        .all(|s| matches!(s, TangleExpr::Rational(f) if !f.is_integer()))
        .then_some(leaves.len() as i64);
    if let Some(b) = bridge {
        rules.push(Rule::new(
            "bridge-number bound",
            format!("r(K) <= b(K), and a closed sum of {b} rational tangles has b(K) <= {b}"),
            BoundEffect::Upper(b),
        ));
    }

    let conway = match (nonintegral_pieces(left), nonintegral_pieces(right)) {
        (Some(l), Some(r)) => l >= 2 && r >= 2,
        _ => false,
    };
    if !conway {
        return Err(Error::Unsupported(format!(
            "{e}: no Conway sphere splitting it into two sums of non-integral rational tangles"
        )));
    }
    rules.push(
        Rule::new(
            "tangle string bound",
            "r(K) <= 2 ts(K), with ts(K) <= 2 when K has an essential Conway sphere",
            BoundEffect::Upper(tangle_string_bound(2)?),
        )
        .conditional(),
    );
    if is_large_algebraic(e)? {
        rules.push(
            Rule::new(
                "large algebraic knot",
                "r(K) <= 3 when K is algebraic and its Conway sphere is essential",
                BoundEffect::Upper(3),
            )
            .conditional(),
        );
    }

    finish(RepReport {
        input: e.to_string(),
        normalized: e.to_string(),
        mirror: None,
        is_knot: None,
        bridge_upper: bridge,
        torus: None,
        lower: 1,
        upper: 0,
        exact: None,
        rules,
        surfaces: Vec::new(),
    })
}

fn finish(mut report: RepReport) -> Result<RepReport> {
    let (lower, upper, exact) = replay(&report.rules);
    let upper = upper.ok_or_else(|| Error::Invariant("no rule bounds r(K) from above".into()))?;
    if lower > upper {
        return Err(Error::Invariant(format!(
            "lower bound {lower} exceeds upper bound {upper}"
        )));
    }
    report.lower = lower;
    report.upper = upper;
    report.exact = exact;
    Ok(report)
}
