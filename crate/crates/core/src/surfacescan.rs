//! Candidate closed surfaces for a pretzel knot.
//!
//! The knot is cut by three meridian disks of the axis complement into three
//! rational tangle balls. A candidate surface meets each ball either in
//! several parallel disks (type A, boundary slope equal to the tangle slope
//! `1/m`) or in a single disk carrying both strings (type B, boundary slope
//! `1/(m+1)`). The boundary slopes `1/p'`, `1/q'`, `1/r'` must sum to zero,
//! and the number of arcs in each meridian disk is the common denominator
//! `N = |p'| s1 = |q'| s2 = |r'| s3`, where `s_i` counts the disks in ball `i`.
//!
//! For each of the eight type assignments this module applies those
//! constraints, counts cells to get the Euler characteristic, and then sorts
//! the survivors into the two parametric families
//! `(-d, 2d-1, 2d-1)` and `(-kd, (k+1)d, k(k+1)d - 1)`.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{sum_reciprocals, Fraction};
use crate::linktrace::pretzel_components;
use crate::slopelemma::{recover_params, type_a_slope, type_b_slope};
use crate::tanglecalc::{normalize_pretzel, NormalizedPretzel, PretzelTriple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TangleType {
    /// Parallel disks, each outermost one containing one string.
    A,
    /// One disk containing both strings.
    B,
}

impl fmt::Display for TangleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TangleType::A => "A",
            TangleType::B => "B",
        })
    }
}

/// The two parametric families that survive the slope constraints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// `(p,q,r) = (-d, 2d-1, 2d-1)`, types (A,B,B).
    TypeOne { d: u64 },
    /// `(p,q,r) = (-kd, (k+1)d, k(k+1)d - 1)`, types (A,A,B).
    TypeTwo { k: u64, d: u64 },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::TypeOne { d } => write!(f, "type (1), d={d}"),
            Family::TypeTwo { k, d } => write!(f, "type (2), k={k}, d={d}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "lowercase")]
pub enum Verdict {
    Accepted,
    Rejected(String),
}

impl Verdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Verdict::Accepted)
    }
}

/// A candidate surface that passed the structural constraints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfacePattern {
    /// Normalized triple the pattern was computed on.
    pub triple: PretzelTriple,
    pub types: [TangleType; 3],
    /// Boundary slopes are `1/slopes[i]`.
    pub slopes: [i64; 3],
    /// Arcs per meridian disk, the common denominator `N`.
    pub arcs: u64,
    /// Disks of the surface inside each tangle ball.
    pub sheets: [u64; 3],
    /// Longitudes on the boundary of the axis complement, `2N`.
    pub longitudes: u64,
    pub chi: i64,
    pub genus: u64,
    pub family: Option<Family>,
    pub verdict: Verdict,
}

impl SurfacePattern {
    /// The negative boundary slope denominator.
    pub fn negative_slope(&self) -> i64 {
        self.slopes.iter().copied().find(|s| *s < 0).unwrap_or(0)
    }

    /// Twist counts implied by the types and boundary slopes.
    pub fn reconstruct_triple(&self) -> PretzelTriple {
        PretzelTriple::from_array(std::array::from_fn(|i| match self.types[i] {
            TangleType::A => self.slopes[i],
            TangleType::B => self.slopes[i] - 1,
        }))
    }
}

/// One of the eight type assignments, whether or not it survived.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub types: [TangleType; 3],
    pub slopes: [i64; 3],
    pub reciprocal_sum: Fraction,
    /// Set when the assignment fails a structural constraint.
    pub structural_rejection: Option<String>,
    pub pattern: Option<SurfacePattern>,
}

impl ScanRow {
    pub fn verdict(&self) -> Verdict {
        match (&self.pattern, &self.structural_rejection) {
            (Some(p), _) => p.verdict.clone(),
            (None, Some(reason)) => Verdict::Rejected(reason.clone()),
            (None, None) => Verdict::Rejected("no pattern".to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CellCounts {
    pub vertices: u64,
    pub edges: u64,
    pub faces: u64,
}

impl CellCounts {
    pub fn euler(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.faces as i64
    }
}

/// Result of scanning one triple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Scan {
    pub input: PretzelTriple,
    pub normalized: NormalizedPretzel,
    pub rows: Vec<ScanRow>,
}

impl Scan {
    pub fn patterns(&self) -> impl Iterator<Item = &SurfacePattern> {
        self.rows.iter().filter_map(|r| r.pattern.as_ref())
    }
}

pub const ASSIGNMENTS: [[TangleType; 3]; 8] = {
    use TangleType::{A, B};
    [
        [A, A, A],
        [A, A, B],
        [A, B, A],
        [A, B, B],
        [B, A, A],
        [B, A, B],
        [B, B, A],
        [B, B, B],
    ]
};

fn check_input(t: PretzelTriple) -> Result<()> {
    if t.to_array().iter().any(|x| x.abs() < 2) {
        return Err(Error::Precondition(format!(
            "{t} has a twist region with fewer than two crossings"
        )));
    }
    let components = pretzel_components(t)?;
    if components != 1 {
        return Err(Error::NotAKnot { components });
    }
    Ok(())
}

/// Evaluates all eight type assignments on the normalized form of `t`.
pub fn scan_assignments(t: PretzelTriple) -> Result<Scan> {
    check_input(t)?;
    scan_checked(t)
}

/// [`scan_assignments`] for a triple already known to be a knot with all
/// entries of magnitude at least 2.
pub(crate) fn scan_checked(t: PretzelTriple) -> Result<Scan> {
    let normalized = normalize_pretzel(t);
    let twists = normalized.triple.to_array();
    let rows = ASSIGNMENTS
        .iter()
        .map(|types| scan_row(normalized.triple, twists, *types))
        .collect::<Result<_>>()?;
    Ok(Scan {
        input: t,
        normalized,
        rows,
    })
}

fn scan_row(triple: PretzelTriple, twists: [i64; 3], types: [TangleType; 3]) -> Result<ScanRow> {
    let mut slopes = [0i64; 3];
    for i in 0..3 {
        let slope = match types[i] {
            TangleType::A => type_a_slope(twists[i])?,
            TangleType::B => type_b_slope(twists[i])?,
        };
        slopes[i] = slope
            .unit_denominator()
            .ok_or_else(|| Error::Invariant(format!("boundary slope {slope} is not 1/m")))?;
    }
    let reciprocal_sum = sum_reciprocals(&slopes)?;
    let mut row = ScanRow {
        types,
        slopes,
        reciprocal_sum,
        structural_rejection: None,
        pattern: None,
    };

    let negatives = slopes.iter().filter(|s| **s < 0).count();
    if negatives != 1 {
        row.structural_rejection = Some(format!("{negatives} negative slopes, need exactly one"));
        return Ok(row);
    }
    if !reciprocal_sum.is_zero() {
        row.structural_rejection = Some(format!("reciprocal sum is {reciprocal_sum}, not 0"));
        return Ok(row);
    }
    let mags = slopes.map(|s| s.unsigned_abs());
    let lcm = mags.iter().fold(1u64, |acc, m| acc.lcm(m));
    let max = mags.iter().copied().max().unwrap_or(0);
    if lcm != max {
        row.structural_rejection = Some(format!(
            "common denominator {lcm} exceeds largest slope {max}"
        ));
        return Ok(row);
    }
    let sheets = mags.map(|m| lcm / m);
    for i in 0..3 {
        let ok = match types[i] {
            TangleType::A => sheets[i] >= 2,
            TangleType::B => sheets[i] == 1,
        };
        if !ok {
            row.structural_rejection = Some(format!(
                "tangle {} is type {} with {} sheet(s)",
                i + 1,
                types[i],
                sheets[i]
            ));
            return Ok(row);
        }
    }

    let mut pattern = SurfacePattern {
        triple,
        types,
        slopes,
        arcs: lcm,
        sheets,
        longitudes: 2 * lcm,
        chi: 0,
        genus: 0,
        family: None,
        verdict: Verdict::Accepted,
    };
    pattern.chi = euler_characteristic(&pattern)?;
    pattern.genus = genus(pattern.chi)?;
    pattern.family = classify_family(&pattern);
    pattern.verdict = final_filter(&pattern, triple);
    row.pattern = Some(pattern);
    Ok(row)
}

/// Structurally surviving patterns for `t`, each with Euler characteristic,
/// genus and final verdict.
pub fn enumerate_patterns(t: PretzelTriple) -> Result<Vec<SurfacePattern>> {
    Ok(scan_assignments(t)?
        .rows
        .into_iter()
        .filter_map(|r| r.pattern)
        .collect())
}

/// Cell structure of the candidate surface:
///
/// * vertices: where each of the `L` longitudes crosses each of the three
///   meridian circles, `3L`;
/// * edges: the `N` arcs in each meridian disk plus the longitude segments
///   between meridian circles, `3N + 3L`;
/// * faces: the disks inside the tangle balls plus one meridian disk of the
///   axis neighbourhood per longitude, `s1 + s2 + s3 + L`.
pub fn cell_counts(s: &SurfacePattern) -> Result<CellCounts> {
    let n = s.arcs;
    let l = s.longitudes;
    if n == 0 {
        return Err(Error::Invariant("pattern has no arcs".to_string()));
    }
    if l != 2 * n {
        return Err(Error::Invariant(format!(
            "{l} longitudes but {n} arcs per disk"
        )));
    }
    for i in 0..3 {
        if s.sheets[i] * s.slopes[i].unsigned_abs() != n {
            return Err(Error::Invariant(format!(
                "tangle {}: {} sheets at slope 1/{} do not give {} arcs",
                i + 1,
                s.sheets[i],
                s.slopes[i],
                n
            )));
        }
    }
    Ok(CellCounts {
        vertices: 3 * l,
        edges: 3 * n + 3 * l,
        faces: s.sheets.iter().sum::<u64>() + l,
    })
}

pub fn euler_characteristic(s: &SurfacePattern) -> Result<i64> {
    Ok(cell_counts(s)?.euler())
}

/// Genus of a closed orientable surface with Euler characteristic `chi`.
pub fn genus(chi: i64) -> Result<u64> {
    if chi > 2 || chi % 2 != 0 {
        return Err(Error::Invariant(format!(
            "Euler characteristic {chi} is not that of a closed orientable surface"
        )));
    }
    Ok(((2 - chi) / 2) as u64)
}

/// Places a surviving pattern in one of the two families, if it fits.
pub fn classify_family(s: &SurfacePattern) -> Option<Family> {
    let neg = s.slopes.iter().position(|x| *x < 0)?;
    let mut pos: Vec<usize> = (0..3).filter(|i| *i != neg).collect();
    pos.sort_by_key(|i| s.slopes[*i]);
    let a = s.slopes[neg].unsigned_abs();
    let (b, c) = (s.slopes[pos[0]] as u64, s.slopes[pos[1]] as u64);
    let (k, l, d) = recover_params(a, b, c)?;

    let mut triple = s.reconstruct_triple().to_array();
    triple.sort_unstable();
    let (di, ki) = (d as i64, k as i64);
    use TangleType::{A, B};
    if l == 2 * k {
        let types_ok = s.types[neg] == A && s.types[pos[0]] == B && s.types[pos[1]] == B;
        (types_ok && triple == [-di, 2 * di - 1, 2 * di - 1]).then_some(Family::TypeOne { d })
    } else if l == k + 1 {
        let types_ok = s.types[neg] == A && s.types[pos[0]] == A && s.types[pos[1]] == B;
        let expected = [-ki * di, (ki + 1) * di, ki * (ki + 1) * di - 1];
        (types_ok && triple == expected).then_some(Family::TypeTwo { k, d })
    } else {
        None
    }
}

/// Keeps only the patterns whose family parameters admit no compressing
/// disk meeting the knot twice: type (1) needs `d = 2`, type (2) needs
/// `d = 1` and `k = 2`.
pub fn final_filter(s: &SurfacePattern, t: PretzelTriple) -> Verdict {
    let mut sorted = t.to_array();
    sorted.sort_unstable();
    let mut rebuilt = s.reconstruct_triple().to_array();
    rebuilt.sort_unstable();
    if sorted != rebuilt {
        return Verdict::Rejected(format!("pattern does not reconstruct {t}"));
    }
    match classify_family(s) {
        None => Verdict::Rejected("outside Type(1)/Type(2) families".to_string()),
        Some(Family::TypeOne { d: 2 }) => Verdict::Accepted,
        Some(Family::TypeOne { d }) => Verdict::Rejected(format!(
            "type (1) with d={d}: d=2 required; compressing disk exists"
        )),
        Some(Family::TypeTwo { k, d }) if d != 1 => Verdict::Rejected(format!(
            "type (2) with k={k}, d={d}: d=1 required; compressing disk exists"
        )),
        Some(Family::TypeTwo { k: 2, .. }) => Verdict::Accepted,
        Some(Family::TypeTwo { k, .. }) => Verdict::Rejected(format!(
            "type (2) with k={k}: k=2 required; compressing disk exists"
        )),
    }
}
