//! Solutions of `-1/a + 1/b + 1/c = 0` and the boundary-slope rules for the
//! two ways a candidate surface can meet a rational tangle ball.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::Fraction;

/// A solution `(a, b, c)` with its parametrization
/// `a = k(l-k)d`, `b = l(l-k)d`, `c = kld`, where `gcd(k, l) = 1` and
/// `k < l <= 2k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LemmaSolution {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub k: u64,
    pub l: u64,
    pub d: u64,
}

impl LemmaSolution {
    pub fn triple(&self) -> (u64, u64, u64) {
        (self.a, self.b, self.c)
    }
}

fn check_params(k: u64, l: u64, d: u64) -> Result<()> {
    if k == 0 || d == 0 {
        return Err(Error::InvalidParameter(format!(
            "k and d must be positive (k={k}, d={d})"
        )));
    }
    if !(k < l && l <= 2 * k) {
        return Err(Error::InvalidParameter(format!(
            "need k < l <= 2k (k={k}, l={l})"
        )));
    }
    if k.gcd(&l) != 1 {
        return Err(Error::InvalidParameter(format!(
            "k={k} and l={l} are not coprime"
        )));
    }
    Ok(())
}

/// `(k(l-k)d, l(l-k)d, kld)`.
pub fn parametrize(k: u64, l: u64, d: u64) -> Result<(u64, u64, u64)> {
    check_params(k, l, d)?;
    let mul = |x: u64, y: u64| x.checked_mul(y).ok_or(Error::Overflow);
    let a = mul(mul(k, l - k)?, d)?;
    let b = mul(mul(l, l - k)?, d)?;
    let c = mul(mul(k, l)?, d)?;
    Ok((a, b, c))
}

/// Recovers `(k, l, d)` from a solution: `k/l` is `a/b` in lowest terms and
/// `d = gcd(a, b)/(l - k)`.
pub fn recover_params(a: u64, b: u64, c: u64) -> Option<(u64, u64, u64)> {
    if a == 0 || a >= b {
        return None;
    }
    let g = a.gcd(&b);
    let (k, l) = (a / g, b / g);
    if !g.is_multiple_of(l - k) {
        return None;
    }
    let d = g / (l - k);
    (parametrize(k, l, d).ok() == Some((a, b, c))).then_some((k, l, d))
}

/// Every solution with `c <= max_c`, sorted by `(a, b, c)`.
///
/// Includes `(1, 2, 2)` from `(k, l, d) = (1, 2, 1)`.
pub fn enumerate_solutions(max_c: u64) -> Result<Vec<LemmaSolution>> {
    if max_c < 2 {
        return Err(Error::InvalidParameter(format!(
            "max_c must be at least 2, got {max_c}"
        )));
    }
    let mut out = Vec::new();
    // c = kld >= k(k+1), so k is bounded by sqrt(max_c).
    let mut k = 1u64;
    while k * (k + 1) <= max_c {
        for l in (k + 1)..=(2 * k) {
            if k.gcd(&l) != 1 || k * l > max_c {
                continue;
            }
            for d in 1..=(max_c / (k * l)) {
                let (a, b, c) = parametrize(k, l, d)?;
                out.push(LemmaSolution { a, b, c, k, l, d });
            }
        }
        k += 1;
    }
    out.sort_unstable();
    Ok(out)
}

/// Exhaustive scan over `1 <= a < b <= c <= max_c` keeping exact solutions.
pub fn brute_force_solutions(max_c: u64) -> Result<Vec<(u64, u64, u64)>> {
    if max_c < 2 {
        return Err(Error::InvalidParameter(format!(
            "max_c must be at least 2, got {max_c}"
        )));
    }
    let mut out = Vec::new();
    for a in 1..=max_c {
        for b in (a + 1)..=max_c {
            for c in b..=max_c {
                // -1/a + 1/b + 1/c = 0  <=>  bc = ac + ab
                if (b as u128) * (c as u128) == (a as u128) * (c as u128 + b as u128) {
                    out.push((a, b, c));
                }
            }
        }
    }
    Ok(out)
}

/// Boundary slope when the surface meets the tangle ball in parallel disks:
/// the tangle slope `1/m` itself.
pub fn type_a_slope(m: i64) -> Result<Fraction> {
    if m == 0 {
        return Err(Error::DegenerateTangle(
            "twist count 0 has no slope 1/m".to_string(),
        ));
    }
    Fraction::unit(m)
}

/// Boundary slope `1/(m+1)` when the surface meets the tangle ball in one
/// disk containing both strings.
pub fn type_b_slope(m: i64) -> Result<Fraction> {
    if m == 0 {
        return Err(Error::DegenerateTangle(
            "twist count 0 has no slope 1/m".to_string(),
        ));
    }
    if m == -1 {
        return Err(Error::DegenerateSlope(
            "tangle slope -1 gives boundary slope 1/0".to_string(),
        ));
    }
    Fraction::unit(m.checked_add(1).ok_or(Error::Overflow)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SlopeCondition {
    /// `a*m = b - 1`
    ConditionI,
    /// `a > 1` and `a*m = b + 1`
    ConditionII,
    None,
}

/// Classifies boundary slope `a/b` against tangle slope `1/m`. The formulas
/// are applied literally for negative `m` as well.
pub fn slope_condition(tangle_m: i64, boundary: Fraction) -> SlopeCondition {
    let a = boundary.numer() as i128;
    let b = boundary.denom() as i128;
    let am = a * tangle_m as i128;
    if am == b - 1 {
        SlopeCondition::ConditionI
    } else if a > 1 && am == b + 1 {
        SlopeCondition::ConditionII
    } else {
        SlopeCondition::None
    }
}
