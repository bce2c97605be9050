//! Exact rational arithmetic over `i64`.
//!
//! Every slope in the crate is a [`Fraction`]. Intermediate products are
//! computed in `i128` and narrowed back after reduction, so any result that
//! does not fit in `i64` surfaces as [`Error::Overflow`] rather than wrapping.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Neg;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A reduced rational number with a strictly positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    numer: i64,
    denom: i64,
}

impl Fraction {
    pub const ZERO: Fraction = Fraction { numer: 0, denom: 1 };
    pub const ONE: Fraction = Fraction { numer: 1, denom: 1 };

    /// Builds the reduced representative of `n/d`.
    pub fn new(n: i64, d: i64) -> Result<Fraction> {
        reduce(n, d)
    }

    pub fn from_integer(n: i64) -> Fraction {
        Fraction { numer: n, denom: 1 }
    }

    /// `1/m`, the slope of an `m`-crossing vertical twist region.
    pub fn unit(m: i64) -> Result<Fraction> {
        reduce(1, m)
    }

    pub fn numer(&self) -> i64 {
        self.numer
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer == 0
    }

    pub fn is_integer(&self) -> bool {
        self.denom == 1
    }

    /// If the fraction is `1/m` for some integer `m`, returns `m`.
    pub fn unit_denominator(&self) -> Option<i64> {
        match self.numer {
            1 => Some(self.denom),
            -1 => Some(-self.denom),
            _ => None,
        }
    }

    pub fn checked_add(self, rhs: Fraction) -> Result<Fraction> {
        let n = self.numer as i128 * rhs.denom as i128 + rhs.numer as i128 * self.denom as i128;
        let d = self.denom as i128 * rhs.denom as i128;
        reduce_wide(n, d)
    }

    pub fn checked_sub(self, rhs: Fraction) -> Result<Fraction> {
        self.checked_add(-rhs)
    }

    pub fn checked_mul(self, rhs: Fraction) -> Result<Fraction> {
        let n = self.numer as i128 * rhs.numer as i128;
        let d = self.denom as i128 * rhs.denom as i128;
        reduce_wide(n, d)
    }

    pub fn recip(self) -> Result<Fraction> {
        reduce(self.denom, self.numer)
    }
}

impl Neg for Fraction {
    type Output = Fraction;

    fn neg(self) -> Fraction {
        // i64::MIN never appears as a numerator: reduce_wide rejects it.
        Fraction {
            numer: -self.numer,
            denom: self.denom,
        }
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.numer as i128 * other.denom as i128;
        let rhs = other.numer as i128 * self.denom as i128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Reduces `n/d` to lowest terms with a positive denominator.
pub fn reduce(n: i64, d: i64) -> Result<Fraction> {
    reduce_wide(n as i128, d as i128)
}

fn reduce_wide(n: i128, d: i128) -> Result<Fraction> {
    if d == 0 {
        return Err(Error::ZeroDenominator);
    }
    if n == 0 {
        return Ok(Fraction::ZERO);
    }
    let g = n.gcd(&d);
    let (mut n, mut d) = (n / g, d / g);
    if d < 0 {
        n = -n;
        d = -d;
    }
    let narrow = |v: i128| {
        i64::try_from(v)
            .ok()
            .filter(|v| *v != i64::MIN)
            .ok_or(Error::Overflow)
    };
    Ok(Fraction {
        numer: narrow(n)?,
        denom: narrow(d)?,
    })
}

/// Evaluates a continued fraction given innermost term first:
/// `[c1, .., cn]` is `cn + 1/(c(n-1) + 1/(.. + 1/c1))`.
pub fn cf_to_fraction(coeffs: &[i64]) -> Result<Fraction> {
    let (first, rest) = coeffs
        .split_first()
        .ok_or_else(|| Error::MalformedContinuedFraction("empty coefficient list".to_string()))?;
    let mut value = Fraction::from_integer(*first);
    for (i, &c) in rest.iter().enumerate() {
        if value.is_zero() {
            return Err(Error::MalformedContinuedFraction(format!(
                "division by zero after term {}",
                i + 1
            )));
        }
        value = Fraction::from_integer(c).checked_add(value.recip()?)?;
    }
    Ok(value)
}

/// Euclidean expansion with non-negative remainders, returned innermost term
/// first so that `cf_to_fraction(&fraction_to_cf(f)) == f`.
///
/// A proper fraction ends in a `0` term, e.g. `1/5` becomes `[5, 0]`.
pub fn fraction_to_cf(f: Fraction) -> Vec<i64> {
    let mut terms = Vec::new();
    let (mut n, mut d) = (f.numer, f.denom);
    loop {
        terms.push(n.div_euclid(d));
        let r = n.rem_euclid(d);
        if r == 0 {
            break;
        }
        n = d;
        d = r;
    }
    terms.reverse();
    terms
}

/// Exact value of the sum of `1/v` over `values`.
pub fn sum_reciprocals(values: &[i64]) -> Result<Fraction> {
    values.iter().try_fold(Fraction::ZERO, |acc, &v| {
        acc.checked_add(Fraction::unit(v)?)
    })
}
