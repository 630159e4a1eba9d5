//! Classical size bounds for binary codes, evaluated in exact rationals.
//!
//! Every bound is reported as a threshold on the code size `M`: packing
//! bounds give an upper limit, covering bounds a lower limit.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundName {
    SpherePacking,
    SphereCovering,
    Johnson,
    Struik,
    VanWee,
}

impl BoundName {
    pub const ALL: [BoundName; 5] = [
        BoundName::SpherePacking,
        BoundName::SphereCovering,
        BoundName::Johnson,
        BoundName::Struik,
        BoundName::VanWee,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            BoundName::SpherePacking => "sphere_packing",
            BoundName::SphereCovering => "sphere_covering",
            BoundName::Johnson => "johnson",
            BoundName::Struik => "struik",
            BoundName::VanWee => "van_wee",
        }
    }

    pub fn direction(&self) -> Direction {
        match self {
            BoundName::SpherePacking | BoundName::Johnson => Direction::AtMost,
            _ => Direction::AtLeast,
        }
    }
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundName::ALL
            .into_iter()
            .find(|b| b.as_str() == s)
            .ok_or_else(|| Error::InvalidBoundName(s.to_string()))
    }
}

/// Which side of the threshold a code size must fall on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    AtMost,
    AtLeast,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub name: BoundName,
    pub n: u32,
    pub radius: u32,
    /// Threshold on `M`.
    pub value: BigRational,
    pub direction: Direction,
    pub m: Option<u64>,
    /// Whether `m` respects the bound; `None` when no size was given.
    pub satisfied: Option<bool>,
    /// Whether `m` meets the bound with equality.
    pub tight: Option<bool>,
}

fn binom(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn volume(n: u32, radius: u32) -> BigInt {
    (0..=radius.min(n)).map(|i| binom(n, i)).sum()
}

fn rat(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

fn space(n: u32) -> BigRational {
    rat(BigInt::one() << n as usize)
}

fn invalid(msg: String) -> Error {
    Error::InvalidParameters(msg)
}

/// Evaluates the size threshold of bound `name` for length `n` and radius `radius`.
pub fn bound_value(name: BoundName, n: u32, radius: u32) -> Result<BigRational> {
    if n < 1 {
        return Err(invalid("n must be at least 1".into()));
    }
    let total = space(n);
    let vol = rat(volume(n, radius));
    let r1 = radius + 1;
    match name {
        BoundName::SpherePacking => Ok(total / vol),
        BoundName::SphereCovering => Ok(total / vol),
        BoundName::Johnson => {
            let q = n / r1;
            if q == 0 {
                return Err(invalid(format!("johnson needs n >= R+1 (n={n}, R={radius})")));
            }
            if n < radius {
                return Err(invalid(format!("johnson needs n >= R (n={n}, R={radius})")));
            }
            let frac = BigRational::new(BigInt::from(n - radius), BigInt::from(r1));
            let extra = rat(binom(n, radius)) / rat(q) * (frac.clone() - frac.floor());
            Ok(total / (vol + extra))
        }
        BoundName::Struik => {
            if n < radius {
                return Err(invalid(format!("struik needs n >= R (n={n}, R={radius})")));
            }
            let c = BigRational::new(BigInt::from(n - radius), BigInt::from(r1)).ceil();
            if c.is_zero() {
                return Err(invalid(format!("struik needs n > R (n={n}, R={radius})")));
            }
            let frac = BigRational::new(BigInt::from(n + 1), BigInt::from(r1));
            let extra = rat(binom(n, radius)) / c * (frac.ceil() - frac);
            let denom = vol - extra;
            if denom <= BigRational::zero() {
                return Err(invalid("struik denominator is not positive".into()));
            }
            Ok(total / denom)
        }
        BoundName::VanWee => {
            if radius != 1 || n % 2 != 0 {
                return Err(invalid(format!(
                    "van_wee closed form is defined for even n and R=1 (n={n}, R={radius})"
                )));
            }
            Ok(total / rat(n))
        }
    }
}

pub fn bound(name: BoundName, n: u32, radius: u32, m: Option<u64>) -> Result<BoundReport> {
    let value = bound_value(name, n, radius)?;
    let direction = name.direction();
    let (satisfied, tight) = match m {
        Some(m) => {
            let m = rat(m);
            let ok = match direction {
                Direction::AtMost => m <= value,
                Direction::AtLeast => m >= value,
            };
            (Some(ok), Some(m == value))
        }
        None => (None, None),
    };
    Ok(BoundReport { name, n, radius, value, direction, m, satisfied, tight })
}
