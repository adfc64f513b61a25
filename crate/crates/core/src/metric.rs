//! The Minkowski (Lp) metric family over profiles.

use std::fmt;
use std::num::NonZeroU32;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::profile::Profile;

/// Selector for L∞ or Ln with integer n ≥ 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Metric {
    Infinity,
    Ln(NonZeroU32),
}

impl Metric {
    pub const L1: Metric = Metric::Ln(NonZeroU32::MIN);
    pub const L2: Metric = Metric::Ln(NonZeroU32::MIN.saturating_add(1));
    pub const LINF: Metric = Metric::Infinity;

    /// The three metrics used throughout the study, in report order.
    pub const STUDY: [Metric; 3] = [Metric::LINF, Metric::L1, Metric::L2];

    pub fn ln(n: u32) -> Result<Self> {
        NonZeroU32::new(n)
            .map(Metric::Ln)
            .ok_or_else(|| Error::InvalidMetric(format!("l{n}")))
    }

    /// Command-line token: `l1`, `l2`, `linf`, `l<n>`.
    pub fn token(&self) -> String {
        match self {
            Metric::Infinity => "linf".to_string(),
            Metric::Ln(n) => format!("l{n}"),
        }
    }

    /// Column header for the distance column of a ranking table.
    pub fn column_header(&self) -> String {
        match self {
            Metric::Infinity => "d_inf".to_string(),
            Metric::Ln(n) => format!("d_{n}"),
        }
    }

    /// Norm of a vector of per-reference differences (signs ignored).
    ///
    /// Ln is evaluated as `M * (Σ (|d|/M)^n)^(1/n)` with `M = max |d|` so
    /// large `n` cannot overflow.
    pub fn norm(&self, diffs: &[f64]) -> f64 {
        let max = diffs.iter().fold(0.0_f64, |m, d| m.max(d.abs()));
        match *self {
            Metric::Infinity => max,
            Metric::Ln(n) if n.get() == 1 => diffs.iter().map(|d| d.abs()).sum(),
            Metric::Ln(n) => {
                if max == 0.0 {
                    return 0.0;
                }
                let n = n.get();
                let sum: f64 = diffs
                    .iter()
                    .map(|d| {
                        let r = d.abs() / max;
                        if n <= i32::MAX as u32 {
                            r.powi(n as i32)
                        } else {
                            r.powf(n as f64)
                        }
                    })
                    .sum();
                max * sum.powf(1.0 / n as f64)
            }
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Metric::Infinity => f.write_str("L∞"),
            Metric::Ln(n) => write!(f, "L{n}"),
        }
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "linf" | "l_inf" | "inf" | "l∞" => return Ok(Metric::Infinity),
            _ => {}
        }
        lower
            .strip_prefix('l')
            .and_then(|rest| rest.trim_start_matches('_').parse::<u32>().ok())
            .and_then(NonZeroU32::new)
            .map(Metric::Ln)
            .ok_or_else(|| Error::InvalidMetric(s.to_string()))
    }
}

impl Serialize for Metric {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.token())
    }
}

/// Per-reference absolute differences, aligned by reference name.
pub fn aligned_differences(x: &Profile, y: &Profile) -> Result<Vec<f64>> {
    if x.unit() != y.unit() {
        return Err(Error::UnitMismatch {
            left: x.unit(),
            right: y.unit(),
        });
    }
    let names: Vec<&str> = x.names().collect();
    let other = y.aligned_to(&names)?;
    Ok(x.values().zip(other).map(|(a, b)| (a - b).abs()).collect())
}

/// Lp (or L∞) distance between two profiles with the same unit and references.
pub fn metric_distance(metric: Metric, x: &Profile, y: &Profile) -> Result<f64> {
    let diffs = aligned_differences(x, y)?;
    if let Some(bad) = diffs.iter().find(|d| !d.is_finite()) {
        return Err(Error::InvalidValue {
            name: "difference".to_string(),
            value: *bad,
        });
    }
    Ok(metric.norm(&diffs))
}

/// Distance from the all-zero profile over the same references.
pub fn magnitude(metric: Metric, p: &Profile) -> f64 {
    let values: Vec<f64> = p.values().collect();
    metric.norm(&values)
}
