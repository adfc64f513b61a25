//! Unit-tagged, reference-keyed distance profiles.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::dataset::names::normalize_name;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Unit {
    Jornadas,
    Hours,
    Kilometers,
}

impl Unit {
    /// Short label used in table headers and file names.
    pub fn abbrev(self) -> &'static str {
        match self {
            Unit::Jornadas => "jornadas",
            Unit::Hours => "hours",
            Unit::Kilometers => "km",
        }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.abbrev())
    }
}

impl FromStr for Unit {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "jornadas" | "jornada" => Ok(Unit::Jornadas),
            "hours" | "hour" | "h" | "horas" => Ok(Unit::Hours),
            "km" | "kilometers" | "kilometres" => Ok(Unit::Kilometers),
            other => Err(format!("unknown unit '{other}'")),
        }
    }
}

/// Travel-day conversion rates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConversionRates {
    km_per_jornada: f64,
    hours_per_jornada: f64,
}

impl ConversionRates {
    pub const DEFAULT_KM_PER_JORNADA: f64 = 31.0;
    pub const DEFAULT_HOURS_PER_JORNADA: f64 = 10.0;

    pub fn new(km_per_jornada: f64, hours_per_jornada: f64) -> Result<Self> {
        for rate in [km_per_jornada, hours_per_jornada] {
            if !(rate.is_finite() && rate > 0.0) {
                return Err(Error::InvalidRate(rate));
            }
        }
        Ok(Self {
            km_per_jornada,
            hours_per_jornada,
        })
    }

    pub fn km_per_jornada(&self) -> f64 {
        self.km_per_jornada
    }

    pub fn hours_per_jornada(&self) -> f64 {
        self.hours_per_jornada
    }

    fn rate_to(&self, unit: Unit) -> f64 {
        match unit {
            Unit::Jornadas => 1.0,
            Unit::Hours => self.hours_per_jornada,
            Unit::Kilometers => self.km_per_jornada,
        }
    }
}

impl Default for ConversionRates {
    fn default() -> Self {
        Self {
            km_per_jornada: Self::DEFAULT_KM_PER_JORNADA,
            hours_per_jornada: Self::DEFAULT_HOURS_PER_JORNADA,
        }
    }
}

/// An ordered, name-keyed vector of non-negative distances in one unit.
///
/// Reference names are normalized on construction and must be unique.
/// Entry order is preserved for display but never used for alignment.
#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    unit: Unit,
    entries: Vec<(String, f64)>,
}

impl Profile {
    pub fn new<I, S>(unit: Unit, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, f64)>,
        S: AsRef<str>,
    {
        let mut out: Vec<(String, f64)> = Vec::new();
        for (raw, value) in entries {
            let name = normalize_name(raw.as_ref())?;
            if !(value.is_finite() && value >= 0.0) {
                return Err(Error::InvalidValue { name, value });
            }
            if out.iter().any(|(n, _)| *n == name) {
                return Err(Error::DuplicateReference(name));
            }
            out.push((name, value));
        }
        if out.is_empty() {
            return Err(Error::EmptyProfile);
        }
        Ok(Self { unit, entries: out })
    }

    /// Builds a profile by pairing names with values positionally.
    pub fn from_parts<S: AsRef<str>>(unit: Unit, names: &[S], values: &[f64]) -> Result<Self> {
        if names.len() != values.len() {
            return Err(Error::ReferenceMismatch(format!(
                "{} names but {} values",
                names.len(),
                values.len()
            )));
        }
        Self::new(unit, names.iter().zip(values.iter().copied()))
    }

    pub fn unit(&self) -> Unit {
        self.unit
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, f64)> + '_ {
        self.entries.iter().map(|(n, v)| (n.as_str(), *v))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> + '_ {
        self.entries.iter().map(|(n, _)| n.as_str())
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.entries.iter().map(|(_, v)| *v)
    }

    /// Looks up a value by (raw or canonical) reference name.
    pub fn get(&self, name: &str) -> Option<f64> {
        self.position(name).map(|i| self.entries[i].1)
    }

    fn position(&self, name: &str) -> Option<usize> {
        if let Some(i) = self.entries.iter().position(|(n, _)| n == name) {
            return Some(i);
        }
        let key = normalize_name(name).ok()?;
        self.entries.iter().position(|(n, _)| *n == key)
    }

    /// Values reordered to follow `names`.
    pub fn aligned_to<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<f64>> {
        if names.len() != self.entries.len() {
            return Err(Error::ReferenceMismatch(format!(
                "expected {} references, profile has {}",
                names.len(),
                self.entries.len()
            )));
        }
        names
            .iter()
            .map(|n| {
                self.get(n.as_ref()).ok_or_else(|| {
                    Error::ReferenceMismatch(format!("'{}' missing from profile", n.as_ref()))
                })
            })
            .collect()
    }

    /// Keeps only the named references, in the order given.
    pub fn restrict<S: AsRef<str>>(&self, keep: &[S]) -> Result<Self> {
        if keep.is_empty() {
            return Err(Error::EmptySelection);
        }
        let mut entries: Vec<(String, f64)> = Vec::with_capacity(keep.len());
        for raw in keep {
            let i = self
                .position(raw.as_ref())
                .ok_or_else(|| Error::ReferenceNotFound(raw.as_ref().to_string()))?;
            let (name, value) = &self.entries[i];
            if entries.iter().any(|(n, _)| n == name) {
                return Err(Error::DuplicateReference(name.clone()));
            }
            entries.push((name.clone(), *value));
        }
        Ok(Self {
            unit: self.unit,
            entries,
        })
    }

    /// Every value multiplied by `factor` (which must be finite and non-negative).
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(self.unit, self.entries.iter().map(|(n, v)| (n, v * factor)))
    }

    /// The all-zero profile over the same references.
    pub fn zero_like(&self) -> Self {
        Self {
            unit: self.unit,
            entries: self.entries.iter().map(|(n, _)| (n.clone(), 0.0)).collect(),
        }
    }

    /// Converts a profile expressed in jornadas into `target` units.
    ///
    /// Only conversions out of jornadas are supported; `target == Jornadas`
    /// returns the profile unchanged.
    pub fn convert(&self, target: Unit, rates: &ConversionRates) -> Result<Self> {
        if self.unit != Unit::Jornadas {
            return Err(Error::UnsupportedConversion {
                from: self.unit,
                to: target,
            });
        }
        let rate = rates.rate_to(target);
        Ok(Self {
            unit: target,
            entries: self
                .entries
                .iter()
                .map(|(n, v)| (n.clone(), v * rate))
                .collect(),
        })
    }
}

/// Free-function form of [`Profile::convert`].
pub fn convert(p: &Profile, target: Unit, rates: &ConversionRates) -> Result<Profile> {
    p.convert(target, rates)
}
