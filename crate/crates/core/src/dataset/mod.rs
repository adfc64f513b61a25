//! Candidate × reference distance tables: the embedded datasets, delimited
//! text ingestion (dot or comma decimals) and column subsetting.

mod builtin;
pub mod names;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use csv::{ReaderBuilder, Trim, WriterBuilder};

use crate::error::{Error, Result};
use crate::profile::{Profile, Unit};
pub use names::{normalize_name, CanonicalName, MUNERA, REFERENCES};

/// A candidate × reference matrix in one unit.
///
/// Every row holds exactly one strictly positive, finite value per reference,
/// stored in the table's reference order.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceTable {
    unit: Unit,
    references: Vec<String>,
    rows: Vec<(String, Profile)>,
}

impl DistanceTable {
    pub fn new<R, C>(unit: Unit, references: &[R], rows: Vec<(C, Vec<f64>)>) -> Result<Self>
    where
        R: AsRef<str>,
        C: AsRef<str>,
    {
        let references = normalized_references(references)?;
        if rows.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut out: Vec<(String, Profile)> = Vec::with_capacity(rows.len());
        for (raw, values) in rows {
            let name = normalize_name(raw.as_ref())?;
            if out.iter().any(|(n, _)| *n == name) {
                return Err(Error::DuplicateCandidate(name));
            }
            if let Some((i, &value)) = values
                .iter()
                .enumerate()
                .find(|(_, v)| !(v.is_finite() && **v > 0.0))
            {
                return Err(Error::InvalidValue {
                    name: format!("{name} / {}", references.get(i).map_or("?", |s| s)),
                    value,
                });
            }
            let profile = Profile::from_parts(unit, &references, &values)?;
            out.push((name, profile));
        }
        Ok(Self {
            unit,
            references,
            rows: out,
        })
    }

    pub fn unit(&self) -> Unit {
        self.unit
    }

    pub fn references(&self) -> &[String] {
        &self.references
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn candidates(&self) -> impl Iterator<Item = &str> + '_ {
        self.rows.iter().map(|(n, _)| n.as_str())
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = (&str, &Profile)> + '_ {
        self.rows.iter().map(|(n, p)| (n.as_str(), p))
    }

    pub fn row(&self, candidate: &str) -> Option<&Profile> {
        let key = normalize_name(candidate).ok()?;
        self.rows.iter().find(|(n, _)| *n == key).map(|(_, p)| p)
    }

    /// Dot-decimal, comma-delimited text with a `name,<ref>...` header.
    /// Values are written at full precision so parsing recovers them exactly.
    pub fn to_delimited(&self) -> String {
        let mut writer = WriterBuilder::new().from_writer(Vec::new());
        let header = std::iter::once("name").chain(self.references.iter().map(String::as_str));
        writer.write_record(header).expect("in-memory write");
        for (name, profile) in &self.rows {
            let mut record = vec![name.clone()];
            record.extend(profile.values().map(|v| v.to_string()));
            writer.write_record(&record).expect("in-memory write");
        }
        String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }
}

fn normalized_references<R: AsRef<str>>(references: &[R]) -> Result<Vec<String>> {
    if references.is_empty() {
        return Err(Error::EmptySelection);
    }
    let mut out: Vec<String> = Vec::with_capacity(references.len());
    for raw in references {
        let name = normalize_name(raw.as_ref())?;
        if out.contains(&name) {
            return Err(Error::DuplicateReference(name));
        }
        out.push(name);
    }
    Ok(out)
}

/// Which embedded dataset to load.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    Km,
    Hours,
}

impl Builtin {
    pub fn unit(self) -> Unit {
        match self {
            Builtin::Km => Unit::Kilometers,
            Builtin::Hours => Unit::Hours,
        }
    }
}

/// One of the two embedded 24 × 4 tables, references in the order
/// Venta de Cárdenas, Puerto Lápice, El Toboso, Munera.
pub fn builtin_table(which: Builtin) -> DistanceTable {
    let rows = match which {
        Builtin::Km => &builtin::KM_ROWS,
        Builtin::Hours => &builtin::HOURS_ROWS,
    };
    DistanceTable::new(
        which.unit(),
        &REFERENCES,
        rows.iter().map(|(n, v)| (*n, v.to_vec())).collect(),
    )
    .expect("embedded table is valid")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DecimalSeparator {
    /// Comma decimals when the field delimiter is `;` or tab, dot otherwise.
    #[default]
    Auto,
    Dot,
    Comma,
}

impl FromStr for DecimalSeparator {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "auto" => Ok(Self::Auto),
            "dot" | "." => Ok(Self::Dot),
            "comma" | "," => Ok(Self::Comma),
            other => Err(format!("unknown decimal separator '{other}'")),
        }
    }
}

impl fmt::Display for DecimalSeparator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Auto => "auto",
            Self::Dot => "dot",
            Self::Comma => "comma",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseOptions {
    pub decimal_separator: DecimalSeparator,
    pub unit: Unit,
}

impl ParseOptions {
    pub fn new(unit: Unit) -> Self {
        Self {
            decimal_separator: DecimalSeparator::Auto,
            unit,
        }
    }
}

fn detect_delimiter(text: &str) -> u8 {
    let header = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    if header.contains(';') {
        b';'
    } else if header.contains('\t') {
        b'\t'
    } else {
        b','
    }
}

fn parse_cell(cell: &str, comma_decimal: bool) -> std::result::Result<f64, String> {
    let normalized;
    let text = if comma_decimal {
        if cell.contains('.') {
            return Err(format!("'{cell}' is not a comma-decimal number"));
        }
        normalized = cell.replace(',', ".");
        normalized.as_str()
    } else {
        cell
    };
    let value: f64 = text
        .parse()
        .map_err(|_| format!("'{cell}' is not a number"))?;
    if !(value.is_finite() && value > 0.0) {
        return Err(format!("'{cell}' must be positive and finite"));
    }
    Ok(value)
}

/// Parses delimiter-separated text (`,`, `;` or tab) whose header row names
/// the references and whose first column names the candidates.
pub fn parse_table(text: &str, options: ParseOptions) -> Result<DistanceTable> {
    let delimiter = detect_delimiter(text);
    let comma_decimal = match options.decimal_separator {
        DecimalSeparator::Auto => delimiter != b',',
        DecimalSeparator::Dot => false,
        DecimalSeparator::Comma => true,
    };
    if comma_decimal && delimiter == b',' {
        return Err(Error::ParseError {
            line: 1,
            column: None,
            message: "comma decimals need a ';' or tab field delimiter".to_string(),
        });
    }
    let mut reader = ReaderBuilder::new()
        .delimiter(delimiter)
        .has_headers(false)
        .flexible(true)
        .trim(Trim::All)
        .from_reader(text.as_bytes());

    let mut references: Option<Vec<String>> = None;
    let mut rows: Vec<(String, Vec<f64>)> = Vec::new();
    let mut seen: HashSet<String> = HashSet::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::ParseError {
            line: e.position().map_or(0, |p| p.line() as usize),
            column: None,
            message: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.iter().all(str::is_empty) {
            continue;
        }
        let Some(refs) = &references else {
            if record.len() < 2 {
                return Err(Error::ParseError {
                    line,
                    column: None,
                    message: "header needs a name column and at least one reference".to_string(),
                });
            }
            references = Some(normalized_references(
                &record.iter().skip(1).collect::<Vec<_>>(),
            )?);
            continue;
        };
        if record.len() != refs.len() + 1 {
            return Err(Error::ParseError {
                line,
                column: None,
                message: format!("expected {} fields, found {}", refs.len() + 1, record.len()),
            });
        }
        let name = normalize_name(&record[0]).map_err(|_| Error::ParseError {
            line,
            column: Some(1),
            message: "empty candidate name".to_string(),
        })?;
        if !seen.insert(name.clone()) {
            return Err(Error::DuplicateCandidate(name));
        }
        let values = record
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, cell)| {
                parse_cell(cell, comma_decimal).map_err(|message| Error::ParseError {
                    line,
                    column: Some(i + 1),
                    message,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push((name, values));
    }
    match references {
        Some(refs) if !rows.is_empty() => DistanceTable::new(options.unit, &refs, rows),
        _ => Err(Error::EmptyInput),
    }
}

/// Restricts a table to the kept references, in the table's column order.
pub fn subset_references<S: AsRef<str>>(t: &DistanceTable, keep: &[S]) -> Result<DistanceTable> {
    if keep.is_empty() {
        return Err(Error::EmptySelection);
    }
    let mut wanted: Vec<String> = Vec::with_capacity(keep.len());
    for raw in keep {
        let name = normalize_name(raw.as_ref())?;
        if !t.references.contains(&name) {
            return Err(Error::ReferenceNotFound(raw.as_ref().to_string()));
        }
        wanted.push(name);
    }
    let references: Vec<String> = t
        .references
        .iter()
        .filter(|r| wanted.contains(r))
        .cloned()
        .collect();
    let rows = t
        .rows
        .iter()
        .map(|(n, p)| Ok((n.clone(), p.restrict(&references)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(DistanceTable {
        unit: t.unit,
        references,
        rows,
    })
}

/// All references of `t` except the excluded ones.
pub fn exclude_references<S: AsRef<str>>(
    t: &DistanceTable,
    exclude: &[S],
) -> Result<DistanceTable> {
    let mut dropped: Vec<String> = Vec::with_capacity(exclude.len());
    for raw in exclude {
        let name = normalize_name(raw.as_ref())?;
        if !t.references.contains(&name) {
            return Err(Error::ReferenceNotFound(raw.as_ref().to_string()));
        }
        dropped.push(name);
    }
    let keep: Vec<&String> = t
        .references
        .iter()
        .filter(|r| !dropped.contains(r))
        .collect();
    subset_references(t, &keep)
}
