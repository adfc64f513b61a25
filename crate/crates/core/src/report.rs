//! Rendering rankings, relative-error comparisons and gap analyses as
//! tables, and regenerating the full study as a set of documents.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use csv::WriterBuilder;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::analysis::{
    top_k, GapReport, RankingEntry, RunResult, StudyGrid, Sweep, TableSet, DEFAULT_TOP_K,
};
use crate::dataset::DistanceTable;
use crate::error::Result;
use crate::metric::Metric;
use crate::profile::{ConversionRates, Profile};

/// Label of the target row at the top of every ranking table.
pub const TARGET_LABEL: &str = "LUGAR DE LA MANCHA";

/// Two decimals, half away from zero.
pub fn format_2dp(value: f64) -> String {
    let rounded = (value * 100.0).round() / 100.0;
    // avoid "-0.00"
    let rounded = if rounded == 0.0 { 0.0 } else { rounded };
    format!("{rounded:.2}")
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Num(f64),
    Int(usize),
    Empty,
}

impl Cell {
    fn text(s: impl Into<String>) -> Self {
        Cell::Text(s.into())
    }

    fn display(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Num(v) => format_2dp(*v),
            Cell::Int(v) => v.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Num(v) => format_2dp(*v)
                .parse::<f64>()
                .ok()
                .and_then(serde_json::Number::from_f64)
                .map_or(Value::Null, Value::Number),
            Cell::Int(v) => Value::from(*v),
            Cell::Empty => Value::Null,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Markdown,
    /// Comma-delimited, dot decimals, header row first.
    Delimited,
    /// One JSON object per row (JSON lines).
    Records,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Markdown => "md",
            Format::Delimited => "csv",
            Format::Records => "jsonl",
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "markdown" | "md" => Ok(Format::Markdown),
            "csv" | "delimited" => Ok(Format::Delimited),
            "jsonl" | "records" | "json" => Ok(Format::Records),
            other => Err(format!("unknown format '{other}'")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Markdown => "markdown",
            Format::Delimited => "csv",
            Format::Records => "jsonl",
        })
    }
}

/// A titled table whose rows all have the header's arity.
#[derive(Debug, Clone, PartialEq)]
pub struct RenderedTable {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub note: Option<String>,
    pub format: Format,
}

impl RenderedTable {
    fn new(title: impl Into<String>, header: Vec<String>) -> Self {
        Self {
            title: title.into(),
            header,
            rows: Vec::new(),
            note: None,
            format: Format::default(),
        }
    }

    fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn with_format(mut self, format: Format) -> Self {
        self.format = format;
        self
    }

    pub fn render(&self) -> String {
        match self.format {
            Format::Markdown => self.markdown(),
            Format::Delimited => self.delimited(),
            Format::Records => self.records(),
        }
    }

    fn markdown(&self) -> String {
        let mut out = format!("### {}\n\n", self.title);
        out.push_str(&format!("| {} |\n", self.header.join(" | ")));
        out.push_str(&format!(
            "|{}|\n",
            self.header
                .iter()
                .map(|_| "---")
                .collect::<Vec<_>>()
                .join("|")
        ));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::display).collect();
            out.push_str(&format!("| {} |\n", cells.join(" | ")));
        }
        if let Some(note) = &self.note {
            out.push_str(&format!("\n_{note}_\n"));
        }
        out
    }

    fn delimited(&self) -> String {
        let mut writer = WriterBuilder::new().from_writer(Vec::new());
        writer.write_record(&self.header).expect("in-memory write");
        for row in &self.rows {
            writer
                .write_record(row.iter().map(Cell::display))
                .expect("in-memory write");
        }
        String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 cells")
    }

    fn records(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let mut record = Map::new();
            record.insert("table".to_string(), Value::String(self.title.clone()));
            for (key, cell) in self.header.iter().zip(row) {
                record.insert(key.clone(), cell.json());
            }
            out.push_str(&Value::Object(record).to_string());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for RenderedTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// A published result from an earlier study, carried verbatim.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExternalResultRow {
    pub source: &'static str,
    pub localities: &'static [(&'static str, &'static str)],
    pub gap: Option<&'static str>,
    pub mean: Option<&'static str>,
}

pub const EXTERNAL_ROWS: [ExternalResultRow; 4] = [
    ExternalResultRow {
        source: "[7]",
        localities: &[("Alcubillas", "8,30"), ("Villanueva Inf.", "10,38")],
        gap: Some("2,08"),
        mean: None,
    },
    ExternalResultRow {
        source: "[3] con L_∞",
        localities: &[
            ("Fuenllana", "12,00"),
            ("Villanueva Inf.", "12,19"),
            ("Carrizosa", "15,12"),
        ],
        gap: Some("0,19"),
        mean: None,
    },
    ExternalResultRow {
        source: "[3] con L_1",
        localities: &[
            ("Carrizosa", "6,86"),
            ("Fuenllana", "9,24"),
            ("Villanueva Inf.", "9,27"),
        ],
        gap: Some("2,37"),
        mean: Some("1,10"),
    },
    ExternalResultRow {
        source: "[3] con L_2",
        localities: &[
            ("Carrizosa", "9,15"),
            ("Villanueva Inf.", "9,90"),
            ("Fuenllana", "9,98"),
        ],
        gap: Some("0,75"),
        mean: None,
    },
];

const EXTERNAL_NOTE: &str =
    "Rows labelled [n] are published results of earlier studies, copied verbatim (comma decimals) and not recomputed.";

fn header_with_refs(first: &str, refs: &[String], last: Option<String>) -> Vec<String> {
    std::iter::once(first.to_string())
        .chain(refs.iter().cloned())
        .chain(last)
        .collect()
}

/// The raw data table.
pub fn render_distance_table(table: &DistanceTable, title: impl Into<String>) -> RenderedTable {
    let mut out = RenderedTable::new(
        title,
        header_with_refs("locality", table.references(), None),
    );
    for (name, row) in table.rows() {
        let mut cells = vec![Cell::text(name)];
        cells.extend(row.values().map(Cell::Num));
        out.push(cells);
    }
    out
}

/// Target row followed by the given ranking entries, each with its
/// per-reference values and its distance.
pub fn render_ranking(
    table: &DistanceTable,
    target: &Profile,
    ranking: &[RankingEntry],
    metric: Metric,
    title: impl Into<String>,
) -> Result<RenderedTable> {
    let mut out = RenderedTable::new(
        title,
        header_with_refs("locality", table.references(), Some(metric.column_header())),
    );
    let mut first = vec![Cell::text(TARGET_LABEL)];
    first.extend(
        target
            .aligned_to(table.references())?
            .into_iter()
            .map(Cell::Num),
    );
    first.push(Cell::Num(0.0));
    out.push(first);
    for entry in ranking {
        let row = table.row(&entry.candidate).ok_or_else(|| {
            crate::Error::ReferenceMismatch(format!("no row '{}'", entry.candidate))
        })?;
        let mut cells = vec![Cell::text(&entry.candidate)];
        cells.extend(row.values().map(Cell::Num));
        cells.push(Cell::Num(entry.distance));
        out.push(cells);
    }
    Ok(out)
}

/// Top-`k` ranking table for one evaluated configuration.
pub fn render_run(run: &RunResult, k: usize) -> Result<RenderedTable> {
    let k = k.min(run.ranking.len());
    let title = format!(
        "{} distances, {}: {} closest candidates",
        run.configuration.metric,
        run.configuration.family.label(),
        k
    );
    render_ranking(
        &run.table,
        &run.target,
        top_k(&run.ranking, k),
        run.configuration.metric,
        title,
    )
}

/// Rank, distance and relative error of the top-`k` candidates.
pub fn render_errors(run: &RunResult, k: usize) -> RenderedTable {
    let mut out = RenderedTable::new(
        format!("Relative errors, {}", run.configuration.label()),
        vec![
            "rank".to_string(),
            "locality".to_string(),
            run.configuration.metric.column_header(),
            "relative error (%)".to_string(),
        ],
    );
    for (entry, err) in top_k(&run.ranking, k).iter().zip(&run.relative_errors) {
        out.push(vec![
            Cell::Int(entry.rank),
            Cell::text(&entry.candidate),
            Cell::Num(entry.distance),
            Cell::Num(*err),
        ]);
    }
    out
}

/// The three leading candidates and their relative errors for every run,
/// preceded by the external rows.
pub fn render_relative_errors(sweep: &Sweep, externals: &[ExternalResultRow]) -> RenderedTable {
    let mut header = vec!["configuration".to_string()];
    for i in 1..=3 {
        header.push(format!("locality {i}"));
        header.push(format!("error {i} (%)"));
    }
    let mut out = RenderedTable::new(
        "Three closest candidates and their relative errors (%)",
        header,
    );
    for ext in externals {
        let mut cells = vec![Cell::text(ext.source)];
        for i in 0..3 {
            match ext.localities.get(i) {
                Some((name, err)) => cells.extend([Cell::text(*name), Cell::text(*err)]),
                None => cells.extend([Cell::Empty, Cell::Empty]),
            }
        }
        out.push(cells);
    }
    for run in &sweep.runs {
        let mut cells = vec![Cell::text(run.configuration.label())];
        for i in 0..3 {
            match (run.ranking.get(i), run.relative_errors.get(i)) {
                (Some(e), Some(err)) => cells.extend([Cell::text(&e.candidate), Cell::Num(*err)]),
                _ => cells.extend([Cell::Empty, Cell::Empty]),
            }
        }
        out.push(cells);
    }
    if !externals.is_empty() {
        out.note = Some(EXTERNAL_NOTE.to_string());
    }
    out
}

/// Second-minus-first relative-error gaps with the per-family mean (placed
/// on the L1 row), preceded by the external rows.
pub fn render_gaps(sweep: &Sweep, externals: &[ExternalResultRow]) -> RenderedTable {
    let mut out = RenderedTable::new(
        "Relative-error gap between the second and the first candidate (%)",
        vec![
            "configuration".to_string(),
            "gap (%)".to_string(),
            "mean gap (%)".to_string(),
        ],
    );
    for ext in externals {
        let cell = |v: Option<&str>| v.map_or(Cell::Empty, Cell::text);
        out.push(vec![Cell::text(ext.source), cell(ext.gap), cell(ext.mean)]);
    }
    for report in &sweep.gaps {
        for record in &report.records {
            let mean = if record.metric == Metric::L1 {
                Cell::Num(report.mean_gap)
            } else {
                Cell::Empty
            };
            out.push(vec![
                Cell::text(format!("{} | {}", report.family, record.metric)),
                Cell::Num(record.gap),
                mean,
            ]);
        }
    }
    if !externals.is_empty() {
        out.note = Some(EXTERNAL_NOTE.to_string());
    }
    out
}

/// One family's per-metric leaders, relative errors and gaps, closed by
/// the mean gap.
pub fn render_gap_report(report: &GapReport) -> RenderedTable {
    let mut out = RenderedTable::new(
        format!("Top-two relative-error gaps, {}", report.family),
        vec![
            "metric".to_string(),
            "locality 1".to_string(),
            "error 1 (%)".to_string(),
            "locality 2".to_string(),
            "error 2 (%)".to_string(),
            "gap (%)".to_string(),
        ],
    );
    for record in &report.records {
        let mut cells = vec![Cell::text(record.metric.to_string())];
        for i in 0..2 {
            match record.top.get(i) {
                Some(e) => cells.extend([Cell::text(&e.candidate), Cell::Num(e.relative_error)]),
                None => cells.extend([Cell::Empty, Cell::Empty]),
            }
        }
        cells.push(Cell::Num(record.gap));
        out.push(cells);
    }
    out.push(vec![
        Cell::text("mean"),
        Cell::Empty,
        Cell::Empty,
        Cell::Empty,
        Cell::Empty,
        Cell::Num(report.mean_gap),
    ]);
    out
}

/// One row per configuration with its two leading candidates.
pub fn render_sweep_overview(sweep: &Sweep) -> RenderedTable {
    let mut out = RenderedTable::new(
        "Sweep overview",
        vec![
            "configuration".to_string(),
            "rank 1".to_string(),
            "distance 1".to_string(),
            "error 1 (%)".to_string(),
            "rank 2".to_string(),
            "distance 2".to_string(),
            "error 2 (%)".to_string(),
        ],
    );
    for run in &sweep.runs {
        let mut cells = vec![Cell::text(run.configuration.label())];
        for i in 0..2 {
            match (run.ranking.get(i), run.relative_errors.get(i)) {
                (Some(e), Some(err)) => cells.extend([
                    Cell::text(&e.candidate),
                    Cell::Num(e.distance),
                    Cell::Num(*err),
                ]),
                _ => cells.extend([Cell::Empty, Cell::Empty, Cell::Empty]),
            }
        }
        out.push(cells);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Winner {
    pub configuration: String,
    pub candidate: String,
    pub distance: f64,
    pub relative_error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyStats {
    pub family: String,
    /// Mean over the family's metrics of the rank-1 relative error (%).
    pub mean_winner_error: f64,
    pub mean_gap: f64,
}

/// km-based and hours-based runs that differ only in unit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UnitAgreement {
    pub km: String,
    pub hours: String,
    pub km_top: Vec<String>,
    pub hours_top: Vec<String>,
    /// Same set of names.
    pub same_names: bool,
    /// Same names in the same order.
    pub same_order: bool,
}

/// Machine-checkable facts drawn from a sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Conclusions {
    pub winners: Vec<Winner>,
    pub families: Vec<FamilyStats>,
    pub min_error_family: Option<String>,
    pub max_gap_family: Option<String>,
    pub min_gap_family: Option<String>,
    pub unit_agreement: Vec<UnitAgreement>,
    pub units_agree_on_names: bool,
}

pub fn summarize_conclusions(sweep: &Sweep) -> Conclusions {
    let winners = sweep
        .runs
        .iter()
        .map(|r| Winner {
            configuration: r.configuration.label(),
            candidate: r.winner().candidate.clone(),
            distance: r.winner().distance,
            relative_error: r.relative_errors[0],
        })
        .collect();

    let families: Vec<FamilyStats> = sweep
        .gaps
        .iter()
        .map(|g| FamilyStats {
            family: g.family.clone(),
            mean_winner_error: g
                .records
                .iter()
                .map(|r| r.top[0].relative_error)
                .sum::<f64>()
                / g.records.len() as f64,
            mean_gap: g.mean_gap,
        })
        .collect();
    let pick = |key: fn(&FamilyStats) -> f64, max: bool| {
        families
            .iter()
            .reduce(|best, f| {
                let better = if max {
                    key(f) > key(best)
                } else {
                    key(f) < key(best)
                };
                if better {
                    f
                } else {
                    best
                }
            })
            .map(|f| f.family.clone())
    };
    let min_error_family = pick(|f| f.mean_winner_error, false);
    let max_gap_family = pick(|f| f.mean_gap, true);
    let min_gap_family = pick(|f| f.mean_gap, false);

    let mut unit_agreement = Vec::new();
    for km in sweep
        .runs
        .iter()
        .filter(|r| r.configuration.family.unit == crate::Unit::Kilometers)
    {
        let partner = sweep.runs.iter().find(|h| {
            h.configuration.family.unit == crate::Unit::Hours
                && h.configuration.metric == km.configuration.metric
                && h.configuration.family.references == km.configuration.family.references
                && h.configuration.family.solution == km.configuration.family.solution
        });
        if let Some(hours) = partner {
            let km_top = owned(km.top_names(DEFAULT_TOP_K));
            let hours_top = owned(hours.top_names(DEFAULT_TOP_K));
            let mut a = km_top.clone();
            let mut b = hours_top.clone();
            a.sort();
            b.sort();
            unit_agreement.push(UnitAgreement {
                km: km.configuration.label(),
                hours: hours.configuration.label(),
                same_names: a == b,
                same_order: km_top == hours_top,
                km_top,
                hours_top,
            });
        }
    }
    let units_agree_on_names = unit_agreement.iter().all(|u| u.same_names);

    Conclusions {
        winners,
        families,
        min_error_family,
        max_gap_family,
        min_gap_family,
        unit_agreement,
        units_agree_on_names,
    }
}

fn owned(names: Vec<&str>) -> Vec<String> {
    names.into_iter().map(str::to_string).collect()
}

/// File number of the `index`-th ranking table of the study grid: 2..=4
/// then 6..=26 (number 5 is the hours data table).
pub fn ranking_table_number(index: usize) -> usize {
    if index < 3 {
        index + 2
    } else {
        index + 3
    }
}

/// The full set of study documents, as (file name, contents) pairs.
pub fn study_documents(format: Format) -> Result<Vec<(String, String)>> {
    let tables = TableSet::builtin();
    let sweep = StudyGrid::new().run(&tables, &ConversionRates::default())?;
    let name = |n: usize| format!("table_{n:02}.{}", format.extension());
    let mut docs = Vec::new();

    docs.push((
        name(1),
        render_distance_table(
            tables.get(crate::Unit::Kilometers)?,
            "Distances in km along optimal paths",
        )
        .with_format(format)
        .render(),
    ));
    docs.push((
        name(5),
        render_distance_table(tables.get(crate::Unit::Hours)?, "Distances in hours")
            .with_format(format)
            .render(),
    ));
    for (i, run) in sweep.runs.iter().enumerate() {
        docs.push((
            name(ranking_table_number(i)),
            render_run(run, DEFAULT_TOP_K)?.with_format(format).render(),
        ));
    }
    docs.push((
        name(27),
        render_relative_errors(&sweep, &EXTERNAL_ROWS)
            .with_format(format)
            .render(),
    ));
    docs.push((
        name(28),
        render_gaps(&sweep, &EXTERNAL_ROWS)
            .with_format(format)
            .render(),
    ));
    let summary =
        serde_json::to_string_pretty(&summarize_conclusions(&sweep)).expect("summary serializes");
    docs.push(("summary.json".to_string(), summary + "\n"));
    docs.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(docs)
}

/// Writes every study document into `dir`, returning the written paths.
pub fn reproduce(dir: &Path, format: Format) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let docs = study_documents(format)?;
    let mut written = Vec::with_capacity(docs.len());
    for (file, contents) in docs {
        let path = dir.join(file);
        fs::write(&path, contents)?;
        written.push(path);
    }
    Ok(written)
}
