//! Ranking candidates against a target profile, relative errors, top-two
//! gaps and configuration sweeps.

use std::fmt;

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use crate::dataset::{builtin_table, subset_references, Builtin, DistanceTable, REFERENCES};
use crate::error::{Error, Result};
use crate::metric::{magnitude, Metric};
use crate::profile::{ConversionRates, Profile, Unit};

/// Number of candidates shown per ranking unless asked otherwise.
pub const DEFAULT_TOP_K: usize = 5;

/// Two distances closer than this (relative to the larger) count as tied.
pub const TIE_RELATIVE_TOLERANCE: f64 = 1e-9;

/// Row count above which ranking evaluates distances in parallel.
#[cfg(feature = "parallel")]
const PARALLEL_ROW_THRESHOLD: usize = 2048;

/// A labelled target profile expressed in jornadas.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionProfile {
    label: String,
    jornadas: Profile,
}

impl SolutionProfile {
    pub fn new(label: impl Into<String>, jornadas: Profile) -> Result<Self> {
        if jornadas.unit() != Unit::Jornadas {
            return Err(Error::UnitMismatch {
                left: jornadas.unit(),
                right: Unit::Jornadas,
            });
        }
        Ok(Self {
            label: label.into(),
            jornadas,
        })
    }

    /// (2, 2.37, 2.5, 2) jornadas.
    pub fn classic() -> Self {
        Self::builtin("classic", [2.0, 2.37, 2.5, 2.0])
    }

    /// (2, 2.42, 2.8, 2.23) jornadas.
    pub fn refined() -> Self {
        Self::builtin("refined", [2.0, 2.42, 2.8, 2.23])
    }

    fn builtin(label: &str, values: [f64; 4]) -> Self {
        let profile = Profile::from_parts(Unit::Jornadas, &REFERENCES, &values)
            .expect("built-in solution is valid");
        Self {
            label: label.to_string(),
            jornadas: profile,
        }
    }

    /// Looks up `classic` or `refined`.
    pub fn named(name: &str) -> Option<Self> {
        match name.trim().to_ascii_lowercase().as_str() {
            "classic" => Some(Self::classic()),
            "refined" => Some(Self::refined()),
            _ => None,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn jornadas(&self) -> &Profile {
        &self.jornadas
    }

    /// The solution restricted to `references` and converted to `unit`.
    pub fn target<S: AsRef<str>>(
        &self,
        unit: Unit,
        references: &[S],
        rates: &ConversionRates,
    ) -> Result<Profile> {
        self.jornadas.restrict(references)?.convert(unit, rates)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankingEntry {
    pub candidate: String,
    pub distance: f64,
    pub rank: usize,
}

struct Scored<'a> {
    name: &'a str,
    distance: f64,
    l2: f64,
}

fn nearly_equal(lower: f64, upper: f64) -> bool {
    upper - lower <= TIE_RELATIVE_TOLERANCE * upper.abs().max(lower.abs())
}

/// Index ranges of runs of nearly equal keys in a slice sorted by `key`.
fn tie_groups<T>(items: &[T], key: impl Fn(&T) -> f64) -> Vec<std::ops::Range<usize>> {
    let mut groups = Vec::new();
    let mut start = 0;
    for i in 1..=items.len() {
        if i == items.len() || !nearly_equal(key(&items[i - 1]), key(&items[i])) {
            if i - start > 1 {
                groups.push(start..i);
            }
            start = i;
        }
    }
    groups
}

fn score_row<'a>(name: &'a str, row: &Profile, target: &[f64], metric: Metric) -> Scored<'a> {
    let diffs: Vec<f64> = row
        .values()
        .zip(target)
        .map(|(a, b)| (a - b).abs())
        .collect();
    Scored {
        name,
        distance: metric.norm(&diffs),
        l2: Metric::L2.norm(&diffs),
    }
}

/// Ranks every candidate of `table` by its `metric` distance to `target`.
///
/// Ties (within [`TIE_RELATIVE_TOLERANCE`]) are broken by ascending L2
/// distance to the target, then by candidate name.
pub fn rank_candidates(
    table: &DistanceTable,
    target: &Profile,
    metric: Metric,
) -> Result<Vec<RankingEntry>> {
    if table.unit() != target.unit() {
        return Err(Error::UnitMismatch {
            left: table.unit(),
            right: target.unit(),
        });
    }
    let aligned = target.aligned_to(table.references())?;

    #[cfg(feature = "parallel")]
    let mut scored: Vec<Scored> = if table.len() >= PARALLEL_ROW_THRESHOLD {
        let rows: Vec<(&str, &Profile)> = table.rows().collect();
        rows.par_iter()
            .map(|(n, p)| score_row(n, p, &aligned, metric))
            .collect()
    } else {
        table
            .rows()
            .map(|(n, p)| score_row(n, p, &aligned, metric))
            .collect()
    };
    #[cfg(not(feature = "parallel"))]
    let mut scored: Vec<Scored> = table
        .rows()
        .map(|(n, p)| score_row(n, p, &aligned, metric))
        .collect();

    scored.sort_by(|a, b| a.distance.total_cmp(&b.distance));
    for group in tie_groups(&scored, |s| s.distance) {
        let tied = &mut scored[group];
        tied.sort_by(|a, b| a.l2.total_cmp(&b.l2));
        for sub in tie_groups(tied, |s| s.l2) {
            tied[sub].sort_by(|a, b| a.name.cmp(b.name));
        }
    }

    Ok(scored
        .into_iter()
        .enumerate()
        .map(|(i, s)| RankingEntry {
            candidate: s.name.to_string(),
            distance: s.distance,
            rank: i + 1,
        })
        .collect())
}

/// The first `min(k, N)` entries.
pub fn top_k(ranking: &[RankingEntry], k: usize) -> &[RankingEntry] {
    &ranking[..k.min(ranking.len())]
}

/// `100 · distance / |target|`, where `|target|` is the target's distance to
/// the zero profile under the same metric.
pub fn relative_error_percent(distance: f64, target: &Profile, metric: Metric) -> Result<f64> {
    let size = magnitude(metric, target);
    if size == 0.0 {
        return Err(Error::DegenerateTarget);
    }
    Ok(100.0 * distance / size)
}

/// Holds one distance table per unit.
#[derive(Debug, Clone)]
pub struct TableSet {
    tables: Vec<DistanceTable>,
}

impl TableSet {
    pub fn new(tables: Vec<DistanceTable>) -> Result<Self> {
        for (i, t) in tables.iter().enumerate() {
            if tables[..i].iter().any(|o| o.unit() == t.unit()) {
                return Err(Error::InvalidConfiguration(format!(
                    "two tables in {}",
                    t.unit()
                )));
            }
        }
        Ok(Self { tables })
    }

    /// The embedded km and hours tables.
    pub fn builtin() -> Self {
        Self {
            tables: vec![builtin_table(Builtin::Km), builtin_table(Builtin::Hours)],
        }
    }

    pub fn get(&self, unit: Unit) -> Result<&DistanceTable> {
        self.tables
            .iter()
            .find(|t| t.unit() == unit)
            .ok_or(Error::MissingTable(unit))
    }
}

/// A solution, data unit and reference subset; the metric varies.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigFamily {
    pub solution: SolutionProfile,
    pub unit: Unit,
    pub references: Vec<String>,
}

impl ConfigFamily {
    pub fn new<S: AsRef<str>>(
        solution: SolutionProfile,
        unit: Unit,
        references: &[S],
    ) -> Result<Self> {
        if unit == Unit::Jornadas {
            return Err(Error::InvalidConfiguration(
                "data tables exist only in km and hours".to_string(),
            ));
        }
        // validates presence in the solution and normalizes
        let restricted = solution.jornadas().restrict(references)?;
        Ok(Self {
            solution,
            unit,
            references: restricted.names().map(str::to_string).collect(),
        })
    }

    pub fn with_metric(&self, metric: Metric) -> Configuration {
        Configuration {
            family: self.clone(),
            metric,
        }
    }

    /// Solution references left out of this family.
    pub fn excluded(&self) -> Vec<&str> {
        self.solution
            .jornadas()
            .names()
            .filter(|n| !self.references.iter().any(|r| r == n))
            .collect()
    }

    pub fn label(&self) -> String {
        let excluded = self.excluded();
        let refs = if excluded.is_empty() {
            format!("{} refs", self.references.len())
        } else {
            format!(
                "{} refs (no {})",
                self.references.len(),
                excluded.join(", ")
            )
        };
        format!("{} | {} | {}", self.solution.label(), self.unit, refs)
    }
}

impl fmt::Display for ConfigFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// One ranking run: a configuration family plus a metric.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration {
    pub family: ConfigFamily,
    pub metric: Metric,
}

impl Configuration {
    pub fn new<S: AsRef<str>>(
        solution: SolutionProfile,
        unit: Unit,
        references: &[S],
        metric: Metric,
    ) -> Result<Self> {
        Ok(ConfigFamily::new(solution, unit, references)?.with_metric(metric))
    }

    pub fn label(&self) -> String {
        format!("{} | {}", self.family.label(), self.metric)
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// The outcome of evaluating one configuration.
#[derive(Debug, Clone)]
pub struct RunResult {
    pub configuration: Configuration,
    /// The data table restricted to the configuration's references.
    pub table: DistanceTable,
    /// The solution converted to the table's unit.
    pub target: Profile,
    pub ranking: Vec<RankingEntry>,
    /// Relative error (%) of each ranking entry, same order.
    pub relative_errors: Vec<f64>,
}

impl RunResult {
    pub fn winner(&self) -> &RankingEntry {
        &self.ranking[0]
    }

    pub fn top_names(&self, k: usize) -> Vec<&str> {
        top_k(&self.ranking, k)
            .iter()
            .map(|e| e.candidate.as_str())
            .collect()
    }
}

/// Evaluates one configuration against the matching table of `tables`.
pub fn evaluate(
    tables: &TableSet,
    configuration: &Configuration,
    rates: &ConversionRates,
) -> Result<RunResult> {
    let family = &configuration.family;
    let table = subset_references(tables.get(family.unit)?, &family.references)?;
    let target = family
        .solution
        .target(family.unit, table.references(), rates)?;
    let ranking = rank_candidates(&table, &target, configuration.metric)?;
    let relative_errors = ranking
        .iter()
        .map(|e| relative_error_percent(e.distance, &target, configuration.metric))
        .collect::<Result<Vec<_>>>()?;
    Ok(RunResult {
        configuration: configuration.clone(),
        table,
        target,
        ranking,
        relative_errors,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankedError {
    pub candidate: String,
    pub relative_error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapRecord {
    pub metric: Metric,
    /// Up to three leading candidates with their relative errors (%).
    pub top: Vec<RankedError>,
    /// Relative error of rank 2 minus rank 1, in percentage points.
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapReport {
    pub family: String,
    pub records: Vec<GapRecord>,
    pub mean_gap: f64,
}

impl GapReport {
    pub fn record(&self, metric: Metric) -> Option<&GapRecord> {
        self.records.iter().find(|r| r.metric == metric)
    }
}

/// Builds a gap report from already-evaluated runs of one family.
pub fn gap_report_from_runs(family: &ConfigFamily, runs: &[&RunResult]) -> Result<GapReport> {
    let mut records = Vec::with_capacity(runs.len());
    for run in runs {
        if run.configuration.family != *family {
            return Err(Error::InvalidConfiguration(format!(
                "run '{}' is not in family '{}'",
                run.configuration, family
            )));
        }
        if run.ranking.len() < 2 {
            return Err(Error::InsufficientCandidates(run.ranking.len()));
        }
        let top = run
            .ranking
            .iter()
            .zip(&run.relative_errors)
            .take(3)
            .map(|(e, &relative_error)| RankedError {
                candidate: e.candidate.clone(),
                relative_error,
            })
            .collect();
        records.push(GapRecord {
            metric: run.configuration.metric,
            top,
            gap: (run.relative_errors[1] - run.relative_errors[0]).max(0.0),
        });
    }
    if records.is_empty() {
        return Err(Error::InvalidConfiguration("empty gap family".to_string()));
    }
    let mean_gap = records.iter().map(|r| r.gap).sum::<f64>() / records.len() as f64;
    Ok(GapReport {
        family: family.label(),
        records,
        mean_gap,
    })
}

/// Relative errors and top-two gaps for L∞, L1 and L2 on one family.
pub fn gap_report(
    tables: &TableSet,
    family: &ConfigFamily,
    rates: &ConversionRates,
) -> Result<GapReport> {
    let runs = Metric::STUDY
        .iter()
        .map(|&m| evaluate(tables, &family.with_metric(m), rates))
        .collect::<Result<Vec<_>>>()?;
    gap_report_from_runs(family, &runs.iter().collect::<Vec<_>>())
}

/// Results of a configuration sweep, in cross-product order.
#[derive(Debug, Clone)]
pub struct Sweep {
    pub runs: Vec<RunResult>,
    /// One report per family whose metrics cover L∞, L1 and L2.
    pub gaps: Vec<GapReport>,
}

impl Sweep {
    pub fn run(&self, configuration: &Configuration) -> Option<&RunResult> {
        self.runs.iter().find(|r| r.configuration == *configuration)
    }

    pub fn gap(&self, family: &ConfigFamily) -> Option<&GapReport> {
        let label = family.label();
        self.gaps.iter().find(|g| g.family == label)
    }
}

/// Every configuration of the cross product, ordered by solution, then
/// reference subset, then unit, then metric.
pub fn sweep_configurations<S: AsRef<str>>(
    solutions: &[SolutionProfile],
    units: &[Unit],
    reference_subsets: &[Vec<S>],
    metrics: &[Metric],
) -> Result<Vec<ConfigFamily>> {
    let mut families = Vec::new();
    for solution in solutions {
        for subset in reference_subsets {
            for &unit in units {
                families.push(ConfigFamily::new(solution.clone(), unit, subset)?);
            }
        }
    }
    if metrics.is_empty() {
        return Err(Error::InvalidConfiguration("no metrics".to_string()));
    }
    Ok(families)
}

fn assemble(families: &[ConfigFamily], metrics: &[Metric], runs: Vec<RunResult>) -> Result<Sweep> {
    let covers_study = Metric::STUDY.iter().all(|m| metrics.contains(m));
    let mut gaps = Vec::new();
    if covers_study {
        for (i, family) in families.iter().enumerate() {
            let chunk = &runs[i * metrics.len()..(i + 1) * metrics.len()];
            let study_runs: Vec<&RunResult> = Metric::STUDY
                .iter()
                .map(|m| {
                    chunk
                        .iter()
                        .find(|r| r.configuration.metric == *m)
                        .expect("metric present in chunk")
                })
                .collect();
            gaps.push(gap_report_from_runs(family, &study_runs)?);
        }
    }
    Ok(Sweep { runs, gaps })
}

fn expand(families: &[ConfigFamily], metrics: &[Metric]) -> Vec<Configuration> {
    families
        .iter()
        .flat_map(|f| metrics.iter().map(move |&m| f.with_metric(m)))
        .collect()
}

/// Evaluates the sweep on the current thread.
pub fn sweep_sequential<S: AsRef<str>>(
    tables: &TableSet,
    rates: &ConversionRates,
    solutions: &[SolutionProfile],
    units: &[Unit],
    reference_subsets: &[Vec<S>],
    metrics: &[Metric],
) -> Result<Sweep> {
    let families = sweep_configurations(solutions, units, reference_subsets, metrics)?;
    let runs = expand(&families, metrics)
        .iter()
        .map(|c| evaluate(tables, c, rates))
        .collect::<Result<Vec<_>>>()?;
    assemble(&families, metrics, runs)
}

/// Evaluates the sweep's configurations on the rayon pool. Output order
/// and content are identical to [`sweep_sequential`].
#[cfg(feature = "parallel")]
pub fn sweep_parallel<S: AsRef<str>>(
    tables: &TableSet,
    rates: &ConversionRates,
    solutions: &[SolutionProfile],
    units: &[Unit],
    reference_subsets: &[Vec<S>],
    metrics: &[Metric],
) -> Result<Sweep> {
    let families = sweep_configurations(solutions, units, reference_subsets, metrics)?;
    let runs = expand(&families, metrics)
        .par_iter()
        .map(|c| evaluate(tables, c, rates))
        .collect::<Result<Vec<_>>>()?;
    assemble(&families, metrics, runs)
}

/// Evaluates the sweep, in parallel when the `parallel` feature is enabled.
pub fn sweep<S: AsRef<str>>(
    tables: &TableSet,
    rates: &ConversionRates,
    solutions: &[SolutionProfile],
    units: &[Unit],
    reference_subsets: &[Vec<S>],
    metrics: &[Metric],
) -> Result<Sweep> {
    #[cfg(feature = "parallel")]
    {
        sweep_parallel(tables, rates, solutions, units, reference_subsets, metrics)
    }
    #[cfg(not(feature = "parallel"))]
    {
        sweep_sequential(tables, rates, solutions, units, reference_subsets, metrics)
    }
}

/// Solutions, units, reference subsets and metrics of the full study grid:
/// 2 × 2 × 2 × 3 = 24 runs in 8 families.
pub struct StudyGrid {
    pub solutions: Vec<SolutionProfile>,
    pub units: Vec<Unit>,
    pub reference_subsets: Vec<Vec<String>>,
    pub metrics: Vec<Metric>,
}

impl StudyGrid {
    pub fn new() -> Self {
        Self {
            solutions: vec![SolutionProfile::classic(), SolutionProfile::refined()],
            units: vec![Unit::Kilometers, Unit::Hours],
            reference_subsets: vec![
                REFERENCES.iter().map(|s| s.to_string()).collect(),
                REFERENCES[..3].iter().map(|s| s.to_string()).collect(),
            ],
            metrics: Metric::STUDY.to_vec(),
        }
    }

    pub fn run(&self, tables: &TableSet, rates: &ConversionRates) -> Result<Sweep> {
        sweep(
            tables,
            rates,
            &self.solutions,
            &self.units,
            &self.reference_subsets,
            &self.metrics,
        )
    }
}

impl Default for StudyGrid {
    fn default() -> Self {
        Self::new()
    }
}
