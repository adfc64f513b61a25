//! Command-line entry point.
//!
//! Exit codes: 0 on success, 1 on data errors, 2 on usage errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::analysis::{
    evaluate, gap_report, sweep, ConfigFamily, SolutionProfile, TableSet, DEFAULT_TOP_K,
};
use crate::dataset::{
    builtin_table, normalize_name, parse_table, Builtin, DecimalSeparator, DistanceTable,
    ParseOptions, REFERENCES,
};
use crate::error::Error;
use crate::metric::Metric;
use crate::profile::{ConversionRates, Profile, Unit};
use crate::report::{
    render_errors, render_gap_report, render_gaps, render_run, render_sweep_overview, reproduce,
    Format,
};

#[derive(Debug, Parser)]
#[command(
    name = "profile-match",
    version,
    about = "Rank candidates by how closely their distance profile matches a target"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rank all candidates by distance to the solution and print the closest ones.
    Rank(RankArgs),
    /// Print the closest candidates with their relative errors.
    Errors(RankArgs),
    /// Top-two relative-error gaps under L∞, L1 and L2 (ignores --metric).
    Gaps(GapsArgs),
    /// Evaluate every solution × unit × reference subset × metric combination
    /// on the built-in tables.
    Sweep(SweepArgs),
    /// Write every study table and a summary into a directory.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Args)]
struct DataArgs {
    /// builtin:km, builtin:hours, or a path to a delimited table.
    #[arg(long, default_value = "builtin:km")]
    data: String,
    /// Unit of a table read from a file (km or hours).
    #[arg(long)]
    unit: Option<String>,
    /// Decimal separator of a table read from a file: auto, dot or comma.
    #[arg(long, default_value = "auto")]
    decimal: String,
    /// `classic`, `refined`, or a comma-separated list of jornadas bound
    /// positionally to the data's reference order (e.g. 2,2.37,2.5,2).
    #[arg(long, default_value = "classic", allow_hyphen_values = true)]
    solution: String,
    /// Reference to leave out of both the data and the solution (repeatable).
    #[arg(long)]
    exclude: Vec<String>,
    #[arg(long, default_value_t = ConversionRates::DEFAULT_KM_PER_JORNADA)]
    km_per_jornada: f64,
    #[arg(long, default_value_t = ConversionRates::DEFAULT_HOURS_PER_JORNADA)]
    hours_per_jornada: f64,
    /// Output format: markdown, csv or jsonl.
    #[arg(long, default_value = "markdown")]
    format: String,
}

#[derive(Debug, Args)]
struct RankArgs {
    #[command(flatten)]
    data: DataArgs,
    /// l1, l2, linf or l<n> with n >= 1.
    #[arg(long)]
    metric: String,
    /// Number of candidates to show.
    #[arg(long, default_value_t = DEFAULT_TOP_K)]
    top: usize,
}

#[derive(Debug, Args)]
struct GapsArgs {
    #[command(flatten)]
    data: DataArgs,
    /// Accepted for symmetry with `rank`; gaps always use L∞, L1 and L2.
    #[arg(long)]
    metric: Option<String>,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Solutions to sweep (repeatable; default: classic and refined).
    #[arg(long)]
    solution: Vec<String>,
    /// Metrics to sweep (repeatable; default: linf, l1, l2).
    #[arg(long)]
    metric: Vec<String>,
    #[arg(long, default_value_t = ConversionRates::DEFAULT_KM_PER_JORNADA)]
    km_per_jornada: f64,
    #[arg(long, default_value_t = ConversionRates::DEFAULT_HOURS_PER_JORNADA)]
    hours_per_jornada: f64,
    #[arg(long, default_value = "markdown")]
    format: String,
}

#[derive(Debug, Args)]
struct ReproduceArgs {
    /// Output directory (created if missing).
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value = "markdown")]
    format: String,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Data(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Data(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_metric(token: &str) -> CliResult<Metric> {
    token.parse().map_err(|e: Error| usage(e.to_string()))
}

fn parse_format(token: &str) -> CliResult<Format> {
    token.parse().map_err(usage)
}

fn rates(km: f64, hours: f64) -> CliResult<ConversionRates> {
    ConversionRates::new(km, hours).map_err(|e| usage(e.to_string()))
}

fn load_table(args: &DataArgs) -> CliResult<DistanceTable> {
    let unit = args
        .unit
        .as_deref()
        .map(|u| u.parse::<Unit>().map_err(usage))
        .transpose()?;
    if unit == Some(Unit::Jornadas) {
        return Err(usage("data tables must be in km or hours"));
    }
    let builtin = match args.data.as_str() {
        "builtin:km" => Some(Builtin::Km),
        "builtin:hours" => Some(Builtin::Hours),
        other if other.starts_with("builtin:") => {
            return Err(usage(format!("unknown built-in dataset '{other}'")));
        }
        _ => None,
    };
    if let Some(which) = builtin {
        if let Some(u) = unit.filter(|u| *u != which.unit()) {
            return Err(usage(format!(
                "'{}' is in {}, not {u}",
                args.data,
                which.unit()
            )));
        }
        return Ok(builtin_table(which));
    }
    let unit =
        unit.ok_or_else(|| usage(format!("--unit is required for data file '{}'", args.data)))?;
    let decimal: DecimalSeparator = args.decimal.parse().map_err(usage)?;
    let text = fs::read_to_string(&args.data)
        .map_err(|e| usage(format!("cannot read data file '{}': {e}", args.data)))?;
    Ok(parse_table(
        &text,
        ParseOptions {
            decimal_separator: decimal,
            unit,
        },
    )?)
}

fn resolve_solution(token: &str, references: &[String]) -> CliResult<SolutionProfile> {
    if let Some(named) = SolutionProfile::named(token) {
        return Ok(named);
    }
    let values = token
        .split(',')
        .map(|v| {
            v.trim()
                .parse::<f64>()
                .map_err(|_| usage(format!("invalid --solution value '{}'", v.trim())))
        })
        .collect::<CliResult<Vec<_>>>()?;
    if values.len() != references.len() {
        return Err(usage(format!(
            "--solution '{token}' has {} values but the data has {} references",
            values.len(),
            references.len()
        )));
    }
    let profile = Profile::from_parts(Unit::Jornadas, references, &values)
        .map_err(|e| usage(format!("invalid --solution '{token}': {e}")))?;
    Ok(SolutionProfile::new("custom", profile)?)
}

/// Loads data and solution and applies `--exclude` to both.
fn family(args: &DataArgs) -> CliResult<(TableSet, ConfigFamily, ConversionRates)> {
    let rates = rates(args.km_per_jornada, args.hours_per_jornada)?;
    let table = load_table(args)?;
    let solution = resolve_solution(&args.solution, table.references())?;
    let mut excluded = Vec::with_capacity(args.exclude.len());
    for raw in &args.exclude {
        let name = normalize_name(raw).map_err(|_| usage("empty name in --exclude"))?;
        if !table.references().contains(&name) {
            return Err(usage(format!("unknown reference '{raw}' in --exclude")));
        }
        excluded.push(name);
    }
    let keep: Vec<&String> = table
        .references()
        .iter()
        .filter(|r| !excluded.contains(r))
        .collect();
    if keep.is_empty() {
        return Err(usage("--exclude removes every reference"));
    }
    let family = ConfigFamily::new(solution, table.unit(), &keep)?;
    Ok((TableSet::new(vec![table])?, family, rates))
}

fn cmd_rank(args: &RankArgs, with_errors: bool) -> CliResult<String> {
    let metric = parse_metric(&args.metric)?;
    let format = parse_format(&args.data.format)?;
    if args.top == 0 {
        return Err(usage("--top must be at least 1"));
    }
    let (tables, family, rates) = family(&args.data)?;
    let run = evaluate(&tables, &family.with_metric(metric), &rates)?;
    let table = if with_errors {
        render_errors(&run, args.top)
    } else {
        render_run(&run, args.top)?
    };
    Ok(table.with_format(format).render())
}

fn cmd_gaps(args: &GapsArgs) -> CliResult<String> {
    if let Some(m) = &args.metric {
        parse_metric(m)?;
    }
    let format = parse_format(&args.data.format)?;
    let (tables, family, rates) = family(&args.data)?;
    let report = gap_report(&tables, &family, &rates)?;
    Ok(render_gap_report(&report).with_format(format).render())
}

fn cmd_sweep(args: &SweepArgs) -> CliResult<String> {
    let format = parse_format(&args.format)?;
    let rates = rates(args.km_per_jornada, args.hours_per_jornada)?;
    let metrics = if args.metric.is_empty() {
        Metric::STUDY.to_vec()
    } else {
        args.metric
            .iter()
            .map(|m| parse_metric(m))
            .collect::<CliResult<Vec<_>>>()?
    };
    let references: Vec<String> = REFERENCES.iter().map(|s| s.to_string()).collect();
    let solutions = if args.solution.is_empty() {
        vec![SolutionProfile::classic(), SolutionProfile::refined()]
    } else {
        args.solution
            .iter()
            .map(|s| resolve_solution(s, &references))
            .collect::<CliResult<Vec<_>>>()?
    };
    let subsets = vec![references.clone(), references[..3].to_vec()];
    let result = sweep(
        &TableSet::builtin(),
        &rates,
        &solutions,
        &[Unit::Kilometers, Unit::Hours],
        &subsets,
        &metrics,
    )?;
    let mut out = render_sweep_overview(&result).with_format(format).render();
    if !result.gaps.is_empty() {
        out.push('\n');
        out.push_str(&render_gaps(&result, &[]).with_format(format).render());
    }
    Ok(out)
}

fn cmd_reproduce(args: &ReproduceArgs) -> CliResult<String> {
    let format = parse_format(&args.format)?;
    let written = reproduce(&args.out, format)?;
    Ok(format!(
        "wrote {} documents to {}\n",
        written.len(),
        args.out.display()
    ))
}

/// Parses `args` (including the program name) and runs the subcommand,
/// writing the document to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Rank(a) => cmd_rank(a, false),
        Command::Errors(a) => cmd_rank(a, true),
        Command::Gaps(a) => cmd_gaps(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Reproduce(a) => cmd_reproduce(a),
    };
    match result {
        Ok(doc) => match out.write_all(doc.as_bytes()).and_then(|_| out.flush()) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                1
            }
        },
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(CliError::Data(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
