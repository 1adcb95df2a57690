//! Argument definitions and command bodies.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cmcartan_core::{
    cyclic_isogeny_exists, degree_row, orbit_report, t_tilde_argument, torsion_groups_over_kj,
    Discriminant, OrbitReport,
};
use rayon::prelude::*;

use crate::bounds::{DiscRange, Limits};
use crate::document::{
    IsogenyLevel, IsogenyPayload, Mode, Payload, PointReport, Provenance, Query, ReportDocument,
    TablePayload, TableRow, TorsionPayload,
};
use crate::error::Failure;
use crate::verify::{run_sweep, LocalFormula};

#[derive(Debug, Parser)]
#[command(
    name = "cmcartan",
    version,
    about = "Cartan orbit data for imaginary quadratic orders"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Degree data for one discriminant and level, as a JSON document.
    Report(ReportArgs),
    /// Degree data over a grid of discriminants and levels.
    Table(TableArgs),
    /// Torsion subgroups over K(j) across all twists.
    ClassifyTorsion(ClassifyTorsionArgs),
    /// Levels admitting a rational cyclic isogeny over K(j).
    ClassifyIsogeny(ClassifyIsogenyArgs),
    /// Cross-check every closed form against orbit enumeration.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub disc: i64,
    #[arg(long)]
    pub level: u64,
    /// Also enumerate the orbits and require agreement with the formulas.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct DiscRangeArgs {
    /// One end of the |Δ| range; the sign is ignored.
    #[arg(long, default_value_t = 3, allow_negative_numbers = true)]
    pub min_disc: i64,
    /// Other end of the |Δ| range; the sign is ignored.
    #[arg(long, default_value_t = 100, allow_negative_numbers = true)]
    pub max_disc: i64,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub disc: DiscRangeArgs,
    #[arg(long, default_value_t = 1)]
    pub min_level: u64,
    #[arg(long, default_value_t = 20)]
    pub max_level: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Worker threads; defaults to the number of logical cores.
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ClassifyTorsionArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub disc: i64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ClassifyIsogenyArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub disc: i64,
    /// A single level; otherwise the range --min-level..=--max-level.
    #[arg(long, conflicts_with_all = ["min_level", "max_level"])]
    pub level: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub min_level: u64,
    #[arg(long, default_value_t = 100)]
    pub max_level: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub disc: DiscRangeArgs,
    #[arg(long, default_value_t = 1)]
    pub min_level: u64,
    #[arg(long, default_value_t = 20)]
    pub max_level: u64,
    #[arg(long)]
    pub jobs: Option<usize>,
}

/// Runs `command`, writing its output to `out`; returns the process exit code.
pub fn run<F: LocalFormula>(
    command: &Command,
    limits: &Limits,
    formula: &F,
    out: &mut (impl Write + Send),
) -> Result<u8, Failure> {
    match command {
        Command::Report(args) => report(args, limits, out),
        Command::Table(args) => with_jobs(args.jobs, || table(args, limits, out)),
        Command::ClassifyTorsion(args) => classify_torsion(args, limits, out),
        Command::ClassifyIsogeny(args) => classify_isogeny(args, limits, out),
        Command::Verify(args) => with_jobs(args.jobs, || verify(args, limits, formula, out)),
    }
}

fn with_jobs<T>(
    jobs: Option<usize>,
    body: impl FnOnce() -> Result<T, Failure> + Send,
) -> Result<T, Failure>
where
    T: Send,
{
    let mut builder = rayon::ThreadPoolBuilder::new();
    match jobs {
        Some(0) => return Err(Failure::BadInput("--jobs must be at least 1".into())),
        Some(n) => builder = builder.num_threads(n),
        None => {}
    }
    let pool = builder
        .build()
        .map_err(|e| Failure::BadInput(format!("cannot start worker pool: {e}")))?;
    pool.install(body)
}

fn report(args: &ReportArgs, limits: &Limits, out: &mut impl Write) -> Result<u8, Failure> {
    let d = limits.discriminant(args.disc)?;
    let n = if args.oracle {
        limits.enumeration_level(args.level)?
    } else {
        limits.level(args.level)?
    };
    let degrees = degree_row(d, n)?;
    let (oracle, provenance) = if args.oracle {
        let observed = orbit_report(d, n)?;
        cross_check(&degrees, &observed)?;
        (Some(observed), Provenance::Both)
    } else {
        (None, Provenance::Formula)
    };
    let doc = ReportDocument::new(
        Query::point(Mode::Report, d.value(), Some(n)),
        Payload::Report(PointReport {
            degrees,
            isogeny: cyclic_isogeny_exists(d, n),
            oracle,
        }),
        provenance,
    );
    out.write_all(doc.to_json()?.as_bytes())?;
    Ok(0)
}

fn cross_check(
    degrees: &cmcartan_core::DegreeTableRow,
    observed: &OrbitReport,
) -> Result<(), Failure> {
    let least: u64 = degrees.t_tilde_factors.iter().map(|f| f.t_tilde).product();
    let checks = [
        (
            "least orbit",
            least.to_string(),
            observed.t_tilde_observed.to_string(),
        ),
        (
            "torsion degree",
            degrees.t.to_string(),
            observed.t_observed.to_string(),
        ),
        ("H", degrees.h.to_string(), observed.h_observed.to_string()),
        (
            "simple transitivity",
            degrees.simply_transitive.to_string(),
            observed.simply_transitive_observed.to_string(),
        ),
    ];
    let mismatches: Vec<String> = checks
        .iter()
        .filter(|(_, f, o)| f != o)
        .map(|(what, f, o)| format!("{what}: formula {f}, oracle {o}"))
        .collect();
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(Failure::Mismatch(mismatches.join("; ")))
    }
}

fn table_rows(
    ds: &[Discriminant],
    levels: std::ops::RangeInclusive<u64>,
) -> Result<Vec<TableRow>, Failure> {
    let cells: Vec<(Discriminant, u64)> = ds
        .iter()
        .flat_map(|&d| levels.clone().map(move |n| (d, n)))
        .collect();
    cells
        .par_iter()
        .map(|&(d, n)| {
            let row = degree_row(d, n)?;
            Ok(TableRow {
                delta: row.delta,
                delta_k: row.delta_k,
                f: row.conductor,
                n,
                cartan_order: row.cartan_order,
                t: row.t,
                h: row.h,
                weber_degree: row.weber_degree,
                tower_degree: row.tower_degree,
                isogeny: cyclic_isogeny_exists(d, n),
            })
        })
        .collect()
}

fn table(args: &TableArgs, limits: &Limits, out: &mut impl Write) -> Result<u8, Failure> {
    let range = DiscRange::new(args.disc.min_disc, args.disc.max_disc);
    limits.disc_range(&range)?;
    limits.level_range(args.min_level, args.max_level, limits.max_level)?;
    let rows = table_rows(&range.discriminants(), args.min_level..=args.max_level)?;
    match args.format {
        Format::Csv => {
            let mut writer = csv_writer(out);
            writer.write_record(TableRow::HEADER)?;
            for row in &rows {
                writer.write_record(row.csv_record())?;
            }
            writer.flush()?;
        }
        Format::Json => {
            let query = Query {
                mode: Mode::Table,
                delta: None,
                level: None,
                disc_range: Some([range.lo, range.hi]),
                level_range: Some([args.min_level, args.max_level]),
            };
            let doc = ReportDocument::new(
                query,
                Payload::Table(TablePayload { rows }),
                Provenance::Formula,
            );
            out.write_all(doc.to_json()?.as_bytes())?;
        }
    }
    Ok(0)
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

fn classify_torsion(
    args: &ClassifyTorsionArgs,
    limits: &Limits,
    out: &mut impl Write,
) -> Result<u8, Failure> {
    let d = limits.discriminant(args.disc)?;
    let groups: Vec<String> = torsion_groups_over_kj(d)
        .iter()
        .map(|g| g.to_string())
        .collect();
    match args.format {
        Format::Csv => {
            let mut writer = csv_writer(out);
            writer.write_record(["delta", "group"])?;
            for g in &groups {
                writer.write_record([d.value().to_string(), g.clone()])?;
            }
            writer.flush()?;
        }
        Format::Json => {
            let doc = ReportDocument::new(
                Query::point(Mode::ClassifyTorsion, d.value(), None),
                Payload::Torsion(TorsionPayload { groups }),
                Provenance::Formula,
            );
            out.write_all(doc.to_json()?.as_bytes())?;
        }
    }
    Ok(0)
}

fn classify_isogeny(
    args: &ClassifyIsogenyArgs,
    limits: &Limits,
    out: &mut impl Write,
) -> Result<u8, Failure> {
    let d = limits.discriminant(args.disc)?;
    let (lo, hi) = match args.level {
        Some(n) => (n, n),
        None => (args.min_level, args.max_level),
    };
    limits.level_range(lo, hi, limits.max_level)?;
    let exceptional = matches!(d.value(), -3 | -4);
    let levels = (lo..=hi)
        .map(|n| {
            Ok(IsogenyLevel {
                n,
                exists: cyclic_isogeny_exists(d, n),
                t_tilde_argument: if exceptional {
                    Some(t_tilde_argument(d, n)?)
                } else {
                    None
                },
            })
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    match args.format {
        Format::Csv => {
            let mut writer = csv_writer(out);
            writer.write_record(["delta", "n", "isogeny"])?;
            for level in &levels {
                let flag = if level.exists { "1" } else { "0" };
                writer.write_record([d.value().to_string(), level.n.to_string(), flag.into()])?;
            }
            writer.flush()?;
        }
        Format::Json => {
            let mut query = Query::point(Mode::ClassifyIsogeny, d.value(), args.level);
            if args.level.is_none() {
                query.level_range = Some([lo, hi]);
            }
            let doc = ReportDocument::new(
                query,
                Payload::Isogeny(IsogenyPayload { levels }),
                Provenance::Formula,
            );
            out.write_all(doc.to_json()?.as_bytes())?;
        }
    }
    Ok(0)
}

fn verify<F: LocalFormula>(
    args: &VerifyArgs,
    limits: &Limits,
    formula: &F,
    out: &mut impl Write,
) -> Result<u8, Failure> {
    let range = DiscRange::new(args.disc.min_disc, args.disc.max_disc);
    limits.disc_range(&range)?;
    limits.level_range(args.min_level, args.max_level, limits.max_enumeration_level)?;
    let summary = run_sweep(
        &range.discriminants(),
        args.min_level..=args.max_level,
        formula,
    )?;
    summary.write(out)?;
    Ok(if summary.passed() { 0 } else { 1 })
}
