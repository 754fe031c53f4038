//! Command-line front end. `yuga <command> --help` lists the options.
//!
//! Machine formats carry exact fractions as `"num/den"` strings and large
//! integers as decimal strings; columns ending in `_decimal` are rounded
//! approximations for reading only.

mod output;

use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

pub use output::{Cell, OutputFormat, Report};

use crate::arith::{digit_count, Natural, Rational};
use crate::codec::{self, ComponentNames, RadixVector};
use crate::names::{NameTable, NAKSHATRA_FILE, TITHI_FILE, VARIANT_FILE};
use crate::series::{self, SeriesSpec, VariantTable};
use crate::tally::{self, SessionPlan};
use crate::yuga::{DayRecord, SkyPosition, YugaConfig};

const DECIMAL_PLACES: usize = 5;

#[derive(Debug, Parser)]
#[command(name = "yuga", version, about = "Five-year yuga calendar, time-segment names, tally procedures and number series")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,

    /// Directory of name tables (nakshatra.txt, tithi.txt, year.txt, ...).
    #[arg(long, global = true, value_name = "DIR")]
    pub names: Option<PathBuf>,

    /// Data rows only: no table header, no notes.
    #[arg(long, global = true)]
    pub quiet: bool,

    /// TOML file with defaults for format, names and quiet.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Day records or parva ends of the yuga.
    Yuga(YugaArgs),
    /// Encode or decode time-segment names.
    Name(NameArgs),
    /// Token-level procedures with step counts.
    #[command(subcommand)]
    Tally(TallyCommand),
    /// Large-number series.
    #[command(subcommand)]
    Bignum(BignumCommand),
}

#[derive(Debug, Args)]
pub struct YugaArgs {
    /// Single day (0..=1829).
    #[arg(long, conflicts_with_all = ["from", "to", "parva_ends"])]
    pub day: Option<u64>,
    /// First day of a range.
    #[arg(long)]
    pub from: Option<u64>,
    /// Last day of a range, inclusive.
    #[arg(long)]
    pub to: Option<u64>,
    /// Moon positions at the end of each of the 124 parvas.
    #[arg(long, conflicts_with_all = ["from", "to"])]
    pub parva_ends: bool,
    /// Add rounded decimal columns.
    #[arg(long)]
    pub decimal: bool,
}

#[derive(Debug, Args)]
pub struct NameArgs {
    /// Check encode/decode over every index.
    #[arg(long)]
    pub roundtrip_check: bool,
    #[command(subcommand)]
    pub action: Option<NameAction>,
}

#[derive(Debug, Subcommand)]
pub enum NameAction {
    /// Index to name.
    Encode { index: u64 },
    /// Name (six numbers or table names) to index.
    Decode {
        #[arg(num_args = 6)]
        components: Vec<String>,
    },
    /// Length of a day, muhurta and prati-muhurta in minutes.
    Duration,
}

#[derive(Debug, Subcommand)]
pub enum TallyCommand {
    /// Deal TOTAL tokens into BODIES equal piles.
    Split { total: u64, bodies: u64 },
    /// All even splits of TOTAL up to MAX_BODIES bodies.
    Enumerate {
        total: u64,
        #[arg(long, default_value_t = 24)]
        max_bodies: u64,
    },
    /// Six-day sets for the given month lengths (29 or 30).
    Sadaha {
        #[arg(required = true)]
        months: Vec<u32>,
    },
    /// Events of the year-long sacrificial session.
    Schedule {
        /// Days in the year; the other lists default to the 360-day plan
        /// only when this is left unset.
        #[arg(long)]
        days: Option<u64>,
        #[arg(long, value_delimiter = ',')]
        parva_days: Option<Vec<u64>>,
        #[arg(long, value_delimiter = ',')]
        season_starts: Option<Vec<u64>>,
        #[arg(long, value_delimiter = ',')]
        ayana_starts: Option<Vec<u64>>,
    },
    /// Tax in kind: one measure in every DIVISOR.
    Tax {
        measures: u64,
        #[arg(long, default_value_t = 6)]
        divisor: u64,
    },
    /// A × B by repeated addition.
    Product { a: u64, b: u64 },
}

#[derive(Debug, Subcommand)]
pub enum BignumCommand {
    /// Thirteen decimal names, eka to parārdha.
    Decimal,
    /// Centesimal series.
    Centesimal {
        /// First term [default: 1000000000]
        #[arg(long)]
        start: Option<Natural>,
        /// Ratio between terms [default: 100]
        #[arg(long)]
        factor: Option<Natural>,
        /// Number of terms [default: 24]
        #[arg(long)]
        terms: Option<usize>,
    },
    /// Sixth square of two times its fifth square.
    Jain,
    /// Names recorded for a value.
    Lookup { value: Natural },
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    format: Option<OutputFormat>,
    names: Option<PathBuf>,
    quiet: Option<bool>,
}

/// Settings after merging the config file under the command-line flags.
#[derive(Debug, Clone, Default)]
pub struct Settings {
    pub format: OutputFormat,
    pub names: Option<PathBuf>,
    pub quiet: bool,
}

impl Settings {
    pub fn resolve(cli: &Cli) -> anyhow::Result<Self> {
        let file = match &cli.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                toml::from_str::<ConfigFile>(&text)
                    .with_context(|| format!("parsing {}", path.display()))?
            }
            None => ConfigFile::default(),
        };
        Ok(Settings {
            format: cli.format.or(file.format).unwrap_or_default(),
            names: cli.names.clone().or(file.names),
            quiet: cli.quiet || file.quiet.unwrap_or(false),
        })
    }
}

struct Tables {
    nakshatra: NameTable,
    tithi: NameTable,
    components: ComponentNames,
    variants: VariantTable,
}

impl Tables {
    fn load(dir: Option<&Path>) -> anyhow::Result<Self> {
        let mut t = Tables {
            nakshatra: NameTable::nakshatras(),
            tithi: NameTable::tithis(),
            components: ComponentNames::default(),
            variants: VariantTable::shipped(),
        };
        if let Some(dir) = dir {
            if !dir.is_dir() {
                bail!("names directory {} does not exist", dir.display());
            }
            if let Some(n) = NameTable::load_optional(dir, NAKSHATRA_FILE)? {
                t.nakshatra = n;
            }
            if let Some(n) = NameTable::load_optional(dir, TITHI_FILE)? {
                t.tithi = n;
            }
            let variants = dir.join(VARIANT_FILE);
            if variants.is_file() {
                t.variants = VariantTable::load(&variants)?;
            }
            t.components = ComponentNames::load_dir(dir)?;
        }
        Ok(t)
    }
}

/// Parses `args` and renders the command's output.
pub fn run_args<I, T>(args: I) -> anyhow::Result<String>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    run(&cli)
}

pub fn run(cli: &Cli) -> anyhow::Result<String> {
    let settings = Settings::resolve(cli)?;
    let tables = Tables::load(settings.names.as_deref())?;
    let report = match &cli.command {
        Command::Yuga(a) => cmd_yuga(a, &tables)?,
        Command::Name(a) => cmd_name(a, &tables)?,
        Command::Tally(c) => cmd_tally(c)?,
        Command::Bignum(c) => cmd_bignum(c, &tables)?,
    };
    report.render(settings.format, settings.quiet)
}

fn text(v: impl ToString) -> Cell {
    Cell::Text(v.to_string())
}

fn position_cells(
    pos: &SkyPosition,
    names: &NameTable,
    decimal: bool,
    cells: &mut Vec<Cell>,
) {
    cells.push(pos.number().into());
    cells.push(names.display(pos.number()).into());
    cells.push(text(&pos.offset));
    cells.push(text(pos.traversed()));
    if decimal {
        cells.push(pos.as_rational().render_decimal(DECIMAL_PLACES).into());
    }
}

fn position_columns(prefix: &str, decimal: bool) -> Vec<String> {
    let mut cols = vec![
        format!("{prefix}_nakshatra"),
        format!("{prefix}_nakshatra_name"),
        format!("{prefix}_offset"),
        format!("{prefix}_position"),
    ];
    if decimal {
        cols.push(format!("{prefix}_position_decimal"));
    }
    cols
}

fn cmd_yuga(a: &YugaArgs, t: &Tables) -> anyhow::Result<Report> {
    let cfg = YugaConfig::VEDANGA;
    if a.parva_ends {
        let mut cols: Vec<String> = ["parva", "phase", "accumulated"].map(String::from).into();
        if a.decimal {
            cols.push("accumulated_decimal".into());
        }
        cols.extend(position_columns("moon", a.decimal));
        let mut report = Report::new(cols);
        for end in cfg.parva_ends() {
            let mut row: Vec<Cell> = vec![
                end.parva.into(),
                end.phase.as_str().into(),
                text(end.accumulated.to_mixed()?),
            ];
            if a.decimal {
                row.push(end.accumulated.render_decimal(DECIMAL_PLACES).into());
            }
            position_cells(&end.moon, &t.nakshatra, a.decimal, &mut row);
            report.push(row);
        }
        report.note(format!(
            "moon advances {} nakshatras per parva",
            cfg.moon_per_parva().to_mixed()?
        ));
        return Ok(report);
    }

    let last = cfg.civil_days_per_yuga - 1;
    let (from, to) = match (a.day, a.from, a.to) {
        (Some(d), _, _) => (d, d),
        (None, f, t) => (f.unwrap_or(0), t.unwrap_or(last)),
    };
    if from > to {
        bail!("day range {from}..{to} is empty");
    }
    let records = cfg.yuga_table(from..=to)?;

    let mut cols: Vec<String> = [
        "day", "year", "ayana", "season", "parva", "paksha", "tithi", "tithi_name",
    ]
    .map(String::from)
    .into();
    cols.extend(position_columns("moon", a.decimal));
    cols.extend(position_columns("sun", a.decimal));
    let mut report = Report::new(cols);
    let per_paksha = cfg.tithis_per_paksha as u32;
    for r in &records {
        report.push(day_row(r, t, per_paksha, a.decimal));
    }
    report.note("tithis assigned by floor(day x 62/61); a reconstruction, not a recorded rule");
    Ok(report)
}

fn day_row(r: &DayRecord, t: &Tables, per_paksha: u32, decimal: bool) -> Vec<Cell> {
    let mut row: Vec<Cell> = vec![
        r.day_index.into(),
        r.year_in_yuga.into(),
        r.ayana.as_str().into(),
        r.season_index.into(),
        r.parva_index.into(),
        r.tithi.paksha.as_str().into(),
        r.tithi.ordinal.into(),
        t.tithi.display(r.tithi.month_position(per_paksha)).into(),
    ];
    position_cells(&r.moon, &t.nakshatra, decimal, &mut row);
    position_cells(&r.sun, &t.nakshatra, decimal, &mut row);
    row
}

fn name_report(index: u64, rv: &RadixVector, t: &Tables) -> anyhow::Result<Report> {
    let name = codec::encode_index(index, rv)?;
    let mut cols = vec!["index".to_string()];
    cols.extend(codec::COMPONENTS.map(String::from));
    cols.push("name".into());
    let mut report = Report::new(cols);
    let rendered = t.components.render(&name);
    let mut row: Vec<Cell> = vec![index.into()];
    row.extend(name.components().map(Cell::from));
    row.push(rendered.join(" ").into());
    report.push(row);
    Ok(report)
}

fn cmd_name(a: &NameArgs, t: &Tables) -> anyhow::Result<Report> {
    let rv = RadixVector::default();
    if a.roundtrip_check {
        let checked = codec::roundtrip_check(&rv)?;
        let mut report = Report::new(["checked", "total_segments", "status"]);
        report.push(vec![checked.into(), rv.total_segments().into(), "ok".into()]);
        return Ok(report);
    }
    match &a.action {
        None => bail!("name: give encode, decode, duration or --roundtrip-check"),
        Some(NameAction::Encode { index }) => name_report(*index, &rv, t),
        Some(NameAction::Decode { components }) => {
            let name = t.components.parse_name(components)?;
            let index = codec::decode_name(&name, &rv)?;
            name_report(index, &rv, t)
        }
        Some(NameAction::Duration) => {
            let cfg = YugaConfig::VEDANGA;
            let mut report = Report::new(["unit", "minutes", "minutes_decimal"]);
            let day = Rational::from_u64(codec::MINUTES_PER_DAY);
            for (unit, v) in [
                ("ahoratra", day),
                ("muhurta", codec::muhurta_minutes(&cfg)),
                ("prati_muhurta", codec::segment_duration(&cfg)),
            ] {
                report.push(vec![unit.into(), text(&v), v.render_decimal(1).into()]);
            }
            Ok(report)
        }
    }
}

fn cmd_tally(c: &TallyCommand) -> anyhow::Result<Report> {
    let split_cols = ["bodies", "size_per_body", "steps"];
    Ok(match c {
        TallyCommand::Split { total, bodies } => {
            let s = tally::equal_split(*total, *bodies)?;
            let mut r = Report::new(split_cols);
            r.push(vec![s.bodies.into(), s.size_per_body.into(), s.steps.into()]);
            r
        }
        TallyCommand::Enumerate { total, max_bodies } => {
            let mut r = Report::new(split_cols);
            for s in tally::enumerate_splits(*total, *max_bodies)? {
                r.push(vec![s.bodies.into(), s.size_per_body.into(), s.steps.into()]);
            }
            r.note(format!("{} even splits", r.rows.len()));
            r
        }
        TallyCommand::Sadaha { months } => {
            let lengths = tally::sadaha_partition(months)?;
            let mut r = Report::new(["sadaha", "length"]);
            for (i, len) in lengths.iter().enumerate() {
                r.push(vec![(i + 1).into(), (*len).into()]);
            }
            r
        }
        TallyCommand::Schedule {
            days,
            parva_days,
            season_starts,
            ayana_starts,
        } => {
            let base = match days {
                None => SessionPlan::standard(),
                Some(d) => SessionPlan {
                    days_in_year: *d,
                    parva_days: vec![],
                    season_starts: vec![],
                    ayana_starts: vec![],
                },
            };
            let plan = SessionPlan {
                days_in_year: base.days_in_year,
                parva_days: parva_days.clone().unwrap_or(base.parva_days),
                season_starts: season_starts.clone().unwrap_or(base.season_starts),
                ayana_starts: ayana_starts.clone().unwrap_or(base.ayana_starts),
            };
            let events = tally::gavamayana_schedule(&plan)?;
            let mut r = Report::new(["day", "kind"]);
            for e in &events {
                r.push(vec![e.day_index.into(), e.kind.as_str().into()]);
            }
            r.note(format!("{} events", events.len()));
            r
        }
        TallyCommand::Tax { measures, divisor } => {
            let t = tally::tax_in_kind(*measures, *divisor)?;
            let mut r = Report::new([
                "measures",
                "divisor",
                "tax",
                "kept",
                "remainder_untaxed",
                "steps",
            ]);
            r.push(vec![
                (*measures).into(),
                (*divisor).into(),
                t.tax.into(),
                t.kept.into(),
                t.remainder_untaxed.into(),
                t.steps.into(),
            ]);
            r
        }
        TallyCommand::Product { a, b } => {
            let p = tally::repeated_addition_product(*a, *b)?;
            let symbolic = a
                .checked_mul(*b)
                .context("product exceeds 64 bits")?;
            let mut r = Report::new([
                "a",
                "b",
                "product",
                "steps",
                "token_moves",
                "matches_multiplication",
            ]);
            r.push(vec![
                (*a).into(),
                (*b).into(),
                p.product.into(),
                p.rounds.into(),
                p.token_moves.into(),
                (p.product == symbolic).into(),
            ]);
            r
        }
    })
}

fn series_report(terms: &[series::NamedNumber]) -> Report {
    let mut r = Report::new(["position", "name", "value", "digits", "tradition"]);
    for n in terms {
        r.push(vec![
            n.position.into(),
            n.label().into(),
            text(&n.value),
            digit_count(&n.value).into(),
            n.tradition.as_str().into(),
        ]);
    }
    r
}

fn cmd_bignum(c: &BignumCommand, t: &Tables) -> anyhow::Result<Report> {
    Ok(match c {
        BignumCommand::Decimal => series_report(&series::decimal_series()),
        BignumCommand::Centesimal {
            start,
            factor,
            terms,
        } => {
            let default = SeriesSpec::lalitavistara();
            let is_default = start.is_none() && factor.is_none() && terms.is_none();
            let spec = SeriesSpec {
                start_value: start.clone().unwrap_or(default.start_value),
                step_factor: factor.clone().unwrap_or(default.step_factor),
                term_count: terms.unwrap_or(default.term_count),
                names: if is_default { default.names } else { vec![] },
            };
            series_report(&series::centesimal_series(&spec)?)
        }
        BignumCommand::Jain => {
            let j = series::jain_population();
            let mut r = Report::new(["quantity", "value", "digits"]);
            for (q, v) in [
                ("sixth_square", &j.sixth_square),
                ("fifth_square", &j.fifth_square),
                ("product", &j.population.value),
            ] {
                r.push(vec![q.into(), text(v), digit_count(v).into()]);
            }
            r
        }
        BignumCommand::Lookup { value } => {
            let mut r = Report::new(["value", "name", "tradition"]);
            for (name, tradition) in t.variants.lookup(value) {
                r.push(vec![text(value), name.into(), tradition.as_str().into()]);
            }
            if r.rows.is_empty() {
                r.note(format!("no recorded name for {value}"));
            }
            r
        }
    })
}
