//! Command-line surface.
//!
//! Exit codes: 0 success, 1 IO failure, 2 invalid input, 3 unknown knot name,
//! 4 cross-check disagreement.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use c2knot_core::contfrac::{
    even_expansion, positive_expansion, positive_expansion_variant, semi_even_expansion,
};
use c2knot_core::render::{layout, to_svg, Style};
use c2knot_core::twobridge::canonicalize;
use c2knot_core::{c2, ContinuedFraction, Rational};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cache::TableCache;
use crate::formats::{self, C2Json, ExpansionJson};
use crate::names::NameRegistry;
use crate::{tables, CliError, Result};

#[derive(Debug, Parser)]
#[command(name = "c2knot", version, about = "Two-bridge equivariant crossing numbers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand p/q as a positive, even or semi-even continued fraction.
    Expand(ExpandArgs),
    /// Compute c2(K) for K(p, q).
    C2(C2Args),
    /// Census of two-bridge knots by crossing number and c2 − c.
    Table(TableArgs),
    /// Draw the symmetric diagram of a Type A/B expansion as SVG.
    Render(RenderArgs),
    /// Validate a name,p,q file and look names up.
    Names(NamesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Positive,
    Even,
    SemiEven,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub p: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub q: i64,
    #[arg(long, value_enum)]
    pub mode: Mode,
    /// Use the positive form ending in 1.
    #[arg(long)]
    pub variant: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct C2Args {
    #[arg(long, allow_hyphen_values = true, requires = "q", conflicts_with = "name")]
    pub p: Option<i64>,
    #[arg(long, allow_hyphen_values = true, requires = "p")]
    pub q: Option<i64>,
    #[arg(long, requires = "names_file")]
    pub name: Option<String>,
    #[arg(long)]
    pub names_file: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, default_value_t = 3)]
    pub min: u64,
    #[arg(long)]
    pub max: u64,
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Compare every knot against the global enumeration.
    #[arg(long)]
    pub cross_check: bool,
    /// Overridden by the C2KNOT_CACHE_DIR environment variable.
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    /// Comma-separated entries, e.g. "1,2,-2,-2".
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["p", "q"])]
    pub cf: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "q")]
    pub p: Option<i64>,
    #[arg(long, allow_hyphen_values = true, requires = "p")]
    pub q: Option<i64>,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, default_value_t = 20)]
    pub unit: i64,
}

#[derive(Debug, Args)]
pub struct NamesArgs {
    #[arg(long)]
    pub csv: PathBuf,
    #[arg(long)]
    pub lookup: Option<String>,
}

fn slope(p: i64, q: i64) -> Result<Rational> {
    Rational::new(p, q).map_err(|e| CliError::Invalid(format!("--p {p} --q {q}: {e}")))
}

fn write_file(path: &Path, contents: &[u8]) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

pub fn cmd_expand(args: &ExpandArgs, out: &mut dyn Write) -> Result<()> {
    let r = slope(args.p, args.q)?;
    if args.variant && args.mode != Mode::Positive {
        return Err(CliError::Invalid("--variant only applies to --mode positive".into()));
    }
    let cf = match args.mode {
        Mode::Positive => {
            let cf = positive_expansion(r)?;
            if args.variant {
                positive_expansion_variant(&cf)?
            } else {
                cf
            }
        }
        Mode::Even => even_expansion(r)?,
        Mode::SemiEven => semi_even_expansion(r)?,
    };
    let line = if args.json {
        serde_json::to_string(&ExpansionJson::from(&cf))?
    } else {
        formats::expansion_line(&cf)
    };
    writeln!(out, "{line}").map_err(|e| CliError::io(Path::new("<stdout>"), e))
}

pub fn cmd_c2(args: &C2Args, out: &mut dyn Write) -> Result<()> {
    let knot = match (args.p, args.q, &args.name, &args.names_file) {
        (Some(p), Some(q), None, _) => canonicalize(p, q)?,
        (None, None, Some(name), Some(file)) => NameRegistry::from_path(file)?.lookup(name)?.knot(),
        _ => {
            return Err(CliError::Invalid(
                "give either --p and --q, or --name with --names-file".into(),
            ))
        }
    };
    let result = c2(&knot)?;
    let line = if args.json {
        serde_json::to_string(&C2Json::from(&result))?
    } else {
        formats::c2_line(&result)
    };
    writeln!(out, "{line}").map_err(|e| CliError::io(Path::new("<stdout>"), e))
}

pub fn cmd_table(args: &TableArgs, out: &mut dyn Write) -> Result<()> {
    let cache = TableCache::resolve(args.cache_dir.as_deref());
    let rows = tables::build(args.min, args.max, args.cross_check, cache.as_ref())?;
    let mut csv_text = Vec::new();
    formats::write_table_csv(&rows, &mut csv_text)?;
    if let Some(path) = &args.csv {
        write_file(path, &csv_text)?;
    }
    if let Some(path) = &args.json {
        let mut json = formats::table_json(&rows)?;
        json.push('\n');
        write_file(path, json.as_bytes())?;
    }
    out.write_all(&csv_text)
        .map_err(|e| CliError::io(Path::new("<stdout>"), e))
}

fn parse_cf(text: &str) -> Result<ContinuedFraction> {
    let entries = text
        .trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Invalid(format!("--cf: {:?} is not an integer", s.trim())))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ContinuedFraction::new(entries)?)
}

pub fn cmd_render(args: &RenderArgs, out: &mut dyn Write) -> Result<()> {
    let cf = match (&args.cf, args.p, args.q) {
        (Some(text), None, None) => parse_cf(text)?,
        (None, Some(p), Some(q)) => c2(&canonicalize(p, q)?)?.witness,
        _ => return Err(CliError::Invalid("give either --cf or --p and --q".into())),
    };
    if args.unit < 4 {
        return Err(CliError::Invalid("--unit must be at least 4".into()));
    }
    let lay = layout(&cf)?;
    let style = Style {
        unit: args.unit,
        gap: (args.unit * 3 / 10).max(1),
        margin: args.unit,
        ..Style::default()
    };
    write_file(&args.out, to_svg(&lay, &style).as_bytes())?;
    writeln!(
        out,
        "{} {} crossings={} on_axis={} -> {}",
        cf,
        lay.class,
        lay.total_crossings(),
        lay.on_axis_crossings(),
        args.out.display()
    )
    .map_err(|e| CliError::io(Path::new("<stdout>"), e))
}

pub fn cmd_names(args: &NamesArgs, out: &mut dyn Write) -> Result<()> {
    let reg = NameRegistry::from_path(&args.csv)?;
    let stdout = |e| CliError::io(Path::new("<stdout>"), e);
    match &args.lookup {
        Some(name) => {
            let k = reg.lookup(name)?.knot();
            writeln!(out, "{name},{},{}", k.p(), k.q()).map_err(stdout)
        }
        None => {
            writeln!(out, "name,p,q").map_err(stdout)?;
            for rec in reg.records() {
                let k = rec.knot();
                writeln!(out, "{},{},{}", rec.name, k.p(), k.q()).map_err(stdout)?;
            }
            Ok(())
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Expand(a) => cmd_expand(a, out),
        Command::C2(a) => cmd_c2(a, out),
        Command::Table(a) => cmd_table(a, out),
        Command::Render(a) => cmd_render(a, out),
        Command::Names(a) => cmd_names(a, out),
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(&cli, &mut lock) {
        Ok(()) => 0,
        Err(e) => {
            let _ = lock.flush();
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn main() -> i32 {
    main_with(std::env::args_os())
}
