//! `so5cg`: exact Spin(5) coupling coefficients with the 14 from the command line.
//!
//! Exit codes: 0 success, 1 failed verification or internal error,
//! 2 malformed key, 3 absent channel, 4 I/O error.

mod cache;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use so5cg::export::{branch_export, decomposition_export, matrix_export, reduced_table, Format};
use so5cg::full::{full, FullKey, So4State};
use so5cg::reduced::{reduced, EntryShift, ReducedKey};
use so5cg::{Channel, Error, HalfInt, IrrepLabel, So4Label};

use cache::{cached, Cache};

#[derive(Parser)]
#[command(name = "so5cg", version, about = "Exact Spin(5) ⊃ SO(4) coupling coefficients with the 14-dimensional irrep")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Format {
        match f {
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Json => Format::Json,
        }
    }
}

#[derive(clap::Args)]
struct Output {
    #[arg(long, value_enum, default_value = "csv")]
    format: OutputFormat,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Ignore $SO5CG_CACHE.
    #[arg(long)]
    no_cache: bool,
}

#[derive(Subcommand)]
enum Command {
    /// One reduced coefficient, or a full one when both projections are given.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        source: String,
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        /// Copy of a repeated target (1 or 2).
        #[arg(long, default_value_t = 1)]
        copy: u8,
        #[arg(long, allow_hyphen_values = true)]
        source_so4: String,
        /// SO(4) label shift from source to target, e.g. "+1,-1".
        #[arg(long, allow_hyphen_values = true)]
        entry: String,
        /// SO(4) label of the 14-component.
        #[arg(long, allow_hyphen_values = true)]
        part: String,
        /// Projections "m1,m2" of the source state.
        #[arg(long, allow_hyphen_values = true, requires = "part_m")]
        source_m: Option<String>,
        /// Projections "m1,m2" of the 14-component.
        #[arg(long, allow_hyphen_values = true, requires = "source_m")]
        part_m: Option<String>,
    },
    /// All reduced coefficients of one channel.
    Table {
        #[arg(long, allow_hyphen_values = true)]
        source: String,
        /// Label shift, e.g. "+1,0", "-1/2,+1/2", "0,0#2".
        #[arg(long, allow_hyphen_values = true)]
        channel: String,
        #[command(flatten)]
        output: Output,
    },
    /// The sparse coupling matrix of `source ⊗ 14`.
    Matrix {
        #[arg(allow_hyphen_values = true)]
        source: String,
        #[command(flatten)]
        output: Output,
    },
    /// SO(4) content of an irrep.
    Branch {
        #[arg(allow_hyphen_values = true)]
        label: String,
        #[command(flatten)]
        output: Output,
    },
    /// Irreps in `label ⊗ 14` with multiplicities.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        label: String,
        #[command(flatten)]
        output: Output,
    },
    /// Run a verification suite and print a JSON report.
    Verify {
        #[arg(value_enum)]
        suite: suites::Suite,
        #[arg(long, default_value_t = 4)]
        max_twice_j: i64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Restrict the oracle to these sources.
        #[arg(long, allow_hyphen_values = true)]
        source: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Everything that ends a run early, with its exit code.
#[derive(Debug)]
pub enum Failure {
    Engine(Error),
    Verification(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Engine(Error::MalformedKey(_)) => 2,
            Failure::Engine(Error::ChannelAbsent(_)) => 3,
            Failure::Engine(_) | Failure::Verification(_) => 1,
            Failure::Io(_) => 4,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Engine(e) => e.to_string(),
            Failure::Verification(s) => format!("verification failed: {s}"),
            Failure::Io(s) => format!("i/o error: {s}"),
        }
    }
}

fn pair(s: &str) -> Result<(HalfInt, HalfInt), Error> {
    let (a, b) = s
        .trim_matches(|c| c == '(' || c == ')')
        .split_once(',')
        .ok_or_else(|| Error::MalformedKey(format!("expected \"a,b\", got {s:?}")))?;
    Ok((a.trim().parse()?, b.trim().parse()?))
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            use std::io::Write;
            std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Io(format!("stdout: {e}")))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn eval(
    source: &str,
    target: &str,
    copy: u8,
    source_so4: &str,
    entry: &str,
    part: &str,
    source_m: Option<&str>,
    part_m: Option<&str>,
) -> Result<String, Failure> {
    let source: IrrepLabel = source.parse()?;
    let target: IrrepLabel = target.parse()?;
    let s: So4Label = source_so4.parse()?;
    let (dj1, dj2) = pair(entry)?;
    let part: So4Label = part.parse()?;
    let entry = EntryShift::new(dj1, dj2, part)?;
    let channel = Channel::new(target.jbar1() - source.jbar1(), target.jbar2() - source.jbar2(), copy)?;
    let key = ReducedKey { source, channel, source_so4: s, entry };
    let value = match (source_m, part_m) {
        (Some(sm), Some(pm)) => {
            let (m1, m2) = pair(sm)?;
            let (p1, p2) = pair(pm)?;
            let t = key.target_so4()?;
            full(&FullKey {
                target,
                copy,
                target_state: So4State::new(t, m1 + p1, m2 + p2)?,
                source,
                source_state: So4State::new(s, m1, m2)?,
                part_state: So4State::new(part, p1, p2)?,
            })?
        }
        _ => reduced(&key)?,
    };
    Ok(format!("{value}\n{}\n", value.to_f64()))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Eval { source, target, copy, source_so4, entry, part, source_m, part_m } => {
            let text = eval(&source, &target, copy, &source_so4, &entry, &part, source_m.as_deref(), part_m.as_deref())?;
            emit(&text, None)
        }
        Command::Table { source, channel, output } => {
            let source: IrrepLabel = source.parse()?;
            let channel: Channel = channel.parse()?;
            let cache = Cache::from_env(output.no_cache);
            let key = cache::key("table", &format!("{source}|{channel}"));
            let table = cached(cache.as_ref(), &key, || reduced_table(source, channel))?;
            emit(&table.render(output.format.into()), output.out.as_ref())
        }
        Command::Matrix { source, output } => {
            let source: IrrepLabel = source.parse()?;
            let cache = Cache::from_env(output.no_cache);
            let key = cache::key("matrix", &source.to_string());
            let m = cached(cache.as_ref(), &key, || matrix_export(source))?;
            emit(&m.render(output.format.into()), output.out.as_ref())
        }
        Command::Branch { label, output } => {
            let label: IrrepLabel = label.parse()?;
            let cache = Cache::from_env(output.no_cache);
            let key = cache::key("branch", &label.to_string());
            let b = cached(cache.as_ref(), &key, || Ok::<_, Error>(branch_export(label)))?;
            emit(&b.render(output.format.into()), output.out.as_ref())
        }
        Command::Decompose { label, output } => {
            let label: IrrepLabel = label.parse()?;
            let cache = Cache::from_env(output.no_cache);
            let key = cache::key("decompose", &label.to_string());
            let d = cached(cache.as_ref(), &key, || Ok::<_, Error>(decomposition_export(label)))?;
            emit(&d.render(output.format.into()), output.out.as_ref())
        }
        Command::Verify { suite, max_twice_j, tol, source, out } => {
            let sources = source.iter().map(|s| s.parse()).collect::<Result<Vec<IrrepLabel>, Error>>()?;
            let report = suites::run(suite, max_twice_j, tol, &sources);
            let mut text = serde_json::to_string_pretty(&report).expect("serializable report");
            text.push('\n');
            emit(&text, out.as_ref())?;
            match report.first_failure() {
                None => Ok(()),
                Some(c) => Err(Failure::Verification(format!(
                    "{} {}: {}",
                    c.suite,
                    c.subject,
                    c.error.as_deref().unwrap_or_default()
                ))),
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("so5cg: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
