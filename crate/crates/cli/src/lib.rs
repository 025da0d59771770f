//! Command-line front end for `ksucc`.
//!
//! Exit codes: 0 success, 2 bad arguments, 3 closed form inapplicable,
//! 4 enumeration cap exceeded, 5 verification failure (including a table
//! cell where formula and oracle disagree).

pub mod cache;
mod render;
pub mod sequences;

use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use ksucc::analysis::{self, Claim, Status, TableEngine, TableId, TableSpec};
use ksucc::oracle::{Oracle, DEFAULT_CAP};
use ksucc::{formulas, BigInt, Error, Family};
use serde_json::json;
use thiserror::Error as ThisError;

use crate::cache::{Cache, Fingerprint, CACHE_ENV};
use crate::sequences::Sequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Csv,
    Json,
    /// OEIS b-file; only for `bfile`.
    Bfile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountEngine {
    Formula,
    Oracle,
    /// Closed form where it applies, oracle otherwise.
    Auto,
}

impl CountEngine {
    fn as_str(self) -> &'static str {
        match self {
            CountEngine::Formula => "formula",
            CountEngine::Oracle => "oracle",
            CountEngine::Auto => "auto",
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "ksucc", version, about = "Count permutations avoiding k-successions")]
pub struct Cli {
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,

    /// formula|oracle|auto for `count`, formula|oracle|both for `tables`.
    #[arg(long, global = true)]
    pub engine: Option<String>,

    /// Count cache; defaults to $KSUCC_CACHE, caching is off if neither is set.
    #[arg(long, global = true, env = CACHE_ENV)]
    pub cache_file: Option<PathBuf>,

    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Largest n the oracle will enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: u32,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one exact count.
    Count {
        /// d, dstar, cstar, D, Dstar or Cstar
        family: Family,
        n: u32,
        k: u32,
        /// formula, oracle or auto (same as --engine)
        #[arg(value_enum, id = "engine_choice", value_name = "ENGINE")]
        engine: Option<CountEngine>,
    },
    /// List avoiding words (or rotation classes, in cycle notation).
    Enumerate {
        family: Family,
        n: u32,
        k: u32,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
    },
    /// Cross-check registered claims against exhaustive enumeration.
    Verify {
        /// Claim id, e.g. CLAIM_PRIME
        claim: Option<Claim>,
        #[arg(long, conflicts_with = "claim")]
        all: bool,
        #[arg(long = "n-max", default_value_t = 7)]
        n_max: u32,
    },
    /// Rebuild the reference tables T1..T6.
    Tables {
        table: Option<TableId>,
        #[arg(long, conflicts_with = "table")]
        all: bool,
    },
    /// Export an OEIS b-file.
    #[command(long_about = "Export an OEIS b-file (\"index value\" per line).\n\n\
        Indices use OEIS numbering, starting at the first index with a closed form here:\n  \
        A000166  Der(i)           from 0\n  \
        A000255  d(i+1, 1)        from 1\n  \
        A000240  dstar(i, 1)      from 2\n  \
        A000757  Cstar(i, 1)      from 2\n  \
        A167760  Dstar(i, 1)      from 2\n  \
        A277563  d(i, 4)          from 5")]
    Bfile {
        sequence: Sequence,
        #[arg(long = "n-max", default_value_t = 20)]
        n_max: u32,
    },
}

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::Inapplicable { .. }) => 3,
            CliError::Core(Error::CapExceeded { .. }) => 4,
            CliError::Core(Error::Disagreement { .. }) | CliError::VerificationFailed(_) => 5,
            CliError::Core(_) | CliError::Usage(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}

type CliResult<T = ()> = Result<T, CliError>;

fn parse_engine<T: std::str::FromStr>(raw: &Option<String>, default: T, allowed: &str) -> CliResult<T> {
    match raw {
        None => Ok(default),
        Some(s) => s
            .parse()
            .map_err(|_| CliError::Usage(format!("invalid --engine `{s}` (expected {allowed})"))),
    }
}

impl std::str::FromStr for CountEngine {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        <CountEngine as ValueEnum>::from_str(s, false).map_err(|_| ())
    }
}

/// Executes `cli`, writing results to `out` and warnings to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let mut oracle = Oracle::new().with_cap(cli.cap)?;
    if let Some(t) = cli.threads {
        oracle = oracle.with_threads(t);
    }
    let format = cli.format.unwrap_or(match cli.command {
        Command::Bfile { .. } => OutputFormat::Bfile,
        _ => OutputFormat::Plain,
    });
    let bfile_cmd = matches!(cli.command, Command::Bfile { .. });
    if bfile_cmd != (format == OutputFormat::Bfile) {
        return Err(CliError::Usage(
            "--format bfile is only valid for, and the only format of, `bfile`".into(),
        ));
    }

    match &cli.command {
        Command::Count { family, n, k, engine } => {
            let engine = match engine {
                Some(e) => *e,
                None => parse_engine(&cli.engine, CountEngine::Auto, "formula, oracle or auto")?,
            };
            cmd_count(cli, &oracle, *family, *n, *k, engine, format, out, err)
        }
        Command::Enumerate { family, n, k, limit } => {
            cmd_enumerate(&oracle, *family, *n, *k, *limit, format, out, err)
        }
        Command::Verify { claim, all, n_max } => {
            let claims: Vec<Claim> = match (claim, all) {
                (Some(c), false) => vec![*c],
                (None, true) => Claim::ALL.to_vec(),
                _ => return Err(CliError::Usage("give a claim id or --all".into())),
            };
            cmd_verify(&oracle, &claims, *n_max, !*all, format, out)
        }
        Command::Tables { table, all } => {
            let tables: Vec<TableId> = match (table, all) {
                (Some(t), false) => vec![*t],
                (None, true) => TableId::ALL.to_vec(),
                _ => return Err(CliError::Usage("give a table id or --all".into())),
            };
            let engine = parse_engine(&cli.engine, TableEngine::Both, "formula, oracle or both")?;
            cmd_tables(&oracle, &tables, engine, format, out)
        }
        Command::Bfile { sequence, n_max } => {
            out.write_all(sequences::bfile(*sequence, *n_max)?.as_bytes())?;
            Ok(())
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_count(
    cli: &Cli,
    oracle: &Oracle,
    family: Family,
    n: u32,
    k: u32,
    engine: CountEngine,
    format: OutputFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult {
    let use_formula = match engine {
        CountEngine::Formula => true,
        CountEngine::Oracle => false,
        CountEngine::Auto => formulas::is_applicable(family, n, k),
    };
    let answered_by = if use_formula { "formula" } else { "oracle" };
    let fingerprint = Fingerprint {
        n,
        k,
        mode: family.mode(),
        reading: family.reading(),
        style: family.style(),
        engine: answered_by.to_string(),
    };

    let mut cache = match &cli.cache_file {
        Some(path) => Some(Cache::open(path, |w| {
            let _ = writeln!(err, "warning: {w}");
        })?),
        None => None,
    };
    let cached = cache.as_ref().and_then(|c| c.get(&fingerprint)).cloned();
    let (count, from_cache) = match cached {
        Some(c) => (c, true),
        None => {
            let c = if use_formula {
                formulas::count(family, n, k)?
            } else {
                oracle.count(&family.spec(n, k)?)?
            };
            if let Some(cache) = cache.as_mut() {
                cache.insert(fingerprint, c.clone())?;
            }
            (c, false)
        }
    };

    match format {
        OutputFormat::Plain => writeln!(
            out,
            "{} (engine: {answered_by}{})",
            render::with_separators(&count),
            if from_cache { ", cached" } else { "" }
        )?,
        OutputFormat::Csv => {
            writeln!(out, "family,n,k,count,engine")?;
            writeln!(out, "{family},{n},{k},{count},{answered_by}")?;
        }
        OutputFormat::Json => writeln!(
            out,
            "{}",
            json!({
                "family": family.label(),
                "n": n,
                "k": k,
                "count": count.to_string(),
                "engine": answered_by,
                "requested_engine": engine.as_str(),
                "cached": from_cache,
            })
        )?,
        OutputFormat::Bfile => unreachable!("rejected in run"),
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_enumerate(
    oracle: &Oracle,
    family: Family,
    n: u32,
    k: u32,
    limit: usize,
    format: OutputFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult {
    let result = oracle.enumerate(&family.spec(n, k)?, limit)?;
    match format {
        OutputFormat::Json => writeln!(
            out,
            "{}",
            json!({
                "family": family.label(),
                "n": n,
                "k": k,
                "count": result.count.to_string(),
                "engine": "oracle",
                "witnesses": result.witnesses.iter().map(ToString::to_string).collect::<Vec<_>>(),
            })
        )?,
        _ => {
            if format == OutputFormat::Csv {
                writeln!(out, "witness")?;
            }
            for w in &result.witnesses {
                writeln!(out, "{w}")?;
            }
            writeln!(err, "count: {}", result.count)?;
            if BigInt::from(result.witnesses.len()) < result.count {
                writeln!(err, "showing the first {} (raise --limit for more)", result.witnesses.len())?;
            }
        }
    }
    Ok(())
}

fn cmd_verify(
    oracle: &Oracle,
    claims: &[Claim],
    n_max: u32,
    detailed: bool,
    format: OutputFormat,
    out: &mut dyn Write,
) -> CliResult {
    let reports = claims
        .iter()
        .map(|&c| analysis::verify_claim(oracle, c, 2..=n_max, 1..=n_max))
        .collect::<Result<Vec<_>, _>>()?;
    match format {
        OutputFormat::Json => writeln!(out, "{}", render::reports_json(&reports))?,
        OutputFormat::Csv => render::reports_csv(&reports, out)?,
        _ => render::reports_plain(&reports, detailed, out)?,
    }
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| r.status == Status::Fail)
        .map(|r| r.claim.id())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::VerificationFailed(failed.join(", ")))
    }
}

fn cmd_tables(
    oracle: &Oracle,
    tables: &[TableId],
    engine: TableEngine,
    format: OutputFormat,
    out: &mut dyn Write,
) -> CliResult {
    let generated = tables
        .iter()
        .map(|&id| analysis::generate_table(oracle, &TableSpec::reference(id), engine))
        .collect::<Result<Vec<_>, _>>()?;
    match format {
        OutputFormat::Json => {
            let all: Vec<_> = generated.iter().map(render::table_json).collect();
            let value = if all.len() == 1 {
                all.into_iter().next().unwrap()
            } else {
                serde_json::Value::Array(all)
            };
            writeln!(out, "{value}")?;
        }
        _ => {
            for (i, table) in generated.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                if format == OutputFormat::Csv {
                    if generated.len() > 1 {
                        writeln!(out, "# {}", table.spec.id)?;
                    }
                    render::table_csv(table, out)?;
                } else {
                    render::table_plain(table, out)?;
                }
            }
        }
    }
    Ok(())
}
