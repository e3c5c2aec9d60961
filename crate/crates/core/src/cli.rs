//! Command-line front end. The `windmill` binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 when everything verified, 1 when a mathematical check failed,
//! 2 for usage and parameter errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::drazin::{drazin_general, drazin_index, drazin_windmill_closed, DrazinResult};
use crate::error::Error;
use crate::graph::{build_windmill, export_dot, Digraph, GraphJson, WindmillParams};
use crate::matrix::Matrix;
use crate::verify::{verify_candidate, verify_grid};
use crate::walks::{count_walks_matrix, enumerate_walks, DEFAULT_WALK_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "windmill",
    about = "Exact Drazin inverses and walk counts of oriented Dutch windmill digraphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build D^m_n and write the graph or its adjacency matrix.
    Build(BuildArgs),
    /// Compute a Drazin inverse.
    Drazin(DrazinArgs),
    /// Count or list walks of a given length.
    Walks(WalksArgs),
    /// Compute the Drazin index.
    Index(IndexArgs),
    /// Verify the windmill statements over a parameter grid, or check a
    /// candidate Drazin inverse with --matrix/--candidate.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    General,
    Closed,
    Both,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[arg(short, long)]
    pub m: usize,
    #[arg(short, long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// With --format json, write the adjacency matrix instead of the graph.
    #[arg(long)]
    pub adjacency: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(id = "source", required = true, multiple = false)]
pub struct MatrixSource {
    /// Windmill parameters `M N`.
    #[arg(long, num_args = 2, value_names = ["M", "N"], group = "source")]
    pub windmill: Option<Vec<usize>>,
    /// Matrix JSON file.
    #[arg(long, group = "source")]
    pub matrix: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DrazinArgs {
    #[command(flatten)]
    pub source: MatrixSource,
    #[arg(long, value_enum, default_value = "general")]
    pub method: MethodArg,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct IndexArgs {
    #[command(flatten)]
    pub source: MatrixSource,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(id = "graph_source", required = true, multiple = false)]
pub struct GraphSource {
    #[arg(long, num_args = 2, value_names = ["M", "N"], group = "graph_source")]
    pub windmill: Option<Vec<usize>>,
    /// Graph JSON file.
    #[arg(long, group = "graph_source")]
    pub graph: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct WalksArgs {
    #[command(flatten)]
    pub source: GraphSource,
    #[arg(long)]
    pub length: usize,
    /// List walks from this vertex (requires --to).
    #[arg(long, requires = "to")]
    pub from: Option<usize>,
    #[arg(long, requires = "from")]
    pub to: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_WALK_CAP)]
    pub cap: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Inclusive range of cycle counts, `A-B` or `A`.
    #[arg(long = "m-range", default_value = "2-5", value_parser = parse_range)]
    pub m_range: GridRange,
    /// Inclusive range of cycle lengths, `A-B` or `A`.
    #[arg(long = "n-range", default_value = "3-7", value_parser = parse_range)]
    pub n_range: GridRange,
    #[arg(long = "p-max", default_value_t = 3, value_parser = clap::value_parser!(u64).range(2..))]
    pub p_max: u64,
    /// Matrix JSON to check a candidate against (switches to candidate mode).
    #[arg(long, requires = "candidate")]
    pub matrix: Option<PathBuf>,
    /// Candidate Drazin inverse, matrix JSON.
    #[arg(long, requires = "matrix")]
    pub candidate: Option<PathBuf>,
    /// Drazin index to check with; computed from the matrix when omitted.
    #[arg(long, requires = "matrix")]
    pub index: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Inclusive integer range given on the command line as `A-B` or `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridRange(pub Vec<usize>);

fn parse_range(text: &str) -> Result<GridRange, String> {
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|e| format!("{s:?}: {e}"));
    let (lo, hi) = match text.split_once('-') {
        Some((a, b)) => (parse(a)?, parse(b)?),
        None => {
            let v = parse(text)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {text}"));
    }
    Ok(GridRange((lo..=hi).collect()))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{e}");
            return code;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<i32> {
    match command {
        Command::Build(args) => cmd_build(args, stdout),
        Command::Drazin(args) => cmd_drazin(args, stdout, stderr),
        Command::Walks(args) => cmd_walks(args, stdout),
        Command::Index(args) => cmd_index(args, stdout, stderr),
        Command::Verify(args) => cmd_verify(args, stdout, stderr),
    }
}

/// Errors that end a command with exit status 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Library(#[from] Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = std::result::Result<T, CliError>;

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn read_matrix(path: &Path) -> CliResult<Matrix> {
    Ok(Matrix::from_json_str(&read_text(path)?)?)
}

fn windmill_params(values: &[usize]) -> CliResult<WindmillParams> {
    Ok(WindmillParams::new(values[0], values[1])?)
}

fn with_newline(mut text: String) -> String {
    if !text.ends_with('\n') {
        text.push('\n');
    }
    text
}

pub fn cmd_build(args: BuildArgs, stdout: &mut dyn Write) -> CliResult<i32> {
    let p = WindmillParams::new(args.m, args.n)?;
    let g = build_windmill(p);
    let text = match (args.format, args.adjacency) {
        (Format::Dot, false) => export_dot(&g),
        (Format::Dot, true) => {
            return Err(CliError::Usage(
                "--adjacency cannot be written as DOT".into(),
            ))
        }
        (Format::Json, false) => {
            with_newline(serde_json::to_string(&GraphJson::windmill(p)).map_err(Error::from)?)
        }
        (Format::Json, true) => with_newline(g.adjacency_matrix().to_json_string()),
        (Format::Csv, _) => g.adjacency_matrix().to_csv()?,
    };
    emit(&args.out, &text, stdout)?;
    Ok(EXIT_OK)
}

pub fn cmd_drazin(
    args: DrazinArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> CliResult<i32> {
    let result: DrazinResult = match (&args.source.windmill, &args.source.matrix, args.method) {
        (Some(w), _, MethodArg::General) => {
            drazin_general(&build_windmill(windmill_params(w)?).adjacency_matrix())?
        }
        (Some(w), _, MethodArg::Closed) => drazin_windmill_closed(windmill_params(w)?)?,
        (Some(w), _, MethodArg::Both) => {
            let p = windmill_params(w)?;
            let closed = drazin_windmill_closed(p)?;
            let general = drazin_general(&build_windmill(p).adjacency_matrix())?;
            if closed.inverse != general.inverse || closed.index != general.index {
                let _ = writeln!(
                    stderr,
                    "closed form and general method disagree for m={} n={}",
                    p.m(),
                    p.n()
                );
                return Ok(EXIT_CHECK_FAILED);
            }
            general
        }
        (None, Some(path), MethodArg::General) => drazin_general(&read_matrix(path)?)?,
        (None, Some(_), _) => return Err(CliError::Usage(
            "--method closed/both needs --windmill; the closed form only covers windmill graphs"
                .into(),
        )),
        (None, None, _) => unreachable!("clap requires one source"),
    };
    emit(&args.out, &with_newline(result.to_json_string()), stdout)?;
    if result.verified.all_pass() {
        Ok(EXIT_OK)
    } else {
        let _ = writeln!(
            stderr,
            "Drazin equations not satisfied: {:?}",
            result.verified
        );
        Ok(EXIT_CHECK_FAILED)
    }
}

pub fn cmd_index(
    args: IndexArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> CliResult<i32> {
    let a = match (&args.source.windmill, &args.source.matrix) {
        (Some(w), _) => build_windmill(windmill_params(w)?).adjacency_matrix(),
        (None, Some(path)) => read_matrix(path)?,
        (None, None) => unreachable!("clap requires one source"),
    };
    match drazin_index(&a) {
        Ok(k) => {
            emit(&args.out, &format!("{}\n", json!({ "index": k })), stdout)?;
            Ok(EXIT_OK)
        }
        Err(e @ Error::IndexMismatch { .. }) => {
            let _ = writeln!(stderr, "error: {e}");
            Ok(EXIT_CHECK_FAILED)
        }
        Err(e) => Err(e.into()),
    }
}

pub fn cmd_walks(args: WalksArgs, stdout: &mut dyn Write) -> CliResult<i32> {
    let g: Digraph = match (&args.source.windmill, &args.source.graph) {
        (Some(w), _) => build_windmill(windmill_params(w)?),
        (None, Some(path)) => {
            let json: GraphJson = serde_json::from_str(&read_text(path)?).map_err(Error::from)?;
            json.to_digraph()?
        }
        (None, None) => unreachable!("clap requires one source"),
    };
    let text = match (args.from, args.to) {
        (Some(i), Some(j)) => {
            if args.format != Format::Json {
                return Err(CliError::Usage(
                    "walk lists are written as JSON only".into(),
                ));
            }
            let list = enumerate_walks(&g, i, j, args.length, args.cap)?;
            with_newline(serde_json::to_string(&list).map_err(Error::from)?)
        }
        _ => {
            let counts = count_walks_matrix(&g, args.length);
            match args.format {
                Format::Json => with_newline(counts.to_json_string()),
                Format::Csv => counts.to_csv()?,
                Format::Dot => {
                    return Err(CliError::Usage(
                        "walk counts cannot be written as DOT".into(),
                    ))
                }
            }
        }
    };
    emit(&args.out, &text, stdout)?;
    Ok(EXIT_OK)
}

pub fn cmd_verify(
    args: VerifyArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> CliResult<i32> {
    if let (Some(matrix), Some(candidate)) = (&args.matrix, &args.candidate) {
        let a = read_matrix(matrix)?;
        let x = read_matrix(candidate)?;
        let report = verify_candidate(&a, &x, args.index)?;
        let text = serde_json::to_string_pretty(&report).map_err(Error::from)?;
        emit(&args.out, &with_newline(text), stdout)?;
        for (name, status) in &report.checks {
            let _ = writeln!(stderr, "{name}: {status:?}");
        }
        return Ok(if report.all_pass {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        });
    }

    let report = verify_grid(&args.m_range.0, &args.n_range.0, args.p_max as usize)?;
    emit(&args.out, &with_newline(report.to_json_string()), stdout)?;
    let _ = write!(stderr, "{}", report.summary());
    Ok(if report.all_pass {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}
