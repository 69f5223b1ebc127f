//! Command-line front end.
//!
//! Exit codes: 0 success (for `analyze`: the necessary condition holds),
//! 3 not maximal, 2 singular input, 64 usage, 65 malformed input data,
//! 70 internal failure, 74 I/O failure.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::binary::Matrix01;
use crate::certify::VerdictKind;
use crate::error::Error;
use crate::format::{parse_matrix, serialize_matrix, Format, FormatError, ParsedMatrix};
use crate::report::{analyze, Report};
use crate::search::{brute_force_g, brute_force_h, SearchConfig};
use crate::transform::{check_det_identity, pm1_to_01, zero_one_to_pm1};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SINGULAR: i32 = 2;
pub const EXIT_NOT_MAXIMAL: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_SOFTWARE: i32 = 70;
pub const EXIT_IO: i32 = 74;

#[derive(Debug, Parser)]
#[command(
    name = "detcert",
    version,
    about = "Exact certificates of non-maximality for 0/1 and ±1 determinants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Row sums of the bordered inverse, verdict, and simplex geometry.
    Analyze {
        #[arg(long)]
        input: PathBuf,
        /// grid01, gridpm, pbm or pbm-pm. ±1 input is reduced to 0/1 first.
        #[arg(long, default_value = "grid01")]
        format: Format,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        #[arg(long)]
        text: bool,
    },
    /// Converts between ±1 matrices of order n+1 and 0/1 matrices of order n.
    Transform {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        direction: Direction,
        #[arg(long)]
        output: PathBuf,
        /// Input format; defaults to gridpm or grid01 by direction.
        #[arg(long)]
        from: Option<Format>,
        /// Output format; defaults to grid01 or gridpm by direction.
        #[arg(long)]
        to: Option<Format>,
    },
    /// Exhaustive search for the maximum determinant of a given order.
    Search {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        order: usize,
        #[arg(long, env = "DETCERT_WORKERS")]
        workers: Option<usize>,
        /// Allow order 6 for 0/1 matrices.
        #[arg(long)]
        allow_large: bool,
        #[arg(long)]
        json: bool,
    },
    /// Rewrites a matrix file in another format of the same alphabet.
    Convert {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        from: Format,
        #[arg(long)]
        to: Format,
        /// Destination file; standard output when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Direction {
    #[value(name = "pm1-to-01")]
    Pm1To01,
    #[value(name = "01-to-pm1")]
    ZeroOneToPm1,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    #[value(name = "01")]
    ZeroOne,
    #[value(name = "pm1")]
    Pm1,
}

/// Failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::new(EXIT_DATA, e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SingularMatrix | Error::DegenerateSimplex => EXIT_SINGULAR,
            Error::OrderTooLarge { .. } => EXIT_USAGE,
            Error::InternalError(_) => EXIT_SOFTWARE,
            _ => EXIT_DATA,
        };
        Failure::new(code, e.to_string())
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::new(EXIT_IO, format!("{}: {e}", path.display()))
}

fn read_matrix(path: &Path, format: Format) -> Result<ParsedMatrix, Failure> {
    let bytes = fs::read(path).map_err(|e| io_failure(path, e))?;
    Ok(parse_matrix(&bytes, format)?)
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    fs::write(path, bytes).map_err(|e| io_failure(path, e))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::new(EXIT_IO, format!("write failed: {e}")))
}

fn grid_text(m: &ParsedMatrix) -> String {
    let format = match m {
        ParsedMatrix::ZeroOne(_) => Format::Grid01,
        ParsedMatrix::PlusMinus(_) => Format::GridPm,
    };
    String::from_utf8(serialize_matrix(m, format).expect("matching format")).expect("ascii")
}

/// Parses `args` (including the program name) and runs the command, writing
/// to the given streams. Returns the process exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match run(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "detcert: {}", f.message);
            f.code
        }
    }
}

fn run(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Analyze {
            input,
            format,
            json,
            text: _,
        } => run_analyze(&input, format, json, out),
        Command::Transform {
            input,
            direction,
            output,
            from,
            to,
        } => run_transform(&input, direction, &output, from, to, out),
        Command::Search {
            kind,
            order,
            workers,
            allow_large,
            json,
        } => run_search(kind, order, workers, allow_large, json, out),
        Command::Convert {
            input,
            from,
            to,
            output,
        } => run_convert(&input, from, to, output.as_deref(), out),
    }
}

fn run_analyze(input: &Path, format: Format, json: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let (matrix, source_order): (Matrix01, Option<usize>) = match read_matrix(input, format)? {
        ParsedMatrix::ZeroOne(m) => (m, None),
        ParsedMatrix::PlusMinus(u) => {
            let order = u.order();
            (pm1_to_01(&u)?, Some(order))
        }
    };
    let analysis = analyze(&matrix)?;
    let mut report = Report::from_analysis(&analysis);
    report.reduced_from_pm1_order = source_order;
    if json {
        emit(out, &report.to_json())?;
        emit(out, "\n")?;
    } else {
        emit(out, &report.to_text())?;
    }
    Ok(match analysis.verdict.kind {
        VerdictKind::NecessaryConditionHolds => EXIT_OK,
        VerdictKind::NotMaximal => EXIT_NOT_MAXIMAL,
    })
}

fn run_transform(
    input: &Path,
    direction: Direction,
    output: &Path,
    from: Option<Format>,
    to: Option<Format>,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let (default_from, default_to) = match direction {
        Direction::Pm1To01 => (Format::GridPm, Format::Grid01),
        Direction::ZeroOneToPm1 => (Format::Grid01, Format::GridPm),
    };
    let from = from.unwrap_or(default_from);
    let to = to.unwrap_or(default_to);
    if from.is_pm1() != default_from.is_pm1() || to.is_pm1() != default_to.is_pm1() {
        return Err(Failure::new(
            EXIT_USAGE,
            format!("formats {from} -> {to} do not match direction"),
        ));
    }
    let parsed = read_matrix(input, from)?;
    let (u, t) = match (direction, parsed) {
        (Direction::Pm1To01, ParsedMatrix::PlusMinus(u)) => {
            let t = pm1_to_01(&u)?;
            (u, t)
        }
        (Direction::ZeroOneToPm1, ParsedMatrix::ZeroOne(t)) => (zero_one_to_pm1(&t), t),
        _ => unreachable!("format alphabet checked above"),
    };
    let result = match direction {
        Direction::Pm1To01 => ParsedMatrix::ZeroOne(t.clone()),
        Direction::ZeroOneToPm1 => ParsedMatrix::PlusMinus(u.clone()),
    };
    write_file(output, &serialize_matrix(&result, to)?)?;
    let check = check_det_identity(&u)?;
    let n = t.order();
    emit(
        out,
        &format!(
            "pm1 order: {}\n01 order: {n}\n2^{n}*|det T| = {}\n|det U| = {}\nidentity holds: {}\n",
            u.order(),
            check.lhs,
            check.rhs,
            check.holds
        ),
    )?;
    if !check.holds {
        return Err(Failure::new(EXIT_SOFTWARE, "determinant identity failed"));
    }
    Ok(EXIT_OK)
}

fn run_search(
    kind: Kind,
    order: usize,
    workers: Option<usize>,
    allow_large: bool,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let mut config = SearchConfig::default();
    if let Some(w) = workers {
        if w == 0 {
            return Err(Failure::new(EXIT_USAGE, "--workers must be at least 1"));
        }
        config.workers = w;
    }
    config.allow_large = allow_large;
    if order == 0 {
        return Err(Failure::new(EXIT_USAGE, "--order must be at least 1"));
    }
    let (max, count, witness) = match kind {
        Kind::ZeroOne => {
            let r = brute_force_h(order, &config)?;
            (r.max_abs_det, r.count_maximizers, ParsedMatrix::ZeroOne(r.witness))
        }
        Kind::Pm1 => {
            let r = brute_force_g(order, &config)?;
            (r.max_abs_det, r.count_maximizers, ParsedMatrix::PlusMinus(r.witness))
        }
    };
    let kind_name = match kind {
        Kind::ZeroOne => "01",
        Kind::Pm1 => "pm1",
    };
    let grid = grid_text(&witness);
    if json {
        let value = serde_json::json!({
            "kind": kind_name,
            "order": order,
            "max_abs_det": max.to_string(),
            "count_maximizers": count,
            "witness": grid.lines().collect::<Vec<_>>(),
        });
        emit(out, &format!("{}\n", serde_json::to_string_pretty(&value).expect("json")))?;
    } else {
        emit(
            out,
            &format!(
                "kind: {kind_name}\norder: {order}\nmax |det|: {max}\nmaximizers: {count}\nwitness:\n{grid}"
            ),
        )?;
    }
    Ok(EXIT_OK)
}

fn run_convert(
    input: &Path,
    from: Format,
    to: Format,
    output: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    if from.is_pm1() != to.is_pm1() {
        return Err(Failure::new(
            EXIT_USAGE,
            format!("cannot convert {from} to {to}; use `transform` to change alphabets"),
        ));
    }
    let parsed = read_matrix(input, from)?;
    let bytes = serialize_matrix(&parsed, to)?;
    match output {
        Some(path) => write_file(path, &bytes)?,
        None => out
            .write_all(&bytes)
            .map_err(|e| Failure::new(EXIT_IO, format!("write failed: {e}")))?,
    }
    Ok(EXIT_OK)
}
