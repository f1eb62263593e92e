//! Command-line front end: `generate`, `verify`, `classify` and `enumerate`.
//!
//! Exit codes: 0 success (or the square is magic), 1 usage or parse error,
//! 2 the square was read but is not magic (or not primitive), 3 unsupported
//! order.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use evenmagic::oracle::{enumerate, EnumerateOptions};
use evenmagic::{
    classify, emit_square, generate, parse_square, verify_magic, Error, Format, Method, Square64,
    MAX_ORDER,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NOT_MAGIC: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

const ENUMERATE_HELP: &str = "\
Only orders 3 and 4 run by default (8 squares / 1 up to symmetry, and 7040 / 880).
Order 5 has 275,305,224 squares up to symmetry and order 6 is larger still; neither
is reachable by this exhaustive search, so they are refused unless
--i-know-this-is-slow is given, and even then will not finish.";

#[derive(Debug, Parser)]
#[command(
    name = "evenmagic",
    version,
    about = "Even-order magic squares by consecutive numbering"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the magic square of an even order n >= 4.
    Generate {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Step)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Grid)]
        format: FormatArg,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every line sum and the permutation property of a square.
    Verify {
        /// Read from this file instead of stdin.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Grid)]
        format: FormatArg,
        #[arg(long, value_enum, default_value_t = ReportArg::Text)]
        report: ReportArg,
    },
    /// Print parallel, associated or mixed for a primitive square.
    Classify {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Grid)]
        format: FormatArg,
    },
    /// Count all magic squares of order 3 or 4 by exhaustive search.
    #[command(after_help = ENUMERATE_HELP)]
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Also report the count up to rotation and reflection.
        #[arg(long)]
        reduced: bool,
        /// Print the squares found (canonical representatives with --reduced).
        #[arg(long)]
        emit: bool,
        /// Print at most this many squares; counting still completes.
        #[arg(long)]
        limit: Option<usize>,
        /// Allow orders other than 3 and 4.
        #[arg(long = "i-know-this-is-slow")]
        allow_long_run: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Step,
    Walk,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Grid,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportArg {
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Grid => Format::Grid,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Step => Method::Step,
            MethodArg::Walk => Method::Walk,
        }
    }
}

/// A failure carrying its exit code.
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

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidOrder(_) | Error::UnsupportedOrder { .. } => EXIT_UNSUPPORTED,
            _ => EXIT_USAGE,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(EXIT_USAGE, e.to_string())
    }
}

/// Runs the tool with explicit streams and returns the exit code.
pub fn run<I, A>(
    argv: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn read_input(path: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<Vec<u8>, Failure> {
    match path {
        Some(p) => {
            fs::read(p).map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", p.display())))
        }
        None => {
            let mut buf = Vec::new();
            stdin.read_to_end(&mut buf)?;
            Ok(buf)
        }
    }
}

fn dispatch(
    command: Command,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Failure> {
    match command {
        Command::Generate {
            order,
            method,
            format,
            out,
        } => {
            if order < 4 || order % 2 == 1 {
                return Err(Failure::new(
                    EXIT_UNSUPPORTED,
                    format!(
                        "order {order} is not supported: only even orders >= 4 can be generated"
                    ),
                ));
            }
            if order > MAX_ORDER {
                return Err(Failure::new(
                    EXIT_UNSUPPORTED,
                    format!("order {order} exceeds the maximum of {MAX_ORDER}"),
                ));
            }
            let square: Square64 = generate(order, method.into())?;
            let text = emit_square(&square, format.into());
            match out {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", path.display())))?,
                None => stdout.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            input,
            format,
            report,
        } => {
            let bytes = read_input(input.as_ref(), stdin)?;
            let square: Square64 = parse_square(&bytes, format.into())?;
            let r = verify_magic(&square)?;
            match report {
                ReportArg::Json => {
                    let json = serde_json::to_string_pretty(&r)
                        .map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
                    writeln!(stdout, "{json}")?;
                }
                ReportArg::Text => write!(stdout, "{r}")?,
            }
            Ok(if r.is_magic { EXIT_OK } else { EXIT_NOT_MAGIC })
        }
        Command::Classify { input, format } => {
            let bytes = read_input(input.as_ref(), stdin)?;
            let square: Square64 = parse_square(&bytes, format.into())?;
            match classify(&square) {
                Ok(c) => {
                    if !verify_magic(&square)?.is_magic {
                        writeln!(stderr, "warning: the square is not magic")?;
                    }
                    writeln!(stdout, "{c}")?;
                    Ok(EXIT_OK)
                }
                Err(Error::Domain(msg)) => Err(Failure::new(EXIT_NOT_MAGIC, msg)),
                Err(e) => Err(e.into()),
            }
        }
        Command::Enumerate {
            order,
            reduced,
            emit,
            limit,
            allow_long_run,
        } => {
            let opts = EnumerateOptions {
                reduced,
                collect: emit,
                limit,
                allow_long_run,
            };
            let result = enumerate::<i64>(order, &opts)?;
            for (i, s) in result.squares.iter().enumerate() {
                if i > 0 {
                    writeln!(stdout)?;
                }
                stdout.write_all(emit_square(s, Format::Grid).as_bytes())?;
            }
            if !result.squares.is_empty() {
                writeln!(stdout)?;
            }
            let stats = &result.stats;
            writeln!(stdout, "total {}", stats.total_count)?;
            if reduced {
                writeln!(stdout, "reduced {}", stats.reduced_count)?;
            }
            writeln!(
                stderr,
                "order {}: {} nodes in {:.3?}",
                stats.order, stats.nodes_explored, stats.elapsed
            )?;
            Ok(EXIT_OK)
        }
    }
}
