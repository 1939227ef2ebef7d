//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_integer::Integer;
use serde_json::{json, Map, Number, Value};

use crate::checkerboard::checkerboard_graph;
use crate::coloring::{count_colorings_bruteforce, count_colorings_formula, count_colorings_snf, DEFAULT_WORK_BOUND};
use crate::error::Error;
use crate::plat::build_plat;
use crate::poly::{build_p, Part};
use crate::propagation::{determinant, propagate_numeric, reduced_cse};
use crate::trees::{tree_count_matrix, tree_count_recursion};
use crate::twist::TwistVector;
use crate::verify::{run_sweep, SweepBounds};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_DISCREPANCY: i32 = 3;
pub const EXIT_WORK_BOUND: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "ratknot", version, about = "Determinants and Fox colorings of rational knots R(n1,...,nN)")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PartArg {
    Full,
    Even,
    Odd,
}

impl From<PartArg> for Part {
    fn from(p: PartArg) -> Self {
        match p {
            PartArg::Full => Part::Full,
            PartArg::Even => Part::Even,
            PartArg::Odd => Part::Odd,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ColorMethod {
    Formula,
    Snf,
    Brute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TreeMethod {
    Recursion,
    Matrix,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Signed and absolute determinant with the reduced coloring equation.
    Det {
        #[arg(allow_hyphen_values = true)]
        twists: String,
    },
    /// The polynomial p_N or its even/odd part.
    Poly {
        n: u32,
        #[arg(long, value_enum, default_value_t = PartArg::Full)]
        part: PartArg,
    },
    /// Number of Fox colorings modulo r.
    Colors {
        #[arg(allow_hyphen_values = true)]
        twists: String,
        #[arg(long)]
        modulus: u64,
        #[arg(long, value_enum, default_value_t = ColorMethod::Formula)]
        method: ColorMethod,
        /// Work bound for the brute-force method.
        #[arg(long, default_value_t = DEFAULT_WORK_BOUND)]
        cap: u64,
    },
    /// Spanning trees of the checkerboard graph (positive twists only).
    Trees {
        twists: String,
        #[arg(long, value_enum, default_value_t = TreeMethod::Recursion)]
        method: TreeMethod,
    },
    /// Bottom colors (l, m, r) for top colors a and b.
    Propagate {
        #[arg(allow_hyphen_values = true)]
        twists: String,
        #[arg(short, long, allow_hyphen_values = true)]
        a: i64,
        #[arg(short, long, allow_hyphen_values = true)]
        b: i64,
    },
    /// Compare every method on all twist vectors within the bounds.
    Verify {
        /// Largest |n_i|.
        #[arg(long, default_value_t = 3)]
        max_n: i64,
        /// Longest twist vector.
        #[arg(long, default_value_t = 5)]
        max_len: usize,
        #[arg(long, default_value_t = 7)]
        max_modulus: u64,
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
    },
}

fn big(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integers are valid JSON numbers"))
}

fn emit(out: &mut dyn Write, format: Format, plain: String, fields: Map<String, Value>) -> std::io::Result<()> {
    match format {
        Format::Plain => writeln!(out, "{plain}"),
        Format::Json => writeln!(out, "{}", Value::Object(fields)),
    }
}

fn fields(pairs: Vec<(&str, Value)>) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::WorkBoundExceeded { .. } => EXIT_WORK_BOUND,
        _ => EXIT_INVALID_INPUT,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            if e.use_stderr() {
                EXIT_INVALID_INPUT
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            }
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            error_code(&e)
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Error> {
    let io = |e: std::io::Error| Error::Parse(format!("write failed: {e}"));
    let format = cli.format;
    match &cli.command {
        Command::Det { twists } => {
            let tw: TwistVector = twists.parse()?;
            let det = determinant(&tw);
            let eq = reduced_cse(&tw);
            let kind = if det.absolute.is_odd() { "knot" } else { "link" };
            let plain = format!("signed={} abs={} equation={}", det.signed, det.absolute, eq);
            let json = fields(vec![
                ("signed", big(&det.signed)),
                ("abs", big(&det.absolute)),
                ("equation", json!(eq.to_string())),
                ("symbolic", json!(eq.symbolic())),
                ("kind", json!(kind)),
            ]);
            emit(out, format, plain, json).map_err(io)?;
        }
        Command::Poly { n, part } => {
            let poly = build_p(*n, (*part).into());
            let text = poly.to_string();
            let json = fields(vec![("poly", json!(text)), ("n", json!(n)), ("monomials", json!(poly.len()))]);
            emit(out, format, text, json).map_err(io)?;
        }
        Command::Colors {
            twists,
            modulus,
            method,
            cap,
        } => {
            let tw: TwistVector = twists.parse()?;
            if *modulus == 2 {
                let _ = writeln!(err, "note: modulus 2 lies outside the range r > 2 where coloring counts are usually studied");
            }
            let (count, name) = match method {
                ColorMethod::Formula => (count_colorings_formula(&tw, *modulus)?, "formula"),
                ColorMethod::Snf => {
                    let cm = build_plat(&tw).coloring_matrix::<BigInt>();
                    (count_colorings_snf(&cm, *modulus)?, "snf")
                }
                ColorMethod::Brute => {
                    let n = count_colorings_bruteforce(&build_plat(&tw), *modulus, *cap)?;
                    (BigInt::from(n), "brute")
                }
            };
            let json = fields(vec![
                ("count", big(&count)),
                ("modulus", json!(modulus)),
                ("method", json!(name)),
            ]);
            emit(out, format, count.to_string(), json).map_err(io)?;
        }
        Command::Trees { twists, method } => {
            let tw: TwistVector = twists.parse()?;
            let (trees, name): (BigInt, _) = match method {
                TreeMethod::Recursion => (tree_count_recursion(&tw)?, "recursion"),
                TreeMethod::Matrix => (tree_count_matrix(&checkerboard_graph(&tw)?)?, "matrix"),
            };
            let json = fields(vec![("trees", big(&trees)), ("method", json!(name))]);
            emit(out, format, trees.to_string(), json).map_err(io)?;
        }
        Command::Propagate { twists, a, b } => {
            let tw: TwistVector = twists.parse()?;
            let (l, m, r) = propagate_numeric(&tw, &BigInt::from(*a), &BigInt::from(*b))?;
            let plain = format!("l={l} m={m} r={r}");
            let json = fields(vec![("l", big(&l)), ("m", big(&m)), ("r", big(&r))]);
            emit(out, format, plain, json).map_err(io)?;
        }
        Command::Verify {
            max_n,
            max_len,
            max_modulus,
            cap,
        } => {
            if *max_n < 1 {
                return Err(Error::Parse("--max-n must be at least 1".into()));
            }
            if *max_modulus < 2 {
                return Err(Error::BadModulus(*max_modulus));
            }
            let bounds = SweepBounds {
                max_twist: *max_n,
                max_len: *max_len,
                max_modulus: *max_modulus,
                brute_cap: *cap,
            };
            let report = run_sweep(&bounds)?;
            let discrepancy = report.discrepancy.as_ref().map(|d| {
                json!({
                    "twists": d.twists.to_string(),
                    "check": d.check,
                    "expected": d.expected,
                    "got": d.got,
                })
            });
            let mut plain = format!(
                "cases={} checks={} brute_skipped={} discrepancies={}",
                report.cases,
                report.checks,
                report.brute_skipped,
                usize::from(report.discrepancy.is_some())
            );
            if let Some(d) = &report.discrepancy {
                plain.push_str(&format!(
                    "\nfirst discrepancy: twists={} check={} expected={} got={}",
                    d.twists, d.check, d.expected, d.got
                ));
            }
            let json = fields(vec![
                ("cases", json!(report.cases)),
                ("checks", json!(report.checks)),
                ("brute_skipped", json!(report.brute_skipped)),
                ("discrepancy", discrepancy.unwrap_or(Value::Null)),
            ]);
            emit(out, format, plain, json).map_err(io)?;
            if report.discrepancy.is_some() {
                return Ok(EXIT_DISCREPANCY);
            }
        }
    }
    Ok(EXIT_OK)
}
