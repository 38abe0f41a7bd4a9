//! The `palin` command-line interface.
//!
//! [`run`] is the whole program minus process plumbing, so tests can drive it
//! with an argument list and capture both streams.

use std::io::Write;
use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::basis::{
    coords, expand, transition_matrix, BasisId, CoordinateVector, TransitionMatrix,
};
use crate::error::Error;
use crate::families::{scan_almkvist, FamilyId, ScanRow, SCAN_CSV_HEADER};
use crate::poly::{parse_polynomial, Polynomial};
use crate::positivity::{analyze, b_product_convolution, AnalysisReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "palin",
    version,
    about = "Exact analysis of palindromic polynomials"
)]
struct Cli {
    /// Emit JSON instead of aligned text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full report: darga, palindromicity, unimodality, A/B coordinates, roots.
    Analyze {
        poly: String,
        /// Treat the input as a member of P_n for this n.
        #[arg(long)]
        darga: Option<usize>,
    },
    /// Coordinates of a palindromic polynomial in the S, A or B basis.
    Convert {
        poly: String,
        #[arg(long)]
        darga: Option<usize>,
        #[arg(long, value_parser = parse_basis)]
        to: BasisId,
    },
    /// Product of two polynomials, with coordinates of the result.
    Product {
        left: String,
        right: String,
        #[arg(long, value_parser = parse_basis, default_value = "B")]
        basis: BasisId,
    },
    /// Generate a member of a named family.
    Family(FamilyArgs),
    /// Scan Almkvist's f_{n,r} over a grid.
    Scan {
        /// Range of r, as `a..b` or a single value.
        #[arg(long = "r", value_parser = parse_range)]
        r: RangeInclusive<usize>,
        /// Range of n, as `a..b` or a single value.
        #[arg(long = "n", value_parser = parse_range)]
        n: RangeInclusive<usize>,
        /// Write CSV to this path (`-` for standard output).
        #[arg(long)]
        csv: Option<String>,
    },
    /// Closed-form transition matrix M(from, to) on P_n.
    Matrix {
        n: usize,
        #[arg(value_parser = parse_basis)]
        from: BasisId,
        #[arg(value_parser = parse_basis)]
        to: BasisId,
        /// Row-major CSV with all entries.
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Debug, Args)]
struct FamilyArgs {
    /// chain|boolean|gaussian|partition|almkvist|eulerian|narayana|derangement
    name: String,
    params: Vec<usize>,
}

fn parse_basis(s: &str) -> Result<BasisId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid range bound {t:?}"))
    };
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok(num(a)?..=num(b)?)
        }
        None => {
            let v = num(s)?;
            Ok(v..=v)
        }
    }
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Syntax { .. } | Error::ZeroDenominator { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

fn read_poly(text: &str) -> Result<Polynomial, Failure> {
    parse_polynomial(text)
        .map_err(|e| Failure::Usage(format!("malformed polynomial {text:?}: {e}")))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn aligned(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs
        .iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref()
        .map_or_else(|| "n/a".to_owned(), ToString::to_string)
}

fn coords_text(v: &Option<CoordinateVector>) -> String {
    v.as_ref()
        .map_or_else(|| "n/a".to_owned(), |v| format!("{}{}", v.basis(), v))
}

/// Aligned key/value rendering of an analysis.
pub fn report_text(f: &Polynomial, r: &AnalysisReport) -> String {
    let violations: Vec<String> = r
        .newton_violations
        .iter()
        .map(ToString::to_string)
        .collect();
    aligned(&[
        ("polynomial", f.to_string()),
        ("darga", r.darga.to_string()),
        ("palindromic", r.palindromic.to_string()),
        ("unimodal", r.unimodal.to_string()),
        ("log_concave", opt(&r.log_concave)),
        ("a_positive", opt(&r.a_positive)),
        ("b_positive", opt(&r.b_positive)),
        ("b_strictly_positive", opt(&r.b_strictly_positive)),
        ("a_coords", coords_text(&r.a_coords)),
        ("gamma", coords_text(&r.gamma)),
        ("newton_violations", format!("{{{}}}", violations.join(","))),
        ("real_root_count", opt(&r.real_root_count)),
        ("real_rooted", opt(&r.real_rooted)),
    ])
}

/// Header plus one line per row, columns right-aligned.
pub fn scan_text(rows: &[ScanRow]) -> String {
    let header: Vec<&str> = SCAN_CSV_HEADER.split(',').collect();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.r.to_string(),
                r.n.to_string(),
                r.darga.to_string(),
                r.palindromic.to_string(),
                r.unimodal.to_string(),
                r.lambda.to_string(),
                r.first_violation_index
                    .map_or_else(|| "-".to_owned(), |i| i.to_string()),
            ]
        })
        .collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|c| {
            cells
                .iter()
                .map(|row| row[c].len())
                .chain([header[c].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |row: Vec<String>| {
        let parts: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect();
        parts.join("  ") + "\n"
    };
    let mut out = line(header.iter().map(|s| s.to_string()).collect());
    for row in cells {
        out.push_str(&line(row));
    }
    out
}

pub fn scan_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from(SCAN_CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.to_csv());
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct MatrixJson<'a> {
    darga: usize,
    from: BasisId,
    to: BasisId,
    rows: Vec<Vec<String>>,
    #[serde(skip)]
    _m: std::marker::PhantomData<&'a ()>,
}

fn matrix_json(m: &TransitionMatrix) -> String {
    json(&MatrixJson {
        darga: m.darga(),
        from: m.from_basis(),
        to: m.to_basis(),
        rows: m
            .rows()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect(),
        _m: std::marker::PhantomData,
    })
}

#[derive(Serialize)]
struct ProductJson {
    product: Polynomial,
    darga: Option<usize>,
    palindromic: bool,
    coords: Option<CoordinateVector>,
    gamma_convolution: Option<CoordinateVector>,
}

#[derive(Serialize)]
struct FamilyJson {
    family: String,
    darga: usize,
    polynomial: Polynomial,
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let text = match cli.command {
        Command::Analyze { poly, darga } => {
            let f = read_poly(&poly)?;
            let report = analyze(&f, darga)?;
            if cli.json {
                json(&report)
            } else {
                report_text(&f, &report)
            }
        }
        Command::Convert { poly, darga, to } => {
            let f = read_poly(&poly)?;
            let n = match darga {
                Some(n) => n,
                None => f.darga()?,
            };
            let v = coords(&f, n, to)?;
            debug_assert_eq!(expand(&v), f);
            if cli.json {
                json(&v)
            } else {
                format!("{}{}\n", v.basis(), v)
            }
        }
        Command::Product { left, right, basis } => {
            let (f, g) = (read_poly(&left)?, read_poly(&right)?);
            let h = f.multiply(&g);
            let darga = h.darga().ok();
            let palindromic = h.is_palindromic(None);
            let coords_of = |p: &Polynomial, b| p.darga().ok().and_then(|n| coords(p, n, b).ok());
            let coords_h = darga.and_then(|n| coords(&h, n, basis).ok());
            let conv = match (coords_of(&f, BasisId::B), coords_of(&g, BasisId::B)) {
                (Some(u), Some(v)) if basis == BasisId::B => Some(b_product_convolution(&u, &v)?),
                _ => None,
            };
            if cli.json {
                json(&ProductJson {
                    product: h,
                    darga,
                    palindromic,
                    coords: coords_h,
                    gamma_convolution: conv,
                })
            } else {
                let mut pairs = vec![
                    ("product", h.to_string()),
                    ("darga", opt(&darga)),
                    ("palindromic", palindromic.to_string()),
                    ("coords", coords_text(&coords_h)),
                ];
                if basis == BasisId::B {
                    pairs.push(("gamma_convolution", coords_text(&conv)));
                }
                aligned(&pairs)
            }
        }
        Command::Family(FamilyArgs { name, params }) => {
            let id = FamilyId::from_parts(&name, &params)?;
            let f = id.generate()?;
            if cli.json {
                json(&FamilyJson {
                    family: id.to_string(),
                    darga: id.darga(),
                    polynomial: f,
                })
            } else {
                format!("{f}\n")
            }
        }
        Command::Scan { r, n, csv } => {
            let rows = scan_almkvist(n, r)?;
            match csv.as_deref() {
                Some("-") => scan_csv(&rows),
                Some(path) => {
                    std::fs::write(path, scan_csv(&rows))
                        .map_err(|e| Failure::Domain(format!("cannot write {path}: {e}")))?;
                    if cli.json {
                        json(&rows)
                    } else {
                        scan_text(&rows)
                    }
                }
                None if cli.json => json(&rows),
                None => scan_text(&rows),
            }
        }
        Command::Matrix { n, from, to, csv } => {
            let m = transition_matrix(n, from, to);
            if csv {
                m.to_csv()
            } else if cli.json {
                matrix_json(&m)
            } else {
                m.to_text()
            }
        }
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Domain(format!("write failed: {e}")))
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code: 0 on success, 1 on a domain error, 2 on a usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
                EXIT_USAGE
            } else {
                let _ = out.write_all(rendered.as_bytes());
                EXIT_OK
            };
        }
    };
    match execute(cli, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DOMAIN
        }
    }
}
