//! The `feuler` command-line front end.
//!
//! [`CliConfig`] is the parsed command line and [`run_cli`] executes it
//! against any writer, returning the process exit status. Invalid flags are
//! rejected by the argument parser before [`run_cli`] is reached.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::feuler::{fe_numbers_order, fe_poly, stirling_lambda, to_fe_basis};
use crate::identities::{
    run_suite, Cell, CellPoint, Fault, IdentityId, Status, SuiteConfig, Totals, VerificationReport,
    DEFAULT_SEED,
};
use crate::parse::parse_poly_expr;
use crate::scalar::{parse_rational, LambdaRat, Rational};
use crate::xpoly::XPoly;

/// Environment variable that takes precedence over `--seed`.
pub const SEED_ENV: &str = "FEULER_SEED";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Latex,
    Csv,
    Json,
}

#[derive(Clone, Debug, Parser)]
#[command(
    name = "feuler",
    version,
    about = "Exact Frobenius-Euler polynomials over Q(L)"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Frobenius-Euler numbers H_0 .. H_{n-max} of the given order.
    Numbers {
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        order: usize,
        /// Substitute a rational value p/q for L after computing.
        #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true)]
        lambda: Option<Rational>,
    },
    /// The polynomial H_n^(r)(x|L); the order may be negative.
    Poly {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        order: i64,
        #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true)]
        lambda: Option<Rational>,
    },
    /// Coefficients of a polynomial in the Frobenius-Euler basis of the given order.
    Convert {
        /// Expression in x and L, e.g. "3*x - 1/(1-L)".
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value_t = 1)]
        order: usize,
        #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true)]
        lambda: Option<Rational>,
    },
    /// L-analogue Stirling numbers S_L(n,k); all k in 0..=n when --k is absent.
    Stirling {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true)]
        lambda: Option<Rational>,
    },
    /// Check a single identity at one parameter point.
    Verify {
        #[arg(long, value_parser = parse_identity)]
        identity: IdentityId,
        #[arg(long, default_value_t = 0)]
        n: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, default_value_t = 0)]
        s: i64,
        #[arg(long, default_value_t = 0)]
        k: i64,
        /// Index into the seeded family of random round-trip polynomials.
        #[arg(long, default_value_t = 0)]
        case: i64,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check every identity over a parameter grid.
    Suite {
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, default_value_t = 4)]
        r_max: usize,
        #[arg(long, default_value_t = 4)]
        s_max: usize,
        /// Worker threads; results are identical for any value.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        jobs: u32,
        #[arg(long)]
        seed: Option<u64>,
        /// Record per-cell wall-clock time in the report.
        #[arg(long)]
        timings: bool,
        /// Write the report here and print only the summary.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, hide = true, value_parser = parse_fault)]
        mutate: Option<Fault>,
    },
}

fn parse_lambda(s: &str) -> Result<Rational, String> {
    let v = parse_rational(s).ok_or_else(|| format!("expected a rational p/q, got {s:?}"))?;
    if v == crate::scalar::rat_int(1) {
        return Err("L = 1 is a pole of every Frobenius-Euler quantity".into());
    }
    Ok(v)
}

fn parse_identity(s: &str) -> Result<IdentityId, String> {
    IdentityId::parse(s).ok_or_else(|| {
        let known: Vec<_> = IdentityId::ALL.iter().map(|id| id.as_str()).collect();
        format!(
            "unknown identity {s:?}; expected one of {}",
            known.join(", ")
        )
    })
}

fn parse_fault(s: &str) -> Result<Fault, String> {
    Fault::parse(s).ok_or_else(|| format!("unknown fault {s:?}"))
}

/// `FEULER_SEED` when set, else the flag, else the default.
pub fn effective_seed(flag: Option<u64>) -> Result<u64, Error> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Error::InvalidArgument(format!("{SEED_ENV}={v:?} is not an unsigned integer"))
        }),
        Err(_) => Ok(flag.unwrap_or(DEFAULT_SEED)),
    }
}

enum Value {
    Int(i64),
    Text(String),
    Scalar(LambdaRat),
    Poly(XPoly),
}

impl Value {
    fn plain(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            Value::Text(s) => s.clone(),
            Value::Scalar(v) => v.to_string(),
            Value::Poly(p) => p.to_string(),
        }
    }

    fn latex(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            Value::Text(s) => format!("\\texttt{{{}}}", s.replace('_', "\\_")),
            Value::Scalar(v) => format!("${}$", v.to_latex()),
            Value::Poly(p) => format!("${}$", p.to_latex()),
        }
    }

    fn csv(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            _ => format!("\"{}\"", self.plain().replace('"', "\"\"")),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Value::Int(v) => (*v).into(),
            _ => self.plain().into(),
        }
    }
}

struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Value>>,
}

impl Table {
    fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Plain => {
                let cells: Vec<Vec<String>> = self
                    .rows
                    .iter()
                    .map(|r| r.iter().map(Value::plain).collect())
                    .collect();
                let last = self.columns.len() - 1;
                let widths: Vec<usize> = (0..self.columns.len())
                    .map(|c| {
                        cells
                            .iter()
                            .map(|r| r[c].chars().count())
                            .chain([self.columns[c].len()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |fields: Vec<&str>| -> String {
                    let mut s = String::new();
                    for (c, f) in fields.iter().enumerate() {
                        if c == last {
                            s.push_str(f);
                        } else {
                            let pad = widths[c] - f.chars().count();
                            let _ = write!(s, "{f}{}  ", " ".repeat(pad));
                        }
                    }
                    s.push('\n');
                    s
                };
                out.push_str(&line(self.columns.clone()));
                for r in &cells {
                    out.push_str(&line(r.iter().map(String::as_str).collect()));
                }
            }
            Format::Latex => {
                let _ = writeln!(
                    out,
                    "\\begin{{tabular}}{{{}}}",
                    "l".repeat(self.columns.len())
                );
                let _ = writeln!(
                    out,
                    "{} \\\\ \\hline",
                    self.columns
                        .iter()
                        .map(|c| format!("${c}$"))
                        .collect::<Vec<_>>()
                        .join(" & ")
                );
                for r in &self.rows {
                    let _ = writeln!(
                        out,
                        "{} \\\\",
                        r.iter().map(Value::latex).collect::<Vec<_>>().join(" & ")
                    );
                }
                out.push_str("\\end{tabular}\n");
            }
            Format::Csv => {
                out.push_str(&self.columns.join(","));
                out.push('\n');
                for r in &self.rows {
                    out.push_str(&r.iter().map(Value::csv).collect::<Vec<_>>().join(","));
                    out.push('\n');
                }
            }
            Format::Json => {
                for r in &self.rows {
                    let obj: serde_json::Map<String, serde_json::Value> = self
                        .columns
                        .iter()
                        .zip(r)
                        .map(|(c, v)| (c.to_string(), v.json()))
                        .collect();
                    out.push_str(&serde_json::Value::Object(obj).to_string());
                    out.push('\n');
                }
            }
        }
        out
    }
}

fn specialize(v: LambdaRat, at: Option<&Rational>) -> Result<Value, Error> {
    Ok(Value::Scalar(match at {
        Some(a) => LambdaRat::from_rational(v.eval(a)?),
        None => v,
    }))
}

fn specialize_poly(p: XPoly, at: Option<&Rational>) -> Result<Value, Error> {
    Ok(Value::Poly(match at {
        Some(a) => p.eval_lambda(a)?,
        None => p,
    }))
}

fn cell_row(cell: &Cell) -> Vec<Value> {
    let params = cell
        .params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ");
    vec![
        Value::Text(cell.identity.as_str().into()),
        Value::Text(params),
        Value::Text(cell.status.to_string()),
        Value::Text(cell.lhs.clone()),
        Value::Text(cell.rhs.clone()),
        Value::Int(cell.elapsed_us as i64),
    ]
}

const CELL_COLUMNS: [&str; 6] = ["identity", "params", "status", "lhs", "rhs", "elapsed_us"];

fn summary_line(t: &Totals) -> String {
    format!(
        "total={} equal={} mismatch={} skipped={}\n",
        t.total, t.equal, t.mismatch, t.skipped
    )
}

fn render_report(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json_lines(),
        Format::Csv => Table {
            columns: CELL_COLUMNS.to_vec(),
            rows: report.cells.iter().map(cell_row).collect(),
        }
        .render(Format::Csv),
        Format::Plain | Format::Latex => {
            let mut per_id: BTreeMap<IdentityId, Vec<Cell>> = BTreeMap::new();
            for c in &report.cells {
                per_id.entry(c.identity).or_default().push(c.clone());
            }
            let rows = per_id
                .iter()
                .map(|(id, cells)| {
                    let t = Totals::of(cells);
                    vec![
                        Value::Text(id.as_str().into()),
                        Value::Int(t.total as i64),
                        Value::Int(t.equal as i64),
                        Value::Int(t.mismatch as i64),
                        Value::Int(t.skipped as i64),
                    ]
                })
                .collect();
            let table = Table {
                columns: vec!["identity", "total", "equal", "mismatch", "skipped"],
                rows,
            };
            let mut out = table.render(format);
            if format == Format::Plain {
                for c in report.cells.iter().filter(|c| c.status == Status::Mismatch) {
                    let params = c
                        .params
                        .iter()
                        .map(|(k, v)| format!("{k}={v}"))
                        .collect::<Vec<_>>()
                        .join(" ");
                    let _ = writeln!(
                        out,
                        "MISMATCH {} {params}\n  lhs: {}\n  rhs: {}",
                        c.identity, c.lhs, c.rhs
                    );
                }
                out.push_str(&summary_line(&report.totals));
            }
            out
        }
    }
}

fn render_cell(cell: &Cell, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(cell).expect("cell serializes") + "\n",
        Format::Plain => {
            let params = cell
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(" ");
            format!(
                "{} {params}: {}\nlhs: {}\nrhs: {}\n",
                cell.identity, cell.status, cell.lhs, cell.rhs
            )
        }
        Format::Csv | Format::Latex => Table {
            columns: CELL_COLUMNS.to_vec(),
            rows: vec![cell_row(cell)],
        }
        .render(format),
    }
}

/// Runs one command, writing its output to `out`. Returns the exit status:
/// 0 on success, 1 when a verified identity has a mismatch. Errors are
/// returned to the caller, which reports them with a nonzero status.
pub fn run_cli(config: &CliConfig, out: &mut dyn Write) -> Result<i32, Error> {
    let format = config.format;
    let io = |e: std::io::Error| Error::InvalidArgument(format!("write failed: {e}"));
    let (text, code) = match &config.command {
        Command::Numbers {
            n_max,
            order,
            lambda,
        } => {
            let rows = fe_numbers_order(*n_max, *order)
                .into_iter()
                .enumerate()
                .map(|(n, v)| Ok(vec![Value::Int(n as i64), specialize(v, lambda.as_ref())?]))
                .collect::<Result<_, Error>>()?;
            (
                Table {
                    columns: vec!["n", "H_n"],
                    rows,
                }
                .render(format),
                0,
            )
        }
        Command::Poly { n, order, lambda } => {
            let p = specialize_poly(fe_poly(*n, *order), lambda.as_ref())?;
            let row = vec![Value::Int(*n as i64), Value::Int(*order), p];
            (
                Table {
                    columns: vec!["n", "r", "H_n^(r)(x)"],
                    rows: vec![row],
                }
                .render(format),
                0,
            )
        }
        Command::Convert {
            poly,
            order,
            lambda,
        } => {
            let p = parse_poly_expr(poly)?;
            let rows = to_fe_basis(&p, *order)
                .coefficients
                .into_iter()
                .enumerate()
                .map(|(k, c)| Ok(vec![Value::Int(k as i64), specialize(c, lambda.as_ref())?]))
                .collect::<Result<_, Error>>()?;
            (
                Table {
                    columns: vec!["k", "C_k"],
                    rows,
                }
                .render(format),
                0,
            )
        }
        Command::Stirling { n, k, lambda } => {
            let ks: Vec<usize> = match k {
                Some(k) => vec![*k],
                None => (0..=*n).collect(),
            };
            let rows = ks
                .into_iter()
                .map(|k| {
                    let v = specialize(stirling_lambda(*n, k), lambda.as_ref())?;
                    Ok(vec![Value::Int(*n as i64), Value::Int(k as i64), v])
                })
                .collect::<Result<_, Error>>()?;
            (
                Table {
                    columns: vec!["n", "k", "S_L(n,k)"],
                    rows,
                }
                .render(format),
                0,
            )
        }
        Command::Verify {
            identity,
            n,
            r,
            s,
            k,
            case,
            seed,
        } => {
            let point = CellPoint {
                n: *n,
                r: *r,
                s: *s,
                k: *k,
                case: *case,
                seed: effective_seed(*seed)?,
            };
            let cell = crate::identities::Verifier::new().verify(*identity, point);
            let code = i32::from(cell.status == Status::Mismatch);
            (render_cell(&cell, format), code)
        }
        Command::Suite {
            n_max,
            r_max,
            s_max,
            jobs,
            seed,
            timings,
            output,
            mutate,
        } => {
            let mut suite = SuiteConfig::new(*n_max, *r_max, *s_max);
            suite.seed = effective_seed(*seed)?;
            suite.jobs = *jobs as usize;
            suite.timings = *timings;
            suite.fault = *mutate;
            let report = run_suite(&suite)?;
            let code = i32::from(report.has_mismatch());
            let rendered = render_report(&report, format);
            match output {
                Some(path) => {
                    std::fs::write(path, rendered).map_err(io)?;
                    (summary_line(&report.totals), code)
                }
                None => (rendered, code),
            }
        }
    };
    out.write_all(text.as_bytes()).map_err(io)?;
    out.flush().map_err(io)?;
    Ok(code)
}
