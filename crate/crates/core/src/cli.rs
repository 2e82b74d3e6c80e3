//! Command-line front end. [`run`] is pure: it takes the argument vector and
//! returns the bytes for stdout/stderr plus the exit status, so the binary
//! is a thin wrapper and every path is testable in-process.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::exactnum::{format_rational, parse_rational};
use crate::mlpseq::{egf_phi_monic, generate, gf_g, gf_phi, SeqKind};
use crate::polyfps::{series_elementary, Poly, PolySeries, SeriesKind};
use crate::report::CheckReport;
use crate::specanalysis::{
    erratum_audit, ft_closed, ft_numeric, moment, orthogonality_matrix, zero_bound, zeros, QuadConfig,
};
use crate::suite::{self, Summary};

pub const TOOL_VERSION: &str = concat!("mlpoly ", env!("CARGO_PKG_VERSION"));

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

// Degree caps keep exact arithmetic and quadrature in their validated range.
const MAX_EXACT_N: usize = 200;
const MAX_NUMERIC_N: usize = 40;

#[derive(Debug, Parser)]
#[command(name = "mlpoly", version, about = "Mittag-Leffler polynomial toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeqArg {
    G,
    GMonic,
    Phi,
    PhiMonic,
    Pidduck,
}

impl From<SeqArg> for SeqKind {
    fn from(s: SeqArg) -> Self {
        match s {
            SeqArg::G => SeqKind::G,
            SeqArg::GMonic => SeqKind::GMonic,
            SeqArg::Phi => SeqKind::Phi,
            SeqArg::PhiMonic => SeqKind::PhiMonic,
            SeqArg::Pidduck => SeqKind::Pidduck,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Exact,
    Numeric,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ElementaryArg {
    ArctanHalf,
    Artanh,
    TanHalf,
    LogRatio,
}

impl From<ElementaryArg> for SeriesKind {
    fn from(k: ElementaryArg) -> Self {
        match k {
            ElementaryArg::ArctanHalf => SeriesKind::ArctanHalf,
            ElementaryArg::Artanh => SeriesKind::Artanh,
            ElementaryArg::TanHalf => SeriesKind::TanHalf,
            ElementaryArg::LogRatio => SeriesKind::LogRatio,
        }
    }
}

#[derive(Debug, Args)]
struct FormatArg {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact coefficient table of a sequence
    Coeffs {
        #[arg(long, value_enum)]
        seq: SeqArg,
        /// single row
        #[arg(long, conflicts_with = "max_n", required_unless_present = "max_n")]
        n: Option<usize>,
        /// rows 0..=max-n
        #[arg(long)]
        max_n: Option<usize>,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Evaluate a sequence member; rational x ("p/q") is exact, decimal x is double
    Eval {
        #[arg(long, value_enum)]
        seq: SeqArg,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Zeros of the monic reduced polynomial by Sturm bisection
    Zeros {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Orthogonality matrix of the reduced polynomials by quadrature
    Quad {
        #[arg(long, default_value_t = suite::DEFAULT_NUMERIC_MAX_N)]
        max_n: usize,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Fourier transform of φ̂_n·w: closed form vs quadrature
    Ft {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<f64>,
        #[arg(long, default_value_t = suite::FT_MAX_N)]
        max_n: usize,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Moments ∫ t^n/sinh t: zeta closed form vs quadrature
    Moments {
        #[arg(long, default_value_t = suite::MOMENT_MAX_N)]
        max_n: usize,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Run verification suites
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// defaults to 20 for the exact suite and 12 for the numeric suite
        #[arg(long)]
        max_n: Option<usize>,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Adjudicate the identities with suspected errata
    Audit {
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Generating-function or elementary series coefficients
    Series {
        #[arg(long, value_enum, conflicts_with = "kind", required_unless_present = "kind")]
        seq: Option<SeqArg>,
        #[arg(long, value_enum)]
        kind: Option<ElementaryArg>,
        #[arg(long, default_value_t = 8)]
        order: usize,
        #[command(flatten)]
        fmt: FormatArg,
    },
}

/// The `verify`/`audit` payload.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub tool_version: String,
    pub command: Vec<String>,
    pub reports: Vec<CheckReport>,
    pub summary: Summary,
}

impl RunReport {
    pub fn new(command: Vec<String>, reports: Vec<CheckReport>) -> Self {
        let summary = Summary::of(&reports);
        Self { tool_version: TOOL_VERSION.to_string(), command, reports, summary }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Self { stdout: String::new(), stderr: msg.into(), code: EXIT_USAGE }
    }
}

/// Formats a double with 17 significant digits.
pub fn sig17(v: f64) -> String {
    format!("{v:.16e}")
}

fn to_json(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let escaped: Vec<String> = row
            .into_iter()
            .map(|f| {
                if f.contains([',', '"', '\n']) {
                    format!("\"{}\"", f.replace('"', "\"\""))
                } else {
                    f
                }
            })
            .collect();
        out.push_str(&escaped.join(","));
        out.push('\n');
    }
    out
}

/// Parses and executes `argv` (program name first).
pub fn run<S: AsRef<str>>(argv: &[S]) -> Output {
    let args: Vec<String> = argv.iter().map(|s| s.as_ref().to_string()).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Output::ok(e.to_string())
                }
                _ => Output::usage(e.to_string()),
            }
        }
    };
    let echo = args.iter().skip(1).cloned().collect();
    match dispatch(cli.command, echo) {
        Ok(out) => out,
        Err(Failure::Usage(msg)) => Output::usage(format!("error: {msg}\n")),
        Err(Failure::Runtime(msg)) => Output {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: EXIT_CHECK_FAILURE,
        },
    }
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn check_range(name: &str, v: usize, lo: usize, hi: usize) -> Result<(), Failure> {
    if v < lo || v > hi {
        return Err(Failure::Usage(format!("--{name} must be in {lo}..={hi}, got {v}")));
    }
    Ok(())
}

fn check_positive(name: &str, v: f64) -> Result<(), Failure> {
    if !(v > 0.0 && v.is_finite()) {
        return Err(Failure::Usage(format!("--{name} must be positive and finite, got {v}")));
    }
    Ok(())
}

fn dispatch(cmd: Command, echo: Vec<String>) -> Result<Output, Failure> {
    match cmd {
        Command::Coeffs { seq, n, max_n, fmt } => {
            let kind: SeqKind = seq.into();
            let top = n.or(max_n).unwrap_or(0);
            check_range(if n.is_some() { "n" } else { "max-n" }, top, 0, MAX_EXACT_N)?;
            let table = generate(kind, top);
            let rows = match n {
                Some(n) => vec![table.row(n)],
                None => table.rows(),
            };
            Ok(Output::ok(match fmt.format {
                Format::Json if n.is_some() => to_json(&rows[0]),
                Format::Json => to_json(&rows),
                Format::Csv => csv(
                    &["kind", "n", "k", "coeff"],
                    rows.iter().flat_map(|r| {
                        r.coeffs.coeffs().iter().enumerate().map(move |(k, c)| {
                            vec![r.kind.tag().to_string(), r.n.to_string(), k.to_string(), format_rational(c)]
                        })
                    }),
                ),
            }))
        }
        Command::Eval { seq, n, x, fmt } => {
            check_range("n", n, 0, MAX_EXACT_N)?;
            let kind: SeqKind = seq.into();
            let p = generate(kind, n).polys.pop().unwrap_or_else(Poly::zero);
            let (value, exact) = match parse_rational(&x) {
                Ok(q) => (format_rational(&p.eval(&q)), true),
                Err(_) => {
                    let xf: f64 = x
                        .trim()
                        .parse()
                        .map_err(|_| Failure::Usage(format!("--x: cannot parse {x:?}")))?;
                    if !xf.is_finite() {
                        return Err(Failure::Usage("--x must be finite".into()));
                    }
                    (sig17(p.eval_f64(xf)), false)
                }
            };
            Ok(Output::ok(match fmt.format {
                Format::Json => to_json(&json!({"kind": kind, "n": n, "x": x, "value": value, "exact": exact})),
                Format::Csv => csv(&["kind", "n", "x", "value", "exact"], [vec![
                    kind.tag().into(),
                    n.to_string(),
                    x.clone(),
                    value,
                    exact.to_string(),
                ]]),
            }))
        }
        Command::Zeros { n, tol, fmt } => {
            check_range("n", n, 1, 500)?;
            check_positive("tol", tol)?;
            let z = zeros(n, tol)?;
            let bound = zero_bound(n);
            let within = n == 1 || z.iter().all(|v| v.abs() < bound);
            let body = match fmt.format {
                Format::Json => to_json(&json!({"n": n, "tol": tol, "zeros": z, "bound": bound, "within_bound": within})),
                Format::Csv => csv(&["n", "k", "zero"], z.iter().enumerate().map(|(k, v)| vec![n.to_string(), (k + 1).to_string(), sig17(*v)])),
            };
            if !within {
                return Ok(Output { stdout: body, stderr: "zero bound violated\n".into(), code: EXIT_CHECK_FAILURE });
            }
            Ok(Output::ok(body))
        }
        Command::Quad { max_n, tol, fmt } => {
            check_range("max-n", max_n, 0, MAX_NUMERIC_N)?;
            check_positive("tol", tol)?;
            let cfg = QuadConfig::for_weighted_degree(2 * max_n, tol);
            let m = orthogonality_matrix(max_n, &cfg)?;
            let mut dev = 0.0f64;
            for (i, row) in m.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    let target = if i == j { 2.0 / (i as f64 + 1.0) } else { 0.0 };
                    dev = dev.max((v - target).abs());
                }
            }
            Ok(Output::ok(match fmt.format {
                Format::Json => to_json(&json!({"max_n": max_n, "truncation": cfg.truncation, "matrix": m, "max_deviation": dev})),
                Format::Csv => csv(
                    &(0..=max_n).map(|j| format!("m{j}")).collect::<Vec<_>>().iter().map(String::as_str).collect::<Vec<_>>(),
                    m.iter().map(|row| row.iter().map(|v| sig17(*v)).collect()),
                ),
            }))
        }
        Command::Ft { n, s, max_n, fmt } => {
            let ns: Vec<usize> = match n {
                Some(n) => vec![n],
                None => (0..=max_n).collect(),
            };
            let top = *ns.last().unwrap_or(&0);
            check_range("n", top, 0, 20)?;
            let ss: Vec<f64> = match s {
                Some(s) if s.is_finite() => vec![s],
                Some(_) => return Err(Failure::Usage("--s must be finite".into())),
                None => suite::FT_S_VALUES.to_vec(),
            };
            let cfg = QuadConfig::for_weighted_degree(top, 1e-12);
            let mut rows = Vec::new();
            for &n in &ns {
                for &s in &ss {
                    let closed = ft_closed(n, s).value;
                    let numeric = ft_numeric(n, s, &cfg)?.value;
                    rows.push((n, s, closed, numeric));
                }
            }
            Ok(Output::ok(match fmt.format {
                Format::Json => to_json(&rows.iter().map(|&(n, s, c, q)| {
                    json!({"n": n, "s": s, "phase": format!("i^{}", n % 4), "closed": c, "numeric": q, "abs_deviation": (c - q).abs()})
                }).collect::<Vec<_>>()),
                Format::Csv => csv(&["n", "s", "phase", "closed", "numeric", "abs_deviation"], rows.iter().map(|&(n, s, c, q)| {
                    vec![n.to_string(), sig17(s), format!("i^{}", n % 4), sig17(c), sig17(q), sig17((c - q).abs())]
                })),
            }))
        }
        Command::Moments { max_n, fmt } => {
            check_range("max-n", max_n, 1, 30)?;
            let mut rows = Vec::new();
            for n in 1..=max_n {
                let m = moment(n, &QuadConfig::for_envelope(n, 1.0, 1e-12))?;
                let closed = m.closed_value()?;
                rows.push((n, format_rational(&m.closed.rational_part), m.closed.pi_power, closed, m.numeric));
            }
            Ok(Output::ok(match fmt.format {
                Format::Json => to_json(&rows.iter().map(|(n, r, p, c, q)| {
                    json!({"n": n, "closed_rational": r, "pi_power": p, "closed": c, "numeric": q, "abs_deviation": (c - q).abs(),
                        "rel_deviation": (*c != 0.0).then(|| crate::mlpseq::rel_dev(*c, *q))})
                }).collect::<Vec<_>>()),
                Format::Csv => csv(&["n", "closed_rational", "pi_power", "closed", "numeric"], rows.iter().map(|(n, r, p, c, q)| {
                    vec![n.to_string(), r.clone(), p.to_string(), sig17(*c), sig17(*q)]
                })),
            }))
        }
        Command::Verify { suite: which, max_n, fmt } => {
            if let Some(m) = max_n {
                check_range("max-n", m, 1, MAX_NUMERIC_N)?;
            }
            let mut reports = Vec::new();
            if matches!(which, Suite::Exact | Suite::All) {
                reports.extend(suite::exact_suite(max_n.unwrap_or(suite::DEFAULT_EXACT_MAX_N)));
            }
            if matches!(which, Suite::Numeric | Suite::All) {
                reports.extend(suite::numeric_suite(max_n.unwrap_or(suite::DEFAULT_NUMERIC_MAX_N)));
            }
            Ok(report_output(RunReport::new(echo, reports), fmt.format))
        }
        Command::Audit { fmt } => Ok(report_output(RunReport::new(echo, erratum_audit()), fmt.format)),
        Command::Series { seq, kind, order, fmt } => {
            check_range("order", order, 1, 40)?;
            let (name, series): (String, PolySeries) = match (seq, kind) {
                (_, Some(k)) => {
                    let k: SeriesKind = k.into();
                    (k.name().to_string(), series_elementary(k, order)?)
                }
                (Some(s), None) => {
                    let kind: SeqKind = s.into();
                    let series = match kind {
                        SeqKind::G => gf_g(order)?,
                        SeqKind::Phi => gf_phi(order)?,
                        SeqKind::PhiMonic => egf_phi_monic(order)?,
                        other => {
                            return Err(Failure::Usage(format!(
                                "no generating function table for {}", other.cli_name()
                            )))
                        }
                    };
                    (kind.tag().to_string(), series)
                }
                (None, None) => return Err(Failure::Usage("one of --seq or --kind is required".into())),
            };
            Ok(Output::ok(match fmt.format {
                Format::Json => to_json(&json!({"series": name, "order": order, "coeffs": series.coeffs()})),
                Format::Csv => csv(&["series", "t_power", "x_power", "coeff"], series.coeffs().iter().enumerate().flat_map(|(j, p)| {
                    let name = name.clone();
                    p.coeffs().iter().enumerate().map(move |(k, c)| vec![name.clone(), j.to_string(), k.to_string(), format_rational(c)])
                })),
            }))
        }
    }
}

fn report_output(report: RunReport, format: Format) -> Output {
    let code = if report.summary.fail == 0 { EXIT_OK } else { EXIT_CHECK_FAILURE };
    let stdout = match format {
        Format::Json => to_json(&report),
        Format::Csv => csv(
            &["identity", "n_lo", "n_hi", "status", "max_deviation", "note"],
            report.reports.iter().map(|r| {
                vec![
                    r.identity.clone(),
                    r.n_range[0].to_string(),
                    r.n_range[1].to_string(),
                    serde_json::to_value(r.status).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default(),
                    r.max_deviation.map(sig17).unwrap_or_default(),
                    r.note.clone(),
                ]
            }),
        ),
    };
    let stderr = report
        .reports
        .iter()
        .filter(|r| r.status == crate::report::Status::Fail)
        .map(|r| format!("FAIL {}: {}\n", r.identity, r.note))
        .collect();
    Output { stdout, stderr, code }
}
