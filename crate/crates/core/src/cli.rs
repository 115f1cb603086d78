//! Command-line front end.
//!
//! `parse_args` turns argv into a validated [`CliRequest`]; `run` executes it
//! and returns the exit code together with the emitted text. Exit codes:
//! 0 success, 1 verification found a nonzero residual, 2 usage or parse
//! error, 3 a mathematical precondition failed.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::Error;
use crate::field::{Field, FieldElement, FieldTag, Rational, RationalFunction};
use crate::iteration::{iterate_coefficient_polynomial, iterate_continuous, iterate_integer};
use crate::poincare::{
    solve_poincare_nonrecursive, solve_poincare_recursive, solve_schroder, verify_poincare,
    GChoice, PoincareInstance,
};
use crate::qdiff::QDiffOperator;
use crate::series::{Polynomial, PolynomialDoc, PowerSeries, SeriesDoc};

pub const MAX_N_VAR: &str = "POINCARE_MAX_N";
pub const DEFAULT_MAX_N: usize = 256;

#[derive(Debug, Parser)]
#[command(
    name = "poincare",
    about = "Exact Poincaré/Schröder solver and power series iterator"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Solve f(qx) = p(f(x)) with f_1 = 1
    Solve {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Method::Recursive)]
        method: Method,
        /// Order-j polynomials g_1..g_N for the nonrecursive method, `;`-separated coefficient lists
        #[arg(long, allow_hyphen_values = true)]
        g: Option<String>,
    },
    /// Solve q σ = σ(p(x)) with σ_1 = 1
    Schroder {
        #[command(flatten)]
        common: Common,
    },
    /// Integer iterate p^n (n may be negative)
    Iterate {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        n: String,
    },
    /// Continuous iterate p^t of a map tangent to the identity
    FracIterate {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
    /// Apply D_{g;q} to the series p
    Qdiff {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
    },
    /// Check f(qx) = p(f(x)) through degree N; solves for f when --f is absent
    Verify {
        #[command(flatten)]
        common: Common,
        /// Coefficient list or a JSON series document
        #[arg(long, allow_hyphen_values = true)]
        f: Option<String>,
    },
    /// Polynomial in n giving the j-th coefficient of p^n
    Interp {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        j: usize,
    },
}

#[derive(Debug, Args)]
struct Common {
    /// Coefficients of p, lowest degree first, e.g. 0,2,1 for 2x+x^2
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long = "N")]
    precision: Option<usize>,
    #[arg(long, value_enum, default_value_t = FieldArg::Q)]
    field: FieldArg,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FieldArg {
    #[value(name = "Q")]
    Q,
    #[value(name = "Qq")]
    Qq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Recursive,
    Nonrecursive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Solve {
        method: Method,
        g: Option<Vec<Vec<FieldElement>>>,
    },
    Schroder,
    Iterate {
        n: i64,
    },
    FracIterate {
        t: FieldElement,
    },
    Qdiff {
        g: Vec<FieldElement>,
    },
    Verify {
        f: Option<FInput>,
    },
    Interp {
        j: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Solve { .. } => "solve",
            Command::Schroder => "schroder",
            Command::Iterate { .. } => "iterate",
            Command::FracIterate { .. } => "frac-iterate",
            Command::Qdiff { .. } => "qdiff",
            Command::Verify { .. } => "verify",
            Command::Interp { .. } => "interp",
        }
    }
}

/// Candidate solution given to `verify`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FInput {
    Coeffs(Vec<FieldElement>),
    Doc(SeriesDoc),
}

/// A validated command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliRequest {
    pub command: Command,
    pub field: FieldTag,
    /// Coefficients of `p`, lowest degree first; `p_0 = 0`.
    pub p: Vec<FieldElement>,
    pub q: Option<FieldElement>,
    /// `N`; for `interp` this is the target degree `j`.
    pub precision: usize,
    pub output: OutputFormat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// `--help` / `--version` text, exit 0.
    Help(String),
    Usage(String),
    Parse(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Help(_) => 0,
            CliError::Usage(_) | CliError::Parse(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Help(m) | CliError::Usage(m) | CliError::Parse(m) => m,
        }
    }
}

/// Result of running a request.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn max_precision() -> Result<usize, CliError> {
    match std::env::var(MAX_N_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "{MAX_N_VAR} must be a nonnegative integer, got `{v}`"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn parse_list(flag: &str, tag: FieldTag, s: &str) -> Result<Vec<FieldElement>, CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.iter().any(|p| p.is_empty()) {
        return Err(CliError::Parse(format!(
            "{flag}: empty coefficient in `{s}`"
        )));
    }
    parts
        .iter()
        .map(|p| FieldElement::parse(tag, p).map_err(|e| CliError::Parse(format!("{flag}: {e}"))))
        .collect()
}

fn parse_one(flag: &str, tag: FieldTag, s: &str) -> Result<FieldElement, CliError> {
    FieldElement::parse(tag, s).map_err(|e| CliError::Parse(format!("{flag}: {e}")))
}

/// Parses and validates argv (including the program name).
pub fn parse_args<I, S>(argv: I) -> Result<CliRequest, CliError>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| {
        use clap::error::ErrorKind;
        match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliError::Help(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    })?;

    let (common, partial) = match cli.command {
        Cmd::Solve { common, method, g } => (common, Partial::Solve(method, g)),
        Cmd::Schroder { common } => (common, Partial::Schroder),
        Cmd::Iterate { common, n } => (common, Partial::Iterate(n)),
        Cmd::FracIterate { common, t } => (common, Partial::FracIterate(t)),
        Cmd::Qdiff { common, g } => (common, Partial::Qdiff(g)),
        Cmd::Verify { common, f } => (common, Partial::Verify(f)),
        Cmd::Interp { common, j } => (common, Partial::Interp(j)),
    };

    let field = match common.field {
        FieldArg::Q => FieldTag::Q,
        FieldArg::Qq => FieldTag::Qq,
    };
    let p = parse_list("--p", field, &common.p)?;
    if !p[0].is_zero() {
        return Err(CliError::Usage(format!(
            "--p: constant term must be 0, got {}",
            p[0]
        )));
    }
    let q = common
        .q
        .as_deref()
        .map(|s| parse_one("--q", field, s))
        .transpose()?;

    let precision = match (&partial, common.precision) {
        (Partial::Interp(j), _) => *j,
        (_, Some(n)) => n,
        (_, None) => return Err(CliError::Usage("--N: precision is required".into())),
    };
    if !matches!(partial, Partial::Interp(_)) && precision < 1 {
        return Err(CliError::Usage("--N: precision must be at least 1".into()));
    }
    let cap = max_precision()?;
    if precision > cap {
        return Err(CliError::Usage(format!(
            "--N: precision {precision} exceeds {MAX_N_VAR} = {cap}"
        )));
    }

    let command = match partial {
        Partial::Solve(method, g) => {
            let g = g
                .map(|s| {
                    s.split(';')
                        .map(|poly| parse_list("--g", field, poly))
                        .collect::<Result<Vec<_>, _>>()
                })
                .transpose()?;
            let method = if g.is_some() {
                Method::Nonrecursive
            } else {
                method
            };
            Command::Solve { method, g }
        }
        Partial::Schroder => Command::Schroder,
        Partial::Iterate(n) => Command::Iterate {
            n: n.trim()
                .parse()
                .map_err(|_| CliError::Parse(format!("--n: expected an integer, got `{n}`")))?,
        },
        Partial::FracIterate(t) => Command::FracIterate {
            t: parse_one("--t", field, &t)?,
        },
        Partial::Qdiff(g) => Command::Qdiff {
            g: parse_list("--g", field, &g)?,
        },
        Partial::Verify(f) => Command::Verify {
            f: f.map(|s| {
                let t = s.trim();
                if t.starts_with('{') {
                    serde_json::from_str(t)
                        .map(FInput::Doc)
                        .map_err(|e| CliError::Parse(format!("--f: {e}")))
                } else {
                    parse_list("--f", field, t).map(FInput::Coeffs)
                }
            })
            .transpose()?,
        },
        Partial::Interp(j) => Command::Interp { j },
    };

    Ok(CliRequest {
        command,
        field,
        p,
        q,
        precision,
        output: common.output,
    })
}

enum Partial {
    Solve(Method, Option<String>),
    Schroder,
    Iterate(String),
    FracIterate(String),
    Qdiff(String),
    Verify(Option<String>),
    Interp(usize),
}

/// Conversion out of the tagged representation.
trait CliField: Field {
    fn take(e: &FieldElement) -> Result<Self, Error>;
}

impl CliField for Rational {
    fn take(e: &FieldElement) -> Result<Self, Error> {
        match e {
            FieldElement::Rational(r) => Ok(r.clone()),
            other => Err(mismatch(FieldTag::Q, other)),
        }
    }
}

impl CliField for RationalFunction {
    fn take(e: &FieldElement) -> Result<Self, Error> {
        match e {
            FieldElement::RationalFunction(r) => Ok(r.clone()),
            other => Err(mismatch(FieldTag::Qq, other)),
        }
    }
}

fn mismatch(expected: FieldTag, found: &FieldElement) -> Error {
    Error::FieldMismatch {
        expected: expected.to_string(),
        found: found.tag().to_string(),
    }
}

fn take_all<F: CliField>(es: &[FieldElement]) -> Result<Vec<F>, Error> {
    es.iter().map(F::take).collect()
}

/// Executes a validated request.
pub fn run(req: &CliRequest) -> Outcome {
    let result = match req.field {
        FieldTag::Q => run_in::<Rational>(req),
        FieldTag::Qq => run_in::<RationalFunction>(req),
    };
    match result {
        Ok(o) => o,
        Err(e) => Outcome {
            code: 3,
            stdout: String::new(),
            stderr: format!("error: {}\n", describe(&e)),
        },
    }
}

fn describe(e: &Error) -> String {
    match e {
        Error::RootOfUnityBase(_) | Error::RootOfUnityDivisor(_) => {
            format!("q is a root of unity ({e})")
        }
        other => other.to_string(),
    }
}

/// Parses argv, runs, and returns the outcome; usage problems map to exit 2.
pub fn main_with_args<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match parse_args(argv) {
        Ok(req) => run(&req),
        Err(CliError::Help(text)) => Outcome {
            code: 0,
            stdout: text,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("{}\n", e.message().trim_end()),
        },
    }
}

fn ok(stdout: String) -> Outcome {
    Outcome {
        code: 0,
        stdout,
        stderr: String::new(),
    }
}

fn run_in<F: CliField>(req: &CliRequest) -> Result<Outcome, Error> {
    let p = Polynomial::new(take_all::<F>(&req.p)?);
    let q = match &req.q {
        Some(q) => Some(F::take(q)?),
        None => None,
    };
    let n = req.precision;
    let instance = || match &q {
        Some(q) => PoincareInstance::with_q(p.clone(), q.clone(), n),
        None => PoincareInstance::new(p.clone(), n),
    };

    match &req.command {
        Command::Solve { method, g } => {
            let inst = instance()?;
            let f = match (method, g) {
                (Method::Recursive, _) => solve_poincare_recursive(&inst)?,
                (Method::Nonrecursive, None) => {
                    solve_poincare_nonrecursive(&inst, &GChoice::Canonical)?
                }
                (Method::Nonrecursive, Some(gs)) => {
                    let gs = gs
                        .iter()
                        .map(|g| take_all::<F>(g).map(Polynomial::new))
                        .collect::<Result<_, _>>()?;
                    solve_poincare_nonrecursive(&inst, &GChoice::Explicit(gs))?
                }
            };
            Ok(ok(emit_series(&f, req.output)))
        }
        Command::Schroder => {
            let sigma = solve_schroder(&instance()?)?;
            Ok(ok(emit_series(&sigma, req.output)))
        }
        Command::Iterate { n: k } => Ok(ok(emit_series(&iterate_integer(&p, *k, n)?, req.output))),
        Command::FracIterate { t } => {
            let s = iterate_continuous(&p, &F::take(t)?, n)?;
            Ok(ok(emit_series(&s, req.output)))
        }
        Command::Qdiff { g } => {
            let g = Polynomial::new(take_all::<F>(g)?);
            let base = q.clone().unwrap_or_else(|| p.coeff(1));
            let d = QDiffOperator::new(g, base, n)?;
            let out = d.apply(&PowerSeries::from_polynomial(&p, n))?;
            let text = match req.output {
                OutputFormat::Text => {
                    format!("order: {}\n{}", d.order(), emit_series(&out, req.output))
                }
                OutputFormat::Json => {
                    let doc = json!({ "order": d.order(), "result": SeriesDoc::from_series(&out) });
                    format!("{doc}\n")
                }
            };
            Ok(ok(text))
        }
        Command::Verify { f } => {
            let inst = instance()?;
            let f = match f {
                None => solve_poincare_recursive(&inst)?,
                Some(FInput::Coeffs(cs)) => PowerSeries::new(take_all::<F>(cs)?),
                Some(FInput::Doc(doc)) => doc.to_series::<F>()?,
            };
            let residual = verify_poincare(&f, &inst)?;
            Ok(emit_verify(
                &residual.direct,
                &residual.equivalent,
                n,
                req.output,
            ))
        }
        Command::Interp { j } => {
            let c = iterate_coefficient_polynomial(&p, *j)?;
            let text = match req.output {
                OutputFormat::Text => {
                    let mut s = String::new();
                    for (l, cl) in c.coeffs().iter().enumerate() {
                        writeln!(s, "{l}: {cl}").expect("write to string");
                    }
                    s
                }
                OutputFormat::Json => {
                    let doc = json!({ "j": j, "polynomial": PolynomialDoc::from_polynomial(c.as_polynomial()) });
                    format!("{doc}\n")
                }
            };
            Ok(ok(text))
        }
    }
}

/// Text: one `degree: coefficient` line per coefficient. JSON: a series document.
pub fn emit_series<F: Field>(s: &PowerSeries<F>, output: OutputFormat) -> String {
    match output {
        OutputFormat::Text => {
            let mut out = String::new();
            for (j, c) in s.coeffs().iter().enumerate() {
                writeln!(out, "{j}: {c}").expect("write to string");
            }
            out
        }
        OutputFormat::Json => {
            let doc = serde_json::to_string(&SeriesDoc::from_series(s)).expect("serializable");
            format!("{doc}\n")
        }
    }
}

fn emit_verify<F: Field>(
    direct: &PowerSeries<F>,
    equivalent: &PowerSeries<F>,
    precision: usize,
    output: OutputFormat,
) -> Outcome {
    let failure = direct
        .first_nonzero()
        .map(|(d, c)| ("direct", d, c))
        .or_else(|| {
            equivalent
                .first_nonzero()
                .map(|(d, c)| ("equivalent", d, c))
        });
    let stdout = match (output, failure) {
        (OutputFormat::Text, None) => format!("residual: 0 through degree {precision}\n"),
        (OutputFormat::Text, Some((form, d, c))) => {
            format!("first nonzero residual ({form} form) at degree {d}: {c}\n")
        }
        (OutputFormat::Json, None) => {
            format!("{}\n", json!({ "zero": true, "precision": precision }))
        }
        (OutputFormat::Json, Some((form, d, c))) => format!(
            "{}\n",
            json!({ "zero": false, "precision": precision, "form": form, "degree": d, "coefficient": c.to_string() })
        ),
    };
    Outcome {
        code: if failure.is_some() { 1 } else { 0 },
        stdout,
        stderr: String::new(),
    }
}
