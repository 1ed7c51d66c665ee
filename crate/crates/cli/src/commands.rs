use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;
use tropweil::p1oracle::{weil_product, weil_symbols};
use tropweil::pairing::tw_pairing_with_witnesses;
use tropweil::{
    is_principal, reciprocity_sides, solve_divisor, weil_symbol, FunctionError, PLFunction, PairingError,
    PotentialError, Rat, SplitRationalFunction, TropicalCurve, VertexId,
};

use crate::docs::{self, DocError};
use crate::dot::export_dot;
use crate::expr::{compile_on, parse_expression, ExprError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Precondition(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Precondition(_) => 2,
            CliError::Inconsistent(_) => 3,
        }
    }
}

impl From<DocError> for CliError {
    fn from(e: DocError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<ExprError> for CliError {
    fn from(e: ExprError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<FunctionError> for CliError {
    fn from(e: FunctionError) -> Self {
        match e {
            FunctionError::CurveMismatch => CliError::Precondition(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<PotentialError> for CliError {
    fn from(e: PotentialError) -> Self {
        match e {
            PotentialError::NonzeroDegree(_) | PotentialError::NotIntegral | PotentialError::BadBasepoint(_) => {
                CliError::Precondition(e.to_string())
            }
            PotentialError::Function(f) => f.into(),
            _ => CliError::Inconsistent(e.to_string()),
        }
    }
}

impl From<PairingError> for CliError {
    fn from(e: PairingError) -> Self {
        match e {
            PairingError::Potential(p) => p.into(),
            PairingError::Function(f) => f.into(),
            PairingError::SamePoint => CliError::Precondition(e.to_string()),
            PairingError::Inconsistent { .. } => CliError::Inconsistent(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "tropweil", version, about = "Divisors, Weil symbols and the Weil pairing on tropical curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Functions come from `--function` documents on `--curve`, or from
/// `--expr` on the segment of length `--length`.
#[derive(Debug, Args)]
struct Source {
    #[arg(long, value_name = "FILE")]
    curve: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    function: Vec<PathBuf>,
    #[arg(long, value_name = "TEXT", allow_hyphen_values = true)]
    expr: Vec<String>,
    #[arg(long, value_name = "RAT")]
    length: Option<Rat>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Order of a function at a point.
    Order {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "LITERAL")]
        point: String,
    },
    /// Divisor of a function, as a divisor document.
    Divisor {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Weil symbol [f, g] at a point.
    Symbol {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "LITERAL")]
        point: String,
    },
    /// Both sides of the reciprocity law for two functions.
    Reciprocity {
        #[command(flatten)]
        source: Source,
    },
    /// A function whose divisor is the given degree-zero divisor.
    Solve {
        #[arg(long, value_name = "FILE")]
        curve: PathBuf,
        #[arg(long, value_name = "FILE")]
        divisor: PathBuf,
        #[arg(long, value_name = "VERTEX")]
        basepoint: Option<String>,
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Weil pairing of two degree-zero divisors.
    Pair {
        #[arg(long, value_name = "FILE")]
        curve: PathBuf,
        #[arg(long, value_name = "FILE", num_args = 1, required = true)]
        divisor: Vec<PathBuf>,
        #[arg(long, value_name = "VERTEX")]
        basepoint: Option<String>,
    },
    /// Classical Weil symbols of two split rational functions on the projective line.
    Classical {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Graphviz description of a curve, optionally labelled by a function.
    ExportDot {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}

fn load_curve(path: &Path) -> Result<Arc<TropicalCurve>, CliError> {
    Ok(Arc::new(docs::parse_curve(&read(path)?)?))
}

impl Source {
    fn curve(&self) -> Result<Arc<TropicalCurve>, CliError> {
        match (&self.curve, &self.length) {
            (Some(_), Some(_)) => Err(CliError::Usage("give either --curve or --length, not both".into())),
            (Some(path), None) => load_curve(path),
            (None, Some(len)) => {
                if !len.is_positive() {
                    return Err(CliError::Usage(format!("--length must be positive, got {len}")));
                }
                Ok(Arc::new(TropicalCurve::segment(len.clone()).map_err(FunctionError::from)?))
            }
            (None, None) => Err(CliError::Usage("missing --curve or --length".into())),
        }
    }

    fn functions(&self, curve: &Arc<TropicalCurve>) -> Result<Vec<PLFunction>, CliError> {
        if !self.expr.is_empty() && self.length.is_none() {
            return Err(CliError::Usage("--expr needs --length".into()));
        }
        let mut out = Vec::new();
        for path in &self.function {
            out.push(docs::parse_function(curve, &read(path)?)?);
        }
        for text in &self.expr {
            out.push(compile_on(&parse_expression(text)?, curve)?);
        }
        Ok(out)
    }

    fn exactly<const N: usize>(&self, what: &str) -> Result<(Arc<TropicalCurve>, [PLFunction; N]), CliError> {
        let curve = self.curve()?;
        let fs = self.functions(&curve)?;
        let got = fs.len();
        let fs: [PLFunction; N] = fs
            .try_into()
            .map_err(|_| CliError::Usage(format!("{what} needs {N} function(s), got {got}")))?;
        Ok((curve, fs))
    }
}

fn basepoint(curve: &TropicalCurve, name: &Option<String>) -> Result<Option<VertexId>, CliError> {
    name.as_ref()
        .map(|n| {
            curve
                .vertex(n)
                .map_err(|_| CliError::Precondition(format!("basepoint {n:?} is not a vertex of the curve")))
        })
        .transpose()
}

/// Writes `text` to `output` if given; otherwise returns it for stdout.
fn emit(output: &Option<PathBuf>, text: String) -> Result<String, CliError> {
    match output {
        Some(path) => {
            write(path, &text)?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn execute(command: Command) -> Result<String, CliError> {
    match command {
        Command::Order { source, point } => {
            let (curve, [f]) = source.exactly::<1>("order")?;
            let p = docs::parse_point_literal(&curve, &point)?;
            Ok(format!("{}\n", f.order(&p)?))
        }
        Command::Divisor { source, output } => {
            let (_, [f]) = source.exactly::<1>("divisor")?;
            let d = f.divisor();
            let text = emit(&output, docs::to_json(&docs::divisor_to_doc(&d)))?;
            Ok(if output.is_some() { format!("{d}\n") } else { text })
        }
        Command::Symbol { source, point } => {
            let (curve, [f, g]) = source.exactly::<2>("symbol")?;
            let p = docs::parse_point_literal(&curve, &point)?;
            Ok(format!("{}\n", weil_symbol(&f, &g, &p)?))
        }
        Command::Reciprocity { source } => {
            let (_, [f, g]) = source.exactly::<2>("reciprocity")?;
            let (lhs, rhs) = reciprocity_sides(&f, &g)?;
            let report = format!("lhs = {lhs}\nrhs = {rhs}\n");
            if lhs == rhs {
                Ok(format!("{report}verdict: equal\n"))
            } else {
                Err(CliError::Inconsistent(format!("{report}verdict: not equal")))
            }
        }
        Command::Solve {
            curve,
            divisor,
            basepoint: base,
            output,
        } => {
            let curve = load_curve(&curve)?;
            let d = docs::parse_divisor(&curve, &read(&divisor)?)?;
            let f = solve_divisor(&d, basepoint(&curve, &base)?)?;
            let principal = if d.is_integral() { is_principal(&d)? } else { false };
            let mut report = emit(&output, docs::to_json(&docs::function_to_doc(&f)))?;
            if output.is_some() {
                for e in curve.edge_ids() {
                    let slopes: Vec<String> = f.slopes(e).iter().map(ToString::to_string).collect();
                    report.push_str(&format!("{}: slopes {}\n", curve.edge(e).name, slopes.join(", ")));
                }
            }
            report.push_str(&format!("principal: {principal}\n"));
            Ok(report)
        }
        Command::Pair {
            curve,
            divisor,
            basepoint: base,
        } => {
            let curve = load_curve(&curve)?;
            let [a, b]: [PathBuf; 2] = divisor
                .try_into()
                .map_err(|v: Vec<PathBuf>| CliError::Usage(format!("pair needs 2 divisors, got {}", v.len())))?;
            let d1 = docs::parse_divisor(&curve, &read(&a)?)?;
            let d2 = docs::parse_divisor(&curve, &read(&b)?)?;
            let p = tw_pairing_with_witnesses(&d1, &d2, basepoint(&curve, &base)?)?;
            Ok(format!("{}\n", p.value))
        }
        Command::Classical { f, g } => {
            let parse = |s: &str| {
                s.parse::<SplitRationalFunction>()
                    .map_err(|e| CliError::Usage(e.to_string()))
            };
            let (f, g) = (parse(&f)?, parse(&g)?);
            let mut report = String::new();
            for (p, s) in weil_symbols(&f, &g) {
                report.push_str(&format!("symbol at {p} = {s}\n"));
            }
            let product = weil_product(&f, &g);
            report.push_str(&format!("product = {product}\n"));
            if product == Rat::one() {
                Ok(report)
            } else {
                Err(CliError::Inconsistent(report))
            }
        }
        Command::ExportDot { source, output } => {
            let curve = source.curve()?;
            let fs = source.functions(&curve)?;
            if fs.len() > 1 {
                return Err(CliError::Usage(format!("export-dot takes at most one function, got {}", fs.len())));
            }
            emit(&output, export_dot(&curve, fs.first()))
        }
    }
}

/// Runs one command line (program name first) and returns the exit status
/// with the report: the stdout text on success, the diagnostic otherwise.
pub fn run_command<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match execute(cli.command) {
        Ok(report) => (0, report),
        Err(e) => (e.exit_code(), format!("error: {e}\n")),
    }
}
