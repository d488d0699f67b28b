//! Command line front end: argument grammar, dispatch and output formatting.

pub mod eval;
pub mod report;
pub mod svg;
pub mod table;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::conic::LandenPair;
use crate::error::{Error, Result};

pub use eval::{default_check_tolerance, evaluate, OPERATIONS};
pub use report::{parse_assignment, Params, RunReport, SCHEMA_VERSION};

#[derive(Debug, Parser)]
#[command(name = "rectify", version, about = "Elliptic integrals, Landen transformations and conic rectification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Arithmetic-geometric mean of two positive numbers, with its iterates.
    #[command(allow_negative_numbers = true)]
    Agm {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        q: f64,
        /// Absolute stopping threshold on |p_n - q_n|.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Legendre elliptic integrals.
    #[command(allow_negative_numbers = true)]
    Ellint {
        kind: EllintKind,
        #[arg(long)]
        k: f64,
        /// Amplitude in radians (F and Einc only).
        #[arg(long)]
        phi: Option<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Hyperbolic excess: tangent minus arc as the point recedes (or at pedal distance p).
    #[command(allow_negative_numbers = true)]
    Excess {
        form: ExcessForm,
        #[command(flatten)]
        conic: ConicArgs,
        /// Number of series terms, 1 to 3.
        #[arg(long)]
        terms: Option<f64>,
        /// Pedal distance of the point (finite form only).
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Residual checks of the transformation identities.
    Check {
        #[command(subcommand)]
        check: CheckCommand,
    },
    /// Arc of the lemniscate of Bernoulli.
    #[command(allow_negative_numbers = true)]
    Lemniscate {
        #[arg(long)]
        radius: f64,
        #[arg(long)]
        json: bool,
    },
    /// Sweep one parameter of any operation and tabulate the results.
    #[command(allow_negative_numbers = true)]
    Table {
        /// Operation name; `--list` shows them all.
        #[arg(long, required_unless_present = "list")]
        op: Option<String>,
        /// Parameter to sweep.
        #[arg(long, required_unless_present = "list")]
        sweep: Option<String>,
        #[arg(long, required_unless_present = "list")]
        from: Option<f64>,
        #[arg(long, required_unless_present = "list")]
        to: Option<f64>,
        #[arg(long, required_unless_present = "list")]
        step: Option<f64>,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Fixed parameter, repeatable: `--param m=2`.
        #[arg(long = "param", value_name = "NAME=VALUE")]
        params: Vec<String>,
        /// Print the operation names and their parameters.
        #[arg(long)]
        list: bool,
    },
    /// Draw the Landen construction as SVG.
    #[command(allow_negative_numbers = true)]
    Construct {
        #[arg(long)]
        m: f64,
        #[arg(long)]
        n: f64,
        #[arg(long)]
        t: f64,
        /// Output file, `-` for standard output.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EllintKind {
    #[value(name = "K")]
    K,
    #[value(name = "E")]
    E,
    #[value(name = "F")]
    F,
    #[value(name = "Einc")]
    Einc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExcessForm {
    Closed,
    Series,
    Landen,
    Finite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

/// A hyperbola by semiaxes or by its Landen pair.
#[derive(Debug, Clone, Args)]
pub struct ConicArgs {
    #[arg(long, requires = "b", conflicts_with_all = ["m", "n"])]
    a: Option<f64>,
    #[arg(long, requires = "a")]
    b: Option<f64>,
    #[arg(long, requires = "n")]
    m: Option<f64>,
    #[arg(long, requires = "m")]
    n: Option<f64>,
}

impl ConicArgs {
    fn params(&self) -> Result<Params> {
        if self.a.is_none() && self.m.is_none() {
            return Err(Error::domain("give the hyperbola as --a/--b or as --m/--n"));
        }
        Ok(Params::new().with_opt("a", self.a).with_opt("b", self.b).with_opt("m", self.m).with_opt("n", self.n))
    }
}

#[derive(Debug, Clone, Args)]
pub struct CheckOpts {
    /// Pass threshold for the residual.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
pub enum CheckCommand {
    /// F(φ, k) against 2/(1+k) F(φ̂, k̂) after one amplitude step.
    #[command(allow_negative_numbers = true)]
    Gleichung {
        #[arg(long)]
        phi: f64,
        #[arg(long)]
        k: f64,
        /// Apply two steps instead of one.
        #[arg(long)]
        chained: bool,
        #[command(flatten)]
        opts: CheckOpts,
    },
    /// E(k) from its descending-modulus expansion against quadrature.
    #[command(allow_negative_numbers = true)]
    Borwein {
        #[arg(long)]
        k: f64,
        #[command(flatten)]
        opts: CheckOpts,
    },
    /// The integral up to x against the transformed integral.
    #[command(allow_negative_numbers = true)]
    AgmInvariance {
        #[arg(long)]
        x: f64,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        q: f64,
        #[arg(long)]
        chained: bool,
        #[command(flatten)]
        opts: CheckOpts,
    },
    /// Hyperbola arc as a sum of tangents and two ellipse arcs.
    #[command(allow_negative_numbers = true)]
    LandenTheorem {
        #[arg(long)]
        m: f64,
        #[arg(long)]
        n: f64,
        #[arg(long)]
        t: f64,
        #[command(flatten)]
        opts: CheckOpts,
    },
    /// Arc difference of two points sharing a tangent length.
    #[command(allow_negative_numbers = true)]
    Fagnano {
        #[arg(long)]
        m: f64,
        #[arg(long)]
        n: f64,
        #[arg(long)]
        t: f64,
        #[command(flatten)]
        opts: CheckOpts,
    },
}

/// Parses `args` (program name first) and executes; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let text = e.render().to_string();
                    let first = text.lines().next().unwrap_or("usage error");
                    let _ = writeln!(err, "{first}");
                    2
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn emit(out: &mut dyn Write, report: &RunReport, json: bool) -> Result<i32> {
    let text = if json { report.to_json() + "\n" } else { report.to_plain() };
    write_all(out, text.as_bytes())?;
    Ok(report.exit_code())
}

fn write_all(out: &mut dyn Write, bytes: &[u8]) -> Result<()> {
    out.write_all(bytes).map_err(|e| Error::domain(format!("cannot write output: {e}")))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Agm { p, q, tol, json } => {
            let params = Params::new().with("p", p).with("q", q).with_opt("tol", tol);
            emit(out, &evaluate("agm", &params)?, json)
        }
        Command::Ellint { kind, k, phi, json } => {
            let op = match kind {
                EllintKind::K => "ellint-K",
                EllintKind::E => "ellint-E",
                EllintKind::F => "ellint-F",
                EllintKind::Einc => "ellint-Einc",
            };
            let incomplete = matches!(kind, EllintKind::F | EllintKind::Einc);
            if incomplete && phi.is_none() {
                return Err(Error::domain(format!("{op} needs --phi")));
            }
            if !incomplete && phi.is_some() {
                return Err(Error::domain(format!("{op} is complete and takes no --phi")));
            }
            emit(out, &evaluate(op, &Params::new().with("k", k).with_opt("phi", phi))?, json)
        }
        Command::Excess { form, conic, terms, p, json } => {
            let op = match form {
                ExcessForm::Closed => "excess-closed",
                ExcessForm::Series => "excess-series",
                ExcessForm::Landen => "excess-landen",
                ExcessForm::Finite => "excess-finite",
            };
            if terms.is_some() && form != ExcessForm::Series {
                return Err(Error::domain("--terms applies to the series form only"));
            }
            match (form, p) {
                (ExcessForm::Finite, None) => return Err(Error::domain("the finite excess needs --p")),
                (ExcessForm::Finite, Some(_)) | (_, None) => {}
                (_, Some(_)) => return Err(Error::domain("--p applies to the finite form only")),
            }
            let params = conic.params()?.with_opt("terms", terms).with_opt("p", p);
            emit(out, &evaluate(op, &params)?, json)
        }
        Command::Check { check } => {
            let (op, params, opts) = match check {
                CheckCommand::Gleichung { phi, k, chained, opts } => (
                    if chained { "gleichung-chained" } else { "gleichung" },
                    Params::new().with("phi", phi).with("k", k),
                    opts,
                ),
                CheckCommand::Borwein { k, opts } => ("borwein", Params::new().with("k", k), opts),
                CheckCommand::AgmInvariance { x, p, q, chained, opts } => (
                    if chained { "agm-invariance-chained" } else { "agm-invariance" },
                    Params::new().with("x", x).with("p", p).with("q", q),
                    opts,
                ),
                CheckCommand::LandenTheorem { m, n, t, opts } => {
                    ("landen-theorem", Params::new().with("m", m).with("n", n).with("t", t), opts)
                }
                CheckCommand::Fagnano { m, n, t, opts } => {
                    ("fagnano", Params::new().with("m", m).with("n", n).with("t", t), opts)
                }
            };
            emit(out, &evaluate(op, &params.with_opt("tol", opts.tol))?, opts.json)
        }
        Command::Lemniscate { radius, json } => {
            emit(out, &evaluate("lemniscate", &Params::new().with("radius", radius))?, json)
        }
        Command::Table { op, sweep, from, to, step, format, params, list } => {
            if list {
                let mut text = String::new();
                for (name, args) in OPERATIONS {
                    text.push_str(&format!("{name:<24} {args}\n"));
                }
                write_all(out, text.as_bytes())?;
                return Ok(0);
            }
            // clap guarantees these when --list is absent
            let (op, sweep) = (op.unwrap_or_default(), sweep.unwrap_or_default());
            let mut fixed = Params::new();
            for s in &params {
                let (name, v) = parse_assignment(s)?;
                if name == sweep {
                    return Err(Error::domain(format!("--param {name} clashes with the swept parameter")));
                }
                fixed.set(&name, v);
            }
            let points = table::sweep_points(from.unwrap_or(0.0), to.unwrap_or(0.0), step.unwrap_or(0.0))?;
            let t = table::run_table(&op, &sweep, &points, &fixed)?;
            let text = match format {
                TableFormat::Csv => t.to_csv()?,
                TableFormat::Json => t.to_json() + "\n",
            };
            write_all(out, text.as_bytes())?;
            Ok(0)
        }
        Command::Construct { m, n, t, out: path } => {
            let pair = LandenPair::new(m, n)?;
            let doc = svg::render(&svg::construct(&pair, t)?);
            if path.as_os_str() == "-" {
                write_all(out, doc.as_bytes())?;
            } else {
                std::fs::write(&path, doc)
                    .map_err(|e| Error::domain(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(0)
        }
    }
}
