//! Command-line front end.
//!
//! Every command renders into a `String` first, so output is byte-stable and
//! the binary only decides where it goes. Exit codes: 0 ok, 1 usage, 2 no
//! positive root, 3 verification failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::QesError;
use crate::model::{self, DimensionlessParams, PhysicalParams};
use crate::recursion::{asymptotic_ratio, coefficients_float, tail_ratio, Parity};
use crate::truncation::{constraint_polynomial, solve_qes, QesSolution, RootValue};
use crate::verify::{self, RadialGrid};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NO_ROOT: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

const DECIMAL_DIGITS: usize = 25;

#[derive(Debug, Parser)]
#[command(
    name = "qes",
    version,
    about = "Closed-form states of the Coulomb plus oscillator radial problem"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; `solve` and `verify` default to text, tables to csv.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(flatten)]
    pub units: Units,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, Default, Args)]
pub struct Units {
    /// Particle mass (default 1).
    #[arg(long, global = true)]
    pub mass: Option<f64>,
    /// Oscillator frequency (default 1).
    #[arg(long, global = true)]
    pub omega: Option<f64>,
    /// Reduced Planck constant (default 1).
    #[arg(long, global = true)]
    pub hbar: Option<f64>,
}

impl Units {
    fn overridden(&self) -> bool {
        self.mass.is_some() || self.omega.is_some() || self.hbar.is_some()
    }

    fn values(&self) -> (f64, f64, f64) {
        (
            self.mass.unwrap_or(1.0),
            self.omega.unwrap_or(1.0),
            self.hbar.unwrap_or(1.0),
        )
    }

    /// `ħω`, validated through the physical model.
    fn energy_unit(&self) -> Result<f64, QesError> {
        let (m, w, h) = self.values();
        Ok(PhysicalParams::new(m, w, 1.0, h)?.energy_unit())
    }
}

#[derive(Debug, Clone, Copy, Args)]
pub struct GridArgs {
    /// Number of grid intervals (rows = points + 1).
    #[arg(long, conflicts_with = "step")]
    pub points: Option<usize>,
    /// Grid step in oscillator units.
    #[arg(long, env = "QES_DEFAULT_GRID_STEP")]
    pub step: Option<f64>,
    #[arg(long, default_value_t = verify::DEFAULT_X_MIN)]
    pub x_min: f64,
    #[arg(long, default_value_t = verify::DEFAULT_X_MAX)]
    pub x_max: f64,
}

impl GridArgs {
    fn grid(&self) -> Result<RadialGrid, QesError> {
        match self.points {
            Some(p) => RadialGrid::with_intervals(self.x_min, self.x_max, p),
            None => RadialGrid::new(self.x_min, self.x_max, self.step.unwrap_or(verify::DEFAULT_STEP)),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Constraint polynomial, admissible β values, ε and exact coefficients.
    Solve {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        l: u32,
    },
    /// Table of all closed-form states with 1 ≤ n ≤ n_max and 0 ≤ l ≤ l_max.
    Spectrum {
        #[arg(long, default_value_t = 3)]
        n_max: u32,
        #[arg(long, default_value_t = 2)]
        l_max: u32,
    },
    /// Normalized u(x) and v on a grid.
    Wavefunction {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        l: u32,
        #[arg(long)]
        root_index: Option<usize>,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Untruncated series coefficients and same-parity ratios.
    Series {
        #[arg(long, default_value_t = 0)]
        l: u32,
        #[arg(long, required_unless_present = "alpha", conflicts_with = "alpha")]
        beta: Option<f64>,
        /// Coulomb strength; β is computed with the unit flags.
        #[arg(long)]
        alpha: Option<f64>,
        /// Dimensionless energy E/(ħω).
        #[arg(long)]
        epsilon: f64,
        #[arg(long, default_value_t = 200)]
        terms: usize,
    },
    /// Compare closed-form ε against Numerov shooting and the matrix method.
    Verify {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        l: u32,
        /// Check a single root; all roots by default.
        #[arg(long)]
        root_index: Option<usize>,
        #[arg(long, default_value_t = 1e-5)]
        tol: f64,
        #[command(flatten)]
        grid: GridArgs,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Usage(String),
    NoRoot(String),
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::NoRoot(_) => EXIT_NO_ROOT,
            CliError::Verification(_) => EXIT_VERIFY_FAILED,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::NoRoot(m) | CliError::Verification(m) => m,
        }
    }
}

impl From<QesError> for CliError {
    fn from(e: QesError) -> Self {
        match e {
            QesError::ZeroPolynomial => CliError::NoRoot(e.to_string()),
            QesError::NoEigenvalueInBracket { .. } | QesError::NoConvergence { .. } => {
                CliError::Verification(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

/// Rendered output plus exit code. A failed verification still has a report.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

/// Float text: shortest round-trip representation.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:?}")
}

fn fmt_rational(r: &BigRational) -> String {
    r.to_string()
}

fn beta_text(sol: &QesSolution) -> String {
    match sol.beta.as_rational() {
        Some(r) => fmt_rational(r),
        None => fmt_f64(sol.beta_f64()),
    }
}

fn coefficient_text(sol: &QesSolution, i: usize) -> String {
    if sol.beta.is_rational() {
        return sol.coefficients[i].to_string();
    }
    let p = &sol.symbolic[i];
    let body = p.poly.display_with("beta");
    match (p.parity, p.poly.degree()) {
        (Parity::Even, _) => body,
        (Parity::Odd, Some(0)) => format!("{body}*rho0"),
        (Parity::Odd, _) => format!("({body})*rho0"),
    }
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    match &cfg.command {
        Command::Solve { n, l } => cmd_solve(*n, *l, cfg.format.unwrap_or(Format::Text), &cfg.units),
        Command::Spectrum { n_max, l_max } => {
            cmd_spectrum(*n_max, *l_max, cfg.format.unwrap_or(Format::Csv), &cfg.units)
        }
        Command::Wavefunction { n, l, root_index, grid } => {
            cmd_wavefunction(*n, *l, *root_index, &grid.grid()?, cfg.format.unwrap_or(Format::Csv))
        }
        Command::Series {
            l,
            beta,
            alpha,
            epsilon,
            terms,
        } => {
            let beta = match (beta, alpha) {
                (Some(b), _) => *b,
                (None, Some(a)) => {
                    let (m, w, h) = cfg.units.values();
                    model::beta(&PhysicalParams::new(m, w, *a, h)?)
                }
                (None, None) => return Err(CliError::Usage("one of --beta or --alpha is required".into())),
            };
            cmd_series(*l, beta, *epsilon, *terms, cfg.format.unwrap_or(Format::Csv))
        }
        Command::Verify {
            n,
            l,
            root_index,
            tol,
            grid,
        } => cmd_verify(
            *n,
            *l,
            *root_index,
            *tol,
            &grid.grid()?,
            cfg.format.unwrap_or(Format::Text),
        ),
    }
}

fn solutions(n: u32, l: u32) -> Result<Vec<QesSolution>, CliError> {
    if n == 0 {
        return Err(CliError::Usage("--n must be >= 1".into()));
    }
    let sols = solve_qes(n, l)?;
    if sols.is_empty() {
        return Err(CliError::NoRoot(format!(
            "no positive beta terminates the series at n={n}, l={l}"
        )));
    }
    Ok(sols)
}

fn pick_root(sols: Vec<QesSolution>, root_index: Option<usize>) -> Result<QesSolution, CliError> {
    let count = sols.len();
    match root_index {
        None if count == 1 => Ok(sols.into_iter().next().unwrap()),
        None => Err(CliError::Usage(format!(
            "{count} roots exist; choose one with --root-index 0..{}",
            count - 1
        ))),
        Some(k) if k < count => Ok(sols.into_iter().nth(k).unwrap()),
        Some(k) => Err(CliError::Usage(format!("root index {k} out of range 0..{}", count - 1))),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

#[derive(Debug, Serialize)]
struct BetaReport {
    exact: Option<String>,
    lower: Option<String>,
    upper: Option<String>,
    decimal: String,
    value: f64,
}

#[derive(Debug, Serialize)]
struct RootReport {
    root_index: usize,
    beta: BetaReport,
    epsilon: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    energy: Option<f64>,
    nodes: usize,
    coefficients: Vec<String>,
}

#[derive(Debug, Serialize)]
struct SolveReport {
    n: u32,
    l: u32,
    epsilon: String,
    /// Integer coefficients, constant term first.
    constraint: Vec<String>,
    constraint_text: String,
    roots: Vec<RootReport>,
}

fn solve_report(n: u32, l: u32, units: &Units) -> Result<SolveReport, CliError> {
    let sols = solutions(n, l)?;
    let cp = constraint_polynomial(n, l);
    let ints = cp.integer_coefficients();
    let int_poly = crate::poly::Poly::new(ints.iter().map(|c| BigRational::from_integer(c.clone())).collect());
    let unit = if units.overridden() {
        Some(units.energy_unit()?)
    } else {
        None
    };
    let roots = sols
        .iter()
        .map(|s| {
            let beta = match &s.beta.value {
                RootValue::Rational(r) => BetaReport {
                    exact: Some(fmt_rational(r)),
                    lower: None,
                    upper: None,
                    decimal: s.beta.to_decimal(DECIMAL_DIGITS),
                    value: s.beta_f64(),
                },
                RootValue::Enclosure { lo, hi } => BetaReport {
                    exact: None,
                    lower: Some(fmt_rational(lo)),
                    upper: Some(fmt_rational(hi)),
                    decimal: s.beta.to_decimal(DECIMAL_DIGITS),
                    value: s.beta_f64(),
                },
            };
            RootReport {
                root_index: s.root_index,
                beta,
                epsilon: fmt_rational(&s.epsilon),
                energy: unit.map(|u| s.epsilon_f64() * u),
                nodes: s.interior_nodes(),
                coefficients: (0..s.coefficients.len()).map(|i| coefficient_text(s, i)).collect(),
            }
        })
        .collect();
    Ok(SolveReport {
        n,
        l,
        epsilon: fmt_rational(&sols[0].epsilon),
        constraint: ints.iter().map(|c| c.to_string()).collect(),
        constraint_text: format!("{} = 0", int_poly.display_with("beta")),
        roots,
    })
}

pub fn cmd_solve(n: u32, l: u32, format: Format, units: &Units) -> Result<Outcome, CliError> {
    let report = solve_report(n, l, units)?;
    let output = match format {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut s = String::from("n,l,root_index,beta,epsilon,nodes,coefficients");
            if units.overridden() {
                s.push_str(",energy");
            }
            s.push('\n');
            for r in &report.roots {
                let beta = r.beta.exact.clone().unwrap_or_else(|| fmt_f64(r.beta.value));
                write!(
                    s,
                    "{n},{l},{},{beta},{},{},{}",
                    r.root_index,
                    report.epsilon,
                    r.nodes,
                    r.coefficients.join(";")
                )
                .unwrap();
                if let Some(e) = r.energy {
                    write!(s, ",{}", fmt_f64(e)).unwrap();
                }
                s.push('\n');
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "n = {n}, l = {l}, epsilon = {}", report.epsilon).unwrap();
            writeln!(s, "constraint: {}", report.constraint_text).unwrap();
            for r in &report.roots {
                match (&r.beta.exact, &r.beta.lower, &r.beta.upper) {
                    (Some(b), _, _) => writeln!(s, "root {}: beta = {b}", r.root_index).unwrap(),
                    (None, Some(lo), Some(hi)) => {
                        writeln!(s, "root {}: beta = {}... in ({lo}, {hi})", r.root_index, r.beta.decimal).unwrap()
                    }
                    _ => unreachable!(),
                }
                if let Some(e) = r.energy {
                    writeln!(s, "  energy = {}", fmt_f64(e)).unwrap();
                }
                writeln!(s, "  nodes of v = {}", r.nodes).unwrap();
                for (i, c) in r.coefficients.iter().enumerate() {
                    writeln!(s, "  c_{i} = {c}").unwrap();
                }
            }
            s
        }
    };
    Ok(Outcome {
        output,
        exit_code: EXIT_OK,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumRow {
    pub n: u32,
    pub l: u32,
    pub root_index: usize,
    /// `p/q` when rational, otherwise a float.
    pub beta: String,
    pub epsilon: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub energy: Option<f64>,
}

pub fn spectrum_rows(n_max: u32, l_max: u32, energy_unit: Option<f64>) -> Result<Vec<SpectrumRow>, QesError> {
    let cells: Vec<(u32, u32)> = (1..=n_max).flat_map(|n| (0..=l_max).map(move |l| (n, l))).collect();
    let per_cell: Vec<Vec<SpectrumRow>> = cells
        .par_iter()
        .map(|&(n, l)| {
            solve_qes(n, l).map(|sols| {
                sols.iter()
                    .map(|s| SpectrumRow {
                        n,
                        l,
                        root_index: s.root_index,
                        beta: beta_text(s),
                        epsilon: s.epsilon_f64(),
                        energy: energy_unit.map(|u| u * s.epsilon_f64()),
                    })
                    .collect()
            })
        })
        .collect::<Result<_, _>>()?;
    Ok(per_cell.into_iter().flatten().collect())
}

pub fn cmd_spectrum(n_max: u32, l_max: u32, format: Format, units: &Units) -> Result<Outcome, CliError> {
    let unit = if units.overridden() {
        Some(units.energy_unit()?)
    } else {
        None
    };
    let rows = spectrum_rows(n_max, l_max, unit)?;
    let output = match format {
        Format::Json => to_json(&rows),
        Format::Csv | Format::Text => {
            let mut s = String::from("n,l,root_index,beta,epsilon");
            if unit.is_some() {
                s.push_str(",energy");
            }
            s.push('\n');
            for r in &rows {
                write!(s, "{},{},{},{},{}", r.n, r.l, r.root_index, r.beta, fmt_f64(r.epsilon)).unwrap();
                if let Some(e) = r.energy {
                    write!(s, ",{}", fmt_f64(e)).unwrap();
                }
                s.push('\n');
            }
            s
        }
    };
    Ok(Outcome {
        output,
        exit_code: EXIT_OK,
    })
}

#[derive(Debug, Serialize)]
struct WavefunctionReport<'a> {
    n: u32,
    l: u32,
    root_index: usize,
    beta: String,
    epsilon: f64,
    norm: f64,
    rows: &'a [verify::WavefunctionRow],
}

pub fn cmd_wavefunction(
    n: u32,
    l: u32,
    root_index: Option<usize>,
    grid: &RadialGrid,
    format: Format,
) -> Result<Outcome, CliError> {
    let sol = pick_root(solutions(n, l)?, root_index)?;
    let table = verify::eval_wavefunction(&sol, grid);
    let output = match format {
        Format::Json => to_json(&WavefunctionReport {
            n,
            l,
            root_index: sol.root_index,
            beta: beta_text(&sol),
            epsilon: sol.epsilon_f64(),
            norm: table.norm,
            rows: &table.rows,
        }),
        Format::Csv | Format::Text => {
            let mut s = String::from("x,u,v\n");
            for r in &table.rows {
                writeln!(s, "{},{},{}", fmt_f64(r.x), fmt_f64(r.u), fmt_f64(r.v)).unwrap();
            }
            s
        }
    };
    Ok(Outcome {
        output,
        exit_code: EXIT_OK,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesRow {
    pub i: usize,
    pub c_i: f64,
    /// `c_{i+1}/c_{i−1}`.
    pub ratio: Option<f64>,
    /// `2ρ1/i`.
    pub asymptote: Option<f64>,
}

pub fn series_rows(
    l: u32,
    beta: f64,
    epsilon: f64,
    terms: usize,
) -> Result<(DimensionlessParams, Vec<SeriesRow>), QesError> {
    let dp = DimensionlessParams::from_oscillator_units(beta, epsilon, l)?;
    let st = coefficients_float(&dp, terms)?;
    let rows = st
        .coefficients
        .iter()
        .enumerate()
        .map(|(i, &ci)| SeriesRow {
            i,
            c_i: ci,
            ratio: tail_ratio(&st, i).ok(),
            asymptote: (i >= 1).then(|| asymptotic_ratio(dp.rho1(), i)),
        })
        .collect();
    Ok((dp, rows))
}

#[derive(Debug, Serialize)]
struct SeriesReport<'a> {
    l: u32,
    beta: f64,
    epsilon: f64,
    rho0: f64,
    rho1: f64,
    rows: &'a [SeriesRow],
}

pub fn cmd_series(l: u32, beta: f64, epsilon: f64, terms: usize, format: Format) -> Result<Outcome, CliError> {
    let (dp, rows) = series_rows(l, beta, epsilon, terms)?;
    let opt = |x: Option<f64>| x.map(fmt_f64).unwrap_or_default();
    let output = match format {
        Format::Json => to_json(&SeriesReport {
            l,
            beta,
            epsilon,
            rho0: dp.rho0(),
            rho1: dp.rho1(),
            rows: &rows,
        }),
        Format::Csv | Format::Text => {
            let mut s = String::from("i,c_i,ratio,asymptote\n");
            for r in &rows {
                writeln!(s, "{},{},{},{}", r.i, fmt_f64(r.c_i), opt(r.ratio), opt(r.asymptote)).unwrap();
            }
            s
        }
    };
    Ok(Outcome {
        output,
        exit_code: EXIT_OK,
    })
}

pub fn cmd_verify(
    n: u32,
    l: u32,
    root_index: Option<usize>,
    tol: f64,
    grid: &RadialGrid,
    format: Format,
) -> Result<Outcome, CliError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(CliError::Usage(format!("--tol must be > 0, got {tol}")));
    }
    let sols = solutions(n, l)?;
    let chosen: Vec<QesSolution> = match root_index {
        Some(_) => vec![pick_root(sols, root_index)?],
        None => sols,
    };
    let reports = chosen
        .par_iter()
        .map(|s| verify::verify_solution(s, grid, tol))
        .collect::<Result<Vec<_>, _>>()?;
    let pass = reports.iter().all(|r| r.pass);
    let output = match format {
        Format::Json => to_json(&reports),
        Format::Csv => {
            let mut s = String::from(
                "n,l,root_index,beta,epsilon,epsilon_numerov,epsilon_matrix,numerov_error,matrix_error,overlap,pass\n",
            );
            for r in &reports {
                writeln!(
                    s,
                    "{},{},{},{},{},{},{},{},{},{},{}",
                    r.n,
                    r.l,
                    r.root_index,
                    fmt_f64(r.beta),
                    fmt_f64(r.epsilon_exact),
                    fmt_f64(r.epsilon_numerov),
                    fmt_f64(r.epsilon_matrix),
                    fmt_f64(r.numerov_error()),
                    fmt_f64(r.matrix_error()),
                    fmt_f64(r.overlap),
                    r.pass
                )
                .unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                writeln!(
                    s,
                    "{} n={} l={} root={} beta={} epsilon={}",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.n,
                    r.l,
                    r.root_index,
                    fmt_f64(r.beta),
                    fmt_f64(r.epsilon_exact)
                )
                .unwrap();
                writeln!(
                    s,
                    "  numerov {} |de| = {:.3e}",
                    fmt_f64(r.epsilon_numerov),
                    r.numerov_error()
                )
                .unwrap();
                writeln!(
                    s,
                    "  matrix  {} |de| = {:.3e}",
                    fmt_f64(r.epsilon_matrix),
                    r.matrix_error()
                )
                .unwrap();
                writeln!(
                    s,
                    "  oracle discrepancy {:.3e}, tol {:.1e}",
                    r.oracle_discrepancy(),
                    r.tol
                )
                .unwrap();
                writeln!(
                    s,
                    "  nodes numerov {} analytic {}, overlap {:.9}",
                    r.numerov_nodes, r.analytic_nodes, r.overlap
                )
                .unwrap();
            }
            s
        }
    };
    Ok(Outcome {
        output,
        exit_code: if pass { EXIT_OK } else { EXIT_VERIFY_FAILED },
    })
}

/// Parse, run and write; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match run(&cfg) {
        Ok(out) => {
            let written = match &cfg.output {
                Some(path) => std::fs::write(path, &out.output),
                None => {
                    use std::io::Write;
                    std::io::stdout().write_all(out.output.as_bytes())
                }
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return EXIT_USAGE;
            }
            out.exit_code
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<Outcome, CliError> {
        let mut full = vec!["qes"];
        full.extend_from_slice(args);
        run(&RunConfig::try_parse_from(full).unwrap())
    }

    #[test]
    fn solve_degree_one() {
        let out = run_args(&["solve", "--n", "1", "--l", "2"]).unwrap().output;
        assert!(out.contains("root 0: beta = 3\n"), "{out}");
        assert!(out.contains("epsilon = 9/2"));
    }

    #[test]
    fn spectrum_small() {
        let out = run_args(&["spectrum", "--n-max", "1", "--l-max", "0"]).unwrap().output;
        assert_eq!(out, "n,l,root_index,beta,epsilon\n1,0,0,1,2.5\n");
    }

    #[test]
    fn spectrum_energy_column() {
        let out = run_args(&["spectrum", "--n-max", "1", "--l-max", "0", "--omega", "2"])
            .unwrap()
            .output;
        assert_eq!(out, "n,l,root_index,beta,epsilon,energy\n1,0,0,1,2.5,5.0\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["solve", "--n", "0"]).unwrap_err().exit_code(), EXIT_USAGE);
        let e = run_args(&["wavefunction", "--n", "3"]).unwrap_err();
        assert_eq!(e.exit_code(), EXIT_USAGE);
        let e = run_args(&["wavefunction", "--n", "1", "--root-index", "1"]).unwrap_err();
        assert_eq!(e.exit_code(), EXIT_USAGE);
        let e = run_args(&["series", "--beta", "1", "--epsilon=-1"]).unwrap_err();
        assert_eq!(e.exit_code(), EXIT_USAGE);
    }

    #[test]
    fn error_mapping() {
        assert_eq!(CliError::from(QesError::ZeroPolynomial).exit_code(), EXIT_NO_ROOT);
        let e = QesError::NoEigenvalueInBracket { lo: 1.0, hi: 2.0 };
        assert_eq!(CliError::from(e).exit_code(), EXIT_VERIFY_FAILED);
        assert_eq!(
            CliError::from(QesError::InvalidGrid("x".into())).exit_code(),
            EXIT_USAGE
        );
    }

    #[test]
    fn series_columns() {
        let out = run_args(&["series", "--beta", "2.3", "--epsilon", "2", "--terms", "5"])
            .unwrap()
            .output;
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "i,c_i,ratio,asymptote");
        assert_eq!(lines[1], "0,1.0,,");
        assert_eq!(lines.len(), 7);
        assert!(lines[6].split(',').nth(2).unwrap().is_empty());
    }
}
