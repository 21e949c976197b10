//! Independent numerical checks in oscillator units.
//!
//! With `x = r √(mω/ħ)` and `ε = E/(ħω)` the radial equation reads
//!
//! ```text
//! u'' = f(x) u,   f(x) = x² + l(l+1)/x² − 2√β/x − 2ε
//! ```
//!
//! (`α √(m/(ħ³ω)) = √β`). The series variable is related by `ρ = √(2ε) x`
//! and `ρ1 ρ² = x²` for every energy, so the analytic radial function is
//! `u(x) ∝ x^{l+1} e^{−x²/2} v(√(2ε) x)`.
//!
//! Two structurally different eigensolvers are provided: Numerov shooting
//! ([`numerov_shoot`]) and a second-order finite-difference matrix with Sturm
//! bisection ([`matrix_spectrum`]).

mod numerov;
pub mod tridiag;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

pub use numerov::{count_nodes, find_brackets, mismatch, numerov_shoot, numerov_solution, ShootResult};

use crate::error::{QesError, Result};
use crate::recursion::SeriesCoefficient;
use crate::truncation::QesSolution;

pub const DEFAULT_X_MIN: f64 = 1e-6;
pub const DEFAULT_X_MAX: f64 = 10.0;
pub const DEFAULT_STEP: f64 = 1e-3;
/// Minimum number of grid intervals.
pub const MIN_INTERVALS: usize = 1000;

/// Uniform grid `x_min, x_min + step, …` in oscillator units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialGrid {
    pub x_min: f64,
    pub x_max: f64,
    pub step: f64,
}

impl Default for RadialGrid {
    fn default() -> Self {
        Self {
            x_min: DEFAULT_X_MIN,
            x_max: DEFAULT_X_MAX,
            step: DEFAULT_STEP,
        }
    }
}

impl RadialGrid {
    pub fn new(x_min: f64, x_max: f64, step: f64) -> Result<Self> {
        if !(x_min.is_finite() && x_min > 0.0) {
            return Err(QesError::InvalidGrid(format!("x_min must be > 0, got {x_min}")));
        }
        if !(x_max.is_finite() && x_max > x_min) {
            return Err(QesError::InvalidGrid(format!(
                "x_max must exceed x_min, got [{x_min}, {x_max}]"
            )));
        }
        if !(step.is_finite() && step > 0.0) {
            return Err(QesError::InvalidGrid(format!("step must be > 0, got {step}")));
        }
        let grid = Self { x_min, x_max, step };
        let ratio = (x_max - x_min) / step;
        if ratio + 1e-9 < MIN_INTERVALS as f64 {
            return Err(QesError::InvalidGrid(format!(
                "need at least {MIN_INTERVALS} intervals, got {ratio:.1}"
            )));
        }
        Ok(grid)
    }

    /// Grid with exactly `intervals` steps between `x_min` and `x_max`.
    pub fn with_intervals(x_min: f64, x_max: f64, intervals: usize) -> Result<Self> {
        if intervals == 0 {
            return Err(QesError::InvalidGrid("zero intervals".into()));
        }
        Self::new(x_min, x_max, (x_max - x_min) / intervals as f64)
    }

    pub fn intervals(&self) -> usize {
        ((self.x_max - self.x_min) / self.step).round() as usize
    }

    pub fn points(&self) -> usize {
        self.intervals() + 1
    }

    pub fn x(&self, i: usize) -> f64 {
        self.x_min + i as f64 * self.step
    }

    pub fn xs(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.points()).map(move |i| self.x(i))
    }
}

/// `x² + l(l+1)/x² − 2√β/x`.
pub(crate) fn dimensionless_potential_term(x: f64, beta: f64, l: u32) -> f64 {
    let ll = f64::from(l) * f64::from(l + 1);
    x * x + ll / (x * x) - 2.0 * beta.sqrt() / x
}

/// `f(x)` in `u'' = f(x) u`.
pub fn dimensionless_ode_rhs(x: f64, epsilon: f64, beta: f64, l: u32) -> Result<f64> {
    if !(x.is_finite() && x > 0.0) {
        return Err(QesError::NonPositiveRadius(x));
    }
    if !(beta.is_finite() && beta >= 0.0) {
        return Err(QesError::invalid("beta", format!("must be >= 0, got {beta}")));
    }
    Ok(dimensionless_potential_term(x, beta, l) - 2.0 * epsilon)
}

/// Lowest levels of the finite-difference Hamiltonian.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatrixSpectrum {
    pub levels: Vec<f64>,
    /// Set when the `step²·ε²` discretization estimate exceeds the tolerance.
    pub warning: Option<String>,
}

/// Nodes `wall + j·step` strictly between `wall` and `x_max`, with the
/// Dirichlet walls at both ends.
fn fd_matrix_from(beta: f64, l: u32, wall: f64, grid: &RadialGrid) -> (Vec<f64>, Vec<f64>) {
    let h = grid.step;
    let interior = (((grid.x_max - wall) / h).round() as usize).saturating_sub(1);
    let diag: Vec<f64> = (1..=interior)
        .map(|j| 1.0 / (h * h) + 0.5 * dimensionless_potential_term(wall + j as f64 * h, beta, l))
        .collect();
    let off = vec![-0.5 / (h * h); interior.saturating_sub(1)];
    (diag, off)
}

// The regular solution vanishes at the origin, so the inner wall goes there.
// A wall at x_min instead raises every level by about ½u'(0)²·x_min.
fn fd_matrix(beta: f64, l: u32, grid: &RadialGrid) -> (Vec<f64>, Vec<f64>) {
    fd_matrix_from(beta, l, 0.0, grid)
}

/// Lowest `k_levels` eigenvalues of
/// `−½u'' + [½x² + l(l+1)/(2x²) − √β/x] u = ε u`, `u(0) = u(x_max) = 0`,
/// discretized with second-order central differences at spacing `grid.step`.
pub fn matrix_spectrum(beta: f64, l: u32, grid: &RadialGrid, k_levels: usize, tol: f64) -> Result<MatrixSpectrum> {
    if k_levels == 0 {
        return Err(QesError::invalid("k_levels", "must be >= 1"));
    }
    let (diag, off) = fd_matrix(beta, l, grid);
    let levels = tridiag::lowest_eigenvalues(&diag, &off, k_levels);
    let top = levels.last().copied().unwrap_or(0.0).abs();
    let estimate = grid.step * grid.step * top * top / 6.0;
    let warning = (estimate > tol).then(|| {
        format!(
            "grid step {} gives an estimated error {estimate:.2e} above tolerance {tol:.1e}",
            grid.step
        )
    });
    Ok(MatrixSpectrum { levels, warning })
}

/// Finite-difference level closest to `target`.
pub fn matrix_level_near(beta: f64, l: u32, grid: &RadialGrid, target: f64) -> f64 {
    let (diag, off) = fd_matrix(beta, l, grid);
    let below = tridiag::sturm_count(&diag, &off, target);
    let mut candidates = vec![tridiag::kth_eigenvalue(&diag, &off, below)];
    if below > 0 {
        candidates.push(tridiag::kth_eigenvalue(&diag, &off, below - 1));
    }
    candidates
        .into_iter()
        .min_by(|a, b| (a - target).abs().total_cmp(&(b - target).abs()))
        .unwrap()
}

/// Composite Simpson rule on uniformly spaced samples. An odd number of
/// intervals closes with Simpson's 3/8 rule on the last three.
pub fn simpson(values: &[f64], h: f64) -> f64 {
    let n = values.len().saturating_sub(1);
    match n {
        0 => 0.0,
        1 => 0.5 * h * (values[0] + values[1]),
        2 => h / 3.0 * (values[0] + 4.0 * values[1] + values[2]),
        3 => 3.0 * h / 8.0 * (values[0] + 3.0 * values[1] + 3.0 * values[2] + values[3]),
        _ if n.is_multiple_of(2) => {
            let inner: f64 = values[1..n]
                .iter()
                .enumerate()
                .map(|(k, v)| if k % 2 == 0 { 4.0 * v } else { 2.0 * v })
                .sum();
            h / 3.0 * (values[0] + inner + values[n])
        }
        _ => simpson(&values[..n - 2], h) + simpson(&values[n - 3..], h),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WavefunctionRow {
    pub x: f64,
    pub u: f64,
    pub v: f64,
}

/// Normalized samples of `u(x) ∝ x^{l+1} e^{−x²/2} v(√(2ε) x)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WavefunctionTable {
    pub rows: Vec<WavefunctionRow>,
    /// `√(∫ u_raw² dx)` before normalization.
    pub norm: f64,
}

pub fn eval_wavefunction(sol: &QesSolution, grid: &RadialGrid) -> WavefunctionTable {
    let coeffs = sol.coefficients_f64();
    let scale = (2.0 * sol.epsilon_f64()).sqrt();
    let l = sol.l as i32;
    let mut rows: Vec<WavefunctionRow> = grid
        .xs()
        .map(|x| {
            let v = horner(&coeffs, scale * x);
            let u = x.powi(l + 1) * (-0.5 * x * x).exp() * v;
            WavefunctionRow { x, u, v }
        })
        .collect();
    let sq: Vec<f64> = rows.iter().map(|r| r.u * r.u).collect();
    let norm = simpson(&sq, grid.step).sqrt();
    for r in &mut rows {
        r.u /= norm;
    }
    WavefunctionTable { rows, norm }
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// `(p, p', p'')` at `x`.
fn eval_with_derivatives(coeffs: &[f64], x: f64) -> (f64, f64, f64) {
    let (mut p, mut d1, mut d2) = (0.0, 0.0, 0.0);
    for &c in coeffs.iter().rev() {
        d2 = d2 * x + 2.0 * d1;
        d1 = d1 * x + p;
        p = p * x + c;
    }
    (p, d1, d2)
}

/// Largest residual of `ρv'' + 2(l+1−ρ1ρ²)v' + [ρ0 − aρ]v` over the interior
/// grid points, relative to the largest sum of the absolute values of its
/// three terms.
pub fn ode_residual_numeric(sol: &QesSolution, grid: &RadialGrid) -> f64 {
    let coeffs = sol.coefficients_f64();
    let dp = sol.dimensionless();
    let (rho0, rho1, a) = (dp.rho0(), dp.rho1(), dp.a());
    let scale = (2.0 * sol.epsilon_f64()).sqrt();
    let l1 = f64::from(sol.l + 1);
    let (mut worst, mut size) = (0.0f64, 0.0f64);
    for x in grid.xs().skip(1).take(grid.points().saturating_sub(2)) {
        let rho = scale * x;
        let (v, dv, d2v) = eval_with_derivatives(&coeffs, rho);
        let t1 = rho * d2v;
        let t2 = 2.0 * (l1 - rho1 * rho * rho) * dv;
        let t3 = (rho0 - a * rho) * v;
        worst = worst.max((t1 + t2 + t3).abs());
        size = size.max(t1.abs() + t2.abs() + t3.abs());
    }
    if size == 0.0 {
        0.0
    } else {
        worst / size
    }
}

/// The same truncated polynomial with its coefficients re-evaluated at a
/// shifted `β` (no longer a root), for sensitivity checks.
pub fn perturb_beta(sol: &QesSolution, delta: &BigRational) -> QesSolution {
    let beta = sol.beta.midpoint() + delta;
    let coefficients: Vec<SeriesCoefficient> = sol.symbolic.iter().map(|c| c.eval(&beta)).collect();
    let mut out = sol.clone();
    out.beta = crate::truncation::RealRoot::rational(beta, 1);
    out.coefficients = coefficients;
    out
}

/// Both oracles evaluated at one closed-form state.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verification {
    pub n: u32,
    pub l: u32,
    pub root_index: usize,
    pub beta: f64,
    pub epsilon_exact: f64,
    pub epsilon_numerov: f64,
    pub epsilon_matrix: f64,
    pub numerov_nodes: usize,
    pub analytic_nodes: usize,
    pub overlap: f64,
    pub tol: f64,
    pub pass: bool,
}

impl Verification {
    pub fn numerov_error(&self) -> f64 {
        (self.epsilon_numerov - self.epsilon_exact).abs()
    }

    pub fn matrix_error(&self) -> f64 {
        (self.epsilon_matrix - self.epsilon_exact).abs()
    }

    pub fn oracle_discrepancy(&self) -> f64 {
        (self.epsilon_numerov - self.epsilon_matrix).abs()
    }
}

/// Shoot and diagonalize around `ε = n + l + 3/2`, then compare.
pub fn verify_solution(sol: &QesSolution, grid: &RadialGrid, tol: f64) -> Result<Verification> {
    let beta = sol.beta_f64();
    let target = sol.epsilon_f64();
    let brackets = find_brackets(beta, sol.l, grid, target - 0.5, target + 0.5, 40);
    let bracket = brackets
        .into_iter()
        .min_by(|a, b| {
            let da = (0.5 * (a.0 + a.1) - target).abs();
            let db = (0.5 * (b.0 + b.1) - target).abs();
            da.total_cmp(&db)
        })
        .ok_or(QesError::NoEigenvalueInBracket {
            lo: target - 0.5,
            hi: target + 0.5,
        })?;
    let shot = numerov_shoot(beta, sol.l, bracket, grid, 1e-10)?;
    let epsilon_matrix = matrix_level_near(beta, sol.l, grid, target);

    let analytic = eval_wavefunction(sol, grid);
    let numeric = numerov_solution(beta, sol.l, shot.epsilon, grid);
    let norm = simpson(&numeric.iter().map(|u| u * u).collect::<Vec<_>>(), grid.step).sqrt();
    let prod: Vec<f64> = analytic
        .rows
        .iter()
        .zip(&numeric)
        .map(|(r, u)| r.u * u / norm)
        .collect();
    let overlap = simpson(&prod, grid.step).abs();

    let mut v = Verification {
        n: sol.n,
        l: sol.l,
        root_index: sol.root_index,
        beta,
        epsilon_exact: target,
        epsilon_numerov: shot.epsilon,
        epsilon_matrix,
        numerov_nodes: shot.node_count,
        analytic_nodes: sol.interior_nodes(),
        overlap,
        tol,
        pass: false,
    };
    v.pass = v.numerov_error() < tol && v.matrix_error() < tol && v.oracle_discrepancy() < tol;
    Ok(v)
}

/// Analytic `ε` as `f64`.
pub fn epsilon_f64(eps: &BigRational) -> f64 {
    eps.to_f64().unwrap_or(f64::NAN)
}
