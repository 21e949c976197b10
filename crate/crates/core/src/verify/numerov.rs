//! Numerov shooting for `u'' = f(x) u` in oscillator units.
//!
//! The outward solution starts from the regular Frobenius series
//! `x^{l+1} Σ d_k x^k` and the inward one from `x^{ε−1} e^{−x²/2}`. They are matched at the
//! outermost classical turning point. The mismatch is the discrete Wronskian
//! normalized by the lengths of the two `(u, u')` vectors, i.e. the sine of
//! the angle between them in the phase plane. It is continuous in `ε` and
//! vanishes exactly at eigenvalues.

use super::{dimensionless_potential_term, RadialGrid};
use crate::error::{QesError, Result};

const MAX_BISECTIONS: usize = 200;

#[derive(Debug, Clone, PartialEq)]
pub struct ShootResult {
    pub epsilon: f64,
    pub node_count: usize,
    /// Normalized log-derivative discontinuity at the match point.
    pub mismatch: f64,
    pub iterations: usize,
    pub grid: RadialGrid,
}

/// `x² + l(l+1)/x² − 2√β/x` on the grid; `f = this − 2ε`.
pub(crate) fn potential_table(beta: f64, l: u32, grid: &RadialGrid) -> Vec<f64> {
    grid.xs().map(|x| dimensionless_potential_term(x, beta, l)).collect()
}

const START_TERMS: usize = 8;

/// `k(k+2l+1) d_k = −2√β d_{k−1} − 2ε d_{k−2} + d_{k−4}`, `d_0 = 1`.
fn start_series(beta: f64, l: u32, epsilon: f64) -> [f64; START_TERMS] {
    let mut d = [0.0; START_TERMS];
    d[0] = 1.0;
    let at = |d: &[f64; START_TERMS], k: usize, back: usize| if k >= back { d[k - back] } else { 0.0 };
    for k in 1..START_TERMS {
        let rhs = -2.0 * beta.sqrt() * at(&d, k, 1) - 2.0 * epsilon * at(&d, k, 2) + at(&d, k, 4);
        d[k] = rhs / (k as f64 * (k + 2 * l as usize + 1) as f64);
    }
    d
}

struct Matching {
    mismatch: f64,
    node_count: usize,
    solution: Vec<f64>,
}

fn match_index(pot: &[f64], epsilon: f64) -> usize {
    let n = pot.len();
    let turning = (0..n).rev().find(|&i| pot[i] - 2.0 * epsilon < 0.0);
    let i = match turning {
        Some(i) => i,
        None => (0..n).min_by(|&a, &b| pot[a].total_cmp(&pot[b])).unwrap_or(n / 2),
    };
    i.clamp(2, n - 3)
}

fn integrate(beta: f64, l: u32, epsilon: f64, grid: &RadialGrid, pot: &[f64]) -> Matching {
    let h = grid.step;
    let h2 = h * h / 12.0;
    let n = pot.len();
    let m = match_index(pot, epsilon);
    let f = |i: usize| pot[i] - 2.0 * epsilon;
    let g = |i: usize| 1.0 - h2 * f(i);

    let d = start_series(beta, l, epsilon);
    let start = |x: f64| x.powi(l as i32 + 1) * d.iter().rev().fold(0.0, |acc, c| acc * x + c);
    let mut out = vec![0.0; m + 2];
    out[0] = start(grid.x(0));
    out[1] = start(grid.x(1));
    for i in 1..=m {
        out[i + 1] = (2.0 * (1.0 + 5.0 * h2 * f(i)) * out[i] - g(i - 1) * out[i - 1]) / g(i + 1);
    }

    let last = n - 1;
    let tail = |x: f64| (epsilon - 1.0) * x.ln() - 0.5 * x * x;
    let mut inw = vec![0.0; n];
    inw[last] = 1.0;
    inw[last - 1] = (tail(grid.x(last - 1)) - tail(grid.x(last))).exp();
    for i in (m..last - 1).rev() {
        let j = i + 1;
        inw[i] = (2.0 * (1.0 + 5.0 * h2 * f(j)) * inw[j] - g(j + 1) * inw[j + 1]) / g(i);
        if inw[i].abs() > 1e250 {
            for v in &mut inw[i..] {
                *v *= 1e-250;
            }
        }
    }

    let (uo, uo1) = (out[m], out[m + 1]);
    let (ui, ui1) = (inw[m], inw[m + 1]);
    let (do_, di) = ((uo1 - uo) / h, (ui1 - ui) / h);
    let wronskian = uo * di - ui * do_;
    let mismatch = wronskian / (uo.hypot(do_) * ui.hypot(di));

    let scale = if ui != 0.0 { uo / ui } else { 1.0 };
    let mut solution = out[..=m].to_vec();
    solution.extend(inw[m + 1..].iter().map(|v| v * scale));
    let node_count = count_nodes(&solution);
    Matching {
        mismatch,
        node_count,
        solution,
    }
}

/// Interior sign changes, ignoring exact zeros.
pub fn count_nodes(u: &[f64]) -> usize {
    let mut nodes = 0;
    let mut prev = 0.0f64;
    for &v in u {
        if v == 0.0 {
            continue;
        }
        if prev != 0.0 && prev.signum() != v.signum() {
            nodes += 1;
        }
        prev = v;
    }
    nodes
}

/// Mismatch at a trial energy.
pub fn mismatch(beta: f64, l: u32, epsilon: f64, grid: &RadialGrid) -> f64 {
    let pot = potential_table(beta, l, grid);
    integrate(beta, l, epsilon, grid, &pot).mismatch
}

/// Sub-brackets of `[lo, hi]` (split into `samples` pieces) where the
/// mismatch changes sign.
pub fn find_brackets(beta: f64, l: u32, grid: &RadialGrid, lo: f64, hi: f64, samples: usize) -> Vec<(f64, f64)> {
    let pot = potential_table(beta, l, grid);
    let samples = samples.max(1);
    let es: Vec<f64> = (0..=samples)
        .map(|k| lo + (hi - lo) * k as f64 / samples as f64)
        .collect();
    let ms: Vec<f64> = es.iter().map(|&e| integrate(beta, l, e, grid, &pot).mismatch).collect();
    (0..samples)
        .filter(|&k| ms[k] == 0.0 || ms[k].signum() != ms[k + 1].signum())
        .map(|k| (es[k], es[k + 1]))
        .collect()
}

/// Bisect the mismatch on `bracket` until the energy bracket is narrower
/// than `tol`.
pub fn numerov_shoot(beta: f64, l: u32, bracket: (f64, f64), grid: &RadialGrid, tol: f64) -> Result<ShootResult> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(QesError::invalid("tol", format!("must be > 0, got {tol}")));
    }
    let pot = potential_table(beta, l, grid);
    let (mut lo, mut hi) = bracket;
    let mut m_lo = integrate(beta, l, lo, grid, &pot).mismatch;
    let m_hi = integrate(beta, l, hi, grid, &pot).mismatch;
    if m_lo.signum() == m_hi.signum() && m_lo != 0.0 && m_hi != 0.0 {
        return Err(QesError::NoEigenvalueInBracket { lo, hi });
    }
    // resolve well below tol so that the reported mismatch is small too
    let target = (tol * 1e-3).max(1e-14 * hi.abs().max(1.0));
    for iterations in 1..=MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        let mm = integrate(beta, l, mid, grid, &pot);
        if mm.mismatch == 0.0 || hi - lo < target {
            return if mm.mismatch.abs() < tol {
                Ok(ShootResult {
                    epsilon: mid,
                    node_count: mm.node_count,
                    mismatch: mm.mismatch,
                    iterations,
                    grid: *grid,
                })
            } else {
                Err(QesError::NoConvergence {
                    iterations,
                    width: hi - lo,
                    mismatch: mm.mismatch,
                })
            };
        }
        if mm.mismatch.signum() == m_lo.signum() {
            lo = mid;
            m_lo = mm.mismatch;
        } else {
            hi = mid;
        }
    }
    Err(QesError::NoConvergence {
        iterations: MAX_BISECTIONS,
        width: hi - lo,
        mismatch: f64::NAN,
    })
}

/// Matched Numerov solution at `epsilon`, unnormalized.
pub fn numerov_solution(beta: f64, l: u32, epsilon: f64, grid: &RadialGrid) -> Vec<f64> {
    let pot = potential_table(beta, l, grid);
    integrate(beta, l, epsilon, grid, &pot).solution
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> RadialGrid {
        RadialGrid::default()
    }

    #[test]
    fn degree_one_ground_state() {
        let r = numerov_shoot(1.0, 0, (2.0, 3.0), &grid(), 1e-9).unwrap();
        assert!((r.epsilon - 2.5).abs() < 1e-6, "{r:?}");
        assert!(r.mismatch.abs() < 1e-9);
    }

    #[test]
    fn degree_two_state() {
        let r = numerov_shoot(5.0, 0, (3.0, 4.0), &grid(), 1e-9).unwrap();
        assert!((r.epsilon - 3.5).abs() < 1e-6, "{r:?}");
    }

    #[test]
    fn pure_oscillator() {
        let r = numerov_shoot(0.0, 0, (1.0, 2.0), &grid(), 1e-9).unwrap();
        assert!((r.epsilon - 1.5).abs() < 1e-6);
        assert_eq!(r.node_count, 0);
        let r = numerov_shoot(0.0, 0, (3.0, 4.0), &grid(), 1e-9).unwrap();
        assert!((r.epsilon - 3.5).abs() < 1e-6);
        assert_eq!(r.node_count, 1);
        let r = numerov_shoot(0.0, 2, (3.0, 4.0), &grid(), 1e-9).unwrap();
        assert!((r.epsilon - 3.5).abs() < 1e-6);
    }

    #[test]
    fn empty_bracket_is_an_error() {
        let e = numerov_shoot(0.0, 0, (1.6, 1.9), &grid(), 1e-9).unwrap_err();
        assert!(matches!(e, QesError::NoEigenvalueInBracket { .. }));
        assert!(numerov_shoot(0.0, 0, (1.0, 2.0), &grid(), 0.0).is_err());
    }

    #[test]
    fn bracket_scan_finds_oscillator_levels() {
        let b = find_brackets(0.0, 0, &grid(), 1.0, 6.0, 50);
        assert_eq!(b.len(), 3);
        for ((lo, hi), e) in b.iter().zip([1.5, 3.5, 5.5]) {
            assert!(*lo <= e && e <= *hi);
        }
    }

    #[test]
    fn start_series_solves_the_equation() {
        // residual of u'' − f u for the truncated series is O(x^{l+1+START_TERMS-1})
        let (beta, l, eps) = (2.0, 1, 3.0);
        let d = start_series(beta, l, eps);
        let u = |x: f64| x.powi(l as i32 + 1) * d.iter().rev().fold(0.0, |a, c| a * x + c);
        let x = 0.05;
        let h = 1e-3;
        let upp = (u(x + h) - 2.0 * u(x) + u(x - h)) / (h * h);
        let f = dimensionless_potential_term(x, beta, l) - 2.0 * eps;
        assert!((upp - f * u(x)).abs() < 1e-6 * u(x).abs() / (x * x));
        // hydrogen-like first terms
        assert!((d[1] + 2.0 * beta.sqrt() / 4.0).abs() < 1e-15);
    }

    #[test]
    fn nodes() {
        assert_eq!(count_nodes(&[0.0, 1.0, 0.0, -1.0, -2.0, 3.0]), 2);
        assert_eq!(count_nodes(&[]), 0);
    }
}
