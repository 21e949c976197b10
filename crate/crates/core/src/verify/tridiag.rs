//! Sturm-count bisection for symmetric tridiagonal matrices.

/// Number of eigenvalues strictly below `lambda`, from the signs of the
/// LDLᵀ pivots of `T − λI`.
pub fn sturm_count(diagonal: &[f64], off_diag: &[f64], lambda: f64) -> usize {
    const PIVOT_GUARD: f64 = 1e-300;
    let Some(&d0) = diagonal.first() else {
        return 0;
    };
    let mut q = d0 - lambda;
    let mut count = usize::from(q < 0.0);
    for (d, e) in diagonal[1..].iter().zip(off_diag) {
        let safe = if q.abs() < PIVOT_GUARD {
            PIVOT_GUARD.copysign(q)
        } else {
            q
        };
        q = (d - lambda) - e * e / safe;
        count += usize::from(q < 0.0);
    }
    count
}

fn gershgorin(diagonal: &[f64], off_diag: &[f64]) -> (f64, f64) {
    let n = diagonal.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let left = if i > 0 { off_diag[i - 1].abs() } else { 0.0 };
        let right = if i + 1 < n { off_diag[i].abs() } else { 0.0 };
        lo = lo.min(diagonal[i] - left - right);
        hi = hi.max(diagonal[i] + left + right);
    }
    (lo, hi)
}

/// The `k`-th smallest eigenvalue (0-based) by bisection.
pub fn kth_eigenvalue(diagonal: &[f64], off_diag: &[f64], k: usize) -> f64 {
    let (mut lo, mut hi) = gershgorin(diagonal, off_diag);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= 4.0 * f64::EPSILON * mid.abs().max(1.0) {
            break;
        }
        if sturm_count(diagonal, off_diag, mid) <= k {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// The `count` smallest eigenvalues, ascending.
pub fn lowest_eigenvalues(diagonal: &[f64], off_diag: &[f64], count: usize) -> Vec<f64> {
    (0..count.min(diagonal.len()))
        .map(|k| kth_eigenvalue(diagonal, off_diag, k))
        .collect()
}
