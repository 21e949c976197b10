//! Brute-force symbolic oracle, independent of the crate's polynomial code.
//!
//! Coefficients are expanded as plain polynomials in `ρ0` (no parity
//! factoring), then `ρ0² → 4ρ1β` is substituted at the end.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense coefficients, lowest power first.
pub type Dense = Vec<BigRational>;

fn trim(mut p: Dense) -> Dense {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn add(a: &Dense, b: &Dense) -> Dense {
    let n = a.len().max(b.len());
    let z = BigRational::zero();
    trim(
        (0..n)
            .map(|k| a.get(k).unwrap_or(&z) + b.get(k).unwrap_or(&z))
            .collect(),
    )
}

fn scale(a: &Dense, c: &BigRational) -> Dense {
    trim(a.iter().map(|x| x * c).collect())
}

fn times_var(a: &Dense) -> Dense {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero()];
    out.extend(a.iter().cloned());
    out
}

/// `c_0..=c_upto` as polynomials in `ρ0` for `ε = n + l + 3/2`.
pub fn naive_rho0_series(n: u32, l: u32, upto: usize) -> Vec<Dense> {
    let d = i64::from(2 * n + 2 * l + 3);
    let rho1 = q(1, d);
    let a = q(-2 * i64::from(n), d);
    let mut c: Vec<Dense> = vec![vec![BigRational::one()]];
    let mut prev: Dense = Vec::new();
    for i in 0..upto {
        let i_r = q(i as i64, 1);
        let shift = &a + q(2, 1) * &rho1 * (&i_r - q(1, 1));
        let den = q((i as i64 + 1) * (2 * i64::from(l) + 2 + i as i64), 1);
        let numer = add(&scale(&prev, &shift), &scale(&times_var(&c[i]), &q(-1, 1)));
        let next = scale(&numer, &(BigRational::one() / den));
        prev = c[i].clone();
        c.push(next);
    }
    c
}

/// `c_{n+1}` with the overall `ρ0` power removed and `ρ0² = 4ρ1β`
/// substituted, as dense coefficients in `β`.
pub fn naive_constraint(n: u32, l: u32) -> Dense {
    let k = n as usize + 1;
    let c = naive_rho0_series(n, l, k).swap_remove(k);
    let four_rho1 = q(4, i64::from(2 * n + 2 * l + 3));
    let parity = k % 2;
    let mut out: Dense = Vec::new();
    for (power, coef) in c.iter().enumerate() {
        if coef.is_zero() {
            continue;
        }
        assert_eq!(power % 2, parity, "mixed parity in c_{k}");
        let half = (power - parity) / 2;
        if out.len() <= half {
            out.resize(half + 1, BigRational::zero());
        }
        let mut f = coef.clone();
        for _ in 0..half {
            f *= &four_rho1;
        }
        out[half] += f;
    }
    trim(out)
}

/// Real roots of a dense rational polynomial by sign scanning and float
/// bisection on `(0, bound]`, for cross-checking.
pub fn float_positive_roots(p: &Dense, bound: f64, samples: usize) -> Vec<f64> {
    use num_traits::ToPrimitive;
    let cf: Vec<f64> = p.iter().map(|c| c.to_f64().unwrap()).collect();
    let eval = |x: f64| cf.iter().rev().fold(0.0, |acc, c| acc * x + c);
    let mut roots = Vec::new();
    let step = bound / samples as f64;
    for k in 0..samples {
        let (mut lo, mut hi) = (k as f64 * step + 1e-12, (k + 1) as f64 * step);
        if eval(lo).signum() == eval(hi).signum() {
            continue;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if eval(mid).signum() == eval(lo).signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        roots.push(0.5 * (lo + hi));
    }
    roots
}
