//! The three-term recursion for the series `v(ρ) = Σ c_i ρ^i`:
//!
//! ```text
//! c_{i+1} = ([a + 2ρ1(i−1)] c_{i−1} − ρ0 c_i) / ((i+1)(2l+2+i)),   c_1 = −ρ0 c_0 / (2(l+1))
//! ```
//!
//! Two representations are provided. [`coefficients_float`] runs the
//! recursion in binary64 for arbitrary `(ρ0, ρ1, l)`. [`coefficients_symbolic`]
//! runs it exactly, with every coefficient a polynomial in `β`, once the
//! energy has been pinned to a rational value. In that case `ρ1` is rational
//! and `ρ0² = 4βρ1`, so `c_i = ρ0^(i mod 2) · P_i(β)` with `P_i ∈ Q[β]`.
//!
//! All series are normalized to `c_0 = 1`.

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{QesError, Result};
use crate::model::DimensionlessParams;
use crate::poly::{int, Poly};

/// Upper bound on the number of floating coefficients.
pub const MAX_FLOAT_TERMS: usize = 1000;

pub fn seed_c1(dp: &DimensionlessParams) -> f64 {
    -dp.rho0() / (2.0 * f64::from(dp.l() + 1))
}

/// `c_{i+1}` from `c_{i−1}` and `c_i`.
pub fn next_coefficient(i: usize, c_prev: f64, c_curr: f64, dp: &DimensionlessParams) -> f64 {
    let i_f = i as f64;
    let shift = dp.a() + 2.0 * dp.rho1() * (i_f - 1.0);
    let denom = (i_f + 1.0) * (f64::from(2 * dp.l() + 2) + i_f);
    (shift * c_prev - dp.rho0() * c_curr) / denom
}

/// Floating coefficients `c_0..=c_N` of the (generally untruncated) series.
///
/// The recursion runs on mantissa/exponent pairs, so ratios stay meaningful
/// after the plain values underflow.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesTail {
    pub l: u32,
    pub rho0: f64,
    pub rho1: f64,
    /// Plain values; may underflow to zero deep in the tail.
    pub coefficients: Vec<f64>,
    mantissas: Vec<f64>,
    exponents: Vec<i32>,
}

fn pow2(e: i32) -> f64 {
    2f64.powi(e)
}

fn scaled(m: f64, e: i32) -> f64 {
    let half = e / 2;
    m * pow2(half) * pow2(e - half)
}

pub fn coefficients_float(dp: &DimensionlessParams, n_terms: usize) -> Result<SeriesTail> {
    if n_terms == 0 || n_terms > MAX_FLOAT_TERMS {
        return Err(QesError::invalid(
            "terms",
            format!("must lie in 1..={MAX_FLOAT_TERMS}, got {n_terms}"),
        ));
    }
    let mut m = Vec::with_capacity(n_terms + 1);
    let mut e = Vec::with_capacity(n_terms + 1);
    m.extend([1.0, seed_c1(dp)]);
    e.extend([0, 0]);
    for i in 1..n_terms {
        let base = e[i];
        let prev = scaled(m[i - 1], e[i - 1] - base);
        let mut next = next_coefficient(i, prev, m[i], dp);
        let mut exp = base;
        if next != 0.0 {
            let k = next.abs().log2().floor() as i32;
            if k.abs() > 200 {
                next *= pow2(-k);
                exp += k;
            }
        }
        m.push(next);
        e.push(exp);
    }
    Ok(SeriesTail {
        l: dp.l(),
        rho0: dp.rho0(),
        rho1: dp.rho1(),
        coefficients: m.iter().zip(&e).map(|(&m, &e)| scaled(m, e)).collect(),
        mantissas: m,
        exponents: e,
    })
}

/// Same-parity ratio `c_{i+1}/c_{i−1}`.
pub fn tail_ratio(st: &SeriesTail, i: usize) -> Result<f64> {
    if i == 0 || i + 1 >= st.mantissas.len() {
        return Err(QesError::invalid(
            "i",
            format!("need 1 <= i < {}, got {i}", st.mantissas.len() - 1),
        ));
    }
    let prev = st.mantissas[i - 1];
    if prev == 0.0 {
        return Err(QesError::ZeroDenominator { index: i - 1 });
    }
    Ok(scaled(
        st.mantissas[i + 1] / prev,
        st.exponents[i + 1] - st.exponents[i - 1],
    ))
}

/// Leading-order large-`i` ratio `2ρ1/i` of a series growing like `e^{ρ1ρ²}`.
pub fn asymptotic_ratio(rho1: f64, i: usize) -> f64 {
    2.0 * rho1 / i as f64
}

/// Exponent `γ` in `v ~ ρ^γ e^{ρ1ρ²}` for the untruncated series:
/// `γ = −1/(2ρ1) − (2l+3)/2`.
pub fn growth_exponent(rho1: f64, l: u32) -> f64 {
    -0.5 / rho1 - f64::from(2 * l + 3) / 2.0
}

/// Ratio including the first subleading correction, `2ρ1/(i + 1 − γ)`.
pub fn refined_asymptotic_ratio(rho1: f64, l: u32, i: usize) -> f64 {
    2.0 * rho1 / (i as f64 + 1.0 - growth_exponent(rho1, l))
}

/// Power of `ρ0` factored out of a symbolic coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(i: usize) -> Self {
        if i.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn rho0_power(self) -> u32 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

/// `ρ0^parity · poly(β)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaPoly {
    pub parity: Parity,
    pub poly: Poly,
}

impl BetaPoly {
    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn degree(&self) -> Option<usize> {
        self.poly.degree()
    }

    /// Exact value at a rational `β`, still carrying the `ρ0` factor.
    pub fn eval(&self, beta: &BigRational) -> SeriesCoefficient {
        SeriesCoefficient {
            parity: self.parity,
            factor: self.poly.eval(beta),
        }
    }

    pub fn eval_f64(&self, beta: f64, rho0: f64) -> f64 {
        let base = self.poly.eval_f64(beta);
        match self.parity {
            Parity::Even => base,
            Parity::Odd => rho0 * base,
        }
    }
}

/// An exactly known coefficient `ρ0^parity · factor`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesCoefficient {
    pub parity: Parity,
    pub factor: BigRational,
}

impl SeriesCoefficient {
    pub fn to_f64(&self, rho0: f64) -> f64 {
        let f = self.factor.to_f64().unwrap_or(f64::NAN);
        match self.parity {
            Parity::Even => f,
            Parity::Odd => rho0 * f,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.factor.is_zero()
    }
}

impl std::fmt::Display for SeriesCoefficient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.parity, self.factor.is_zero()) {
            (_, true) | (Parity::Even, _) => write!(f, "{}", self.factor),
            (Parity::Odd, _) if self.factor.is_one() => f.write_str("rho0"),
            (Parity::Odd, _) if (-&self.factor).is_one() => f.write_str("-rho0"),
            (Parity::Odd, _) => write!(f, "{}*rho0", self.factor),
        }
    }
}

/// Exact recursion data at a fixed rational `ρ1`, with `ρ0² = 4βρ1` left
/// symbolic in `β`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolicSeries {
    pub l: u32,
    pub rho1: BigRational,
}

impl SymbolicSeries {
    pub fn new(rho1: BigRational, l: u32) -> Result<Self> {
        if !rho1.is_positive() {
            return Err(QesError::invalid("rho1", format!("must be > 0, got {rho1}")));
        }
        Ok(Self { l, rho1 })
    }

    /// Energy pinned to the degree-`n` oscillator condition,
    /// `ε = n + l + 3/2`, i.e. `ρ1 = 1/(2n+2l+3)`.
    pub fn truncation(n: u32, l: u32) -> Self {
        Self {
            l,
            rho1: BigRational::new(1.into(), (2 * n + 2 * l + 3).into()),
        }
    }

    pub fn a(&self) -> BigRational {
        int(-1) + int(i64::from(2 * self.l + 3)) * &self.rho1
    }

    /// `ρ0² / β = 4 ρ1`.
    pub fn rho0_sq_per_beta(&self) -> BigRational {
        int(4) * &self.rho1
    }

    /// `a + 2ρ1(i−1)`, the factor multiplying `c_{i−1}` in the recursion for `c_{i+1}`.
    pub fn shift(&self, i: usize) -> BigRational {
        self.a() + int(2) * &self.rho1 * (int(i as i64) - int(1))
    }

    pub fn denominator(&self, i: usize) -> BigRational {
        int(((i + 1) * (2 * self.l as usize + 2 + i)) as i64)
    }

    /// Exact `c_0..=c_upto`.
    pub fn coefficients(&self, upto: usize) -> Vec<BetaPoly> {
        let rho0_sq = Poly::monomial(self.rho0_sq_per_beta(), 1);
        let mut out = Vec::with_capacity(upto + 1);
        out.push(BetaPoly {
            parity: Parity::Even,
            poly: Poly::one(),
        });
        let mut prev = Poly::zero();
        for i in 0..upto {
            let curr = out[i].poly.clone();
            // ρ0·c_i: the ρ0 factor either squares out (i odd) or becomes the
            // new overall factor (i even).
            let rho0_times_curr = match Parity::of(i) {
                Parity::Odd => &rho0_sq * &curr,
                Parity::Even => curr,
            };
            let shifted = prev.scale(&self.shift(i));
            let numer = &shifted - &rho0_times_curr;
            let next = numer.scale(&(BigRational::one() / self.denominator(i)));
            prev = out[i].poly.clone();
            out.push(BetaPoly {
                parity: Parity::of(i + 1),
                poly: next,
            });
        }
        out
    }
}

/// Exact coefficients `c_0..=c_upto` with the energy pinned at
/// `ε = n + l + 3/2`.
pub fn coefficients_symbolic(n: u32, l: u32, upto: usize) -> Vec<BetaPoly> {
    SymbolicSeries::truncation(n, l).coefficients(upto)
}
