//! Physical and dimensionless parameterizations of the radial problem.
//!
//! Lab units enter only through [`PhysicalParams`]. Everything downstream works
//! with the dimensionless energy `ε = E/(ħω)` and the coupling ratio `β`.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{QesError, Result};

/// Mass, oscillator frequency, Coulomb strength and ħ of the lab-units problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    mass: f64,
    omega: f64,
    alpha: f64,
    hbar: f64,
}

impl Default for PhysicalParams {
    /// `ħ = m = ω = α = 1`, i.e. `β = 1`.
    fn default() -> Self {
        Self {
            mass: 1.0,
            omega: 1.0,
            alpha: 1.0,
            hbar: 1.0,
        }
    }
}

fn positive(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(QesError::invalid(name, format!("must be finite and > 0, got {value}")))
    }
}

impl PhysicalParams {
    pub fn new(mass: f64, omega: f64, alpha: f64, hbar: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha >= 0.0) {
            return Err(QesError::invalid(
                "alpha",
                format!("must be finite and >= 0, got {alpha}"),
            ));
        }
        Ok(Self {
            mass: positive("mass", mass)?,
            omega: positive("omega", omega)?,
            alpha,
            hbar: positive("hbar", hbar)?,
        })
    }

    /// Units `(m, ω, ħ)` with the Coulomb strength chosen so that the coupling
    /// ratio equals `beta`.
    pub fn from_beta(beta: f64, mass: f64, omega: f64, hbar: f64) -> Result<Self> {
        if !(beta.is_finite() && beta >= 0.0) {
            return Err(QesError::invalid("beta", format!("must be >= 0, got {beta}")));
        }
        let mass = positive("mass", mass)?;
        let omega = positive("omega", omega)?;
        let hbar = positive("hbar", hbar)?;
        let alpha = (beta * hbar.powi(3) * omega / mass).sqrt();
        Self::new(mass, omega, alpha, hbar)
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// Oscillator energy quantum `ħω`.
    pub fn energy_unit(&self) -> f64 {
        self.hbar * self.omega
    }

    /// Oscillator length `√(ħ/(mω))`; `x = r / oscillator_length()`.
    pub fn oscillator_length(&self) -> f64 {
        (self.hbar / (self.mass * self.omega)).sqrt()
    }
}

/// Hydrogenic-to-oscillator energy ratio `(m α²/ħ²)/(ħ ω)`.
pub fn beta(p: &PhysicalParams) -> f64 {
    (p.mass * p.alpha * p.alpha / (p.hbar * p.hbar)) / (p.hbar * p.omega)
}

/// Parameters of the reduced radial equation
/// `u'' = [ρ1² ρ² + l(l+1)/ρ² − ρ0/ρ − 1] u`.
///
/// `a = −1 + (2l+3) ρ1` is always derived, never stored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessParams {
    rho0: f64,
    rho1: f64,
    l: u32,
}

impl DimensionlessParams {
    pub fn new(rho0: f64, rho1: f64, l: u32) -> Result<Self> {
        if !(rho0.is_finite() && rho0 >= 0.0) {
            return Err(QesError::invalid("rho0", format!("must be >= 0, got {rho0}")));
        }
        Ok(Self {
            rho0,
            rho1: positive("rho1", rho1)?,
            l,
        })
    }

    /// Reduced parameters from oscillator-unit inputs: `ρ1 = 1/(2ε)` and
    /// `ρ0² = 4 β ρ1`.
    pub fn from_oscillator_units(beta: f64, epsilon: f64, l: u32) -> Result<Self> {
        if !(epsilon.is_finite() && epsilon > 0.0) {
            return Err(QesError::NonPositiveEnergy(epsilon));
        }
        if !(beta.is_finite() && beta >= 0.0) {
            return Err(QesError::invalid("beta", format!("must be >= 0, got {beta}")));
        }
        let rho1 = 0.5 / epsilon;
        Self::new((4.0 * beta * rho1).sqrt(), rho1, l)
    }

    pub fn rho0(&self) -> f64 {
        self.rho0
    }

    pub fn rho1(&self) -> f64 {
        self.rho1
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn a(&self) -> f64 {
        -1.0 + f64::from(2 * self.l + 3) * self.rho1
    }

    /// `ε = E/(ħω) = 1/(2ρ1)`.
    pub fn epsilon(&self) -> f64 {
        0.5 / self.rho1
    }
}

/// Map a lab-units energy onto the reduced equation via `k = √(2mE)/ħ`,
/// `ρ0 = 2mα/(ħ²k)`, `ρ1 = mω/(ħk²)`.
pub fn reduce(p: &PhysicalParams, energy: f64, l: u32) -> Result<DimensionlessParams> {
    if !(energy.is_finite() && energy > 0.0) {
        return Err(QesError::NonPositiveEnergy(energy));
    }
    let k = (2.0 * p.mass * energy).sqrt() / p.hbar;
    let rho0 = 2.0 * p.mass * p.alpha / (p.hbar * p.hbar * k);
    let rho1 = p.mass * p.omega / (p.hbar * k * k);
    DimensionlessParams::new(rho0, rho1, l)
}

/// Exact counterpart of [`DimensionlessParams`] for rational `β` and `ε`.
///
/// `ρ0` itself is generally irrational, so only `ρ0²` is carried.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactDimensionless {
    pub rho0_sq: BigRational,
    pub rho1: BigRational,
    pub a: BigRational,
    pub l: u32,
}

pub fn reduce_exact(beta: &BigRational, epsilon: &BigRational, l: u32) -> Result<ExactDimensionless> {
    if !epsilon.is_positive() {
        return Err(QesError::invalid("epsilon", format!("must be > 0, got {epsilon}")));
    }
    if beta.is_negative() {
        return Err(QesError::invalid("beta", format!("must be >= 0, got {beta}")));
    }
    let two = BigRational::from_integer(2.into());
    let rho1 = BigRational::one() / (&two * epsilon);
    let rho0_sq = BigRational::from_integer(4.into()) * beta * &rho1;
    let a = -BigRational::one() + BigRational::from_integer((2 * l + 3).into()) * &rho1;
    debug_assert!(!rho1.is_zero());
    Ok(ExactDimensionless { rho0_sq, rho1, a, l })
}

/// `(r, V_eff(r))` pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectivePotentialSample {
    pub r: f64,
    pub value: f64,
}

/// `V_eff(r) = −α/r + ½ m ω² r² + ħ² l(l+1)/(2 m r²)`.
pub fn effective_potential(p: &PhysicalParams, l: u32, r: f64) -> Result<f64> {
    if !(r.is_finite() && r > 0.0) {
        return Err(QesError::NonPositiveRadius(r));
    }
    let ll = f64::from(l) * f64::from(l + 1);
    Ok(-p.alpha / r + 0.5 * p.mass * p.omega * p.omega * r * r + p.hbar * p.hbar * ll / (2.0 * p.mass * r * r))
}

pub fn sample_effective_potential(p: &PhysicalParams, l: u32, r: f64) -> Result<EffectivePotentialSample> {
    Ok(EffectivePotentialSample {
        r,
        value: effective_potential(p, l, r)?,
    })
}
