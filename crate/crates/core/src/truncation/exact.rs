//! Exact substitution of an assembled polynomial `v(ρ)` into
//!
//! ```text
//! ρ v'' + 2(l + 1 − ρ1 ρ²) v' + [ρ0 − a ρ] v = 0
//! ```
//!
//! Coefficients live in `Q[β][ρ0]` with `ρ0² = 4ρ1 β`, stored as
//! `rational + rho0 · ρ0` with both parts polynomials in `β`.

use num_rational::BigRational;
use num_traits::Zero;

use super::{QesSolution, RealRoot};
use crate::poly::{int, Poly};
use crate::recursion::{BetaPoly, Parity};

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Rho0Linear {
    pub rational: Poly,
    pub rho0: Poly,
}

impl Rho0Linear {
    pub fn zero() -> Self {
        Self::default()
    }

    fn add(&self, other: &Self) -> Self {
        Self {
            rational: &self.rational + &other.rational,
            rho0: &self.rho0 + &other.rho0,
        }
    }

    fn scale(&self, c: &BigRational) -> Self {
        Self {
            rational: self.rational.scale(c),
            rho0: self.rho0.scale(c),
        }
    }

    /// Multiply by `ρ0`, folding `ρ0²` back to `rho0_sq` (a polynomial in `β`).
    fn times_rho0(&self, rho0_sq: &Poly) -> Self {
        Self {
            rational: &self.rho0 * rho0_sq,
            rho0: self.rational.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.rho0.is_zero()
    }

    /// Both parts vanish at `root`, which is sufficient for the element to vanish.
    pub fn vanishes_at(&self, root: &RealRoot) -> bool {
        root.is_root_of(&self.rational) && root.is_root_of(&self.rho0)
    }
}

impl From<&BetaPoly> for Rho0Linear {
    fn from(b: &BetaPoly) -> Self {
        match b.parity {
            Parity::Even => Self {
                rational: b.poly.clone(),
                rho0: Poly::zero(),
            },
            Parity::Odd => Self {
                rational: Poly::zero(),
                rho0: b.poly.clone(),
            },
        }
    }
}

type RhoPoly = Vec<Rho0Linear>;

fn derivative(v: &[Rho0Linear]) -> RhoPoly {
    v.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c.scale(&int(k as i64)))
        .collect()
}

/// Multiply by `ρ^power`.
fn shift(v: &[Rho0Linear], power: usize) -> RhoPoly {
    let mut out = vec![Rho0Linear::zero(); power];
    out.extend_from_slice(v);
    out
}

fn add_into(acc: &mut RhoPoly, term: &[Rho0Linear]) {
    if acc.len() < term.len() {
        acc.resize(term.len(), Rho0Linear::zero());
    }
    for (a, t) in acc.iter_mut().zip(term) {
        *a = a.add(t);
    }
}

/// Residual polynomial in `ρ`, coefficient by coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactResidual {
    pub coefficients: Vec<Rho0Linear>,
    pub beta: RealRoot,
}

impl ExactResidual {
    /// True when every coefficient is exactly zero at the solution's `β`.
    pub fn vanishes(&self) -> bool {
        self.coefficients.iter().all(|c| c.vanishes_at(&self.beta))
    }
}

pub fn ode_residual_exact(sol: &QesSolution) -> ExactResidual {
    let rho1 = sol.rho1();
    let a = sol.a();
    let rho0_sq = Poly::monomial(sol.rho0_sq_per_beta(), 1);
    let v: RhoPoly = sol.symbolic.iter().map(Rho0Linear::from).collect();
    let dv = derivative(&v);
    let d2v = derivative(&dv);

    let mut residual: RhoPoly = Vec::new();
    // ρ v''
    add_into(&mut residual, &shift(&d2v, 1));
    // 2(l+1) v'
    let two_l1 = int(2 * i64::from(sol.l + 1));
    add_into(&mut residual, &dv.iter().map(|c| c.scale(&two_l1)).collect::<Vec<_>>());
    // −2ρ1 ρ² v'
    let m2rho1 = -(int(2) * &rho1);
    add_into(
        &mut residual,
        &shift(&dv, 2).iter().map(|c| c.scale(&m2rho1)).collect::<Vec<_>>(),
    );
    // ρ0 v
    add_into(
        &mut residual,
        &v.iter().map(|c| c.times_rho0(&rho0_sq)).collect::<Vec<_>>(),
    );
    // −a ρ v
    let ma = -a;
    add_into(
        &mut residual,
        &shift(&v, 1).iter().map(|c| c.scale(&ma)).collect::<Vec<_>>(),
    );
    debug_assert!(!rho1.is_zero());
    ExactResidual {
        coefficients: residual,
        beta: sol.beta.clone(),
    }
}
