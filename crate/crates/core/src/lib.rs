//! Closed-form bound states of the radial Schrödinger equation for the
//! combined Coulomb plus isotropic harmonic-oscillator potential
//!
//! ```text
//! V(r) = -α/r + ½ m ω² r²
//! ```
//!
//! The regular power series for the reduced radial function obeys a
//! three-term recursion, so it only terminates when the coupling ratio
//! `β = (m α²/ħ²)/(ħ ω)` takes special values. This crate computes the
//! series coefficients exactly as polynomials in `β`, isolates the admissible
//! couplings for any polynomial degree, and checks the resulting levels
//! against two independent numerical eigensolvers.
//!
//! Module map:
//!
//! * [`model`]: physical and dimensionless parameters, unit reduction.
//! * [`poly`]: exact univariate polynomials over the rationals.
//! * [`recursion`]: floating and exact-symbolic series coefficients.
//! * [`truncation`]: constraint polynomials, real-root isolation, assembled solutions.
//! * [`verify`]: Numerov shooting, finite-difference spectrum, wavefunction tables.
//! * [`cli`]: the `qes` command-line front end.

pub mod cli;
pub mod error;
pub mod model;
pub mod poly;
pub mod recursion;
pub mod truncation;
pub mod verify;

pub use error::{QesError, Result};
pub use num_rational::BigRational;
