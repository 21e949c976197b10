//! Truncation of the series to a degree-`n` polynomial.
//!
//! With the energy pinned to `ε = n + l + 3/2` (the factor multiplying
//! `c_n` in the recursion for `c_{n+2}` vanishes), the series terminates
//! exactly when the symbolic coefficient `c_{n+1}(β)` vanishes. Its positive
//! roots are the admissible couplings. Degree `n` here is the degree of
//! `v`. The first worked case, `c_2 = c_3 = 0`, is `n = 1`.

mod exact;
pub mod roots;

use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

pub use exact::{ode_residual_exact, ExactResidual, Rho0Linear};
pub use roots::{positive_real_roots, rational_to_decimal, RealRoot, RootValue};

use crate::error::{QesError, Result};
use crate::model::DimensionlessParams;
use crate::poly::{int, rat, Poly};
use crate::recursion::{coefficients_symbolic, BetaPoly, SeriesCoefficient};

/// The symbolic `c_{n+1}(β)` whose positive roots terminate the series at degree `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstraintPoly {
    pub n: u32,
    pub l: u32,
    pub constraint: BetaPoly,
}

impl ConstraintPoly {
    /// The polynomial in `β` with the overall `ρ0` factor dropped.
    pub fn poly(&self) -> &Poly {
        &self.constraint.poly
    }

    pub fn degree(&self) -> Option<usize> {
        self.constraint.degree()
    }

    /// Proportional integer form, positive leading coefficient.
    pub fn integer_coefficients(&self) -> Vec<num_bigint::BigInt> {
        self.constraint.poly.primitive_integer()
    }
}

pub fn constraint_polynomial(n: u32, l: u32) -> ConstraintPoly {
    let upto = n as usize + 1;
    let constraint = coefficients_symbolic(n, l, upto).swap_remove(upto);
    ConstraintPoly { n, l, constraint }
}

/// Positive real roots of the constraint, ascending.
pub fn isolate_roots(cp: &ConstraintPoly) -> Result<Vec<RealRoot>> {
    positive_real_roots(cp.poly())
}

/// `ε = n + l + 3/2`.
pub fn general_energy(n: u32, l: u32) -> BigRational {
    int(i64::from(n + l)) + rat(3, 2)
}

/// `ε = (2l+3)/2 + β/(l+1)`: the `c_2 = 0` condition solved for the energy.
pub fn energy_degree1(l: u32, beta: &BigRational) -> BigRational {
    let l = i64::from(l);
    rat(2 * l + 3, 2) + beta / int(l + 1)
}

/// `ε = 3(2l+3)(l+2)/(2(3l+4)) + β/(3l+4)`: the `c_3 = 0` condition at `a + 4ρ1 = 0`.
pub fn energy_degree2(l: u32, beta: &BigRational) -> BigRational {
    let l = i64::from(l);
    rat(3 * (2 * l + 3) * (l + 2), 2 * (3 * l + 4)) + beta / int(3 * l + 4)
}

pub fn energy_degree1_f64(l: u32, beta: f64) -> f64 {
    f64::from(2 * l + 3) / 2.0 + beta / f64::from(l + 1)
}

pub fn energy_degree2_f64(l: u32, beta: f64) -> f64 {
    let l = f64::from(l);
    3.0 * (2.0 * l + 3.0) * (l + 2.0) / (2.0 * (3.0 * l + 4.0)) + beta / (3.0 * l + 4.0)
}

/// One closed-form bound state.
#[derive(Debug, Clone, PartialEq)]
pub struct QesSolution {
    pub n: u32,
    pub l: u32,
    /// Position among the positive roots for this `(n, l)`, ascending.
    pub root_index: usize,
    pub beta: RealRoot,
    pub epsilon: BigRational,
    /// Exact `c_0..=c_n` as polynomials in `β`.
    pub symbolic: Vec<BetaPoly>,
    /// `c_0..=c_n` at `β`: exact for rational roots, at the enclosure
    /// midpoint otherwise.
    pub coefficients: Vec<SeriesCoefficient>,
}

impl QesSolution {
    pub fn beta_f64(&self) -> f64 {
        self.beta.to_f64()
    }

    pub fn epsilon_f64(&self) -> f64 {
        self.epsilon.to_f64().unwrap()
    }

    /// `ρ1 = 1/(2ε)`.
    pub fn rho1(&self) -> BigRational {
        BigRational::one() / (int(2) * &self.epsilon)
    }

    /// `a = −1 + (2l+3)ρ1 = −2n/(2n+2l+3)`.
    pub fn a(&self) -> BigRational {
        int(-1) + int(i64::from(2 * self.l + 3)) * self.rho1()
    }

    /// `ρ0²/β = 4ρ1`.
    pub fn rho0_sq_per_beta(&self) -> BigRational {
        int(4) * self.rho1()
    }

    /// `ρ0²`, exact when `β` is rational.
    pub fn rho0_sq(&self) -> Option<BigRational> {
        self.beta.as_rational().map(|b| b * self.rho0_sq_per_beta())
    }

    pub fn rho0_f64(&self) -> f64 {
        (self.rho0_sq_per_beta().to_f64().unwrap() * self.beta_f64()).sqrt()
    }

    pub fn dimensionless(&self) -> DimensionlessParams {
        DimensionlessParams::from_oscillator_units(self.beta_f64(), self.epsilon_f64(), self.l)
            .expect("QES parameters are positive")
    }

    pub fn coefficients_f64(&self) -> Vec<f64> {
        let rho0 = self.rho0_f64();
        self.coefficients.iter().map(|c| c.to_f64(rho0)).collect()
    }

    /// `v(ρ)` in floating point.
    pub fn v(&self, rho: f64) -> f64 {
        self.coefficients_f64().iter().rev().fold(0.0, |acc, c| acc * rho + c)
    }

    /// Rational polynomial `w(t) = v(ρ0 t)`.
    ///
    /// Odd coefficients carry one factor of `ρ0`, so after the substitution
    /// every term has an even power of `ρ0` and `w` has rational coefficients.
    /// Positive roots of `w` correspond to nodes of `v` on `ρ > 0`.
    pub fn rescaled_v(&self) -> Poly {
        let rho0_sq = self.beta.midpoint() * self.rho0_sq_per_beta();
        let mut pow = BigRational::one();
        let mut out = Vec::with_capacity(self.coefficients.len());
        for (i, c) in self.coefficients.iter().enumerate() {
            if i % 2 == 1 {
                pow *= &rho0_sq;
            }
            out.push(&c.factor * &pow);
        }
        Poly::new(out)
    }

    /// Number of positive zeros of `v`. For irrational `β` this uses the
    /// enclosure midpoint.
    pub fn interior_nodes(&self) -> usize {
        let w = self.rescaled_v();
        if w.degree().unwrap_or(0) == 0 {
            return 0;
        }
        positive_real_roots(&w).map(|r| r.len()).unwrap_or(0)
    }
}

/// All closed-form states terminating at degree `n`; empty when the
/// constraint has no positive root.
pub fn solve_qes(n: u32, l: u32) -> Result<Vec<QesSolution>> {
    if n == 0 {
        return Err(QesError::invalid("n", "polynomial degree must be >= 1"));
    }
    let degree = n as usize;
    let symbolic = coefficients_symbolic(n, l, degree + 2);
    let cp = ConstraintPoly {
        n,
        l,
        constraint: symbolic[degree + 1].clone(),
    };
    let roots = isolate_roots(&cp)?;
    let epsilon = general_energy(n, l);
    let mut out = Vec::with_capacity(roots.len());
    for (root_index, beta) in roots.into_iter().enumerate() {
        for k in [degree + 1, degree + 2] {
            if !beta.is_root_of(&symbolic[k].poly) {
                return Err(QesError::invalid(
                    "beta",
                    format!("c_{k} does not vanish at root {root_index} for n={n}, l={l}"),
                ));
            }
        }
        let at = beta.midpoint();
        let coefficients = symbolic[..=degree].iter().map(|c| c.eval(&at)).collect();
        out.push(QesSolution {
            n,
            l,
            root_index,
            beta,
            epsilon: epsilon.clone(),
            symbolic: symbolic[..=degree].to_vec(),
            coefficients,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        int(n)
    }

    #[test]
    fn degree_one_and_two_roots() {
        let r = isolate_roots(&constraint_polynomial(1, 0)).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].as_rational(), Some(&q(1)));
        let r = isolate_roots(&constraint_polynomial(2, 3)).unwrap();
        assert_eq!(r[0].as_rational(), Some(&q(17)));
        let r = isolate_roots(&constraint_polynomial(2, 1)).unwrap();
        assert_eq!(r[0].as_rational(), Some(&q(9)));
    }

    #[test]
    fn n3_l0_quadratic() {
        let cp = constraint_polynomial(3, 0);
        let ints: Vec<i64> = cp.integer_coefficients().iter().map(|c| c.to_i64().unwrap()).collect();
        assert_eq!(ints, vec![18, -15, 1]);
        let roots = isolate_roots(&cp).unwrap();
        assert_eq!(roots.len(), 2);
        let sum = roots[0].to_f64() + roots[1].to_f64();
        let prod = roots[0].to_f64() * roots[1].to_f64();
        assert!((sum - 15.0).abs() < 1e-13 && (prod - 18.0).abs() < 1e-12);
    }

    #[test]
    fn energies() {
        assert_eq!(general_energy(1, 0), rat(5, 2));
        assert_eq!(general_energy(2, 0), rat(7, 2));
        assert_eq!(general_energy(1, 4), rat(13, 2));
        assert_eq!(energy_degree1(0, &q(1)), rat(5, 2));
        assert_eq!(energy_degree1(2, &q(3)), rat(9, 2));
        assert_eq!(energy_degree1(3, &q(0)), rat(9, 2));
        assert_eq!(energy_degree2(0, &q(5)), rat(7, 2));
        assert_eq!(energy_degree2(1, &q(9)), rat(9, 2));
        assert_eq!(energy_degree2(0, &q(0)), rat(9, 4));
        assert_eq!(energy_degree1_f64(0, 1.0), 2.5);
        assert_eq!(energy_degree2_f64(1, 9.0), 4.5);
    }

    #[test]
    fn solve_degree_one_ground() {
        let sols = solve_qes(1, 0).unwrap();
        assert_eq!(sols.len(), 1);
        let s = &sols[0];
        assert_eq!(s.beta.as_rational(), Some(&q(1)));
        assert_eq!(s.epsilon, rat(5, 2));
        assert_eq!(s.rho0_sq(), Some(rat(4, 5)));
        assert_eq!(s.coefficients[0].factor, q(1));
        assert_eq!(s.coefficients[1].to_string(), "-1/2*rho0");
        assert_eq!(s.interior_nodes(), 1);
        // v has its zero at ρ = 2(l+1)/ρ0
        let rho = 2.0 / s.rho0_f64();
        assert!(s.v(rho).abs() < 1e-15);
    }

    #[test]
    fn solve_reports_all_roots() {
        let sols = solve_qes(2, 0).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].beta.as_rational(), Some(&q(5)));
        assert_eq!(sols[0].epsilon, rat(7, 2));
        let sols = solve_qes(3, 0).unwrap();
        assert_eq!(sols.len(), 2);
        assert_eq!(sols.iter().map(|s| s.root_index).collect::<Vec<_>>(), vec![0, 1]);
        assert!(sols[0].beta < sols[1].beta);
        assert!(solve_qes(0, 0).is_err());
    }

    #[test]
    fn degree_law_and_positivity() {
        for n in 1..=10u32 {
            for l in 0..=3u32 {
                let cp = constraint_polynomial(n, l);
                assert_eq!(cp.degree(), Some((n + 1) as usize / 2), "n={n} l={l}");
            }
        }
        for n in 1..=6u32 {
            for l in 0..=6u32 {
                for s in solve_qes(n, l).unwrap() {
                    assert!(s.beta_f64() > 0.0);
                    assert!(ode_residual_exact(&s).vanishes());
                }
            }
        }
    }
}
