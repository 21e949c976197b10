//! Exact isolation of the positive real roots of a rational polynomial.
//!
//! Each square-free factor gets a Sturm chain. Dyadic bisection on that chain
//! isolates the roots, and each isolating interval is then shrunk below
//! [`enclosure_width`]. A root is reported as an exact rational when it is one.
//! A rational root `p/q` of a primitive integer polynomial with leading
//! coefficient `L` has `q | L`. Once an interval is narrower than `1/L` it
//! therefore holds at most one candidate `m/L`, and that candidate is tested
//! exactly.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{QesError, Result};
use crate::poly::{int, Poly};

/// Certified enclosures are refined below `10^-30`.
pub fn enclosure_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10).pow(30))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootValue {
    Rational(BigRational),
    /// The root lies in `(lo, hi)`; `hi − lo <` [`enclosure_width`].
    Enclosure {
        lo: BigRational,
        hi: BigRational,
    },
}

/// A real root together with a square-free polynomial that has it as its
/// only root inside the enclosure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealRoot {
    pub value: RootValue,
    pub multiplicity: usize,
    pub defining: Poly,
}

impl RealRoot {
    pub fn rational(r: BigRational, multiplicity: usize) -> Self {
        let defining = Poly::new(vec![-r.clone(), BigRational::one()]);
        Self {
            value: RootValue::Rational(r),
            multiplicity,
            defining,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self.value, RootValue::Rational(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.value {
            RootValue::Rational(r) => Some(r),
            RootValue::Enclosure { .. } => None,
        }
    }

    /// The exact value, or the enclosure midpoint.
    pub fn midpoint(&self) -> BigRational {
        match &self.value {
            RootValue::Rational(r) => r.clone(),
            RootValue::Enclosure { lo, hi } => (lo + hi) / int(2),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    /// Exact test of `p(root) = 0`.
    pub fn is_root_of(&self, p: &Poly) -> bool {
        match &self.value {
            RootValue::Rational(r) => p.eval(r).is_zero(),
            RootValue::Enclosure { lo, hi } => {
                if p.is_zero() {
                    return true;
                }
                let common = self.defining.gcd(p);
                if common.degree().unwrap_or(0) == 0 {
                    return false;
                }
                SturmChain::new(&common).count_in(lo, hi) > 0
            }
        }
    }

    /// Decimal rendering: exact digits for terminating rationals, otherwise
    /// `digits` fractional digits of the midpoint.
    pub fn to_decimal(&self, digits: usize) -> String {
        rational_to_decimal(&self.midpoint(), digits)
    }
}

impl Ord for RealRoot {
    fn cmp(&self, other: &Self) -> Ordering {
        self.midpoint().cmp(&other.midpoint())
    }
}

impl PartialOrd for RealRoot {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Truncated (toward zero) decimal expansion with at most `digits` fractional
/// digits; trailing zeros are dropped.
pub fn rational_to_decimal(r: &BigRational, digits: usize) -> String {
    let neg = r.is_negative();
    let a = r.abs();
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = (a.numer() * &scale) / a.denom();
    let int_part = &scaled / &scale;
    let frac = (&scaled % &scale).to_string();
    let frac = format!("{frac:0>digits$}");
    let frac = frac.trim_end_matches('0');
    let sign = if neg && !scaled.is_zero() { "-" } else { "" };
    if frac.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac}")
    }
}

/// Sturm chain of a square-free polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<Poly>,
}

impl SturmChain {
    pub fn new(p: &Poly) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        while !chain.last().unwrap().is_zero() {
            let k = chain.len();
            let r = chain[k - 2].rem(&chain[k - 1]);
            chain.push(-&r);
        }
        chain.pop();
        Self { chain }
    }

    pub fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = Ordering::Equal;
        for s in &self.chain {
            let sign = s.sign_at(x);
            if sign == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && sign != last {
                count += 1;
            }
            last = sign;
        }
        count
    }

    /// Distinct roots in `(lo, hi]`.
    pub fn count_in(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

/// Bound on the magnitude of every root (Cauchy).
fn root_bound(p: &Poly) -> BigRational {
    let lc = p.leading().unwrap().abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(BigRational::zero);
    // round up to a power of two so bisection stays dyadic
    let bound = max + BigRational::one();
    let mut pow = BigRational::one();
    while pow < bound {
        pow *= int(2);
    }
    pow
}

/// Positive roots of a square-free polynomial with `p(0) ≠ 0`.
fn isolate_square_free(p: &Poly, multiplicity: usize) -> Vec<RealRoot> {
    let sturm = SturmChain::new(p);
    let ints = p.primitive_integer();
    let lead = ints.last().cloned().unwrap();
    let candidate_width = BigRational::new(BigInt::one(), lead.clone());
    let target = enclosure_width();

    let mut stack = vec![(BigRational::zero(), root_bound(p))];
    let mut out = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        match sturm.count_in(&lo, &hi) {
            0 => {}
            1 => out.push(refine(p, lo, hi, &lead, &candidate_width, &target, multiplicity)),
            _ => {
                let mid = (&lo + &hi) / int(2);
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out
}

fn refine(
    p: &Poly,
    mut lo: BigRational,
    mut hi: BigRational,
    lead: &BigInt,
    candidate_width: &BigRational,
    target: &BigRational,
    multiplicity: usize,
) -> RealRoot {
    if p.eval(&hi).is_zero() {
        return RealRoot::rational(hi, multiplicity);
    }
    // `lo` may itself be a root of `p` left over from splitting; the single
    // simple root in (lo, hi) separates -sign(hi) from sign(hi).
    let sign_hi = p.sign_at(&hi);
    let mut candidate_tested = false;
    loop {
        let width = &hi - &lo;
        if !candidate_tested && &width < candidate_width {
            candidate_tested = true;
            let lead_q = BigRational::from_integer(lead.clone());
            let m = (&lo * &lead_q).floor() + BigRational::one();
            let cand = m / lead_q;
            if cand < hi && p.eval(&cand).is_zero() {
                return RealRoot::rational(cand, multiplicity);
            }
        }
        if candidate_tested && &width < target {
            return RealRoot {
                value: RootValue::Enclosure { lo, hi },
                multiplicity,
                defining: p.clone(),
            };
        }
        let mid = (&lo + &hi) / int(2);
        match p.sign_at(&mid) {
            Ordering::Equal => return RealRoot::rational(mid, multiplicity),
            s if s == sign_hi => hi = mid,
            _ => lo = mid,
        }
    }
}

/// All roots `β > 0` of `p`, ascending, with multiplicities.
pub fn positive_real_roots(p: &Poly) -> Result<Vec<RealRoot>> {
    if p.is_zero() {
        return Err(QesError::ZeroPolynomial);
    }
    // strip β = 0 roots
    let first = p.coeffs().iter().position(|c| !c.is_zero()).unwrap();
    let stripped = Poly::new(p.coeffs()[first..].to_vec());
    let mut roots: Vec<RealRoot> = stripped
        .square_free_factorization()
        .into_iter()
        .flat_map(|(f, k)| isolate_square_free(&f, k))
        .collect();
    roots.sort();
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_integers(c)
    }

    #[test]
    fn linear_roots_are_exact() {
        let r = positive_real_roots(&p(&[-1, 1])).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].as_rational(), Some(&rat(1, 1)));
        let r = positive_real_roots(&Poly::new(vec![rat(9, 7), rat(-1, 7)])).unwrap();
        assert_eq!(r[0].as_rational(), Some(&rat(9, 1)));
        let r = positive_real_roots(&p(&[-7, 3])).unwrap();
        assert_eq!(r[0].as_rational(), Some(&rat(7, 3)));
    }

    #[test]
    fn negative_and_zero_roots_dropped() {
        // β (β + 2)(β − 3)
        let f = &p(&[0, 1]) * &(&p(&[2, 1]) * &p(&[-3, 1]));
        let r = positive_real_roots(&f).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].as_rational(), Some(&rat(3, 1)));
        assert!(positive_real_roots(&p(&[1, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn irrational_quadratic_enclosures() {
        // β² − 15β + 18, roots (15 ± √153)/2
        let f = p(&[18, -15, 1]);
        let r = positive_real_roots(&f).unwrap();
        assert_eq!(r.len(), 2);
        let s = 153f64.sqrt();
        for (root, expect) in r.iter().zip([(15.0 - s) / 2.0, (15.0 + s) / 2.0]) {
            let RootValue::Enclosure { lo, hi } = &root.value else {
                panic!()
            };
            assert!((hi - lo) < enclosure_width());
            assert!(f.sign_at(lo) != f.sign_at(hi));
            assert!((root.to_f64() - expect).abs() < 1e-13);
            assert!(root.is_root_of(&f));
            assert!(root.is_root_of(&(&f * &p(&[1, 1]))));
            assert!(!root.is_root_of(&p(&[-1, 1])));
        }
        assert_eq!(r[0].to_decimal(20), "1.31534156157350917526");
    }

    #[test]
    fn multiplicities() {
        // (β − 2)² (β − 1/3)³ (β² − 2)
        let a = &p(&[-2, 1]) * &p(&[-2, 1]);
        let b = Poly::new(vec![rat(-1, 3), rat(1, 1)]);
        let b3 = &(&b * &b) * &b;
        let f = &(&a * &b3) * &p(&[-2, 0, 1]);
        let r = positive_real_roots(&f).unwrap();
        let got: Vec<(f64, usize, bool)> = r
            .iter()
            .map(|x| (x.to_f64(), x.multiplicity, x.is_rational()))
            .collect();
        assert_eq!(got.len(), 3);
        assert_eq!((got[0].1, got[0].2), (3, true));
        assert!((got[1].0 - 2f64.sqrt()).abs() < 1e-15 && got[1].1 == 1 && !got[1].2);
        assert_eq!((got[2].0, got[2].1, got[2].2), (2.0, 2, true));
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(positive_real_roots(&Poly::zero()), Err(QesError::ZeroPolynomial));
        assert!(positive_real_roots(&p(&[5])).unwrap().is_empty());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(rational_to_decimal(&rat(5, 2), 10), "2.5");
        assert_eq!(rational_to_decimal(&rat(-1, 3), 5), "-0.33333");
        assert_eq!(rational_to_decimal(&rat(17, 1), 5), "17");
        assert_eq!(rational_to_decimal(&rat(-1, 10_000_000), 3), "0");
    }

    proptest! {
        #[test]
        fn recovers_planted_rational_roots(
            roots in prop::collection::btree_set((1i64..60, 1i64..7), 1..4),
        ) {
            let mut f = Poly::one();
            let mut expect: Vec<BigRational> = Vec::new();
            for &(num, den) in &roots {
                f = &f * &Poly::new(vec![rat(-num, den), rat(1, 1)]);
                expect.push(rat(num, den));
            }
            expect.sort();
            expect.dedup();
            let got = positive_real_roots(&f).unwrap();
            let got: Vec<BigRational> = got.iter().map(|r| r.as_rational().cloned().unwrap()).collect();
            prop_assert_eq!(got, expect);
        }
    }
}
