//! Exact univariate polynomials in the deformation variable `q`.
//!
//! Coefficients are arbitrary-precision rationals so the combinatorial
//! quantities built from them (inversion sums, crossing sums, q-factorials)
//! are exact and can serve as ground truth for floating-point code.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Polynomial in `q` with exact rational coefficients.
///
/// `coeffs[m]` holds the coefficient of `q^m`; trailing zeros are trimmed so
/// equality of values coincides with structural equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        QPoly::from_coeffs(vec![BigRational::from_integer(BigInt::from(c))])
    }

    /// The monomial `q^m`.
    pub fn monomial(m: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); m + 1];
        coeffs[m] = BigRational::one();
        QPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = QPoly { coeffs };
        p.normalize();
        p
    }

    /// Integer coefficients, index `m` holding the coefficient of `q^m`.
    pub fn from_integer_coeffs(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `q^m` (zero beyond the stored degree).
    pub fn coeff(&self, m: usize) -> BigRational {
        self.coeffs.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Horner evaluation at a numeric point.
    pub fn eval(&self, q: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| {
            acc * q + c.to_f64().expect("rational out of f64 range")
        })
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(&self, q: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * q + c)
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|m| self.coeff(m) + rhs.coeff(m)).collect();
        QPoly::from_coeffs(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|m| self.coeff(m) - rhs.coeff(m)).collect();
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let lead = first;
            if first {
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = if lead || !c.is_negative() { c.clone() } else { -c };
            match m {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if m == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{m}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = QPoly::from_integer_coeffs(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p, QPoly::from_integer_coeffs(&[1, 2]));
    }

    #[test]
    fn arithmetic_is_exact() {
        let p = QPoly::from_integer_coeffs(&[1, 1]); // 1 + q
        let r = QPoly::from_integer_coeffs(&[1, 1, 1]); // 1 + q + q^2
        assert_eq!(&p * &r, QPoly::from_integer_coeffs(&[1, 2, 2, 1]));
        assert_eq!(&(&p + &r) - &r, p);
    }

    #[test]
    fn eval_matches_coefficients() {
        let p = QPoly::from_integer_coeffs(&[2, 0, 1]); // 2 + q^2
        assert_eq!(p.eval(0.5), 2.25);
        assert_eq!(p.eval(-1.0), 3.0);
    }

    #[test]
    fn display_is_readable() {
        let p = QPoly::from_integer_coeffs(&[5, 6, 3, 1]);
        assert_eq!(p.to_string(), "5 + 6*q + 3*q^2 + q^3");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::from_integer_coeffs(&[0, -1]).to_string(), "-1*q");
    }
}
