//! q-Hermite orthogonal polynomials from the three-term recursion.

use super::pairing::q_integer;
use super::poly::QPoly;

/// A polynomial in `x` whose coefficients are exact polynomials in `q`.
///
/// `coeffs[m]` is the coefficient of `x^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XPoly {
    coeffs: Vec<QPoly>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        XPoly {
            coeffs: vec![QPoly::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<QPoly>) -> Self {
        let mut p = XPoly { coeffs };
        while p.coeffs.last().is_some_and(QPoly::is_zero) {
            p.coeffs.pop();
        }
        p
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^m`.
    pub fn coeff(&self, m: usize) -> QPoly {
        self.coeffs.get(m).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    /// Multiply by `x` (shift all powers up by one).
    pub fn times_x(&self) -> XPoly {
        if self.coeffs.is_empty() {
            return XPoly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(QPoly::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        XPoly { coeffs }
    }

    /// Scale every coefficient by a fixed polynomial in `q`.
    pub fn scale(&self, s: &QPoly) -> XPoly {
        XPoly::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn sub(&self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::from_coeffs((0..n).map(|m| &self.coeff(m) - &rhs.coeff(m)).collect())
    }

    /// Numeric coefficients of the powers of `x` after evaluating `q`.
    pub fn eval_q(&self, q: f64) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.eval(q)).collect()
    }
}

/// The n-th q-Hermite polynomial, monic of degree `n`, generated by
/// `H_0 = 1`, `H_1 = x`, `x H_n = H_{n+1} + [n]_q H_{n-1}`.
pub fn q_hermite(n: usize) -> XPoly {
    let mut prev = XPoly::one();
    if n == 0 {
        return prev;
    }
    let mut cur = XPoly::from_coeffs(vec![QPoly::zero(), QPoly::one()]);
    for m in 1..n {
        let next = cur.times_x().sub(&prev.scale(&q_integer(m)));
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_cases() {
        assert_eq!(q_hermite(0), XPoly::one());
        assert_eq!(
            q_hermite(1),
            XPoly::from_coeffs(vec![QPoly::zero(), QPoly::one()])
        );
    }

    #[test]
    fn degree_two_and_three() {
        // H_2 = x^2 - 1
        assert_eq!(
            q_hermite(2),
            XPoly::from_coeffs(vec![QPoly::constant(-1), QPoly::zero(), QPoly::one()])
        );
        // H_3 = x^3 - (2 + q) x
        assert_eq!(
            q_hermite(3),
            XPoly::from_coeffs(vec![
                QPoly::zero(),
                QPoly::from_integer_coeffs(&[-2, -1]),
                QPoly::zero(),
                QPoly::one(),
            ])
        );
    }

    #[test]
    fn recursion_holds_exactly() {
        for n in 1..=10usize {
            let lhs = q_hermite(n).times_x();
            let rhs = q_hermite(n + 1).sub(&q_hermite(n - 1).scale(&-&q_integer(n)));
            assert_eq!(lhs, rhs, "x H_{n} = H_{} + [{n}]_q H_{}", n + 1, n - 1);
        }
    }

    #[test]
    fn monic_of_correct_degree() {
        for n in 0..=10usize {
            let h = q_hermite(n);
            assert_eq!(h.degree(), Some(n));
            assert_eq!(h.coeff(n), QPoly::one());
        }
    }
}
