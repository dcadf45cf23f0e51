//! Dense univariate polynomials with `f64` coefficients.
//!
//! Used for exact symbolic work at desk scale: manufactured forcings (apply
//! the continuous operator to a polynomial solution), and trial functions for
//! constant estimation. Coefficients are stored lowest degree first.

/// Polynomial `c[0] + c[1] x + c[2] x^2 + ...`.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    coeffs: Vec<f64>,
}

impl Poly {
    pub fn new(coeffs: Vec<f64>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: f64) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly {
            coeffs: vec![0.0, 1.0],
        }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(&c) if c == 0.0) {
            self.coeffs.pop();
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![0.0; n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Poly::new(coeffs)
    }

    pub fn scale(&self, s: f64) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }

    pub fn powi(&self, k: usize) -> Poly {
        let mut acc = Poly::constant(1.0);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| i as f64 * c)
                .collect(),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Poly {
        let mut p = self.clone();
        for _ in 0..n {
            p = p.derivative();
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn eval_and_arith() {
        // (1 + x)^2 = 1 + 2x + x^2
        let p = Poly::new(vec![1.0, 1.0]).powi(2);
        assert_eq!(p.coeffs(), &[1.0, 2.0, 1.0]);
        assert_relative_eq!(p.eval(2.0), 9.0);
        assert_eq!(p.degree(), Some(2));

        let q = p.add(&Poly::new(vec![0.0, 0.0, -1.0]));
        assert_eq!(q.coeffs(), &[1.0, 2.0]);
    }

    #[test]
    fn derivative_chain() {
        // d^3/dx^3 of x^3 = 6
        let p = Poly::x().powi(3);
        assert_eq!(p.nth_derivative(3).coeffs(), &[6.0]);
        assert!(p.nth_derivative(4).is_zero());
    }

    #[test]
    fn zero_handling() {
        let z = Poly::new(vec![0.0, 0.0]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.eval(3.0), 0.0);
        assert!(z.mul(&Poly::x()).is_zero());
    }
}
