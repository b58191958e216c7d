use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// lowest degree first, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `a + b z`
    pub fn linear(a: BigInt, b: BigInt) -> Self {
        Self::new(vec![a, b])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn pow(&self, mut exp: usize) -> Self {
        let mut base = self.clone();
        let mut acc = IntPolynomial::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Product truncated to degree `≤ max_degree` (formal power series).
    pub fn mul_truncated(&self, other: &Self, max_degree: usize) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let len = (self.coeffs.len() + other.coeffs.len() - 1).min(max_degree + 1);
        let mut out = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn truncate(&self, max_degree: usize) -> Self {
        Self::new(self.coeffs.iter().take(max_degree + 1).cloned().collect())
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, z: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * z + BigRational::from_integer(c.clone()))
    }

    pub fn eval_f64(&self, z: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * z + c.to_f64().unwrap_or(f64::NAN))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: Self) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: Self) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: Self) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let max = self.coeffs.len() + rhs.coeffs.len() - 2;
        self.mul_truncated(rhs, max)
    }
}

/// Renders as `1+3z^2`, lowest degree first.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if !first || neg {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            first = false;
            let mag = c.abs();
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(IntPolynomial::from_i64(&[1, 0, 3]).to_string(), "1+3z^2");
        assert_eq!(IntPolynomial::from_i64(&[1, 0, 0, 1]).to_string(), "1+z^3");
        assert_eq!(IntPolynomial::from_i64(&[1, -1]).to_string(), "1-z");
        assert_eq!(IntPolynomial::from_i64(&[0, 2]).to_string(), "2z");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn binomial_powers() {
        let p = IntPolynomial::from_i64(&[1, 1]).pow(4);
        assert_eq!(p, IntPolynomial::from_i64(&[1, 4, 6, 4, 1]));
        assert_eq!(IntPolynomial::from_i64(&[1, -1]).pow(0), IntPolynomial::one());
    }

    #[test]
    fn trimming_and_truncation() {
        let p = IntPolynomial::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        let q = IntPolynomial::from_i64(&[1, 1]).pow(5).truncate(2);
        assert_eq!(q, IntPolynomial::from_i64(&[1, 5, 10]));
        let a = IntPolynomial::from_i64(&[1, 1, 1]);
        assert_eq!(a.mul_truncated(&a, 1), IntPolynomial::from_i64(&[1, 2]));
    }

    #[test]
    fn rational_eval() {
        let p = IntPolynomial::from_i64(&[1, 0, 0, 1]);
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(p.eval(&half), BigRational::new(9.into(), 8.into()));
    }
}
