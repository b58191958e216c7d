//! Exact elements of `R[ζ_p]` for `R = ℤ` or `ℚ`.
//!
//! A value is a coefficient vector `c_0 + c_1 ζ + … + c_{p-1} ζ^{p-1}` kept in
//! canonical form with `c_{p-1} = 0` (using `ζ^{p-1} = -(1 + ζ + … + ζ^{p-2})`).
//! The canonical form is unique, so `==` decides equality exactly.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, ToPrimitive, Zero};

use super::field::{FieldElement, FieldSpec};
use crate::{Error, Result};

/// Coefficient ring of a cyclotomic value.
pub trait Scalar:
    Clone + PartialEq + fmt::Debug + Num + Neg<Output = Self> + for<'a> AddAssign<&'a Self> + for<'a> SubAssign<&'a Self>
{
}

impl<T> Scalar for T where
    T: Clone + PartialEq + fmt::Debug + Num + Neg<Output = T> + for<'a> AddAssign<&'a T> + for<'a> SubAssign<&'a T>
{
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclotomic<T> {
    p: u32,
    c: Vec<T>,
}

/// A value of `ℤ[ζ_p]`, the home of character sums.
pub type CyclotomicInteger = Cyclotomic<BigInt>;
/// A value of `ℚ[ζ_p]`, used for function tables with rational parameters.
pub type CyclotomicRational = Cyclotomic<BigRational>;

impl<T: Scalar> Cyclotomic<T> {
    pub fn zero(p: u32) -> Self {
        assert!(p >= 2, "cyclotomic order must be at least 2");
        Cyclotomic { p, c: vec![T::zero(); p as usize] }
    }

    pub fn one(p: u32) -> Self {
        Self::from_scalar(p, T::one())
    }

    pub fn from_scalar(p: u32, s: T) -> Self {
        let mut out = Self::zero(p);
        out.c[0] = s;
        out
    }

    /// `ζ_p^k` in canonical form.
    pub fn zeta_pow(p: u32, k: u64) -> Self {
        let mut out = Self::zero(p);
        out.c[(k % p as u64) as usize] = T::one();
        out.reduce_in_place();
        out
    }

    /// `Σ c_i ζ^i` for an arbitrary coefficient list; indices wrap mod `p`.
    pub fn from_coeffs(p: u32, coeffs: Vec<T>) -> Self {
        let mut out = Self::zero(p);
        for (i, c) in coeffs.into_iter().enumerate() {
            out.c[i % p as usize] += &c;
        }
        out.reduce_in_place();
        out
    }

    pub fn order(&self) -> u32 {
        self.p
    }

    /// Canonical coefficients `c_0..c_{p-1}` (the last is always zero).
    pub fn coeffs(&self) -> &[T] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// The rational/integer value when `self` lies in the base ring.
    pub fn as_scalar(&self) -> Option<&T> {
        self.c[1..].iter().all(Zero::is_zero).then(|| &self.c[0])
    }

    fn reduce_in_place(&mut self) {
        let last = self.p as usize - 1;
        if self.c[last].is_zero() {
            return;
        }
        let top = std::mem::replace(&mut self.c[last], T::zero());
        for x in &mut self.c[..last] {
            *x -= &top;
        }
    }

    /// Canonical form of `self` (values are always stored reduced).
    pub fn reduce(&self) -> Self {
        let mut out = self.clone();
        out.reduce_in_place();
        out
    }

    /// `self · ζ^k`, a rotation of coefficients.
    pub fn mul_zeta(&self, k: u32) -> Self {
        let p = self.p as usize;
        let k = k as usize % p;
        if k == 0 {
            return self.clone();
        }
        let mut c = vec![T::zero(); p];
        for (i, x) in self.c.iter().enumerate() {
            c[(i + k) % p] = x.clone();
        }
        let mut out = Cyclotomic { p: self.p, c };
        out.reduce_in_place();
        out
    }

    /// `self += other · ζ^k` without allocating an intermediate.
    pub fn add_assign_rotated(&mut self, other: &Self, k: u32) {
        assert_eq!(self.p, other.p, "mixed cyclotomic orders");
        let p = self.p as usize;
        let k = k as usize % p;
        for (i, x) in other.c.iter().enumerate() {
            if !x.is_zero() {
                self.c[(i + k) % p] += x;
            }
        }
        self.reduce_in_place();
    }

    /// Nonzero coefficients as `(exponent, value)` pairs.
    pub(crate) fn sparse(&self) -> Vec<(u32, T)> {
        (0..self.p).zip(&self.c).filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
    }

    /// `Σ_j v_j ζ^{k_j}` for sparse `v_j`, reduced once at the end.
    pub(crate) fn sum_rotated<'a>(p: u32, terms: impl IntoIterator<Item = (&'a [(u32, T)], u32)>) -> Self
    where
        T: 'a,
    {
        let mut out = Self::zero(p);
        for (v, k) in terms {
            for (i, x) in v {
                out.c[((i + k) % p) as usize] += x;
            }
        }
        out.reduce_in_place();
        out
    }

    pub fn scale(&self, s: &T) -> Self {
        Cyclotomic { p: self.p, c: self.c.iter().map(|x| x.clone() * s.clone()).collect() }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let mut out = self.clone();
        for (x, y) in out.c.iter_mut().zip(&other.c) {
            *x += y;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let mut out = self.clone();
        for (x, y) in out.c.iter_mut().zip(&other.c) {
            *x -= y;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let p = self.p as usize;
        let mut c = vec![T::zero(); p];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.c.iter().enumerate() {
                if !y.is_zero() {
                    c[(i + j) % p] += &(x.clone() * y.clone());
                }
            }
        }
        let mut out = Cyclotomic { p: self.p, c };
        out.reduce_in_place();
        Ok(out)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Cyclotomic<U> {
        Cyclotomic { p: self.p, c: self.c.iter().map(f).collect() }
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::MixedCyclotomicOrder(self.p, other.p))
        }
    }
}

impl<T: Scalar + ToPrimitive> Cyclotomic<T> {
    /// Numerical value with `ζ_p = exp(2πi/p)`. Display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let step = std::f64::consts::TAU / self.p as f64;
        self.c.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, x)| {
            let v = x.to_f64().unwrap_or(f64::NAN);
            let angle = step * k as f64;
            (re + v * angle.cos(), im + v * angle.sin())
        })
    }
}

impl CyclotomicInteger {
    pub fn to_rational(&self) -> CyclotomicRational {
        self.map(|x| BigRational::from_integer(x.clone()))
    }
}

impl<T: Scalar> Add for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn add(self, rhs: Self) -> Cyclotomic<T> {
        self.checked_add(rhs).expect("mixed cyclotomic orders")
    }
}

impl<T: Scalar> Sub for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn sub(self, rhs: Self) -> Cyclotomic<T> {
        self.checked_sub(rhs).expect("mixed cyclotomic orders")
    }
}

impl<T: Scalar> Mul for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn mul(self, rhs: Self) -> Cyclotomic<T> {
        self.checked_mul(rhs).expect("mixed cyclotomic orders")
    }
}

impl<T: Scalar> Neg for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn neg(self) -> Cyclotomic<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: Scalar> AddAssign<&Cyclotomic<T>> for Cyclotomic<T> {
    fn add_assign(&mut self, rhs: &Cyclotomic<T>) {
        self.add_assign_rotated(rhs, 0);
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Cyclotomic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(s) = self.as_scalar() {
            return write!(f, "{s}");
        }
        let mut first = true;
        for (k, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{x}")?,
                _ if x.is_one() => write!(f, "z{}^{k}", self.p)?,
                _ => write!(f, "({x})*z{}^{k}", self.p)?,
            }
        }
        Ok(())
    }
}

/// The additive character `ψ(a) = ζ_p^{Tr(a)}` of `F_q`.
pub fn additive_character(field: &FieldSpec, a: FieldElement) -> CyclotomicInteger {
    Cyclotomic::zeta_pow(field.characteristic(), field.trace(a) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(p: u32, c: &[i64]) -> CyclotomicInteger {
        Cyclotomic::from_coeffs(p, c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn full_root_sum_reduces_to_zero() {
        assert!(int(3, &[1, 1, 1]).is_zero());
        assert!(int(5, &[1, 1, 1, 1, 1]).is_zero());
        assert!(!int(5, &[1, 1, 1, 1]).is_zero());
    }

    #[test]
    fn zeta_two_squared_is_one() {
        let z = CyclotomicInteger::zeta_pow(2, 1);
        assert_eq!(z.as_scalar(), Some(&BigInt::from(-1)));
        assert_eq!(&z * &z, CyclotomicInteger::one(2));
    }

    #[test]
    fn zeta_three_to_complex() {
        let (re, im) = CyclotomicInteger::zeta_pow(3, 1).to_complex();
        assert!((re + 0.5).abs() < 1e-12);
        assert!((im - 0.866_025_403_784_438_6).abs() < 1e-12);
    }

    #[test]
    fn canonical_form_has_zero_top_coefficient() {
        let x = int(7, &[3, 0, 0, 0, 0, 0, 5]);
        assert!(x.coeffs()[6].is_zero());
        assert_eq!(x.coeffs()[0], BigInt::from(-2));
        assert_eq!(x.coeffs()[1], BigInt::from(-5));
    }

    #[test]
    fn mixed_orders_are_rejected() {
        let a = CyclotomicInteger::one(3);
        let b = CyclotomicInteger::one(5);
        assert_eq!(a.checked_mul(&b), Err(Error::MixedCyclotomicOrder(3, 5)));
        assert!(a.checked_add(&b).is_err());
    }

    #[test]
    fn mul_zeta_matches_multiplication() {
        let x = int(5, &[1, -2, 3, 0, 4]);
        for k in 0..7 {
            assert_eq!(x.mul_zeta(k), &x * &CyclotomicInteger::zeta_pow(5, k as u64));
        }
    }

    #[test]
    fn character_basics() {
        let f2 = FieldSpec::new(2, None).unwrap();
        assert_eq!(additive_character(&f2, FieldElement(0)), CyclotomicInteger::one(2));
        assert_eq!(additive_character(&f2, FieldElement(1)).as_scalar(), Some(&BigInt::from(-1)));
        let f3 = FieldSpec::new(3, None).unwrap();
        let total = f3.elements().fold(CyclotomicInteger::zero(3), |acc, a| &acc + &additive_character(&f3, a));
        assert!(total.is_zero());
    }
}
