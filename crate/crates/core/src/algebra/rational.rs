//! Helpers around `BigRational`: parsing, bounds checks, exact roots.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

pub type Rational = BigRational;

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Parses `p/q`, an integer, or a finite decimal such as `0.125`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::ParseRational(s.to_string());
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let neg = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        let whole: BigInt =
            if whole_digits.is_empty() { BigInt::zero() } else { whole_digits.parse().map_err(|_| err())? };
        let frac_val: BigInt = frac.parse().map_err(|_| err())?;
        let scale = BigInt::from(10).pow(frac.len() as u32);
        let mag = Rational::new(whole * &scale + frac_val, scale);
        return Ok(if neg { -mag } else { mag });
    }
    let n: BigInt = t.parse().map_err(|_| err())?;
    Ok(Rational::from_integer(n))
}

/// Fails unless `lo < x < hi`.
pub fn require_open(name: &'static str, x: &Rational, lo: &Rational, hi: &Rational, range: &'static str) -> Result<()> {
    if x > lo && x < hi {
        Ok(())
    } else {
        Err(Error::OutOfRange { name, value: x.to_string(), range })
    }
}

/// Requires `0 < z < 1`.
pub fn require_unit_open(name: &'static str, z: &Rational) -> Result<()> {
    require_open(name, z, &Rational::zero(), &Rational::one(), "(0,1)")
}

pub fn pow(x: &Rational, e: usize) -> Rational {
    Pow::pow(x, e as u32)
}

/// Exact square root of a rational, if it has one.
pub fn exact_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().magnitude();
    let d = x.denom().magnitude();
    let rn = n.sqrt();
    let rd = d.sqrt();
    (&rn * &rn == *n && &rd * &rd == *d).then(|| Rational::new(BigInt::from(rn), BigInt::from(rd)))
}

/// Largest `a / 2^bits` with `(a / 2^bits)^n ≤ x`, for `x ≥ 0`.
///
/// The result never exceeds the real `n`-th root, so quantities bounded from
/// below by the root stay valid.
pub fn nth_root_floor(x: &Rational, n: u32, bits: u32) -> Rational {
    assert!(n >= 1);
    assert!(!x.is_negative(), "n-th root of a negative number");
    if x.is_zero() {
        return Rational::zero();
    }
    let scale = BigUint::one() << bits;
    // a^n · den ≤ num · 2^{bits·n}
    let num = x.numer().magnitude() * Pow::pow(&scale, n);
    let den = x.denom().magnitude();
    let fits = |a: &BigUint| Pow::pow(a, n) * den <= num;
    let mut lo = BigUint::zero();
    let mut hi = BigUint::one();
    while fits(&hi) {
        lo = hi.clone();
        hi <<= 1;
    }
    while &hi - &lo > BigUint::one() {
        let mid = (&lo + &hi) >> 1;
        if fits(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Rational::new(BigInt::from(lo), BigInt::from(scale))
}

/// Lossy conversion for display and numeric comparisons.
pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// The exact binary value of a finite `f64`.
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_forms() {
        assert_eq!(parse_rational("1/3").unwrap(), ratio(1, 3));
        assert_eq!(parse_rational("4/8").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(parse_rational("0.125").unwrap(), ratio(1, 8));
        assert_eq!(parse_rational("-.5").unwrap(), ratio(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1e-3").is_err());
    }

    #[test]
    fn root_floor_is_exact_when_representable() {
        assert_eq!(nth_root_floor(&ratio(3, 2), 1, 64), ratio(3, 2));
        assert_eq!(nth_root_floor(&int(9), 2, 64), int(3));
        assert_eq!(nth_root_floor(&ratio(1, 8), 3, 64), ratio(1, 2));
    }

    #[test]
    fn root_floor_never_overshoots() {
        for (num, den, n) in [(2, 1, 2), (10, 3, 3), (5, 7, 4), (1000, 1, 5)] {
            let x = ratio(num, den);
            let r = nth_root_floor(&x, n, 64);
            assert!(pow(&r, n as usize) <= x);
            let step = Rational::new(1.into(), BigInt::one() << 64);
            assert!(pow(&(r + step), n as usize) > x);
        }
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(exact_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(exact_sqrt(&ratio(1, 2)), None);
    }
}
