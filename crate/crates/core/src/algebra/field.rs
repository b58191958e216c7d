//! Finite fields `F_q`, `q = p^e`, in the polynomial basis.
//!
//! Elements are stored as integer labels `0..q`: the label of
//! `c_0 + c_1 ω + … + c_{e-1} ω^{e-1}` is `c_0 + c_1 p + … + c_{e-1} p^{e-1}`.
//! This is the same labelling used by the code file format.

use std::fmt;
use std::sync::Arc;

use crate::{Error, Result};

/// Fields up to this size get precomputed operation tables.
const TABLE_LIMIT: u32 = 256;
const MAX_Q: u64 = 1 << 20;

/// Irreducible moduli (low degree first, monic) for the built-in extension fields.
const BUILTIN_MODULI: &[(u32, &[u32])] = &[
    (4, &[1, 1, 1]),        // x^2 + x + 1
    (8, &[1, 1, 0, 1]),     // x^3 + x + 1
    (9, &[1, 0, 1]),        // x^2 + 1
    (16, &[1, 1, 0, 0, 1]), // x^4 + x + 1
    (25, &[2, 0, 1]),       // x^2 + 2
    (27, &[1, 2, 0, 1]),    // x^3 + 2x + 1
];

/// An element of some `F_q`, identified by its label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(pub(crate) u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn label(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    trace: Vec<u32>,
}

#[derive(Debug)]
struct Inner {
    p: u32,
    e: u32,
    q: u32,
    modulus: Option<Vec<u32>>,
    tables: Option<Tables>,
}

/// The finite field `F_q`. Cheap to clone.
#[derive(Clone, Debug)]
pub struct FieldSpec {
    inner: Arc<Inner>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.e == other.inner.e
                && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FieldSpec {}

impl FieldSpec {
    /// Builds `F_q`. Extension fields use `modulus` (coefficients low degree
    /// first) when given, otherwise the built-in table for
    /// `q ∈ {4, 8, 9, 16, 25, 27}`.
    pub fn new(q: u64, modulus: Option<&[u32]>) -> Result<FieldSpec> {
        if q < 2 {
            return Err(Error::NotPrimePower(q));
        }
        if q > MAX_Q {
            return Err(Error::FieldTooLarge(q));
        }
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let q = q as u32;
        let modulus = if e == 1 {
            None
        } else {
            let m = match modulus {
                Some(m) => normalize_modulus(m, p, e)?,
                None => BUILTIN_MODULI
                    .iter()
                    .find(|(size, _)| *size == q)
                    .map(|(_, m)| m.to_vec())
                    .ok_or(Error::MissingModulus(q as u64))?,
            };
            if !is_irreducible(&m, p) {
                return Err(Error::ReducibleModulus(m, p));
            }
            Some(m)
        };
        let mut inner = Inner { p, e, q, modulus, tables: None };
        if q <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        Ok(FieldSpec { inner: Arc::new(inner) })
    }

    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<FieldSpec> {
        let f = FieldSpec::new(p as u64, None)?;
        if f.degree() != 1 {
            return Err(Error::NotPrimePower(p as u64));
        }
        Ok(f)
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.e
    }

    pub fn order(&self) -> u32 {
        self.inner.q
    }

    pub fn modulus(&self) -> Option<&[u32]> {
        self.inner.modulus.as_deref()
    }

    pub fn element(&self, label: u64) -> Result<FieldElement> {
        if label < self.inner.q as u64 {
            Ok(FieldElement(label as u32))
        } else {
            Err(Error::NotInField(label, self.inner.q))
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.inner.q).map(FieldElement)
    }

    /// Polynomial-basis coordinates of `a`, low degree first.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        to_digits(a.0, self.inner.p, self.inner.e)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        let p = self.inner.p;
        if coeffs.len() > self.inner.e as usize || coeffs.iter().any(|&c| c >= p) {
            return Err(Error::NotInField(coeffs.iter().fold(0u64, |acc, &c| acc * p as u64 + c as u64), self.inner.q));
        }
        Ok(FieldElement(from_digits(coeffs, p)))
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.inner.tables {
            Some(t) => FieldElement(t.add[(a.0 * self.inner.q + b.0) as usize]),
            None => FieldElement(raw_add(a.0, b.0, self.inner.p, self.inner.e)),
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        match &self.inner.tables {
            Some(t) => FieldElement(t.neg[a.0 as usize]),
            None => FieldElement(raw_neg(a.0, self.inner.p, self.inner.e)),
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.inner.tables {
            Some(t) => FieldElement(t.mul[(a.0 * self.inner.q + b.0) as usize]),
            None => FieldElement(raw_mul(&self.inner, a.0, b.0)),
        }
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.inner.tables {
            Some(t) => FieldElement(t.inv[a.0 as usize]),
            None => FieldElement(raw_pow(&self.inner, a.0, self.inner.q as u64 - 2)),
        })
    }

    pub fn pow(&self, a: FieldElement, exp: u64) -> FieldElement {
        FieldElement(raw_pow(&self.inner, a.0, exp))
    }

    /// Absolute trace `Tr(a) = a + a^p + … + a^{p^{e-1}}`, as a residue mod `p`.
    #[inline]
    pub fn trace(&self, a: FieldElement) -> u32 {
        match &self.inner.tables {
            Some(t) => t.trace[a.0 as usize],
            None => raw_trace(&self.inner, a.0),
        }
    }

    /// `Tr(a·b) mod p`, the exponent of `ψ(ab)`.
    #[inline]
    pub fn trace_product(&self, a: FieldElement, b: FieldElement) -> u32 {
        self.trace(self.mul(a, b))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.inner.q)
    }
}

/// `(p, e)` with `q = p^e`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p as u32, e))
}

fn to_digits(mut label: u32, p: u32, e: u32) -> Vec<u32> {
    (0..e)
        .map(|_| {
            let d = label % p;
            label /= p;
            d
        })
        .collect()
}

fn from_digits(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn raw_add(a: u32, b: u32, p: u32, e: u32) -> u32 {
    if e == 1 {
        return (a + b) % p;
    }
    let (mut a, mut b) = (a, b);
    let mut out = 0;
    let mut place = 1;
    for _ in 0..e {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

fn raw_neg(a: u32, p: u32, e: u32) -> u32 {
    if e == 1 {
        return (p - a % p) % p;
    }
    let mut a = a;
    let mut out = 0;
    let mut place = 1;
    for _ in 0..e {
        out += ((p - a % p) % p) * place;
        a /= p;
        place *= p;
    }
    out
}

fn raw_mul(f: &Inner, a: u32, b: u32) -> u32 {
    let p = f.p as u64;
    match &f.modulus {
        None => ((a as u64 * b as u64) % p) as u32,
        Some(m) => {
            let x = to_digits(a, f.p, f.e);
            let y = to_digits(b, f.p, f.e);
            let prod = poly_mul(&x, &y, f.p);
            let r = poly_rem(&prod, m, f.p);
            let mut digits = r;
            digits.resize(f.e as usize, 0);
            from_digits(&digits, f.p)
        }
    }
}

fn raw_pow(f: &Inner, a: u32, mut exp: u64) -> u32 {
    let mut base = a;
    let mut acc = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = raw_mul(f, acc, base);
        }
        base = raw_mul(f, base, base);
        exp >>= 1;
    }
    acc
}

fn raw_trace(f: &Inner, a: u32) -> u32 {
    let mut acc = 0;
    let mut x = a;
    for _ in 0..f.e {
        acc = raw_add(acc, x, f.p, f.e);
        x = raw_pow(f, x, f.p as u64);
    }
    debug_assert!(acc < f.p, "trace must land in the prime field");
    acc
}

fn build_tables(f: &Inner) -> Tables {
    let q = f.q;
    let mut add = vec![0; (q * q) as usize];
    let mut mul = vec![0; (q * q) as usize];
    for a in 0..q {
        for b in 0..q {
            add[(a * q + b) as usize] = raw_add(a, b, f.p, f.e);
            mul[(a * q + b) as usize] = raw_mul(f, a, b);
        }
    }
    let neg = (0..q).map(|a| raw_neg(a, f.p, f.e)).collect();
    let mut inv = vec![0; q as usize];
    for a in 1..q {
        inv[a as usize] = (1..q).find(|&b| mul[(a * q + b) as usize] == 1).unwrap();
    }
    let trace = (0..q).map(|a| raw_trace(f, a)).collect();
    Tables { add, mul, neg, inv, trace }
}

fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let p = p as u64;
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

/// Remainder of `a` modulo the monic polynomial `m` over `F_p`.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap() as u64;
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            let sub = (lead * c as u64) % p as u64;
            r[shift + i] = ((r[shift + i] as u64 + p as u64 - sub) % p as u64) as u32;
        }
        r = trim(r);
    }
    r
}

fn normalize_modulus(m: &[u32], p: u32, e: u32) -> Result<Vec<u32>> {
    let m = trim(m.to_vec());
    if m.len() != e as usize + 1 || m.iter().any(|&c| c >= p) {
        return Err(Error::BadModulus(m, e, p));
    }
    let lead = *m.last().unwrap() as u64;
    // lead^{p-2} is the inverse of lead in F_p
    let mut inv = 1u64;
    for _ in 0..p - 2 {
        inv = inv * lead % p as u64;
    }
    Ok(m.iter().map(|&c| (c as u64 * inv % p as u64) as u32).collect())
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(m: &[u32], p: u32) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut divisor = to_digits(low as u32, p, d as u32);
            divisor.push(1);
            if poly_rem(m, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_has_degree_one() {
        let f = FieldSpec::new(7, None).unwrap();
        assert_eq!((f.characteristic(), f.degree(), f.order()), (7, 1, 7));
        assert!(f.modulus().is_none());
    }

    #[test]
    fn f4_uses_the_only_irreducible_quadratic() {
        let f = FieldSpec::new(4, None).unwrap();
        assert_eq!(f.modulus(), Some(&[1, 1, 1][..]));
        let w = f.element(2).unwrap();
        // ω·ω = ω + 1
        assert_eq!(f.mul(w, w), f.element(3).unwrap());
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert_eq!(FieldSpec::new(6, None).unwrap_err(), Error::NotPrimePower(6));
        assert_eq!(FieldSpec::new(12, None).unwrap_err(), Error::NotPrimePower(12));
        assert!(FieldSpec::new(1, None).is_err());
    }

    #[test]
    fn rejects_reducible_modulus() {
        // x^2 + 1 = (x + 1)^2 over F_2
        assert!(matches!(FieldSpec::new(4, Some(&[1, 0, 1])), Err(Error::ReducibleModulus(..))));
        // x^2 + x + 1 has root 1 over F_3
        assert!(matches!(FieldSpec::new(9, Some(&[1, 1, 1])), Err(Error::ReducibleModulus(..))));
    }

    #[test]
    fn user_modulus_is_made_monic() {
        // 2x^2 + 2 ~ x^2 + 1 over F_3
        let f = FieldSpec::new(9, Some(&[2, 0, 2])).unwrap();
        assert_eq!(f.modulus(), Some(&[1, 0, 1][..]));
    }

    #[test]
    fn missing_modulus_for_unlisted_extension() {
        assert_eq!(FieldSpec::new(32, None).unwrap_err(), Error::MissingModulus(32));
        assert!(FieldSpec::new(32, Some(&[1, 0, 1, 0, 0, 1])).is_ok());
    }

    #[test]
    fn small_arithmetic() {
        let f3 = FieldSpec::new(3, None).unwrap();
        assert_eq!(f3.add(FieldElement(2), FieldElement(2)), FieldElement(1));
        let f5 = FieldSpec::new(5, None).unwrap();
        assert_eq!(f5.inv(FieldElement(3)).unwrap(), FieldElement(2));
        assert_eq!(f5.inv(FieldElement(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn traces() {
        let f3 = FieldSpec::new(3, None).unwrap();
        assert_eq!(f3.trace(FieldElement(2)), 2);
        let f4 = FieldSpec::new(4, None).unwrap();
        assert_eq!(f4.trace(FieldElement(2)), 1);
        // F_9 = F_3[i], i^2 = -1; label 3 is i
        let f9 = FieldSpec::new(9, None).unwrap();
        assert_eq!(f9.trace(FieldElement(3)), 0);
    }

    #[test]
    fn table_free_path_matches_tables() {
        // 2^9 is above the table limit
        let big = FieldSpec::new(512, Some(&[1, 0, 0, 0, 1, 0, 0, 0, 0, 1])).unwrap();
        assert!(big.inner.tables.is_none());
        for a in (1..512).step_by(37) {
            let a = FieldElement(a);
            let inv = big.inv(a).unwrap();
            assert_eq!(big.mul(a, inv), FieldElement::ONE);
            assert_eq!(big.add(a, big.neg(a)), FieldElement::ZERO);
            assert!(big.trace(a) < 2);
        }
        // F_13 with tables vs a direct computation
        let f13 = FieldSpec::new(13, None).unwrap();
        for a in 0..13 {
            for b in 0..13 {
                assert_eq!(f13.mul(FieldElement(a), FieldElement(b)).0, a * b % 13);
            }
        }
    }

    #[test]
    fn coefficient_roundtrip() {
        let f = FieldSpec::new(27, None).unwrap();
        for a in f.elements() {
            assert_eq!(f.from_coeffs(&f.coeffs(a)).unwrap(), a);
        }
        assert!(f.from_coeffs(&[3]).is_err());
    }
}
