//! Nu-series `ν_Λ(z) = Σ_{x∈Λ} z^{|x|_1}`, their closed forms through the
//! weight enumerator, and the nu-function duality for Construction A.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{
    composition_count, construction_a, dual_lattice, lattice_enumerate_l1, zn_shell_counts, ConstructionALattice,
};
use crate::algebra::rational::{exact_sqrt, pow};
use crate::algebra::{IntPolynomial, Rational};
use crate::codes::LinearCode;
use crate::enumerators::{homogeneous_eval, homogeneous_eval_f64, weight_enumerator};
use crate::limits::Limits;
use crate::{Error, Result};

/// Absolute slack allowed on top of the truncation tails in float checks.
pub const NUMERIC_SLACK: f64 = 1e-9;

/// A truncated series with an upper bound on the discarded mass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTruncation {
    pub radius: usize,
    pub counts: Vec<BigInt>,
    pub value: Rational,
    pub tail_bound: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeriesTruncationF64 {
    pub radius: usize,
    pub counts: Vec<BigInt>,
    pub value: f64,
    pub tail_bound: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SeriesNumber {
    Exact(String),
    Float(f64),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub counts: Vec<String>,
    pub value: SeriesNumber,
    pub tail_bound: SeriesNumber,
}

fn count_strings(c: &[BigInt]) -> Vec<String> {
    c.iter().map(ToString::to_string).collect()
}

impl SeriesTruncation {
    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            counts: count_strings(&self.counts),
            value: SeriesNumber::Exact(self.value.to_string()),
            tail_bound: SeriesNumber::Exact(self.tail_bound.to_string()),
        }
    }
}

impl SeriesTruncationF64 {
    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            counts: count_strings(&self.counts),
            value: SeriesNumber::Float(self.value),
            tail_bound: SeriesNumber::Float(self.tail_bound),
        }
    }
}

fn require_half_open(name: &'static str, z: &Rational) -> Result<()> {
    if z.is_negative() || *z >= Rational::one() {
        return Err(Error::OutOfRange { name, value: z.to_string(), range: "[0,1)" });
    }
    Ok(())
}

fn require_binary(code: &LinearCode) -> Result<()> {
    match code.field().order() {
        2 => Ok(()),
        q => Err(Error::NotBinary(q)),
    }
}

/// `ν_{ℤ^n}(w) = ((1+w)/(1-w))^n`.
pub fn zn_nu(n: usize, w: &Rational) -> Rational {
    let one = Rational::one();
    pow(&((&one + w) / (&one - w)), n)
}

/// The grid evaluation point: `z` for `A(D)`, `√z` for `(1/2)A(D)`.
fn grid_point(lat: &ConstructionALattice, z: &Rational) -> Result<Rational> {
    if !lat.is_dual() {
        return Ok(z.clone());
    }
    exact_sqrt(z).ok_or_else(|| Error::OutOfRange {
        name: "z",
        value: z.to_string(),
        range: "rational squares (a dual lattice has half-integer norms)",
    })
}

fn sum_series(counts: &[BigInt], w: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut wm = Rational::one();
    for c in counts {
        if !c.is_zero() {
            acc += &wm * Rational::from_integer(c.clone());
        }
        wm *= w;
    }
    acc
}

/// Smallest radius whose `ℤ^n` majorant tail at `w` is at most `tol`.
fn exact_radius(n: usize, w: &Rational, tol: &Rational, limits: &Limits) -> Result<(usize, Rational)> {
    let closed = zn_nu(n, w);
    let mut partial = Rational::zero();
    let mut wm = Rational::one();
    let mut m = 0;
    loop {
        if composition_count(n, m) > BigInt::from(limits.enumeration) {
            return Err(Error::ToleranceUnreachable(tol.to_string()));
        }
        let count = zn_shell_counts_at(n, m);
        partial += &wm * Rational::from_integer(count);
        let tail = &closed - &partial;
        if tail <= *tol {
            return Ok((m, tail));
        }
        wm *= w;
        m += 1;
    }
}

fn zn_shell_counts_at(n: usize, m: usize) -> BigInt {
    // Only the last entry is needed; the formula is cheap.
    zn_shell_counts(n, m).pop().expect("nonempty")
}

/// `ν_Λ(z)` truncated where the `ℤ^n` majorant guarantees `tail ≤ tol`.
///
/// The tail bound is `ν_{ℤ^n}(w) - Σ_{m≤M} N_m(ℤ^n) w^m`, exact, with `w` the
/// grid evaluation point. It dominates the true tail since `Λ`'s grid is a
/// sublattice of `ℤ^n`.
pub fn nu_truncated(
    lat: &ConstructionALattice,
    z: &Rational,
    tol: &Rational,
    limits: &Limits,
) -> Result<SeriesTruncation> {
    require_half_open("z", z)?;
    if !tol.is_positive() {
        return Err(Error::OutOfRange { name: "tol", value: tol.to_string(), range: "(0,∞)" });
    }
    let w = grid_point(lat, z)?;
    let (radius, tail_bound) = exact_radius(lat.dimension(), &w, tol, limits)?;
    let counts = lattice_enumerate_l1(lat, radius, limits)?;
    let value = sum_series(&counts, &w);
    Ok(SeriesTruncation { radius, counts, value, tail_bound })
}

/// `ν_Λ(z)` truncated at a fixed L¹ radius, with the same majorant tail.
pub fn nu_partial_sum(
    lat: &ConstructionALattice,
    z: &Rational,
    radius: usize,
    limits: &Limits,
) -> Result<SeriesTruncation> {
    require_half_open("z", z)?;
    let w = grid_point(lat, z)?;
    let counts = lattice_enumerate_l1(lat, radius, limits)?;
    let zn = sum_series(&zn_shell_counts(lat.dimension(), radius), &w);
    let tail_bound = zn_nu(lat.dimension(), &w) - zn;
    let value = sum_series(&counts, &w);
    Ok(SeriesTruncation { radius, counts, value, tail_bound })
}

/// Float variant of [`nu_truncated`]; the tail carries a few ulps of slack
/// for the rounding in `closed - partial`.
pub fn nu_truncated_f64(lat: &ConstructionALattice, z: f64, tol: f64, limits: &Limits) -> Result<SeriesTruncationF64> {
    if !(0.0..1.0).contains(&z) {
        return Err(Error::OutOfRange { name: "z", value: z.to_string(), range: "[0,1)" });
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::OutOfRange { name: "tol", value: tol.to_string(), range: "(0,∞)" });
    }
    let n = lat.dimension();
    let w = if lat.is_dual() { z.sqrt() } else { z };
    let closed = ((1.0 + w) / (1.0 - w)).powi(n as i32);
    let slack = closed * 64.0 * f64::EPSILON;
    let mut partial = 0.0;
    let mut wm = 1.0;
    let mut m = 0;
    let tail = loop {
        if composition_count(n, m) > BigInt::from(limits.enumeration) {
            return Err(Error::ToleranceUnreachable(tol.to_string()));
        }
        partial += zn_shell_counts_at(n, m).to_f64().unwrap_or(f64::INFINITY) * wm;
        let tail = (closed - partial).max(0.0) + slack;
        if tail <= tol {
            break tail;
        }
        wm *= w;
        m += 1;
    };
    let counts = lattice_enumerate_l1(lat, m, limits)?;
    let mut value = 0.0;
    let mut wm = 1.0;
    for c in &counts {
        value += c.to_f64().unwrap_or(f64::INFINITY) * wm;
        wm *= w;
    }
    Ok(SeriesTruncationF64 { radius: m, counts, value, tail_bound: tail })
}

/// `ν_{A(C)}(z) = W_C((1+z²)/(1-z²), 2z/(1-z²))`; the first argument marks
/// even coordinates, the second odd ones.
pub fn nu_closed_form(code: &LinearCode, z: &Rational, limits: &Limits) -> Result<Rational> {
    require_binary(code)?;
    require_half_open("z", z)?;
    let w = weight_enumerator(code, limits)?;
    let one = Rational::one();
    let z2 = z * z;
    let den = &one - &z2;
    let even = (&one + &z2) / &den;
    let odd = (Rational::from_integer(2.into()) * z) / &den;
    Ok(homogeneous_eval(&w, &even, &odd))
}

pub fn nu_closed_form_f64(code: &LinearCode, z: f64, limits: &Limits) -> Result<f64> {
    require_binary(code)?;
    let w = weight_enumerator(code, limits)?;
    let den = 1.0 - z * z;
    Ok(homogeneous_eval_f64(&w, (1.0 + z * z) / den, 2.0 * z / den))
}

/// Power-series coefficients of `W_C(ν_{2ℤ}, ν_{2ℤ+1})` up to `z^M`, with
/// `ν_{2ℤ} = 1 + 2Σ z^{2k}` and `ν_{2ℤ+1} = 2Σ z^{2k+1}`.
pub fn nu_series(code: &LinearCode, radius: usize, limits: &Limits) -> Result<Vec<BigInt>> {
    require_binary(code)?;
    let w = weight_enumerator(code, limits)?;
    let two = BigInt::from(2);
    let even = IntPolynomial::new(
        (0..=radius)
            .map(|m| {
                if m == 0 {
                    BigInt::one()
                } else if m % 2 == 0 {
                    two.clone()
                } else {
                    BigInt::zero()
                }
            })
            .collect(),
    );
    let odd = IntPolynomial::new((0..=radius).map(|m| if m % 2 == 1 { two.clone() } else { BigInt::zero() }).collect());
    let n = code.len();
    let mut total = IntPolynomial::zero();
    for (i, a) in w.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let mut term = IntPolynomial::constant(a.clone());
        for _ in 0..i {
            term = term.mul_truncated(&odd, radius);
        }
        for _ in 0..n - i {
            term = term.mul_truncated(&even, radius);
        }
        total = &total + &term;
    }
    Ok((0..=radius).map(|m| total.coeff(m)).collect())
}

/// `ν_{A(C)^*}(t²)`, realized as `ν_{A(C^⊥)}(t)`.
pub fn dual_lattice_nu(code: &LinearCode, t: &Rational, limits: &Limits) -> Result<Rational> {
    nu_closed_form(&code.dual(), t, limits)
}

/// `u = tanh β` and `v = tanh α = (1-u)/(1+u)`, linked by `e^{-2β} = tanh α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterPair {
    pub u: Rational,
    pub v: Rational,
}

pub fn beta_alpha_relation(u: &Rational) -> Result<ParameterPair> {
    crate::algebra::rational::require_unit_open("u", u)?;
    let one = Rational::one();
    let v = (&one - u) / (&one + u);
    Ok(ParameterPair { u: u.clone(), v })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem3Exact {
    /// `Σ_{c ∈ C^⊥} u^{w(c)}`.
    pub lhs: Rational,
    /// `det A(C) · ((1+u)/2)^n · Σ_{c ∈ C} v^{w(c)}`.
    pub rhs: Rational,
    pub residual: Rational,
}

/// The nu-function duality with all half-integer powers cleared.
///
/// With `u = tanh β` the prefactor `(sinh 2β / 2)^{n/2} (cosh α / cosh β)^n`
/// equals `((1+u)/2)^n`, and both nu-values reduce to weight enumerators, so
/// the identity becomes a rational one. Both sides are enumerated directly.
pub fn verify_theorem3_exact(code: &LinearCode, u: &Rational, limits: &Limits) -> Result<Theorem3Exact> {
    require_binary(code)?;
    let pair = beta_alpha_relation(u)?;
    let dual = code.dual();
    let lhs = weight_enumerator(&dual, limits)?.eval(u);
    let det = construction_a(code)?.det().clone();
    let half = Rational::new(1.into(), 2.into());
    let pref = pow(&((Rational::one() + u) * half), code.len());
    let rhs = det * pref * weight_enumerator(code, limits)?.eval(&pair.v);
    let residual = &lhs - &rhs;
    Ok(Theorem3Exact { lhs, rhs, residual })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Theorem3Numeric {
    pub lhs: f64,
    pub rhs: f64,
    pub diff: f64,
    pub lhs_tail: f64,
    pub rhs_tail: f64,
    pub combined_tail: f64,
    /// Both truncations agree with their closed forms within their tails.
    pub tails_valid: bool,
    pub pass: bool,
}

/// `2^{n/2} ν_{Λ^*}(tanh²(β/2)) = det Λ · (sinh 2β)^{n/2} · ν_Λ(tanh(α/2))`
/// for `Λ = A(C)` and `e^{-2β} = tanh α`, by truncated enumeration.
pub fn verify_theorem3_numeric(code: &LinearCode, beta: f64, tol: f64, limits: &Limits) -> Result<Theorem3Numeric> {
    require_binary(code)?;
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::OutOfRange { name: "beta", value: beta.to_string(), range: "(0,∞)" });
    }
    let n = code.len() as f64;
    let lat = construction_a(code)?;
    let dual = dual_lattice(&lat)?;
    let s = (beta / 2.0).tanh();
    let alpha = (-2.0 * beta).exp().atanh();
    let r = (alpha / 2.0).tanh();

    let d = nu_truncated_f64(&dual, s * s, tol, limits)?;
    let p = nu_truncated_f64(&lat, r, tol, limits)?;
    let lhs_scale = 2f64.powf(n / 2.0);
    let rhs_scale = lat.det().to_f64().unwrap_or(f64::NAN) * (2.0 * beta).sinh().powf(n / 2.0);

    let lhs = lhs_scale * d.value;
    let rhs = rhs_scale * p.value;
    let lhs_tail = lhs_scale * d.tail_bound;
    let rhs_tail = rhs_scale * p.tail_bound;
    let combined_tail = lhs_tail + rhs_tail;
    let ok =
        |closed: f64, t: &SeriesTruncationF64| (closed - t.value).abs() <= t.tail_bound + 64.0 * f64::EPSILON * closed;
    let tails_valid =
        ok(nu_closed_form_f64(&code.dual(), s, limits)?, &d) && ok(nu_closed_form_f64(code, r, limits)?, &p);
    let diff = (lhs - rhs).abs();
    let pass = tails_valid && diff <= combined_tail + NUMERIC_SLACK;
    Ok(Theorem3Numeric { lhs, rhs, diff, lhs_tail, rhs_tail, combined_tail, tails_valid, pass })
}
