//! Weight enumerators and the MacWilliams transform, for single codes and
//! for `m`-tuples under the effective-length weight.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{IntPolynomial, Rational};
use crate::codes::{hamming_weight, CodeTuple, LinearCode, WordList};
use crate::limits::Limits;
use crate::{Error, Result};

/// Bookkeeping carried alongside an enumerator when its origin is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumeratorMeta {
    /// `q^m`, the alphabet size seen by the effective-length weight.
    pub q_effective: BigInt,
    /// Number of words counted.
    pub set_size: BigInt,
}

/// `W(z) = Σ_{i=0}^{n} A_i z^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    n: usize,
    coeffs: Vec<BigInt>,
    meta: Option<EnumeratorMeta>,
}

impl WeightEnumerator {
    /// Builds from `A_0..A_n`; missing high coefficients are zero.
    pub fn new(n: usize, mut coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() > n + 1 && coeffs[n + 1..].iter().any(|c| !c.is_zero()) {
            return Err(Error::ShapeMismatch(format!("enumerator has degree above n = {n}")));
        }
        coeffs.resize(n + 1, BigInt::zero());
        Ok(WeightEnumerator { n, coeffs, meta: None })
    }

    pub fn from_counts(n: usize, counts: &[u64]) -> Self {
        Self::new(n, counts.iter().map(|&c| BigInt::from(c)).collect()).expect("counts fit")
    }

    pub fn with_meta(mut self, q_effective: BigInt, set_size: BigInt) -> Self {
        self.meta = Some(EnumeratorMeta { q_effective, set_size });
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `A_0..A_n`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn meta(&self) -> Option<&EnumeratorMeta> {
        self.meta.as_ref()
    }

    /// `Σ A_i`, the number of words counted.
    pub fn total(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Smallest nonzero weight present, if any.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        self.coeffs.iter().enumerate().skip(1).find(|(_, c)| !c.is_zero()).map(|(i, _)| i)
    }

    pub fn polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.clone())
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        self.polynomial().eval(z)
    }

    /// Coefficients only; metadata is ignored.
    pub fn same_coefficients(&self, other: &Self) -> bool {
        self.n == other.n && self.coeffs == other.coeffs
    }

    pub fn to_json(&self) -> EnumeratorJson {
        EnumeratorJson { n: self.n, coeffs: self.coeffs.iter().map(ToString::to_string).collect() }
    }

    pub fn from_json(json: &EnumeratorJson) -> Result<Self> {
        let coeffs = json
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(|_| Error::ParseRational(s.clone())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(json.n, coeffs)
    }
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.polynomial().fmt(f)
    }
}

/// Serialized enumerator; big integers travel as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumeratorJson {
    pub n: usize,
    pub coeffs: Vec<String>,
}

/// `A_i = #{x ∈ C : w(x) = i}` by enumerating `C`.
pub fn weight_enumerator(code: &LinearCode, limits: &Limits) -> Result<WeightEnumerator> {
    let mut counts = vec![0u64; code.len() + 1];
    for w in code.codewords(limits)? {
        counts[hamming_weight(&w)] += 1;
    }
    Ok(WeightEnumerator::from_counts(code.len(), &counts).with_meta(code.field().order().into(), code.size()))
}

/// Enumerator of an explicit word list (no linearity assumed).
pub fn word_list_enumerator(words: &WordList) -> WeightEnumerator {
    let mut counts = vec![0u64; words.n + 1];
    for w in &words.words {
        counts[hamming_weight(w)] += 1;
    }
    WeightEnumerator::from_counts(words.n, &counts)
        .with_meta(words.field.order().into(), BigInt::from(words.words.len()))
}

/// Support of a word as a bitset over coordinates.
fn support(w: &[crate::algebra::FieldElement]) -> Vec<u64> {
    let mut bits = vec![0u64; w.len().div_ceil(64)];
    for (j, x) in w.iter().enumerate() {
        if !x.is_zero() {
            bits[j / 64] |= 1 << (j % 64);
        }
    }
    bits
}

/// `A_i = #{x ∈ C̲ : ew(x) = i}`.
///
/// A column of `x` is nonzero exactly when some row is nonzero there, so the
/// column support of `x` is the union of its row supports. Each code is
/// enumerated once into a histogram of supports and the histograms are
/// combined under union; every element of `C̲` is still counted individually.
pub fn effective_length_enumerator(tuple: &CodeTuple, limits: &Limits) -> Result<WeightEnumerator> {
    limits.check_enumeration(tuple.size_u64())?;
    let n = tuple.n();
    let mut acc: HashMap<Vec<u64>, u64> = HashMap::from([(vec![0u64; n.div_ceil(64)], 1)]);
    for code in tuple.codes() {
        let mut hist: HashMap<Vec<u64>, u64> = HashMap::new();
        for w in code.codewords(limits)? {
            *hist.entry(support(&w)).or_default() += 1;
        }
        let mut next: HashMap<Vec<u64>, u64> = HashMap::with_capacity(acc.len());
        for (a, ca) in &acc {
            for (b, cb) in &hist {
                let union: Vec<u64> = a.iter().zip(b).map(|(x, y)| x | y).collect();
                *next.entry(union).or_default() += ca * cb;
            }
        }
        acc = next;
    }
    let mut counts = vec![0u64; n + 1];
    for (s, c) in acc {
        let w: u32 = s.iter().map(|x| x.count_ones()).sum();
        counts[w as usize] += c;
    }
    let q_eff = BigInt::from(tuple.field().order()).pow(tuple.m() as u32);
    Ok(WeightEnumerator::from_counts(n, &counts).with_meta(q_eff, tuple.size()))
}

/// `(1/size) Σ_i A_i (1-z)^i (1+(q_eff-1)z)^{n-i}`.
///
/// This is `(1/size)(1+(q_eff-1)z)^n W((1-z)/(1+(q_eff-1)z))` with the
/// denominators cleared, so everything stays in integer polynomials. A
/// coefficient not divisible by `size` means the input did not come from a
/// linear code (or tuple) of that size.
pub fn macwilliams_transform(
    w: &WeightEnumerator,
    n: usize,
    q_eff: &BigInt,
    size: &BigInt,
) -> Result<WeightEnumerator> {
    if *q_eff < BigInt::from(2) {
        return Err(Error::OutOfRange { name: "q_eff", value: q_eff.to_string(), range: "[2, ∞)" });
    }
    if size <= &BigInt::zero() {
        return Err(Error::OutOfRange { name: "size", value: size.to_string(), range: "[1, ∞)" });
    }
    if w.n() > n {
        return Err(Error::ShapeMismatch(format!("enumerator length {} exceeds n = {n}", w.n())));
    }
    let one_minus = IntPolynomial::linear(BigInt::one(), -BigInt::one());
    let one_plus = IntPolynomial::linear(BigInt::one(), q_eff - BigInt::one());
    let mut minus_pows = vec![IntPolynomial::one()];
    let mut plus_pows = vec![IntPolynomial::one()];
    for i in 1..=n {
        minus_pows.push(&minus_pows[i - 1] * &one_minus);
        plus_pows.push(&plus_pows[i - 1] * &one_plus);
    }
    let mut total = IntPolynomial::zero();
    for (i, a) in w.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let term = (&minus_pows[i] * &plus_pows[n - i]).scale(a);
        total = &total + &term;
    }
    let mut coeffs = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let (quot, rem) = total.coeff(i).div_rem(size);
        if !rem.is_zero() {
            return Err(Error::NonIntegerTransform { index: i, divisor: size.to_string() });
        }
        coeffs.push(quot);
    }
    let space = q_eff.pow(n as u32);
    let image_size = &space / size;
    Ok(WeightEnumerator::new(n, coeffs)?.with_meta(q_eff.clone(), image_size))
}

/// Transform using the enumerator's own metadata.
pub fn macwilliams_dual(w: &WeightEnumerator) -> Result<WeightEnumerator> {
    let meta = w.meta().ok_or_else(|| Error::ShapeMismatch("enumerator carries no (q_eff, size) metadata".into()))?;
    macwilliams_transform(w, w.n(), &meta.q_effective, &meta.set_size)
}

/// `W(z_1 = Y, z_2 = X) = Σ_i A_i Y^i X^{n-i}`: `X` marks the zero
/// coordinates and `Y` the nonzero ones.
pub fn homogeneous_eval(w: &WeightEnumerator, x: &Rational, y: &Rational) -> Rational {
    let n = w.n();
    let mut y_pows = vec![Rational::one()];
    let mut x_pows = vec![Rational::one()];
    for i in 1..=n {
        y_pows.push(&y_pows[i - 1] * y);
        x_pows.push(&x_pows[i - 1] * x);
    }
    w.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(i, a)| Rational::from_integer(a.clone()) * &y_pows[i] * &x_pows[n - i])
        .sum()
}

/// Floating-point variant of [`homogeneous_eval`].
pub fn homogeneous_eval_f64(w: &WeightEnumerator, x: f64, y: f64) -> f64 {
    use num_traits::ToPrimitive;
    let n = w.n() as i32;
    w.coeffs()
        .iter()
        .enumerate()
        .map(|(i, a)| a.to_f64().unwrap_or(f64::NAN) * y.powi(i as i32) * x.powi(n - i as i32))
        .sum()
}

/// Enumerator of `C^⊥`, by direct enumeration of whichever of `C`, `C^⊥` is
/// smaller (transforming when `C` is the smaller one).
pub fn dual_weight_enumerator(code: &LinearCode, limits: &Limits) -> Result<WeightEnumerator> {
    let dual = code.dual();
    if dual.dimension() <= code.dimension() {
        weight_enumerator(&dual, limits)
    } else {
        macwilliams_dual(&weight_enumerator(code, limits)?)
    }
}

/// Both sides of the MacWilliams identity for a tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformReport {
    /// Enumerated effective-length enumerator of the dual tuple.
    pub lhs: WeightEnumerator,
    /// Transform of the primal tuple's enumerator.
    pub rhs: WeightEnumerator,
    pub equal: bool,
}

pub fn verify_macwilliams(tuple: &CodeTuple, limits: &Limits) -> Result<TransformReport> {
    let primal = effective_length_enumerator(tuple, limits)?;
    let lhs = effective_length_enumerator(&tuple.dual(), limits)?;
    let meta = primal.meta().expect("set by effective_length_enumerator").clone();
    let rhs = macwilliams_transform(&primal, tuple.n(), &meta.q_effective, &meta.set_size)?;
    let equal = lhs.same_coefficients(&rhs);
    Ok(TransformReport { lhs, rhs, equal })
}
