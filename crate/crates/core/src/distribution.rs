//! The MacWilliams distribution on a code, the induced distribution on
//! cosets, statistical distance and the smoothing parameter.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{nth_root_floor, pow, require_unit_open};
use crate::algebra::{FieldElement, Rational};
use crate::codes::{hamming_weight, CodeWord, LinearCode};
use crate::enumerators::{dual_weight_enumerator, WeightEnumerator};
use crate::limits::{checked_pow, Limits};
use crate::{Error, Result};

/// A finite distribution with exact probabilities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbabilityTable {
    pub support: Vec<CodeWord>,
    pub probs: Vec<Rational>,
}

impl ProbabilityTable {
    pub fn total(&self) -> Rational {
        self.probs.iter().fold(Rational::zero(), |acc, p| acc + p)
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// Uniform distribution on the given points.
    pub fn uniform(support: Vec<CodeWord>) -> Self {
        let p = Rational::new(BigInt::one(), BigInt::from(support.len()));
        let probs = vec![p; support.len()];
        ProbabilityTable { support, probs }
    }
}

fn powers(z: &Rational, n: usize) -> Vec<Rational> {
    std::iter::successors(Some(Rational::one()), |prev| Some(prev * z)).take(n + 1).collect()
}

/// `p(x) = z^{w(x)} / W_C(z)` on the codewords of `C`.
pub fn macwilliams_distribution(code: &LinearCode, z: &Rational, limits: &Limits) -> Result<ProbabilityTable> {
    require_unit_open("z", z)?;
    let zp = powers(z, code.len());
    let support: Vec<CodeWord> = code.codewords(limits)?.collect();
    let weights: Vec<Rational> = support.iter().map(|c| zp[hamming_weight(c)].clone()).collect();
    let total = weights.iter().fold(Rational::zero(), |acc, w| acc + w);
    let probs = weights.into_iter().map(|w| w / &total).collect();
    Ok(ProbabilityTable { support, probs })
}

fn coset_normalizer(code: &LinearCode, z: &Rational) -> Rational {
    let q = Rational::from_integer(code.field().order().into());
    pow(&(Rational::one() + (q - Rational::one()) * z), code.len())
}

fn coset_sum(code: &LinearCode, x: &[FieldElement], zp: &[Rational], limits: &Limits) -> Result<Rational> {
    let f = code.field();
    let mut acc = Rational::zero();
    for c in code.codewords(limits)? {
        let w = x.iter().zip(&c).filter(|(a, b)| !f.add(**a, **b).is_zero()).count();
        acc += &zp[w];
    }
    Ok(acc)
}

/// `g(x) = Σ_{c ∈ C} z^{w(x+c)} / (1+(q-1)z)^n`, the mass of the coset `x + C`.
pub fn coset_mass(code: &LinearCode, x: &[FieldElement], z: &Rational, limits: &Limits) -> Result<Rational> {
    require_unit_open("z", z)?;
    if x.len() != code.len() {
        return Err(Error::ShapeMismatch(format!("word of length {} for a code of length {}", x.len(), code.len())));
    }
    let zp = powers(z, code.len());
    Ok(coset_sum(code, x, &zp, limits)? / coset_normalizer(code, z))
}

/// `D_C`: the distribution of `g` over the canonical coset transversal.
pub fn coset_distribution(code: &LinearCode, z: &Rational, limits: &Limits) -> Result<ProbabilityTable> {
    require_unit_open("z", z)?;
    limits.check_enumeration(checked_pow(code.field().order() as u64, code.len()))?;
    let zp = powers(z, code.len());
    let norm = coset_normalizer(code, z);
    let support = code.coset_representatives(limits)?;
    let probs = support.iter().map(|x| coset_sum(code, x, &zp, limits).map(|s| s / &norm)).collect::<Result<_>>()?;
    Ok(ProbabilityTable { support, probs })
}

/// `Δ(P, Q) = ½ Σ |P(a) - Q(a)|`.
pub fn statistical_distance(p: &ProbabilityTable, q: &ProbabilityTable) -> Result<Rational> {
    if p.support != q.support || p.probs.len() != q.probs.len() {
        return Err(Error::SupportMismatch);
    }
    let sum = p.probs.iter().zip(&q.probs).fold(Rational::zero(), |acc, (a, b)| acc + (a - b).abs());
    Ok(sum / Rational::from_integer(2.into()))
}

/// `S(z) = Σ_{w ≥ 1} A^⊥_w t^w` with `t = (1-z)/(1+(q-1)z)`, from the dual
/// enumerator's coefficients. Defined on the closed interval `[0, 1]`.
#[derive(Clone, Debug)]
pub struct GapSum {
    q: BigInt,
    dual: WeightEnumerator,
}

impl GapSum {
    pub fn new(code: &LinearCode, limits: &Limits) -> Result<Self> {
        Ok(GapSum { q: code.field().order().into(), dual: dual_weight_enumerator(code, limits)? })
    }

    pub fn dual_enumerator(&self) -> &WeightEnumerator {
        &self.dual
    }

    /// `S(0) = |C^⊥| - 1`, the supremum of `S` on `(0, 1)`.
    pub fn supremum(&self) -> BigInt {
        self.dual.total() - BigInt::one()
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        let one = Rational::one();
        let q = Rational::from_integer(self.q.clone());
        let t = (&one - z) / (&one + (q - &one) * z);
        let mut acc = Rational::zero();
        let mut tw = one;
        for a in &self.dual.coeffs()[1..] {
            tw *= &t;
            if !a.is_zero() {
                acc += &tw * Rational::from_integer(a.clone());
            }
        }
        acc
    }
}

pub fn dual_gap_sum(code: &LinearCode, z: &Rational, limits: &Limits) -> Result<Rational> {
    require_unit_open("z", z)?;
    Ok(GapSum::new(code, limits)?.eval(z))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothingResult {
    /// Midpoint of the final bracket.
    pub eta: Rational,
    /// `(lo, hi)` with `S(lo) ≥ ε > S(hi)`, or `(0, 0)` when `S < ε` everywhere.
    pub bracket: (Rational, Rational),
    pub epsilon: Rational,
    pub tol: Rational,
}

/// `η_ε(C) = inf{z ∈ (0,1) : S(z) < ε}` by exact bisection.
///
/// `S` is continuous and strictly decreasing when `C^⊥ ≠ {0}`, so the
/// infimum is the unique crossing point; the minimum is never attained.
pub fn smoothing_parameter(
    code: &LinearCode,
    epsilon: &Rational,
    tol: &Rational,
    limits: &Limits,
) -> Result<SmoothingResult> {
    if !epsilon.is_positive() {
        return Err(Error::OutOfRange { name: "epsilon", value: epsilon.to_string(), range: "(0,∞)" });
    }
    require_unit_open("tol", tol)?;
    let s = GapSum::new(code, limits)?;
    if Rational::from_integer(s.supremum()) <= *epsilon {
        return Ok(SmoothingResult {
            eta: Rational::zero(),
            bracket: (Rational::zero(), Rational::zero()),
            epsilon: epsilon.clone(),
            tol: tol.clone(),
        });
    }
    let two = Rational::from_integer(2.into());
    let mut lo = Rational::zero();
    let mut hi = Rational::one();
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / &two;
        if s.eval(&mid) >= *epsilon {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(SmoothingResult { eta: (&lo + &hi) / &two, bracket: (lo, hi), epsilon: epsilon.clone(), tol: tol.clone() })
}

/// `max(0, ((q^{n-k}/(1+ε))^{1/n} - 1)/(q-1))`, with the root rounded down
/// to a multiple of `2^-64` so the result stays a valid lower bound.
///
/// Validity: `W_C(z) ≥ 1`, and `W_C(z) = (1+(q-1)z)^n (1 + S(z)) / q^{n-k}`,
/// so `S(z) < ε` forces `(1+(q-1)z)^n > q^{n-k}/(1+ε)`.
pub fn smoothing_lower_bound(code: &LinearCode, epsilon: &Rational) -> Result<Rational> {
    if !epsilon.is_positive() {
        return Err(Error::OutOfRange { name: "epsilon", value: epsilon.to_string(), range: "(0,∞)" });
    }
    let n = code.len();
    if n == 0 {
        return Ok(Rational::zero());
    }
    let q = BigInt::from(code.field().order());
    let x = Rational::from_integer(q.pow((n - code.dimension()) as u32)) / (Rational::one() + epsilon);
    if x <= Rational::one() {
        return Ok(Rational::zero());
    }
    let root = nth_root_floor(&x, n as u32, 64);
    let bound = (root - Rational::one()) / Rational::from_integer(q - 1);
    Ok(if bound.is_negative() { Rational::zero() } else { bound })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prop31Report {
    /// `Δ(D_C, U)` against the uniform distribution on `F_q^n / C`.
    pub delta: Rational,
    /// `S(z) / 2`.
    pub bound: Rational,
    pub pass: bool,
}

pub fn verify_prop31(code: &LinearCode, z: &Rational, limits: &Limits) -> Result<Prop31Report> {
    let d = coset_distribution(code, z, limits)?;
    let u = ProbabilityTable::uniform(d.support.clone());
    let delta = statistical_distance(&d, &u)?;
    let bound = dual_gap_sum(code, z, limits)? / Rational::from_integer(2.into());
    let pass = delta <= bound;
    Ok(Prop31Report { delta, bound, pass })
}

/// Serialized form: every rational as `"p/q"` (or a bare integer).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributionReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bracket: Option<[String; 2]>,
    pub pass: bool,
}

impl From<&Prop31Report> for DistributionReport {
    fn from(r: &Prop31Report) -> Self {
        DistributionReport {
            delta: Some(r.delta.to_string()),
            bound: Some(r.bound.to_string()),
            eta: None,
            bracket: None,
            pass: r.pass,
        }
    }
}

impl DistributionReport {
    /// Smoothing result together with the lower bound it is checked against.
    pub fn smoothing(r: &SmoothingResult, lower: &Rational) -> Self {
        DistributionReport {
            delta: None,
            bound: Some(lower.to_string()),
            eta: Some(r.eta.to_string()),
            bracket: Some([r.bracket.0.to_string(), r.bracket.1.to_string()]),
            pass: *lower <= &r.eta + &r.tol,
        }
    }
}
