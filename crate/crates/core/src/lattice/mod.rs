//! Construction-A lattices `A(C) = {x ∈ ℤ^n : x mod 2 ∈ C}` for binary
//! codes, their duals `(1/2)A(C^⊥)`, and the nu- and theta-series built on
//! them.
//!
//! Every enumeration runs on the integer grid: a handle is `scale · A(D)` for
//! a binary code `D` and `scale ∈ {1, 1/2}`.

mod gauss;
mod nu;
mod theta;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::algebra::Rational;
use crate::codes::LinearCode;
use crate::limits::Limits;
use crate::{Error, Result};

pub use gauss::{gaussian_sum, jacobi_poisson_check, GaussianSum, JacobiPoissonReport};
pub use nu::{
    beta_alpha_relation, dual_lattice_nu, nu_closed_form, nu_closed_form_f64, nu_partial_sum, nu_series, nu_truncated,
    nu_truncated_f64, verify_theorem3_exact, verify_theorem3_numeric, zn_nu, ParameterPair, SeriesJson, SeriesNumber,
    SeriesTruncation, SeriesTruncationF64, Theorem3Exact, Theorem3Numeric, NUMERIC_SLACK,
};
pub use theta::{theta_relation_check, ThetaReport};

/// Largest supported length; parity patterns are packed into a `u64`.
pub const MAX_LATTICE_LENGTH: usize = 63;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionALattice {
    /// The code `D` with `Λ = scale · A(D)`.
    code: LinearCode,
    n: usize,
    det: Rational,
    scale: Rational,
    /// Generators of `D^⊥` as bit masks: `c ∈ D` iff every mask meets `c` evenly.
    checks: Vec<u64>,
}

fn mask(word: &[crate::algebra::FieldElement]) -> u64 {
    word.iter().enumerate().filter(|(_, b)| !b.is_zero()).fold(0, |m, (i, _)| m | (1 << i))
}

fn scaled(code: &LinearCode, scale: Rational) -> Result<ConstructionALattice> {
    if code.field().order() != 2 {
        return Err(Error::NotBinary(code.field().order()));
    }
    let n = code.len();
    if n > MAX_LATTICE_LENGTH {
        return Err(Error::LengthTooLarge(n));
    }
    // det(A(D)) = 2^n / |D|, and scaling by s multiplies it by s^n.
    let base = Rational::new(BigInt::one() << n, code.size());
    let det = base * crate::algebra::rational::pow(&scale, n);
    let checks = code.dual().generator().iter().map(|g| mask(g)).collect();
    Ok(ConstructionALattice { code: code.clone(), n, det, scale, checks })
}

/// `A(C)`.
pub fn construction_a(code: &LinearCode) -> Result<ConstructionALattice> {
    scaled(code, Rational::one())
}

/// `A(C)^* = (1/2) A(C^⊥)`.
pub fn dual_lattice(lat: &ConstructionALattice) -> Result<ConstructionALattice> {
    if lat.is_dual() {
        return Err(Error::AlreadyDual);
    }
    lat.dual_any()
}

impl ConstructionALattice {
    /// The code `D` of the underlying grid lattice `A(D)`.
    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn det(&self) -> &Rational {
        &self.det
    }

    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    pub fn is_dual(&self) -> bool {
        !self.scale.is_one()
    }

    /// The dual of either kind of handle: `(s·A(D))^* = (1/(2s))·A(D^⊥)`.
    pub(crate) fn dual_any(&self) -> Result<ConstructionALattice> {
        let scale = if self.is_dual() { Rational::one() } else { Rational::new(1.into(), 2.into()) };
        scaled(&self.code.dual(), scale)
    }

    /// Whether the integer vector `y` lies in `A(D)`.
    pub fn grid_contains(&self, y: &[i64]) -> bool {
        y.len() == self.n && self.parity_ok(y.iter().enumerate().fold(0, |m, (i, &v)| m | (((v & 1) as u64) << i)))
    }

    pub(crate) fn parity_ok(&self, m: u64) -> bool {
        self.checks.iter().all(|h| (h & m).count_ones().is_multiple_of(2))
    }

    /// Whether `x ∈ scale·ℤ^n` with `x/scale mod 2 ∈ D`.
    pub fn contains(&self, x: &[Rational]) -> bool {
        if x.len() != self.n {
            return false;
        }
        let mut y = Vec::with_capacity(self.n);
        for v in x {
            let u = v / &self.scale;
            if !u.is_integer() {
                return false;
            }
            let r: BigInt = u.to_integer() % 2;
            y.push(if r.is_zero() { 0 } else { 1 });
        }
        self.grid_contains(&y)
    }
}

/// Number of nonnegative vectors in `ℕ^n` with coordinate sum at most `r`.
pub(crate) fn composition_count(n: usize, r: usize) -> BigInt {
    binomial(BigInt::from(r + n), BigInt::from(n))
}

/// `N_0..N_R` of the grid lattice `A(D)` by L¹ norm, i.e. the counts for the
/// underlying integer points (a dual handle's norms are these times `1/2`).
///
/// Walks every absolute-value pattern `a ∈ ℕ^n` with `Σa ≤ R`; the parity of
/// `a` decides membership, and the `2^{#nonzero}` sign choices are counted at
/// once.
pub fn lattice_enumerate_l1(lat: &ConstructionALattice, radius: usize, limits: &Limits) -> Result<Vec<BigInt>> {
    let needed = composition_count(lat.n, radius);
    if needed > BigInt::from(limits.enumeration) {
        return Err(Error::BudgetExceeded { needed: needed.to_string(), budget: limits.enumeration });
    }
    let mut counts = vec![0u128; radius + 1];
    walk(lat, 0, 0, 0, 0, radius, &mut counts);
    Ok(counts.into_iter().map(BigInt::from).collect())
}

fn walk(
    lat: &ConstructionALattice,
    i: usize,
    sum: usize,
    parity: u64,
    nonzero: u32,
    radius: usize,
    counts: &mut [u128],
) {
    if i == lat.n {
        if lat.parity_ok(parity) {
            counts[sum] += 1u128 << nonzero;
        }
        return;
    }
    for a in 0..=radius - sum {
        let p = if a % 2 == 1 { parity | (1 << i) } else { parity };
        walk(lat, i + 1, sum + a, p, nonzero + u32::from(a > 0), radius, counts);
    }
}

/// L¹ shell sizes of `ℤ^n`: `N_0 = 1`, `N_m = Σ_k C(n,k) 2^k C(m-1,k-1)`.
pub fn zn_shell_counts(n: usize, radius: usize) -> Vec<BigInt> {
    (0..=radius)
        .map(|m| {
            if m == 0 {
                return BigInt::one();
            }
            (1..=n.min(m))
                .map(|k| {
                    binomial(BigInt::from(n), BigInt::from(k))
                        * (BigInt::one() << k)
                        * binomial(BigInt::from(m - 1), BigInt::from(k - 1))
                })
                .sum()
        })
        .collect()
}
