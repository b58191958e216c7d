//! Gaussian theta sums `Σ_{x∈Λ} e^{-πτ|x|²}` with rigorous truncation
//! bounds, and the Jacobi–Poisson identity at imaginary argument.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::ToPrimitive;

use super::ConstructionALattice;
use crate::limits::{checked_pow, Limits};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GaussianSum {
    /// Sum over the box `|y_i| ≤ bound` of the integer grid.
    pub value: f64,
    /// Upper bound on the mass outside the box.
    pub tail: f64,
    pub bound: u64,
}

/// `Σ_{k ≥ B+1} e^{-a k²} ≤ e^{-a(B+1)²} / (1 - e^{-a(2B+3)})`, from the ratio
/// of consecutive terms.
fn one_dim_tail(a: f64, b: u64) -> f64 {
    let k = (b + 1) as f64;
    (-a * k * k).exp() / (1.0 - (-a * (2.0 * k + 1.0)).exp())
}

/// Mass of `ℤ^n` outside the box: `(F + 2T)^n - F^n`, expanded so nothing cancels.
fn outside_box(n: usize, full: f64, tail: f64) -> f64 {
    (1..=n)
        .map(|j| {
            let c = binomial(BigInt::from(n), BigInt::from(j)).to_f64().unwrap_or(f64::INFINITY);
            c * full.powi((n - j) as i32) * (2.0 * tail).powi(j as i32)
        })
        .sum()
}

/// `Σ_{x ∈ Λ} e^{-πτ|x|²}` truncated to a box whose outside mass is at most `tol`.
pub fn gaussian_sum(lat: &ConstructionALattice, tau: f64, tol: f64, limits: &Limits) -> Result<GaussianSum> {
    if !(tau > 0.0 && tau.is_finite()) {
        return Err(Error::OutOfRange { name: "t", value: tau.to_string(), range: "(0,∞)" });
    }
    let n = lat.dimension();
    let s = lat.scale().to_f64().unwrap_or(f64::NAN);
    let a = std::f64::consts::PI * tau * s * s;
    let mut bound = 0u64;
    let tail = loop {
        if checked_pow(2 * bound + 1, n).is_none_or(|v| v > limits.enumeration) {
            return Err(Error::ToleranceUnreachable(tol.to_string()));
        }
        let t = one_dim_tail(a, bound);
        let full = 1.0 + 2.0 * (1..=bound).map(|k| (-a * (k * k) as f64).exp()).sum::<f64>();
        let outside = outside_box(n, full, t);
        if outside <= tol {
            break outside;
        }
        bound += 1;
    };
    let b = bound as i64;
    let weights: Vec<f64> = (-b..=b).map(|k| (-a * (k * k) as f64).exp()).collect();
    let mut y = vec![-b; n];
    let mut value = 0.0;
    loop {
        if lat.grid_contains(&y) {
            value += y.iter().map(|&k| weights[(k + b) as usize]).product::<f64>();
        }
        let mut i = 0;
        while i < n && y[i] == b {
            y[i] = -b;
            i += 1;
        }
        if i == n {
            break;
        }
        y[i] += 1;
    }
    Ok(GaussianSum { value, tail, bound })
}

#[derive(Clone, Debug, PartialEq)]
pub struct JacobiPoissonReport {
    /// `Σ_{x∈Λ^*} e^{-πt|x|²}`.
    pub lhs: f64,
    /// `det Λ · t^{-n/2} · Σ_{x∈Λ} e^{-π|x|²/t}`.
    pub rhs: f64,
    pub residual: f64,
    pub lhs_tail: f64,
    pub rhs_tail: f64,
    pub pass: bool,
}

/// The theta inversion `θ_{Λ^*}(it) = det Λ · t^{-n/2} θ_Λ(i/t)`.
///
/// Works for either kind of handle; the dual is taken as
/// `(s·A(D))^* = (1/(2s))·A(D^⊥)`.
pub fn jacobi_poisson_check(
    lat: &ConstructionALattice,
    t: f64,
    tol: f64,
    limits: &Limits,
) -> Result<JacobiPoissonReport> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::OutOfRange { name: "tol", value: tol.to_string(), range: "(0,∞)" });
    }
    let dual = lat.dual_any()?;
    let n = lat.dimension() as f64;
    let factor = lat.det().to_f64().unwrap_or(f64::NAN) * t.powf(-n / 2.0);
    let l = gaussian_sum(&dual, t, tol / 2.0, limits)?;
    let r = gaussian_sum(lat, 1.0 / t, tol / (2.0 * factor), limits)?;
    let lhs = l.value;
    let rhs = factor * r.value;
    let residual = (lhs - rhs).abs();
    let lhs_tail = l.tail;
    let rhs_tail = factor * r.tail;
    let pass = residual <= tol + lhs_tail + rhs_tail;
    Ok(JacobiPoissonReport { lhs, rhs, residual, lhs_tail, rhs_tail, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FieldSpec;
    use crate::codes::{all_codes, LinearCode};
    use crate::lattice::{construction_a, dual_lattice};

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn l() -> Limits {
        Limits::default()
    }

    #[test]
    fn integers_at_one() {
        let z = construction_a(&LinearCode::full(&f2(), 1)).unwrap();
        let r = jacobi_poisson_check(&z, 1.0, 1e-12, &l()).unwrap();
        assert!((r.lhs - 1.086_434_811_213_308).abs() < 1e-12);
        assert!((r.rhs - 1.086_434_811_213_308).abs() < 1e-12);
        assert!(r.residual < 1e-8 && r.pass);
    }

    #[test]
    fn tail_bound_dominates_the_discarded_mass() {
        let z = construction_a(&LinearCode::full(&f2(), 1)).unwrap();
        let coarse = gaussian_sum(&z, 0.5, 1e-2, &l()).unwrap();
        let fine = gaussian_sum(&z, 0.5, 1e-15, &l()).unwrap();
        assert!(fine.value - coarse.value <= coarse.tail);
    }

    #[test]
    fn small_lattices_satisfy_inversion() {
        for n in 1..=3 {
            for code in all_codes(&f2(), n) {
                let lat = construction_a(&code).unwrap();
                for t in [0.7, 1.0, 1.5] {
                    let r = jacobi_poisson_check(&lat, t, 1e-10, &l()).unwrap();
                    assert!(r.pass && r.residual < 1e-8, "n={n} t={t} {r:?}");
                }
            }
        }
        let sd = construction_a(&LinearCode::repetition(&f2(), 2)).unwrap();
        assert!(jacobi_poisson_check(&sd, 0.7, 1e-10, &l()).unwrap().residual < 1e-8);
    }

    #[test]
    fn reciprocity_swaps_the_two_sides() {
        // With Λ ↔ Λ^* and t ↔ 1/t the roles of the two sums are exchanged,
        // each up to the prefactor det Λ · t^{-n/2}.
        let code = LinearCode::repetition(&f2(), 3);
        let lat = construction_a(&code).unwrap();
        let star = dual_lattice(&lat).unwrap();
        let t: f64 = 0.7;
        let a = jacobi_poisson_check(&lat, t, 1e-12, &l()).unwrap();
        let b = jacobi_poisson_check(&star, 1.0 / t, 1e-12, &l()).unwrap();
        let factor = lat.det().to_f64().unwrap() * t.powf(-1.5);
        assert!((b.lhs * factor - a.rhs).abs() < 1e-10);
        assert!((b.rhs * factor - a.lhs).abs() < 1e-10);
    }
}
