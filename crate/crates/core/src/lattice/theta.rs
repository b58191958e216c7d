//! Theta series `θ_Λ(q) = Σ_{x∈Λ} q^{|x|²}` of Construction-A lattices,
//! compared against the substitution of the two coset series into `W_C`.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::Zero;

use super::construction_a;
use crate::algebra::IntPolynomial;
use crate::codes::LinearCode;
use crate::enumerators::weight_enumerator;
use crate::limits::{checked_pow, Limits};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaReport {
    /// Coefficients of `q^0..q^M` from enumerating lattice points.
    pub lhs: Vec<BigInt>,
    /// The same coefficients from `W_C(θ_{2ℤ}, θ_{2ℤ+1})`.
    pub rhs: Vec<BigInt>,
    pub equal: bool,
}

/// `θ_{2ℤ}(q) = Σ q^{4m²}` and `θ_{2ℤ+1}(q) = Σ q^{(2m+1)²}`, up to `q^M`.
fn coset_thetas(max: usize) -> (IntPolynomial, IntPolynomial) {
    let mut even = vec![BigInt::zero(); max + 1];
    let mut odd = vec![BigInt::zero(); max + 1];
    for k in -(max as i64)..=(max as i64) {
        let sq = (k * k) as usize;
        if sq > max {
            continue;
        }
        if k % 2 == 0 {
            even[sq] += 1;
        } else {
            odd[sq] += 1;
        }
    }
    (IntPolynomial::new(even), IntPolynomial::new(odd))
}

pub fn theta_relation_check(code: &LinearCode, max: usize, limits: &Limits) -> Result<ThetaReport> {
    let lat = construction_a(code)?;
    let n = code.len();
    let bound = max.sqrt() as i64;
    let side = 2 * bound as u64 + 1;
    limits.check_enumeration(checked_pow(side, n))?;

    let mut lhs = vec![BigInt::zero(); max + 1];
    let mut x = vec![-bound; n];
    loop {
        let norm: i64 = x.iter().map(|v| v * v).sum();
        if norm as usize <= max && lat.grid_contains(&x) {
            lhs[norm as usize] += 1;
        }
        let mut i = 0;
        while i < n && x[i] == bound {
            x[i] = -bound;
            i += 1;
        }
        if i == n {
            break;
        }
        x[i] += 1;
    }

    let (even, odd) = coset_thetas(max);
    let w = weight_enumerator(code, limits)?;
    let mut total = IntPolynomial::zero();
    for (i, a) in w.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let mut term = IntPolynomial::constant(a.clone());
        for _ in 0..i {
            term = term.mul_truncated(&odd, max);
        }
        for _ in 0..n - i {
            term = term.mul_truncated(&even, max);
        }
        total = &total + &term;
    }
    let rhs: Vec<BigInt> = (0..=max).map(|m| total.coeff(m)).collect();
    let equal = lhs == rhs;
    Ok(ThetaReport { lhs, rhs, equal })
}
