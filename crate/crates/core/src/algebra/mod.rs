//! Exact arithmetic: finite fields, additive characters in `ℤ[ζ_p]`,
//! integer polynomials and rationals.

mod cyclotomic;
mod field;
mod poly;
pub mod rational;

pub use cyclotomic::{additive_character, Cyclotomic, CyclotomicInteger, CyclotomicRational, Scalar};
pub use field::{prime_power, FieldElement, FieldSpec};
pub use poly::IntPolynomial;
pub use rational::Rational;

/// Field sizes with a built-in construction: all primes below 32 plus the
/// tabulated extension fields.
pub const SUPPORTED_SMALL_ORDERS: &[u64] = &[2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31];

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn fields() -> Vec<FieldSpec> {
        SUPPORTED_SMALL_ORDERS.iter().map(|&q| FieldSpec::new(q, None).unwrap()).collect()
    }

    fn field_and_elems() -> impl Strategy<Value = (FieldSpec, FieldElement, FieldElement, FieldElement)> {
        (0..SUPPORTED_SMALL_ORDERS.len()).prop_flat_map(|i| {
            let f = FieldSpec::new(SUPPORTED_SMALL_ORDERS[i], None).unwrap();
            let q = f.order();
            (Just(f), 0..q, 0..q, 0..q).prop_map(|(f, a, b, c)| (f, FieldElement(a), FieldElement(b), FieldElement(c)))
        })
    }

    proptest! {
        #[test]
        fn field_axioms((f, a, b, c) in field_and_elems()) {
            prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.add(a, b), f.add(b, a));
            prop_assert_eq!(f.mul(a, b), f.mul(b, a));
            prop_assert_eq!(f.add(a, f.neg(a)), FieldElement::ZERO);
            prop_assert_eq!(f.mul(a, FieldElement::ONE), a);
            if !a.is_zero() {
                prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
            }
        }

        #[test]
        fn trace_is_additive((f, a, b, _c) in field_and_elems()) {
            let p = f.characteristic();
            prop_assert_eq!(f.trace(f.add(a, b)), (f.trace(a) + f.trace(b)) % p);
        }

        #[test]
        fn character_is_a_homomorphism((f, a, b, _c) in field_and_elems()) {
            let lhs = additive_character(&f, f.add(a, b));
            let rhs = &additive_character(&f, a) * &additive_character(&f, b);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn reduction_preserves_complex_value(
            p in prop::sample::select(vec![2u32, 3, 5, 7, 11]),
            raw in prop::collection::vec(-50i64..50, 11),
        ) {
            let coeffs: Vec<BigInt> = raw[..p as usize].iter().map(|&x| BigInt::from(x)).collect();
            // unreduced value computed independently
            let step = std::f64::consts::TAU / p as f64;
            let (re, im) = coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, c)| {
                let c = num_traits::ToPrimitive::to_f64(c).unwrap();
                (re + c * (step * k as f64).cos(), im + c * (step * k as f64).sin())
            });
            let reduced = Cyclotomic::from_coeffs(p, coeffs);
            let (rre, rim) = reduced.to_complex();
            prop_assert!((re - rre).abs() < 1e-12 && (im - rim).abs() < 1e-12);
        }
    }

    #[test]
    fn character_sums_vanish_for_every_supported_field() {
        for f in fields() {
            let p = f.characteristic();
            let total = f.elements().fold(CyclotomicInteger::zero(p), |acc, a| &acc + &additive_character(&f, a));
            assert!(total.is_zero(), "Σψ ≠ 0 over {f}");
            assert!(f.elements().any(|a| additive_character(&f, a) != CyclotomicInteger::one(p)));
        }
    }
}
