//! Cross-module invariants on small codes, checked exhaustively or on seeded
//! random samples.

use mwlab::algebra::rational::{int, pow, ratio};
use mwlab::algebra::{FieldSpec, Rational};
use mwlab::codes::{all_codes, random_code, LinearCode};
use mwlab::distribution::{dual_gap_sum, verify_prop31};
use mwlab::enumerators::{macwilliams_dual, weight_enumerator};
use mwlab::lattice::{
    construction_a, dual_lattice, lattice_enumerate_l1, nu_closed_form, nu_partial_sum, nu_truncated,
    verify_theorem3_exact,
};
use mwlab::Limits;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn binary() -> FieldSpec {
    FieldSpec::new(2, None).unwrap()
}

fn sample(n_max: usize, count: usize, seed: u64) -> Vec<LinearCode> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|i| random_code(&binary(), 1 + i % n_max, &mut rng)).collect()
}

#[test]
fn det_times_size_is_two_to_the_n() {
    for code in sample(12, 200, 1) {
        let lat = construction_a(&code).unwrap();
        let n = code.len();
        assert_eq!(lat.det() * Rational::from_integer(code.size()), pow(&int(2), n));
        let dual = dual_lattice(&lat).unwrap();
        assert!((dual.det() * lat.det()).is_one());
    }
}

#[test]
fn rational_form_of_the_cosh_identity() {
    let u = ratio(2, 7);
    for code in sample(10, 50, 2) {
        let n = code.len();
        let det = construction_a(&code).unwrap().det().clone();
        let lhs = det * pow(&((int(1) + &u) / int(2)), n);
        let rhs = pow(&(int(1) + &u), n) / Rational::from_integer(code.size());
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn macwilliams_is_an_involution() {
    let limits = Limits::default();
    for q in [2, 3, 4, 5] {
        let field = FieldSpec::new(q, None).unwrap();
        for code in all_codes(&field, 3) {
            let w = weight_enumerator(&code, &limits).unwrap();
            let back = macwilliams_dual(&macwilliams_dual(&w).unwrap()).unwrap();
            assert!(back.same_coefficients(&w), "q={q} {:?}", code.generator_labels());
        }
    }
}

#[test]
fn truncation_tail_covers_the_gap() {
    let limits = Limits::default();
    let z = ratio(2, 5);
    for n in 1..=3 {
        for code in all_codes(&binary(), n) {
            let closed = nu_closed_form(&code, &z, &limits).unwrap();
            let lat = construction_a(&code).unwrap();
            for radius in [0, 3, 8] {
                let s = nu_partial_sum(&lat, &z, radius, &limits).unwrap();
                let gap = &closed - &s.value;
                assert!(!gap.is_negative() && gap <= s.tail_bound, "n={n} radius {radius}");
            }
            let t = nu_truncated(&lat, &z, &ratio(1, 1_000_000), &limits).unwrap();
            assert!(&closed - &t.value <= ratio(1, 1_000_000));
        }
    }
}

#[test]
fn scaling_by_two_squares_the_argument() {
    // ν_{2L}(z) = ν_L(z²): the shell N_{2m} of 2·A(C) is N_m of A(C), and
    // 2·A(C) ⊂ A({0}), so spread the counts and compare against A({0}).
    let limits = Limits::default();
    for n in 1..=3 {
        let full = construction_a(&LinearCode::full(&binary(), n)).unwrap();
        let zero = construction_a(&LinearCode::zero(&binary(), n)).unwrap();
        let z = lattice_enumerate_l1(&full, 6, &limits).unwrap();
        let two_z = lattice_enumerate_l1(&zero, 12, &limits).unwrap();
        for (m, c) in z.iter().enumerate() {
            assert_eq!(&two_z[2 * m], c);
            assert!(m == 0 || two_z[2 * m - 1] == 0.into());
        }
    }
}

#[test]
fn nu_relation_exact_on_all_small_codes() {
    let limits = Limits::default();
    for n in 1..=5 {
        for code in all_codes(&binary(), n) {
            for u in [ratio(1, 5), ratio(1, 2), ratio(9, 10)] {
                assert!(verify_theorem3_exact(&code, &u, &limits).unwrap().residual.is_zero());
            }
        }
    }
}

#[test]
fn distance_bound_on_all_ternary_codes_of_length_3() {
    let limits = Limits::default();
    let field = FieldSpec::new(3, None).unwrap();
    for code in all_codes(&field, 3) {
        for z in [ratio(1, 4), ratio(3, 4)] {
            let r = verify_prop31(&code, &z, &limits).unwrap();
            assert!(r.pass);
            assert_eq!(r.bound, dual_gap_sum(&code, &z, &limits).unwrap() / int(2));
        }
    }
}
