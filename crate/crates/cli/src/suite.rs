//! Seeded random inputs. Case `i` of a suite uses its own generator, seeded
//! by the `i`-th output of a ChaCha8 stream keyed by the suite seed, so a
//! failing case can be rerun on its own.

use mwlab::algebra::FieldSpec;
use mwlab::codes::{random_code, CodeTuple, LinearCode};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn case_seeds(seed: u64, count: usize) -> Vec<u64> {
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| master.next_u64()).collect()
}

pub fn rng(case_seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(case_seed)
}

pub fn pick<T: Copy>(rng: &mut impl Rng, fixed: Option<T>, choices: &[T]) -> T {
    fixed.unwrap_or_else(|| choices[rng.gen_range(0..choices.len())])
}

/// A random tuple of `m` codes of length `n` over `F_q` with at most
/// `max_size` elements and a dual of at most `max_dual`, by rejection of
/// whole codes.
pub fn random_tuple(
    rng: &mut impl Rng,
    field: &FieldSpec,
    m: usize,
    n: usize,
    max_size: u64,
    max_dual: u64,
) -> Option<CodeTuple> {
    for _ in 0..1_000 {
        let codes: Vec<LinearCode> = (0..m).map(|_| random_code(field, n, rng)).collect();
        let tuple = CodeTuple::new(codes).ok()?;
        let within = |t: &CodeTuple, max: u64| t.size_u64().is_some_and(|s| s <= max);
        if within(&tuple, max_size) && within(&tuple.dual(), max_dual) {
            return Some(tuple);
        }
    }
    None
}

/// Lengths `n ≥ 1` with `q^{mn} ≤ max_points`.
pub fn lengths_within(q: u64, m: usize, max_points: u64) -> Vec<usize> {
    (1..=16).filter(|&n| (q as f64).powi((m * n) as i32) <= max_points as f64).collect()
}
