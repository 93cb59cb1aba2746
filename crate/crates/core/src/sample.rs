//! Seeded random inputs: positive rationals for the birational regime and
//! rational points of the order polytope for the piecewise-linear one.

use std::sync::Arc;

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dynamics::{PArray, Regime};
use crate::poset::Poset;
use crate::rational::Rational;

pub const DEFAULT_RANGE: u32 = 20;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n/d` with `n, d` uniform in `1..=range`.
pub fn positive_rational<R: Rng>(rng: &mut R, range: u32) -> Rational {
    let n = rng.gen_range(1..=range);
    let d = rng.gen_range(1..=range);
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `n/d` in `[0, 1]` with `d` uniform in `1..=range` and `n` uniform in `0..=d`.
pub fn unit_rational<R: Rng>(rng: &mut R, range: u32) -> Rational {
    let d = rng.gen_range(1..=range);
    let n = rng.gen_range(0..=d);
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn positive_array<R: Rng>(rng: &mut R, poset: &Arc<Poset>, range: u32) -> PArray {
    let values = (0..poset.len()).map(|_| positive_rational(rng, range)).collect();
    PArray::new(poset.clone(), values).expect("length matches")
}

/// A point of the order polytope: independent draws in `[0, 1]`, then
/// each element takes the maximum draw over its down-set.
pub fn order_polytope_point<R: Rng>(rng: &mut R, poset: &Arc<Poset>, range: u32) -> PArray {
    let draws: Vec<Rational> = (0..poset.len()).map(|_| unit_rational(rng, range)).collect();
    let values = (0..poset.len())
        .map(|x| poset.down_set(x).ones().map(|y| draws[y].clone()).max().expect("down-set contains x"))
        .collect();
    PArray::new(poset.clone(), values).expect("length matches")
}

/// The natural random input for a regime.
pub fn regime_sample<R: Rng>(rng: &mut R, regime: Regime, poset: &Arc<Poset>, range: u32) -> PArray {
    match regime {
        Regime::PiecewiseLinear => order_polytope_point(rng, poset, range),
        Regime::Birational => positive_array(rng, poset, range),
    }
}

pub fn samples(seed: u64, regime: Regime, poset: &Arc<Poset>, count: usize) -> Vec<PArray> {
    let mut rng = seeded_rng(seed);
    (0..count).map(|_| regime_sample(&mut rng, regime, poset, DEFAULT_RANGE)).collect()
}
