//! Seeded generators for rational test data.
//!
//! Everything here draws from a [`ChaCha8Rng`], so a seed fully determines
//! the output on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::residuation::Polytope;
use crate::scalar::Scalar;
use crate::semiring::{scale, trop_add, Flavor, TropMatrix, TropVector};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Bounds for random rationals `p/q`: `|p| ≤ max_num`, `1 ≤ q ≤ max_den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalBounds {
    pub max_num: i64,
    pub max_den: i64,
}

impl Default for RationalBounds {
    fn default() -> Self {
        RationalBounds { max_num: 20, max_den: 10 }
    }
}

impl RationalBounds {
    pub fn integers(max_abs: i64) -> Self {
        RationalBounds { max_num: max_abs, max_den: 1 }
    }
}

pub fn rational(rng: &mut impl Rng, bounds: RationalBounds) -> Scalar {
    let num = rng.random_range(-bounds.max_num..=bounds.max_num);
    let den = rng.random_range(1..=bounds.max_den.max(1));
    Scalar::ratio(num, den).expect("den >= 1")
}

/// A rational strictly between 0 and 1 with denominator at most `max_den`
/// (at least 2).
pub fn unit_fraction(rng: &mut impl Rng, max_den: i64) -> Scalar {
    let den = rng.random_range(2..=max_den.max(2));
    let num = rng.random_range(1..den);
    Scalar::ratio(num, den).expect("den >= 2")
}

pub fn vector(rng: &mut impl Rng, n: usize, bounds: RationalBounds) -> TropVector {
    TropVector::new((0..n).map(|_| rational(rng, bounds)).collect()).expect("n >= 1")
}

pub fn matrix(rng: &mut impl Rng, rows: usize, cols: usize, bounds: RationalBounds) -> TropMatrix {
    let data = (0..rows * cols).map(|_| rational(rng, bounds)).collect();
    TropMatrix::from_row_major(rows, cols, data).expect("rows, cols >= 1")
}

/// A polytope with `n` coordinates and `m` random generators.
pub fn polytope(rng: &mut impl Rng, flavor: Flavor, n: usize, m: usize, bounds: RationalBounds) -> Polytope {
    Polytope::new(flavor, matrix(rng, n, m, bounds))
}

/// A random element of the span: the tropical sum of every generator, each
/// scaled by an independent random coefficient.
pub fn span_member(rng: &mut impl Rng, p: &Polytope, bounds: RationalBounds) -> TropVector {
    p.generators()
        .iter()
        .map(|g| scale(&rational(rng, bounds), g))
        .reduce(|a, b| trop_add(p.flavor(), &a, &b).expect("same length"))
        .expect("at least one generator")
}

/// Like [`span_member`] but only a random non-empty subset of the generators
/// contributes, which reaches lower-dimensional faces more often.
pub fn sparse_span_member(rng: &mut impl Rng, p: &Polytope, bounds: RationalBounds) -> TropVector {
    let m = p.num_generators();
    let first = rng.random_range(0..m);
    let mut acc = scale(&rational(rng, bounds), &p.generator(first));
    for k in 0..m {
        if k != first && rng.random_bool(0.5) {
            let s = scale(&rational(rng, bounds), &p.generator(k));
            acc = trop_add(p.flavor(), &acc, &s).expect("same length");
        }
    }
    acc
}
