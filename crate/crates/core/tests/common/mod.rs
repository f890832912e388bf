#![allow(dead_code)]

use rand::Rng;
use tropgeo::random::{self, RationalBounds, SeededRng};
use tropgeo::{Flavor, Polytope, Scalar, TropMatrix, TropVector};

pub fn v(e: &[i64]) -> TropVector {
    TropVector::from_ints(e)
}

pub fn q(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d).unwrap()
}

pub fn m(rows: &[&[i64]]) -> TropMatrix {
    TropMatrix::from_int_rows(rows)
}

pub fn max_plus(gens: &[TropVector]) -> Polytope {
    Polytope::from_generators(Flavor::MaxPlus, gens).unwrap()
}

/// Random max-plus polytope with `n ≤ 6` coordinates, `m ≤ 8` generators and
/// entries `p/q`, `|p| ≤ 20`, `q ≤ 10`.
pub fn random_polytope(rng: &mut SeededRng) -> Polytope {
    let n = rng.random_range(1..=6);
    let m = rng.random_range(1..=8);
    random::polytope(rng, Flavor::MaxPlus, n, m, RationalBounds::default())
}

/// Largest `λ` among the candidates `y_i − x_i` with `λ ⊗ x ≤ y`, found by
/// checking each candidate against the definition.
pub fn bracket_oracle(x: &TropVector, y: &TropVector) -> Scalar {
    let fits = |lam: &Scalar| x.iter().zip(y).all(|(a, b)| &(a + lam) <= b);
    x.iter()
        .zip(y)
        .map(|(a, b)| b - a)
        .filter(|lam| fits(lam))
        .max()
        .expect("the smallest difference always fits")
}

/// Column `i` of the dominator rebuilt as `⊞_k (−V[i][k]) ⊗ v_k`.
pub fn dominator_column_oracle(v: &TropMatrix, i: usize) -> TropVector {
    let entries = (0..v.rows())
        .map(|j| (0..v.cols()).map(|k| v.get(j, k) - v.get(i, k)).min().unwrap())
        .collect();
    TropVector::new(entries).unwrap()
}

/// Naive max-plus idempotency and zero-diagonal check, written without the
/// library's matrix product.
pub fn kleene_oracle(a: &TropMatrix) -> bool {
    let n = a.rows();
    if n != a.cols() || (0..n).any(|i| !a.get(i, i).is_zero()) {
        return false;
    }
    for i in 0..n {
        for j in 0..n {
            let mut best = a.get(i, 0) + a.get(0, j);
            for k in 1..n {
                let c = a.get(i, k) + a.get(k, j);
                if c > best {
                    best = c;
                }
            }
            if &best != a.get(i, j) {
                return false;
            }
        }
    }
    true
}
