//! The residuation bracket `⟨x|y⟩`, domination, and span membership.
//!
//! `⟨x|y⟩ = min_i (y_i − x_i)` is the largest `λ` with `λ ⊗ x ≤ y`. Summing
//! the best scalings of every generator below `y` gives the principal
//! projection of `y` onto a max-plus span, and `y` is a member exactly when
//! that projection reproduces it.

use crate::error::Error;
use crate::scalar::Scalar;
use crate::semiring::{scale, trop_add, Flavor, TropMatrix, TropVector};

/// A tropical polytope: the max-plus (or min-plus) span of the columns of
/// `generators`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    flavor: Flavor,
    generators: TropMatrix,
}

impl Polytope {
    pub fn new(flavor: Flavor, generators: TropMatrix) -> Self {
        Polytope { flavor, generators }
    }

    pub fn from_generators(flavor: Flavor, generators: &[TropVector]) -> Result<Self, Error> {
        Ok(Polytope { flavor, generators: TropMatrix::from_columns(generators)? })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn generator_matrix(&self) -> &TropMatrix {
        &self.generators
    }

    /// Ambient dimension `n`.
    pub fn dim(&self) -> usize {
        self.generators.rows()
    }

    pub fn num_generators(&self) -> usize {
        self.generators.cols()
    }

    pub fn generator(&self, k: usize) -> TropVector {
        self.generators.column(k)
    }

    pub fn generators(&self) -> Vec<TropVector> {
        self.generators.columns()
    }

    /// The same set viewed through negation: `−P` with the dual flavor.
    pub fn negated(&self) -> Polytope {
        Polytope { flavor: self.flavor.dual(), generators: self.generators.negate() }
    }

    pub(crate) fn check_point(&self, y: &TropVector) -> Result<(), Error> {
        if y.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: y.len() });
        }
        Ok(())
    }

    pub(crate) fn require_flavor(&self, expected: Flavor) -> Result<(), Error> {
        if self.flavor != expected {
            return Err(Error::FlavorMismatch { expected, found: self.flavor });
        }
        Ok(())
    }
}

/// Evidence that `dominator_point` dominates some `y` in `position`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationWitness {
    pub dominator_point: TropVector,
    pub position: usize,
    pub bracket_value: Scalar,
}

impl DominationWitness {
    /// Returns a witness when `x` dominates `y` at `i`, `None` otherwise.
    pub fn check(x: &TropVector, y: &TropVector, i: usize) -> Result<Option<Self>, Error> {
        if !dominates_at(x, y, i)? {
            return Ok(None);
        }
        Ok(Some(DominationWitness {
            dominator_point: x.clone(),
            position: i,
            bracket_value: y.get(i) - x.get(i),
        }))
    }
}

/// `⟨x|y⟩ = min_i (y_i − x_i)`.
pub fn bracket(x: &TropVector, y: &TropVector) -> Result<Scalar, Error> {
    x.check_len(y)?;
    Ok(x.iter()
        .zip(y)
        .map(|(a, b)| b - a)
        .reduce(|p, q| p.min_of(&q))
        .expect("vectors are non-empty"))
}

/// `y ∈ Dom_i(x)`: the bracket `⟨x|y⟩` is attained at coordinate `i`.
pub fn dominates_at(x: &TropVector, y: &TropVector, i: usize) -> Result<bool, Error> {
    let b = bracket(x, y)?;
    if i >= x.len() {
        return Err(Error::IndexOutOfRange { index: i, dim: x.len() });
    }
    Ok(b == y.get(i) - x.get(i))
}

/// `x` dominates the whole span of `p` at `i`. Only the generators are
/// tested: `Dom_i(x)` is closed under both tropical sums and scaling, so it
/// contains the span as soon as it contains the generators.
pub fn dominates_polytope_at(x: &TropVector, p: &Polytope, i: usize) -> Result<bool, Error> {
    p.check_point(x)?;
    if i >= x.len() {
        return Err(Error::IndexOutOfRange { index: i, dim: x.len() });
    }
    for g in p.generators() {
        if !dominates_at(x, &g, i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The best approximation of `y` inside the span of `p`.
///
/// MaxPlus: `⊕_k ⟨v_k|y⟩ ⊗ v_k`, the greatest span element `≤ y`.
/// MinPlus: computed through negation as `−proj(−P, −y)`, which is
/// `⊞_k max_i(y_i − v_{k,i}) ⊗ v_k`, the least span element `≥ y`.
pub fn principal_projection(p: &Polytope, y: &TropVector) -> Result<TropVector, Error> {
    p.check_point(y)?;
    match p.flavor() {
        Flavor::MaxPlus => Ok(max_plus_projection(p.generator_matrix(), y)),
        Flavor::MinPlus => Ok(max_plus_projection(&p.generator_matrix().negate(), &y.negate()).negate()),
    }
}

fn max_plus_projection(gens: &TropMatrix, y: &TropVector) -> TropVector {
    (0..gens.cols())
        .map(|k| {
            let g = gens.column(k);
            let lambda = bracket(&g, y).expect("dimensions checked");
            scale(&lambda, &g)
        })
        .reduce(|a, b| trop_add(Flavor::MaxPlus, &a, &b).expect("same length"))
        .expect("at least one generator")
}

/// `y` lies in the span of `p` (exact equality with its projection).
pub fn member(p: &Polytope, y: &TropVector) -> Result<bool, Error> {
    Ok(&principal_projection(p, y)? == y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(e: &[i64]) -> TropVector {
        TropVector::from_ints(e)
    }

    fn poly(flavor: Flavor, gens: &[&[i64]]) -> Polytope {
        let gens: Vec<_> = gens.iter().map(|g| v(g)).collect();
        Polytope::from_generators(flavor, &gens).unwrap()
    }

    #[test]
    fn bracket_examples() {
        let x = v(&[3, -1, 7]);
        assert_eq!(bracket(&x, &x).unwrap(), Scalar::zero());
        assert_eq!(bracket(&v(&[1, 0, 0]), &v(&[0, 0, 0])).unwrap(), Scalar::from_int(-1));
        assert_eq!(bracket(&v(&[0, 1, 2]), &v(&[-2, -1, 0])).unwrap(), Scalar::from_int(-2));
        assert!(bracket(&v(&[0]), &v(&[0, 0])).is_err());
    }

    #[test]
    fn dominates_at_examples() {
        let x = v(&[4, -2, 1]);
        for i in 0..3 {
            assert!(dominates_at(&x, &x, i).unwrap());
        }
        assert!(dominates_at(&v(&[0, 0]), &v(&[0, 1]), 0).unwrap());
        assert!(!dominates_at(&v(&[0, 0]), &v(&[0, 1]), 1).unwrap());
        assert_eq!(
            dominates_at(&v(&[0, 0]), &v(&[0, 1]), 2),
            Err(Error::IndexOutOfRange { index: 2, dim: 2 })
        );
    }

    #[test]
    fn domination_witness() {
        let w = DominationWitness::check(&v(&[0, 0]), &v(&[0, 1]), 0).unwrap().unwrap();
        assert_eq!(w.bracket_value, Scalar::zero());
        assert_eq!(w.bracket_value, bracket(&v(&[0, 0]), &v(&[0, 1])).unwrap());
        assert!(DominationWitness::check(&v(&[0, 0]), &v(&[0, 1]), 1).unwrap().is_none());
    }

    #[test]
    fn dominates_polytope_examples() {
        let x = v(&[5, 1, 2]);
        let own = poly(Flavor::MaxPlus, &[&[5, 1, 2]]);
        for i in 0..3 {
            assert!(dominates_polytope_at(&x, &own, i).unwrap());
        }
        let seg = poly(Flavor::MaxPlus, &[&[0, 1, 2]]);
        assert!(dominates_polytope_at(&v(&[0, 0, 0]), &seg, 0).unwrap());
        assert!(!dominates_polytope_at(&v(&[0, 0, 0]), &seg, 2).unwrap());
        assert!(dominates_polytope_at(&v(&[0, 0]), &seg, 0).is_err());
    }

    #[test]
    fn projection_examples() {
        let seg = poly(Flavor::MaxPlus, &[&[0, 0, 0], &[0, 1, 2]]);
        assert_eq!(principal_projection(&seg, &v(&[0, 1, 2])).unwrap(), v(&[0, 1, 2]));
        assert_eq!(principal_projection(&seg, &v(&[-1, 0, 0])).unwrap(), v(&[-1, -1, 0]));
        assert!(!member(&seg, &v(&[-1, 0, 0])).unwrap());

        let p = poly(Flavor::MaxPlus, &[&[0, 1], &[1, 0]]);
        assert_eq!(principal_projection(&p, &v(&[0, -1])).unwrap(), v(&[0, -1]));
        assert!(member(&p, &v(&[0, -1])).unwrap());
        assert!(member(&p, &v(&[1, 0])).unwrap());
    }

    #[test]
    fn min_plus_projection_bounds_from_above() {
        let p = poly(Flavor::MinPlus, &[&[0, 0, 0], &[0, 1, 2]]);
        let y = v(&[-1, 0, 0]);
        let proj = principal_projection(&p, &y).unwrap();
        assert!(crate::semiring::leq(&y, &proj).unwrap());
        // ⊞_k max_i(y_i − v_{k,i}) ⊗ v_k, evaluated directly
        let direct = p
            .generators()
            .iter()
            .map(|g| {
                let lam = g.iter().zip(&y).map(|(a, b)| b - a).reduce(|a, b| a.max_of(&b)).unwrap();
                scale(&lam, g)
            })
            .reduce(|a, b| trop_add(Flavor::MinPlus, &a, &b).unwrap())
            .unwrap();
        assert_eq!(proj, direct);
        assert!(member(&p, &v(&[3, 4, 5])).unwrap());
    }
}
