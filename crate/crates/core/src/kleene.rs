//! Kleene stars, dominator matrices and polytrope detection.
//!
//! The min-plus dominator of a max-plus polytope with generator matrix `V`
//! has entries `D[j][i] = min_k (V[j][k] − V[i][k])`: column `i` is the
//! greatest lower bound of the span points with `i`-th coordinate at least 0,
//! attained by the generators rescaled to put 0 in coordinate `i`. `D` is
//! always a max-plus Kleene star and its column space is the min-plus hull of
//! the polytope. A max-plus polytope is Euclidean convex exactly when it is
//! min-plus convex, exactly when every dominator column is a member, and
//! then it is the column space of its dominator.

use crate::error::Error;
use crate::polytope::{sample_euclidean_midpoints_with, Guide, MidpointReport, SamplerConfig};
use crate::residuation::{member, Polytope};
use crate::scalar::Scalar;
use crate::semiring::{negate_transpose, scale, trop_add, trop_mat_mul, Flavor, TropMatrix, TropVector};

/// A square matrix with zero diagonal that is idempotent under its flavor's
/// product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KleeneStar {
    flavor: Flavor,
    matrix: TropMatrix,
}

impl KleeneStar {
    pub fn new(flavor: Flavor, matrix: TropMatrix) -> Result<Self, Error> {
        if is_kleene_star(flavor, &matrix)? {
            Ok(KleeneStar { flavor, matrix })
        } else {
            Err(Error::NotKleeneStar(flavor))
        }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn matrix(&self) -> &TropMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> TropMatrix {
        self.matrix
    }

    /// The polytope spanned by the columns under the star's own flavor.
    pub fn column_space(&self) -> Polytope {
        Polytope::new(self.flavor, self.matrix.clone())
    }
}

pub fn is_kleene_star(flavor: Flavor, a: &TropMatrix) -> Result<bool, Error> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    if (0..a.rows()).any(|i| !a.get(i, i).is_zero()) {
        return Ok(false);
    }
    Ok(&trop_mat_mul(flavor, a, a)? == a)
}

/// The min-plus dominator `V ⊠ (−Vᵀ)` of a max-plus polytope.
pub fn dominator(p: &Polytope) -> Result<KleeneStar, Error> {
    p.require_flavor(Flavor::MaxPlus)?;
    let v = p.generator_matrix();
    let d = trop_mat_mul(Flavor::MinPlus, v, &negate_transpose(v))?;
    Ok(KleeneStar { flavor: Flavor::MaxPlus, matrix: d })
}

/// The max-plus dominator `V ⊗ (−Vᵀ)` of a min-plus polytope. Column `i` is
/// the least upper bound of the span points with `i`-th coordinate at most 0.
pub fn dominator_dual(p: &Polytope) -> Result<KleeneStar, Error> {
    p.require_flavor(Flavor::MinPlus)?;
    let v = p.generator_matrix();
    let d = trop_mat_mul(Flavor::MaxPlus, v, &negate_transpose(v))?;
    Ok(KleeneStar { flavor: Flavor::MinPlus, matrix: d })
}

/// The min-plus convex hull of `p`, presented as a max-plus polytope
/// generated by the dominator columns.
pub fn min_plus_hull(p: &Polytope) -> Result<Polytope, Error> {
    Ok(dominator(p)?.column_space())
}

/// Index of the first dominator column outside `p`, if any.
fn first_missing_column(p: &Polytope, d: &KleeneStar) -> Result<Option<usize>, Error> {
    for i in 0..d.matrix().cols() {
        if !member(p, &d.matrix().column(i))? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

pub fn is_min_plus_convex(p: &Polytope) -> Result<bool, Error> {
    let d = dominator(p)?;
    Ok(first_missing_column(p, &d)?.is_none())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub input: Polytope,
    pub dominator: KleeneStar,
    pub is_min_plus_convex: bool,
    pub is_polytrope: bool,
    /// Index of the witness column in the dominator.
    pub witness_column: Option<usize>,
    /// The lowest-indexed dominator column that is not a member of `input`.
    pub witness: Option<TropVector>,
}

/// Decides whether a max-plus polytope is a polytrope (Euclidean convex).
pub fn classify(p: &Polytope) -> Result<Classification, Error> {
    let d = dominator(p)?;
    let missing = first_missing_column(p, &d)?;
    let convex = missing.is_none();
    Ok(Classification {
        input: p.clone(),
        witness: missing.map(|i| d.matrix().column(i)),
        witness_column: missing,
        dominator: d,
        is_min_plus_convex: convex,
        is_polytrope: convex,
    })
}

/// `ρ_A(r) = A ⊗ (−r)ᵀ`, mapping the max-plus row space of `A` onto its
/// column space. Membership of `r` is not checked; see
/// [`duality_rho_checked`].
pub fn duality_rho(a: &TropMatrix, r: &TropVector) -> Result<TropVector, Error> {
    a.apply(Flavor::MaxPlus, &r.negate())
}

/// `χ_A(c) = (−c)ᵀ ⊗ A`, mapping the max-plus column space of `A` onto its
/// row space. Membership of `c` is not checked; see [`duality_chi_checked`].
pub fn duality_chi(a: &TropMatrix, c: &TropVector) -> Result<TropVector, Error> {
    a.apply_left(Flavor::MaxPlus, &c.negate())
}

pub fn duality_rho_checked(a: &TropMatrix, r: &TropVector) -> Result<TropVector, Error> {
    let rows = Polytope::new(Flavor::MaxPlus, a.transpose());
    if !member(&rows, r)? {
        return Err(Error::NotInSpan(r.to_string()));
    }
    duality_rho(a, r)
}

pub fn duality_chi_checked(a: &TropMatrix, c: &TropVector) -> Result<TropVector, Error> {
    let cols = Polytope::new(Flavor::MaxPlus, a.clone());
    if !member(&cols, c)? {
        return Err(Error::NotInSpan(c.to_string()));
    }
    duality_chi(a, c)
}

/// For a polytope that is both max-plus and min-plus convex, checks that its
/// max-plus dominator (taken over the min-plus generators, the rows of `−D`)
/// is `−Dᵀ` where `D` is its min-plus dominator.
pub fn verify_dominator_relation(p: &Polytope) -> Result<bool, Error> {
    let d = dominator(p)?;
    if let Some(column) = first_missing_column(p, &d)? {
        return Err(Error::NotMinPlusConvex { column });
    }
    let min_plus_gens = negate_transpose(d.matrix());
    let as_min_plus = Polytope::new(Flavor::MinPlus, min_plus_gens.clone());
    let dual = dominator_dual(&as_min_plus)?;
    Ok(dual.matrix() == &min_plus_gens)
}

/// Segments along which a non-polytrope must leave its span.
///
/// Folding the rescaled generators `v_k − V[i][k]` of a witness column `i`
/// with `⊞` starts inside `p` and ends at the witness outside it, so some step
/// gives `x, y ∈ p` with `q = x ⊞ y ∉ p`. Lowering `x` to a minimal point of
/// `p` inside the box `[q, x]` keeps `x ⊞ y = q`, and from such a point the
/// segment towards `y` immediately exits `p`. Returns no guides when `p` is
/// a polytrope.
pub fn violation_guides(p: &Polytope, depth: u32) -> Result<Vec<Guide>, Error> {
    let c = classify(p)?;
    let Some(i) = c.witness_column else {
        return Ok(Vec::new());
    };
    let v = p.generator_matrix();
    let rescaled: Vec<TropVector> = (0..v.cols()).map(|k| scale(&-v.get(i, k), &v.column(k))).collect();

    let mut acc = rescaled[0].clone();
    let mut split = None;
    for w in &rescaled[1..] {
        let next = trop_add(Flavor::MinPlus, &acc, w)?;
        if !member(p, &next)? {
            split = Some((acc, w.clone(), next));
            break;
        }
        acc = next;
    }
    let (x, y, q) = split.expect("the full fold is the witness, which lies outside the polytope");

    let x_low = descend_to_minimal(p, &x, &q)?;
    let y_low = descend_to_minimal(p, &y, &q)?;
    Ok(vec![
        Guide { anchor: x_low, toward: y.clone(), depth },
        Guide { anchor: y_low, toward: x, depth },
    ])
}

/// Euclidean-convexity probe seeded with [`violation_guides`], followed by
/// random midpoint trials. Stops at the first violation.
pub fn guided_midpoint_search(p: &Polytope, trials: usize, seed: u64) -> Result<MidpointReport, Error> {
    let guides = violation_guides(p, GUIDE_DEPTH)?;
    let config = SamplerConfig { stop_at_first: true, ..SamplerConfig::new(trials, seed) };
    sample_euclidean_midpoints_with(p, &config, &guides)
}

/// Halvings probed along each guide segment.
pub const GUIDE_DEPTH: u32 = 64;

const MAX_DESCENT_STEPS: usize = 10_000;

/// Walks from `x ∈ p` down to a point of `p ∩ [q, x]` with nothing of `p`
/// strictly below it inside the box.
///
/// Each step lowers a subset `J` of coordinates by a common amount `s`.
/// Writing `A_k`, `B_k` for the minimum of `x_c − V[c][k]` over `c ∉ J` and
/// `c ∈ J`, the bracket of generator `k` at the moved point is
/// `min(A_k, B_k − s)`, so the moved point stays a member exactly for `s`
/// between `max_{r∈J} min_{k: B_k+V[r][k]=x_r} (B_k − A_k)` and
/// `min_{r∉J} max_{k: A_k+V[r][k]=x_r} (B_k − A_k)`. If some point of the box
/// lies strictly below `x`, lowering the coordinates where they differ is
/// feasible for small `s`, so the walk only stops at minimal points.
pub fn descend_to_minimal(p: &Polytope, x: &TropVector, q: &TropVector) -> Result<TropVector, Error> {
    p.check_point(x)?;
    p.check_point(q)?;
    let n = p.dim();
    let v = p.generator_matrix();
    let mut x = x.clone().into_entries();

    for _ in 0..MAX_DESCENT_STEPS {
        let free: Vec<usize> = (0..n).filter(|&r| x[r] > *q.get(r)).collect();
        if free.is_empty() {
            break;
        }
        let mut moved = false;
        for mask in 1u64..(1u64 << free.len().min(20)) {
            let in_j: Vec<bool> = {
                let mut flags = vec![false; n];
                for (b, &r) in free.iter().enumerate() {
                    flags[r] = mask & (1 << b) != 0;
                }
                flags
            };
            if let Some(step) = max_step(v, &x, q, &in_j) {
                for r in 0..n {
                    if in_j[r] {
                        x[r] = &x[r] - &step;
                    }
                }
                moved = true;
                break;
            }
        }
        if !moved {
            break;
        }
    }
    TropVector::new(x)
}

/// Largest positive `s` such that lowering the `in_j` coordinates of `x` by
/// `s` stays in the span of `v` and above `q`, or `None` if no positive step
/// is possible.
fn max_step(v: &TropMatrix, x: &[Scalar], q: &TropVector, in_j: &[bool]) -> Option<Scalar> {
    let (n, m) = (v.rows(), v.cols());
    let min_over = |k: usize, inside: bool| -> Option<Scalar> {
        (0..n)
            .filter(|&c| in_j[c] == inside)
            .map(|c| &x[c] - v.get(c, k))
            .reduce(|a, b| a.min_of(&b))
    };
    let a: Vec<Option<Scalar>> = (0..m).map(|k| min_over(k, false)).collect();
    let b: Vec<Scalar> = (0..m).map(|k| min_over(k, true).expect("J is non-empty")).collect();
    // B_k − A_k, with A_k = +∞ when J covers every coordinate.
    let gap = |k: usize| a[k].as_ref().map(|ak| &b[k] - ak);

    let zero = Scalar::zero();
    for r in (0..n).filter(|&r| in_j[r]) {
        let lower = (0..m)
            .filter(|&k| &b[k] + v.get(r, k) == x[r])
            .map(&gap)
            .reduce(|s, t| match (s, t) {
                (Some(s), Some(t)) => Some(s.min_of(&t)),
                _ => None,
            })?;
        if lower.is_some_and(|l| l > zero) {
            return None;
        }
    }

    let mut step = (0..n)
        .filter(|&r| in_j[r])
        .map(|r| &x[r] - q.get(r))
        .reduce(|s, t| s.min_of(&t))
        .expect("J is non-empty");
    for r in (0..n).filter(|&r| !in_j[r]) {
        let upper = (0..m)
            .filter(|&k| a[k].as_ref().is_some_and(|ak| ak + v.get(r, k) == x[r]))
            .filter_map(&gap)
            .reduce(|s, t| s.max_of(&t))?;
        step = step.min_of(&upper);
    }
    (step > zero).then_some(step)
}
