//! Generator-level operations on tropical polytopes.

use crate::error::Error;
use crate::random::{self, RationalBounds};
use crate::residuation::{member, Polytope};
use crate::scalar::Scalar;
use crate::semiring::{TropMatrix, TropVector};

/// A scaling orbit, represented by its point with first coordinate 0 and that
/// coordinate dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint(TropVector);

impl ProjectivePoint {
    pub fn coords(&self) -> &TropVector {
        &self.0
    }
}

/// `(x_2 − x_1, …, x_n − x_1)`. Needs `n ≥ 2`.
pub fn projectivise(x: &TropVector) -> Result<ProjectivePoint, Error> {
    if x.len() < 2 {
        return Err(Error::TooFewCoordinates(x.len()));
    }
    let first = x.get(0);
    let coords = x.iter().skip(1).map(|v| v - first).collect();
    Ok(ProjectivePoint(TropVector::new(coords)?))
}

/// Drops generators that lie in the span of the others.
///
/// Generators are visited from the highest index down; each one is tested
/// against every generator still retained or not yet visited, so among
/// mutually redundant generators the earliest survives.
pub fn reduce_generators(p: &Polytope) -> Polytope {
    let gens = p.generators();
    let mut keep = vec![true; gens.len()];
    for k in (0..gens.len()).rev() {
        let others: Vec<TropVector> = gens
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k && keep[j])
            .map(|(_, g)| g.clone())
            .collect();
        if others.is_empty() {
            continue;
        }
        let rest = Polytope::from_generators(p.flavor(), &others).expect("non-empty, same length");
        if member(&rest, &gens[k]).expect("same length") {
            keep[k] = false;
        }
    }
    let kept: Vec<TropVector> = gens.into_iter().zip(keep).filter_map(|(g, k)| k.then_some(g)).collect();
    Polytope::new(p.flavor(), TropMatrix::from_columns(&kept).expect("at least one generator survives"))
}

/// Every generator of `q` lies in `p`.
pub fn contains_generators_of(p: &Polytope, q: &Polytope) -> Result<bool, Error> {
    for g in q.generators() {
        if !member(p, &g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Set equality of the spans, decided by mutual generator membership.
pub fn polytope_equal(p: &Polytope, q: &Polytope) -> Result<bool, Error> {
    if p.flavor() != q.flavor() {
        return Err(Error::FlavorMismatch { expected: p.flavor(), found: q.flavor() });
    }
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), found: q.dim() });
    }
    Ok(contains_generators_of(p, q)? && contains_generators_of(q, p)?)
}

/// Sampler knobs. Combination coefficients are drawn from `coefficients`,
/// affine weights `t` have denominators up to `max_weight_den`. With
/// `stop_at_first` the run ends at the first violation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplerConfig {
    pub trials: usize,
    pub seed: u64,
    pub coefficients: RationalBounds,
    pub max_weight_den: i64,
    pub stop_at_first: bool,
}

impl SamplerConfig {
    pub fn new(trials: usize, seed: u64) -> Self {
        SamplerConfig {
            trials,
            seed,
            coefficients: RationalBounds::default(),
            max_weight_den: 16,
            stop_at_first: false,
        }
    }
}

/// A segment to probe near one end: points `anchor + t·(toward − anchor)` for
/// `t = 1/2, 1/4, …, 2^-depth`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Guide {
    pub anchor: TropVector,
    pub toward: TropVector,
    pub depth: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MidpointReport {
    pub trials_run: usize,
    /// Points `t·u + (1−t)·v` with `u, v` in the span but the point outside it.
    pub violations: Vec<TropVector>,
}

/// Falsification oracle for Euclidean convexity.
///
/// Each trial draws two random span members and a random rational weight and
/// tests whether the affine combination is still in the span. An empty report
/// is evidence of convexity, any violation is a certificate against it.
pub fn sample_euclidean_midpoints(p: &Polytope, trials: usize, seed: u64) -> Result<MidpointReport, Error> {
    sample_euclidean_midpoints_with(p, &SamplerConfig::new(trials, seed), &[])
}

/// [`sample_euclidean_midpoints`] with explicit configuration. Guided segments
/// are probed first and every probe counts against `config.trials`.
pub fn sample_euclidean_midpoints_with(
    p: &Polytope,
    config: &SamplerConfig,
    guides: &[Guide],
) -> Result<MidpointReport, Error> {
    if config.trials == 0 {
        return Err(Error::NoTrials);
    }
    let mut report = MidpointReport::default();
    let done = |report: &MidpointReport| {
        report.trials_run == config.trials || (config.stop_at_first && !report.violations.is_empty())
    };
    let probe = |report: &mut MidpointReport, point: TropVector| -> Result<(), Error> {
        report.trials_run += 1;
        if !member(p, &point)? {
            report.violations.push(point);
        }
        Ok(())
    };

    let half = Scalar::ratio(1, 2)?;
    'guides: for guide in guides {
        p.check_point(&guide.anchor)?;
        p.check_point(&guide.toward)?;
        let mut t = Scalar::from_int(1);
        for _ in 0..guide.depth {
            if done(&report) {
                break 'guides;
            }
            t = t.mul(&half);
            probe(&mut report, guide.toward.affine(&t, &guide.anchor)?)?;
        }
    }

    let mut rng = random::rng(config.seed);
    while !done(&report) {
        let u = random::sparse_span_member(&mut rng, p, config.coefficients);
        let v = random::sparse_span_member(&mut rng, p, config.coefficients);
        let t = random::unit_fraction(&mut rng, config.max_weight_den);
        probe(&mut report, u.affine(&t, &v)?)?;
    }
    Ok(report)
}
