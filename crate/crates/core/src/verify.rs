//! Seeded sampling of regular points and residual statistics.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::SpacetimePoint;
use crate::error::{Error, Result};
use crate::fields::{DiracSolutionChiral, ScalarField, SingularSet};
use crate::operators::{dirac_residual_chiral_scaled, kg_residual_scaled};

/// Where and how many points to draw.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleConfig {
    pub seed: u64,
    pub count: usize,
    /// Spatial coordinates are drawn from `[−w, w]³`.
    pub box_half_width: f64,
    /// Points closer than this to any singular set are rejected.
    pub exclusion_radius: f64,
    /// Times are drawn from `[−T, T]`.
    pub time_window: f64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            count: 500,
            box_half_width: 3.0,
            exclusion_radius: 0.1,
            time_window: 2.0,
        }
    }
}

impl SampleConfig {
    pub fn with_seed(seed: u64, count: usize) -> Self {
        Self {
            seed,
            count,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.count == 0 {
            return Err(Error::InvalidConfig("count must be positive".into()));
        }
        if self.exclusion_radius.is_nan() || self.exclusion_radius <= 0.0 {
            return Err(Error::InvalidConfig("exclusion radius must be positive".into()));
        }
        if !(self.box_half_width > 0.0 && self.box_half_width.is_finite()) {
            return Err(Error::InvalidConfig("box half-width must be positive".into()));
        }
        if !(self.time_window >= 0.0 && self.time_window.is_finite()) {
            return Err(Error::InvalidConfig("time window must be non-negative".into()));
        }
        Ok(())
    }
}

/// Rejection-samples `cfg.count` points outside the exclusion tubes, giving
/// up after `10·count` draws.
pub fn sample_points(cfg: &SampleConfig, singular_sets: &[SingularSet]) -> Result<Vec<SpacetimePoint>> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let budget = 10 * cfg.count;
    let w = cfg.box_half_width;
    let tw = cfg.time_window;
    let mut points = Vec::with_capacity(cfg.count);
    for _ in 0..budget {
        let t = if tw > 0.0 { rng.random_range(-tw..=tw) } else { 0.0 };
        let p = SpacetimePoint::new(
            t,
            rng.random_range(-w..=w),
            rng.random_range(-w..=w),
            rng.random_range(-w..=w),
        );
        if singular_sets.iter().all(|s| s.distance(&p) > cfg.exclusion_radius) {
            points.push(p);
            if points.len() == cfg.count {
                return Ok(points);
            }
        }
    }
    Err(Error::SamplingBudget {
        requested: cfg.count,
        accepted: points.len(),
        attempts: budget,
    })
}

/// Residual components at one point plus the local scale used for the
/// relative figure.
#[derive(Debug, Clone, PartialEq)]
pub struct PointResidual {
    pub components: Vec<Complex64>,
    pub scale: f64,
}

impl PointResidual {
    pub fn new(components: Vec<Complex64>, scale: f64) -> Self {
        Self { components, scale }
    }

    pub fn abs(&self) -> f64 {
        self.components.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn rel(&self) -> f64 {
        self.abs() / self.scale.max(1e-30)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub max_abs: f64,
    pub mean_abs: f64,
    pub p99_abs: f64,
    pub max_rel: f64,
    pub mean_rel: f64,
    pub points_used: usize,
    /// Points the residual function refused as singular.
    pub points_rejected: usize,
}

/// Sum in a fixed binary-tree order.
fn pairwise_sum(v: &[f64]) -> f64 {
    match v.len() {
        0 => 0.0,
        1 => v[0],
        n => pairwise_sum(&v[..n / 2]) + pairwise_sum(&v[n / 2..]),
    }
}

/// Evaluates `residual` at every point (in parallel) and reduces the results
/// in point order.
pub fn residual_stats<F>(residual: F, points: &[SpacetimePoint]) -> Result<ResidualReport>
where
    F: Fn(&SpacetimePoint) -> Result<PointResidual> + Sync,
{
    if points.is_empty() {
        return Err(Error::EmptyPoints);
    }
    let evaluated: Vec<Result<PointResidual>> = points.par_iter().map(&residual).collect();
    let mut abs = Vec::with_capacity(points.len());
    let mut rel = Vec::with_capacity(points.len());
    let mut rejected = 0;
    for r in evaluated {
        match r {
            Ok(r) => {
                abs.push(r.abs());
                rel.push(r.rel());
            }
            Err(Error::SingularPoint { .. }) => rejected += 1,
            Err(e) => return Err(e),
        }
    }
    if abs.is_empty() {
        return Err(Error::EmptyPoints);
    }
    let n = abs.len();
    let max_abs = abs.iter().copied().fold(0.0, f64::max);
    let max_rel = rel.iter().copied().fold(0.0, f64::max);
    let mean_abs = pairwise_sum(&abs) / n as f64;
    let mean_rel = pairwise_sum(&rel) / n as f64;
    let mut sorted = abs.clone();
    sorted.sort_by(f64::total_cmp);
    let idx = ((0.99 * n as f64).ceil() as usize).clamp(1, n) - 1;
    Ok(ResidualReport {
        max_abs,
        mean_abs,
        // The mean can exceed a low percentile only through rounding.
        p99_abs: sorted[idx].max(mean_abs),
        max_rel,
        mean_rel,
        points_used: n,
        points_rejected: rejected,
    })
}

/// Dirac-equation residual of a chiral solution as a [`PointResidual`].
pub fn dirac_point_residual(sol: &DiracSolutionChiral, p: &SpacetimePoint) -> Result<PointResidual> {
    let ((r1, r2), scale) = dirac_residual_chiral_scaled(sol, p)?;
    Ok(PointResidual::new(vec![r1[0], r1[1], r2[0], r2[1]], scale))
}

/// Samples points away from the solution's singular set and reports its
/// Dirac residual.
pub fn dirac_residual_report(sol: &DiracSolutionChiral, cfg: &SampleConfig) -> Result<ResidualReport> {
    let points = sample_points(cfg, &[sol.singular_set()])?;
    residual_stats(|p| dirac_point_residual(sol, p), &points)
}

/// KG residual of a scalar field over sampled regular points.
pub fn kg_residual_report(f: &ScalarField, m: f64, cfg: &SampleConfig) -> Result<ResidualReport> {
    let points = sample_points(cfg, &[f.singular_set()])?;
    residual_stats(
        |p| {
            let (r, scale) = kg_residual_scaled(f, m, p)?;
            Ok(PointResidual::new(vec![r], scale))
        },
        &points,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CompareMode {
    Absolute,
    UpToGlobalConstant,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Comparison {
    pub max_diff: f64,
    /// Fitted constant `c` with `f ≈ c·g` (ratio mode only).
    pub constant: Option<Complex64>,
}

/// Compares two vector-valued evaluators over `points`. In ratio mode the
/// least-squares constant `c = Σ ḡ f / Σ |g|²` is fitted first and the
/// reported difference is `max |f − c g|`.
pub fn compare_fields<F, G>(f: F, g: G, points: &[SpacetimePoint], mode: CompareMode) -> Result<Comparison>
where
    F: Fn(&SpacetimePoint) -> Vec<Complex64> + Sync,
    G: Fn(&SpacetimePoint) -> Vec<Complex64> + Sync,
{
    if points.is_empty() {
        return Err(Error::EmptyPoints);
    }
    let pairs: Vec<(Vec<Complex64>, Vec<Complex64>)> = points.par_iter().map(|p| (f(p), g(p))).collect();
    let constant = match mode {
        CompareMode::Absolute => None,
        CompareMode::UpToGlobalConstant => {
            let mut num = Complex64::new(0.0, 0.0);
            let mut den = 0.0;
            for (fv, gv) in &pairs {
                for (a, b) in fv.iter().zip(gv) {
                    num += b.conj() * a;
                    den += b.norm_sqr();
                }
            }
            if den == 0.0 {
                return Err(Error::ZeroReference);
            }
            Some(num / den)
        }
    };
    let c = constant.unwrap_or(Complex64::new(1.0, 0.0));
    let max_diff = pairs
        .iter()
        .flat_map(|(fv, gv)| fv.iter().zip(gv).map(move |(a, b)| (a - c * b).norm()))
        .fold(0.0, f64::max);
    Ok(Comparison { max_diff, constant })
}

/// Values `(a₁, a₂, b₁, b₂)` as a vector, for [`compare_fields`].
pub fn solution_values(sol: &DiracSolutionChiral) -> impl Fn(&SpacetimePoint) -> Vec<Complex64> + Sync + '_ {
    move |p| sol.eval(p).to_vec()
}
