//! Path simulation on time grids with deterministic, order-independent
//! seeding.
//!
//! Each process carries a sampler recipe chosen at validation time:
//!
//! * **gaussian** — increments are exactly normal.
//! * **compound-poisson** — finite-activity jumps are drawn from the whole
//!   jump measure; the drift absorbs the compensator of the inner jumps.
//! * **gamma-subordinator** — increments use the exact gamma law.
//! * **composite** — the general recipe: jumps with `|y|` at or above a
//!   cutoff `epsilon` become a compound-Poisson part, while the compensated
//!   small-jump remainder is replaced by a Gaussian with the matching
//!   variance `sigma_eps^2 = integral of y^2 over |y| < epsilon`.  This
//!   substitution requires finite variation near the origin; processes
//!   whose small jumps have infinite variation are refused.
//!
//! Randomness comes from [`CounterRng`] streams addressed by
//! `(seed, path, cell)`, so batches are bit-identical for a fixed seed no
//! matter how many threads participate or how many draws neighboring cells
//! consume.

use rand::RngExt;
use rand_distr::{Distribution, Exp, Gamma, Normal, Poisson};
use rayon::prelude::*;

use crate::error::{LevyError, Result};
use crate::measure::{ActivityClass, DensityKind, DensityPiece, Region};
use crate::process::{ProcessSpec, SamplerKind};
use crate::quad::{QuadConfig, TailOutcome};
use crate::rng::CounterRng;

/// Default small-jump cutoff for the composite recipe.
pub const DEFAULT_SMALL_JUMP_CUTOFF: f64 = 1e-3;

/// A single path's largest fourth-power deviation claiming more than this
/// share of the batch total marks the sample as heavy-tailed (a practical
/// sign that the underlying fourth moment does not exist).
pub const HEAVY_TAIL_SHARE_THRESHOLD: f64 = 0.25;

/// Strictly increasing observation times starting at `t_0 = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeGrid {
    times: Vec<f64>,
}

impl TimeGrid {
    pub fn new(times: Vec<f64>) -> Result<Self> {
        if times.is_empty() || times[0] != 0.0 {
            return Err(LevyError::InvalidArgument(
                "time grid must start at t = 0".into(),
            ));
        }
        for w in times.windows(2) {
            if !(w[1] > w[0]) || !w[1].is_finite() {
                return Err(LevyError::InvalidArgument(format!(
                    "time grid must be finite and strictly increasing, got {} after {}",
                    w[1], w[0]
                )));
            }
        }
        Ok(TimeGrid { times })
    }

    /// `cells + 1` equispaced times covering `[0, horizon]`.
    pub fn uniform(horizon: f64, cells: usize) -> Result<Self> {
        if !(horizon > 0.0) || !horizon.is_finite() || cells == 0 {
            return Err(LevyError::InvalidArgument(
                "uniform grid needs a positive horizon and at least one cell".into(),
            ));
        }
        TimeGrid::new((0..=cells).map(|i| horizon * i as f64 / cells as f64).collect())
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    /// Number of increments (one less than the number of observation
    /// times).
    pub fn cells(&self) -> usize {
        self.times.len() - 1
    }
}

/// An immutable batch of simulated paths (row per path, column per grid
/// time; column 0 is identically zero).
#[derive(Debug, Clone)]
pub struct PathBatch {
    grid: TimeGrid,
    values: Vec<f64>,
    n_paths: usize,
    /// Seed the batch was generated from.
    pub seed: u64,
    /// Fingerprint of the generating process configuration.
    pub fingerprint: u64,
}

impl PathBatch {
    pub fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    pub fn n_paths(&self) -> usize {
        self.n_paths
    }

    /// All observations of one path, in grid order.
    pub fn path(&self, p: usize) -> &[f64] {
        let w = self.grid.times.len();
        &self.values[p * w..(p + 1) * w]
    }

    pub fn value(&self, p: usize, time_idx: usize) -> f64 {
        self.path(p)[time_idx]
    }

    /// All paths' values at one grid time.
    pub fn column(&self, time_idx: usize) -> Vec<f64> {
        (0..self.n_paths).map(|p| self.value(p, time_idx)).collect()
    }

    /// Raw row-major storage (paths by times), for bulk writers.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Largest single-path share of the batch's centered fourth-power sum
    /// at one grid time; near-1 values mean one path dominates the fourth
    /// moment.
    pub fn fourth_moment_max_share(&self, time_idx: usize) -> f64 {
        let col = self.column(time_idx);
        let mean = col.iter().sum::<f64>() / col.len() as f64;
        let mut total = 0.0;
        let mut max = 0.0f64;
        for x in col {
            let d4 = (x - mean).powi(4);
            total += d4;
            max = max.max(d4);
        }
        if total > 0.0 {
            max / total
        } else {
            0.0
        }
    }

    /// Heavy-tail diagnostic at the final grid time (see
    /// [`HEAVY_TAIL_SHARE_THRESHOLD`]).
    pub fn heavy_tailed(&self) -> bool {
        self.fourth_moment_max_share(self.grid.times.len() - 1) > HEAVY_TAIL_SHARE_THRESHOLD
    }
}

/// Exact sampler for one jump law of the compound-Poisson part.
///
/// Laws over density pieces work in mirrored coordinates `u = |y|` with a
/// side sign, except the Gaussian slice which keeps real-line coordinates.
#[derive(Debug, Clone)]
enum JumpLaw {
    Atom { y: f64 },
    /// Density `~ e^{-rate u}` on `[a, b)`, inverse CDF.
    ExpSlice { sign: f64, rate: f64, a: f64, b: f64 },
    /// Density `~ u^{-alpha}` on `[a, b)`, inverse CDF.
    PowerSlice { sign: f64, alpha: f64, a: f64, b: f64 },
    /// Normal(mean, sd) conditioned on `[lo, hi)`, by rejection.
    GaussianSlice { mean: f64, sd: f64, lo: f64, hi: f64 },
    /// Density `~ e^{-beta u} / u` on `[a, b)`: propose `a + Exp(beta)`,
    /// accept with probability `a / u` (and `u < b`), which is exact.
    GammaSlice { beta: f64, a: f64, b: f64 },
}

impl JumpLaw {
    fn sample(&self, rng: &mut CounterRng) -> f64 {
        match *self {
            JumpLaw::Atom { y } => y,
            JumpLaw::ExpSlice { sign, rate, a, b } => {
                // U maps to a - ln(1 - U span)/rate with
                // span = 1 - e^{-rate (b-a)} (span = 1 for b = inf).
                let span =
                    if b.is_finite() { -(-rate * (b - a)).exp_m1() } else { 1.0 };
                let u: f64 = rng.random();
                sign * (a - (-u * span).ln_1p() / rate)
            }
            JumpLaw::PowerSlice { sign, alpha, a, b } => {
                let u: f64 = rng.random();
                if alpha == 1.0 {
                    sign * (a * (b / a).powf(u))
                } else {
                    let p = 1.0 - alpha;
                    let bp = if b.is_finite() { b.powf(p) } else { 0.0 };
                    sign * (a.powf(p) + u * (bp - a.powf(p))).powf(1.0 / p)
                }
            }
            JumpLaw::GaussianSlice { mean, sd, lo, hi } => {
                let normal = Normal::new(mean, sd).expect("validated parameters");
                loop {
                    let y = normal.sample(rng);
                    if y >= lo && y < hi {
                        return y;
                    }
                }
            }
            JumpLaw::GammaSlice { beta, a, b } => {
                let exp = Exp::new(beta).expect("validated parameters");
                loop {
                    let u = a + exp.sample(rng);
                    if u < b && rng.random::<f64>() < a / u {
                        return u;
                    }
                }
            }
        }
    }
}

#[derive(Debug, Clone)]
struct JumpComponent {
    rate: f64,
    law: JumpLaw,
}

/// A compiled sampling recipe: everything [`sample_increment`] needs,
/// derived once from a process specification.
///
/// [`sample_increment`]: SamplerPlan::sample_increment
#[derive(Debug, Clone)]
pub struct SamplerPlan {
    /// Deterministic drift per unit time (compensator-adjusted).
    drift: f64,
    /// Gaussian variance per unit time (diffusion plus small-jump
    /// substitution).
    gauss_var: f64,
    /// Exact gamma part: (shape per unit time, rate).
    exact_gamma: Option<(f64, f64)>,
    jumps: Vec<JumpComponent>,
    /// The small-jump cutoff the plan was compiled with.
    pub cutoff: f64,
}

/// Intersect a piece with `lo_abs <= |y| < hi_abs`, staying on its side.
fn clip_abs(piece: &DensityPiece, lo_abs: f64, hi_abs: f64) -> Option<DensityPiece> {
    let (lo, hi) = if piece.positive_side() {
        (piece.lo.max(lo_abs), piece.hi.min(hi_abs))
    } else {
        (piece.lo.max(-hi_abs), piece.hi.min(-lo_abs))
    };
    if lo < hi {
        Some(DensityPiece { kind: piece.kind.clone(), lo, hi })
    } else {
        None
    }
}

/// Integrate `h` against a piece over its whole span, insisting on a
/// finite result (callers only pass integrands finite by construction).
fn piece_total<H: Fn(f64) -> f64>(piece: &DensityPiece, h: H) -> Result<f64> {
    let cfg = QuadConfig::default();
    match piece.integrate(Region::Full, h, &cfg)? {
        TailOutcome::Converged(v) => Ok(v.value),
        TailOutcome::Diverged => Err(LevyError::NonFiniteIntegrand { at: piece.lo }),
    }
}

/// Jump law plus mass for a clipped piece (`None` mass means "compute
/// numerically").
fn piece_component(piece: &DensityPiece) -> Result<JumpComponent> {
    let (a, b) = piece
        .clipped(Region::Full)
        .expect("caller only passes nonempty clipped pieces");
    let sign = if piece.positive_side() { 1.0 } else { -1.0 };
    let law = match piece.kind {
        DensityKind::ExpDecay { rate, .. } => JumpLaw::ExpSlice { sign, rate, a, b },
        DensityKind::PowerLaw { alpha, .. } => JumpLaw::PowerSlice { sign, alpha, a, b },
        DensityKind::GaussianJumps { mean, sd, .. } => {
            JumpLaw::GaussianSlice { mean, sd, lo: piece.lo, hi: piece.hi }
        }
        DensityKind::GammaLevy { beta, .. } => JumpLaw::GammaSlice { beta, a, b },
    };
    let rate = piece_total(piece, |_| 1.0)?;
    Ok(JumpComponent { rate, law })
}

impl SamplerPlan {
    /// Compile the recipe for a process under a given small-jump cutoff
    /// (only the composite recipe consults the cutoff; it must lie in
    /// `(0, 1]` so that the substituted jumps are all compensated ones).
    pub fn build(spec: &ProcessSpec, cutoff: f64) -> Result<SamplerPlan> {
        if !(cutoff > 0.0 && cutoff <= 1.0) {
            return Err(LevyError::InvalidArgument(format!(
                "small-jump cutoff must lie in (0, 1], got {cutoff}"
            )));
        }
        let t = &spec.triplet;
        let mut plan = SamplerPlan {
            drift: t.drift,
            gauss_var: t.sigma2,
            exact_gamma: None,
            jumps: Vec::new(),
            cutoff,
        };
        match spec.sampler {
            SamplerKind::Gaussian => {}
            SamplerKind::GammaSubordinator => {
                let piece = &t.measure.pieces()[0];
                let DensityKind::GammaLevy { c, beta } = piece.kind else {
                    unreachable!("validated by the process constructor");
                };
                plan.exact_gamma = Some((c, beta));
                // The exact gamma part delivers every jump uncompensated,
                // so the compensator of the inner jumps leaves the drift.
                plan.drift -= piece_total(
                    &clip_abs(piece, 0.0, 1.0).expect("gamma pieces reach down to 0"),
                    |y| y,
                )?;
            }
            SamplerKind::CompoundPoisson => {
                // Finite activity: sample the whole measure as jumps and
                // strip the full inner compensator from the drift.
                for &(y, m) in t.measure.atoms() {
                    plan.jumps.push(JumpComponent { rate: m, law: JumpLaw::Atom { y } });
                    if y.abs() < 1.0 {
                        plan.drift -= m * y;
                    }
                }
                for piece in t.measure.pieces() {
                    plan.jumps.push(piece_component(piece)?);
                    if let Some(inner) = clip_abs(piece, 0.0, 1.0) {
                        plan.drift -= piece_total(&inner, |y| y)?;
                    }
                }
            }
            SamplerKind::Composite => {
                if t.measure.activity() == ActivityClass::InfiniteInfiniteVariation {
                    return Err(LevyError::UnsupportedSampler(
                        "small jumps of infinite variation cannot be replaced by a \
                         Gaussian part; no exact recipe is available for this process"
                            .into(),
                    ));
                }
                for &(y, m) in t.measure.atoms() {
                    if y.abs() < cutoff {
                        plan.gauss_var += m * y * y;
                    } else {
                        plan.jumps.push(JumpComponent { rate: m, law: JumpLaw::Atom { y } });
                        if y.abs() < 1.0 {
                            plan.drift -= m * y;
                        }
                    }
                }
                for piece in t.measure.pieces() {
                    if let Some(small) = clip_abs(piece, 0.0, cutoff) {
                        plan.gauss_var += piece_total(&small, |y| y * y)?;
                    }
                    if let Some(mid) = clip_abs(piece, cutoff, 1.0) {
                        plan.drift -= piece_total(&mid, |y| y)?;
                    }
                    if let Some(big) = clip_abs(piece, cutoff, f64::INFINITY) {
                        plan.jumps.push(piece_component(&big)?);
                    }
                }
            }
        }
        Ok(plan)
    }

    /// One increment over a cell of width `dt`, drawn from the given
    /// stream.  Infallible by construction: every distribution parameter
    /// was validated when the plan was built.
    pub fn sample_increment(&self, dt: f64, rng: &mut CounterRng) -> f64 {
        debug_assert!(dt > 0.0);
        let mut x = self.drift * dt;
        if let Some((c, beta)) = self.exact_gamma {
            let gamma = Gamma::new(c * dt, 1.0 / beta).expect("validated parameters");
            x += gamma.sample(rng);
        }
        let var = self.gauss_var * dt;
        if var > 0.0 {
            let normal = Normal::new(0.0, var.sqrt()).expect("validated parameters");
            x += normal.sample(rng);
        }
        for comp in &self.jumps {
            let lambda = comp.rate * dt;
            if lambda <= 0.0 {
                continue;
            }
            let count = Poisson::new(lambda).expect("positive rate").sample(rng) as u64;
            for _ in 0..count {
                x += comp.law.sample(rng);
            }
        }
        x
    }
}

/// One increment distributed as `X_dt`, using a throwaway plan.  Batch
/// callers should compile a [`SamplerPlan`] once instead.
pub fn sample_increment(spec: &ProcessSpec, dt: f64, rng: &mut CounterRng) -> Result<f64> {
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(LevyError::InvalidArgument(format!(
            "increment duration must be positive and finite, got {dt}"
        )));
    }
    Ok(SamplerPlan::build(spec, DEFAULT_SMALL_JUMP_CUTOFF)?.sample_increment(dt, rng))
}

/// Simulate `n_paths` paths over the grid.  Deterministic in
/// `(spec, grid, n_paths, seed)` and bit-identical across thread counts:
/// cell `j` of path `p` draws only from the stream `(seed, p, j)`.
pub fn sample_paths(
    spec: &ProcessSpec,
    grid: &TimeGrid,
    n_paths: usize,
    seed: u64,
) -> Result<PathBatch> {
    sample_paths_with(spec, grid, n_paths, seed, DEFAULT_SMALL_JUMP_CUTOFF)
}

/// [`sample_paths`] with an explicit small-jump cutoff.
pub fn sample_paths_with(
    spec: &ProcessSpec,
    grid: &TimeGrid,
    n_paths: usize,
    seed: u64,
    cutoff: f64,
) -> Result<PathBatch> {
    if n_paths == 0 {
        return Err(LevyError::InvalidArgument("need at least one path".into()));
    }
    let plan = SamplerPlan::build(spec, cutoff)?;
    let times = grid.times();
    let width = times.len();
    let mut values = vec![0.0f64; n_paths * width];
    values.par_chunks_mut(width).enumerate().for_each(|(p, row)| {
        let mut x = 0.0;
        for j in 0..width - 1 {
            let dt = times[j + 1] - times[j];
            let mut rng = CounterRng::new(seed, p as u64, j as u64);
            x += plan.sample_increment(dt, &mut rng);
            row[j + 1] = x;
        }
    });
    Ok(PathBatch {
        grid: grid.clone(),
        values,
        n_paths,
        seed,
        fingerprint: spec.fingerprint(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::LevyMeasure;
    use crate::moments::moment_polynomials;
    use crate::process::{catalog, catalog_with, LevyTriplet, ProcessFlags};

    #[test]
    fn grids_are_validated() {
        assert!(TimeGrid::new(vec![0.0, 0.5, 1.0]).is_ok());
        assert!(TimeGrid::new(vec![0.5, 1.0]).is_err(), "must start at 0");
        assert!(TimeGrid::new(vec![0.0, 1.0, 1.0]).is_err(), "strictly increasing");
        assert!(TimeGrid::new(vec![]).is_err());
        let g = TimeGrid::uniform(2.0, 4).unwrap();
        assert_eq!(g.times(), &[0.0, 0.5, 1.0, 1.5, 2.0]);
        assert_eq!(g.cells(), 4);
    }

    #[test]
    fn single_time_grid_yields_zero_batch() {
        let spec = catalog("brownian").unwrap();
        let grid = TimeGrid::new(vec![0.0]).unwrap();
        let batch = sample_paths(&spec, &grid, 3, 7).unwrap();
        assert_eq!(batch.n_paths(), 3);
        for p in 0..3 {
            assert_eq!(batch.path(p), &[0.0]);
        }
    }

    /// Batch raw moments at every grid time against the exact moment
    /// curves, within 4 standard errors (seeded, so stable forever).
    fn check_moments(spec: &ProcessSpec, orders: usize, n: usize, seed: u64, label: &str) {
        let grid = TimeGrid::new(vec![0.0, 0.5, 1.0]).unwrap();
        let batch = sample_paths(spec, &grid, n, seed).unwrap();
        let mus = moment_polynomials(spec, orders, &QuadConfig::default()).unwrap();
        for (idx, &t) in grid.times().iter().enumerate().skip(1) {
            let col = batch.column(idx);
            for k in 1..=orders {
                let want = mus[k].eval(t);
                let powers: Vec<f64> = col.iter().map(|x| x.powi(k as i32)).collect();
                let mean = powers.iter().sum::<f64>() / n as f64;
                let var = powers.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>()
                    / (n as f64 - 1.0);
                let se = (var / n as f64).sqrt();
                let slack = 4.0 * se + 1e-12;
                assert!(
                    (mean - want).abs() <= slack,
                    "{label}: order {k} at t={t}: {mean} vs {want} (4se = {slack:.3e})"
                );
            }
        }
    }

    #[test]
    fn gaussian_recipe_matches_moments() {
        check_moments(&catalog("brownian").unwrap(), 4, 40_000, 11, "brownian");
        let drifted = catalog_with(
            "brownian",
            &[("drift".to_string(), 2.0)].into_iter().collect(),
        )
        .unwrap();
        check_moments(&drifted, 3, 40_000, 12, "drifted brownian");
    }

    #[test]
    fn compound_poisson_recipes_match_moments() {
        check_moments(&catalog("cpoisson-two-point").unwrap(), 4, 40_000, 13, "two-point");
        check_moments(&catalog("cpoisson-gauss-jumps").unwrap(), 3, 40_000, 14, "gauss-jumps");
    }

    #[test]
    fn gamma_recipe_is_exact_and_monotone() {
        let spec = catalog("gamma").unwrap();
        check_moments(&spec, 3, 40_000, 15, "gamma");
        let grid = TimeGrid::new(vec![0.0, 0.25, 0.5, 1.0]).unwrap();
        let batch = sample_paths(&spec, &grid, 2_000, 16).unwrap();
        for p in 0..batch.n_paths() {
            let path = batch.path(p);
            assert!(
                path.windows(2).all(|w| w[1] >= w[0]),
                "subordinator paths must be nondecreasing"
            );
        }
    }

    #[test]
    fn composite_recipe_matches_moments() {
        check_moments(&catalog("jump-diffusion").unwrap(), 4, 40_000, 17, "jump-diffusion");
    }

    #[test]
    fn composite_gamma_measure_uses_the_slice_sampler() {
        // A gamma jump measure forced through the composite recipe (extra
        // diffusion makes it ineligible for the exact gamma sampler)
        // exercises the rejection slice sampler.
        let piece = DensityPiece::new(
            DensityKind::GammaLevy { c: 1.0, beta: 1.0 },
            0.0,
            f64::INFINITY,
        )
        .unwrap();
        let measure = LevyMeasure::new(vec![], vec![piece]).unwrap();
        let drift = 1.0 - (-1.0f64).exp(); // inner compensator of the jumps
        let spec = ProcessSpec::new(
            LevyTriplet::new(drift, 0.25, measure).unwrap(),
            SamplerKind::Composite,
            ProcessFlags::default(),
        )
        .unwrap();
        check_moments(&spec, 2, 15_000, 18, "gamma + diffusion");
    }

    #[test]
    fn poisson_count_structure_is_exact() {
        // Unit jumps at rate 1 with drift -1: X_1 + 1 is a Poisson(1)
        // count, so every sample is integer-valued and the mean is 0.
        let measure = LevyMeasure::new(vec![(1.0, 1.0)], vec![]).unwrap();
        let spec = ProcessSpec::new(
            LevyTriplet::new(-1.0, 0.0, measure).unwrap(),
            SamplerKind::CompoundPoisson,
            ProcessFlags::default(),
        )
        .unwrap();
        let grid = TimeGrid::new(vec![0.0, 1.0]).unwrap();
        let n = 40_000;
        let batch = sample_paths(&spec, &grid, n, 19).unwrap();
        let col = batch.column(1);
        for &x in &col {
            let count = x + 1.0;
            assert!(count >= 0.0 && count.fract() == 0.0, "not a shifted count: {x}");
        }
        let mean = col.iter().sum::<f64>() / n as f64;
        assert!(mean.abs() < 4.0 / (n as f64).sqrt(), "centered Poisson mean: {mean}");
    }

    #[test]
    fn batch_average_characteristic_function_matches_exponent() {
        use crate::exponent::eval_exponent;
        for (name, seed) in [("brownian", 21u64), ("gamma", 22), ("jump-diffusion", 23)] {
            let spec = catalog(name).unwrap();
            let grid = TimeGrid::new(vec![0.0, 1.0]).unwrap();
            let n = 40_000;
            let batch = sample_paths(&spec, &grid, n, seed).unwrap();
            let col = batch.column(1);
            for xi in [0.5, 1.0, 2.0] {
                let psi = eval_exponent(&spec, xi, &QuadConfig::default()).unwrap();
                let want = (-psi).exp();
                let (mut re, mut im) = (0.0, 0.0);
                for &x in &col {
                    re += (xi * x).cos();
                    im += (xi * x).sin();
                }
                let (re, im) = (re / n as f64, im / n as f64);
                // Component standard errors are at most 1/(2 sqrt(n));
                // bound both deviations by 4 of those.
                let se = 0.5 / (n as f64).sqrt();
                assert!(
                    (re - want.re).abs() <= 4.0 * se && (im - want.im).abs() <= 4.0 * se,
                    "{name} at xi={xi}: ({re}, {im}) vs ({}, {})",
                    want.re,
                    want.im
                );
            }
        }
    }

    #[test]
    fn batches_are_bit_identical_across_thread_counts() {
        let spec = catalog("jump-diffusion").unwrap();
        let grid = TimeGrid::new(vec![0.0, 0.3, 1.0]).unwrap();
        let run = |threads: usize| {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap();
            pool.install(|| sample_paths(&spec, &grid, 500, 99).unwrap())
        };
        let one = run(1);
        let four = run(4);
        assert_eq!(one.values(), four.values(), "thread count changed the batch");
        let again = run(4);
        assert_eq!(four.values(), again.values(), "re-run changed the batch");
    }

    #[test]
    fn infinite_variation_small_jumps_are_refused() {
        // |y|^{-2.2} near 0 integrates y^2 but not |y|: valid measure,
        // no composite recipe.
        let piece = DensityPiece::new(
            DensityKind::PowerLaw { c: 1.0, alpha: 2.2 },
            0.0,
            1.0,
        )
        .unwrap();
        let measure = LevyMeasure::new(vec![], vec![piece]).unwrap();
        let spec = ProcessSpec::new(
            LevyTriplet::new(0.0, 0.0, measure).unwrap(),
            SamplerKind::Composite,
            ProcessFlags::default(),
        )
        .unwrap();
        let err = SamplerPlan::build(&spec, DEFAULT_SMALL_JUMP_CUTOFF).unwrap_err();
        assert!(matches!(err, LevyError::UnsupportedSampler(_)), "got {err:?}");
    }

    #[test]
    fn heavy_tailed_batches_are_flagged_and_light_ones_are_not() {
        // Jumps with a |y|^{-2.5} tail have infinite variance: one path's
        // largest excursion dominates the batch fourth-power sum.
        let pieces = vec![
            DensityPiece::new(
                DensityKind::PowerLaw { c: 0.5, alpha: 2.5 },
                1.0,
                f64::INFINITY,
            )
            .unwrap(),
            DensityPiece::new(
                DensityKind::PowerLaw { c: 0.5, alpha: 2.5 },
                f64::NEG_INFINITY,
                -1.0,
            )
            .unwrap(),
        ];
        let measure = LevyMeasure::new(vec![], pieces).unwrap();
        let spec = ProcessSpec::new(
            LevyTriplet::new(0.0, 0.0, measure).unwrap(),
            SamplerKind::CompoundPoisson,
            ProcessFlags::default(),
        )
        .unwrap();
        let grid = TimeGrid::new(vec![0.0, 1.0]).unwrap();
        let batch = sample_paths(&spec, &grid, 20_000, 31).unwrap();
        assert!(batch.heavy_tailed(), "power tail batch should trip the diagnostic");
        let light = sample_paths(&catalog("brownian").unwrap(), &grid, 20_000, 31).unwrap();
        assert!(!light.heavy_tailed(), "gaussian batch should not trip the diagnostic");
    }

    #[test]
    fn single_increment_helper_agrees_with_plan() {
        let spec = catalog("brownian").unwrap();
        let mut a = CounterRng::new(5, 0, 0);
        let mut b = CounterRng::new(5, 0, 0);
        let plan = SamplerPlan::build(&spec, DEFAULT_SMALL_JUMP_CUTOFF).unwrap();
        let x = sample_increment(&spec, 0.5, &mut a).unwrap();
        let y = plan.sample_increment(0.5, &mut b);
        assert_eq!(x, y);
        assert!(sample_increment(&spec, 0.0, &mut a).is_err());
        assert!(SamplerPlan::build(&spec, 0.0).is_err());
        assert!(SamplerPlan::build(&spec, 1.5).is_err());
    }
}
