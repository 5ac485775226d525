//! Monte Carlo hypothesis tests of the martingale properties, empirical
//! semigroup estimation, and growth-law diagnostics for the normalizer.
//!
//! A process `M_u` adapted to the path is a martingale over `s < t`
//! exactly when the increment `M_t - M_s` is orthogonal to every bounded
//! function of the past.  For the Markovian candidates tested here the
//! past reduces to `X_s`, so the tests estimate
//!
//! ```text
//! E[ (M_t - M_s) phi(X_s) ]
//! ```
//!
//! for a fixed family of probe functions `phi` and reject when any
//! Bonferroni-adjusted probe is significantly nonzero.  The candidates
//! are `M_u = f(X_u) - gamma(u)` (additive normalization, with
//! `gamma(u) = E f(X_u)`) and `M_u = g(X_u) / gamma(u)` (multiplicative
//! normalization, `gamma(u) = E g(X_u) > 0`).  A finite probe family
//! yields a *test*, not a proof: reports carry the probes used and the
//! user-asserted density assumptions alongside the verdict.
//!
//! Both observation times share the same simulated paths (common random
//! numbers), so increment statistics only carry increment noise.  The
//! normalizers are plug-in estimates from the same batch; their sampling
//! error enters each probe's standard error through the delta method, and
//! the residual bias is `O(1/n)`, far below the standard error at the
//! default batch size.

use libm::erfc;
use serde::Serialize;

use crate::error::{LevyError, Result};
use crate::process::{ProcessFlags, ProcessSpec};
use crate::simulate::{sample_paths, TimeGrid};

/// Default number of simulated paths.
pub const DEFAULT_N_PATHS: usize = 100_000;
/// Default test level (probability of a false rejection).
pub const DEFAULT_LEVEL: f64 = 0.01;
/// Default earlier observation time.
pub const DEFAULT_S: f64 = 0.5;
/// Default later observation time.
pub const DEFAULT_T: f64 = 1.0;

/// Which normalization a report tested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TestMode {
    Additive,
    Multiplicative,
}

/// A named test function probing the information available at time `s`.
#[derive(Clone, Copy)]
pub struct Probe {
    pub name: &'static str,
    pub func: fn(f64) -> f64,
}

/// The default probe family: a constant, two polynomial probes, and two
/// bounded localized probes.  Bounded probes catch departures that
/// polynomial probes average away; the constant probe is an exact-zero
/// control (plug-in centering annihilates it identically).
pub fn default_probes() -> Vec<Probe> {
    vec![
        Probe { name: "1", func: |_| 1.0 },
        Probe { name: "x", func: |x| x },
        Probe { name: "x^2", func: |x| x * x },
        Probe { name: "tanh(x)", func: f64::tanh },
        Probe { name: "exp(-x^2)", func: |x| (-x * x).exp() },
    ]
}

/// One probe's estimate of `E[(M_t - M_s) phi(X_s)]`.
#[derive(Debug, Clone, Serialize)]
pub struct ProbeResult {
    pub name: String,
    pub statistic: f64,
    pub std_error: f64,
    pub z: f64,
    pub p_value: f64,
    /// The statistic vanished identically (degenerate but correct: the
    /// probe cannot distinguish the candidate from a martingale).
    pub exact_zero: bool,
}

/// Outcome of a martingale hypothesis test.
#[derive(Debug, Clone, Serialize)]
pub struct MartingaleReport {
    pub mode: TestMode,
    pub s: f64,
    pub t: f64,
    pub n_paths: usize,
    pub seed: u64,
    pub level: f64,
    pub probes: Vec<ProbeResult>,
    /// Smallest probe p-value times the family size, capped at 1.
    pub adjusted_min_p: f64,
    /// True when the adjusted p-value falls below the level.
    pub reject: bool,
    /// Plug-in normalizer estimates at the two times.
    pub gamma_s: f64,
    pub gamma_t: f64,
    /// User-asserted density assumptions, echoed because the equivalence
    /// between "martingale" and the closed-form function classes needs
    /// them (the test itself does not check they hold).
    pub assumptions: ProcessFlags,
}

/// Deterministic pairwise summation (order-independent accumulation
/// error, reproducible across runs).
fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= 32 {
        xs.iter().sum()
    } else {
        let mid = xs.len() / 2;
        pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
    }
}

fn mean(xs: &[f64]) -> f64 {
    pairwise_sum(xs) / xs.len() as f64
}

/// Mean and its standard error (the leave-one-out jackknife collapses to
/// this closed form for a plain mean).
fn mean_and_se(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let m = mean(xs);
    let sq: Vec<f64> = xs.iter().map(|x| (x - m) * (x - m)).collect();
    (m, (pairwise_sum(&sq) / (n * (n - 1.0))).sqrt())
}

fn count_non_finite(xs: &[f64]) -> usize {
    xs.iter().filter(|x| !x.is_finite()).count()
}

/// Two-sided normal p-value for a z-score.
fn two_sided_p(z: f64) -> f64 {
    erfc(z.abs() / std::f64::consts::SQRT_2)
}

/// Monte Carlo estimate of `T_t f(x) = E f(x + X_t)` with its standard
/// error.  The caller asserts integrability of `f` under the marginal law
/// (cross-check against the moment and exponential-moment routines when
/// in doubt); draws where `f` is not finite abort the estimate.
pub fn estimate_semigroup(
    spec: &ProcessSpec,
    f: &dyn Fn(f64) -> f64,
    t: f64,
    x: f64,
    n_paths: usize,
    seed: u64,
) -> Result<(f64, f64)> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(LevyError::InvalidArgument(format!(
            "semigroup time must be positive and finite, got {t}"
        )));
    }
    if n_paths < 2 {
        return Err(LevyError::InvalidArgument("need at least two paths".into()));
    }
    let grid = TimeGrid::new(vec![0.0, t])?;
    let batch = sample_paths(spec, &grid, n_paths, seed)?;
    let values: Vec<f64> = batch.column(1).iter().map(|&v| f(x + v)).collect();
    let bad = count_non_finite(&values);
    if bad > 0 {
        return Err(LevyError::NonFiniteSamples { count: bad });
    }
    Ok(mean_and_se(&values))
}

/// Compute one probe's result from per-path increment terms `u_i`
/// (influence values whose mean is the statistic).
fn probe_result(name: &str, statistic: f64, influence: &[f64]) -> ProbeResult {
    let n = influence.len() as f64;
    let m = mean(influence);
    let sq: Vec<f64> = influence.iter().map(|v| (v - m) * (v - m)).collect();
    let se = (pairwise_sum(&sq) / (n * (n - 1.0))).sqrt();
    // A bitwise-zero statistic marks an algebraic cancellation (constant
    // probe, constant candidate, trivial process): pass with p = 1.
    let exact_zero = statistic == 0.0;
    let (z, p_value) = if exact_zero {
        (0.0, 1.0)
    } else if se == 0.0 {
        (f64::INFINITY * statistic.signum(), 0.0)
    } else {
        let z = statistic / se;
        (z, two_sided_p(z))
    };
    ProbeResult {
        name: name.to_string(),
        statistic,
        std_error: se,
        z,
        p_value,
        exact_zero,
    }
}

fn finish_report(
    mode: TestMode,
    s: f64,
    t: f64,
    n_paths: usize,
    seed: u64,
    level: f64,
    probes: Vec<ProbeResult>,
    gamma_s: f64,
    gamma_t: f64,
    flags: ProcessFlags,
) -> MartingaleReport {
    let k = probes.len() as f64;
    let min_p = probes.iter().map(|p| p.p_value).fold(f64::INFINITY, f64::min);
    let adjusted_min_p = (min_p * k).min(1.0);
    MartingaleReport {
        mode,
        s,
        t,
        n_paths,
        seed,
        level,
        probes,
        adjusted_min_p,
        reject: adjusted_min_p < level,
        gamma_s,
        gamma_t,
        assumptions: flags,
    }
}

fn check_test_arguments(s: f64, t: f64, n_paths: usize, level: f64) -> Result<()> {
    if !(s > 0.0 && t > s) || !t.is_finite() {
        return Err(LevyError::InvalidArgument(format!(
            "need observation times 0 < s < t, got s = {s}, t = {t}"
        )));
    }
    if n_paths < 2 {
        return Err(LevyError::InvalidArgument("need at least two paths".into()));
    }
    if !(level > 0.0 && level < 1.0) {
        return Err(LevyError::InvalidArgument(format!(
            "test level must lie in (0, 1), got {level}"
        )));
    }
    Ok(())
}

/// Test whether `f(X_t) - E f(X_t)` behaves as a martingale between `s`
/// and `t`, using the default probe family.
pub fn test_additive(
    spec: &ProcessSpec,
    f: &dyn Fn(f64) -> f64,
    s: f64,
    t: f64,
    n_paths: usize,
    level: f64,
    seed: u64,
) -> Result<MartingaleReport> {
    test_additive_with(spec, f, s, t, n_paths, level, seed, &default_probes())
}

/// [`test_additive`] with an explicit probe family.
#[allow(clippy::too_many_arguments)]
pub fn test_additive_with(
    spec: &ProcessSpec,
    f: &dyn Fn(f64) -> f64,
    s: f64,
    t: f64,
    n_paths: usize,
    level: f64,
    seed: u64,
    probes: &[Probe],
) -> Result<MartingaleReport> {
    check_test_arguments(s, t, n_paths, level)?;
    let grid = TimeGrid::new(vec![0.0, s, t])?;
    let batch = sample_paths(spec, &grid, n_paths, seed)?;
    let xs = batch.column(1);
    let fs: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let ft: Vec<f64> = batch.column(2).iter().map(|&x| f(x)).collect();
    let bad = count_non_finite(&fs) + count_non_finite(&ft);
    if bad > 0 {
        return Err(LevyError::NonFiniteSamples { count: bad });
    }
    let d: Vec<f64> = ft.iter().zip(&fs).map(|(a, b)| a - b).collect();
    let gamma_s = mean(&fs);
    let gamma_t = mean(&ft);
    // Averaging the increments directly (rather than differencing the two
    // normalizers) makes the phi = 1 probe vanish bitwise.
    let d_bar = mean(&d);
    let mut results = Vec::with_capacity(probes.len());
    for probe in probes {
        let phi: Vec<f64> = xs.iter().map(|&x| (probe.func)(x)).collect();
        let phi_bar = mean(&phi);
        // S = mean(d phi) - mean(d) mean(phi); linearizing in the three
        // means gives the per-path influence d phi - phi_bar d - d_bar phi.
        let dphi: Vec<f64> = d.iter().zip(&phi).map(|(a, b)| a * b).collect();
        let statistic = mean(&dphi) - d_bar * phi_bar;
        let influence: Vec<f64> = d
            .iter()
            .zip(&phi)
            .map(|(&di, &pi)| di * pi - phi_bar * di - d_bar * pi)
            .collect();
        results.push(probe_result(probe.name, statistic, &influence));
    }
    Ok(finish_report(
        TestMode::Additive,
        s,
        t,
        n_paths,
        seed,
        level,
        results,
        gamma_s,
        gamma_t,
        spec.flags,
    ))
}

/// Test whether `g(X_t) / E g(X_t)` behaves as a martingale between `s`
/// and `t`, for a positive `g`, using the default probe family.
pub fn test_multiplicative(
    spec: &ProcessSpec,
    g: &dyn Fn(f64) -> f64,
    s: f64,
    t: f64,
    n_paths: usize,
    level: f64,
    seed: u64,
) -> Result<MartingaleReport> {
    test_multiplicative_with(spec, g, s, t, n_paths, level, seed, &default_probes())
}

/// [`test_multiplicative`] with an explicit probe family.
#[allow(clippy::too_many_arguments)]
pub fn test_multiplicative_with(
    spec: &ProcessSpec,
    g: &dyn Fn(f64) -> f64,
    s: f64,
    t: f64,
    n_paths: usize,
    level: f64,
    seed: u64,
    probes: &[Probe],
) -> Result<MartingaleReport> {
    check_test_arguments(s, t, n_paths, level)?;
    let grid = TimeGrid::new(vec![0.0, s, t])?;
    let batch = sample_paths(spec, &grid, n_paths, seed)?;
    let xs = batch.column(1);
    let gs: Vec<f64> = xs.iter().map(|&x| g(x)).collect();
    let gt: Vec<f64> = batch.column(2).iter().map(|&x| g(x)).collect();
    let bad = count_non_finite(&gs) + count_non_finite(&gt);
    if bad > 0 {
        return Err(LevyError::NonFiniteSamples { count: bad });
    }
    let gamma_s = mean(&gs);
    let gamma_t = mean(&gt);
    if !(gamma_s > 0.0 && gamma_t > 0.0) {
        return Err(LevyError::InvalidArgument(format!(
            "multiplicative normalization needs positive expectations, got \
             gamma(s) = {gamma_s}, gamma(t) = {gamma_t}"
        )));
    }
    let mut results = Vec::with_capacity(probes.len());
    for probe in probes {
        let phi: Vec<f64> = xs.iter().map(|&x| (probe.func)(x)).collect();
        // S = A_t/B_t - A_s/B_s with A_u = mean(g_u phi), B_u = mean(g_u);
        // the ratio linearization gives per-path influence
        // (g phi - (A/B) g)/B at each time.
        let a_t = mean(&gt.iter().zip(&phi).map(|(a, b)| a * b).collect::<Vec<_>>());
        let a_s = mean(&gs.iter().zip(&phi).map(|(a, b)| a * b).collect::<Vec<_>>());
        let (r_t, r_s) = (a_t / gamma_t, a_s / gamma_s);
        let statistic = r_t - r_s;
        let influence: Vec<f64> = (0..xs.len())
            .map(|i| {
                (gt[i] * phi[i] - r_t * gt[i]) / gamma_t
                    - (gs[i] * phi[i] - r_s * gs[i]) / gamma_s
            })
            .collect();
        results.push(probe_result(probe.name, statistic, &influence));
    }
    Ok(finish_report(
        TestMode::Multiplicative,
        s,
        t,
        n_paths,
        seed,
        level,
        results,
        gamma_s,
        gamma_t,
        spec.flags,
    ))
}

/// One additivity (or log-multiplicativity) residual of the normalizer
/// estimates: `gamma(w)` against `gamma(u)` and `gamma(v)` for
/// `w = u + v`.
#[derive(Debug, Clone, Serialize)]
pub struct CauchyResidual {
    pub u: f64,
    pub v: f64,
    pub w: f64,
    pub residual: f64,
    pub std_error: f64,
}

/// Growth-law diagnostics for the normalizer `gamma`.
#[derive(Debug, Clone, Serialize)]
pub struct GammaDiagnostics {
    pub mode: TestMode,
    pub times: Vec<f64>,
    pub gamma_hat: Vec<f64>,
    pub gamma_se: Vec<f64>,
    /// For every pair of listed times whose sum is also listed:
    /// `gamma(u+v) - gamma(u) - gamma(v)` in additive mode,
    /// `ln gamma(u+v) - ln gamma(u) - ln gamma(v)` in multiplicative mode.
    pub residuals: Vec<CauchyResidual>,
    /// Fitted growth rate: slope of `gamma` (additive) or of `ln gamma`
    /// (multiplicative) over the listed times, by least squares.
    pub alpha_hat: f64,
    pub n_paths: usize,
    pub seed: u64,
}

/// Estimate the normalizer at several times from one batch and check the
/// growth law a true martingale normalization would satisfy: linear
/// `gamma(u+v) = gamma(u) + gamma(v) + gamma(0)`-style additivity for
/// centered candidates, exponential multiplicativity for ratios.
pub fn gamma_diagnostics(
    spec: &ProcessSpec,
    h: &dyn Fn(f64) -> f64,
    mode: TestMode,
    times: &[f64],
    n_paths: usize,
    seed: u64,
) -> Result<GammaDiagnostics> {
    if times.is_empty() || times[0] <= 0.0 || times.windows(2).any(|w| w[1] <= w[0]) {
        return Err(LevyError::InvalidArgument(
            "diagnostic times must be strictly increasing and positive".into(),
        ));
    }
    if n_paths < 2 {
        return Err(LevyError::InvalidArgument("need at least two paths".into()));
    }
    let mut grid_times = vec![0.0];
    grid_times.extend_from_slice(times);
    let grid = TimeGrid::new(grid_times)?;
    let batch = sample_paths(spec, &grid, n_paths, seed)?;
    let mut values: Vec<Vec<f64>> = Vec::with_capacity(times.len());
    let mut gamma_hat = Vec::with_capacity(times.len());
    let mut gamma_se = Vec::with_capacity(times.len());
    for idx in 1..=times.len() {
        let v: Vec<f64> = batch.column(idx).iter().map(|&x| h(x)).collect();
        let bad = count_non_finite(&v);
        if bad > 0 {
            return Err(LevyError::NonFiniteSamples { count: bad });
        }
        let (m, se) = mean_and_se(&v);
        if mode == TestMode::Multiplicative && !(m > 0.0) {
            return Err(LevyError::InvalidArgument(format!(
                "multiplicative diagnostics need positive estimates, got {m} at t = {}",
                times[idx - 1]
            )));
        }
        gamma_hat.push(m);
        gamma_se.push(se);
        values.push(v);
    }
    let n = n_paths as f64;
    let mut residuals = Vec::new();
    for i in 0..times.len() {
        for j in i..times.len() {
            let w = times[i] + times[j];
            let Some(k) = times.iter().position(|&u| (u - w).abs() <= 1e-9 * w) else {
                continue;
            };
            // Per-path influence keeps the covariance of the three shared
            // estimates (all columns come from the same paths).
            let influence: Vec<f64> = (0..n_paths)
                .map(|p| match mode {
                    TestMode::Additive => values[k][p] - values[i][p] - values[j][p],
                    TestMode::Multiplicative => {
                        (values[k][p] - gamma_hat[k]) / gamma_hat[k]
                            - (values[i][p] - gamma_hat[i]) / gamma_hat[i]
                            - (values[j][p] - gamma_hat[j]) / gamma_hat[j]
                    }
                })
                .collect();
            let residual = match mode {
                TestMode::Additive => gamma_hat[k] - gamma_hat[i] - gamma_hat[j],
                TestMode::Multiplicative => {
                    gamma_hat[k].ln() - gamma_hat[i].ln() - gamma_hat[j].ln()
                }
            };
            let m = mean(&influence);
            let sq: Vec<f64> = influence.iter().map(|v| (v - m) * (v - m)).collect();
            let se = (pairwise_sum(&sq) / (n * (n - 1.0))).sqrt();
            residuals.push(CauchyResidual {
                u: times[i],
                v: times[j],
                w,
                residual,
                std_error: se,
            });
        }
    }
    // Least-squares slope of the (transformed) estimates over time.
    let ys: Vec<f64> = match mode {
        TestMode::Additive => gamma_hat.clone(),
        TestMode::Multiplicative => gamma_hat.iter().map(|g| g.ln()).collect(),
    };
    let t_bar = times.iter().sum::<f64>() / times.len() as f64;
    let y_bar = ys.iter().sum::<f64>() / ys.len() as f64;
    let sxx: f64 = times.iter().map(|t| (t - t_bar) * (t - t_bar)).sum();
    let sxy: f64 = times.iter().zip(&ys).map(|(t, y)| (t - t_bar) * (y - y_bar)).sum();
    let alpha_hat = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    Ok(GammaDiagnostics {
        mode,
        times: times.to_vec(),
        gamma_hat,
        gamma_se,
        residuals,
        alpha_hat,
        n_paths,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::LevyMeasure;
    use crate::process::{catalog, LevyTriplet, SamplerKind};

    fn trivial_spec() -> ProcessSpec {
        ProcessSpec::new(
            LevyTriplet::new(0.0, 0.0, LevyMeasure::empty()).unwrap(),
            SamplerKind::Gaussian,
            ProcessFlags::default(),
        )
        .unwrap()
    }

    #[test]
    fn semigroup_estimates_match_closed_forms() {
        let spec = catalog("brownian").unwrap();
        // T_1 x^2 at x = 2 is 2^2 + 1 = 5.
        let (est, se) = estimate_semigroup(&spec, &|x| x * x, 1.0, 2.0, 30_000, 3).unwrap();
        assert!((est - 5.0).abs() <= 4.0 * se, "{est} vs 5 (se {se})");
        // T_1 cosh at 0 is e^{1/2}.
        let (est, se) =
            estimate_semigroup(&spec, &f64::cosh, 1.0, 0.0, 30_000, 4).unwrap();
        assert!((est - 0.5f64.exp()).abs() <= 4.0 * se);
        // Constants are reproduced exactly, with zero error.
        let (est, se) = estimate_semigroup(&spec, &|_| 1.0, 1.0, 0.0, 1_000, 5).unwrap();
        assert_eq!((est, se), (1.0, 0.0));
    }

    #[test]
    fn non_finite_function_values_are_counted_and_refused() {
        let spec = catalog("brownian").unwrap();
        let err =
            estimate_semigroup(&spec, &|x| (900.0 * x).exp(), 1.0, 0.0, 2_000, 6).unwrap_err();
        assert!(matches!(err, LevyError::NonFiniteSamples { count } if count > 0));
    }

    #[test]
    fn additive_test_keeps_true_martingale_functions() {
        // x^2 - t is a Brownian martingale: fail to reject at 1%.
        let spec = catalog("brownian").unwrap();
        let report =
            test_additive(&spec, &|x| x * x, 0.5, 1.0, 50_000, 0.01, 7).unwrap();
        assert!(!report.reject, "adjusted p = {}", report.adjusted_min_p);
        assert!((report.gamma_s - 0.5).abs() < 0.05, "gamma(0.5) plug-in");
        let constant_probe = &report.probes[0];
        assert!(constant_probe.exact_zero, "plug-in centering kills phi = 1 exactly");
        assert_eq!(constant_probe.p_value, 1.0);
        // A jump process with the same martingale function passes too.
        let spec = catalog("cpoisson-two-point").unwrap();
        let report =
            test_additive(&spec, &|x| x * x, 0.5, 1.0, 50_000, 0.01, 8).unwrap();
        assert!(!report.reject, "adjusted p = {}", report.adjusted_min_p);
    }

    #[test]
    fn additive_test_rejects_cubics_with_the_predicted_statistic() {
        // E[(B_t^3 - B_s^3) B_s] = 3 s (t - s) = 0.75 at s = 1/2, t = 1.
        let spec = catalog("brownian").unwrap();
        let report =
            test_additive(&spec, &|x| x * x * x, 0.5, 1.0, 50_000, 0.01, 9).unwrap();
        assert!(report.reject, "adjusted p = {}", report.adjusted_min_p);
        let x_probe = report.probes.iter().find(|p| p.name == "x").unwrap();
        assert!(
            (x_probe.statistic - 0.75).abs() <= 4.0 * x_probe.std_error,
            "cubic orthogonality defect: {} vs 0.75 (se {})",
            x_probe.statistic,
            x_probe.std_error
        );
    }

    #[test]
    fn trivial_process_passes_exactly() {
        let report =
            test_additive(&trivial_spec(), &|x| x.powi(5), 0.5, 1.0, 1_000, 0.01, 10)
                .unwrap();
        assert!(!report.reject);
        assert!(report.probes.iter().all(|p| p.exact_zero && p.statistic == 0.0));
    }

    #[test]
    fn multiplicative_test_separates_exponent_level_sets() {
        let spec = catalog("brownian").unwrap();
        // cosh mixes the two rates with eta(1) = eta(-1): martingale.
        let report =
            test_multiplicative(&spec, &f64::cosh, 0.5, 1.0, 100_000, 0.01, 11).unwrap();
        assert!(!report.reject, "adjusted p = {}", report.adjusted_min_p);
        assert!((report.gamma_t - 0.5f64.exp()).abs() < 0.05);
        // e^x + e^{2x} mixes rates with different exponent values: the
        // localized probes see the conditional drift.
        let g = |x: f64| x.exp() + (2.0 * x).exp();
        let report = test_multiplicative(&spec, &g, 0.5, 1.0, 100_000, 0.01, 12).unwrap();
        assert!(report.reject, "adjusted p = {}", report.adjusted_min_p);
        // The constant function normalizes to exactly 1: exact-zero pass.
        let report =
            test_multiplicative(&spec, &|_| 1.0, 0.5, 1.0, 1_000, 0.01, 13).unwrap();
        assert!(!report.reject);
        assert!(report.probes.iter().all(|p| p.exact_zero));
    }

    #[test]
    fn gamma_diagnostics_recover_growth_rates() {
        let spec = catalog("brownian").unwrap();
        // E B_t^2 = t: additive growth at rate 1, zero Cauchy residuals.
        let diag = gamma_diagnostics(
            &spec,
            &|x| x * x,
            TestMode::Additive,
            &[0.5, 1.0, 1.5],
            40_000,
            14,
        )
        .unwrap();
        assert!((diag.alpha_hat - 1.0).abs() < 0.05, "alpha = {}", diag.alpha_hat);
        // Both representable sums appear: 0.5 + 0.5 = 1.0 and 0.5 + 1.0 = 1.5.
        assert_eq!(diag.residuals.len(), 2);
        for r in &diag.residuals {
            assert!(
                r.residual.abs() <= 4.0 * r.std_error + 1e-12,
                "residual at w = {}: {} (se {})",
                r.w,
                r.residual,
                r.std_error
            );
        }
        // E cosh B_t = e^{t/2}: multiplicative growth at rate 1/2.
        let diag = gamma_diagnostics(
            &spec,
            &f64::cosh,
            TestMode::Multiplicative,
            &[0.5, 1.0, 1.5],
            40_000,
            15,
        )
        .unwrap();
        assert!((diag.alpha_hat - 0.5).abs() < 0.05, "alpha = {}", diag.alpha_hat);
        for r in &diag.residuals {
            assert!(r.residual.abs() <= 4.0 * r.std_error + 1e-12);
        }
    }

    #[test]
    fn argument_validation() {
        let spec = catalog("brownian").unwrap();
        assert!(test_additive(&spec, &|x| x, 1.0, 0.5, 100, 0.01, 0).is_err());
        assert!(test_additive(&spec, &|x| x, 0.0, 1.0, 100, 0.01, 0).is_err());
        assert!(test_additive(&spec, &|x| x, 0.5, 1.0, 1, 0.01, 0).is_err());
        assert!(test_additive(&spec, &|x| x, 0.5, 1.0, 100, 0.0, 0).is_err());
        assert!(
            gamma_diagnostics(&spec, &|x| x, TestMode::Additive, &[1.0, 0.5], 100, 0)
                .is_err()
        );
        // A g with negative expectation breaks the positivity precondition.
        let err = test_multiplicative(&spec, &|x| x - 100.0, 0.5, 1.0, 1_000, 0.01, 16)
            .unwrap_err();
        assert!(matches!(err, LevyError::InvalidArgument(_)));
    }
}
