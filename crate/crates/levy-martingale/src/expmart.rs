//! Exponential martingale construction: solving `eta(lambda) = alpha` on
//! the exponential-moment domain and assembling the two-term mixtures
//! `a e^{lambda_1 x} + b e^{lambda_2 x}` whose normalized version
//! `g(X_t) e^{-alpha t} / g(0)` is a martingale.
//!
//! The moment equation `E e^{lambda X_t} = e^{alpha t}` is solved per unit
//! time as `eta(lambda) = alpha`, which avoids both overflow and any
//! dependence on `t`.  Since `eta` is convex on its finiteness domain, the
//! level set has zero, one (tangency at the minimum, or a monotone
//! one-sided exponent), or two solutions; the solver locates the minimum
//! by golden-section search and then brackets one root on each side by
//! bisection, the method of choice under convexity because every step is
//! guaranteed.

use serde::Serialize;

use crate::error::{LevyError, Result};
use crate::exponent::eval_laplace_exponent;
use crate::generator::{classify_multiplicative, ExpMix, MultiplicativeVerdict};
use crate::measure::ExtReal;
use crate::moments::exp_moment_domain;
use crate::process::ProcessSpec;
use crate::quad::QuadConfig;

/// Residual guarantee on reported roots: `|eta(root) - alpha|` does not
/// exceed this times `max(1, |alpha|)` whenever the exponent can be
/// evaluated to that accuracy (always for atom-only and diffusion
/// exponents; quadrature-backed exponents are evaluated with tightened
/// tolerances to stay within budget).
pub const ROOT_RESIDUAL_TOL: f64 = 1e-10;

/// Interval-width target for the golden-section and bisection loops,
/// relative to the scale of the iterates.
const BRACKET_REL_TOL: f64 = 1e-12;

/// Relative inset from finite domain endpoints: brackets never step
/// closer to the boundary than this, because the exponent degrades
/// numerically where it blows up.
const EDGE_INSET_REL: f64 = 1e-6;

/// Absolute cap on the search window along a side where the domain is
/// unbounded and the exponent never climbs above the target level.
const SEARCH_CAP: f64 = (1u64 << 30) as f64;

/// One solution of `eta(lambda) = alpha`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct EtaRoot {
    pub lambda: f64,
    /// `|eta(lambda) - alpha|` as evaluated by this crate's exponent.
    pub residual: f64,
    /// The root sits within ten insets of a finite domain endpoint, where
    /// the exponent is steep and the location is numerically delicate.
    pub at_edge: bool,
}

/// Solution report for `eta(lambda) = alpha`.
#[derive(Debug, Clone, Serialize)]
pub struct RootReport {
    pub alpha: f64,
    /// Zero, one, or two roots, sorted by rate.
    pub roots: Vec<EtaRoot>,
    /// Minimizer of the exponent over the searched interval.
    pub lambda_star: f64,
    /// Exponent value at the minimizer (the attainable infimum; levels
    /// below it have no roots).
    pub eta_star: f64,
    /// Exponential-moment domain of the process; endpoints may be
    /// infinite.
    pub domain: (f64, f64),
    /// Interval actually searched: the domain shrunk by a relative inset
    /// at finite endpoints and capped at a large finite width at infinite
    /// ones.
    pub searched: (f64, f64),
    /// The minimum sits at an endpoint of the searched interval, so the
    /// exponent is monotone over it (one-sided processes): at most one
    /// root exists.
    pub monotone: bool,
    pub warnings: Vec<String>,
}

/// Exact normalizer of a constructed mixture: `E g(X_t) = coeff e^{rate t}`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ExpNormalizer {
    /// `g(0) = a + b`.
    pub coeff: f64,
    /// Common exponent value `alpha` of the mixture's rates.
    pub rate: f64,
}

impl ExpNormalizer {
    pub fn eval(&self, t: f64) -> f64 {
        self.coeff * (self.rate * t).exp()
    }
}

/// Evaluate the Laplace exponent as an `f64`, mapping divergence (and
/// quadrature breakdown, which only happens against a boundary
/// singularity) to `+inf` so the search logic can compare values freely.
fn eta_val(spec: &ProcessSpec, lambda: f64, cfg: &QuadConfig) -> Result<f64> {
    match eval_laplace_exponent(spec, lambda, cfg) {
        Ok(ExtReal::Finite(v)) => Ok(v),
        Ok(ExtReal::Infinite) => Ok(f64::INFINITY),
        Err(LevyError::QuadratureNoConvergence { .. }) => Ok(f64::INFINITY),
        Err(e) => Err(e),
    }
}

/// Golden-section minimizer of a unimodal function on `[a, b]`.
fn golden_min(
    mut a: f64,
    mut b: f64,
    f: &mut impl FnMut(f64) -> Result<f64>,
) -> Result<f64> {
    const INVPHI: f64 = 0.618_033_988_749_894_9;
    let mut c = b - INVPHI * (b - a);
    let mut d = a + INVPHI * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    for _ in 0..400 {
        if b - a <= BRACKET_REL_TOL * a.abs().max(b.abs()).max(1.0) {
            break;
        }
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INVPHI * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INVPHI * (b - a);
            fd = f(d)?;
        }
    }
    Ok(0.5 * (a + b))
}

/// Bisection for `f(lambda) = alpha` on a bracket where `f - alpha`
/// changes sign; 200 halvings reach machine precision from any finite
/// starting width.
fn bisect_level(
    mut lo: f64,
    mut hi: f64,
    alpha: f64,
    f: &mut impl FnMut(f64) -> Result<f64>,
) -> Result<f64> {
    let mut f_lo = f(lo)? - alpha;
    for _ in 0..200 {
        if hi - lo <= BRACKET_REL_TOL * lo.abs().max(hi.abs()).max(1.0) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid)? - alpha;
        if (f_mid >= 0.0) == (f_lo >= 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Solve `eta(lambda) = alpha` over the exponential-moment domain.
///
/// The minimizer of the convex exponent splits the domain into two
/// monotone branches; each branch contributes at most one root, found by
/// bisection.  Levels below the attainable minimum report zero roots
/// (that is an answer, not an error).  Finite domain endpoints are
/// approached no closer than a relative inset, and unbounded sides where
/// the exponent never climbs above the level are capped with a warning,
/// so a root hiding against a blow-up boundary or far out on a flat
/// branch is reported as absent together with the warning describing the
/// unsearched region.
pub fn solve_lambda(spec: &ProcessSpec, alpha: f64, cfg: &QuadConfig) -> Result<RootReport> {
    if !alpha.is_finite() {
        return Err(LevyError::InvalidArgument(format!(
            "target level must be finite, got {alpha}"
        )));
    }
    let domain = exp_moment_domain(spec, cfg)?;
    if domain.0 == domain.1 {
        return Err(LevyError::InvalidArgument(
            "exponential-moment domain is a single point; no rates to solve over".into(),
        ));
    }
    // Tighten quadrature so exponent noise stays below the root-residual
    // budget.
    let tight = QuadConfig {
        rel_tol: cfg.rel_tol.min(1e-12),
        abs_tol: cfg.abs_tol.min(1e-15),
        ..*cfg
    };
    let mut eta = |lam: f64| eta_val(spec, lam, &tight);
    let mut warnings = Vec::new();

    // Establish the searched interval, one side at a time.
    let mut side = |sign: f64, endpoint: f64| -> Result<f64> {
        if endpoint.is_finite() {
            let mut inset = EDGE_INSET_REL * endpoint.abs().max(1.0);
            for _ in 0..8 {
                let lam = endpoint - sign * inset;
                if eta_val(spec, lam, &tight)?.is_finite() {
                    return Ok(lam);
                }
                inset *= 10.0;
            }
            return Err(LevyError::Unsupported(format!(
                "cannot evaluate the exponent anywhere near the domain endpoint {endpoint}"
            )));
        }
        let mut w = 1.0;
        loop {
            let lam = sign * w;
            let v = eta_val(spec, lam, &tight)?;
            if v.is_finite() && v > alpha {
                return Ok(lam);
            }
            if w >= SEARCH_CAP {
                warnings.push(format!(
                    "exponent stays at or below {alpha} out to lambda = {lam}; \
                     the {} search side is capped there",
                    if sign < 0.0 { "left" } else { "right" }
                ));
                return Ok(lam);
            }
            w *= 2.0;
        }
    };
    let lo = side(-1.0, domain.0)?;
    let hi = side(1.0, domain.1)?;
    let searched = (lo, hi);

    let lambda_star = golden_min(lo, hi, &mut eta)?;
    let eta_star = eta(lambda_star)?;
    let edge_tol = 1e-7 * (hi - lo);
    let monotone = lambda_star - lo <= edge_tol || hi - lambda_star <= edge_tol;

    let tol = ROOT_RESIDUAL_TOL * alpha.abs().max(1.0);
    let mut roots: Vec<EtaRoot> = Vec::new();
    if eta_star > alpha + tol {
        // Level below the attainable infimum: no roots.
    } else if eta_star >= alpha - tol {
        roots.push(EtaRoot {
            lambda: lambda_star,
            residual: (eta_star - alpha).abs(),
            at_edge: false,
        });
    } else {
        for (a, b, is_left) in [(lo, lambda_star, true), (lambda_star, hi, false)] {
            if b <= a {
                continue;
            }
            let outer = if is_left { a } else { b };
            let v = eta(outer)?;
            if v < alpha {
                warnings.push(format!(
                    "exponent at the {} search edge (lambda = {outer}) is {v}, still \
                     below {alpha}; a crossing beyond it was not searched",
                    if is_left { "left" } else { "right" }
                ));
                continue;
            }
            let root = bisect_level(a, b, alpha, &mut eta)?;
            let residual = (eta(root)? - alpha).abs();
            roots.push(EtaRoot {
                lambda: root,
                residual,
                at_edge: [domain.0, domain.1].iter().any(|e| {
                    e.is_finite() && (root - e).abs() <= 10.0 * EDGE_INSET_REL * e.abs().max(1.0)
                }),
            });
        }
        roots.sort_by(|p, q| p.lambda.total_cmp(&q.lambda));
    }
    if roots.iter().any(|r| r.at_edge) {
        warnings.push(
            "a root sits against a domain endpoint where the exponent blows up; \
             its location is numerically delicate"
                .into(),
        );
    }
    Ok(RootReport {
        alpha,
        roots,
        lambda_star,
        eta_star,
        domain,
        searched,
        monotone,
        warnings,
    })
}

/// Assemble the mixture `a e^{lambda_1 x} + b e^{lambda_2 x}` from a root
/// report, together with its exact normalizer `E g(X_t) = (a+b) e^{alpha t}`.
///
/// With two roots both weights may be used; with one root the second
/// weight must be zero (there is no second admissible rate); with none,
/// only `g = 0` satisfies the equation and the request is refused.  The
/// construction is cross-checked against the exact multiplicative
/// classifier before being returned.
pub fn build_exp_martingale(
    spec: &ProcessSpec,
    report: &RootReport,
    a: f64,
    b: f64,
    cfg: &QuadConfig,
) -> Result<(ExpMix, ExpNormalizer)> {
    if !(a >= 0.0 && b >= 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(LevyError::InvalidArgument(format!(
            "mixture weights must be nonnegative and finite, got a = {a}, b = {b}"
        )));
    }
    if a + b == 0.0 {
        return Err(LevyError::InvalidArgument(
            "mixture weights must not both vanish".into(),
        ));
    }
    let mix = match report.roots.len() {
        0 => {
            return Err(LevyError::NoAdmissibleRates {
                alpha: report.alpha,
                eta_min: report.eta_star,
            })
        }
        1 => {
            if b != 0.0 {
                return Err(LevyError::InvalidArgument(format!(
                    "only one admissible rate ({}) exists; the second weight must be 0",
                    report.roots[0].lambda
                )));
            }
            ExpMix::single(a, report.roots[0].lambda)?
        }
        _ => ExpMix::new(a, report.roots[0].lambda, b, report.roots[1].lambda)?,
    };
    match classify_multiplicative(spec, &mix, cfg)?.verdict {
        MultiplicativeVerdict::Martingale { .. }
        | MultiplicativeVerdict::TrivialIndeterminate => {}
        MultiplicativeVerdict::NotMartingale { eta1, eta2 } => {
            return Err(LevyError::Unsupported(format!(
                "constructed mixture fails the exact classifier: exponent values \
                 {eta1:?} and {eta2:?} disagree beyond tolerance"
            )));
        }
    }
    Ok((
        mix,
        ExpNormalizer {
            coeff: a + b,
            rate: report.alpha,
        },
    ))
}
