//! Characteristic and Laplace exponents evaluated by adaptive quadrature.
//!
//! For a process with triplet `(b, sigma2, nu)` (jumps of size `|y| < 1`
//! compensated) the characteristic exponent is
//!
//! ```text
//! psi(xi) = -i b xi + sigma2 xi^2 / 2
//!           + integral of (1 - e^{i y xi} + i y xi 1_{(0,1)}(|y|)) nu(dy)
//! ```
//!
//! and the Laplace exponent, where the defining integral converges, is
//!
//! ```text
//! eta(lambda) = b lambda + sigma2 lambda^2 / 2
//!               + integral of (e^{lambda y} - 1 - lambda y 1_{(0,1)}(|y|)) nu(dy)
//! ```
//!
//! Numerical strategy.  Near the origin the integrands collapse to
//! compensated forms (`1 - cos`, `x - sin x`, `e^x - 1 - x`) that are
//! evaluated by dedicated stable kernels and are sign-definite on each side
//! of 0, so shrinking dyadic panels apply.  On the outer region the
//! trigonometric integrands oscillate; once more than a handful of periods
//! fit under the density's tail, `1` and the oscillation are integrated
//! separately — the mass by plain dyadic panels, `cos`/`sin` by
//! zero-aligned half-period panels with series acceleration.  Exponential
//! integrands are fused with the log-density so overflow races resolve in
//! the exponent; a divergent integral is reported as
//! [`ExtReal::Infinite`], never as an error or a garbage value.
//!
//! Practical range: the adaptive rules resolve up to a few thousand
//! oscillations across a bounded span, which covers `|xi|` up to roughly
//! `1e4`; far beyond that, inner integrals fail loudly with a
//! no-convergence error.

use num_complex::Complex64;

use crate::error::{LevyError, Result};
use crate::measure::{DensityKind, DensityPiece, ExtReal, Region};
use crate::process::ProcessSpec;
use crate::quad::{
    expm1_minus_x, integrate, one_minus_cos, oscillatory_tail_integral, tail_integral,
    x_minus_sin, QuadConfig, TailOutcome,
};

/// Oscillation periods tolerated under direct adaptive integration before
/// switching to the half-period scheme.
const DIRECT_OSC_BUDGET: f64 = 16.0;

fn quadrature_breakdown(lo: f64, hi: f64, cfg: &QuadConfig) -> LevyError {
    LevyError::QuadratureNoConvergence {
        lo,
        hi,
        achieved: f64::INFINITY,
        requested: cfg.rel_tol.max(cfg.abs_tol),
    }
}

/// Unwrap a tail outcome that is finite by construction (bounded integrand
/// against a measure already validated to have finite mass there).
fn expect_finite_tail(out: TailOutcome, lo: f64, hi: f64, cfg: &QuadConfig) -> Result<f64> {
    match out {
        TailOutcome::Converged(v) => Ok(v.value),
        TailOutcome::Diverged => Err(quadrature_breakdown(lo, hi, cfg)),
    }
}

/// Where the mirrored density `u -> density(sign * u)` starts decreasing.
fn monotone_from(piece: &DensityPiece, sign: f64, a: f64) -> f64 {
    match piece.kind {
        DensityKind::GaussianJumps { mean, .. } => (sign * mean).max(a),
        _ => a,
    }
}

/// `integral over the piece's outer part of trig(xi y) nu(dy)` together
/// with the plain mass of the same stretch, returned as
/// `(mass, cos-part, sin-part)` beyond the direct-integration horizon plus
/// the directly integrated heads.  Shared by the real and imaginary
/// assemblies so the split point is identical for both.
fn psi_outer_piece(piece: &DensityPiece, xi: f64, cfg: &QuadConfig) -> Result<(f64, f64)> {
    // Returns (re_contribution, sin_integral) where re_contribution is
    // `integral of (1 - cos(xi y)) nu(dy)` over the outer part and
    // sin_integral is `integral of sin(xi y) nu(dy)` over the outer part.
    let Some((a, b)) = piece.clipped(Region::Outer) else {
        return Ok((0.0, 0.0));
    };
    let sign = if piece.positive_side() { 1.0 } else { -1.0 };
    let axi = xi.abs();
    let dens = |u: f64| piece.kind.eval(sign * u);
    // 1 - cos(xi y) is even in y, so it only sees u = |y|.
    let re_direct = |u: f64| one_minus_cos(axi * u) * dens(u);
    let sin_direct = |u: f64| (xi * sign * u).sin() * dens(u);

    let horizon = monotone_from(piece, sign, a).max(DIRECT_OSC_BUDGET * std::f64::consts::TAU / axi);
    if b <= horizon {
        let re = integrate(&re_direct, a, b, cfg)?.value;
        let s = integrate(&sin_direct, a, b, cfg)?.value;
        return Ok((re, s));
    }

    let (mut re, mut s) = (0.0f64, 0.0f64);
    if horizon > a {
        re += integrate(&re_direct, a, horizon, cfg)?.value;
        s += integrate(&sin_direct, a, horizon, cfg)?.value;
    }
    // Beyond the horizon many periods fit under the tail: integrate the
    // mass and the oscillations separately (no cancellation survives out
    // there) with zero-aligned half-period panels.
    let mass_far =
        expect_finite_tail(tail_integral(&dens, horizon, cfg)?, horizon, f64::INFINITY, cfg)?;
    let cos_f = |u: f64| (axi * u).cos() * dens(u);
    let cos_far = oscillatory_tail_integral(&cos_f, axi, std::f64::consts::FRAC_PI_2, horizon, cfg)?;
    let sin_far = oscillatory_tail_integral(&sin_direct, axi, 0.0, horizon, cfg)?;
    let (mut mass_part, mut cos_part, mut sin_part) = (mass_far, cos_far.value, sin_far.value);
    if b.is_finite() {
        // Finite span: subtract the three tails beyond b.
        mass_part -= expect_finite_tail(tail_integral(&dens, b, cfg)?, b, f64::INFINITY, cfg)?;
        cos_part -=
            oscillatory_tail_integral(&cos_f, axi, std::f64::consts::FRAC_PI_2, b, cfg)?.value;
        sin_part -= oscillatory_tail_integral(&sin_direct, axi, 0.0, b, cfg)?.value;
    }
    re += mass_part - cos_part;
    s += sin_part;
    Ok((re, s))
}

/// Characteristic exponent `psi(xi)`, defined by
/// `E e^{i xi X_t} = e^{-t psi(xi)}`.
///
/// `psi(0) = 0` exactly; the real part is non-negative and the function is
/// Hermitian (`psi(-xi) = conj(psi(xi))`) up to quadrature error.
pub fn eval_exponent(spec: &ProcessSpec, xi: f64, cfg: &QuadConfig) -> Result<Complex64> {
    if xi == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let t = &spec.triplet;
    let mut re = 0.5 * t.sigma2 * xi * xi;
    let mut im = -t.drift * xi;
    for &(y, m) in t.measure.atoms() {
        re += m * one_minus_cos(xi * y);
        im += if y.abs() < 1.0 {
            // Compensated: y xi - sin(y xi), stable for small arguments.
            m * x_minus_sin(xi * y)
        } else {
            -m * (xi * y).sin()
        };
    }
    for piece in t.measure.pieces() {
        let inner_re = piece.integrate(Region::Inner, |y| one_minus_cos(xi * y), cfg)?;
        re += expect_finite_tail(inner_re, 0.0, 1.0, cfg)?;
        let inner_im = piece.integrate(Region::Inner, |y| x_minus_sin(xi * y), cfg)?;
        im += expect_finite_tail(inner_im, 0.0, 1.0, cfg)?;
        let (outer_re, sin_outer) = psi_outer_piece(piece, xi, cfg)?;
        re += outer_re;
        im -= sin_outer;
    }
    Ok(Complex64::new(re, im))
}

/// [`eval_exponent`] over a grid.
pub fn eval_exponent_grid(
    spec: &ProcessSpec,
    xis: &[f64],
    cfg: &QuadConfig,
) -> Result<Vec<Complex64>> {
    xis.iter().map(|&xi| eval_exponent(spec, xi, cfg)).collect()
}

/// Laplace exponent `eta(lambda)`, defined by
/// `E e^{lambda X_t} = e^{t eta(lambda)}` where the left side is finite.
///
/// Divergence of the defining integral — including values beyond floating
/// point range — is reported as [`ExtReal::Infinite`].
pub fn eval_laplace_exponent(spec: &ProcessSpec, lambda: f64, cfg: &QuadConfig) -> Result<ExtReal> {
    if lambda == 0.0 {
        return Ok(ExtReal::Finite(0.0));
    }
    if !lambda.is_finite() {
        return Err(LevyError::InvalidArgument(format!("non-finite rate {lambda}")));
    }
    let t = &spec.triplet;
    let mut total = t.drift * lambda + 0.5 * t.sigma2 * lambda * lambda;
    for &(y, m) in t.measure.atoms() {
        let e = lambda * y;
        if e > 709.0 {
            return Ok(ExtReal::Infinite);
        }
        total += m * if y.abs() < 1.0 { expm1_minus_x(e) } else { e.exp_m1() };
    }
    for piece in t.measure.pieces() {
        let inner = piece.integrate(Region::Inner, |y| expm1_minus_x(lambda * y), cfg)?;
        total += expect_finite_tail(inner, 0.0, 1.0, cfg)?;
        match piece.integrate_exp_growth_outer(lambda, cfg)? {
            TailOutcome::Converged(v) => total += v.value,
            TailOutcome::Diverged => return Ok(ExtReal::Infinite),
        }
    }
    if !total.is_finite() || total.abs() > 1e290 {
        return Ok(ExtReal::Infinite);
    }
    Ok(ExtReal::Finite(total))
}

/// [`eval_laplace_exponent`] over a grid.
pub fn eval_laplace_grid(
    spec: &ProcessSpec,
    lambdas: &[f64],
    cfg: &QuadConfig,
) -> Result<Vec<ExtReal>> {
    lambdas.iter().map(|&l| eval_laplace_exponent(spec, l, cfg)).collect()
}
