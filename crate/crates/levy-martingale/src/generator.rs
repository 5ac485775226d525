//! The infinitesimal generator and exact martingale classification.
//!
//! For a process with triplet `(b, sigma2, nu)` the generator acts on
//! smooth functions as
//!
//! ```text
//! A f(x) = b f'(x) + (sigma2 / 2) f''(x)
//!          + integral of [f(x+y) - f(x) - y f'(x) 1_{(0,1)}(|y|)] nu(dy)
//! ```
//!
//! On monomials this is a finite sum over cumulant slopes,
//! `A x^n = sum_{k=1}^{n} C(n,k) kappa_k x^{n-k}`, and on exponentials it
//! is multiplication by the Laplace exponent, `A e^{lambda x} =
//! eta(lambda) e^{lambda x}`.
//!
//! Martingale criteria.  With `M_t = f(X_t) - E f(X_t)`, the process `M`
//! is a martingale exactly when `A f` is a *constant* `alpha` (then
//! `E f(X_t) = f(0) + alpha t`).  With `N_t = g(X_t) / E g(X_t)` for a mix
//! of exponentials `g = a e^{lambda_1 x} + b e^{lambda_2 x}`, the process
//! `N` is a martingale exactly when `eta(lambda_1) = eta(lambda_2)`, both
//! finite (then `E g(X_t) = g(0) e^{alpha t}` with the common value
//! `alpha`).  For the degenerate process `X == 0` every function trivially
//! qualifies, which the classifiers report as indeterminate rather than as
//! a meaningful verdict.

use serde::Serialize;

use crate::error::{LevyError, Result};
use crate::exponent::eval_laplace_exponent;
use crate::measure::{ExtReal, Region};
use crate::moments::cumulants;
use crate::poly::Polynomial;
use crate::process::ProcessSpec;
use crate::quad::{QuadConfig, TailOutcome};

/// Relative tolerance used by the exact classifiers when deciding whether
/// a computed quantity is constant/equal (absorbs quadrature noise in the
/// cumulants and exponents).
pub const CLASSIFY_REL_TOL: f64 = 1e-9;

/// `A p` for a polynomial `p`, exact up to the quadrature error in the
/// cumulant slopes.  Needs jump moments up to `deg p`; orders with
/// divergent moments surface as [`LevyError::InfiniteMoment`].
pub fn apply_to_polynomial(
    spec: &ProcessSpec,
    p: &Polynomial,
    cfg: &QuadConfig,
) -> Result<Polynomial> {
    let Some(deg) = p.degree() else {
        return Ok(Polynomial::zero());
    };
    if deg == 0 {
        return Ok(Polynomial::zero());
    }
    let kappa = cumulants(spec, deg, cfg)?;
    // Pascal triangle up to row `deg`.
    let mut binom = vec![vec![1.0f64]];
    for i in 1..=deg {
        let prev = &binom[i - 1];
        let mut row = vec![1.0; i + 1];
        for k in 1..i {
            row[k] = prev[k - 1] + prev[k];
        }
        binom.push(row);
    }
    let mut coeffs = vec![0.0f64; deg];
    for n in 1..=deg {
        let pn = p.coeff(n);
        if pn == 0.0 {
            continue;
        }
        for k in 1..=n {
            coeffs[n - k] += pn * binom[n][k] * kappa[k - 1];
        }
    }
    Ok(Polynomial::new(coeffs))
}

/// The eigenvalue of `A` on `e^{lambda x}`: `A e^{lambda x} =
/// eta(lambda) e^{lambda x}`.
pub fn apply_to_exponential(spec: &ProcessSpec, lambda: f64, cfg: &QuadConfig) -> Result<ExtReal> {
    eval_laplace_exponent(spec, lambda, cfg)
}

/// Pointwise `A f(x)` for a twice continuously differentiable `f` given
/// with its first two derivatives.
///
/// The jump integrand `f(x+y) - f(x) - y f'(x)` cancels catastrophically
/// for small `|y|`; below `|y| = 1e-5 * (1 + |x|)` it is replaced by the
/// midpoint-curvature form `y^2/2 * f''(x + y/3)`, which matches the
/// compensated difference through third order in `y`.  A divergent jump
/// integral (an unbounded `f` against heavy tails) is reported as
/// [`ExtReal::Infinite`].
pub fn apply_numeric(
    spec: &ProcessSpec,
    f: &dyn Fn(f64) -> f64,
    df: &dyn Fn(f64) -> f64,
    d2f: &dyn Fn(f64) -> f64,
    x: f64,
    cfg: &QuadConfig,
) -> Result<ExtReal> {
    let t = &spec.triplet;
    let fx = f(x);
    let dfx = df(x);
    let mut total = t.drift * dfx + 0.5 * t.sigma2 * d2f(x);
    let switch = 1e-5 * (1.0 + x.abs());
    let compensated = |y: f64| {
        if y.abs() < switch {
            0.5 * y * y * d2f(x + y / 3.0)
        } else {
            f(x + y) - fx - y * dfx
        }
    };
    for &(y, m) in t.measure.atoms() {
        total += m
            * if y.abs() < 1.0 {
                compensated(y)
            } else {
                f(x + y) - fx
            };
    }
    for piece in t.measure.pieces() {
        match piece.integrate(Region::Inner, compensated, cfg)? {
            TailOutcome::Converged(v) => total += v.value,
            TailOutcome::Diverged => return Ok(ExtReal::Infinite),
        }
        match piece.integrate(Region::Outer, |y| f(x + y) - fx, cfg)? {
            TailOutcome::Converged(v) => total += v.value,
            TailOutcome::Diverged => return Ok(ExtReal::Infinite),
        }
    }
    if !total.is_finite() {
        return Ok(ExtReal::Infinite);
    }
    Ok(ExtReal::Finite(total))
}

/// Outcome of the additive-martingale classification of a polynomial.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum AdditiveVerdict {
    /// `f(X_t) - E f(X_t)` is a martingale; `E f(X_t) = f(0) + alpha t`.
    Martingale { alpha: f64 },
    /// Not a martingale; the non-constant part of `A f` witnesses it.
    NotMartingale { nonconstant_part: Polynomial },
    /// The process is identically zero, so the question degenerates.
    TrivialIndeterminate,
}

/// Additive classification result with the tolerance that was applied.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdditiveClassification {
    pub verdict: AdditiveVerdict,
    pub tolerance_used: f64,
}

/// Decide whether `p(X_t) - E p(X_t)` is a martingale: true exactly when
/// `A p` is constant.
pub fn classify_additive(
    spec: &ProcessSpec,
    p: &Polynomial,
    cfg: &QuadConfig,
) -> Result<AdditiveClassification> {
    if !spec.nontrivial() {
        return Ok(AdditiveClassification {
            verdict: AdditiveVerdict::TrivialIndeterminate,
            tolerance_used: 0.0,
        });
    }
    let ap = apply_to_polynomial(spec, p, cfg)?;
    let alpha = ap.coeff(0);
    let nonconstant = ap.sub(&Polynomial::constant(alpha));
    let scale = ap.max_abs_coeff().max(p.max_abs_coeff()).max(1.0);
    let tol = CLASSIFY_REL_TOL * scale;
    let verdict = if nonconstant.max_abs_coeff() <= tol {
        AdditiveVerdict::Martingale { alpha }
    } else {
        AdditiveVerdict::NotMartingale { nonconstant_part: nonconstant }
    };
    Ok(AdditiveClassification { verdict, tolerance_used: tol })
}

/// A two-term mix of exponentials `a e^{lambda1 x} + b e^{lambda2 x}`,
/// kept with `lambda1 <= lambda2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExpMix {
    pub a: f64,
    pub lambda1: f64,
    pub b: f64,
    pub lambda2: f64,
}

impl ExpMix {
    pub fn new(a: f64, lambda1: f64, b: f64, lambda2: f64) -> Result<Self> {
        for v in [a, lambda1, b, lambda2] {
            if !v.is_finite() {
                return Err(LevyError::InvalidArgument(
                    "exponential mixes need finite weights and rates".into(),
                ));
            }
        }
        if a + b == 0.0 {
            return Err(LevyError::InvalidArgument(
                "exponential mix has g(0) = a + b = 0; the normalized process g(X)/E g(X) \
                 is undefined"
                    .into(),
            ));
        }
        let (a, lambda1, b, lambda2) = if lambda1 <= lambda2 {
            (a, lambda1, b, lambda2)
        } else {
            (b, lambda2, a, lambda1)
        };
        // Coincident rates collapse to a single exponential.
        if lambda1 == lambda2 {
            return Ok(ExpMix { a: a + b, lambda1, b: 0.0, lambda2: lambda1 });
        }
        Ok(ExpMix { a, lambda1, b, lambda2 })
    }

    pub fn single(a: f64, lambda: f64) -> Result<Self> {
        ExpMix::new(a, lambda, 0.0, lambda)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.a * (self.lambda1 * x).exp() + self.b * (self.lambda2 * x).exp()
    }

    /// The distinct rates actually present (zero-weight terms drop out).
    pub fn active_rates(&self) -> Vec<f64> {
        let mut rates = Vec::new();
        if self.a != 0.0 {
            rates.push(self.lambda1);
        }
        if self.b != 0.0 && self.lambda2 != self.lambda1 {
            rates.push(self.lambda2);
        }
        rates
    }
}

/// Outcome of the multiplicative-martingale classification of an
/// exponential mix.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MultiplicativeVerdict {
    /// `g(X_t) / E g(X_t)` is a martingale; `E g(X_t) = g(0) e^{alpha t}`.
    Martingale { alpha: f64 },
    /// Not a martingale: exponent values at the two rates differ (or one
    /// diverges, making the expectation infinite).
    NotMartingale { eta1: ExtReal, eta2: ExtReal },
    /// The process is identically zero, so the question degenerates.
    TrivialIndeterminate,
}

/// Multiplicative classification result with the tolerance that was
/// applied.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MultiplicativeClassification {
    pub verdict: MultiplicativeVerdict,
    pub tolerance_used: f64,
}

/// Decide whether `g(X_t) / E g(X_t)` is a martingale for a mix of two
/// exponentials: true exactly when the Laplace exponent takes the same
/// finite value at both rates.
pub fn classify_multiplicative(
    spec: &ProcessSpec,
    g: &ExpMix,
    cfg: &QuadConfig,
) -> Result<MultiplicativeClassification> {
    if !spec.nontrivial() {
        return Ok(MultiplicativeClassification {
            verdict: MultiplicativeVerdict::TrivialIndeterminate,
            tolerance_used: 0.0,
        });
    }
    let rates = g.active_rates();
    let eta1 = eval_laplace_exponent(spec, rates[0], cfg)?;
    let eta2 = if rates.len() > 1 {
        eval_laplace_exponent(spec, rates[1], cfg)?
    } else {
        eta1
    };
    let (verdict, tol) = match (eta1, eta2) {
        (ExtReal::Finite(e1), ExtReal::Finite(e2)) => {
            let tol = CLASSIFY_REL_TOL * e1.abs().max(e2.abs()).max(1.0);
            if (e1 - e2).abs() <= tol {
                (MultiplicativeVerdict::Martingale { alpha: 0.5 * (e1 + e2) }, tol)
            } else {
                (MultiplicativeVerdict::NotMartingale { eta1, eta2 }, tol)
            }
        }
        _ => (MultiplicativeVerdict::NotMartingale { eta1, eta2 }, 0.0),
    };
    Ok(MultiplicativeClassification { verdict, tolerance_used: tol })
}
