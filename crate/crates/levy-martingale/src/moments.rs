//! Cumulants, moments as polynomials in time, moment finiteness, the
//! exponential-moment domain, and the semigroup action on polynomials.
//!
//! For a process with triplet `(b, sigma2, nu)` the cumulants of `X_t` are
//! linear in `t` with slopes
//!
//! ```text
//! kappa_1 = b + integral of y  nu(dy) over |y| >= 1
//! kappa_2 = sigma2 + integral of y^2 nu(dy)
//! kappa_j = integral of y^j nu(dy)            (j >= 3)
//! ```
//!
//! (only the uncompensated large jumps shift the mean; the compensation is
//! already folded into `b`).  Raw moments follow from the recursion
//! `mu_n(t) = sum_j C(n-1, j-1) kappa_j t mu_{n-j}(t)`, which keeps every
//! moment an explicit polynomial in `t`.

use crate::error::{LevyError, Result};
use crate::exponent::eval_laplace_exponent;
use crate::measure::{ExtReal, Region};
use crate::poly::{BiPolynomial, Polynomial};
use crate::process::ProcessSpec;
use crate::quad::QuadConfig;

/// Largest exponential rate probed when locating the domain of
/// `E e^{lambda X_t}`; endpoints at or beyond the cap are reported as
/// infinite.
pub const EXP_DOMAIN_CAP: f64 = 50.0;

/// Pascal triangle row-by-row up to `C(n, k)`, exact in f64 for n <= 56.
fn binomials(n: usize) -> Vec<Vec<f64>> {
    let mut c = vec![vec![1.0]];
    for i in 1..=n {
        let prev = &c[i - 1];
        let mut row = vec![1.0; i + 1];
        for k in 1..i {
            row[k] = prev[k - 1] + prev[k];
        }
        c.push(row);
    }
    c
}

/// Cumulant slopes `kappa_1 .. kappa_n` (the cumulant of `X_t` is
/// `kappa_j t`).  Fails with [`LevyError::InfiniteMoment`] at the first
/// order whose jump moment diverges.
pub fn cumulants(spec: &ProcessSpec, n: usize, cfg: &QuadConfig) -> Result<Vec<f64>> {
    let t = &spec.triplet;
    let mut ks = Vec::with_capacity(n);
    for j in 1..=n {
        let jump = match j {
            1 => t.measure.moment(1, Region::Outer, cfg)?,
            _ => t.measure.moment(j as u32, Region::Full, cfg)?,
        };
        let Some(jump) = jump.finite() else {
            return Err(LevyError::InfiniteMoment { order: j as u32 });
        };
        let base = match j {
            1 => t.drift,
            2 => t.sigma2,
            _ => 0.0,
        };
        ks.push(base + jump);
    }
    Ok(ks)
}

/// Raw moments `mu_0(t) .. mu_n(t)` of `X_t` as polynomials in `t`.
pub fn moment_polynomials(
    spec: &ProcessSpec,
    n: usize,
    cfg: &QuadConfig,
) -> Result<Vec<Polynomial>> {
    let kappa = cumulants(spec, n, cfg)?;
    Ok(moment_polynomials_from_cumulants(&kappa))
}

/// The moment recursion on its own, driven by given cumulant slopes
/// (`kappa[j-1]` is the slope of the j-th cumulant).
pub fn moment_polynomials_from_cumulants(kappa: &[f64]) -> Vec<Polynomial> {
    let n = kappa.len();
    let c = binomials(n.max(1));
    let mut mu: Vec<Polynomial> = vec![Polynomial::constant(1.0)];
    for m in 1..=n {
        let mut acc = Polynomial::zero();
        for j in 1..=m {
            // C(m-1, j-1) * (kappa_j t) * mu_{m-j}(t)
            let term = mu[m - j]
                .mul(&Polynomial::new(vec![0.0, kappa[j - 1]]))
                .scale(c[m - 1][j - 1]);
            acc = acc.add(&term);
        }
        mu.push(acc);
    }
    mu
}

/// The n-th raw moment of `X_t` as a polynomial in `t`.
pub fn moment_polynomial(spec: &ProcessSpec, n: usize, cfg: &QuadConfig) -> Result<Polynomial> {
    Ok(moment_polynomials(spec, n, cfg)?.pop().expect("n + 1 entries"))
}

/// Raw moments `E X_t^1 .. E X_t^n` at a fixed time.
pub fn moments_at(spec: &ProcessSpec, n: usize, t: f64, cfg: &QuadConfig) -> Result<Vec<f64>> {
    Ok(moment_polynomials(spec, n, cfg)?[1..].iter().map(|p| p.eval(t)).collect())
}

/// Whether `E |X_t|^n` is finite, decided by the absolute jump moment of
/// order `n` over `|y| >= 1` (the small jumps and the Gaussian part always
/// have all moments).
pub fn moment_finite(spec: &ProcessSpec, n: u32, cfg: &QuadConfig) -> Result<bool> {
    Ok(spec.measure().abs_moment_outer(n, cfg)?.is_finite())
}

/// Action of the semigroup on a polynomial:
/// `(T_t p)(x) = E p(x + X_t)`, exact as a polynomial in `(x, t)`.
pub fn semigroup_on_polynomial(
    spec: &ProcessSpec,
    p: &Polynomial,
    cfg: &QuadConfig,
) -> Result<BiPolynomial> {
    let Some(deg) = p.degree() else {
        return Ok(BiPolynomial::new(vec![]));
    };
    let mu = moment_polynomials(spec, deg, cfg)?;
    let c = binomials(deg);
    // coefficient of x^i: sum over k >= i of p_k C(k, i) mu_{k-i}(t)
    let mut rows = Vec::with_capacity(deg + 1);
    for i in 0..=deg {
        let mut row = Polynomial::zero();
        for k in i..=deg {
            row = row.add(&mu[k - i].scale(p.coeff(k) * c[k][i]));
        }
        rows.push(row);
    }
    Ok(BiPolynomial::new(rows))
}

/// The interval of rates `lambda` with `E e^{lambda X_t}` finite, found by
/// bisecting the divergence indicator of the Laplace exponent on each side
/// of 0 (finiteness is monotone toward 0, so bisection is exact).
///
/// Endpoints are located to about `1e-12` absolute; sides still finite at
/// [`EXP_DOMAIN_CAP`] are reported as infinite.  A quadrature-breakdown
/// error near the boundary counts as divergent, shrinking the reported
/// domain (conservative).  The trivial all-of-R domain shows up as
/// `(-inf, inf)`, a one-point domain as `(0.0, 0.0)`.
pub fn exp_moment_domain(spec: &ProcessSpec, cfg: &QuadConfig) -> Result<(f64, f64)> {
    let finite_at = |lam: f64| -> Result<bool> {
        match eval_laplace_exponent(spec, lam, cfg) {
            Ok(ExtReal::Finite(_)) => Ok(true),
            Ok(ExtReal::Infinite) => Ok(false),
            Err(LevyError::QuadratureNoConvergence { .. }) => Ok(false),
            Err(e) => Err(e),
        }
    };
    let mut ends = [0.0f64; 2];
    for (slot, sign) in [(0usize, -1.0f64), (1usize, 1.0f64)] {
        if finite_at(sign * EXP_DOMAIN_CAP)? {
            ends[slot] = sign * f64::INFINITY;
            continue;
        }
        let (mut lo, mut hi) = (0.0f64, EXP_DOMAIN_CAP);
        for _ in 0..48 {
            let mid = 0.5 * (lo + hi);
            if finite_at(sign * mid)? {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        ends[slot] = sign * 0.5 * (lo + hi);
    }
    Ok((ends[0], ends[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::{DensityKind, DensityPiece, LevyMeasure};
    use crate::process::{catalog, catalog_with, LevyTriplet, ProcessFlags, SamplerKind};

    fn cfg() -> QuadConfig {
        QuadConfig::default()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    fn heavy_tail_spec() -> ProcessSpec {
        let kind = DensityKind::PowerLaw { c: 1.0, alpha: 2.5 };
        let measure = LevyMeasure::new(
            vec![],
            vec![
                DensityPiece::new(kind.clone(), f64::NEG_INFINITY, -1.0).unwrap(),
                DensityPiece::new(kind, 1.0, f64::INFINITY).unwrap(),
            ],
        )
        .unwrap();
        ProcessSpec::new(
            LevyTriplet::new(0.0, 0.0, measure).unwrap(),
            SamplerKind::Composite,
            ProcessFlags::default(),
        )
        .unwrap()
    }

    #[test]
    fn brownian_cumulants_and_moments_are_gaussian() {
        let spec = catalog("brownian").unwrap();
        let k = cumulants(&spec, 6, &cfg()).unwrap();
        assert_eq!(k, vec![0.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        let mu = moment_polynomials(&spec, 6, &cfg()).unwrap();
        // E X_t^2 = t, E X_t^4 = 3 t^2, E X_t^6 = 15 t^3; odd moments vanish.
        assert_eq!(mu[2].coeffs(), &[0.0, 1.0]);
        assert_eq!(mu[4].coeffs(), &[0.0, 0.0, 3.0]);
        assert_eq!(mu[6].coeffs(), &[0.0, 0.0, 0.0, 15.0]);
        assert!(mu[1].is_zero() && mu[3].is_zero() && mu[5].is_zero());
    }

    #[test]
    fn drifted_brownian_moments_match_normal_moments() {
        let mut params = std::collections::BTreeMap::new();
        params.insert("drift".to_string(), 2.0);
        let spec = catalog_with("brownian", &params).unwrap();
        // X_t ~ N(2t, t): E X_t = 2t, E X_t^2 = t + 4t^2,
        // E X_t^3 = 8t^3 + 3 * 2t * t = 8t^3 + 6t^2.
        let mu = moment_polynomials(&spec, 3, &cfg()).unwrap();
        assert_eq!(mu[1].coeffs(), &[0.0, 2.0]);
        assert_eq!(mu[2].coeffs(), &[0.0, 1.0, 4.0]);
        assert_eq!(mu[3].coeffs(), &[0.0, 0.0, 6.0, 8.0]);
    }

    #[test]
    fn gamma_cumulants_are_factorials_and_moments_rising_factorials() {
        let spec = catalog("gamma").unwrap();
        let k = cumulants(&spec, 5, &cfg()).unwrap();
        let want = [1.0, 1.0, 2.0, 6.0, 24.0];
        for (j, (got, want)) in k.iter().zip(want).enumerate() {
            assert!(close(*got, want, 1e-8), "kappa_{}: {got} vs {want}", j + 1);
        }
        // E X_t^n = t (t+1) ... (t+n-1) for the Gamma(t, 1) marginal.
        let mu = moment_polynomials(&spec, 3, &cfg()).unwrap();
        let rising2 = Polynomial::new(vec![0.0, 1.0, 1.0]); // t + t^2
        let rising3 = Polynomial::new(vec![0.0, 2.0, 3.0, 1.0]); // 2t + 3t^2 + t^3
        for (got, want) in [(&mu[2], &rising2), (&mu[3], &rising3)] {
            for i in 0..4 {
                assert!(
                    close(got.coeff(i), want.coeff(i), 1e-8),
                    "coefficient {i}: {} vs {}",
                    got.coeff(i),
                    want.coeff(i)
                );
            }
        }
    }

    #[test]
    fn symmetric_two_point_moments() {
        let spec = catalog("cpoisson-two-point").unwrap();
        let k = cumulants(&spec, 4, &cfg()).unwrap();
        assert!(k[0].abs() < 1e-12 && k[2].abs() < 1e-12);
        assert!(close(k[1], 1.0, 1e-12) && close(k[3], 1.0, 1e-12));
        // E X_t^4 = kappa_4 t + 3 (kappa_2 t)^2 = t + 3 t^2.
        let mu4 = moment_polynomial(&spec, 4, &cfg()).unwrap();
        assert!(close(mu4.coeff(1), 1.0, 1e-12) && close(mu4.coeff(2), 3.0, 1e-12));
    }

    #[test]
    fn moment_recursion_inverts_onto_its_cumulants() {
        // The t-linear coefficient of mu_n(t) is kappa_n: only the
        // single-block partition contributes one factor of t.
        let kappa = [0.7, -1.3, 2.2, 0.05, -3.0, 1.9];
        let mu = moment_polynomials_from_cumulants(&kappa);
        for (j, k) in kappa.iter().enumerate() {
            let lin = mu[j + 1].coeff(1);
            assert!(
                (lin - k).abs() < 1e-12 * k.abs().max(1.0),
                "order {}: {lin} vs {k}",
                j + 1
            );
        }
    }

    #[test]
    fn semigroup_shifts_polynomials_by_moments() {
        // Brownian motion: T_t x^2 = x^2 + t.
        let spec = catalog("brownian").unwrap();
        let s = semigroup_on_polynomial(&spec, &Polynomial::monomial(2), &cfg()).unwrap();
        assert_eq!(s.coeff(2, 0), 1.0);
        assert_eq!(s.coeff(0, 1), 1.0);
        assert_eq!(s.coeff(1, 0), 0.0);
        // At t = 0 the semigroup is the identity.
        let p = Polynomial::new(vec![1.0, -0.5, 2.0, 0.25]);
        let s = semigroup_on_polynomial(&spec, &p, &cfg()).unwrap();
        assert_eq!(s.at_t_zero(), p);
        // Gamma: T_t x^3 = x^3 + 3 t x^2 + 3 (t + t^2) x + (t^3 + 3t^2 + 2t).
        let spec = catalog("gamma").unwrap();
        let s = semigroup_on_polynomial(&spec, &Polynomial::monomial(3), &cfg()).unwrap();
        let expect = [
            (3usize, 0usize, 1.0f64),
            (2, 1, 3.0),
            (1, 1, 3.0),
            (1, 2, 3.0),
            (0, 1, 2.0),
            (0, 2, 3.0),
            (0, 3, 1.0),
        ];
        for (i, j, want) in expect {
            assert!(
                close(s.coeff(i, j), want, 1e-8),
                "x^{i} t^{j}: {} vs {want}",
                s.coeff(i, j)
            );
        }
    }

    #[test]
    fn heavy_tails_cut_off_moments_at_the_right_order() {
        // |y|^{-5/2} tails: E |X_t| finite, E X_t^2 infinite.
        let spec = heavy_tail_spec();
        assert!(moment_finite(&spec, 1, &cfg()).unwrap());
        assert!(!moment_finite(&spec, 2, &cfg()).unwrap());
        assert!(!moment_finite(&spec, 4, &cfg()).unwrap());
        match cumulants(&spec, 4, &cfg()) {
            Err(LevyError::InfiniteMoment { order: 2 }) => {}
            other => panic!("expected an infinite second moment, got {other:?}"),
        }
        // All polynomial moments exist for the gamma process.
        let gamma = catalog("gamma").unwrap();
        for n in 1..=6 {
            assert!(moment_finite(&gamma, n, &cfg()).unwrap());
        }
    }

    #[test]
    fn exponential_moment_domains() {
        let (lo, hi) = exp_moment_domain(&catalog("brownian").unwrap(), &cfg()).unwrap();
        assert!(lo == f64::NEG_INFINITY && hi == f64::INFINITY);

        let (lo, hi) = exp_moment_domain(&catalog("gamma").unwrap(), &cfg()).unwrap();
        assert_eq!(lo, f64::NEG_INFINITY);
        assert!((hi - 1.0).abs() < 1e-6, "gamma upper endpoint: {hi}");

        let kind = DensityKind::ExpDecay { c: 1.0, rate: 1.0 };
        let measure = LevyMeasure::new(
            vec![],
            vec![
                DensityPiece::new(kind.clone(), f64::NEG_INFINITY, -1.0).unwrap(),
                DensityPiece::new(kind, 1.0, f64::INFINITY).unwrap(),
            ],
        )
        .unwrap();
        let spec = ProcessSpec::new(
            LevyTriplet::new(0.0, 0.0, measure).unwrap(),
            SamplerKind::Composite,
            ProcessFlags::default(),
        )
        .unwrap();
        let (lo, hi) = exp_moment_domain(&spec, &cfg()).unwrap();
        assert!((lo + 1.0).abs() < 1e-6, "exp-tail lower endpoint: {lo}");
        assert!((hi - 1.0).abs() < 1e-6, "exp-tail upper endpoint: {hi}");

        let (lo, hi) = exp_moment_domain(&heavy_tail_spec(), &cfg()).unwrap();
        assert!(lo.abs() < 1e-9 && hi.abs() < 1e-9, "power tails admit no rate");
    }
}
