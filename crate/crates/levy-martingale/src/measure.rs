//! Jump measures: point masses plus parametric density pieces.
//!
//! A measure is a finite list of atoms `(location, mass)` together with
//! density pieces on intervals that never cover the origin.  Construction
//! verifies the integrability condition `integral of min(y^2, 1) < inf`
//! numerically and computes the small-jump activity class once.
//!
//! The compensation convention used throughout the crate truncates at
//! `0 < |y| < 1`: the *inner* region is `|y| < 1`, the *outer* region is
//! `|y| >= 1`, so an atom sitting exactly at `|y| = 1` is uncompensated.

use serde::{Deserialize, Serialize};

use crate::error::{LevyError, Result};
use crate::quad::{integrate, shrink_integral, tail_integral, QuadConfig, TailOutcome};

/// A real number or a certified infinity (divergent integral).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtReal {
    Finite(f64),
    Infinite,
}

impl ExtReal {
    pub fn is_finite(&self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    pub fn finite(&self) -> Option<f64> {
        match self {
            ExtReal::Finite(v) => Some(*v),
            ExtReal::Infinite => None,
        }
    }

    /// Unwrap a value the caller has already checked is finite.
    pub fn expect_finite(&self, what: &str) -> f64 {
        match self {
            ExtReal::Finite(v) => *v,
            ExtReal::Infinite => panic!("{what} is infinite"),
        }
    }
}

impl Serialize for ExtReal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            // Infinity serializes as null, matching how serde_json treats
            // non-finite floats; readers interpret null as "infinite".
            ExtReal::Finite(v) => s.serialize_f64(*v),
            ExtReal::Infinite => s.serialize_none(),
        }
    }
}

/// Which part of the jump domain an integral runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// `0 < |y| < 1` (compensated jumps).
    Inner,
    /// `|y| >= 1` (uncompensated jumps).
    Outer,
    /// Everything.
    Full,
}

/// Parametric density families for the absolutely continuous part.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DensityKind {
    /// `c * exp(-beta y) / y` on `y > 0` (gamma-subordinator density).
    GammaLevy { c: f64, beta: f64 },
    /// `c * |y|^(-alpha)`.
    PowerLaw { c: f64, alpha: f64 },
    /// `c * exp(-rate |y|)`.
    ExpDecay { c: f64, rate: f64 },
    /// `rate * normal density with the given mean and sd` (compound
    /// Poisson with Gaussian jump sizes).
    GaussianJumps { rate: f64, mean: f64, sd: f64 },
}

impl DensityKind {
    /// Density value at `y` (caller keeps `y` inside the piece support).
    pub fn eval(&self, y: f64) -> f64 {
        match *self {
            DensityKind::GammaLevy { c, beta } => c * (-beta * y).exp() / y,
            DensityKind::PowerLaw { c, alpha } => c * y.abs().powf(-alpha),
            DensityKind::ExpDecay { c, rate } => c * (-rate * y.abs()).exp(),
            DensityKind::GaussianJumps { rate, mean, sd } => {
                let z = (y - mean) / sd;
                rate * (-0.5 * z * z).exp() / (sd * (2.0 * std::f64::consts::PI).sqrt())
            }
        }
    }

    /// `ln` of the density, used to fuse exponential factors without
    /// intermediate overflow.
    pub fn log_eval(&self, y: f64) -> f64 {
        match *self {
            DensityKind::GammaLevy { c, beta } => c.ln() - beta * y - y.ln(),
            DensityKind::PowerLaw { c, alpha } => c.ln() - alpha * y.abs().ln(),
            DensityKind::ExpDecay { c, rate } => c.ln() - rate * y.abs(),
            DensityKind::GaussianJumps { rate, mean, sd } => {
                let z = (y - mean) / sd;
                rate.ln() - 0.5 * z * z - sd.ln() - 0.5 * (2.0 * std::f64::consts::PI).ln()
            }
        }
    }

    /// `lambda * y + ln(density(y))`, with `lambda` folded into the
    /// density's own linear rate *before* multiplying by `y`.
    ///
    /// The naive sum computes `lambda y - rate y` as a difference of two
    /// huge, nearly equal terms whose rounding error grows with `y`; at a
    /// domain edge (`lambda` close to the rate) that noise dwarfs the true
    /// exponent.  Combining the slopes first keeps full precision.
    pub fn log_eval_linear(&self, y: f64, lambda: f64) -> f64 {
        match *self {
            DensityKind::GammaLevy { c, beta } => c.ln() + (lambda - beta) * y - y.ln(),
            DensityKind::PowerLaw { c, alpha } => c.ln() + lambda * y - alpha * y.abs().ln(),
            DensityKind::ExpDecay { c, rate } => {
                let slope = if y >= 0.0 { lambda - rate } else { lambda + rate };
                c.ln() + slope * y
            }
            DensityKind::GaussianJumps { .. } => lambda * y + self.log_eval(y),
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            DensityKind::GammaLevy { c, beta } => c > 0.0 && beta > 0.0,
            DensityKind::PowerLaw { c, alpha } => c > 0.0 && alpha.is_finite(),
            DensityKind::ExpDecay { c, rate } => c > 0.0 && rate > 0.0,
            DensityKind::GaussianJumps { rate, mean, sd } => {
                rate > 0.0 && mean.is_finite() && sd > 0.0
            }
        };
        if ok {
            Ok(())
        } else {
            Err(LevyError::InvalidSpec(format!("invalid density parameters: {self:?}")))
        }
    }
}

/// A density piece: one family restricted to an interval on one side of 0.
///
/// `lo < hi`, the open interval `(lo, hi)` must not contain 0, and the ends
/// may be infinite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityPiece {
    pub kind: DensityKind,
    pub lo: f64,
    pub hi: f64,
}

impl DensityPiece {
    pub fn new(kind: DensityKind, lo: f64, hi: f64) -> Result<Self> {
        kind.validate()?;
        if !(lo < hi) {
            return Err(LevyError::InvalidSpec(format!(
                "density piece needs lo < hi, got [{lo}, {hi}]"
            )));
        }
        if lo < 0.0 && hi > 0.0 {
            return Err(LevyError::InvalidSpec(
                "density piece must not cover the origin; split it at 0".into(),
            ));
        }
        if matches!(kind, DensityKind::GammaLevy { .. }) && lo < 0.0 {
            return Err(LevyError::InvalidSpec(
                "the gamma density lives on the positive half-line".into(),
            ));
        }
        Ok(DensityPiece { kind, lo, hi })
    }

    /// True if the piece sits on the positive axis.
    pub fn positive_side(&self) -> bool {
        self.lo >= 0.0
    }

    /// Intersection with a region, in **mirrored coordinates**: returns the
    /// interval of `u = |y|` covered, or `None` if empty.
    pub(crate) fn clipped(&self, region: Region) -> Option<(f64, f64)> {
        let (a, b) = if self.positive_side() {
            (self.lo, self.hi)
        } else {
            (-self.hi, -self.lo)
        };
        let (a, b) = match region {
            Region::Inner => (a.max(0.0), b.min(1.0)),
            Region::Outer => (a.max(1.0), b),
            Region::Full => (a.max(0.0), b),
        };
        if a < b {
            Some((a, b))
        } else {
            None
        }
    }

    /// Integral of `h(y) density(y) dy` over the piece intersected with the
    /// region.  The integrand must be sign-definite over the piece (true
    /// for every use in this crate: moments, exponents and generator
    /// integrands are sign-definite on each side of the origin).
    pub(crate) fn integrate<H: Fn(f64) -> f64>(
        &self,
        region: Region,
        h: H,
        cfg: &QuadConfig,
    ) -> Result<TailOutcome> {
        let Some((a, b)) = self.clipped(region) else {
            return Ok(TailOutcome::Converged(crate::quad::QuadValue { value: 0.0, error: 0.0 }));
        };
        let sign = if self.positive_side() { 1.0 } else { -1.0 };
        let f = |u: f64| {
            let y = sign * u;
            h(y) * self.kind.eval(y)
        };
        if b.is_infinite() {
            if a == 0.0 {
                // Piece spanning (0, inf): split at 1 to reuse both schemes.
                let near = match shrink_integral(&f, 1.0, cfg)? {
                    TailOutcome::Converged(v) => v,
                    TailOutcome::Diverged => return Ok(TailOutcome::Diverged),
                };
                let far = match tail_integral(&f, 1.0, cfg)? {
                    TailOutcome::Converged(v) => v,
                    TailOutcome::Diverged => return Ok(TailOutcome::Diverged),
                };
                Ok(TailOutcome::Converged(crate::quad::QuadValue {
                    value: near.value + far.value,
                    error: near.error + far.error,
                }))
            } else {
                tail_integral(&f, a, cfg)
            }
        } else if a == 0.0 {
            shrink_integral(&f, b, cfg)
        } else {
            integrate(&f, a, b, cfg).map(TailOutcome::Converged)
        }
    }

    /// Integral of `(e^{lambda y} - 1) density(y) dy` over the piece's
    /// outer part (`|y| >= 1`, where no compensation applies).
    ///
    /// Where the plain product would overflow or hit `inf * 0`, the
    /// exponential is fused with the log-density so growth races between
    /// `e^{lambda y}` and the density tail are decided in the exponent: a
    /// decaying sum underflows cleanly to zero and a growing sum overflows
    /// to `inf`, which the panel machinery reports as divergence.
    pub(crate) fn integrate_exp_growth_outer(
        &self,
        lambda: f64,
        cfg: &QuadConfig,
    ) -> Result<TailOutcome> {
        let Some((a, b)) = self.clipped(Region::Outer) else {
            return Ok(TailOutcome::Converged(crate::quad::QuadValue { value: 0.0, error: 0.0 }));
        };
        let sign = if self.positive_side() { 1.0 } else { -1.0 };
        let f = |u: f64| {
            let y = sign * u;
            let e = lambda * y;
            let log_dens = self.kind.log_eval(y);
            if e < 500.0 && log_dens > -700.0 {
                libm::expm1(e) * log_dens.exp()
            } else {
                // Each exp saturates on its own; the subtracted density
                // term is negligible whenever this branch fires with a
                // large positive exponent.
                self.kind.log_eval_linear(y, lambda).exp() - log_dens.exp()
            }
        };
        if b.is_infinite() {
            tail_integral(&f, a, cfg)
        } else {
            integrate(&f, a, b, cfg).map(TailOutcome::Converged)
        }
    }
}

/// Small-jump activity classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ActivityClass {
    /// Finite total mass: compound-Poisson-like.
    Finite,
    /// Infinitely many small jumps, but `integral of |y|` near 0 converges.
    InfiniteFiniteVariation,
    /// `integral of |y|` near 0 diverges.
    InfiniteInfiniteVariation,
}

/// A jump measure: atoms plus density pieces, with its activity class.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevyMeasure {
    atoms: Vec<(f64, f64)>,
    pieces: Vec<DensityPiece>,
    activity: ActivityClass,
}

impl LevyMeasure {
    /// The empty measure (no jumps).
    pub fn empty() -> Self {
        LevyMeasure { atoms: Vec::new(), pieces: Vec::new(), activity: ActivityClass::Finite }
    }

    /// Validate and classify a measure.
    ///
    /// Checks each atom (`location != 0`, `mass > 0`), each piece, the
    /// integrability condition near the origin, and computes the activity
    /// class numerically.
    pub fn new(atoms: Vec<(f64, f64)>, pieces: Vec<DensityPiece>) -> Result<Self> {
        let cfg = QuadConfig::default();
        for &(y, m) in &atoms {
            if y == 0.0 || !y.is_finite() {
                return Err(LevyError::InvalidSpec(format!("atom at invalid location {y}")));
            }
            if !(m > 0.0) || !m.is_finite() {
                return Err(LevyError::InvalidSpec(format!("atom at {y} with invalid mass {m}")));
            }
        }
        let mut measure =
            LevyMeasure { atoms, pieces, activity: ActivityClass::Finite };

        // Levy integrability near zero: integral of y^2 over |y| < 1 must
        // converge (atoms are finitely many, only pieces can break this).
        for piece in &measure.pieces {
            match piece.integrate(Region::Inner, |y| y * y, &cfg)? {
                TailOutcome::Converged(_) => {}
                TailOutcome::Diverged => {
                    return Err(LevyError::InvalidSpec(
                        "density piece violates the square-integrability condition near 0"
                            .into(),
                    ));
                }
            }
        }
        // Total outer mass must also be finite for a Levy measure.
        for piece in &measure.pieces {
            if matches!(piece.integrate(Region::Outer, |_| 1.0, &cfg)?, TailOutcome::Diverged) {
                return Err(LevyError::InvalidSpec(
                    "density piece carries infinite mass away from 0".into(),
                ));
            }
        }

        measure.activity = measure.classify_activity(&cfg)?;
        Ok(measure)
    }

    fn classify_activity(&self, cfg: &QuadConfig) -> Result<ActivityClass> {
        let mut mass_finite = true;
        for piece in &self.pieces {
            if matches!(piece.integrate(Region::Inner, |_| 1.0, cfg)?, TailOutcome::Diverged) {
                mass_finite = false;
                break;
            }
        }
        if mass_finite {
            return Ok(ActivityClass::Finite);
        }
        for piece in &self.pieces {
            if matches!(
                piece.integrate(Region::Inner, |y: f64| y.abs(), cfg)?,
                TailOutcome::Diverged
            ) {
                return Ok(ActivityClass::InfiniteInfiniteVariation);
            }
        }
        Ok(ActivityClass::InfiniteFiniteVariation)
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    pub fn pieces(&self) -> &[DensityPiece] {
        &self.pieces
    }

    pub fn activity(&self) -> ActivityClass {
        self.activity
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty() && self.pieces.is_empty()
    }

    /// True when every atom and piece sits on the closed positive axis.
    pub fn supported_on_positive_axis(&self) -> bool {
        self.atoms.iter().all(|&(y, _)| y > 0.0)
            && self.pieces.iter().all(|p| p.positive_side())
    }

    fn atom_in_region(y: f64, region: Region) -> bool {
        match region {
            Region::Inner => y.abs() < 1.0,
            Region::Outer => y.abs() >= 1.0,
            Region::Full => true,
        }
    }

    /// Exact sum of `h` over the atoms in a region.
    pub fn atom_sum<H: Fn(f64) -> f64>(&self, region: Region, h: H) -> f64 {
        self.atoms
            .iter()
            .filter(|&&(y, _)| Self::atom_in_region(y, region))
            .map(|&(y, m)| m * h(y))
            .sum()
    }

    /// Integral of `h` against the measure over a region: exact atom sums
    /// plus piece quadrature.  `h` must be sign-definite on each side of
    /// the origin; divergence in any piece makes the whole integral
    /// divergent (reported, never silently truncated).
    pub fn integrate<H: Fn(f64) -> f64 + Copy>(
        &self,
        region: Region,
        h: H,
        cfg: &QuadConfig,
    ) -> Result<ExtReal> {
        let mut total = self.atom_sum(region, h);
        for piece in &self.pieces {
            match piece.integrate(region, h, cfg)? {
                TailOutcome::Converged(v) => total += v.value,
                TailOutcome::Diverged => return Ok(ExtReal::Infinite),
            }
        }
        Ok(ExtReal::Finite(total))
    }

    /// Jump-measure moment `integral of y^k` over a region, with atoms
    /// summed exactly and density pieces integrated by quadrature.
    ///
    /// Divergence (detected per piece) is reported as `Infinite`; the
    /// signed value is returned only when every contribution converges
    /// absolutely (each piece lives on one side of 0, so per-piece
    /// convergence is absolute convergence).
    pub fn moment(&self, k: u32, region: Region, cfg: &QuadConfig) -> Result<ExtReal> {
        self.integrate(region, |y: f64| y.powi(k as i32), cfg)
    }

    /// `integral of |y|^k` over the outer region: the moment-finiteness
    /// criterion for the process.
    pub fn abs_moment_outer(&self, k: u32, cfg: &QuadConfig) -> Result<ExtReal> {
        self.integrate(Region::Outer, |y: f64| y.abs().powi(k as i32), cfg)
    }

    /// Total mass of a region (may be infinite for the inner region).
    pub fn mass(&self, region: Region, cfg: &QuadConfig) -> Result<ExtReal> {
        self.integrate(region, |_| 1.0, cfg)
    }
}
