//! Process specifications: characteristic triplet, sampling recipe, flags,
//! a small catalog of named processes, and a JSON configuration format.
//!
//! The triplet convention compensates jumps with `0 < |y| < 1`; the drift
//! is always the triplet drift under that convention, never the
//! "zero-truncation" drift (which is only defined for finite variation).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{LevyError, Result};
use crate::measure::{ActivityClass, DensityKind, DensityPiece, LevyMeasure, Region};
use crate::quad::QuadConfig;

/// Characteristic triplet `(drift, sigma2, measure)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevyTriplet {
    pub drift: f64,
    pub sigma2: f64,
    pub measure: LevyMeasure,
}

impl LevyTriplet {
    pub fn new(drift: f64, sigma2: f64, measure: LevyMeasure) -> Result<Self> {
        if !drift.is_finite() {
            return Err(LevyError::InvalidSpec(format!("non-finite drift {drift}")));
        }
        if !sigma2.is_finite() || sigma2 < 0.0 {
            return Err(LevyError::InvalidSpec(format!(
                "diffusion coefficient must be finite and >= 0, got {sigma2}"
            )));
        }
        Ok(LevyTriplet { drift, sigma2, measure })
    }
}

/// How increments of the process are simulated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SamplerKind {
    /// Pure Brownian motion with drift (empty jump measure).
    Gaussian,
    /// Finite-activity pure-jump process: exact compound Poisson.
    CompoundPoisson,
    /// Exact gamma increments (single gamma density piece).
    GammaSubordinator,
    /// Gaussian part + compound Poisson for `|y| >= eps`, with the small
    /// jumps replaced by a matching Gaussian.
    Composite,
}

/// Support of the absolutely continuous part of the marginal laws, as
/// asserted by whoever constructed the [`ProcessSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum DensitySupport {
    FullLine,
    PositiveHalfLine,
    #[default]
    None,
}

/// User-asserted distributional properties that cannot be derived from the
/// triplet alone; they are echoed into statistical reports as assumptions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct ProcessFlags {
    /// The marginal laws are absolutely continuous.
    #[serde(default)]
    pub has_density: bool,
    /// Where that density lives.
    #[serde(default)]
    pub density_support: DensitySupport,
    /// The marginal densities are continuously differentiable and bounded
    /// (a regularity assumption some classification results lean on; it is
    /// asserted, not verified).
    #[serde(default)]
    pub smooth_density: bool,
}

/// A fully validated process specification.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProcessSpec {
    pub triplet: LevyTriplet,
    pub sampler: SamplerKind,
    pub flags: ProcessFlags,
    nontrivial: bool,
}

impl ProcessSpec {
    /// Validate a triplet/sampler/flags combination.
    ///
    /// Structural sampler consistency is enforced here:
    /// * `gaussian` requires an empty jump measure,
    /// * `compound-poisson` requires finite activity and no diffusion,
    /// * `gamma-subordinator` requires exactly one gamma density piece on
    ///   `(0, inf)`, no atoms and no diffusion,
    /// * `composite` accepts anything structurally; measures it cannot
    ///   simulate surface an unsupported-sampler error at simulation time.
    pub fn new(triplet: LevyTriplet, sampler: SamplerKind, flags: ProcessFlags) -> Result<Self> {
        match sampler {
            SamplerKind::Gaussian => {
                if !triplet.measure.is_empty() {
                    return Err(LevyError::InvalidSpec(
                        "gaussian sampler requires an empty jump measure".into(),
                    ));
                }
            }
            SamplerKind::CompoundPoisson => {
                if triplet.sigma2 != 0.0 {
                    return Err(LevyError::InvalidSpec(
                        "compound-poisson sampler cannot carry a diffusion part; use composite"
                            .into(),
                    ));
                }
                if triplet.measure.activity() != ActivityClass::Finite {
                    return Err(LevyError::InvalidSpec(
                        "compound-poisson sampler requires finite jump activity".into(),
                    ));
                }
            }
            SamplerKind::GammaSubordinator => {
                let ok = triplet.sigma2 == 0.0
                    && triplet.measure.atoms().is_empty()
                    && triplet.measure.pieces().len() == 1
                    && matches!(
                        triplet.measure.pieces()[0],
                        DensityPiece { kind: DensityKind::GammaLevy { .. }, lo, hi }
                            if lo == 0.0 && hi == f64::INFINITY
                    );
                if !ok {
                    return Err(LevyError::InvalidSpec(
                        "gamma-subordinator sampler requires exactly one gamma density piece \
                         on (0, inf), no atoms and no diffusion"
                            .into(),
                    ));
                }
            }
            SamplerKind::Composite => {}
        }
        let nontrivial =
            !(triplet.drift == 0.0 && triplet.sigma2 == 0.0 && triplet.measure.is_empty());
        Ok(ProcessSpec { triplet, sampler, flags, nontrivial })
    }

    /// False only for the identically-zero process.
    pub fn nontrivial(&self) -> bool {
        self.nontrivial
    }

    pub fn measure(&self) -> &LevyMeasure {
        &self.triplet.measure
    }

    /// Stable 64-bit fingerprint of the configuration (FNV-1a over the
    /// canonical JSON form); embedded in path batches so results can be
    /// traced back to the exact spec that produced them.
    pub fn fingerprint(&self) -> u64 {
        let json = serde_json::to_string(&self.to_config()).expect("config serializes");
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in json.bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x1000_0000_01b3);
        }
        h
    }
}

/// Support classification of the marginal laws, decided structurally from
/// the triplet (never from scanning the characteristic exponent for zeros).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SupportClass {
    /// The identically-zero process.
    Degenerate,
    /// All mass on a common lattice `h Z`.
    Lattice,
    /// Contained in `[0, inf)` (subordinator-like).
    HalfLine,
    /// Everything else (conservative fallback).
    FullLine,
}

/// Greatest common divisor of positive reals up to `tol`.
fn float_gcd(mut a: f64, mut b: f64, tol: f64) -> f64 {
    while b > tol {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Classify the support of the marginal laws.
///
/// * degenerate: the trivial process;
/// * lattice: no diffusion, no density pieces, every atom on a common
///   lattice, and the compensated drift vanishes (so nothing slides the
///   lattice around);
/// * half-line: no diffusion, jumps on `(0, inf)` only, finite variation,
///   and non-negative zero-truncation drift;
/// * full-line otherwise (conservative fallback).
pub fn support_class(spec: &ProcessSpec) -> SupportClass {
    let cfg = QuadConfig::default();
    let t = &spec.triplet;
    if !spec.nontrivial() {
        return SupportClass::Degenerate;
    }

    // Lattice: atoms only, sigma = 0, compensated drift exactly zero.
    if t.sigma2 == 0.0 && t.measure.pieces().is_empty() && !t.measure.atoms().is_empty() {
        let inner_mean = t.measure.atom_sum(Region::Inner, |y| y);
        let b0 = t.drift - inner_mean;
        let scale = t
            .measure
            .atoms()
            .iter()
            .fold(t.drift.abs().max(1.0), |m, &(y, w)| m.max((y * w).abs()));
        if b0.abs() <= 1e-12 * scale {
            let max_loc = t.measure.atoms().iter().fold(0.0f64, |m, &(y, _)| m.max(y.abs()));
            let tol = 1e-9 * max_loc;
            let mut g = 0.0;
            for &(y, _) in t.measure.atoms() {
                g = if g == 0.0 { y.abs() } else { float_gcd(g.max(y.abs()), g.min(y.abs()), tol) };
            }
            let on_lattice = g > tol
                && t.measure.atoms().iter().all(|&(y, _)| {
                    let k = y.abs() / g;
                    (k - k.round()).abs() <= 1e-6
                });
            if on_lattice {
                return SupportClass::Lattice;
            }
        }
    }

    // Half-line: subordinator-with-drift shape.
    if t.sigma2 == 0.0
        && t.measure.supported_on_positive_axis()
        && t.measure.activity() != ActivityClass::InfiniteInfiniteVariation
    {
        let m1_inner = t
            .measure
            .moment(1, Region::Inner, &cfg)
            .ok()
            .and_then(|v| v.finite());
        if let Some(m1) = m1_inner {
            let b0 = t.drift - m1;
            if b0 >= -1e-12 * t.drift.abs().max(1.0) {
                return SupportClass::HalfLine;
            }
        }
    }

    SupportClass::FullLine
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

/// Standard Brownian motion: triplet `(0, 1, 0)`.
pub fn brownian() -> ProcessSpec {
    let flags = ProcessFlags {
        has_density: true,
        density_support: DensitySupport::FullLine,
        smooth_density: true,
    };
    ProcessSpec::new(
        LevyTriplet::new(0.0, 1.0, LevyMeasure::empty()).unwrap(),
        SamplerKind::Gaussian,
        flags,
    )
    .unwrap()
}

/// Compound Poisson with symmetric two-point jumps:
/// `nu = (rate/2) delta_{-jump} + (rate/2) delta_{+jump}`, zero drift.
pub fn cpoisson_two_point(rate: f64, jump: f64) -> Result<ProcessSpec> {
    if !(rate > 0.0 && jump > 0.0) {
        return Err(LevyError::InvalidArgument(
            "two-point process needs rate > 0 and jump > 0".into(),
        ));
    }
    let measure = LevyMeasure::new(vec![(-jump, rate / 2.0), (jump, rate / 2.0)], vec![])?;
    ProcessSpec::new(
        LevyTriplet::new(0.0, 0.0, measure)?,
        SamplerKind::CompoundPoisson,
        ProcessFlags::default(),
    )
}

/// Compound Poisson with Gaussian jump sizes `N(mean, sd^2)` at the given
/// rate, zero drift.  The marginal laws keep an atom at the running drift
/// (no jump by time t has positive probability), so `has_density` stays
/// false.
pub fn cpoisson_gauss_jumps(rate: f64, mean: f64, sd: f64) -> Result<ProcessSpec> {
    let kind = DensityKind::GaussianJumps { rate, mean, sd };
    let measure = LevyMeasure::new(
        vec![],
        vec![
            DensityPiece::new(kind.clone(), f64::NEG_INFINITY, 0.0)?,
            DensityPiece::new(kind, 0.0, f64::INFINITY)?,
        ],
    )?;
    ProcessSpec::new(
        LevyTriplet::new(0.0, 0.0, measure)?,
        SamplerKind::CompoundPoisson,
        ProcessFlags::default(),
    )
}

/// Diffusion plus Gaussian-size jumps.
pub fn jump_diffusion(drift: f64, sigma2: f64, rate: f64, jump_sd: f64) -> Result<ProcessSpec> {
    let kind = DensityKind::GaussianJumps { rate, mean: 0.0, sd: jump_sd };
    let measure = LevyMeasure::new(
        vec![],
        vec![
            DensityPiece::new(kind.clone(), f64::NEG_INFINITY, 0.0)?,
            DensityPiece::new(kind, 0.0, f64::INFINITY)?,
        ],
    )?;
    let flags = ProcessFlags {
        has_density: sigma2 > 0.0,
        density_support: if sigma2 > 0.0 { DensitySupport::FullLine } else { DensitySupport::None },
        smooth_density: sigma2 > 0.0,
    };
    ProcessSpec::new(LevyTriplet::new(drift, sigma2, measure)?, SamplerKind::Composite, flags)
}

/// Gamma subordinator with density `c e^{-beta y} / y` on `(0, inf)`.
///
/// The drift is chosen as `c (1 - e^{-beta}) / beta`, exactly cancelling
/// the small-jump compensator, so the marginal at time t is the
/// `Gamma(c t, beta)` law and the Laplace exponent is
/// `-c ln(1 - lambda / beta)`.
pub fn gamma_subordinator(c: f64, beta: f64) -> Result<ProcessSpec> {
    if !(c > 0.0 && beta > 0.0) {
        return Err(LevyError::InvalidArgument("gamma process needs c > 0 and beta > 0".into()));
    }
    let measure = LevyMeasure::new(
        vec![],
        vec![DensityPiece::new(DensityKind::GammaLevy { c, beta }, 0.0, f64::INFINITY)?],
    )?;
    let drift = c * (1.0 - (-beta).exp()) / beta;
    let flags = ProcessFlags {
        has_density: true,
        density_support: DensitySupport::PositiveHalfLine,
        smooth_density: false,
    };
    ProcessSpec::new(LevyTriplet::new(drift, 0.0, measure)?, SamplerKind::GammaSubordinator, flags)
}

/// Names accepted by [`catalog`].
pub const CATALOG_NAMES: [&str; 5] = [
    "brownian",
    "cpoisson-two-point",
    "cpoisson-gauss-jumps",
    "jump-diffusion",
    "gamma",
];

/// Build a named catalog process with default parameters.
pub fn catalog(name: &str) -> Result<ProcessSpec> {
    catalog_with(name, &BTreeMap::new())
}

/// Build a named catalog process, overriding selected parameters.
///
/// Recognized keys: `brownian`: `drift`, `sigma2`; `cpoisson-two-point`:
/// `rate`, `jump`; `cpoisson-gauss-jumps`: `rate`, `mean`, `sd`;
/// `jump-diffusion`: `drift`, `sigma2`, `rate`, `jump_sd`; `gamma`: `c`,
/// `beta`.
pub fn catalog_with(name: &str, params: &BTreeMap<String, f64>) -> Result<ProcessSpec> {
    let get = |key: &str, default: f64| params.get(key).copied().unwrap_or(default);
    let known: &[&str] = match name {
        "brownian" => &["drift", "sigma2"],
        "cpoisson-two-point" => &["rate", "jump"],
        "cpoisson-gauss-jumps" => &["rate", "mean", "sd"],
        "jump-diffusion" => &["drift", "sigma2", "rate", "jump_sd"],
        "gamma" => &["c", "beta"],
        _ => {
            return Err(LevyError::InvalidArgument(format!(
                "unknown process '{name}'; known: {}",
                CATALOG_NAMES.join(", ")
            )))
        }
    };
    for key in params.keys() {
        if !known.contains(&key.as_str()) {
            return Err(LevyError::InvalidArgument(format!(
                "parameter '{key}' is not recognized for '{name}' (known: {})",
                known.join(", ")
            )));
        }
    }
    match name {
        "brownian" => {
            let flags = ProcessFlags {
                has_density: true,
                density_support: DensitySupport::FullLine,
                smooth_density: true,
            };
            let sigma2 = get("sigma2", 1.0);
            ProcessSpec::new(
                LevyTriplet::new(get("drift", 0.0), sigma2, LevyMeasure::empty())?,
                SamplerKind::Gaussian,
                flags,
            )
        }
        "cpoisson-two-point" => cpoisson_two_point(get("rate", 1.0), get("jump", 1.0)),
        "cpoisson-gauss-jumps" => {
            cpoisson_gauss_jumps(get("rate", 1.0), get("mean", 0.0), get("sd", 1.0))
        }
        "jump-diffusion" => jump_diffusion(
            get("drift", 0.0),
            get("sigma2", 1.0),
            get("rate", 1.0),
            get("jump_sd", 0.5),
        ),
        "gamma" => gamma_subordinator(get("c", 1.0), get("beta", 1.0)),
        _ => unreachable!(),
    }
}

// ---------------------------------------------------------------------------
// JSON configuration
// ---------------------------------------------------------------------------

/// One density entry in a configuration file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DensityConfig {
    /// `gamma`, `power-law`, `exp-decay` or `gaussian`.
    pub kind: String,
    #[serde(default)]
    pub params: BTreeMap<String, f64>,
    /// `[lo, hi]` with `null` for an infinite end.  Defaults per kind:
    /// gamma `(0, inf)`, gaussian the full line (split internally at 0).
    #[serde(default)]
    pub support: Option<[Option<f64>; 2]>,
}

fn bound(v: Option<f64>, neg: bool) -> f64 {
    v.unwrap_or(if neg { f64::NEG_INFINITY } else { f64::INFINITY })
}

impl DensityConfig {
    fn require(&self, key: &str) -> Result<f64> {
        self.params.get(key).copied().ok_or_else(|| {
            LevyError::InvalidSpec(format!("density '{}' needs parameter '{key}'", self.kind))
        })
    }

    fn to_pieces(&self) -> Result<Vec<DensityPiece>> {
        let kind = match self.kind.as_str() {
            "gamma" => DensityKind::GammaLevy {
                c: self.params.get("c").copied().unwrap_or(1.0),
                beta: self.require("beta")?,
            },
            "power-law" => DensityKind::PowerLaw {
                c: self.params.get("c").copied().unwrap_or(1.0),
                alpha: self.require("alpha")?,
            },
            "exp-decay" => DensityKind::ExpDecay {
                c: self.params.get("c").copied().unwrap_or(1.0),
                rate: self.require("rate")?,
            },
            "gaussian" => DensityKind::GaussianJumps {
                rate: self.params.get("rate").copied().unwrap_or(1.0),
                mean: self.params.get("mean").copied().unwrap_or(0.0),
                sd: self.require("sd")?,
            },
            other => {
                return Err(LevyError::InvalidSpec(format!(
                    "unknown density kind '{other}' (known: gamma, power-law, exp-decay, gaussian)"
                )))
            }
        };
        let (lo, hi) = match self.support {
            Some([l, h]) => (bound(l, true), bound(h, false)),
            None => match kind {
                DensityKind::GammaLevy { .. } => (0.0, f64::INFINITY),
                DensityKind::GaussianJumps { .. } => (f64::NEG_INFINITY, f64::INFINITY),
                _ => {
                    return Err(LevyError::InvalidSpec(format!(
                        "density '{}' needs an explicit support",
                        self.kind
                    )))
                }
            },
        };
        // A support straddling the origin is split into two pieces so the
        // no-origin invariant holds.
        if lo < 0.0 && hi > 0.0 {
            Ok(vec![
                DensityPiece::new(kind.clone(), lo, 0.0)?,
                DensityPiece::new(kind, 0.0, hi)?,
            ])
        } else {
            Ok(vec![DensityPiece::new(kind, lo, hi)?])
        }
    }

    fn from_piece(piece: &DensityPiece) -> DensityConfig {
        let mut params = BTreeMap::new();
        let kind = match piece.kind {
            DensityKind::GammaLevy { c, beta } => {
                params.insert("c".into(), c);
                params.insert("beta".into(), beta);
                "gamma"
            }
            DensityKind::PowerLaw { c, alpha } => {
                params.insert("c".into(), c);
                params.insert("alpha".into(), alpha);
                "power-law"
            }
            DensityKind::ExpDecay { c, rate } => {
                params.insert("c".into(), c);
                params.insert("rate".into(), rate);
                "exp-decay"
            }
            DensityKind::GaussianJumps { rate, mean, sd } => {
                params.insert("rate".into(), rate);
                params.insert("mean".into(), mean);
                params.insert("sd".into(), sd);
                "gaussian"
            }
        };
        let enc = |v: f64| if v.is_finite() { Some(v) } else { None };
        DensityConfig {
            kind: kind.into(),
            params,
            support: Some([enc(piece.lo), enc(piece.hi)]),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum OneOrMany {
    One(DensityConfig),
    Many(Vec<DensityConfig>),
}

fn default_density() -> OneOrMany {
    OneOrMany::Many(Vec::new())
}

/// JSON-shaped process description.
///
/// ```json
/// {
///   "drift": 0.0,
///   "sigma2": 1.0,
///   "atoms": [[1.0, 0.5], [-1.0, 0.5]],
///   "density": {"kind": "gamma", "params": {"c": 1.0, "beta": 1.0}},
///   "sampler": "composite",
///   "flags": {"has_density": true, "density_support": "full-line"}
/// }
/// ```
///
/// `density` may be one entry or a list of entries.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProcessConfig {
    #[serde(default)]
    pub drift: f64,
    #[serde(default)]
    pub sigma2: f64,
    #[serde(default)]
    pub atoms: Vec<(f64, f64)>,
    #[serde(default = "default_density")]
    density: OneOrMany,
    pub sampler: SamplerKind,
    #[serde(default)]
    pub flags: ProcessFlags,
}

impl ProcessConfig {
    pub fn densities(&self) -> Vec<DensityConfig> {
        match &self.density {
            OneOrMany::One(d) => vec![d.clone()],
            OneOrMany::Many(v) => v.clone(),
        }
    }

    pub fn to_spec(&self) -> Result<ProcessSpec> {
        let mut pieces = Vec::new();
        for d in self.densities() {
            pieces.extend(d.to_pieces()?);
        }
        let measure = LevyMeasure::new(self.atoms.clone(), pieces)?;
        ProcessSpec::new(
            LevyTriplet::new(self.drift, self.sigma2, measure)?,
            self.sampler,
            self.flags,
        )
    }

    pub fn from_json(json: &str) -> Result<ProcessConfig> {
        serde_json::from_str(json)
            .map_err(|e| LevyError::InvalidSpec(format!("bad process config: {e}")))
    }
}

impl ProcessSpec {
    /// The configuration that reproduces this spec.
    pub fn to_config(&self) -> ProcessConfig {
        ProcessConfig {
            drift: self.triplet.drift,
            sigma2: self.triplet.sigma2,
            atoms: self.triplet.measure.atoms().to_vec(),
            density: OneOrMany::Many(
                self.triplet.measure.pieces().iter().map(DensityConfig::from_piece).collect(),
            ),
            sampler: self.sampler,
            flags: self.flags,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_names_all_build() {
        for name in CATALOG_NAMES {
            let spec = catalog(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(spec.nontrivial(), "{name} must be nontrivial");
        }
    }

    #[test]
    fn trivial_process_is_degenerate() {
        let spec = ProcessSpec::new(
            LevyTriplet::new(0.0, 0.0, LevyMeasure::empty()).unwrap(),
            SamplerKind::Gaussian,
            ProcessFlags::default(),
        )
        .unwrap();
        assert!(!spec.nontrivial());
        assert_eq!(support_class(&spec), SupportClass::Degenerate);
    }

    #[test]
    fn poisson_with_cancelled_compensator_is_lattice() {
        // nu = delta_1 (atom at |y| = 1 is uncompensated), drift 0:
        // the path lives on the integers.
        let measure = LevyMeasure::new(vec![(1.0, 1.0)], vec![]).unwrap();
        let spec = ProcessSpec::new(
            LevyTriplet::new(0.0, 0.0, measure).unwrap(),
            SamplerKind::CompoundPoisson,
            ProcessFlags::default(),
        )
        .unwrap();
        assert_eq!(support_class(&spec), SupportClass::Lattice);
    }

    #[test]
    fn atoms_at_two_and_three_share_the_unit_lattice() {
        let measure = LevyMeasure::new(vec![(2.0, 0.3), (3.0, 0.2), (-2.0, 0.1)], vec![]).unwrap();
        let spec = ProcessSpec::new(
            LevyTriplet::new(0.0, 0.0, measure).unwrap(),
            SamplerKind::CompoundPoisson,
            ProcessFlags::default(),
        )
        .unwrap();
        assert_eq!(support_class(&spec), SupportClass::Lattice);
    }

    #[test]
    fn incommensurable_atoms_are_not_lattice() {
        // Mixed signs: nothing smaller than the full line fits.
        let measure =
            LevyMeasure::new(vec![(-1.0, 0.5), (std::f64::consts::SQRT_2, 0.5)], vec![]).unwrap();
        let spec = ProcessSpec::new(
            LevyTriplet::new(0.0, 0.0, measure).unwrap(),
            SamplerKind::CompoundPoisson,
            ProcessFlags::default(),
        )
        .unwrap();
        assert_eq!(support_class(&spec), SupportClass::FullLine);
        // Both positive: still no lattice, but the support is one-sided.
        let measure =
            LevyMeasure::new(vec![(1.0, 0.5), (std::f64::consts::SQRT_2, 0.5)], vec![]).unwrap();
        let spec = ProcessSpec::new(
            LevyTriplet::new(0.0, 0.0, measure).unwrap(),
            SamplerKind::CompoundPoisson,
            ProcessFlags::default(),
        )
        .unwrap();
        assert_eq!(support_class(&spec), SupportClass::HalfLine);
    }

    #[test]
    fn sliding_lattice_is_not_lattice() {
        // Same Poisson atoms but a drift that moves the support off hZ.
        let measure = LevyMeasure::new(vec![(1.0, 1.0)], vec![]).unwrap();
        let spec = ProcessSpec::new(
            LevyTriplet::new(0.3, 0.0, measure).unwrap(),
            SamplerKind::CompoundPoisson,
            ProcessFlags::default(),
        )
        .unwrap();
        assert_ne!(support_class(&spec), SupportClass::Lattice);
    }

    #[test]
    fn gamma_process_lives_on_the_half_line() {
        let spec = catalog("gamma").unwrap();
        assert_eq!(support_class(&spec), SupportClass::HalfLine);
        // Canonical drift: c (1 - e^{-beta}) / beta.
        assert!((spec.triplet.drift - (1.0 - (-1.0f64).exp())).abs() < 1e-15);
    }

    #[test]
    fn brownian_motion_fills_the_line() {
        assert_eq!(support_class(&catalog("brownian").unwrap()), SupportClass::FullLine);
    }

    #[test]
    fn sampler_consistency_is_enforced() {
        // gaussian sampler with jumps: rejected
        let measure = LevyMeasure::new(vec![(1.0, 1.0)], vec![]).unwrap();
        let r = ProcessSpec::new(
            LevyTriplet::new(0.0, 1.0, measure.clone()).unwrap(),
            SamplerKind::Gaussian,
            ProcessFlags::default(),
        );
        assert!(r.is_err());
        // compound poisson with diffusion: rejected
        let r = ProcessSpec::new(
            LevyTriplet::new(0.0, 1.0, measure).unwrap(),
            SamplerKind::CompoundPoisson,
            ProcessFlags::default(),
        );
        assert!(r.is_err());
        // compound poisson with infinite activity: rejected
        let gamma = catalog("gamma").unwrap();
        let r = ProcessSpec::new(
            gamma.triplet.clone(),
            SamplerKind::CompoundPoisson,
            ProcessFlags::default(),
        );
        assert!(r.is_err());
    }

    #[test]
    fn config_round_trip_preserves_the_spec() {
        for name in CATALOG_NAMES {
            let spec = catalog(name).unwrap();
            let json = serde_json::to_string(&spec.to_config()).unwrap();
            let back = ProcessConfig::from_json(&json).unwrap().to_spec().unwrap();
            assert_eq!(spec, back, "{name} did not survive the config round trip");
            assert_eq!(spec.fingerprint(), back.fingerprint());
        }
    }

    #[test]
    fn single_density_entry_and_straddling_support_are_accepted() {
        let json = r#"{
            "drift": 0.0, "sigma2": 0.0,
            "density": {"kind": "gaussian", "params": {"rate": 2.0, "sd": 1.0}},
            "sampler": "compound-poisson"
        }"#;
        let spec = ProcessConfig::from_json(json).unwrap().to_spec().unwrap();
        assert_eq!(spec.measure().pieces().len(), 2, "full-line density splits at 0");
        let mass = spec
            .measure()
            .mass(Region::Full, &QuadConfig::default())
            .unwrap()
            .finite()
            .unwrap();
        assert!((mass - 2.0).abs() < 1e-9);
    }

    #[test]
    fn unknown_names_and_params_are_rejected() {
        assert!(catalog("cauchy").is_err());
        let mut params = BTreeMap::new();
        params.insert("sigma".to_string(), 1.0); // should be sigma2
        assert!(catalog_with("brownian", &params).is_err());
    }
}
