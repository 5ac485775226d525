use thiserror::Error;

/// Crate-wide error type.
///
/// Numerical routines never return garbage on failure: a divergent integral
/// surfaces as an explicit infinity flag where the quantity may legitimately
/// be infinite, and as one of these errors everywhere else.
#[derive(Debug, Clone, Error)]
pub enum LevyError {
    /// Adaptive quadrature could not reach the requested tolerance.
    #[error(
        "quadrature did not converge on [{lo}, {hi}]: achieved {achieved:.3e}, requested {requested:.3e}"
    )]
    QuadratureNoConvergence {
        lo: f64,
        hi: f64,
        achieved: f64,
        requested: f64,
    },

    /// The integrand returned NaN or +/-inf at an interior point.
    #[error("integrand evaluated to a non-finite value near y = {at}")]
    NonFiniteIntegrand { at: f64 },

    /// A required moment of the jump measure is infinite.
    #[error("moment of order {order} of the jump measure is infinite")]
    InfiniteMoment { order: u32 },

    /// An exponential rate lies outside the exponential-moment domain.
    #[error("rate {lambda} lies outside the exponential-moment domain")]
    OutsideExpDomain { lambda: f64 },

    /// A process specification failed validation.
    #[error("invalid process specification: {0}")]
    InvalidSpec(String),

    /// The requested sampler cannot simulate this jump measure.
    #[error("unsupported sampler: {0}")]
    UnsupportedSampler(String),

    /// A function argument failed validation.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The structural assumptions of an operation are not met.
    #[error("{0}")]
    Unsupported(String),

    /// No exponential rate solves eta(lambda) = alpha, so the only
    /// admissible mixture is identically zero.
    #[error(
        "no exponential rate solves eta(lambda) = {alpha} (minimum of eta is {eta_min}); \
         only the trivial choice g = 0 remains"
    )]
    NoAdmissibleRates { alpha: f64, eta_min: f64 },

    /// Monte Carlo samples contained non-finite values.
    #[error("{count} non-finite samples in Monte Carlo batch")]
    NonFiniteSamples { count: usize },
}

pub type Result<T> = std::result::Result<T, LevyError>;
