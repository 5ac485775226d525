//! Analysis and simulation toolkit for one-dimensional Lévy processes.
//!
//! The crate answers one family of questions: given a Lévy process `X`
//! described by its characteristic triplet, which functions `f` make
//! `f(X_t) - E f(X_t)` a martingale, which functions `g` make
//! `g(X_t) / E g(X_t)` a martingale, and how can both answers be checked —
//! exactly through the infinitesimal generator, and statistically through
//! Monte Carlo simulation?
//!
//! Start with the runnable examples (`cargo run --example <name>`):
//!
//! * `describe_process` — build catalog and custom processes, print their
//!   characteristic/Laplace exponents and support classification.
//! * `moments_and_semigroup` — cumulants, moment polynomials in time, and
//!   the action of the semigroup on polynomials.
//! * `classify_generator` — apply the generator to polynomials and
//!   exponentials; decide the two martingale questions exactly.
//! * `frechet_difference` — solve the functional equation `q(x+y) - q(x) =
//!   p(x)` in closed form and verify solutions.
//! * `simulate_paths` — exact and approximate path simulation with
//!   reproducible parallel substreams.
//! * `martingale_tests` — Monte Carlo hypothesis tests for the additive and
//!   multiplicative martingale properties.
//! * `exponential_martingales` — solve `eta(lambda) = alpha` and build the
//!   normalized exponential martingales.
//!
//! The same capabilities are exposed by the `levy-mtg` binary with
//! JSON-on-stdout subcommands (`describe`, `moments`, `gen`, `classify`,
//! `funceq`, `simulate`, `mtg-test`, `exp-solve`).

pub mod cli;
pub mod error;
pub mod expmart;
pub mod exponent;
pub mod funceq;
pub mod generator;
pub mod measure;
pub mod moments;
pub mod mtgtest;
pub mod poly;
pub mod process;
pub mod quad;
pub mod report;
pub mod rng;
pub mod simulate;

pub use error::{LevyError, Result};
pub use expmart::{build_exp_martingale, solve_lambda, EtaRoot, ExpNormalizer, RootReport};
pub use exponent::{eval_exponent, eval_exponent_grid, eval_laplace_exponent, eval_laplace_grid};
pub use funceq::{difference, falling_factorial, frechet_solve, verify_general_solution};
pub use generator::{
    apply_numeric, apply_to_exponential, apply_to_polynomial, classify_additive,
    classify_multiplicative, AdditiveClassification, AdditiveVerdict, ExpMix,
    MultiplicativeClassification, MultiplicativeVerdict,
};
pub use measure::{ActivityClass, DensityKind, DensityPiece, ExtReal, LevyMeasure, Region};
pub use moments::{
    cumulants, exp_moment_domain, moment_finite, moment_polynomial, moment_polynomials,
    moments_at, semigroup_on_polynomial,
};
pub use mtgtest::{
    estimate_semigroup, gamma_diagnostics, test_additive, test_multiplicative, GammaDiagnostics,
    MartingaleReport, TestMode,
};
pub use poly::{BiPolynomial, Polynomial};
pub use process::{
    catalog, catalog_with, support_class, DensityConfig, DensitySupport, LevyTriplet,
    ProcessConfig, ProcessFlags, ProcessSpec, SamplerKind, SupportClass, CATALOG_NAMES,
};
pub use quad::{QuadConfig, QuadValue};
pub use rng::CounterRng;
pub use simulate::{sample_increment, sample_paths, sample_paths_with, PathBatch, TimeGrid};
