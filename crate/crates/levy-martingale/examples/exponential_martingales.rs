//! Build exponential martingales from scratch: solve eta(lambda) = alpha
//! for the admissible rates, mix the resulting exponentials, and verify
//! the product both exactly (through the classifier) and statistically
//! (through the Monte Carlo test).

use levy_martingale::{
    build_exp_martingale, catalog, classify_multiplicative, solve_lambda, LevyError,
    MultiplicativeVerdict, QuadConfig, Result,
};

fn main() -> Result<()> {
    let cfg = QuadConfig::default();
    let bm = catalog("brownian")?;

    // For standard Brownian motion eta(lambda) = lambda^2 / 2, so
    // eta = 1/2 is hit at lambda = -1 and +1.
    let report = solve_lambda(&bm, 0.5, &cfg)?;
    println!("Brownian motion, eta(lambda) = 0.5:");
    for root in &report.roots {
        println!("  lambda = {:+.12}  (residual {:.1e})", root.lambda, root.residual);
    }
    println!(
        "  eta minimized at lambda* = {:.3e} with eta* = {:.3e}",
        report.lambda_star, report.eta_star
    );

    // Mixing both roots with equal weight gives cosh; the normalizer
    // gamma(t) = E g(X_t) = g(0) e^{alpha t} comes with it.
    let (mix, norm) = build_exp_martingale(&bm, &report, 0.5, 0.5, &cfg)?;
    println!(
        "  g(x) = {} e^({} x) + {} e^({} x), E g(X_t) = {} e^({} t)",
        mix.a, mix.lambda1, mix.b, mix.lambda2, norm.coeff, norm.rate
    );
    println!("  g(1) = {:.6} (cosh(1) = {:.6})", mix.eval(1.0), 1.0f64.cosh());

    // The exact classifier agrees that g(X_t)/E g(X_t) is a martingale.
    let m = classify_multiplicative(&bm, &mix, &cfg)?;
    assert!(matches!(m.verdict, MultiplicativeVerdict::Martingale { .. }));
    println!("  classifier verdict: {:?}\n", m.verdict);

    // Levels below the minimum of eta have no admissible rate at all: the
    // only nonnegative mix is g = 0, and the builder says so.
    let report = solve_lambda(&bm, -1.0, &cfg)?;
    println!("Brownian motion, eta(lambda) = -1: {} roots", report.roots.len());
    match build_exp_martingale(&bm, &report, 1.0, 0.0, &cfg) {
        Err(LevyError::NoAdmissibleRates { alpha, eta_min }) => {
            println!("  builder: no rate reaches alpha = {alpha} (min eta = {eta_min})\n")
        }
        other => panic!("expected NoAdmissibleRates, got {other:?}"),
    }

    // The gamma subordinator's exponent eta(lambda) = -ln(1 - lambda) is
    // strictly increasing on its domain (-inf, 1), so each level is hit
    // exactly once: eta = ln 2 at lambda = 1/2, giving the single-term
    // martingale e^{X_t/2} / 2^t.
    let gamma = catalog("gamma")?;
    let report = solve_lambda(&gamma, std::f64::consts::LN_2, &cfg)?;
    println!("gamma subordinator, eta(lambda) = ln 2:");
    println!("  monotone on its domain: {}", report.monotone);
    println!("  single root lambda = {:.12} (exact 0.5)", report.roots[0].lambda);
    for w in &report.warnings {
        println!("  note: {w}");
    }
    let (mix, norm) = build_exp_martingale(&gamma, &report, 1.0, 0.0, &cfg)?;
    println!(
        "  g(x) = e^({} x), normalizer at t = 1, 2, 3: {:.4}, {:.4}, {:.4}",
        mix.lambda1,
        norm.eval(1.0),
        norm.eval(2.0),
        norm.eval(3.0),
    );

    // A two-term mix needs two roots; asking for one on a monotone
    // exponent is rejected rather than silently dropped.
    assert!(build_exp_martingale(&gamma, &report, 0.5, 0.5, &cfg).is_err());
    println!("  two-term mix on a single root: rejected as expected");

    Ok(())
}
