//! Build processes three ways — from the catalog, with parameter
//! overrides, and from a JSON config — then print what the toolkit knows
//! about them: the characteristic triplet, jump activity, marginal
//! support, both exponents, and the exponential-moment domain.

use std::collections::BTreeMap;

use levy_martingale::{
    catalog, catalog_with, eval_exponent, eval_laplace_exponent, exp_moment_domain,
    support_class, ExtReal, ProcessConfig, ProcessSpec, QuadConfig, Result,
};

fn print_spec(label: &str, spec: &ProcessSpec, cfg: &QuadConfig) -> Result<()> {
    println!("== {label} ==");
    println!(
        "  triplet: drift {:.6}, sigma^2 {:.6}, {} atom(s), {} density piece(s)",
        spec.triplet.drift,
        spec.triplet.sigma2,
        spec.measure().atoms().len(),
        spec.measure().pieces().len(),
    );
    println!("  activity: {:?}", spec.measure().activity());
    println!("  support:  {:?}", support_class(spec));

    // Characteristic exponent psi: E e^{i xi X_t} = e^{-t psi(xi)}.
    print!("  psi(xi):  ");
    for xi in [0.5, 1.0, 2.0] {
        let psi = eval_exponent(spec, xi, cfg)?;
        print!("xi={xi}: {:.4}{:+.4}i   ", psi.re, psi.im);
    }
    println!();

    // Laplace exponent eta: E e^{lambda X_t} = e^{t eta(lambda)} where
    // finite.
    let (lo, hi) = exp_moment_domain(spec, cfg)?;
    println!("  exponential moments finite for lambda in ({lo}, {hi})");
    print!("  eta(lambda): ");
    for lambda in [-1.0, 0.5] {
        match eval_laplace_exponent(spec, lambda, cfg)? {
            ExtReal::Finite(v) => print!("lambda={lambda}: {v:.4}   "),
            ExtReal::Infinite => print!("lambda={lambda}: +inf   "),
        }
    }
    println!("\n");
    Ok(())
}

fn main() -> Result<()> {
    let cfg = QuadConfig::default();

    // Catalog processes with default parameters.
    print_spec("standard Brownian motion", &catalog("brownian")?, &cfg)?;
    print_spec("gamma subordinator", &catalog("gamma")?, &cfg)?;

    // Parameter overrides: Brownian motion with drift 1 and variance 4.
    let mut params = BTreeMap::new();
    params.insert("drift".to_string(), 1.0);
    params.insert("sigma2".to_string(), 4.0);
    print_spec(
        "drifted Brownian motion",
        &catalog_with("brownian", &params)?,
        &cfg,
    )?;

    // The JSON config format: a compound Poisson process whose jumps are
    // exponentially distributed on each side of the origin.
    let json = r#"{
        "drift": 0.0,
        "sigma2": 0.0,
        "density": [
            {"kind": "exp-decay", "params": {"c": 0.5, "rate": 2.0}, "support": [null, 0]},
            {"kind": "exp-decay", "params": {"c": 0.5, "rate": 2.0}, "support": [0, null]}
        ],
        "sampler": "compound-poisson"
    }"#;
    let spec = ProcessConfig::from_json(json)?.to_spec()?;
    print_spec("two-sided exponential jumps", &spec, &cfg)?;

    Ok(())
}
