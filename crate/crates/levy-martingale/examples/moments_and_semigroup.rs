//! Moment calculus: which absolute moments are finite, the cumulant
//! sequence, closed-form moment polynomials t -> E X_t^n, and the action
//! of the transition semigroup on polynomial test functions.

use levy_martingale::{
    catalog, cumulants, moment_finite, moment_polynomial, moment_polynomials, moments_at,
    semigroup_on_polynomial, DensityKind, DensityPiece, LevyMeasure, LevyTriplet, Polynomial,
    ProcessFlags, ProcessSpec, QuadConfig, Result, SamplerKind,
};

/// Render a polynomial with a caller-chosen variable name.
fn in_var(p: &Polynomial, var: &str) -> String {
    format!("{p}").replace('x', var)
}

fn main() -> Result<()> {
    let cfg = QuadConfig::default();
    let bm = catalog("brownian")?;

    // Cumulants: for standard Brownian motion kappa_2 = 1 and every other
    // cumulant vanishes.
    let kappa = cumulants(&bm, 4, &cfg)?;
    println!("Brownian cumulants kappa_1..kappa_4: {kappa:?}");

    // Moment polynomials in t, reported from mu_0 = 1 upward. The fourth
    // one is the classic Gaussian value E X_t^4 = 3 t^2.
    for (n, mu) in moment_polynomials(&bm, 4, &cfg)?.iter().enumerate() {
        println!("  E X_t^{n} = {}", in_var(mu, "t"));
    }
    let mu4 = moment_polynomial(&bm, 4, &cfg)?;
    println!("  E X_1^4 = {}   E X_2^4 = {}", mu4.eval(1.0), mu4.eval(2.0));

    // Numeric moments at a fixed time.
    println!("  moments at t = 1: {:?}", moments_at(&bm, 4, 1.0, &cfg)?);

    // The semigroup acting on a polynomial stays polynomial: starting
    // from p(x) = x^3, T_t p(x) = x^3 + 3 t x for Brownian motion. The
    // result is a polynomial in (x, t); rows[i] is the t-polynomial
    // multiplying x^i.
    let p = Polynomial::new(vec![0.0, 0.0, 0.0, 1.0]);
    let tp = semigroup_on_polynomial(&bm, &p, &cfg)?;
    println!("\nBrownian motion, T_t x^3:");
    for (i, row) in tp.rows().iter().enumerate() {
        if !row.is_zero() {
            println!("  x^{i} * ({})", in_var(row, "t"));
        }
    }
    println!("  value at (x, t) = (2, 0.5): {}", tp.eval(2.0, 0.5));

    // A gamma subordinator has nonzero cumulants at every order, so the
    // same polynomial picks up many more terms.
    let gamma = catalog("gamma")?;
    println!(
        "\ngamma subordinator cumulants kappa_1..kappa_4: {:?}",
        cumulants(&gamma, 4, &cfg)?
    );
    let tp = semigroup_on_polynomial(&gamma, &p, &cfg)?;
    println!("gamma subordinator, T_t x^3:");
    for (i, row) in tp.rows().iter().enumerate() {
        if !row.is_zero() {
            println!("  x^{i} * ({})", in_var(row, "t"));
        }
    }

    // Heavy tails: a pure-jump process whose jump density decays like
    // |y|^{-2.5} has a finite mean but infinite higher moments.
    let tail = DensityKind::PowerLaw { c: 1.0, alpha: 2.5 };
    let measure = LevyMeasure::new(
        vec![],
        vec![
            DensityPiece::new(tail.clone(), f64::NEG_INFINITY, -1.0)?,
            DensityPiece::new(tail, 1.0, f64::INFINITY)?,
        ],
    )?;
    let heavy = ProcessSpec::new(
        LevyTriplet::new(0.0, 0.0, measure)?,
        SamplerKind::Composite,
        ProcessFlags::default(),
    )?;
    println!();
    for order in [1, 2, 3] {
        println!(
            "power-law tail |y|^-2.5: E|X_t|^{order} finite? {}",
            moment_finite(&heavy, order, &cfg)?
        );
    }

    Ok(())
}
