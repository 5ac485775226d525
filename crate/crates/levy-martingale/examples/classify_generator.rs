//! The infinitesimal generator on closed-form test functions, and the
//! exact classifiers that decide when f(X_t) - E f(X_t) (additive case)
//! or g(X_t) / E g(X_t) (multiplicative case) is a martingale.

use levy_martingale::{
    apply_numeric, apply_to_exponential, apply_to_polynomial, catalog, catalog_with,
    classify_additive, classify_multiplicative, AdditiveVerdict, ExpMix, ExtReal,
    MultiplicativeVerdict, Polynomial, QuadConfig, Result,
};

fn main() -> Result<()> {
    let cfg = QuadConfig::default();
    let bm = catalog("brownian")?;
    let gamma = catalog("gamma")?;

    // On polynomials the generator acts in closed form through the
    // cumulants: A x^4 = 6 x^2 for standard Brownian motion.
    let x4 = Polynomial::new(vec![0.0, 0.0, 0.0, 0.0, 1.0]);
    println!("Brownian motion: A x^4 = {}", apply_to_polynomial(&bm, &x4, &cfg)?);

    // The gamma subordinator is not centered, so even x^2 picks up a
    // linear term: A x^2 = 2 kappa_1 x + kappa_2.
    let x2 = Polynomial::new(vec![0.0, 0.0, 1.0]);
    println!("gamma subordinator: A x^2 = {}", apply_to_polynomial(&gamma, &x2, &cfg)?);

    // Exponentials are eigenfunctions: A e^{lambda x} = eta(lambda) e^{lambda x}.
    match apply_to_exponential(&bm, 2.0, &cfg)? {
        ExtReal::Finite(v) => println!("Brownian motion: A e^(2x) = {v} * e^(2x)"),
        ExtReal::Infinite => println!("Brownian motion: e^(2x) leaves the domain"),
    }

    // Arbitrary twice-differentiable functions go through quadrature,
    // supplied with their first two derivatives: the Brownian generator
    // sends sin to -sin/2.
    let at = 0.7_f64;
    let a_sin = apply_numeric(
        &bm,
        &|x: f64| x.sin(),
        &|x: f64| x.cos(),
        &|x: f64| -x.sin(),
        at,
        &cfg,
    )?;
    match a_sin {
        ExtReal::Finite(v) => {
            println!("Brownian motion: (A sin)({at}) = {v:.12}  (exact {})", -0.5 * at.sin())
        }
        ExtReal::Infinite => println!("Brownian motion: (A sin)({at}) diverges"),
    }

    // Additive classification: f is accepted exactly when A f is constant.
    println!();
    for (label, coeffs) in [
        ("x^2", vec![0.0, 0.0, 1.0]),
        ("x^3", vec![0.0, 0.0, 0.0, 1.0]),
    ] {
        let f = Polynomial::new(coeffs);
        let c = classify_additive(&bm, &f, &cfg)?;
        match c.verdict {
            AdditiveVerdict::Martingale { alpha } => println!(
                "Brownian motion, f = {label}: martingale function, E f(X_t) grows like {alpha} t"
            ),
            AdditiveVerdict::NotMartingale { nonconstant_part } => println!(
                "Brownian motion, f = {label}: not a martingale function, \
                 A f has non-constant part {nonconstant_part}"
            ),
            AdditiveVerdict::TrivialIndeterminate => {
                println!("Brownian motion, f = {label}: process is identically zero, test vacuous")
            }
        }
    }

    // On the uncentered gamma subordinator the quadratic fails (A x^2 has
    // a genuine x term) while every affine function still passes.
    match classify_additive(&gamma, &x2, &cfg)?.verdict {
        AdditiveVerdict::NotMartingale { nonconstant_part } => println!(
            "gamma subordinator, f = x^2: not a martingale function (A f keeps {nonconstant_part})"
        ),
        v => panic!("unexpected verdict {v:?}"),
    }
    let affine = Polynomial::new(vec![3.0, 2.0]);
    match classify_additive(&gamma, &affine, &cfg)?.verdict {
        AdditiveVerdict::Martingale { alpha } => {
            println!("gamma subordinator, f = 2x + 3: martingale function, slope alpha = {alpha}")
        }
        v => panic!("unexpected verdict {v:?}"),
    }

    // Multiplicative classification works on two-term exponential
    // mixtures a e^{l1 x} + b e^{l2 x}. cosh(x) normalized by its mean is
    // a martingale for Brownian motion because eta(1) = eta(-1) = 1/2.
    println!();
    let cosh = ExpMix::new(0.5, 1.0, 0.5, -1.0)?;
    let m = classify_multiplicative(&bm, &cosh, &cfg)?;
    println!("Brownian motion, g = cosh: {:?}", m.verdict);

    // e^x + e^{2x} fails: eta(1) = 1/2 but eta(2) = 2.
    let unequal = ExpMix::new(1.0, 1.0, 1.0, 2.0)?;
    let m = classify_multiplicative(&bm, &unequal, &cfg)?;
    println!("Brownian motion, g = e^x + e^(2x): {:?}", m.verdict);

    // The identically-zero process cannot separate martingale functions
    // from the rest; the classifiers say so instead of guessing.
    let zero = catalog_with(
        "brownian",
        &[("sigma2".to_string(), 0.0)].into_iter().collect(),
    )?;
    let m = classify_multiplicative(&zero, &cosh, &cfg)?;
    assert_eq!(m.verdict, MultiplicativeVerdict::TrivialIndeterminate);
    println!("zero process, g = cosh: {:?}", m.verdict);

    Ok(())
}
