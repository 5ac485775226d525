//! Forward-difference calculus for polynomials: the operator
//! D_y q = q(. + y) - q(.), the falling-factorial basis adapted to step
//! y, exact solution of D_y q = p, and the uniqueness check that any two
//! solutions differ by a constant.

use levy_martingale::{difference, falling_factorial, frechet_solve, Polynomial, Result};

fn main() -> Result<()> {
    let y = 2.0;

    // The falling factorials phi_k(x) = x (x - y) ... (x - (k-1)y) play
    // the role monomials play for derivatives: D_y phi_{k+1} = (k+1) y phi_k.
    for k in 0..4 {
        println!("phi_{k}(x) = {}", falling_factorial(k, y)?);
    }
    let phi3 = falling_factorial(3, y)?;
    println!(
        "D_2 phi_3 = {}   (3 * y * phi_2 = {})\n",
        difference(&phi3, y)?,
        falling_factorial(2, y)?.scale(3.0 * y)
    );

    // Solve D_2 q = 3x^2 - 6x. The solver returns the unique solution
    // with q(0) = 0; here it factors as x (x - 2)(x - 4) / 2.
    let p = Polynomial::new(vec![0.0, -6.0, 3.0]);
    let q = frechet_solve(&p, y)?;
    println!("solving D_{y} q = {p}");
    println!("  q = {q}");

    // Round trip: applying the difference operator recovers p exactly.
    let back = difference(&q, y)?;
    println!("  D_{y} q = {back}");
    let residual = back.sub(&p).max_abs_coeff();
    println!("  round-trip residual (max |coeff|): {residual:e}");
    assert!(residual <= 1e-12);

    // Degree bookkeeping: differencing drops the degree by exactly one,
    // solving raises it by exactly one.
    assert_eq!(q.degree(), Some(p.degree().unwrap() + 1));

    // Uniqueness up to constants: any other solution of the same equation
    // differs from q by a constant, and the checker confirms it.
    let q_shifted = q.add(&Polynomial::constant(7.5));
    let check = levy_martingale::verify_general_solution(&q, &q_shifted, y)?;
    println!(
        "\nq and q + 7.5 solve the same equation; differ by a constant? {}",
        check.holds
    );
    assert!(check.premise_holds && check.holds);

    // A genuinely different polynomial fails the premise, so the
    // uniqueness claim is not even in play.
    let other = Polynomial::new(vec![0.0, 0.0, 0.0, 1.0]);
    let check = levy_martingale::verify_general_solution(&q, &other, y)?;
    println!(
        "q vs x^3: same differences? {}   (claim vacuous: {})",
        check.premise_holds, check.holds
    );

    // Negative and irrational steps work the same way.
    let p = Polynomial::new(vec![1.0, 0.0, 0.0, 0.0, 5.0]);
    for step in [-0.3, std::f64::consts::SQRT_2] {
        let q = frechet_solve(&p, step)?;
        let residual = difference(&q, step)?.sub(&p).max_abs_coeff();
        println!("step y = {step}: degree {} solution, residual {residual:e}", q.degree().unwrap());
    }

    Ok(())
}
