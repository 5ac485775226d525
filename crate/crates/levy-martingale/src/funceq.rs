//! The one-step difference equation `q(x+y) - q(x) = p(x)` on polynomials.
//!
//! For a fixed step `y != 0` the forward difference `D_y q := q(. + y) - q`
//! lowers polynomial degree by exactly one, so every polynomial `p` of
//! degree `n` has polynomial antidifferences of degree `n + 1`, unique up
//! to an additive constant (the only polynomials with period `y` are the
//! constants).  [`frechet_solve`] produces the one normalized by
//! `q(0) = 0`, working in the step-`y` falling-factorial basis
//!
//! ```text
//! phi_k(x) = x (x - y) (x - 2y) ... (x - (k-1) y),
//! ```
//!
//! whose members satisfy the exact ladder `D_y phi_{k+1} = (k+1) y phi_k`.
//! Expanding `p` in that basis via Newton forward differences at the nodes
//! `0, y, 2y, ..., ny` turns antidifferencing into a shift of basis index:
//! each `phi_k` lifts to `phi_{k+1} / ((k+1) y)`.  All of this is exact
//! rational algebra executed in floating point; for the degrees this crate
//! uses (single digits) it is accurate to near machine precision.

use serde::Serialize;

use crate::error::{LevyError, Result};
use crate::poly::Polynomial;

fn check_step(y: f64) -> Result<()> {
    if y == 0.0 || !y.is_finite() {
        return Err(LevyError::InvalidArgument(format!(
            "difference step must be finite and nonzero, got {y}"
        )));
    }
    Ok(())
}

/// The expanded falling-factorial polynomial
/// `phi_k(x) = x (x - y) ... (x - (k-1) y)` for step `y` (monic of degree
/// `k`; the empty product `k = 0` is the constant `1`).
pub fn falling_factorial(k: u32, y: f64) -> Result<Polynomial> {
    check_step(y)?;
    let mut phi = Polynomial::constant(1.0);
    for j in 0..k {
        phi = phi.mul(&Polynomial::new(vec![-(j as f64) * y, 1.0]));
    }
    Ok(phi)
}

/// The forward difference `D_y q = q(. + y) - q(.)`.  Drops the degree by
/// exactly one on nonconstant polynomials and annihilates constants.
pub fn difference(q: &Polynomial, y: f64) -> Result<Polynomial> {
    check_step(y)?;
    Ok(q.shift(y).sub(q))
}

/// Solve `D_y q = p` for the polynomial `q` with `q(0) = 0`.
///
/// The solution has degree exactly `deg p + 1`.  Algorithm: Newton forward
/// differences of `p` at `0, y, ..., ny` give the basis coefficients
/// `a_k = (D_y^k p)(0) / (k! y^k)` with `p = sum a_k phi_k`; the ladder
/// `D_y phi_{k+1} = (k+1) y phi_k` then yields
/// `q = sum_k a_k phi_{k+1} / ((k+1) y)`, which vanishes at zero because
/// every `phi_{k+1}` carries a factor `x`.
pub fn frechet_solve(p: &Polynomial, y: f64) -> Result<Polynomial> {
    check_step(y)?;
    let Some(n) = p.degree() else {
        return Ok(Polynomial::zero());
    };
    // Forward-difference table over the nodes 0, y, ..., ny, collapsed in
    // place: after round k, diffs[0] holds (D_y^k p)(0).
    let mut diffs: Vec<f64> = (0..=n).map(|i| p.eval(i as f64 * y)).collect();
    let mut q = Polynomial::zero();
    let mut basis = Polynomial::new(vec![0.0, 1.0]); // phi_1 = x
    let mut k_fact_yk = 1.0; // k! y^k
    for k in 0..=n {
        let a_k = diffs[0] / k_fact_yk;
        q = q.add(&basis.scale(a_k / ((k + 1) as f64 * y)));
        if k == n {
            break;
        }
        for i in 0..n - k {
            diffs[i] = diffs[i + 1] - diffs[i];
        }
        basis = basis.mul(&Polynomial::new(vec![-((k + 1) as f64) * y, 1.0]));
        k_fact_yk *= (k + 1) as f64 * y;
    }
    Ok(q)
}

/// Result of checking that two solutions of the same difference equation
/// agree up to a constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GeneralSolutionCheck {
    /// The implication "equal differences => difference of solutions is
    /// constant" (vacuously true when the premise fails).
    pub holds: bool,
    /// Whether `D_y q1 = D_y q2` actually held.
    pub premise_holds: bool,
}

/// Check the uniqueness statement behind the general solution: if
/// `D_y q1 = D_y q2` then `q1 - q2` must be constant.  Comparisons use a
/// relative coefficient tolerance of `1e-9`.
pub fn verify_general_solution(
    q1: &Polynomial,
    q2: &Polynomial,
    y: f64,
) -> Result<GeneralSolutionCheck> {
    let d1 = difference(q1, y)?;
    let d2 = difference(q2, y)?;
    let tol = 1e-9 * d1.max_abs_coeff().max(d2.max_abs_coeff()).max(1.0);
    let premise_holds = d1.sub(&d2).max_abs_coeff() <= tol;
    if !premise_holds {
        return Ok(GeneralSolutionCheck { holds: true, premise_holds: false });
    }
    let gap = q1.sub(q2);
    let nonconstant = gap.sub(&Polynomial::constant(gap.coeff(0)));
    let gap_tol = 1e-9 * gap.max_abs_coeff().max(1.0);
    Ok(GeneralSolutionCheck {
        holds: nonconstant.max_abs_coeff() <= gap_tol,
        premise_holds: true,
    })
}
