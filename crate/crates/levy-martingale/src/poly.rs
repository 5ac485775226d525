//! Dense univariate polynomials and `(x, t)` bi-polynomials.
//!
//! Coefficients are stored in ascending powers.  A polynomial is kept in
//! canonical form: trailing coefficients whose magnitude falls below
//! `1e-12 * max(1, largest |coefficient|)` are trimmed, so tiny numerical
//! residue cannot silently inflate the degree.  Interior coefficients are
//! never touched.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Relative threshold below which a trailing coefficient counts as zero.
pub const COEFF_TRIM_REL: f64 = 1e-12;

/// A real polynomial in one variable, ascending coefficient order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    /// Build from ascending coefficients and canonicalize.
    pub fn new(coeffs: Vec<f64>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial x^n.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![0.0; n + 1];
        coeffs[n] = 1.0;
        Polynomial { coeffs }
    }

    fn trim(&mut self) {
        let scale = self
            .coeffs
            .iter()
            .fold(1.0f64, |m, c| m.max(c.abs()));
        let thresh = COEFF_TRIM_REL * scale;
        while let Some(&last) = self.coeffs.last() {
            if last.abs() <= thresh {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() { None } else { Some(self.coeffs.len() - 1) }
    }

    /// Coefficient of x^i (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> f64 {
        self.coeffs.get(i).copied().unwrap_or(0.0)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()))
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Polynomial::new(coeffs)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Polynomial::new(coeffs)
    }

    pub fn scale(&self, k: f64) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }

    /// Taylor shift: the polynomial `q(x) = p(x + y)`.
    ///
    /// `q_i = sum_{n >= i} C(n, i) p_n y^(n-i)`, accumulated by synthetic
    /// Horner steps so no binomial table is needed.
    pub fn shift(&self, y: f64) -> Polynomial {
        // Ruffini-Horner: each sweep folds y into one more coefficient,
        // and round i fixes q_i.
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                c[j] += y * c[j + 1];
            }
        }
        Polynomial::new(c)
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * i as f64)
            .collect();
        Polynomial::new(coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0.0 {
                continue;
            }
            let mag = c.abs();
            if first {
                if c < 0.0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0.0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if (mag - 1.0).abs() > 1e-15 {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A polynomial in two variables `x` (state) and `t` (time):
/// `sum_{i,j} c[i][j] x^i t^j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BiPolynomial {
    /// `rows[i]` holds the t-polynomial multiplying x^i.
    rows: Vec<Polynomial>,
}

impl BiPolynomial {
    pub fn new(rows: Vec<Polynomial>) -> Self {
        let mut b = BiPolynomial { rows };
        while matches!(b.rows.last(), Some(r) if r.is_zero()) {
            b.rows.pop();
        }
        b
    }

    pub fn zero() -> Self {
        BiPolynomial { rows: Vec::new() }
    }

    /// Coefficient of x^i t^j.
    pub fn coeff(&self, i: usize, j: usize) -> f64 {
        self.rows.get(i).map(|r| r.coeff(j)).unwrap_or(0.0)
    }

    pub fn rows(&self) -> &[Polynomial] {
        &self.rows
    }

    pub fn eval(&self, x: f64, t: f64) -> f64 {
        self.rows
            .iter()
            .rev()
            .fold(0.0, |acc, row| acc * x + row.eval(t))
    }

    /// Collapse the time variable at a numeric `t`, leaving a polynomial in x.
    pub fn eval_t(&self, t: f64) -> Polynomial {
        Polynomial::new(self.rows.iter().map(|r| r.eval(t)).collect())
    }

    /// The polynomial in x formed by the t^j coefficients.
    pub fn t_power_part(&self, j: usize) -> Polynomial {
        Polynomial::new(self.rows.iter().map(|r| r.coeff(j)).collect())
    }

    /// Value at t = 0: the t^0 part.
    pub fn at_t_zero(&self) -> Polynomial {
        self.t_power_part(0)
    }

    /// Coefficient of t^1 as a polynomial in x.
    pub fn t_linear_part(&self) -> Polynomial {
        self.t_power_part(1)
    }
}
