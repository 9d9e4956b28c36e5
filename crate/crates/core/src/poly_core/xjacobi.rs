//! X1 exceptional Jacobi polynomials.


use super::families::jacobi_poly;
use super::poly::Poly;
use super::rational::{int, rat, Rational};
use crate::error::Result;
use crate::operator_algebra::{build_t, build_t_printed, eigenpolynomial, eigenvalue};
use crate::params::param_b;
use crate::report::{Report, Verdict};

/// Transcription of the closed form
/// `-(x-b)/2 P_{n-1} + (b P_{n-1} - P_{n-2}) / (2n-2+alpha+beta)`, with `P_{-1} := 0`.
///
/// # Panics
/// If `n == 0`; the family starts at degree one.
pub fn xjacobi_printed(n: usize, alpha: &Rational, beta: &Rational) -> Result<Poly> {
    assert!(n >= 1, "X1 Jacobi index starts at 1");
    let b = param_b(alpha, beta)?;
    let p1 = jacobi_poly(n - 1, alpha, beta);
    let p2 = if n >= 2 {
        jacobi_poly(n - 2, alpha, beta)
    } else {
        Poly::zero()
    };
    let head = (&Poly::linear_root(&b) * &p1).scale(&rat(-1, 2));
    let denom = int(2 * n as i64 - 2) + alpha + beta;
    let tail = (&p1.scale(&b) - &p2).scale(&denom.recip());
    Ok(&head + &tail)
}

/// Monic degree-`n` eigenpolynomial of the eigen-operator `T` for eigenvalue
/// `(2n-1+alpha+beta)^2`.
pub fn xjacobi_eigen(n: usize, alpha: &Rational, beta: &Rational) -> Result<Poly> {
    let t = build_t(alpha, beta)?;
    eigenpolynomial(&t, n, &eigenvalue(n, alpha, beta))
}

/// Same solve against the printed operator. Succeeds at `n = 1` (giving `x + b`)
/// and fails for `n >= 2`.
pub fn xjacobi_eigen_printed_operator(n: usize, alpha: &Rational, beta: &Rational) -> Result<Poly> {
    let t = build_t_printed(alpha, beta)?;
    eigenpolynomial(&t, n, &eigenvalue(n, alpha, beta))
}

/// One row of the closed-form versus eigen-operator comparison.
#[derive(Clone, Debug)]
pub struct XJacobiComparison {
    pub n: usize,
    pub printed: Poly,
    pub eigen: Poly,
    /// Eigenpolynomial of the printed operator, or the reason it does not exist.
    pub printed_operator: std::result::Result<Poly, String>,
    pub printed_vs_eigen: Verdict,
    pub printed_vs_printed_operator: Verdict,
}

fn verdict(a: &Poly, b: &Poly) -> Verdict {
    if a.proportionality(b).is_some() {
        Verdict::Match
    } else {
        Verdict::Mismatch
    }
}

/// Compares the closed form against both eigen-operators for `n = 1..=nmax`.
pub fn reconcile_xjacobi(nmax: usize, alpha: &Rational, beta: &Rational) -> Result<Vec<XJacobiComparison>> {
    (1..=nmax)
        .map(|n| {
            let printed = xjacobi_printed(n, alpha, beta)?;
            let eigen = xjacobi_eigen(n, alpha, beta)?;
            let printed_operator =
                xjacobi_eigen_printed_operator(n, alpha, beta).map_err(|e| e.to_string());
            let printed_vs_printed_operator = match &printed_operator {
                Ok(p) => verdict(&printed, p),
                Err(_) => Verdict::Mismatch,
            };
            Ok(XJacobiComparison {
                n,
                printed_vs_eigen: verdict(&printed, &eigen),
                printed,
                eigen,
                printed_operator,
                printed_vs_printed_operator,
            })
        })
        .collect()
}

/// Report lines for [`reconcile_xjacobi`]; every line is informational.
pub fn reconcile_report(nmax: usize, alpha: &Rational, beta: &Rational) -> Result<Report> {
    let mut report = Report::new();
    for row in reconcile_xjacobi(nmax, alpha, beta)? {
        report.push(
            row.printed_vs_eigen,
            format!("xjacobi closed form vs eigen-operator, n={}", row.n),
            format!("{} vs {}", row.printed, row.eigen),
        );
        let other = match &row.printed_operator {
            Ok(p) => p.to_string(),
            Err(e) => e.clone(),
        };
        report.push(
            row.printed_vs_printed_operator,
            format!("xjacobi closed form vs printed operator, n={}", row.n),
            format!("{} vs {}", row.printed, other),
        );
    }
    Ok(report)
}

