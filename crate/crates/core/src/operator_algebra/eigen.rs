//! Polynomial eigenfunctions of rational-coefficient operators.

use num_traits::Zero;

use super::diffop::DiffOp;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};
use crate::poly_core::linalg::nullspace;
use crate::poly_core::{Poly, Rational};

/// The unique (up to scale) polynomial `u` of degree exactly `n` with
/// `(op - lambda) u = 0`, returned monic. The identity is cleared of
/// denominators and solved as a linear system in the `n + 1` coefficients.
pub fn eigenpolynomial(op: &DiffOp, n: usize, lambda: &Rational) -> Result<Poly> {
    let shifted = op - &DiffOp::scalar(lambda.clone());
    let images: Vec<_> = (0..=n)
        .map(|i| shifted.apply_poly(&Poly::monomial(Rational::from_integer(1.into()), i)))
        .collect();
    let den = images.iter().fold(Poly::one(), |acc, f| {
        let g = acc.gcd(f.den());
        (&acc * f.den()).div_rem(&g).0.monic()
    });
    let cleared: Vec<Poly> = images
        .iter()
        .map(|f| (f.num() * &den).exact_div(f.den()).expect("denominator divides lcm"))
        .collect();
    let rows_len = cleared.iter().filter_map(Poly::degree).max().map_or(0, |d| d + 1);
    let rows: Vec<Vec<Rational>> = (0..rows_len)
        .map(|k| cleared.iter().map(|p| p.coeff(k)).collect())
        .collect();
    let basis = nullspace(rows, n + 1);
    let what = format!("degree-{n} eigenpolynomial for eigenvalue {lambda}");
    match basis.len() {
        0 => Err(Error::NoSolution(what)),
        1 => {
            let u = Poly::from_coeffs(basis.into_iter().next().unwrap());
            if u.coeff(n).is_zero() {
                Err(Error::NoSolution(format!("{what} (solution has lower degree)")))
            } else {
                Ok(u.monic())
            }
        }
        dim => Err(Error::NonUniqueSolution { what, dim }),
    }
}

/// `clearing * (op - lambda) u`; the eigen-identity holds iff this is zero.
pub fn cleared_residual(op: &DiffOp, u: &Poly, lambda: &Rational, clearing: &Poly) -> RatFunc {
    let r = (op - &DiffOp::scalar(lambda.clone())).apply_poly(u);
    &r * &RatFunc::from_poly(clearing.clone())
}
