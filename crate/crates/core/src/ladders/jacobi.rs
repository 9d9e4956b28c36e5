//! Lowering and raising operators for classical Jacobi polynomials.

use num_traits::One;

use crate::error::{Error, Result};
use crate::operator_algebra::{DiffOp, RatFunc};
use crate::poly_core::rational::int;
use crate::poly_core::{jacobi_poly, Poly, Rational};
use crate::report::Verdict;

fn p(c: Vec<Rational>) -> RatFunc {
    RatFunc::from_poly(Poly::from_coeffs(c))
}

fn one_minus_x2() -> Vec<Rational> {
    vec![int(1), int(0), int(-1)]
}

/// Derived lowering operator for `P_j^{(a,b)}`:
/// `((2j+s)(1-x^2) d + j((2j+s)x - (a-b))) / 2`, `s = a+b`, with
/// `L_j P_j = (j+a)(j+b) P_{j-1}`. `j` may be any rational.
pub fn lowering_derived(j: &Rational, a: &Rational, b: &Rational) -> DiffOp {
    let s = a + b;
    let t = int(2) * j + &s;
    let d: Vec<Rational> = one_minus_x2().iter().map(|c| c * &t / int(2)).collect();
    let c0 = vec![-(j * (a - b)) / int(2), j * &t / int(2)];
    DiffOp::first_order(p(d), p(c0))
}

/// Derived raising operator for `P_j^{(a,b)}`:
/// `(-(2j+s+2)(1-x^2) d + (j+s+1)((2j+s+2)x + a-b)) / 2`, with
/// `R_j P_j = (j+1)(j+s+1) P_{j+1}`.
pub fn raising_derived(j: &Rational, a: &Rational, b: &Rational) -> DiffOp {
    let s = a + b;
    let t = int(2) * j + &s + int(2);
    let u = j + &s + int(1);
    let d: Vec<Rational> = one_minus_x2().iter().map(|c| -(c * &t) / int(2)).collect();
    let c0 = vec![&u * (a - b) / int(2), &u * &t / int(2)];
    DiffOp::first_order(p(d), p(c0))
}

/// Printed lowering operator, written with the X1 parameters `(alpha, beta)`:
/// `(1-x^2)(2j+alpha+beta)/2 d - j((2j+alpha+beta)x + alpha-beta+2)/2`.
pub fn lowering_printed(j: &Rational, alpha: &Rational, beta: &Rational) -> DiffOp {
    let t = int(2) * j + alpha + beta;
    let d: Vec<Rational> = one_minus_x2().iter().map(|c| c * &t / int(2)).collect();
    let shift = alpha - beta + int(2);
    let c0 = vec![-(j * &shift) / int(2), -(j * &t) / int(2)];
    DiffOp::first_order(p(d), p(c0))
}

/// Printed raising operator:
/// `-(1-x)(2j+alpha+beta+2)/2 d + (j+alpha+beta+1)((2j+alpha+beta)x + alpha-beta+2)/2`.
pub fn raising_printed(j: &Rational, alpha: &Rational, beta: &Rational) -> DiffOp {
    let t = int(2) * j + alpha + beta;
    let u = j + alpha + beta + int(1);
    let d = vec![-(&t + int(2)) / int(2), (&t + int(2)) / int(2)];
    let shift = alpha - beta + int(2);
    let c0 = vec![&u * &shift / int(2), &u * &t / int(2)];
    DiffOp::first_order(p(d), p(c0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Lower,
    Raise,
}

/// A ladder operator that has been checked by exact application.
#[derive(Clone, Debug)]
pub struct VerifiedLadder {
    pub op: DiffOp,
    /// `op P_j = coefficient * P_{j -/+ 1}`.
    pub coefficient: Rational,
    /// Whether the printed form passed the same exact test.
    pub printed_status: Verdict,
}

/// If `op P_j^{(a,b)}` is a constant multiple of `P_{j+delta}`, returns it.
/// Lowering from `j = 0` must give zero, reported as coefficient 0.
pub fn jacobi_action(op: &DiffOp, j: usize, step: Step, a: &Rational, b: &Rational) -> Option<Rational> {
    let img = op.apply_poly(&jacobi_poly(j, a, b));
    let target = match step {
        Step::Lower if j == 0 => return img.is_zero().then(|| int(0)),
        Step::Lower => jacobi_poly(j - 1, a, b),
        Step::Raise => jacobi_poly(j + 1, a, b),
    };
    let img = img.as_poly()?.clone();
    target.proportionality(&img)
}

/// Exact coefficient formula of the derived ladder.
pub fn derived_coefficient(j: usize, step: Step, a: &Rational, b: &Rational) -> Rational {
    let jr = int(j as i64);
    match step {
        Step::Lower => (&jr + a) * (&jr + b),
        Step::Raise => (&jr + Rational::one()) * (&jr + a + b + Rational::one()),
    }
}

/// Verify-then-derive for the Jacobi ladders of the family `P^{(a,b)}`.
/// The printed operators are written with `(alpha, beta) = (a-1, b+1)`.
pub fn build_jacobi_ladder(j: usize, step: Step, a: &Rational, b: &Rational) -> Result<VerifiedLadder> {
    if step == Step::Lower && j == 0 {
        return Err(Error::OutOfFamily("lowering P_0 leaves the family".into()));
    }
    let jr = int(j as i64);
    let alpha = a - Rational::one();
    let beta = b + Rational::one();
    let (printed, derived) = match step {
        Step::Lower => (lowering_printed(&jr, &alpha, &beta), lowering_derived(&jr, a, b)),
        Step::Raise => (raising_printed(&jr, &alpha, &beta), raising_derived(&jr, a, b)),
    };
    let printed_ok = jacobi_action(&printed, j, step, a, b).is_some();
    let printed_status = if printed_ok && printed == derived {
        Verdict::Match
    } else if printed_ok {
        Verdict::Normalization
    } else {
        Verdict::Mismatch
    };
    if printed_ok {
        let coefficient = jacobi_action(&printed, j, step, a, b).unwrap();
        return Ok(VerifiedLadder {
            op: printed,
            coefficient,
            printed_status,
        });
    }
    let coefficient = jacobi_action(&derived, j, step, a, b).ok_or_else(|| {
        Error::VerificationFailure(format!(
            "neither printed nor derived {step:?} operator maps P_{j} to a basis element"
        ))
    })?;
    Ok(VerifiedLadder {
        op: derived,
        coefficient,
        printed_status,
    })
}

/// `j -> -j - s - 1` maps `L_j` to `R_j` exactly (as operators).
pub fn reflected_index(j: &Rational, a: &Rational, b: &Rational) -> Rational {
    -(j + a + b + Rational::one())
}

