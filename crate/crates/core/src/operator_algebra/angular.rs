//! The angular problem in `x = cos(2k phi)`: gauge `G_x`, potential and the
//! eigen-operator `T^{alpha,beta}`.

use num_traits::One;

use super::diffop::{DiffOp, GaugeLogDeriv};
use super::ratfunc::RatFunc;
use crate::error::Result;
use crate::params::{param_b, param_c};
use crate::poly_core::rational::{int, rat};
use crate::poly_core::{Poly, Rational};

fn poly(c: &[Rational]) -> RatFunc {
    RatFunc::from_poly(Poly::from_coeffs(c.to_vec()))
}

/// `(log G_x)'` for `G_x = (1-x)^{alpha/2+1/4} (1+x)^{beta/2+1/4} / (x-b)`.
pub fn gauge_x(alpha: &Rational, beta: &Rational) -> Result<GaugeLogDeriv> {
    let b = param_b(alpha, beta)?;
    let quarter = rat(1, 4);
    Ok(GaugeLogDeriv::from_powers(&[
        (int(1), alpha / int(2) + &quarter),
        (int(-1), beta / int(2) + &quarter),
        (b, int(-1)),
    ]))
}

/// `-(1/k^2) d_phi^2` rewritten in `x`: `4(x^2-1) d^2 + 4x d`.
pub fn angular_kinetic() -> DiffOp {
    DiffOp::from_coeffs(vec![
        RatFunc::zero(),
        poly(&[int(0), int(4)]),
        poly(&[int(-4), int(0), int(4)]),
    ])
}

/// Which form of the rational deformation term to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PotentialForm {
    /// `8(1 - b x) / (b - x)^2`, the term for which `G_x * Phat_n` are eigenfunctions.
    Consistent,
    /// `4(1 + b x) / (b + x)^2` as printed in the Hamiltonian.
    Printed,
}

/// The angular potential in `x`:
/// `2(alpha^2-1/4)/(1-x) + 2(beta^2-1/4)/(1+x) + deformation`.
pub fn angular_potential(alpha: &Rational, beta: &Rational, form: PotentialForm) -> Result<RatFunc> {
    let b = param_b(alpha, beta)?;
    let quarter = rat(1, 4);
    let sin_part = RatFunc::new(
        Poly::constant(int(2) * (alpha * alpha - &quarter)),
        Poly::from_coeffs(vec![int(1), int(-1)]),
    );
    let cos_part = RatFunc::new(
        Poly::constant(int(2) * (beta * beta - &quarter)),
        Poly::from_coeffs(vec![int(1), int(1)]),
    );
    let deform = match form {
        PotentialForm::Consistent => RatFunc::new(
            Poly::from_coeffs(vec![int(8), int(-8) * &b]),
            Poly::from_coeffs(vec![b.clone(), int(-1)]).pow(2),
        ),
        PotentialForm::Printed => RatFunc::new(
            Poly::from_coeffs(vec![int(4), int(4) * &b]),
            Poly::from_coeffs(vec![b.clone(), int(1)]).pow(2),
        ),
    };
    Ok(&(&sin_part + &cos_part) + &deform)
}

/// The angular operator `L1` in `x`: kinetic part plus potential.
pub fn angular_hamiltonian(alpha: &Rational, beta: &Rational, form: PotentialForm) -> Result<DiffOp> {
    let v = angular_potential(alpha, beta, form)?;
    Ok(&angular_kinetic() + &DiffOp::multiplication(v))
}

fn t_with_root(alpha: &Rational, beta: &Rational, root: Rational) -> Result<DiffOp> {
    let b = param_b(alpha, beta)?;
    // 4(beta-alpha)(1-bx)/(b-x)
    let w = RatFunc::new(
        Poly::from_coeffs(vec![int(4) * (beta - alpha), int(-4) * (beta - alpha) * &b]),
        Poly::from_coeffs(vec![b, int(-1)]),
    );
    let s1 = alpha + beta + Rational::one();
    let first = DiffOp::first_order(
        RatFunc::from_poly(Poly::linear_root(&root)),
        RatFunc::constant(int(-1)),
    );
    let second = DiffOp::from_coeffs(vec![
        RatFunc::constant(&s1 * &s1),
        RatFunc::zero(),
        poly(&[int(-4), int(0), int(4)]),
    ]);
    Ok(&second + &first.left_mul(&w))
}

/// Literal transcription of the printed operator
/// `4(x^2-1)d^2 + 4(beta-alpha)(1-bx)/(b-x) ((x+b)d - 1) + (alpha+beta+1)^2`.
pub fn build_t_printed(alpha: &Rational, beta: &Rational) -> Result<DiffOp> {
    let b = param_b(alpha, beta)?;
    t_with_root(alpha, beta, -b)
}

/// The eigen-operator the angular equation actually reduces to under `G_x`:
/// the first-order factor is `(x - c) d - 1` with `c = (alpha+beta+2)/(beta-alpha)`.
pub fn build_t(alpha: &Rational, beta: &Rational) -> Result<DiffOp> {
    let c = param_c(alpha, beta)?;
    t_with_root(alpha, beta, c)
}

/// `A_n^2 = (2n - 1 + alpha + beta)^2`
pub fn eigenvalue(n: usize, alpha: &Rational, beta: &Rational) -> Rational {
    let a = int(2 * n as i64 - 1) + alpha + beta;
    &a * &a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_t_on_constant() {
        let t = build_t_printed(&int(1), &int(3)).unwrap();
        let img = t.apply(&RatFunc::one());
        // 25 - 8(1-2x)/(2-x)
        let expect = &RatFunc::constant(int(25))
            - &RatFunc::new(Poly::from_ints(&[8, -16]), Poly::from_ints(&[2, -1]));
        assert_eq!(img, expect);
    }

    #[test]
    fn leading_constant() {
        let t = build_t_printed(&int(1), &int(3)).unwrap();
        // zeroth-order coefficient -> 25 - 4(b-a)b as x -> inf; the bare constant is 25
        let c0 = t.coeff(0);
        assert_eq!(c0.eval(&int(0)).unwrap(), int(25) - int(8) * rat(1, 2));
    }

    #[test]
    fn conjugated_hamiltonian_is_t() {
        for (a, b) in [(int(1), int(3)), (rat(1, 2), rat(5, 2)), (int(2), rat(7, 2))] {
            let g = gauge_x(&a, &b).unwrap();
            let h = angular_hamiltonian(&a, &b, PotentialForm::Consistent).unwrap();
            // G^{-1} H G
            let t = h.gauge_conjugate(&g.inverse());
            assert_eq!(t, build_t(&a, &b).unwrap());
            let hp = angular_hamiltonian(&a, &b, PotentialForm::Printed).unwrap();
            assert_ne!(hp.gauge_conjugate(&g.inverse()), build_t_printed(&a, &b).unwrap());
        }
    }

    #[test]
    fn equal_parameters_rejected() {
        assert!(build_t(&int(1), &int(1)).is_err());
        assert!(gauge_x(&int(1), &int(1)).is_err());
    }
}
