//! The radial problem in `y = omega r^2`.

use super::diffop::{DiffOp, GaugeLogDeriv};
use super::ratfunc::RatFunc;
use crate::poly_core::rational::{int, rat};
use crate::poly_core::{Poly, Rational};

/// `(log G_y)'` for `G_y = y^{l/2} e^{-y/2}`.
pub fn gauge_y(ell: &Rational) -> GaugeLogDeriv {
    let pole = RatFunc::new(Poly::constant(ell / int(2)), Poly::x());
    GaugeLogDeriv::new(&pole - &RatFunc::constant(rat(1, 2)))
}

/// `y d^2 + (1 + l - y) d + (eps - l - 1)/2` with `eps = E/omega`; Laguerre `L_m^l`
/// is an eigenfunction (eigenvalue 0) exactly when `eps = 2m + l + 1`.
pub fn radial_operator(ell: &Rational, eps: &Rational) -> DiffOp {
    DiffOp::from_coeffs(vec![
        RatFunc::constant((eps - ell - int(1)) / int(2)),
        RatFunc::from_poly(Poly::from_coeffs(vec![int(1) + ell, int(-1)])),
        RatFunc::from_poly(Poly::x()),
    ])
}

/// Printed radial reduction: constant term `E/(4 omega)`.
pub fn radial_operator_printed(ell: &Rational, eps: &Rational) -> DiffOp {
    DiffOp::from_coeffs(vec![
        RatFunc::constant(eps / int(4)),
        RatFunc::from_poly(Poly::from_coeffs(vec![int(1) + ell, int(-1)])),
        RatFunc::from_poly(Poly::x()),
    ])
}

/// Separated radial Hamiltonian in `y`, divided by `omega`:
/// `-2(y d^2 + d) + y/2 + l^2/(2y)`.
pub fn radial_hamiltonian(ell: &Rational) -> DiffOp {
    DiffOp::from_coeffs(vec![
        &RatFunc::from_poly(Poly::from_coeffs(vec![int(0), rat(1, 2)]))
            + &RatFunc::new(Poly::constant(ell * ell / int(2)), Poly::x()),
        RatFunc::constant(int(-2)),
        RatFunc::from_poly(Poly::from_coeffs(vec![int(0), int(-2)])),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly_core::laguerre_poly;

    #[test]
    fn laguerre_solves_radial_reduction() {
        let ell = rat(7, 3);
        for m in 0..5usize {
            let eps = int(2 * m as i64 + 1) + &ell;
            let l = laguerre_poly(m, &ell);
            assert!(radial_operator(&ell, &eps).apply_poly(&l).is_zero());
            assert!(!radial_operator_printed(&ell, &eps).apply_poly(&l).is_zero());
        }
    }

    #[test]
    fn conjugated_hamiltonian_matches_reduction() {
        // G^{-1}(H - eps)G = -2 (y d^2 + (1+l-y) d + (eps-l-1)/2) for every eps
        let ell = rat(5, 2);
        let eps = rat(13, 3);
        let g = gauge_y(&ell);
        let h = &radial_hamiltonian(&ell) - &DiffOp::scalar(eps.clone());
        let lhs = h.gauge_conjugate(&g.inverse());
        let rhs = radial_operator(&ell, &eps).scale(&int(-2));
        assert_eq!(lhs, rhs);
    }
}
