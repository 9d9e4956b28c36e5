//! Classical Jacobi and Laguerre polynomials with exact coefficients.

use num_traits::One;

use super::poly::Poly;
use super::rational::{binomial_rational, factorial, int, Rational};

/// `P_n^{(a,b)}(x)` in the standard normalization `P_n(1) = (a+1)_n / n!`,
/// built from the three-term recurrence.
pub fn jacobi_poly(n: usize, a: &Rational, b: &Rational) -> Poly {
    let one = Rational::one();
    let two = int(2);
    let p0 = Poly::one();
    if n == 0 {
        return p0;
    }
    // P_1 = (a+1) + (a+b+2)(x-1)/2
    let s = a + b;
    let p1 = Poly::from_coeffs(vec![
        (a - b) / &two,
        (&s + &two) / &two,
    ]);
    let (mut prev, mut cur) = (p0, p1);
    for k in 1..n {
        let k = int(k as i64);
        let c = &two * &k + &s; // 2k + a + b
        let denom = &two * (&k + &one) * (&k + &s + &one) * &c;
        let lin = (&c + &one) * (&c + &two) * &c; // multiplies x
        let cst = (&c + &one) * (a * a - b * b);
        let back = &two * (&k + a) * (&k + b) * (&c + &two);
        let next = (&(&Poly::from_coeffs(vec![cst, lin]) * &cur) - &prev.scale(&back))
            .scale(&denom.recip());
        prev = cur;
        cur = next;
    }
    cur
}

/// `L_m^{(a)}(y) = sum_i (-1)^i C(m+a, m-i) y^i / i!`, for any rational `a`.
pub fn laguerre_poly(m: usize, a: &Rational) -> Poly {
    let top = int(m as i64) + a;
    Poly::from_coeffs(
        (0..=m)
            .map(|i| {
                let sign = if i % 2 == 0 { int(1) } else { int(-1) };
                sign * binomial_rational(&top, m - i) / factorial(i)
            })
            .collect(),
    )
}

/// Value of `P_n^{(a,b)}(1)`.
pub fn jacobi_at_one(n: usize, a: &Rational) -> Rational {
    super::rational::pochhammer(&(a + Rational::one()), n) / factorial(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly_core::rational::rat;

    #[test]
    fn jacobi_low_orders() {
        assert_eq!(jacobi_poly(0, &int(1), &int(3)), Poly::one());
        assert_eq!(jacobi_poly(1, &int(1), &int(3)), Poly::from_ints(&[-1, 3]));
        // Frozen from a computer-algebra expansion.
        assert_eq!(
            jacobi_poly(2, &int(1), &int(3)),
            Poly::from_coeffs(vec![rat(-1, 2), rat(-7, 2), int(7)])
        );
    }

    #[test]
    fn jacobi_reflection() {
        for (a, b) in [(int(1), int(3)), (rat(1, 2), rat(5, 2)), (rat(-1, 3), rat(7, 4))] {
            for n in 0..8 {
                let lhs = jacobi_poly(n, &a, &b).reflect();
                let rhs = jacobi_poly(n, &b, &a);
                let rhs = if n % 2 == 1 { -rhs } else { rhs };
                assert_eq!(lhs, rhs, "n={n}");
            }
        }
    }

    #[test]
    fn jacobi_normalization_and_ode() {
        let (a, b) = (rat(2, 3), rat(5, 2));
        let one_minus_x2 = Poly::from_ints(&[1, 0, -1]);
        for n in 0..9usize {
            let p = jacobi_poly(n, &a, &b);
            assert_eq!(p.eval(&int(1)), jacobi_at_one(n, &a));
            // (1-x^2) P'' + (b - a - (a+b+2) x) P' + n(n+a+b+1) P = 0
            let drift = Poly::from_coeffs(vec![&b - &a, -(&a + &b + int(2))]);
            let lam = int(n as i64) * (int(n as i64) + &a + &b + int(1));
            let ode = &(&(&one_minus_x2 * &p.nth_derivative(2)) + &(&drift * &p.derivative()))
                + &p.scale(&lam);
            assert!(ode.is_zero(), "n={n}");
        }
    }

    #[test]
    fn laguerre_examples() {
        let a = rat(7, 3);
        assert_eq!(laguerre_poly(0, &a), Poly::one());
        assert_eq!(
            laguerre_poly(1, &a),
            Poly::from_coeffs(vec![&a + int(1), int(-1)])
        );
        assert_eq!(
            laguerre_poly(2, &int(0)),
            Poly::from_coeffs(vec![int(1), int(-2), rat(1, 2)])
        );
    }

    #[test]
    fn laguerre_ode() {
        for a in [int(0), rat(5, 2), rat(-1, 3), rat(20, 3)] {
            for m in 0..9usize {
                let l = laguerre_poly(m, &a);
                let y = Poly::x();
                let drift = Poly::from_coeffs(vec![&a + int(1), int(-1)]);
                let ode = &(&(&y * &l.nth_derivative(2)) + &(&drift * &l.derivative()))
                    + &l.scale(&int(m as i64));
                assert!(ode.is_zero(), "m={m} a={a}");
            }
        }
    }
}
