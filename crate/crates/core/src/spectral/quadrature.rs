//! Gauss-Jacobi quadrature (Golub-Welsch) and the angular Gram matrix.

use nalgebra::{DMatrix, SymmetricEigen};
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::poly_core::rational::to_f64;
use crate::poly_core::{xjacobi_eigen, Rational};

/// Nodes and weights for `int_{-1}^{1} f(x) (1-x)^a (1+x)^b dx`.
pub fn gauss_jacobi(order: usize, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
    let n = order;
    let mut m = DMatrix::<f64>::zeros(n, n);
    let s = a + b;
    for k in 0..n {
        let kf = k as f64;
        let t = 2.0 * kf + s;
        m[(k, k)] = if k == 0 {
            (b - a) / (s + 2.0)
        } else {
            (b * b - a * a) / (t * (t + 2.0))
        };
        if k + 1 < n {
            let k1 = kf + 1.0;
            let t1 = 2.0 * k1 + s;
            let beta = 4.0 * k1 * (k1 + a) * (k1 + b) * (k1 + s) / (t1 * t1 * (t1 + 1.0) * (t1 - 1.0));
            let off = beta.sqrt();
            m[(k, k + 1)] = off;
            m[(k + 1, k)] = off;
        }
    }
    let mu0 = ((a + b + 1.0) * std::f64::consts::LN_2 + ln_gamma(a + 1.0) + ln_gamma(b + 1.0)
        - ln_gamma(a + b + 2.0))
    .exp();
    let eig = SymmetricEigen::new(m);
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let v0 = eig.eigenvectors[(0, i)];
            (eig.eigenvalues[i], mu0 * v0 * v0)
        })
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    pairs.into_iter().unzip()
}

const START_ORDER: usize = 16;
const MAX_ORDER: usize = 1024;
const CONVERGED: f64 = 1e-13;

/// Gram matrix `G_ij = int Phat_i Phat_j (1-x)^alpha (1+x)^beta / (x-b)^2 dx`
/// for monic `Phat_1..Phat_nmax`, doubling the order until every normalized
/// entry changes by less than `1e-13`.
pub fn angular_gram(nmax: usize, alpha: &Rational, beta: &Rational) -> Result<(DMatrix<f64>, usize)> {
    let polys = (1..=nmax)
        .map(|n| xjacobi_eigen(n, alpha, beta).map(|p| p.to_f64_coeffs()))
        .collect::<Result<Vec<_>>>()?;
    let (a, b) = (to_f64(alpha), to_f64(beta));
    let bb = to_f64(&crate::params::param_b(alpha, beta)?);
    let gram_at = |order: usize| {
        let (xs, ws) = gauss_jacobi(order, a, b);
        let mut g = DMatrix::<f64>::zeros(nmax, nmax);
        for (x, w) in xs.iter().zip(&ws) {
            let vals: Vec<f64> = polys.iter().map(|p| crate::poly_core::poly::horner(p, *x)).collect();
            let f = w / ((x - bb) * (x - bb));
            for i in 0..nmax {
                for j in 0..nmax {
                    g[(i, j)] += f * vals[i] * vals[j];
                }
            }
        }
        g
    };
    let normalized = |g: &DMatrix<f64>| {
        DMatrix::from_fn(nmax, nmax, |i, j| g[(i, j)] / (g[(i, i)] * g[(j, j)]).sqrt())
    };
    let mut order = START_ORDER.max(nmax + 2);
    let mut prev = gram_at(order);
    let mut change = f64::INFINITY;
    while order < MAX_ORDER {
        order *= 2;
        let next = gram_at(order);
        change = (normalized(&next) - normalized(&prev)).amax();
        prev = next;
        if change < CONVERGED {
            return Ok((prev, order));
        }
    }
    Err(Error::QuadratureNonconvergence { change })
}

/// For `n1 != n2`: `|G_12| / sqrt(G_11 G_22)`. For `n1 == n2`: the norm `G_11 > 0`.
pub fn angular_orthogonality(n1: usize, n2: usize, alpha: &Rational, beta: &Rational) -> Result<f64> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::InvalidState("angular index starts at 1".into()));
    }
    let nmax = n1.max(n2);
    let (g, _) = angular_gram(nmax, alpha, beta)?;
    let (i, j) = (n1 - 1, n2 - 1);
    if i == j {
        Ok(g[(i, i)])
    } else {
        Ok(g[(i, j)].abs() / (g[(i, i)] * g[(j, j)]).sqrt())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_case() {
        let (x, w) = gauss_jacobi(5, 0.0, 0.0);
        assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
        let i4: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(4)).sum();
        assert!((i4 - 0.4).abs() < 1e-14);
    }

    #[test]
    fn jacobi_moments() {
        // int (1-x)(1+x)^2 dx over [-1,1] = 4/3 * ... computed by hand: 4/3
        let (x, w) = gauss_jacobi(8, 1.0, 2.0);
        let m0: f64 = w.iter().sum();
        assert!((m0 - 4.0 / 3.0).abs() < 1e-13);
        let m1: f64 = x.iter().zip(&w).map(|(x, w)| w * x).sum();
        // int x (1-x)(1+x)^2 dx = 4/15
        assert!((m1 - 4.0 / 15.0).abs() < 1e-13);
    }
}
