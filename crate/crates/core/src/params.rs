//! Model parameters and quantum-number states.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly_core::rational::{format_rational, int, rat};
use crate::poly_core::Rational;

/// `{alpha, beta, omega, k = p/q}` with `beta > alpha > 0`, `omega > 0`, `gcd(p, q) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Params {
    alpha: Rational,
    beta: Rational,
    omega: f64,
    p: u32,
    q: u32,
}

impl Params {
    pub fn new(alpha: Rational, beta: Rational, omega: f64, p: u32, q: u32) -> Result<Self> {
        if alpha == beta {
            return Err(Error::EqualParameters);
        }
        if !alpha.is_positive() {
            return Err(Error::InvalidParams(format!(
                "alpha must be positive, got {}",
                format_rational(&alpha)
            )));
        }
        if beta <= alpha {
            return Err(Error::InvalidParams(format!(
                "need beta > alpha, got alpha = {}, beta = {}",
                format_rational(&alpha),
                format_rational(&beta)
            )));
        }
        if !(omega.is_finite() && omega > 0.0) {
            return Err(Error::InvalidParams(format!("omega must be positive, got {omega}")));
        }
        if p == 0 || q == 0 {
            return Err(Error::InvalidParams("p and q must be positive".into()));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidParams(format!("p = {p} and q = {q} are not coprime")));
        }
        Ok(Params {
            alpha,
            beta,
            omega,
            p,
            q,
        })
    }

    /// Convenience constructor from small integers: `alpha = an/ad`, `beta = bn/bd`.
    pub fn from_ratios(an: i64, ad: i64, bn: i64, bd: i64, omega: f64, p: u32, q: u32) -> Result<Self> {
        Self::new(rat(an, ad), rat(bn, bd), omega, p, q)
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn k(&self) -> Rational {
        rat(self.p as i64, self.q as i64)
    }

    pub fn b(&self) -> Rational {
        (&self.beta + &self.alpha) / (&self.beta - &self.alpha)
    }

    pub fn c(&self) -> Rational {
        (&self.alpha + &self.beta + int(2)) / (&self.beta - &self.alpha)
    }

    /// `A_n = 2n - 1 + alpha + beta`
    pub fn a_n(&self, n: i64) -> Rational {
        int(2 * n - 1) + &self.alpha + &self.beta
    }

    /// `E_{m,n} / omega = 2m + k A_n + 1`
    pub fn energy_over_omega(&self, state: &QuantumState) -> Rational {
        int(2 * state.m as i64) + self.k() * self.a_n(state.n as i64) + Rational::one()
    }
}

/// Basis label `Psi_{m,n}`: radial index `m >= 0`, angular index `n >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct QuantumState {
    pub m: u32,
    pub n: u32,
}

impl QuantumState {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidState("angular index n must be >= 1".into()));
        }
        Ok(QuantumState { m, n })
    }

    pub fn a_n(&self, params: &Params) -> Rational {
        params.a_n(self.n as i64)
    }

    /// `k A_n`, the Laguerre parameter of the radial factor.
    pub fn ell(&self, params: &Params) -> Rational {
        params.k() * self.a_n(params)
    }

    pub fn energy_over_omega(&self, params: &Params) -> Rational {
        params.energy_over_omega(self)
    }
}

impl std::fmt::Display for QuantumState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

/// `b = (beta + alpha) / (beta - alpha)`
pub fn param_b(alpha: &Rational, beta: &Rational) -> Result<Rational> {
    let d = beta - alpha;
    if d.is_zero() {
        return Err(Error::EqualParameters);
    }
    Ok((beta + alpha) / d)
}

/// `c = (alpha + beta + 2) / (beta - alpha)`, the root of the first-order factor of `T`.
pub fn param_c(alpha: &Rational, beta: &Rational) -> Result<Rational> {
    let d = beta - alpha;
    if d.is_zero() {
        return Err(Error::EqualParameters);
    }
    Ok((alpha + beta + int(2)) / d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b_examples() {
        assert_eq!(param_b(&int(1), &int(3)).unwrap(), int(2));
        assert_eq!(param_b(&rat(1, 2), &rat(3, 2)).unwrap(), int(2));
        assert_eq!(param_b(&int(2), &int(2)), Err(Error::EqualParameters));
    }

    #[test]
    fn validation() {
        assert!(Params::from_ratios(1, 1, 3, 1, 1.0, 1, 1).is_ok());
        assert_eq!(
            Params::from_ratios(1, 1, 1, 1, 1.0, 1, 1),
            Err(Error::EqualParameters)
        );
        assert!(Params::from_ratios(3, 1, 1, 1, 1.0, 1, 1).is_err());
        assert!(Params::from_ratios(-1, 1, 1, 1, 1.0, 1, 1).is_err());
        assert!(Params::from_ratios(1, 1, 3, 1, 0.0, 1, 1).is_err());
        assert!(Params::from_ratios(1, 1, 3, 1, 1.0, 2, 4).is_err());
        assert!(QuantumState::new(0, 0).is_err());
    }

    #[test]
    fn energies() {
        let p = Params::from_ratios(1, 1, 2, 1, 1.0, 1, 1).unwrap();
        assert_eq!(p.energy_over_omega(&QuantumState { m: 0, n: 1 }), int(5));
        let p2 = Params::from_ratios(1, 1, 2, 1, 1.0, 2, 1).unwrap();
        assert_eq!(p2.energy_over_omega(&QuantumState { m: 2, n: 1 }), int(13));
    }
}
