//! Ladder operators `J+/-` for the X1 exceptional Jacobi family, built as
//! `F . (Jacobi ladder) . B` in the polynomial picture and conjugated by `G_x`.

use num_traits::One;

use super::intertwiners::{derive_backward, derive_forward, phat_scale};
use super::jacobi::{lowering_derived, raising_derived};
use crate::error::{Error, Result};
use crate::operator_algebra::{gauge_x, DiffOp, RatFunc};
use crate::poly_core::rational::int;
use crate::poly_core::{pochhammer, xjacobi_eigen, Rational};
use crate::report::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Raises the angular index.
    Plus,
    /// Lowers the angular index.
    Minus,
}

impl Direction {
    pub fn step(self) -> i64 {
        match self {
            Direction::Plus => 1,
            Direction::Minus => -1,
        }
    }
}

/// The `F` and `B` intertwiners for one parameter pair, built once.
#[derive(Clone, Debug)]
pub struct AngularLadders {
    pub alpha: Rational,
    pub beta: Rational,
    pub forward: DiffOp,
    pub backward: DiffOp,
}

impl AngularLadders {
    pub fn new(alpha: &Rational, beta: &Rational) -> Result<Self> {
        Ok(AngularLadders {
            alpha: alpha.clone(),
            beta: beta.clone(),
            forward: derive_forward(alpha, beta)?,
            backward: derive_backward(alpha, beta)?,
        })
    }

    /// `J_{+/-,n} = F . (R or L)_{n-1} . B` in the polynomial picture. `n` may be
    /// any integer; the operator is defined even where its action leaves the family.
    pub fn j_poly(&self, dir: Direction, n: i64) -> DiffOp {
        let a = &self.alpha + Rational::one();
        let b = &self.beta - Rational::one();
        let j = int(n - 1);
        let ladder = match dir {
            Direction::Plus => raising_derived(&j, &a, &b),
            Direction::Minus => lowering_derived(&j, &a, &b),
        };
        self.forward.compose(&ladder).compose(&self.backward)
    }

    /// `J^q_{+/-,n} = J_{n +/- (q-1)} ... J_{n +/- 1} J_n`.
    pub fn j_power(&self, dir: Direction, n: i64, q: usize) -> DiffOp {
        (0..q as i64).fold(DiffOp::identity(), |acc, i| {
            self.j_poly(dir, n + dir.step() * i).compose(&acc)
        })
    }

    /// `G_x J G_x^{-1}`, acting on `X_n = G_x Phat_n`.
    pub fn j_gauged(&self, dir: Direction, n: i64) -> Result<DiffOp> {
        Ok(self.j_poly(dir, n).gauge_conjugate(&gauge_x(&self.alpha, &self.beta)?))
    }

    fn target_index(&self, dir: Direction, n: usize, q: usize) -> Result<usize> {
        let t = n as i64 + dir.step() * q as i64;
        if n == 0 || t < 1 {
            return Err(Error::OutOfFamily(format!(
                "J{}^{q} from n = {n} has no target in the family",
                if dir == Direction::Plus { "+" } else { "-" }
            )));
        }
        Ok(t as usize)
    }

    /// Exact action of the composed `J^q` on monic `Phat_n`:
    /// `J^q Phat_n = c Phat_{n +/- q}`, returns `c`.
    pub fn action(&self, dir: Direction, n: usize, q: usize) -> Result<Rational> {
        let t = self.target_index(dir, n, q)?;
        let img = self
            .j_power(dir, n as i64, q)
            .apply_poly(&xjacobi_eigen(n, &self.alpha, &self.beta)?);
        let target = RatFunc::from_poly(xjacobi_eigen(t, &self.alpha, &self.beta)?);
        target.proportionality(&img).ok_or_else(|| {
            Error::VerificationFailure(format!("J^{q} does not map Phat_{n} to Phat_{t}"))
        })
    }

    /// Product of single-step actions along the same path.
    pub fn stepwise_product(&self, dir: Direction, n: usize, q: usize) -> Result<Rational> {
        self.target_index(dir, n, q)?;
        (0..q as i64).try_fold(Rational::one(), |acc, i| {
            let ni = (n as i64 + dir.step() * i) as usize;
            Ok(acc * self.action(dir, ni, 1)?)
        })
    }

    /// Converts a monic-basis coefficient of `J^q` from `n` to the closed-form
    /// normalization of `Phat`.
    pub fn to_closed_form_normalization(
        &self,
        dir: Direction,
        n: usize,
        q: usize,
        c: &Rational,
    ) -> Result<Rational> {
        let t = self.target_index(dir, n, q)?;
        Ok(c * phat_scale(n, &self.alpha, &self.beta)? / phat_scale(t, &self.alpha, &self.beta)?)
    }
}

/// Derived single-step coefficient in the closed-form normalization:
/// `n(n+beta)(n+alpha)(n+alpha+beta)` (plus), `(n+alpha)(n+alpha-2)(n+beta)(n+beta-2)` (minus).
pub fn j_coefficient_closed_form(dir: Direction, n: usize, alpha: &Rational, beta: &Rational) -> Rational {
    let n = int(n as i64);
    match dir {
        Direction::Plus => &n * (&n + beta) * (&n + alpha) * (&n + alpha + beta),
        Direction::Minus => {
            (&n + alpha) * (&n + alpha - int(2)) * (&n + beta) * (&n + beta - int(2))
        }
    }
}

/// Printed single-step coefficients: `-n(n+beta)(n+alpha)(n+alpha+beta)` and
/// `-(n+alpha)(n+alpha-2)(n+beta)(n+beta-2)`.
pub fn j_printed_coefficient(dir: Direction, n: usize, alpha: &Rational, beta: &Rational) -> Rational {
    -j_coefficient_closed_form(dir, n, alpha, beta)
}

/// Printed q-fold pattern:
/// `(-1)^q (n)_q (n+beta)_q (n+alpha)_q (n+alpha+beta)_q` (plus) and
/// `(-1)^q (-n-alpha)_q (-n-alpha+2)_q (-n-beta)_q (-n-beta+2)_q` (minus).
pub fn recur_j_printed(dir: Direction, n: usize, q: usize, alpha: &Rational, beta: &Rational) -> Rational {
    let n = int(n as i64);
    let sign = if q.is_multiple_of(2) { int(1) } else { int(-1) };
    match dir {
        Direction::Plus => {
            sign * pochhammer(&n, q)
                * pochhammer(&(&n + beta), q)
                * pochhammer(&(&n + alpha), q)
                * pochhammer(&(&n + alpha + beta), q)
        }
        Direction::Minus => {
            let m = -n;
            sign * pochhammer(&(&m - alpha), q)
                * pochhammer(&(&m - alpha + int(2)), q)
                * pochhammer(&(&m - beta), q)
                * pochhammer(&(&m - beta + int(2)), q)
        }
    }
}

/// Scores a printed coefficient pair against the derived one.
/// `MATCH`: equal in the closed-form normalization. `NORMALIZATION`: the
/// basis-invariant product `c+(n) c-(n+q)` agrees. `MISMATCH` otherwise.
pub fn score_pair(
    derived: &[(Rational, Rational)],
    printed: &[(Rational, Rational)],
) -> Verdict {
    if derived == printed {
        return Verdict::Match;
    }
    let inv = |v: &[(Rational, Rational)]| -> Vec<Rational> { v.iter().map(|(a, b)| a * b).collect() };
    if inv(derived) == inv(printed) {
        Verdict::Normalization
    } else {
        Verdict::Mismatch
    }
}
