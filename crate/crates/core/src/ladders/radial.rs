//! Radial ladder operators `K` acting on `Y_m^l = y^{l/2} e^{-y/2} L_m^l(y)`.

use std::ops::Add;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::operator_algebra::{gauge_y, DiffOp, RatFunc};
use crate::poly_core::rational::{int, rat};
use crate::poly_core::{laguerre_poly, pochhammer, Poly, Rational};

/// An operator polynomial in the scaled energy `e = E / omega`:
/// `sum_i e^i terms[i]`. The energy is a scalar, so it commutes with everything.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EnergyOp {
    terms: Vec<DiffOp>,
}

impl EnergyOp {
    pub fn new(mut terms: Vec<DiffOp>) -> Self {
        while terms.last().is_some_and(DiffOp::is_zero) {
            terms.pop();
        }
        EnergyOp { terms }
    }

    pub fn identity() -> Self {
        Self::new(vec![DiffOp::identity()])
    }

    pub fn terms(&self) -> &[DiffOp] {
        &self.terms
    }

    /// `self . rhs`
    pub fn compose(&self, rhs: &EnergyOp) -> EnergyOp {
        if self.terms.is_empty() || rhs.terms.is_empty() {
            return EnergyOp::default();
        }
        let mut out = vec![DiffOp::zero(); self.terms.len() + rhs.terms.len() - 1];
        for (i, a) in self.terms.iter().enumerate() {
            for (j, b) in rhs.terms.iter().enumerate() {
                out[i + j] = &out[i + j] + &a.compose(b);
            }
        }
        EnergyOp::new(out)
    }

    /// Substitutes a numeric energy.
    pub fn at(&self, e: &Rational) -> DiffOp {
        let mut acc = DiffOp::zero();
        let mut pw = Rational::one();
        for t in &self.terms {
            acc = &acc + &t.scale(&pw);
            pw *= e;
        }
        acc
    }
}

impl Add for &EnergyOp {
    type Output = EnergyOp;
    fn add(self, rhs: &EnergyOp) -> EnergyOp {
        let n = self.terms.len().max(rhs.terms.len());
        let get = |v: &[DiffOp], i: usize| v.get(i).cloned().unwrap_or_else(DiffOp::zero);
        EnergyOp::new((0..n).map(|i| &get(&self.terms, i) + &get(&rhs.terms, i)).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// `K_{+l}`: `m -> m - 1`, `l -> l + 2`.
    Plus,
    /// `K_{-l}`: `m -> m + 1`, `l -> l - 2`.
    Minus,
}

impl Branch {
    fn sign(self) -> Rational {
        match self {
            Branch::Plus => int(1),
            Branch::Minus => int(-1),
        }
    }
}

fn y_pole(c: Rational) -> RatFunc {
    RatFunc::new(Poly::constant(c), Poly::x())
}

/// Derived `K_s = (1+s) d_y - s(1+s)/(2y) + e/2` with `s = +/- l`.
pub fn k_derived(s: &Rational) -> EnergyOp {
    let one = Rational::one();
    let d0 = DiffOp::first_order(
        RatFunc::constant(&one + s),
        y_pole(-(s * (&one + s)) / int(2)),
    );
    EnergyOp::new(vec![d0, DiffOp::scalar(rat(1, 2))])
}

/// Printed `K_{+/-l} = (1 +/- l) d_y - E/(4 omega) -/+ l(1+l)/(2y)`.
pub fn k_printed(branch: Branch, ell: &Rational) -> EnergyOp {
    let one = Rational::one();
    let s = branch.sign() * ell;
    let d0 = DiffOp::first_order(
        RatFunc::constant(&one + &s),
        y_pole(-(&s * (&one + ell)) / int(2)),
    );
    EnergyOp::new(vec![d0, DiffOp::scalar(rat(-1, 4))])
}

/// `K^p`: `p` factors with `l` shifted by `+/-2` each step; `e` stays fixed.
pub fn k_power(branch: Branch, ell: &Rational, p: usize) -> EnergyOp {
    (0..p).fold(EnergyOp::identity(), |acc, i| {
        let step = int(2 * i as i64);
        let s = match branch {
            Branch::Plus => ell + step,
            Branch::Minus => -(ell - step),
        };
        k_derived(&s).compose(&acc)
    })
}

/// `E / omega = 2m + l + 1`.
pub fn quantized_energy(m: usize, ell: &Rational) -> Rational {
    int(2 * m as i64 + 1) + ell
}

/// Applies a `Y`-picture operator to `Y_m^l` and divides out `G_y^l`.
fn stripped_image(op: &DiffOp, m: usize, ell: &Rational) -> RatFunc {
    op.gauge_conjugate(&gauge_y(ell).inverse())
        .apply_poly(&laguerre_poly(m, ell))
}

/// `Y_{m'}^{l'} / G_y^l = y^{(l'-l)/2} L_{m'}^{l'}` for integer `(l'-l)/2`.
fn stripped_target(m: usize, ell: &Rational, shift: i64) -> RatFunc {
    let ell2 = ell + int(2 * shift);
    let l = RatFunc::from_poly(laguerre_poly(m, &ell2));
    let ypow = RatFunc::from_poly(Poly::monomial(Rational::one(), shift.unsigned_abs() as usize));
    if shift >= 0 {
        &l * &ypow
    } else {
        &l / &ypow
    }
}

/// Outcome of applying a radial ladder to a basis function.
#[derive(Clone, Debug, PartialEq)]
pub enum RadialImage {
    /// `op Y_m^l = coefficient * Y_{m'}^{l'}`.
    Basis { m: usize, ell: Rational, coefficient: Rational },
    /// The ladder walked off the bottom of the lattice.
    Annihilated,
}

/// Exact action of `K^p` at the quantized energy of `(m, l)`.
pub fn k_action(branch: Branch, m: usize, ell: &Rational, p: usize) -> Result<RadialImage> {
    let e = quantized_energy(m, ell);
    let op = k_power(branch, ell, p).at(&e);
    let img = stripped_image(&op, m, ell);
    let (m2, shift) = match branch {
        Branch::Plus if m < p => {
            return if img.is_zero() {
                Ok(RadialImage::Annihilated)
            } else {
                Err(Error::VerificationFailure(format!(
                    "K+^{p} does not annihilate m = {m}"
                )))
            };
        }
        Branch::Plus => (m - p, p as i64),
        Branch::Minus => (m + p, -(p as i64)),
    };
    let target = stripped_target(m2, ell, shift);
    let coefficient = target.proportionality(&img).ok_or_else(|| {
        Error::VerificationFailure(format!(
            "K^{p} ({branch:?}) does not map Y_{m}^{ell} to Y_{m2}"
        ))
    })?;
    Ok(RadialImage::Basis {
        m: m2,
        ell: ell + int(2 * shift),
        coefficient,
    })
}

/// Derived single-step coefficients: `-1` (plus) and `-(m+1)(m+l)` (minus).
pub fn k_coefficient(branch: Branch, m: usize, ell: &Rational) -> Rational {
    match branch {
        Branch::Plus => int(-1),
        Branch::Minus => -(int(m as i64 + 1) * (int(m as i64) + ell)),
    }
}

/// The p-fold pattern: `(-1)^p` (plus), `(-1)^p (m+1)_p (l+m-p+1)_p` (minus).
pub fn recur_k_printed(branch: Branch, m: usize, ell: &Rational, p: usize) -> Rational {
    let sign = if p.is_multiple_of(2) { int(1) } else { int(-1) };
    match branch {
        Branch::Plus => sign,
        Branch::Minus => {
            sign * pochhammer(&int(m as i64 + 1), p)
                * pochhammer(&(ell + int(m as i64 - p as i64 + 1)), p)
        }
    }
}

/// Product of single-step coefficients along the p-fold path.
pub fn k_stepwise_product(branch: Branch, m: usize, ell: &Rational, p: usize) -> Option<Rational> {
    let mut acc = Rational::one();
    let (mut mm, mut ll) = (m as i64, ell.clone());
    for _ in 0..p {
        if mm < 0 {
            return None;
        }
        acc *= k_coefficient(branch, mm as usize, &ll);
        match branch {
            Branch::Plus => {
                if mm == 0 {
                    return None;
                }
                mm -= 1;
                ll += int(2);
            }
            Branch::Minus => {
                mm += 1;
                ll -= int(2);
            }
        }
    }
    Some(acc)
}

/// Result of testing the printed `K+` on the bottom state `Y_0^l`.
#[derive(Clone, Debug, PartialEq)]
pub struct PrintedKTest {
    /// `K+ Y_0 = c Y_0` with `E = 2 omega (2m + l + 1)` (the ladder section's convention).
    pub ladder_convention: Rational,
    /// Same with `E = omega (2m + l + 1)` (the spectrum's convention).
    pub spectrum_convention: Rational,
}

/// Applies the printed `K+` to `Y_0^l` under both energy conventions.
pub fn printed_k_plus_on_ground(ell: &Rational) -> Result<PrintedKTest> {
    let op = k_printed(Branch::Plus, ell);
    let e = quantized_energy(0, ell);
    let l0 = RatFunc::one();
    let coeff = |energy: Rational| -> Result<Rational> {
        let img = stripped_image(&op.at(&energy), 0, ell);
        if img.is_zero() {
            return Ok(Rational::zero());
        }
        l0.proportionality(&img).ok_or_else(|| {
            Error::VerificationFailure("printed K+ image of Y_0 is not a multiple of Y_0".into())
        })
    };
    Ok(PrintedKTest {
        ladder_convention: coeff(int(2) * &e)?,
        spectrum_convention: coeff(e)?,
    })
}

/// `A -> -A` sends `K^p_{+kA}` to `K^p_{-kA}`: the plus-branch factors evaluated
/// at `-l` are exactly the minus-branch factors.
pub fn k_reflection_holds(ell: &Rational, p: usize) -> bool {
    let neg = -ell.clone();
    k_power(Branch::Plus, &neg, p) == k_power(Branch::Minus, ell, p)
}
