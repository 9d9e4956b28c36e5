//! Univariate differential operators `sum_j c_j(x) d^j` with rational-function
//! coefficients, stored with every derivative on the right.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};



use super::ratfunc::{FloatRatFunc, RatFunc};
use crate::poly_core::rational::binomial;
use crate::poly_core::{Poly, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DiffOp {
    coeffs: Vec<RatFunc>,
}

impl DiffOp {
    pub fn from_coeffs(mut coeffs: Vec<RatFunc>) -> Self {
        while coeffs.last().is_some_and(RatFunc::is_zero) {
            coeffs.pop();
        }
        DiffOp { coeffs }
    }

    pub fn zero() -> Self {
        DiffOp { coeffs: Vec::new() }
    }

    pub fn identity() -> Self {
        Self::multiplication(RatFunc::one())
    }

    /// `d/dx`
    pub fn d() -> Self {
        Self::from_coeffs(vec![RatFunc::zero(), RatFunc::one()])
    }

    /// Multiplication by `f`.
    pub fn multiplication(f: RatFunc) -> Self {
        Self::from_coeffs(vec![f])
    }

    pub fn scalar(c: Rational) -> Self {
        Self::multiplication(RatFunc::constant(c))
    }

    /// `a(x) d + c(x)`
    pub fn first_order(a: RatFunc, c: RatFunc) -> Self {
        Self::from_coeffs(vec![c, a])
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> RatFunc {
        self.coeffs.get(j).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero operator.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|f| f.scale(c)).collect())
    }

    /// Left multiplication by a function: `f . A`.
    pub fn left_mul(&self, f: &RatFunc) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| f * c).collect())
    }

    /// `self . rhs` (apply `rhs` first), normal ordered via Leibniz.
    pub fn compose(&self, rhs: &DiffOp) -> DiffOp {
        if self.is_zero() || rhs.is_zero() {
            return DiffOp::zero();
        }
        let top = self.coeffs.len() - 1;
        // derivs[j][l] = l-th derivative of rhs coefficient j
        let derivs: Vec<Vec<RatFunc>> = rhs
            .coeffs
            .iter()
            .map(|b| {
                let mut chain = Vec::with_capacity(top + 1);
                let mut cur = b.clone();
                for l in 0..=top {
                    if l > 0 {
                        cur = cur.derivative();
                    }
                    chain.push(cur.clone());
                }
                chain
            })
            .collect();
        let mut out = vec![RatFunc::zero(); top + rhs.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, chain) in derivs.iter().enumerate() {
                for (l, bl) in chain.iter().enumerate().take(i + 1) {
                    if bl.is_zero() {
                        continue;
                    }
                    let term = (a * bl).scale(&binomial(i, l));
                    let slot = &mut out[i - l + j];
                    *slot = &*slot + &term;
                }
            }
        }
        DiffOp::from_coeffs(out)
    }

    pub fn commutator(&self, rhs: &DiffOp) -> DiffOp {
        &self.compose(rhs) - &rhs.compose(self)
    }

    /// `self^k` under composition.
    pub fn pow(&self, k: usize) -> DiffOp {
        (0..k).fold(DiffOp::identity(), |acc, _| acc.compose(self))
    }

    pub fn apply(&self, f: &RatFunc) -> RatFunc {
        let mut acc = RatFunc::zero();
        let mut deriv = f.clone();
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                deriv = deriv.derivative();
            }
            if !c.is_zero() {
                acc = &acc + &(c * &deriv);
            }
        }
        acc
    }

    pub fn apply_poly(&self, p: &Poly) -> RatFunc {
        self.apply(&RatFunc::from_poly(p.clone()))
    }

    /// `G A G^{-1}`, where `g` carries `(log G)'`. Uses `G d G^{-1} = d - (log G)'`.
    pub fn gauge_conjugate(&self, g: &GaugeLogDeriv) -> DiffOp {
        let shifted = DiffOp::first_order(RatFunc::one(), -&g.logderiv);
        let mut power = DiffOp::identity();
        let mut acc = DiffOp::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                power = shifted.compose(&power);
            }
            if !c.is_zero() {
                acc = &acc + &power.left_mul(c);
            }
        }
        acc
    }

    /// Least common multiple of the coefficient denominators; multiplying an
    /// identity `A u = 0` by it clears every pole.
    pub fn common_denominator(&self) -> Poly {
        self.coeffs.iter().fold(Poly::one(), |acc, c| {
            let g = acc.gcd(c.den());
            (&acc * c.den()).div_rem(&g).0.monic()
        })
    }

    pub fn to_f64(&self) -> Vec<FloatRatFunc> {
        self.coeffs.iter().map(RatFunc::to_f64).collect()
    }
}

/// The logarithmic derivative `(log G)'` of a gauge factor `G`. Only this
/// rational function is ever needed to conjugate by `G`, even when `G` itself
/// has irrational exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeLogDeriv {
    pub logderiv: RatFunc,
}

impl GaugeLogDeriv {
    pub fn new(logderiv: RatFunc) -> Self {
        GaugeLogDeriv { logderiv }
    }

    /// The gauge `G^{-1}`.
    pub fn inverse(&self) -> Self {
        GaugeLogDeriv {
            logderiv: -&self.logderiv,
        }
    }

    /// Gauge of a product `G H`.
    pub fn product(&self, other: &GaugeLogDeriv) -> Self {
        GaugeLogDeriv {
            logderiv: &self.logderiv + &other.logderiv,
        }
    }

    /// `(log G)'` for `G = prod_i (x - r_i)^{e_i}`.
    pub fn from_powers(factors: &[(Rational, Rational)]) -> Self {
        let logderiv = factors.iter().fold(RatFunc::zero(), |acc, (root, e)| {
            &acc + &RatFunc::simple_pole(root).scale(e)
        });
        GaugeLogDeriv { logderiv }
    }

    /// `G^{(j)} / G` for `j = 0..=order`, via `h_{j+1} = h_j' + (log G)' h_j`.
    pub fn derivative_ratios(&self, order: usize) -> Vec<RatFunc> {
        let mut out = vec![RatFunc::one()];
        for _ in 0..order {
            let h = out.last().unwrap();
            let next = &h.derivative() + &(&self.logderiv * h);
            out.push(next);
        }
        out
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "[{c}]")?,
                1 => write!(f, "[{c}] d")?,
                _ => write!(f, "[{c}] d^{j}")?,
            }
        }
        Ok(())
    }
}

impl Add for &DiffOp {
    type Output = DiffOp;
    fn add(self, rhs: &DiffOp) -> DiffOp {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DiffOp::from_coeffs((0..n).map(|j| &self.coeff(j) + &rhs.coeff(j)).collect())
    }
}

impl Sub for &DiffOp {
    type Output = DiffOp;
    fn sub(self, rhs: &DiffOp) -> DiffOp {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DiffOp::from_coeffs((0..n).map(|j| &self.coeff(j) - &rhs.coeff(j)).collect())
    }
}

/// Composition.
impl Mul for &DiffOp {
    type Output = DiffOp;
    fn mul(self, rhs: &DiffOp) -> DiffOp {
        self.compose(rhs)
    }
}

impl Neg for &DiffOp {
    type Output = DiffOp;
    fn neg(self) -> DiffOp {
        self.scale(&-Rational::from_integer(1.into()))
    }
}

impl Add for DiffOp {
    type Output = DiffOp;
    fn add(self, rhs: DiffOp) -> DiffOp {
        &self + &rhs
    }
}

impl Sub for DiffOp {
    type Output = DiffOp;
    fn sub(self, rhs: DiffOp) -> DiffOp {
        &self - &rhs
    }
}

impl Mul for DiffOp {
    type Output = DiffOp;
    fn mul(self, rhs: DiffOp) -> DiffOp {
        self.compose(&rhs)
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly_core::rational::{int, rat};
    use proptest::prelude::*;

    fn x() -> RatFunc {
        RatFunc::from_poly(Poly::x())
    }

    fn poly_rf(c: &[i64]) -> RatFunc {
        RatFunc::from_poly(Poly::from_ints(c))
    }

    #[test]
    fn leibniz_basics() {
        // d . x = x d + 1
        let dx = DiffOp::d().compose(&DiffOp::multiplication(x()));
        assert_eq!(dx, DiffOp::first_order(x(), RatFunc::one()));
        let a = DiffOp::first_order(poly_rf(&[0, 0, 3]), poly_rf(&[1, 1]));
        assert_eq!(a.compose(&DiffOp::identity()), a);
        // (x d)(x d) = x^2 d^2 + x d
        let xd = DiffOp::first_order(x(), RatFunc::zero());
        let sq = xd.compose(&xd);
        assert_eq!(
            sq,
            DiffOp::from_coeffs(vec![RatFunc::zero(), x(), poly_rf(&[0, 0, 1])])
        );
    }

    #[test]
    fn commutators() {
        let d = DiffOp::d();
        let xm = DiffOp::multiplication(x());
        assert_eq!(d.commutator(&xm), DiffOp::identity());
        assert!(d.commutator(&d).is_zero());
        // [x^2 d, d] = -2x d
        let x2d = DiffOp::first_order(poly_rf(&[0, 0, 1]), RatFunc::zero());
        assert_eq!(
            x2d.commutator(&d),
            DiffOp::first_order(poly_rf(&[0, -2]), RatFunc::zero())
        );
    }

    #[test]
    fn gauge_shift_rule() {
        let c = rat(3, 5);
        let g = GaugeLogDeriv::new(RatFunc::constant(c.clone()));
        assert_eq!(
            DiffOp::d().gauge_conjugate(&g),
            DiffOp::first_order(RatFunc::one(), RatFunc::constant(-c))
        );
        let a = DiffOp::first_order(x(), poly_rf(&[2]));
        assert_eq!(a.gauge_conjugate(&GaugeLogDeriv::new(RatFunc::zero())), a);
    }

    #[test]
    fn apply_basics() {
        let f = RatFunc::new(Poly::from_ints(&[1, 1]), Poly::from_ints(&[-3, 1]));
        assert_eq!(DiffOp::identity().apply(&f), f);
        assert_eq!(DiffOp::d().apply(&poly_rf(&[0, 0, 1])), poly_rf(&[0, 2]));
    }

    #[test]
    fn derivative_ratios_of_power() {
        // G = x^{1/2}: G'/G = 1/(2x), G''/G = -1/(4x^2)
        let g = GaugeLogDeriv::from_powers(&[(int(0), rat(1, 2))]);
        let h = g.derivative_ratios(2);
        assert_eq!(h[1], RatFunc::new(Poly::constant(rat(1, 2)), Poly::x()));
        assert_eq!(
            h[2],
            RatFunc::new(Poly::constant(rat(-1, 4)), Poly::monomial(int(1), 2))
        );
    }

    fn arb_rf() -> impl Strategy<Value = RatFunc> {
        (
            prop::collection::vec(-4i64..5, 0..3),
            prop::option::of(-3i64..4),
        )
            .prop_map(|(num, pole)| {
                let n = Poly::from_ints(&num);
                match pole {
                    Some(r) => RatFunc::new(n, Poly::linear_root(&int(r))),
                    None => RatFunc::from_poly(n),
                }
            })
    }

    fn arb_op() -> impl Strategy<Value = DiffOp> {
        prop::collection::vec(arb_rf(), 0..3).prop_map(DiffOp::from_coeffs)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn composition_is_associative(a in arb_op(), b in arb_op(), c in arb_op()) {
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        }

        #[test]
        fn commutator_is_a_derivation(a in arb_op(), b in arb_op(), c in arb_op()) {
            let lhs = a.commutator(&b.compose(&c));
            let rhs = &a.commutator(&b).compose(&c) + &b.compose(&a.commutator(&c));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn composition_matches_application(a in arb_op(), b in arb_op(), f in arb_rf()) {
            prop_assert_eq!(a.compose(&b).apply(&f), a.apply(&b.apply(&f)));
        }

        #[test]
        fn gauge_round_trip_and_homomorphism(a in arb_op(), b in arb_op(), l in arb_rf()) {
            let g = GaugeLogDeriv::new(l);
            let ga = a.gauge_conjugate(&g);
            prop_assert_eq!(ga.gauge_conjugate(&g.inverse()), a.clone());
            let lhs = a.compose(&b).gauge_conjugate(&g);
            let rhs = ga.compose(&b.gauge_conjugate(&g));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
