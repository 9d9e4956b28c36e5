//! The `A -> -A` structure behind the quantum-number-free integrals.
//!
//! Coefficients of the factor operators `J^q` (in `x`) and `K^p` (in `y`, energy
//! symbolic) are polynomial in `A = 2n - 1 + alpha + beta`. They are recovered by
//! exact interpolation over `n = 1..nmax-1`, confirmed at `n = nmax`, and then
//! tested for the exchange `Xi-(A) = Xi+(-A)`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::angular::{AngularLadders, Direction};
use super::radial::{k_power, Branch, EnergyOp};
use crate::error::{Error, Result};
use crate::operator_algebra::DiffOp;
use crate::params::Params;
use crate::poly_core::{Poly, Rational};

type Key = Vec<usize>;
type Samples = BTreeMap<Key, Vec<Rational>>;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ParityReport {
    pub nmax: usize,
    pub angular_degree: usize,
    pub radial_degree: usize,
    /// `J^q_-` coefficients equal `J^q_+` coefficients at `-A`.
    pub angular_swap: bool,
    /// `K^p_-` coefficients equal `K^p_+` coefficients at `-A`.
    pub radial_swap: bool,
    /// Every coefficient of `Xi+ + Xi-` is even in `A`.
    pub sum_even: bool,
    /// Every coefficient of `(Xi+ - Xi-)/A` is even in `A`.
    pub diff_over_a_even: bool,
    /// Whether `Xi+` alone happens to be even (expected false).
    pub xi_plus_even: bool,
    pub tensor_coefficients: usize,
}

impl ParityReport {
    pub fn passed(&self) -> bool {
        self.angular_swap && self.radial_swap && self.sum_even && self.diff_over_a_even && !self.xi_plus_even
    }
}

fn lcm_dens<'a>(ops: impl Iterator<Item = &'a DiffOp>) -> Poly {
    ops.flat_map(|op| op.coeffs().iter())
        .fold(Poly::one(), |acc, c| {
            let g = acc.gcd(c.den());
            (&acc * c.den()).div_rem(&g).0.monic()
        })
}

/// Flattens `op * den` into `(prefix.., derivative order, power) -> coefficient`.
fn flatten(op: &DiffOp, den: &Poly, prefix: &[usize], out: &mut BTreeMap<Key, Rational>) {
    for (j, c) in op.coeffs().iter().enumerate() {
        let poly = (c.num() * den).exact_div(c.den()).expect("common denominator");
        for (k, v) in poly.coeffs().iter().enumerate() {
            if !v.is_zero() {
                let mut key = prefix.to_vec();
                key.extend([j, k]);
                out.insert(key, v.clone());
            }
        }
    }
}

fn push_sample(samples: &mut Samples, flat: BTreeMap<Key, Rational>, idx: usize, total: usize) {
    for (key, v) in flat {
        samples.entry(key).or_insert_with(|| vec![Rational::zero(); total])[idx] = v;
    }
}

/// Interpolates each sampled coefficient in `A`; the last sample is held out.
fn interpolate(samples: &Samples, nodes: &[Rational]) -> Result<BTreeMap<Key, Poly>> {
    let fit = nodes.len() - 1;
    let mut out = BTreeMap::new();
    for (key, vals) in samples {
        let pts: Vec<_> = nodes[..fit].iter().cloned().zip(vals[..fit].iter().cloned()).collect();
        let poly = Poly::interpolate(&pts);
        if poly.eval(&nodes[fit]) != vals[fit] {
            return Err(Error::InterpolationDegree { max_degree: fit });
        }
        out.insert(key.clone(), poly);
    }
    Ok(out)
}

fn max_degree(m: &BTreeMap<Key, Poly>) -> usize {
    m.values().filter_map(Poly::degree).max().unwrap_or(0)
}

fn swapped(plus: &BTreeMap<Key, Poly>, minus: &BTreeMap<Key, Poly>) -> bool {
    let zero = Poly::zero();
    plus.keys()
        .chain(minus.keys())
        .all(|k| minus.get(k).unwrap_or(&zero) == &plus.get(k).unwrap_or(&zero).reflect())
}

fn parity_of(p: &Poly, odd: bool) -> bool {
    p.coeffs()
        .iter()
        .enumerate()
        .all(|(i, c)| (i % 2 == 1) == odd || c.is_zero())
}

fn energy_flat(e: &EnergyOp, den: &Poly) -> BTreeMap<Key, Rational> {
    let mut out = BTreeMap::new();
    for (i, t) in e.terms().iter().enumerate() {
        flatten(t, den, &[i], &mut out);
    }
    out
}

/// Runs the parity analysis for `n = 1..=nmax`.
pub fn parity_check(nmax: usize, params: &Params) -> Result<ParityReport> {
    let q = params.q() as usize;
    let p = params.p() as usize;
    if nmax < q + 1 || nmax < 3 {
        return Err(Error::InvalidParams(format!("parity check needs nmax >= max(q + 1, 3), got {nmax}")));
    }
    let ladders = AngularLadders::new(params.alpha(), params.beta())?;
    let nodes: Vec<Rational> = (1..=nmax as i64).map(|n| params.a_n(n)).collect();

    let jp: Vec<DiffOp> = (1..=nmax as i64).map(|n| ladders.j_power(Direction::Plus, n, q)).collect();
    let jm: Vec<DiffOp> = (1..=nmax as i64).map(|n| ladders.j_power(Direction::Minus, n, q)).collect();
    let dx = lcm_dens(jp.iter().chain(jm.iter()));

    let k = params.k();
    let kp: Vec<EnergyOp> = nodes.iter().map(|a| k_power(Branch::Plus, &(&k * a), p)).collect();
    let km: Vec<EnergyOp> = nodes.iter().map(|a| k_power(Branch::Minus, &(&k * a), p)).collect();
    let dy = lcm_dens(kp.iter().chain(km.iter()).flat_map(|e| e.terms().iter()));

    let (mut sjp, mut sjm, mut skp, mut skm) = (Samples::new(), Samples::new(), Samples::new(), Samples::new());
    for i in 0..nmax {
        let mut f = BTreeMap::new();
        flatten(&jp[i], &dx, &[], &mut f);
        push_sample(&mut sjp, f, i, nmax);
        let mut f = BTreeMap::new();
        flatten(&jm[i], &dx, &[], &mut f);
        push_sample(&mut sjm, f, i, nmax);
        push_sample(&mut skp, energy_flat(&kp[i], &dy), i, nmax);
        push_sample(&mut skm, energy_flat(&km[i], &dy), i, nmax);
    }
    let (pjp, pjm) = (interpolate(&sjp, &nodes)?, interpolate(&sjm, &nodes)?);
    let (pkp, pkm) = (interpolate(&skp, &nodes)?, interpolate(&skm, &nodes)?);

    let zero = Poly::zero();
    let ang_keys: Vec<&Key> = pjp.keys().chain(pjm.keys().filter(|k| !pjp.contains_key(*k))).collect();
    let rad_keys: Vec<&Key> = pkp.keys().chain(pkm.keys().filter(|k| !pkp.contains_key(*k))).collect();
    let (mut sum_even, mut diff_odd, mut plus_even) = (true, true, true);
    let mut count = 0;
    for ka in &ang_keys {
        for kr in &rad_keys {
            let plus = pjp.get(*ka).unwrap_or(&zero) * pkp.get(*kr).unwrap_or(&zero);
            let minus = pjm.get(*ka).unwrap_or(&zero) * pkm.get(*kr).unwrap_or(&zero);
            if plus.is_zero() && minus.is_zero() {
                continue;
            }
            count += 1;
            sum_even &= parity_of(&(&plus + &minus), false);
            diff_odd &= parity_of(&(&plus - &minus), true);
            plus_even &= parity_of(&plus, false);
        }
    }
    Ok(ParityReport {
        nmax,
        angular_degree: max_degree(&pjp).max(max_degree(&pjm)),
        radial_degree: max_degree(&pkp).max(max_degree(&pkm)),
        angular_swap: swapped(&pjp, &pjm),
        radial_swap: swapped(&pkp, &pkm),
        sum_even,
        diff_over_a_even: diff_odd,
        xi_plus_even: plus_even,
        tensor_coefficients: count,
    })
}
