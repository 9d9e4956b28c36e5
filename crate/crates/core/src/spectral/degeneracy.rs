//! Exact spectrum and degeneracy structure.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::params::{Params, QuantumState};
use crate::poly_core::rational::{int, to_f64};
use crate::poly_core::Rational;

/// `E_{m,n} / omega = 2m + k(2n + alpha + beta - 1) + 1`, exact.
pub fn energy(state: &QuantumState, params: &Params) -> Rational {
    state.energy_over_omega(params)
}

/// `E_{m,n}` in absolute units.
pub fn energy_f64(state: &QuantumState, params: &Params) -> f64 {
    params.omega() * to_f64(&energy(state, params))
}

/// One energy level and its states, sorted by increasing `n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Level {
    #[serde(serialize_with = "ser")]
    pub energy_over_omega: Rational,
    pub states: Vec<QuantumState>,
}

fn ser<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl Level {
    /// Consecutive states differ by `(m, n) -> (m - p, n + q)`.
    pub fn is_chain(&self, p: u32, q: u32) -> bool {
        self.states
            .windows(2)
            .all(|w| w[0].m >= p && w[1].m == w[0].m - p && w[1].n == w[0].n + q)
    }
}

/// All states with `E / omega <= emax_over_omega`, bucketed by exact energy.
pub fn degeneracy_table(emax_over_omega: &Rational, params: &Params) -> Vec<Level> {
    let mut levels: BTreeMap<Rational, Vec<QuantumState>> = BTreeMap::new();
    let k = params.k();
    for n in 1u32.. {
        let base = &k * params.a_n(n as i64) + int(1);
        if &base > emax_over_omega {
            break;
        }
        // 2m <= emax - base
        let room = (emax_over_omega - &base) / int(2);
        let mmax = room.floor().to_integer();
        let mmax: u32 = mmax.try_into().unwrap_or(0);
        for m in 0..=mmax {
            let st = QuantumState { m, n };
            let e = energy(&st, params);
            debug_assert!(!(&e - emax_over_omega > Rational::zero()));
            levels.entry(e).or_default().push(st);
        }
    }
    levels
        .into_iter()
        .map(|(energy_over_omega, mut states)| {
            states.sort_by_key(|s| s.n);
            Level {
                energy_over_omega,
                states,
            }
        })
        .collect()
}
