//! Energy-preserving composites `Xi+ = K^p_{+} J^q_{+}` and `Xi- = K^p_{-} J^q_{-}`.

use serde::Serialize;

use super::angular::{AngularLadders, Direction};
use super::radial::{k_action, Branch, RadialImage};
use crate::error::{Error, Result};
use crate::params::{Params, QuantumState};
use crate::poly_core::Rational;

/// `Xi Psi_source = coefficient * Psi_target` (monic `Phat`, standard Laguerre).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LadderAction {
    pub source: QuantumState,
    pub target: QuantumState,
    #[serde(serialize_with = "ser_rational")]
    pub coefficient: Rational,
    /// Angular factor `J^q`.
    #[serde(serialize_with = "ser_rational")]
    pub angular: Rational,
    /// Radial factor `K^p`.
    #[serde(serialize_with = "ser_rational")]
    pub radial: Rational,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn branch(dir: Direction) -> Branch {
    match dir {
        Direction::Plus => Branch::Plus,
        Direction::Minus => Branch::Minus,
    }
}

/// Checks the lattice preconditions and returns the target state.
pub fn xi_target(dir: Direction, state: &QuantumState, params: &Params) -> Result<QuantumState> {
    let (p, q) = (params.p(), params.q());
    match dir {
        Direction::Plus if state.m < p => Err(Error::OutOfFamily(format!(
            "Xi+ needs m >= p = {p}, got m = {}",
            state.m
        ))),
        Direction::Plus => QuantumState::new(state.m - p, state.n + q),
        Direction::Minus if state.n < q + 1 => Err(Error::OutOfFamily(format!(
            "Xi- needs n >= q + 1 = {}, got n = {}",
            q + 1,
            state.n
        ))),
        Direction::Minus => QuantumState::new(state.m + p, state.n - q),
    }
}

/// Exact action of `Xi+/-` on `Psi_{m,n}`; the target has exactly the same energy.
pub fn xi_action(dir: Direction, state: &QuantumState, params: &Params) -> Result<LadderAction> {
    let ladders = AngularLadders::new(params.alpha(), params.beta())?;
    xi_action_with(&ladders, dir, state, params)
}

/// [`xi_action`] reusing prebuilt intertwiners.
pub fn xi_action_with(
    ladders: &AngularLadders,
    dir: Direction,
    state: &QuantumState,
    params: &Params,
) -> Result<LadderAction> {
    let target = xi_target(dir, state, params)?;
    let e0 = state.energy_over_omega(params);
    let e1 = target.energy_over_omega(params);
    if e0 != e1 {
        return Err(Error::VerificationFailure(format!(
            "Xi target {target} has energy {e1}, source {state} has {e0}"
        )));
    }
    let angular = ladders.action(dir, state.n as usize, params.q() as usize)?;
    let ell = state.ell(params);
    let radial = match k_action(branch(dir), state.m as usize, &ell, params.p() as usize)? {
        RadialImage::Basis { m, coefficient, .. } if m == target.m as usize => coefficient,
        other => {
            return Err(Error::VerificationFailure(format!(
                "radial ladder image {other:?} does not match target {target}"
            )))
        }
    };
    Ok(LadderAction {
        source: *state,
        target,
        coefficient: &angular * &radial,
        angular,
        radial,
    })
}

/// `(A_target^2 - A_source^2) * coefficient`: the action of `[A^2, Xi]` on the
/// basis, where `A^2` is the separation constant diagonalized by `L1`.
pub fn l1_noncommutation(dir: Direction, state: &QuantumState, params: &Params) -> Result<Rational> {
    let act = xi_action(dir, state, params)?;
    let a0 = state.a_n(params);
    let a1 = act.target.a_n(params);
    Ok((&a1 * &a1 - &a0 * &a0) * act.coefficient)
}
