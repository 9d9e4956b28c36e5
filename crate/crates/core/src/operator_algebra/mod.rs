//! Exact differential-operator algebra over rational-function coefficients.

pub mod angular;
pub mod diffop;
pub mod eigen;
pub mod radial;
pub mod ratfunc;

pub use angular::{
    angular_hamiltonian, angular_kinetic, angular_potential, build_t, build_t_printed, eigenvalue,
    gauge_x, PotentialForm,
};
pub use diffop::{DiffOp, GaugeLogDeriv};
pub use eigen::{cleared_residual, eigenpolynomial};
pub use radial::{gauge_y, radial_hamiltonian, radial_operator, radial_operator_printed};
pub use ratfunc::{FloatRatFunc, RatFunc};
