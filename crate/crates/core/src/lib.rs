//! Exact and numerical toolkit for a two-dimensional superintegrable
//! Hamiltonian whose angular eigenfunctions are X1 exceptional Jacobi
//! polynomials and whose radial eigenfunctions are Laguerre polynomials.

pub mod classical;
pub mod error;
pub mod ladders;
pub mod operator_algebra;
pub mod params;
pub mod poly_core;
pub mod report;
pub mod spectral;

pub use error::{Error, Result};
pub use operator_algebra::{DiffOp, GaugeLogDeriv, RatFunc};
pub use params::{param_b, param_c, Params, QuantumState};
pub use poly_core::{Poly, Rational};
pub use report::{CheckLine, Report, Verdict};
