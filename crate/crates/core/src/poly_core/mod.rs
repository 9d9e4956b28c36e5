//! Exact scalars, polynomials and the orthogonal polynomial families.

pub mod families;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod xjacobi;

pub use families::{jacobi_at_one, jacobi_poly, laguerre_poly};
pub use poly::Poly;
pub use rational::{format_rational, parse_rational, pochhammer, Rational};
pub use xjacobi::{
    reconcile_report, reconcile_xjacobi, xjacobi_eigen, xjacobi_eigen_printed_operator,
    xjacobi_printed, XJacobiComparison,
};
