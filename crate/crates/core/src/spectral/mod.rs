//! Floating-point evaluation of the bound states and numerical checks.

pub mod degeneracy;
pub mod export;
pub mod ladder_check;
pub mod quadrature;
pub mod residual;
pub mod wavefunction;

pub use degeneracy::{degeneracy_table, energy, energy_f64, Level};
pub use ladder_check::{ladder_numeric_check, NumericLadderCheck};
pub use quadrature::{angular_gram, angular_orthogonality, gauss_jacobi};
pub use residual::{fd_residual, schrodinger_residual, schrodinger_residual_with, ResidualOptions};
pub use wavefunction::{wedge_angle, PsiJet, Wavefunction, WedgeGrid};
