//! Ladder operators, their verified actions, and the energy-preserving composites.

pub mod angular;
pub mod intertwiners;
pub mod jacobi;
pub mod parity;
pub mod radial;
pub mod report;
pub mod xi;

pub use angular::{AngularLadders, Direction};
pub use parity::{parity_check, ParityReport};
pub use jacobi::{build_jacobi_ladder, Step, VerifiedLadder};
pub use radial::{k_action, k_power, printed_k_plus_on_ground, Branch, EnergyOp, PrintedKTest, RadialImage};
pub use report::ladder_report;
pub use xi::{l1_noncommutation, xi_action, xi_target, LadderAction};
