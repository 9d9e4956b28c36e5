//! Classical limit: the TTW system in the wedge chart, a high-order
//! integrator with drift and wedge guards, and orbit-closure diagnostics.

pub mod closure;
pub mod dynamics;
pub mod export;
pub mod integrator;

pub use closure::{closure_metric, closure_metric_with, convergence_order, min_return_distance, return_distance, ClosureOptions};
pub use dynamics::{h_classical, DEFAULT_STEPS_PER_PERIOD, l1_classical, ClassicalParams, PhaseState};
pub use export::write_trajectory_csv;
pub use integrator::{integrate, integrate_with, IntegratorOptions, Trajectory, INTEGRATOR_ORDER};
