//! Relativistic time dilation as a computational resource.
//!
//! A black-box computation needs `N` queries of `Δt` each. Leave it running
//! in an inertial frame, travel, and come back: if your own clock has
//! advanced only `(Δt·N)^(1/n)`, you have an `n`-th root reduction in
//! runtime. This crate plans such journeys and accounts for what they cost.
//!
//! - [`kinematics`]: velocity, Lorentz factor, rapidity, Bondi k-factor.
//! - [`inertial`]: constant-velocity planning, energy, 4-momentum.
//! - [`accel`]: constant proper acceleration, the four-leg itinerary and
//!   photon-rocket fuel.
//! - [`worldline`]: an RK4 worldline integrator used as an oracle for the
//!   closed forms.
//! - [`scenarios`]: the race against quadratic quantum search, the collider
//!   example, parameter sweeps.
//! - [`cli`]: the `relspeed` command line.
//!
//! Everything is computed with `c = 1` and `Δt = 1` unless stated otherwise.
//!
//! ```
//! use relspeed::{plan_inertial, ComputationSpec};
//!
//! let plan = plan_inertial(ComputationSpec::new(100, 2.0)?, 1.0)?;
//! assert!((plan.proper_time - 10.0).abs() < 1e-12);
//! assert!((plan.energy_ratio - 10.0).abs() < 1e-12);
//! # Ok::<(), relspeed::Error>(())
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod accel;
pub mod cli;
pub mod error;
pub mod inertial;
pub mod kinematics;
pub mod roots;
pub mod scenarios;
pub mod units;
pub mod worldline;

pub use error::{Error, Result};
pub use inertial::{plan_inertial, ComputationSpec, InertialPlan};
pub use kinematics::{kinematic_state, Beta, KinematicState};
