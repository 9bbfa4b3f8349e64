use thiserror::Error;

/// Failures raised by the planning, kinematics and simulation routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("superluminal or negative velocity: beta = {0}")]
    Velocity(f64),

    #[error("velocity saturates double precision (1 - beta underflows)")]
    Saturated,

    #[error("k-factor must be >= 1, got {0}")]
    KFactor(f64),

    #[error("order must be ≥ 1, got {0}")]
    Order(f64),

    #[error("query count must be >= 1")]
    Queries,

    #[error("query time must be positive and finite, got {0}")]
    QueryTime(f64),

    #[error("sub-unit time budget: T = {0} must exceed 1 when order > 1")]
    SubUnitBudget(f64),

    #[error("below rest energy: E/m0c^2 = {0}")]
    BelowRestEnergy(f64),

    #[error("{name} must be non-negative and finite, got {value}")]
    Negative { name: &'static str, value: f64 },

    #[error("proper acceleration must be positive, got {0}")]
    Acceleration(f64),

    #[error("no sign change found for the acceleration residual within {0} doublings")]
    Infeasible(u32),

    #[error("outside weak-field regime: gh/c^2 = {0} >= 0.01")]
    WeakField(f64),

    #[error("integrator configuration: {0}")]
    Integrator(String),
}

pub type Result<T> = std::result::Result<T, Error>;
