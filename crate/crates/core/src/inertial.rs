//! Constant-velocity planning.
//!
//! A computation of `N` queries, each taking `Δt`, occupies `W = Δt·N` time
//! units in the inertial frame. A traveller who wants the answer after
//! `T = W^(1/n)` of their own time has to move with `γ = T^(n-1)`. Everything
//! here is evaluated through logarithms so that `N = 1e12` and beyond stays
//! finite.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kinematics::{kinematic_state, Beta, KinematicState};

/// The workload: query count, time per query, and the sought reduction order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComputationSpec {
    pub queries: u64,
    pub query_time: f64,
    pub order: f64,
}

impl ComputationSpec {
    /// Unit query time, validated.
    pub fn new(queries: u64, order: f64) -> Result<Self> {
        Self::with_query_time(queries, 1.0, order)
    }

    pub fn with_query_time(queries: u64, query_time: f64, order: f64) -> Result<Self> {
        let spec = ComputationSpec {
            queries,
            query_time,
            order,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.queries == 0 {
            return Err(Error::Queries);
        }
        if !(self.query_time > 0.0) || self.query_time.is_infinite() {
            return Err(Error::QueryTime(self.query_time));
        }
        check_order(self.order)?;
        if self.order > 1.0 && self.workload() <= 1.0 {
            return Err(Error::SubUnitBudget(self.proper_time()));
        }
        Ok(())
    }

    /// Inertial-frame runtime `Δt·N`.
    pub fn workload(&self) -> f64 {
        self.query_time * self.queries as f64
    }

    /// Traveller's runtime `T = (Δt·N)^(1/n)`.
    pub fn proper_time(&self) -> f64 {
        if self.order == 1.0 {
            self.workload()
        } else {
            self.workload().powf(self.order.recip())
        }
    }

    fn ln_gamma(&self) -> f64 {
        self.workload().ln() * (1.0 - 1.0 / self.order)
    }
}

fn check_order(order: f64) -> Result<()> {
    if order >= 1.0 && order.is_finite() {
        Ok(())
    } else {
        Err(Error::Order(order))
    }
}

/// `T > 1` is needed wherever `ln T` appears in a denominator.
fn check_budget(proper_time: f64) -> Result<()> {
    if proper_time > 1.0 && proper_time.is_finite() {
        Ok(())
    } else {
        Err(Error::SubUnitBudget(proper_time))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InertialPlan {
    pub spec: ComputationSpec,
    /// Traveller's elapsed time `T`.
    pub proper_time: f64,
    /// Inertial-frame elapsed time `Tⁿ = Δt·N`.
    pub coordinate_time: f64,
    pub state: KinematicState,
    /// `β·Tⁿ`, the path length covered in the inertial frame.
    pub distance: f64,
    /// Displacement at the turnaround event, `distance / 2`.
    pub turnaround_distance: f64,
    /// `(1 - β)·Tⁿ`: how far light outruns the traveller. Stays positive even
    /// when `distance` rounds to `coordinate_time`.
    pub light_lag: f64,
    /// `E / m₀c²`.
    pub energy_ratio: f64,
    pub rest_mass: f64,
}

impl InertialPlan {
    /// Energy in units of `rest_mass · c²` for the caller's `c`.
    pub fn energy(&self, c: f64) -> f64 {
        self.energy_ratio * self.rest_mass * c * c
    }
}

/// 4-momentum in units of `m₀c`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FourMomentum {
    pub components: [f64; 4],
    /// `E/c - |p|`, kept separately because it cancels catastrophically
    /// when formed from rounded components at large `γ`.
    pub lightcone_minus: f64,
}

impl FourMomentum {
    /// `(E/c)² - |p|²`, evaluated as `(E/c - p)(E/c + p)`.
    pub fn minkowski_norm(&self) -> f64 {
        let [e, p, _, _] = self.components;
        self.lightcone_minus * (e + p)
    }
}

/// Speed needed for `γ = T^(n-1)`.
pub fn beta_required(proper_time: f64, order: f64) -> Result<Beta> {
    check_order(order)?;
    if order == 1.0 {
        if proper_time >= 1.0 && proper_time.is_finite() {
            return Ok(Beta::ZERO);
        }
        return Err(Error::SubUnitBudget(proper_time));
    }
    check_budget(proper_time)?;
    Beta::from_ln_gamma((order - 1.0) * proper_time.ln())
}

pub fn plan_inertial(spec: ComputationSpec, rest_mass: f64) -> Result<InertialPlan> {
    spec.validate()?;
    if !(rest_mass > 0.0) || rest_mass.is_infinite() {
        return Err(Error::Negative {
            name: "rest mass",
            value: rest_mass,
        });
    }
    let workload = spec.workload();
    let beta = Beta::from_ln_gamma(spec.ln_gamma())?;
    let state = kinematic_state(beta);
    let distance = beta.value() * workload;
    Ok(InertialPlan {
        spec,
        proper_time: spec.proper_time(),
        coordinate_time: workload,
        state,
        distance,
        turnaround_distance: 0.5 * distance,
        light_lag: beta.gap() * workload,
        energy_ratio: state.gamma,
        rest_mass,
    })
}

/// `n = 1 + ln(k/2 + 1/(2k)) / ln T`.
pub fn order_from_k(k: f64, proper_time: f64) -> Result<f64> {
    if !(k >= 1.0) || k.is_infinite() {
        return Err(Error::KFactor(k));
    }
    check_budget(proper_time)?;
    // k/2 + 1/(2k) = 1 + (k-1)²/(2k)
    let excess = (k - 1.0) * (k - 1.0) / (2.0 * k);
    Ok(1.0 + excess.ln_1p() / proper_time.ln())
}

/// `k = T^(n-1) (1 + √(1 - T^(2-2n)))`.
pub fn k_from_order(order: f64, proper_time: f64) -> Result<f64> {
    check_order(order)?;
    check_budget(proper_time)?;
    let ln_gamma = (order - 1.0) * proper_time.ln();
    let beta = (-(-2.0 * ln_gamma).exp_m1()).sqrt();
    Ok(ln_gamma.exp() * (1.0 + beta))
}

/// Velocity-free form `n = 1 + ln(1 + d²/T²) / ln(T²)`, with `c = 1`.
pub fn order_from_distance(distance: f64, proper_time: f64) -> Result<f64> {
    if !(distance >= 0.0) || distance.is_infinite() {
        return Err(Error::Negative {
            name: "distance",
            value: distance,
        });
    }
    check_budget(proper_time)?;
    let r = distance / proper_time;
    let ln_1p_r2 = if r > 1.0 {
        2.0 * r.ln() + (1.0 / (r * r)).ln_1p()
    } else {
        (r * r).ln_1p()
    };
    Ok(1.0 + ln_1p_r2 / (2.0 * proper_time.ln()))
}

/// `n = 1 + ln(E/m₀c²) / ln T`.
pub fn order_from_energy(energy_ratio: f64, proper_time: f64) -> Result<f64> {
    if !(energy_ratio >= 1.0) || energy_ratio.is_infinite() {
        return Err(Error::BelowRestEnergy(energy_ratio));
    }
    check_budget(proper_time)?;
    Ok(1.0 + energy_ratio.ln() / proper_time.ln())
}

/// `E/m₀c² = (Δt·N)^(1 - 1/n)`.
pub fn energy_required(spec: &ComputationSpec) -> Result<f64> {
    spec.validate()?;
    Ok(spec.ln_gamma().exp())
}

pub fn four_momentum(plan: &InertialPlan) -> FourMomentum {
    let KinematicState { beta, gamma, .. } = plan.state;
    FourMomentum {
        components: [gamma, gamma * beta.value(), 0.0, 0.0],
        lightcone_minus: gamma * beta.gap(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn plan(n: u64, order: f64) -> InertialPlan {
        plan_inertial(ComputationSpec::new(n, order).unwrap(), 1.0).unwrap()
    }

    #[test]
    fn beta_required_examples() {
        assert_eq!(beta_required(7.0, 1.0).unwrap(), Beta::ZERO);
        assert_relative_eq!(
            beta_required(10.0, 2.0).unwrap().value(),
            0.994_987_437_106_62,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            beta_required(10.0, 3.0).unwrap().value(),
            0.999_949_998_749_937_5,
            max_relative = 1e-14
        );
    }

    #[test]
    fn beta_required_rejects_small_budget() {
        assert_eq!(beta_required(1.0, 2.0), Err(Error::SubUnitBudget(1.0)));
        assert_eq!(beta_required(0.5, 2.0), Err(Error::SubUnitBudget(0.5)));
        assert_eq!(beta_required(5.0, 0.5), Err(Error::Order(0.5)));
    }

    #[test]
    fn hundred_queries_square_root() {
        let p = plan(100, 2.0);
        assert_relative_eq!(p.proper_time, 10.0, max_relative = 1e-14);
        assert_eq!(p.coordinate_time, 100.0);
        assert_relative_eq!(p.state.gamma, 10.0, max_relative = 1e-14);
        assert_relative_eq!(p.energy_ratio, 10.0, max_relative = 1e-14);
        assert_relative_eq!(p.distance, 99.498_743_710_662, max_relative = 1e-13);
        assert_relative_eq!(p.state.k, 19.949_874_371_066_2, max_relative = 1e-13);
    }

    #[test]
    fn classical_plan_does_not_move() {
        let p = plan(1000, 1.0);
        assert_eq!(p.state.beta.value(), 0.0);
        assert_eq!(p.energy_ratio, 1.0);
        assert_eq!(p.distance, 0.0);
        assert_relative_eq!(p.proper_time, 1000.0, max_relative = 1e-15);
    }

    #[test]
    fn million_queries_costs_thousand_rest_energies() {
        assert_relative_eq!(
            plan(1_000_000, 2.0).energy_ratio,
            1000.0,
            max_relative = 1e-12
        );
        let e = energy_required(&ComputationSpec::new(1_000_000, 2.0).unwrap()).unwrap();
        assert_relative_eq!(e, 1000.0, max_relative = 1e-12);
    }

    #[test]
    fn energy_required_examples() {
        assert_eq!(
            energy_required(&ComputationSpec::new(12345, 1.0).unwrap()).unwrap(),
            1.0
        );
        let e = energy_required(&ComputationSpec::new(100, 2.0).unwrap()).unwrap();
        assert_relative_eq!(e, 10.0, max_relative = 1e-14);
    }

    #[test]
    fn spec_validation() {
        assert_eq!(ComputationSpec::new(0, 2.0), Err(Error::Queries));
        assert_eq!(ComputationSpec::new(100, 0.5), Err(Error::Order(0.5)));
        assert!(matches!(
            ComputationSpec::new(1, 2.0),
            Err(Error::SubUnitBudget(_))
        ));
        assert!(ComputationSpec::new(1, 1.0).is_ok());
        assert!(matches!(
            ComputationSpec::with_query_time(10, -1.0, 2.0),
            Err(Error::QueryTime(_))
        ));
        assert!(plan_inertial(ComputationSpec::new(100, 2.0).unwrap(), 0.0).is_err());
    }

    #[test]
    fn order_from_k_examples() {
        assert_eq!(order_from_k(1.0, 10.0).unwrap(), 1.0);
        assert_relative_eq!(
            order_from_k(2.0, 10.0).unwrap(),
            1.096_910_013_008_056_4,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            order_from_k(19.949_874_371_066_2, 10.0).unwrap(),
            2.0,
            max_relative = 1e-12
        );
        assert!(matches!(
            order_from_k(2.0, 1.0),
            Err(Error::SubUnitBudget(_))
        ));
        assert!(matches!(order_from_k(0.5, 10.0), Err(Error::KFactor(_))));
    }

    #[test]
    fn k_from_order_examples() {
        assert_eq!(k_from_order(1.0, 10.0).unwrap(), 1.0);
        assert_relative_eq!(
            k_from_order(2.0, 10.0).unwrap(),
            19.949_874_371_066_2,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            k_from_order(1.096_910_013_008_056_4, 10.0).unwrap(),
            2.0,
            max_relative = 1e-13
        );
    }

    #[test]
    fn order_from_distance_examples() {
        assert_eq!(order_from_distance(0.0, 10.0).unwrap(), 1.0);
        assert_relative_eq!(
            order_from_distance(99.498_743_710_662, 10.0).unwrap(),
            2.0,
            max_relative = 1e-12
        );
        let d = 3f64.sqrt() * 10.0;
        assert_relative_eq!(
            order_from_distance(d, 10.0).unwrap(),
            1.301_029_995_663_981_2,
            max_relative = 1e-14
        );
        assert!(order_from_distance(-1.0, 10.0).is_err());
    }

    #[test]
    fn order_from_energy_examples() {
        assert_eq!(order_from_energy(1.0, 10.0).unwrap(), 1.0);
        assert_relative_eq!(
            order_from_energy(10.0, 10.0).unwrap(),
            2.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            order_from_energy(1000.0, 10.0).unwrap(),
            4.0,
            max_relative = 1e-15
        );
        assert_eq!(
            order_from_energy(0.9, 10.0),
            Err(Error::BelowRestEnergy(0.9))
        );
    }

    #[test]
    fn four_momentum_examples() {
        assert_eq!(
            four_momentum(&plan(50, 1.0)).components,
            [1.0, 0.0, 0.0, 0.0]
        );
        let p = four_momentum(&plan(100, 2.0));
        assert_relative_eq!(p.components[0], 10.0, max_relative = 1e-14);
        assert_relative_eq!(p.components[1], 9.949_874_371_066_2, max_relative = 1e-14);
        assert_eq!(&p.components[2..], &[0.0, 0.0]);
        assert_relative_eq!(p.minkowski_norm(), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn huge_workload_stays_finite() {
        let p = plan(1_000_000_000_000, 4.0);
        assert_relative_eq!(p.energy_ratio, 1e9, max_relative = 1e-12);
        assert!(p.light_lag > 0.0);
        assert_relative_eq!(four_momentum(&p).minkowski_norm(), 1.0, max_relative = 1e-9);
    }
}
