//! Constant proper acceleration (hyperbolic motion).
//!
//! With `c = 1`, a traveller starting at rest and accelerating at `a` for
//! proper time `τ` reaches coordinate time `t = sinh(aτ)/a`, displacement
//! `x = (cosh(aτ) - 1)/a`, speed `tanh(aτ)` and Lorentz factor `cosh(aτ)`.
//! On the absolute hyperbola the position is `x + 1/a`, so that
//! `(x + 1/a)² - t² = 1/a²`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::inertial::ComputationSpec;
use crate::kinematics::Beta;
use crate::roots::brent;
use crate::units::SPEED_OF_LIGHT;

/// Bracket growth limit for [`solve_acceleration`].
pub const MAX_DOUBLINGS: u32 = 60;

/// Proper acceleration in units of c per time unit. Zero is the inertial
/// degenerate case; negative values are rejected.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct ProperAcceleration(f64);

impl ProperAcceleration {
    pub fn new(value: f64) -> Result<Self> {
        if value > 0.0 && value.is_finite() {
            Ok(ProperAcceleration(value))
        } else {
            Err(Error::Acceleration(value))
        }
    }

    pub const fn zero() -> Self {
        ProperAcceleration(0.0)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_inertial(self) -> bool {
        self.0 == 0.0
    }

    fn hyperbolic(self) -> Result<f64> {
        if self.0 > 0.0 {
            Ok(self.0)
        } else {
            Err(Error::Acceleration(self.0))
        }
    }
}

/// One piece of a piecewise-constant acceleration profile.
///
/// `kick` is an instantaneous rapidity change applied at the start of the
/// segment, which models the impulsive boosts of the constant-velocity twin
/// journey. Regular burns leave it at zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WorldlineSegment {
    pub proper_accel: f64,
    pub proper_duration: f64,
    pub kick: f64,
}

impl WorldlineSegment {
    pub fn burn(proper_accel: f64, proper_duration: f64) -> Self {
        WorldlineSegment {
            proper_accel,
            proper_duration,
            kick: 0.0,
        }
    }

    pub fn coast(proper_duration: f64) -> Self {
        Self::burn(0.0, proper_duration)
    }

    /// Instantaneous rapidity change followed by `proper_duration` of coasting.
    pub fn kicked(kick: f64, proper_duration: f64) -> Self {
        WorldlineSegment {
            proper_accel: 0.0,
            proper_duration,
            kick,
        }
    }
}

/// Coordinate time and displacement of an event on a worldline.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpacetimePoint {
    pub t: f64,
    pub x: f64,
}

fn check_time(name: &'static str, value: f64) -> Result<f64> {
    if value >= 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Negative { name, value })
    }
}

/// `cosh(u) - 1` without cancellation.
fn cosh_m1(u: f64) -> f64 {
    let s = (0.5 * u).sinh();
    2.0 * s * s
}

/// `√(1 + s²) - 1` without cancellation.
fn hypot_m1(s: f64) -> f64 {
    s * s / (1.0 + s.hypot(1.0))
}

/// Event reached after proper time `tau`, as displacement from the start.
pub fn worldline_point(accel: ProperAcceleration, tau: f64) -> Result<SpacetimePoint> {
    let a = accel.hyperbolic()?;
    let tau = check_time("proper time", tau)?;
    Ok(SpacetimePoint {
        t: (a * tau).sinh() / a,
        x: cosh_m1(a * tau) / a,
    })
}

/// `β = tanh(aτ)`.
pub fn velocity_at(accel: ProperAcceleration, tau: f64) -> Result<Beta> {
    let a = accel.hyperbolic()?;
    Beta::from_rapidity(a * check_time("proper time", tau)?)
}

/// `β = at / √(1 + (at)²)`.
pub fn velocity_at_coordinate_time(accel: ProperAcceleration, t: f64) -> Result<Beta> {
    let a = accel.hyperbolic()?;
    let s = a * check_time("coordinate time", t)?;
    let h = s.hypot(1.0);
    Beta::from_parts(s / h, 1.0 / (h * (h + s)))
}

/// `γ = cosh(aτ)`.
pub fn gamma_at(accel: ProperAcceleration, tau: f64) -> Result<f64> {
    let a = accel.hyperbolic()?;
    Ok((a * check_time("proper time", tau)?).cosh())
}

/// `γ = √(1 + (at)²)`.
pub fn gamma_at_coordinate_time(accel: ProperAcceleration, t: f64) -> Result<f64> {
    let a = accel.hyperbolic()?;
    Ok((a * check_time("coordinate time", t)?).hypot(1.0))
}

/// `γ = a·x_abs` where `x_abs` is the position on the hyperbola, i.e.
/// `1/a` plus the displacement.
pub fn gamma_at_position(accel: ProperAcceleration, displacement: f64) -> Result<f64> {
    let a = accel.hyperbolic()?;
    Ok(1.0 + a * check_time("distance", displacement)?)
}

/// Which of the three hyperbolic-motion quantities is given.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Known {
    CoordinateTime(f64),
    ProperTime(f64),
    Distance(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TimeMap {
    pub coordinate_time: f64,
    pub proper_time: f64,
    pub distance: f64,
}

/// Completes `(t, τ, d)` from any one of them.
pub fn time_maps(accel: ProperAcceleration, known: Known) -> Result<TimeMap> {
    let a = accel.hyperbolic()?;
    let map = match known {
        Known::CoordinateTime(t) => {
            let s = a * check_time("coordinate time", t)?;
            TimeMap {
                coordinate_time: t,
                proper_time: s.asinh() / a,
                distance: hypot_m1(s) / a,
            }
        }
        Known::ProperTime(tau) => {
            let u = a * check_time("proper time", tau)?;
            TimeMap {
                coordinate_time: u.sinh() / a,
                proper_time: tau,
                distance: cosh_m1(u) / a,
            }
        }
        Known::Distance(d) => {
            // acosh(1 + y) = ln(1 + y + √(y(2 + y)))
            let y = a * check_time("distance", d)?;
            let s = (y * (2.0 + y)).sqrt();
            TimeMap {
                coordinate_time: s / a,
                proper_time: (y + s).ln_1p() / a,
                distance: d,
            }
        }
    };
    Ok(map)
}

/// Acceleration for which a single hyperbolic leg lasting `proper_time` on
/// board spans `coordinate_time` in the inertial frame, i.e. the root of
/// `asinh(a·t)/a = τ`.
pub fn solve_acceleration_for(
    coordinate_time: f64,
    proper_time: f64,
) -> Result<ProperAcceleration> {
    let t = check_time("coordinate time", coordinate_time)?;
    let tau = check_time("proper time", proper_time)?;
    if tau == t {
        return Ok(ProperAcceleration::zero());
    }
    if !(tau > 0.0 && tau < t) {
        return Err(Error::Infeasible(0));
    }

    // Strictly decreasing from t/τ - 1 > 0 at a → 0 towards -1.
    let residual = |a: f64| (a * t).asinh() / (a * tau) - 1.0;

    let mut lo = 1.0 / t;
    let mut shrink = 0;
    while residual(lo) <= 0.0 {
        if shrink == MAX_DOUBLINGS {
            return Err(Error::Infeasible(MAX_DOUBLINGS));
        }
        lo *= 0.5;
        shrink += 1;
    }
    let mut hi = lo;
    let mut doublings = 0;
    while residual(hi) > 0.0 {
        if doublings == MAX_DOUBLINGS {
            return Err(Error::Infeasible(MAX_DOUBLINGS));
        }
        lo = hi;
        hi *= 2.0;
        doublings += 1;
    }

    let a = brent(residual, lo, hi, 0.0, 200).ok_or(Error::Infeasible(doublings))?;
    ProperAcceleration::new(a)
}

/// Proper acceleration that couples the clocks as `τ = (Δt·N)^(1/n)` while
/// the inertial frame runs `t = Δt·N`. Order one gives the inertial case.
pub fn solve_acceleration(spec: &ComputationSpec) -> Result<ProperAcceleration> {
    spec.validate()?;
    if spec.order == 1.0 {
        return Ok(ProperAcceleration::zero());
    }
    solve_acceleration_for(spec.workload(), spec.proper_time())
}

/// Reduction order realised by a single leg at fixed acceleration covering
/// `coordinate_time`: `n = ln t / ln τ`.
pub fn implied_order(accel: ProperAcceleration, coordinate_time: f64) -> Result<f64> {
    let tau = time_maps(accel, Known::CoordinateTime(coordinate_time))?.proper_time;
    if !(tau > 1.0) {
        return Err(Error::SubUnitBudget(tau));
    }
    Ok(coordinate_time.ln() / tau.ln())
}

/// Four-leg round trip, each leg a quarter of the proper time: speed up
/// outbound (`+g`), brake to rest (`-g`), speed up homeward (`-g`), brake
/// to rest at the origin (`+g`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AccelPlan {
    pub spec: Option<ComputationSpec>,
    pub accel: ProperAcceleration,
    pub legs: Vec<WorldlineSegment>,
    pub proper_time: f64,
    pub coordinate_time: f64,
    pub leg_coordinate_time: f64,
    pub max_beta: Beta,
    /// Turnaround displacement from composing the first two legs.
    pub max_distance: f64,
    /// `(cosh(gT/2) - 1)/g`, the single-burn expression for the same
    /// quantity. Kept for comparison; it does not describe this itinerary.
    pub half_trip_max_distance: f64,
    /// Photon-rocket fuel for one leg, in multiples of the payload mass.
    pub fuel_single_leg: f64,
    /// Four times [`Self::fuel_single_leg`].
    pub fuel_summed_legs: f64,
    /// Fuel for the whole trip when each leg's fuel is carried by all
    /// earlier legs.
    pub fuel_full_path: f64,
}

pub fn path2_itinerary(g: ProperAcceleration, proper_time: f64) -> Result<AccelPlan> {
    let g_val = g.hyperbolic()?;
    let proper_time = check_time("proper time", proper_time)?;
    let quarter = 0.25 * proper_time;
    let u = g_val * quarter;
    let leg_coordinate_time = u.sinh() / g_val;
    let fuel_single_leg = u.exp_m1();
    Ok(AccelPlan {
        spec: None,
        accel: g,
        legs: vec![
            WorldlineSegment::burn(g_val, quarter),
            WorldlineSegment::burn(-g_val, quarter),
            WorldlineSegment::burn(-g_val, quarter),
            WorldlineSegment::burn(g_val, quarter),
        ],
        proper_time,
        coordinate_time: 4.0 * leg_coordinate_time,
        leg_coordinate_time,
        max_beta: Beta::from_rapidity(u)?,
        max_distance: 2.0 * cosh_m1(u) / g_val,
        half_trip_max_distance: cosh_m1(2.0 * u) / g_val,
        fuel_single_leg,
        fuel_summed_legs: 4.0 * fuel_single_leg,
        fuel_full_path: (4.0 * u).exp_m1(),
    })
}

/// Four-leg itinerary whose total coordinate time equals the workload and
/// whose proper time is `(Δt·N)^(1/n)`.
pub fn plan_accel(spec: ComputationSpec) -> Result<AccelPlan> {
    spec.validate()?;
    let proper_time = spec.proper_time();
    if spec.order == 1.0 {
        let quarter = 0.25 * proper_time;
        return Ok(AccelPlan {
            spec: Some(spec),
            accel: ProperAcceleration::zero(),
            legs: vec![WorldlineSegment::coast(quarter); 4],
            proper_time,
            coordinate_time: spec.workload(),
            leg_coordinate_time: quarter,
            max_beta: Beta::ZERO,
            max_distance: 0.0,
            half_trip_max_distance: 0.0,
            fuel_single_leg: 0.0,
            fuel_summed_legs: 0.0,
            fuel_full_path: 0.0,
        });
    }
    // Each leg is a hyperbolic segment covering a quarter of both clocks.
    let g = solve_acceleration_for(0.25 * spec.workload(), 0.25 * proper_time)?;
    let mut plan = path2_itinerary(g, proper_time)?;
    plan.spec = Some(spec);
    Ok(plan)
}

/// Energy and momentum bookkeeping for one photon-rocket burn from rest.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FuelAccount {
    /// Fuel rest mass converted to light, `M`.
    pub initial_fuel_mass: f64,
    /// Energy carried off by the exhaust, `E_l`.
    pub radiated_energy: f64,
    /// Payload rest mass `m₀`.
    pub payload: f64,
    pub gamma: f64,
    pub beta: f64,
}

impl FuelAccount {
    fn from_sinh(s: f64, payload: f64) -> Self {
        let gamma = s.hypot(1.0);
        FuelAccount {
            initial_fuel_mass: payload * (s + hypot_m1(s)),
            radiated_energy: payload * s,
            payload,
            gamma,
            beta: s / gamma,
        }
    }

    /// Relative mismatch in `(M + m₀)c² = γm₀c² + E_l`.
    pub fn energy_residual(&self) -> f64 {
        let before = self.initial_fuel_mass + self.payload;
        let after = self.gamma * self.payload + self.radiated_energy;
        (before - after).abs() / before
    }

    /// Relative mismatch in `0 = γm₀u - E_l/c`.
    pub fn momentum_residual(&self) -> f64 {
        let payload_momentum = self.gamma * self.payload * self.beta;
        if self.radiated_energy == 0.0 {
            return payload_momentum.abs();
        }
        (payload_momentum - self.radiated_energy).abs() / self.radiated_energy
    }
}

fn check_payload(m0: f64) -> Result<f64> {
    if m0 > 0.0 && m0.is_finite() {
        Ok(m0)
    } else {
        Err(Error::Negative {
            name: "rest mass",
            value: m0,
        })
    }
}

/// Fuel to reach rapidity `aτ` from rest: `M = m₀(e^{aτ} - 1)`, evaluated
/// through the coordinate-time form `m₀(at + √(1 + (at)²) - 1)`.
pub fn fuel_single_leg(accel: ProperAcceleration, tau: f64, m0: f64) -> Result<FuelAccount> {
    let a = accel.hyperbolic()?;
    let tau = check_time("proper time", tau)?;
    Ok(FuelAccount::from_sinh((a * tau).sinh(), check_payload(m0)?))
}

/// Same burn, specified by the inertial-frame duration `t`.
pub fn fuel_for_coordinate_time(accel: ProperAcceleration, t: f64, m0: f64) -> Result<FuelAccount> {
    let a = accel.hyperbolic()?;
    let t = check_time("coordinate time", t)?;
    Ok(FuelAccount::from_sinh(a * t, check_payload(m0)?))
}

/// Same burn, specified by displacement: `M = m₀(ad + √(ad(ad + 2)))`.
pub fn fuel_for_distance(accel: ProperAcceleration, d: f64, m0: f64) -> Result<FuelAccount> {
    let a = accel.hyperbolic()?;
    let y = a * check_time("distance", d)?;
    Ok(FuelAccount::from_sinh(
        (y * (2.0 + y)).sqrt(),
        check_payload(m0)?,
    ))
}

/// The displacement form `m₀(ad + √(a²d² - 1) - 1)`, which drops the `2ad` term.
/// It disagrees with [`fuel_for_distance`] and is undefined for `ad < 1`;
/// exposed only so the discrepancy can be reported.
pub fn fuel_for_distance_uncorrected(accel: ProperAcceleration, d: f64, m0: f64) -> Option<f64> {
    let y = accel.value() * d;
    (y >= 1.0).then(|| m0 * (y + (y * y - 1.0).sqrt() - 1.0))
}

/// Fuel for four rapidity changes of `gT/4` each, compounded:
/// `m₀(e^{gT} - 1)`.
pub fn fuel_full_path(g: ProperAcceleration, proper_time: f64, m0: f64) -> Result<f64> {
    let g = g.hyperbolic()?;
    let proper_time = check_time("proper time", proper_time)?;
    Ok(check_payload(m0)? * (g * proper_time).exp_m1())
}

/// Weak-field clock rate `1 - gh/c²` between two observers at rest
/// separated by height `h` (SI units).
pub fn gravitational_rate(g: f64, h: f64) -> Result<f64> {
    let g = check_time("gravitational acceleration", g)?;
    let h = check_time("height", h)?;
    let shift = g * h / (SPEED_OF_LIGHT * SPEED_OF_LIGHT);
    if shift >= 0.01 {
        return Err(Error::WeakField(shift));
    }
    Ok(1.0 - shift)
}
