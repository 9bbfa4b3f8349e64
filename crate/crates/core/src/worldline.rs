//! Numerical worldline integration.
//!
//! Integrates `dt/dτ = cosh φ(τ)` and `dx/dτ = sinh φ(τ)` with classical
//! fixed-step RK4, where the rapidity `φ` is piecewise linear in proper time
//! (slope = proper acceleration, plus optional instantaneous kicks). The
//! result is an independent check on the closed forms in [`crate::accel`]
//! and [`crate::inertial`]: none of them are used to produce the trace.

use serde::Serialize;

use crate::accel::{self, AccelPlan, ProperAcceleration, WorldlineSegment};
use crate::error::{Error, Result};
use crate::inertial::{plan_inertial, ComputationSpec};

/// Upper bound on the number of RK4 steps in one integration.
pub const MAX_STEPS: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TraceSample {
    pub tau: f64,
    pub t: f64,
    pub x: f64,
    pub beta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WorldlineTrace {
    pub samples: Vec<TraceSample>,
    pub step: f64,
    pub path_label: String,
    /// Rapidity after the last segment, including any trailing kick.
    pub final_rapidity: f64,
    /// Index into `samples` of the state at the end of each segment.
    #[serde(skip)]
    pub segment_ends: Vec<usize>,
}

impl WorldlineTrace {
    pub fn terminal(&self) -> &TraceSample {
        self.samples
            .last()
            .expect("trace always holds the initial sample")
    }

    /// Velocity after the last segment, kicks included.
    pub fn final_beta(&self) -> f64 {
        self.final_rapidity.tanh()
    }

    pub fn max_x(&self) -> f64 {
        self.samples
            .iter()
            .map(|s| s.x)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn max_abs_beta(&self) -> f64 {
        self.samples
            .iter()
            .map(|s| s.beta.abs())
            .fold(0.0, f64::max)
    }

    fn labelled(mut self, label: &str) -> Self {
        self.path_label = label.to_owned();
        self
    }
}

/// Closed-form mismatch of a simulated trace. All fields are non-negative
/// except the terminal state, which is reported as simulated.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct ErrorReport {
    pub max_rel_error_t: f64,
    pub max_rel_error_x: f64,
    pub max_rel_error_beta: f64,
    pub max_rel_error_gamma: f64,
    pub terminal_tau: f64,
    pub terminal_t: f64,
    pub terminal_x: f64,
    pub terminal_beta: f64,
}

impl ErrorReport {
    pub fn max_error(&self) -> f64 {
        self.max_rel_error_t
            .max(self.max_rel_error_x)
            .max(self.max_rel_error_beta)
            .max(self.max_rel_error_gamma)
    }
}

/// `|sim - exact| / |exact|`, or the absolute error when `exact` is zero.
pub fn rel_error(sim: f64, exact: f64) -> f64 {
    let diff = (sim - exact).abs();
    if exact == 0.0 {
        diff
    } else {
        diff / exact.abs()
    }
}

type State = [f64; 2];

fn rk4_step<F>(f: &F, tau: f64, y: State, h: f64) -> State
where
    F: Fn(f64, State) -> State,
{
    let add = |y: State, k: State, s: f64| [y[0] + s * k[0], y[1] + s * k[1]];
    let k1 = f(tau, y);
    let k2 = f(tau + 0.5 * h, add(y, k1, 0.5 * h));
    let k3 = f(tau + 0.5 * h, add(y, k2, 0.5 * h));
    let k4 = f(tau + h, add(y, k3, h));
    [
        y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
        y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]),
    ]
}

fn steps_for(duration: f64, step: f64) -> u64 {
    if duration == 0.0 {
        0
    } else {
        (duration / step).ceil().max(1.0) as u64
    }
}

/// Integrates clocks and position through `segments`, starting at the
/// origin event with `initial_rapidity`.
///
/// Each segment is split into equal steps no longer than `step` so that
/// segment boundaries land exactly on samples. A sample taken at a
/// boundary reflects the state before the next segment's kick.
pub fn integrate_worldline(
    segments: &[WorldlineSegment],
    initial_rapidity: f64,
    step: f64,
) -> Result<WorldlineTrace> {
    if !(step > 0.0) || step.is_infinite() {
        return Err(Error::Integrator(format!(
            "step must be positive, got {step}"
        )));
    }
    if !initial_rapidity.is_finite() {
        return Err(Error::Integrator("initial rapidity must be finite".into()));
    }
    let mut total: u64 = 0;
    for seg in segments {
        if !(seg.proper_duration >= 0.0) || seg.proper_duration.is_infinite() {
            return Err(Error::Integrator(format!(
                "segment duration must be non-negative, got {}",
                seg.proper_duration
            )));
        }
        if !seg.proper_accel.is_finite() || !seg.kick.is_finite() {
            return Err(Error::Integrator(
                "segment acceleration and kick must be finite".into(),
            ));
        }
        total = total.saturating_add(steps_for(seg.proper_duration, step));
    }
    if total > MAX_STEPS {
        return Err(Error::Integrator(format!(
            "{total} steps exceed the budget of {MAX_STEPS}"
        )));
    }

    let mut samples = Vec::with_capacity(total as usize + 1);
    samples.push(TraceSample {
        tau: 0.0,
        t: 0.0,
        x: 0.0,
        beta: initial_rapidity.tanh(),
    });
    let mut segment_ends = Vec::with_capacity(segments.len());
    let mut phi = initial_rapidity;
    let mut tau0 = 0.0;
    let mut y: State = [0.0, 0.0];

    for seg in segments {
        phi += seg.kick;
        let n = steps_for(seg.proper_duration, step);
        if n > 0 {
            let h = seg.proper_duration / n as f64;
            let (phi0, a) = (phi, seg.proper_accel);
            let rhs = |s: f64, _: State| {
                let p = phi0 + a * s;
                [p.cosh(), p.sinh()]
            };
            for i in 0..n {
                let s = i as f64 * h;
                y = if a == 0.0 {
                    [y[0] + h * phi0.cosh(), y[1] + h * phi0.sinh()]
                } else {
                    rk4_step(&rhs, s, y, h)
                };
                let s_next = if i + 1 == n {
                    seg.proper_duration
                } else {
                    (i + 1) as f64 * h
                };
                samples.push(TraceSample {
                    tau: tau0 + s_next,
                    t: y[0],
                    x: y[1],
                    beta: (phi0 + a * s_next).tanh(),
                });
            }
            phi = phi0 + a * seg.proper_duration;
            tau0 += seg.proper_duration;
        }
        segment_ends.push(samples.len() - 1);
    }

    Ok(WorldlineTrace {
        samples,
        step,
        path_label: "custom".to_owned(),
        final_rapidity: phi,
        segment_ends,
    })
}

/// Impulsive-boost twin journey: jump to the planned rapidity, coast for
/// `T/2`, reverse, coast for `T/2`, stop.
pub fn simulate_path1(spec: ComputationSpec) -> Result<(WorldlineTrace, ErrorReport)> {
    simulate_path1_with_step(spec, spec.proper_time() / 1000.0)
}

pub fn simulate_path1_with_step(
    spec: ComputationSpec,
    step: f64,
) -> Result<(WorldlineTrace, ErrorReport)> {
    let plan = plan_inertial(spec, 1.0)?;
    let phi = plan.state.rapidity;
    let half = 0.5 * plan.proper_time;
    let segments = [
        WorldlineSegment::kicked(phi, half),
        WorldlineSegment::kicked(-2.0 * phi, half),
        WorldlineSegment::kicked(phi, 0.0),
    ];
    let trace = integrate_worldline(&segments, 0.0, step)?.labelled("path1");

    let turn = trace.samples[trace.segment_ends[0]];
    let end = *trace.terminal();
    let report = ErrorReport {
        max_rel_error_t: rel_error(end.t, plan.coordinate_time),
        max_rel_error_x: rel_error(turn.x, plan.turnaround_distance),
        max_rel_error_beta: rel_error(turn.beta, plan.state.beta.value()),
        max_rel_error_gamma: rel_error(end.t / end.tau, plan.state.gamma),
        terminal_tau: end.tau,
        terminal_t: end.t,
        terminal_x: end.x,
        terminal_beta: trace.final_beta(),
    };
    Ok((trace, report))
}

/// Simulated four-leg itinerary together with its closed-form comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Path2Simulation {
    pub trace: WorldlineTrace,
    /// Simulated maxima and duration against the leg-composed closed forms.
    pub report: ErrorReport,
    pub plan: AccelPlan,
    pub simulated_max_distance: f64,
    pub simulated_max_beta: f64,
    pub simulated_coordinate_time: f64,
    /// Mismatch between the simulated turnaround and the single-burn
    /// expression `(cosh(gT/2) - 1)/g`.
    pub half_trip_rel_error: f64,
    pub half_trip_refuted: bool,
}

/// Tolerance used to call a closed form confirmed or refuted by simulation.
pub const PATH2_TOLERANCE: f64 = 1e-6;

pub fn simulate_path2(
    g: ProperAcceleration,
    proper_time: f64,
    step: f64,
) -> Result<Path2Simulation> {
    let plan = accel::path2_itinerary(g, proper_time)?;
    let trace = integrate_worldline(&plan.legs, 0.0, step)?.labelled("path2");

    let end = *trace.terminal();
    let max_d = trace.max_x();
    let max_beta = trace.max_abs_beta();
    let leg_t = trace.samples[trace.segment_ends[0]].t;
    let gamma_sim = (g.value() * leg_t).hypot(1.0);
    let gamma_exact = (g.value() * 0.25 * proper_time).cosh();

    let report = ErrorReport {
        max_rel_error_t: rel_error(end.t, plan.coordinate_time),
        max_rel_error_x: rel_error(max_d, plan.max_distance),
        max_rel_error_beta: rel_error(max_beta, plan.max_beta.value()),
        max_rel_error_gamma: rel_error(gamma_sim, gamma_exact),
        terminal_tau: end.tau,
        terminal_t: end.t,
        terminal_x: end.x,
        terminal_beta: trace.final_beta(),
    };
    let half_trip_rel_error = rel_error(max_d, plan.half_trip_max_distance);
    Ok(Path2Simulation {
        trace,
        report,
        simulated_max_distance: max_d,
        simulated_max_beta: max_beta,
        simulated_coordinate_time: end.t,
        half_trip_rel_error,
        half_trip_refuted: half_trip_rel_error > PATH2_TOLERANCE,
        plan,
    })
}

/// Sweeps single-burn worldlines against the hyperbolic closed forms.
///
/// For `a > 0`, `rapidity_points` are proper times in units of `1/a` (i.e.
/// values of `aτ`) and the step is `step_fraction / a`. For `a = 0` both are
/// taken as plain proper times. Simulated coordinate time and displacement
/// are compared with [`accel::worldline_point`]; speed and Lorentz factor
/// are re-derived from the simulated `t` and `x` and compared with
/// `tanh(aτ)` and `cosh(aτ)`.
pub fn verify_closed_forms(
    accels: &[f64],
    rapidity_points: &[f64],
    step_fraction: f64,
) -> Result<ErrorReport> {
    if accels.is_empty() || rapidity_points.is_empty() {
        return Err(Error::Integrator(
            "acceleration and time grids must be non-empty".into(),
        ));
    }
    let mut points = rapidity_points.to_vec();
    if points.iter().any(|p| !(*p >= 0.0) || p.is_infinite()) {
        return Err(Error::Integrator(
            "time grid must be non-negative and finite".into(),
        ));
    }
    points.sort_by(f64::total_cmp);

    let mut report = ErrorReport::default();
    for &a in accels {
        if !(a >= 0.0) || a.is_infinite() {
            return Err(Error::Acceleration(a));
        }
        let scale = if a > 0.0 { 1.0 / a } else { 1.0 };
        let mut prev = 0.0;
        let segments: Vec<_> = points
            .iter()
            .map(|p| {
                let tau = p * scale;
                let seg = WorldlineSegment::burn(a, tau - prev);
                prev = tau;
                seg
            })
            .collect();
        let trace = integrate_worldline(&segments, 0.0, step_fraction * scale)?;

        for &idx in &trace.segment_ends {
            let s = trace.samples[idx];
            let errors = if a > 0.0 {
                let acc = ProperAcceleration::new(a)?;
                let p = accel::worldline_point(acc, s.tau)?;
                let gamma = accel::gamma_at(acc, s.tau)?;
                let from_t = accel::gamma_at_coordinate_time(acc, s.t)?;
                let from_x = accel::gamma_at_position(acc, s.x.max(0.0))?;
                [
                    rel_error(s.t, p.t),
                    rel_error(s.x, p.x),
                    rel_error(
                        accel::velocity_at_coordinate_time(acc, s.t)?.value(),
                        accel::velocity_at(acc, s.tau)?.value(),
                    ),
                    rel_error(from_t, gamma).max(rel_error(from_x, gamma)),
                ]
            } else {
                [rel_error(s.t, s.tau), s.x.abs(), s.beta.abs(), 0.0]
            };
            report.max_rel_error_t = report.max_rel_error_t.max(errors[0]);
            report.max_rel_error_x = report.max_rel_error_x.max(errors[1]);
            report.max_rel_error_beta = report.max_rel_error_beta.max(errors[2]);
            report.max_rel_error_gamma = report.max_rel_error_gamma.max(errors[3]);
        }
        let end = *trace.terminal();
        report.terminal_tau = end.tau;
        report.terminal_t = end.t;
        report.terminal_x = end.x;
        report.terminal_beta = trace.final_beta();
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn inertial_clock() {
        let trace = integrate_worldline(&[WorldlineSegment::coast(5.0)], 0.0, 0.25).unwrap();
        let end = trace.terminal();
        assert_eq!((end.tau, end.t, end.x), (5.0, 5.0, 0.0));
    }

    #[test]
    fn single_burn_matches_sinh_cosh() {
        let trace = integrate_worldline(&[WorldlineSegment::burn(1.0, 1.0)], 0.0, 1e-4).unwrap();
        let end = trace.terminal();
        assert!((end.t - 1.175_201_193_643_801_5).abs() < 1e-9);
        assert!((end.x - 0.543_080_634_815_243_8).abs() < 1e-9);
    }

    #[test]
    fn first_sample_is_origin() {
        let trace = integrate_worldline(&[WorldlineSegment::burn(1.0, 1.0)], 0.5, 0.1).unwrap();
        assert_eq!(
            trace.samples[0],
            TraceSample {
                tau: 0.0,
                t: 0.0,
                x: 0.0,
                beta: 0.5f64.tanh()
            }
        );
    }

    #[test]
    fn rejects_bad_configuration() {
        let seg = [WorldlineSegment::coast(1.0)];
        assert!(matches!(
            integrate_worldline(&seg, 0.0, 0.0),
            Err(Error::Integrator(_))
        ));
        assert!(matches!(
            integrate_worldline(&seg, 0.0, -1.0),
            Err(Error::Integrator(_))
        ));
        assert!(matches!(
            integrate_worldline(&[WorldlineSegment::coast(1e9)], 0.0, 1.0),
            Err(Error::Integrator(_))
        ));
        assert!(integrate_worldline(&[WorldlineSegment::coast(-1.0)], 0.0, 1.0).is_err());
    }

    #[test]
    fn path2_returns_home_at_rest() {
        let sim = simulate_path2(ProperAcceleration::new(1.0).unwrap(), 4.0, 1e-4).unwrap();
        assert!(sim.report.terminal_beta.abs() <= 1e-9);
        assert!(sim.report.terminal_x.abs() <= 1e-6, "{:?}", sim.report);
        assert_relative_eq!(
            sim.simulated_max_distance,
            1.086_161_269_630_487_6,
            max_relative = 1e-6
        );
        assert_relative_eq!(
            sim.simulated_coordinate_time,
            4.700_804_774_575_206,
            max_relative = 1e-6
        );
        assert!((sim.simulated_max_beta - 0.761_594_155_955_764_9).abs() <= 1e-8);
        assert!(sim.half_trip_refuted);
    }

    #[test]
    fn path1_twin() {
        let (trace, report) = simulate_path1(ComputationSpec::new(100, 2.0).unwrap()).unwrap();
        assert_relative_eq!(report.terminal_tau, 10.0, max_relative = 1e-12);
        assert_relative_eq!(report.terminal_t, 100.0, max_relative = 1e-9);
        let turn = trace.samples[trace.segment_ends[0]];
        assert_relative_eq!(turn.x, 49.749_371_855_331, max_relative = 1e-9);
        assert_relative_eq!(
            report.terminal_tau / report.terminal_t,
            0.1,
            max_relative = 1e-9
        );
        assert_eq!(report.terminal_beta, 0.0);
    }

    #[test]
    fn path1_classical_is_stationary() {
        let (trace, _) = simulate_path1(ComputationSpec::new(100, 1.0).unwrap()).unwrap();
        assert!(trace.samples.iter().all(|s| s.x == 0.0 && s.beta == 0.0));
    }

    #[test]
    fn verify_examples() {
        let r = verify_closed_forms(&[1.0], &[1.0], 1e-4).unwrap();
        assert!(r.max_error() <= 1e-9, "{r:?}");
        let r = verify_closed_forms(&[0.0], &[0.0, 1.0, 2.0, 3.0, 7.0], 0.5).unwrap();
        assert_eq!(r.max_error(), 0.0);
        assert!(verify_closed_forms(&[], &[1.0], 1e-4).is_err());
    }
}
