//! Checks the hyperbolic-motion formulas against direct integration and
//! shows the fourth-order convergence of the integrator.

use relspeed::accel::ProperAcceleration;
use relspeed::accel::WorldlineSegment;
use relspeed::worldline::{integrate_worldline, simulate_path2, verify_closed_forms};

fn main() -> relspeed::Result<()> {
    let points: Vec<f64> = (1..=10).map(f64::from).collect();
    for fraction in [1e-2, 1e-3, 1e-4] {
        let r = verify_closed_forms(&[0.1, 1.0, 10.0], &points, fraction)?;
        println!(
            "step {fraction:e}/a: worst relative error {:.3e}",
            r.max_error()
        );
    }

    println!("\nstep     terminal error   ratio");
    let mut last: Option<f64> = None;
    for h in [0.2, 0.1, 0.05, 0.025] {
        let trace = integrate_worldline(&[WorldlineSegment::burn(1.0, 1.0)], 0.0, h)?;
        let err = (trace.terminal().t - 1f64.sinh()).abs();
        let ratio = last.map(|e| format!("{:.2}", e / err)).unwrap_or_default();
        println!("{h:<8} {err:<16.3e} {ratio}");
        last = Some(err);
    }

    let sim = simulate_path2(ProperAcceleration::new(1.0)?, 4.0, 4e-5)?;
    println!("\nfour-leg trip, g = 1, T = 4");
    println!(
        "  farthest point, simulated  {:.12}",
        sim.simulated_max_distance
    );
    println!("  composed closed form       {:.12}", sim.plan.max_distance);
    println!(
        "  half-trip formula          {:.12} (refuted: {})",
        sim.plan.half_trip_max_distance, sim.half_trip_refuted
    );
    println!(
        "  returns to x = {:.3e} at speed {:.3e}",
        sim.report.terminal_x, sim.report.terminal_beta
    );
    Ok(())
}
