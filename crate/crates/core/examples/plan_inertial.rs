//! Constant-velocity plans for a range of query counts and reduction orders.
//!
//! ```text
//! cargo run --example plan_inertial
//! ```

use relspeed::inertial::{four_momentum, order_from_distance};
use relspeed::{plan_inertial, ComputationSpec};

fn main() -> relspeed::Result<()> {
    println!(
        "{:>14} {:>4} {:>12} {:>22} {:>14} {:>14}",
        "N", "n", "T", "1 - beta", "E/m0c^2", "n from d"
    );
    for queries in [100u64, 1_000_000, 1_000_000_000_000] {
        for order in [1.5, 2.0, 3.0] {
            let plan = plan_inertial(ComputationSpec::new(queries, order)?, 1.0)?;
            let recovered = order_from_distance(plan.distance, plan.proper_time)?;
            println!(
                "{queries:>14} {order:>4} {:>12.4} {:>22.6e} {:>14.6e} {recovered:>14.10}",
                plan.proper_time,
                plan.state.beta.gap(),
                plan.energy_ratio,
            );
        }
    }

    let plan = plan_inertial(ComputationSpec::new(100, 2.0)?, 1.0)?;
    let p = four_momentum(&plan);
    println!("\nN = 100, n = 2");
    println!("  rapidity   {:.10}", plan.state.rapidity);
    println!("  k-factor   {:.10}", plan.state.k);
    println!(
        "  distance   {:.10} (turnaround at {:.10})",
        plan.distance, plan.turnaround_distance
    );
    println!(
        "  4-momentum {:?}, norm {:.12}",
        p.components,
        p.minkowski_norm()
    );
    Ok(())
}
