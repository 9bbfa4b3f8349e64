//! A smooth journey made of four constant-acceleration legs, with the fuel a
//! photon rocket would burn.

use relspeed::accel::{
    fuel_full_path, path2_itinerary, plan_accel, solve_acceleration, ProperAcceleration,
};
use relspeed::ComputationSpec;

fn main() -> relspeed::Result<()> {
    let spec = ComputationSpec::new(100, 2.0)?;
    println!(
        "single leg spanning the whole workload: a = {:.12}",
        solve_acceleration(&spec)?.value()
    );

    let plan = plan_accel(spec)?;
    println!("\nfour legs, each a quarter of T = {}", plan.proper_time);
    println!("  g                  {:.12}", plan.accel.value());
    println!("  coordinate time    {:.12}", plan.coordinate_time);
    println!("  peak speed         {:.12}", plan.max_beta.value());
    println!("  farthest point     {:.12}", plan.max_distance);
    println!("  fuel, one leg      {:.6} m0", plan.fuel_single_leg);
    println!("  fuel, legs summed  {:.6} m0", plan.fuel_summed_legs);
    println!("  fuel, compounded   {:.6} m0", plan.fuel_full_path);

    let g = ProperAcceleration::new(1.0)?;
    let p = path2_itinerary(g, 4.0)?;
    println!("\ng = 1, T = 4");
    println!("  farthest point     {:.12}", p.max_distance);
    println!("  half-trip formula  {:.12}", p.half_trip_max_distance);
    println!(
        "  compounded fuel    {:.6} m0",
        fuel_full_path(g, 4.0, 1.0)?
    );
    Ok(())
}
