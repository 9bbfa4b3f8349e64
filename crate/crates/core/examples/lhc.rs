//! One record checked per lap of a proton in the Large Hadron Collider.

use relspeed::scenarios::lhc_scenario;

fn main() {
    let s = lhc_scenario();
    println!("gamma                    {:.6}", s.gamma);
    println!("lab time per lap         {:.9e} s", s.lab_time_per_lap);
    println!("proper time per lap      {:.9e} s", s.proper_time_per_lap);
    println!(
        "centripetal, lab         {:.6e} m/s^2",
        s.classical_centripetal_accel
    );
    println!(
        "centripetal, on board    {:.6e} m/s^2",
        s.proper_centripetal_accel
    );
    println!("order from lap count     {:.6}", s.computed_order);
    println!("order from energy        {:.6}", s.energy_order);
    println!(
        "quoted order             {} (reproduced: {})",
        s.quoted_order, s.quoted_order_reproduced
    );
}
