//! Tabulates plans over a grid and writes them as CSV to stdout.

use relspeed::scenarios::sweep_table;

fn cell(v: Option<f64>) -> String {
    v.map(|x| format!("{x:e}")).unwrap_or_default()
}

fn main() {
    let queries: Vec<u64> = (0..=12).step_by(2).map(|e| 10u64.pow(e)).collect();
    let orders = [1.0, 1.5, 2.0, 3.0, 4.0];
    println!("queries,order,proper_time,beta,energy_ratio,distance,accel,errors");
    for row in sweep_table(&queries, &orders, 1.0) {
        println!(
            "{},{},{},{},{},{},{},{}",
            row.queries,
            row.order,
            cell(row.proper_time),
            cell(row.beta),
            cell(row.energy_ratio),
            cell(row.distance),
            cell(row.accel),
            row.errors.join("; ")
        );
    }
}
