//! A travelling classical search against quadratic quantum search.

use relspeed::scenarios::race_grover;

fn main() -> relspeed::Result<()> {
    let queries = 1_000_000;
    println!("N = {queries}");
    println!(
        "{:>5} {:>14} {:>10} {:>14} {:>10}  winner",
        "n", "classical", "quantum", "energy", "grover E"
    );
    for order in [1.0, 1.5, 2.0, 2.5, 3.0, 4.0] {
        let r = race_grover(queries, order, 1.0)?;
        println!(
            "{order:>5} {:>14.4} {:>10} {:>14.4} {:>10}  {:?}",
            r.classical_proper_runtime,
            r.quantum_queries,
            r.classical_energy,
            r.grover_equivalent_energy,
            r.winner
        );
    }
    Ok(())
}
