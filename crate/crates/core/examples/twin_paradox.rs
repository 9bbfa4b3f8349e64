//! Integrates the impulsive-boost round trip and prints both clocks.
//! Pass `--csv` to dump the trace.

use relspeed::worldline::simulate_path1;
use relspeed::ComputationSpec;

fn main() -> relspeed::Result<()> {
    let csv = std::env::args().any(|a| a == "--csv");
    let (trace, report) = simulate_path1(ComputationSpec::new(100, 2.0)?)?;
    if csv {
        println!("tau,t,x,beta");
        for s in &trace.samples {
            println!("{},{},{},{}", s.tau, s.t, s.x, s.beta);
        }
        return Ok(());
    }
    println!("traveller's clock  {:.12}", report.terminal_tau);
    println!("home clock         {:.12}", report.terminal_t);
    println!("farthest point     {:.12}", trace.max_x());
    println!("final speed        {}", report.terminal_beta);
    println!("samples            {}", trace.samples.len());
    Ok(())
}
