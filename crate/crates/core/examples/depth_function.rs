//! depth S/I^n and pd I^n for the step ideal with d = 3, in two characteristics.

use monodepth::report::depth_report;
use monodepth::synth::type1_ideal;
use monodepth::{EngineConfig, Result};

fn main() -> Result<()> {
    let ideal = type1_ideal(3)?;
    println!("I = {ideal}");
    for p in [2, 32003] {
        let cfg = EngineConfig::with_characteristic(p)?;
        for e in depth_report(&ideal, 5, &cfg)? {
            println!(
                "char {p}: n = {}, depth = {}, pd I^n = {}, {} ms",
                e.n, e.depth, e.pd_ideal, e.wall_ms
            );
        }
    }
    Ok(())
}
