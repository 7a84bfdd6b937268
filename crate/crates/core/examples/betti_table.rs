//! Multigraded Betti numbers of S/I, computed from upper Koszul complexes
//! and checked against the lcm-lattice interval formula.

use monodepth::betti::{betti_table_on, gpw_betti};
use monodepth::lattice::lcm_lattice;
use monodepth::{parse_ideal_file, EngineConfig, Result};

fn main() -> Result<()> {
    let src = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "ring x, y, z\nideal x y, y z, x z".into());
    let ideal = parse_ideal_file(&src)?;
    let cfg = EngineConfig::default();
    let lattice = lcm_lattice(&ideal, &cfg)?;
    let table = betti_table_on(&lattice, &cfg)?;
    println!(
        "I = {ideal}, lcm lattice of {} elements",
        lattice.elements().len()
    );
    for ((i, a), b) in &table.entries {
        if *i == 0 {
            println!("beta_0,{a:?} = {b}");
            continue;
        }
        let interval = gpw_betti(&lattice, a, &cfg)?;
        println!(
            "beta_{i},{a:?} = {b} (interval: {})",
            interval.get(*i).copied().unwrap_or(0)
        );
    }
    println!(
        "totals {:?}, pd S/I = {}",
        table.totals(),
        table.projective_dimension()
    );
    for ((i, deg), b) in table.graded() {
        println!("graded beta_{i},{deg} = {b}");
    }
    Ok(())
}
