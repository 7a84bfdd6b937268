//! Depth of ideals glued along a shared variable, by local cohomology.
//!
//! Components are kept apart, so powers stay small even when the flattened
//! ideal has thousands of generators.

use monodepth::synth::{spike_factor, type1_ideal};
use monodepth::{depth, EngineConfig, GluedIdeal, Result};

fn main() -> Result<()> {
    let cfg = EngineConfig::default();
    // (x, y, z) and (x, b, c): the first variable of each component is the hub.
    let a = type1_ideal(2)?;
    let b = spike_factor(2)?.rename(|v| match v {
        "t" => "x".to_string(),
        other => format!("{other}1"),
    })?;
    let glued = GluedIdeal::new(vec![a, b])?;
    println!("ring {}", glued.ring());
    for n in 1..=4 {
        let q = glued.power(n)?;
        let lc = q.depth(&cfg)?;
        let flat = depth(&q.flatten()?, &cfg)?;
        let witness = q
            .max_associated_witness()
            .map(|w| w.to_string())
            .unwrap_or_else(|| "none".into());
        println!("n = {n}: local cohomology {lc}, Betti {flat}, maximal-ideal witness {witness}");
    }
    Ok(())
}
