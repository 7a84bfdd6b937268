//! Associated primes of powers, the set of powers where the maximal ideal is
//! associated, and the predicted associated primes of a join.

use monodepth::synth::{spike_factor, type1_ideal};
use monodepth::{ass_primes, gamma_set, predicted_ass_join, EngineConfig, Result};

fn main() -> Result<()> {
    let cfg = EngineConfig::default();
    let j = spike_factor(2)?;
    for n in 1..=4 {
        let r = ass_primes(&j.power(n)?, &cfg)?;
        let primes: Vec<String> = r.primes.iter().map(ToString::to_string).collect();
        println!("Ass(S/J^{n}) = {{{}}}", primes.join(", "));
    }
    let g = gamma_set(&j, 4)?;
    println!(
        "powers with the maximal ideal associated, up to {}: {:?}",
        g.bound, g.members
    );

    let i = type1_ideal(2)?;
    let predicted = predicted_ass_join(&i, &j, "y", "u", &cfg)?;
    let names: Vec<String> = predicted.iter().map(ToString::to_string).collect();
    println!(
        "predicted Ass of the join along y = u: {{{}}}",
        names.join(", ")
    );
    let direct = ass_primes(&i.product(&j)?.identify_variables(&[("y", "u")])?, &cfg)?;
    println!("direct computation agrees: {}", direct.primes == predicted);
    Ok(())
}
