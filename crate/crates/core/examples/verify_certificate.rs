//! Round trip: synthesize, serialize, reload, replay and extend the check.

use monodepth::{synthesize, verify, EngineConfig, Result, SynthesisCertificate, TargetFunction};

fn main() -> Result<()> {
    let cfg = EngineConfig::default();
    let target: TargetFunction = "0,1,1*".parse()?;
    let json = synthesize(&target, 3, &cfg)?.to_json();
    let cert = SynthesisCertificate::from_json(&json)?;
    for p in [2, 32003] {
        let report = verify(&cert, 5, &EngineConfig::with_characteristic(p)?)?;
        for row in &report.rows {
            println!(
                "char {p}: n = {} expected {} computed {}{}",
                row.n,
                row.expected,
                row.computed,
                if row.fresh { " (new)" } else { "" }
            );
        }
        println!("char {p}: all pass = {}", report.all_pass);
    }
    Ok(())
}
