//! Builds a monomial ideal with a prescribed depth function and prints the certificate.
//!
//! `cargo run --release --example synthesize -- 0,2,1,1* 4`

use monodepth::{synthesize, EngineConfig, Result, TargetFunction};

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let target: TargetFunction = args.next().as_deref().unwrap_or("0,1,0,0*").parse()?;
    let max_n = args
        .next()
        .map(|s| s.parse().expect("bound is a number"))
        .unwrap_or(target.stable_from() + 1);
    let cert = synthesize(&target, max_n, &EngineConfig::default())?;
    println!("{}", cert.to_json());
    eprintln!("depths {:?}, Gamma {:?}", cert.depths, cert.gamma);
    Ok(())
}
