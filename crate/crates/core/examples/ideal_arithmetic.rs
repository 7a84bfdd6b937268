//! Parsing, products, powers, intersections, colons and variable identification.

use monodepth::parse::parse_monomial_in;
use monodepth::{parse_ideal_file, Result};

fn main() -> Result<()> {
    let i = parse_ideal_file("ring x, y, z\nideal x^2, x y, y^3 z")?;
    println!("I          = {i}");
    println!("I^2        = {}", i.power(2)?);
    let j = parse_ideal_file("ring x, y, z\nideal y^2, z")?;
    println!("J          = {j}");
    println!("I J        = {}", i.product(&j)?);
    println!("I + J      = {}", i.sum(&j)?);
    println!("I cap J    = {}", i.intersect(&j)?);
    let w = parse_monomial_in(i.ring(), "x y")?;
    println!("I : x y    = {}", i.colon(&w)?);
    println!("x in rad I = {}", i.variable_in_radical("x")?);
    println!("z in rad I = {}", i.variable_in_radical("z")?);
    println!("I[z -> y]  = {}", i.identify_variables(&[("y", "z")])?);
    Ok(())
}
