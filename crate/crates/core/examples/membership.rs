//! Subgroup membership by sifting through an igs.
//!
//! cargo run --example membership

use std::sync::Arc;

use pcgauss::{igs_by_generators, Element, PcPresentation};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let heis = Arc::new(PcPresentation::parse(
        "pcp 3\norders 0 0 0\nconj 2 1 2 3\ninvconj 2 1 2 3^-1\n",
    )?);
    let gens = [Element::parse(&heis, "g1^2")?, Element::parse(&heis, "g2^3")?];
    let igs = igs_by_generators(&heis, &gens)?;
    println!("U = <g1^2, g2^3>, igs {igs}");
    for w in ["g1^4*g2^-9", "g3^6", "g3^3", "g1^2*g2^3*g3^12", "g1"] {
        let x = Element::parse(&heis, w)?;
        let (rest, inside) = igs.sift(&x)?;
        println!("{w}: {} (sifts to {rest})", if inside { "member" } else { "not a member" });
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
