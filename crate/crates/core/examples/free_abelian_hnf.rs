//! In Z^n the canonical igs is the Hermite normal form of the generators.
//!
//! cargo run --example free_abelian_hnf

use std::sync::Arc;

use num_bigint::BigInt;
use pcgauss::oracle::hermite_normal_form;
use pcgauss::{igs_by_generators, Element, PcPresentation};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let rows: Vec<Vec<BigInt>> = [[6, -4, 10], [3, 2, -5], [0, 8, 4]]
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let z3 = Arc::new(PcPresentation::free_abelian(3)?);
    let gens = rows
        .iter()
        .map(|r| Element::from_exponents(&z3, r.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    let igs = igs_by_generators(&z3, &gens)?.canonical();
    let hnf = hermite_normal_form(&rows, 3);

    for (u, h) in igs.gens().iter().zip(&hnf.rows) {
        println!("{:?}   {:?}", u.exponents(), h);
    }
    println!("index {} (HNF: {})", igs.index(), hnf.lattice_index(3));
    let canon: Vec<&[BigInt]> = igs.gens().iter().map(|u| u.exponents()).collect();
    assert_eq!(canon, hnf.rows.iter().map(Vec::as_slice).collect::<Vec<_>>());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
