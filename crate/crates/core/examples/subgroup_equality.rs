//! Deciding subgroup equality through canonical igs.
//!
//! cargo run --example subgroup_equality

use std::sync::Arc;

use pcgauss::{igs_by_generators, subgroups_equal, Element, PcPresentation};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let d8 = Arc::new(PcPresentation::parse("pcp 3\norders 2 2 2\nconj 2 1 2 3\npower 2 3\n")?);
    let el = |w: &str| Element::parse(&d8, w);

    let u = [el("g2")?];
    let v = [el("g2*g3")?, el("g3")?];
    let w = [el("g1")?, el("g3")?];
    println!("<g2> == <g2*g3, g3>: {}", subgroups_equal(&d8, &u, &v)?);
    println!("<g2> == <g1, g3>: {}", subgroups_equal(&d8, &u, &w)?);

    // Different generating sets, same canonical igs.
    let a = igs_by_generators(&d8, &v)?.canonical();
    let b = igs_by_generators(&d8, &u)?.canonical();
    println!("canonical: {a} and {b}");
    assert_eq!(a, b);

    let z2 = Arc::new(PcPresentation::free_abelian(2)?);
    let p = [Element::from_i64s(&z2, &[2, 2])?, Element::from_i64s(&z2, &[0, 3])?];
    let q = [Element::from_i64s(&z2, &[2, 5])?, Element::from_i64s(&z2, &[4, 7])?];
    println!("Z^2 lattices equal: {}", subgroups_equal(&z2, &p, &q)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
