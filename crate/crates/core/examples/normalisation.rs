//! Depth, leading exponent, relative order and normalisation of elements.
//!
//! cargo run --example normalisation

use std::sync::Arc;

use pcgauss::{Element, PcPresentation};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    // 4 has no inverse mod 6, but g^4 still normalises to g^2.
    let z6 = Arc::new(PcPresentation::cyclic(6)?);
    let a = Element::parse(&z6, "g1^4")?;
    let s = a.stats();
    println!(
        "Z/6: {a}  depth {} lead {:?} relorder {:?} -> {}",
        s.depth,
        s.leading_exponent,
        s.relative_order.map(|r| r.to_string()),
        a.normalise()?
    );

    let z2 = Arc::new(PcPresentation::free_abelian(2)?);
    let b = Element::from_i64s(&z2, &[0, -7])?;
    println!("Z^2: {b} -> {}", b.normalise()?);

    let d8 = Arc::new(PcPresentation::parse("pcp 3\norders 2 2 2\nconj 2 1 2 3\npower 2 3\n")?);
    for w in ["g1*g2", "g2*g3", "g3", "1"] {
        let x = Element::parse(&d8, w)?;
        match x.normalise() {
            Ok(h) => println!("D8: {x} depth {} normalised {}", x.depth(), h),
            Err(e) => println!("D8: {x} depth {}: {e}", x.depth()),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
