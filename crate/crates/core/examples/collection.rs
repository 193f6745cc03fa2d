//! Collecting words to normal form, and arithmetic on elements.
//!
//! cargo run --example collection

use std::sync::Arc;

use pcgauss::{collect, Element, PcPresentation, Word};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let d8 = Arc::new(PcPresentation::parse("pcp 3\norders 2 2 2\nconj 2 1 2 3\npower 2 3\n")?);
    let w: Word = "g2*g1".parse()?;
    let x = collect(&d8, &w)?;
    println!("D8: {w} = {x}");
    assert_eq!(x.to_string(), "g1*g2*g3");

    let g1 = Element::generator(&d8, 1)?;
    let g2 = Element::generator(&d8, 2)?;
    println!("[g2, g1] = {}", g2.commutator(&g1)?);
    println!("g2^g1 = {}", g2.conjugate(&g1)?);
    println!("(g1*g2)^-1 = {}", g1.multiply(&g2)?.inverse());

    // Exponents are arbitrary precision; large powers cost O(log e).
    let heis = Arc::new(PcPresentation::parse(
        "pcp 3\norders 0 0 0\nconj 2 1 2 3\ninvconj 2 1 2 3^-1\n",
    )?);
    let y = Element::parse(&heis, "g2^123456789*g1^-987654321")?;
    println!("Heisenberg: {y}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
