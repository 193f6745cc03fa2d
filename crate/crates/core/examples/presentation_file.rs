//! Loading, inspecting and saving a `.pcp` presentation.
//!
//! cargo run --example presentation_file

use std::path::Path;

use pcgauss::{validate_inverse_tails, PcPresentation};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/heisenberg.pcp");
    let heis = PcPresentation::from_file(&path)?;
    println!("{} generators, relative orders {:?}", heis.n(), heis.orders());
    println!("g2^g1 = {:?}", heis.conjugate(2, 1).map(|t| t.entries().to_vec()));
    println!("order {}", heis.group_order());
    assert!(validate_inverse_tails(&heis).is_empty());

    // Written-out text parses back to the same presentation.
    let text = heis.to_pcp_string();
    print!("{text}");
    assert_eq!(PcPresentation::parse(&text)?, heis);

    // A conj tail pointing at a shallower generator is rejected.
    let bad = PcPresentation::parse("pcp 2\norders 2 2\nconj 2 1 1\n");
    println!("rejected: {}", bad.unwrap_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
