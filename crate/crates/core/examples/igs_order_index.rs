//! Induced generating sequences, subgroup order and index.
//!
//! cargo run --example igs_order_index

use std::path::Path;
use std::sync::Arc;

use pcgauss::{add_gen_to_pigs, igs_by_generators, Element, PartialIgs, PcPresentation};

fn load(name: &str) -> Result<Arc<PcPresentation>, pcgauss::Error> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name);
    Ok(Arc::new(PcPresentation::from_file(path)?))
}

fn show(pres: &Arc<PcPresentation>, label: &str, words: &[&str]) -> Result<(), Box<dyn std::error::Error>> {
    let gens = words.iter().map(|w| Element::parse(pres, w)).collect::<Result<Vec<_>, _>>()?;
    let igs = igs_by_generators(pres, &gens)?;
    assert!(igs.verify());
    println!("{label} <{}>: igs {igs}, order {}, index {}", words.join(", "), igs.order(), igs.index());
    Ok(())
}

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let s4 = load("s4.pcp")?;
    show(&s4, "S4", &["g2"])?;
    show(&s4, "S4", &["g1", "g3"])?;

    let heis = load("heisenberg.pcp")?;
    show(&heis, "Heisenberg", &["g1^2", "g2", "g3"])?;
    show(&heis, "Heisenberg", &["g1^2", "g2^3"])?;
    show(&heis, "Heisenberg", &["g3^5"])?;

    let dinf = load("infdihedral.pcp")?;
    show(&dinf, "D_inf", &["g1*g2", "g1*g2^-1"])?;

    // Growing a partial igs one generator at a time; the returned depths are
    // the slots that changed.
    let z2 = Arc::new(PcPresentation::free_abelian(2)?);
    let mut pigs = PartialIgs::new(&z2);
    for v in [[4, 6], [6, 9], [0, 4]] {
        let (next, changed) = add_gen_to_pigs(&pigs, &Element::from_i64s(&z2, &v)?)?;
        println!("Z^2 add {v:?}: changed {changed:?}, now {}", next.to_igs());
        pigs = next;
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
