#![allow(dead_code)]

use std::collections::HashSet;
use std::path::PathBuf;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use pcgauss::oracle::{enumerate_subgroup, DEFAULT_ENUMERATION_BOUND};
use pcgauss::{Element, PcPresentation, Word};
use rand::Rng;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

pub fn load(name: &str) -> Arc<PcPresentation> {
    Arc::new(PcPresentation::from_file(data_path(name)).unwrap())
}

pub struct Group {
    pub name: String,
    pub pres: Arc<PcPresentation>,
}

/// Z/2 .. Z/12 on one generator plus the multi-generator finite groups.
pub fn finite_corpus() -> Vec<Group> {
    let mut groups: Vec<Group> = (2..=12)
        .map(|m| Group { name: format!("Z/{m}"), pres: Arc::new(PcPresentation::cyclic(m).unwrap()) })
        .collect();
    for file in ["d8", "q8", "he3", "s4", "s3", "z8", "z12"] {
        groups.push(Group { name: file.to_string(), pres: load(&format!("{file}.pcp")) });
    }
    groups
}

pub fn infinite_corpus() -> Vec<Group> {
    ["z2", "z3", "heisenberg", "infdihedral", "swap"]
        .iter()
        .map(|f| Group { name: f.to_string(), pres: load(&format!("{f}.pcp")) })
        .collect()
}

/// Uniform element of a finite group; exponents in `-spread..=spread` at
/// infinite positions.
pub fn random_element<R: Rng>(rng: &mut R, pres: &Arc<PcPresentation>, spread: i64) -> Element {
    let exps = pres
        .orders()
        .iter()
        .map(|r| {
            if r.is_zero() {
                BigInt::from(rng.gen_range(-spread..=spread))
            } else {
                BigInt::from(rng.gen_range(0..r.to_i64().unwrap()))
            }
        })
        .collect();
    Element::from_exponents(pres, exps).unwrap()
}

pub fn random_nontrivial<R: Rng>(rng: &mut R, pres: &Arc<PcPresentation>, spread: i64) -> Element {
    loop {
        let g = random_element(rng, pres, spread);
        if !g.is_identity() {
            return g;
        }
    }
}

pub fn random_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::new(
        (0..len)
            .map(|_| (rng.gen_range(1..=n), BigInt::from(rng.gen_range(-4..=4))))
            .collect(),
    )
}

pub fn concat(u: &Word, v: &Word) -> Word {
    Word::new(u.entries().iter().chain(v.entries()).cloned().collect())
}

pub fn enumerate(pres: &Arc<PcPresentation>, gens: &[Element]) -> HashSet<Element> {
    enumerate_subgroup(pres, gens, DEFAULT_ENUMERATION_BOUND).unwrap()
}

/// `<g_d, ..., g_n>` as elements (1-based `d`).
pub fn series_gens(pres: &Arc<PcPresentation>, d: usize) -> Vec<Element> {
    (d..=pres.n()).map(|i| Element::generator(pres, i).unwrap()).collect()
}

/// Brute-force igs test on a finite group, straight from the definition:
/// depths strictly increase and, for every d, `G_d ∩ U` equals
/// `<u_i, ..., u_m>` for the first `u_i` of depth at least d.
pub fn oracle_is_igs(pres: &Arc<PcPresentation>, list: &[Element]) -> bool {
    if list.windows(2).any(|w| w[0].depth() >= w[1].depth()) {
        return false;
    }
    let whole = enumerate(pres, list);
    for d in 1..=pres.n() + 1 {
        let meet: HashSet<Element> = whole.iter().filter(|x| x.depth() >= d).cloned().collect();
        let start = list.iter().position(|u| u.depth() >= d).unwrap_or(list.len());
        if meet != enumerate(pres, &list[start..]) {
            return false;
        }
    }
    true
}

pub fn exps_i64(g: &Element) -> Vec<i64> {
    g.exponents().iter().map(|x| x.to_i64().unwrap()).collect()
}
