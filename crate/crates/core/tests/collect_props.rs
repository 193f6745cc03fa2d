mod common;

use common::*;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use pcgauss::{collect, Cardinal, Element};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn all_groups() -> Vec<Group> {
    let mut g = finite_corpus();
    g.extend(infinite_corpus());
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn collect_is_a_homomorphism(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        for g in all_groups() {
            let n = g.pres.n();
            let u = random_word(&mut rng, n, 6);
            let v = random_word(&mut rng, n, 6);
            let cu = collect(&g.pres, &u).unwrap();
            let cv = collect(&g.pres, &v).unwrap();
            prop_assert_eq!(collect(&g.pres, &concat(&u, &v)).unwrap(), cu.multiply(&cv).unwrap(), "{}", g.name);
            prop_assert_eq!(collect(&g.pres, &cu.to_word()).unwrap(), cu, "{}", g.name);
        }
    }

    #[test]
    fn multiplication_is_associative(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        for g in all_groups() {
            let [a, b, c] = [0; 3].map(|_| random_element(&mut rng, &g.pres, 9));
            let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
            let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right, "{}", g.name);
        }
    }

    #[test]
    fn inverse_power_and_commutator(seed in any::<u64>(), k in -12i64..12) {
        let mut rng = StdRng::seed_from_u64(seed);
        for g in all_groups() {
            let a = random_element(&mut rng, &g.pres, 9);
            let b = random_element(&mut rng, &g.pres, 9);
            prop_assert!(a.multiply(&a.inverse()).unwrap().is_identity());
            // a^k by repeated multiplication
            let mut naive = Element::identity(&g.pres);
            let step = if k < 0 { a.inverse() } else { a.clone() };
            for _ in 0..k.abs() {
                naive = naive.multiply(&step).unwrap();
            }
            prop_assert_eq!(a.pow_i64(k), naive);
            let comm = a.inverse().multiply(&b.inverse()).unwrap().multiply(&a).unwrap().multiply(&b).unwrap();
            prop_assert_eq!(a.commutator(&b).unwrap(), comm);
            prop_assert_eq!(a.conjugate(&b).unwrap(), b.inverse().multiply(&a).unwrap().multiply(&b).unwrap());
        }
    }

    #[test]
    fn normalise_contract(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        for g in all_groups() {
            let a = random_nontrivial(&mut rng, &g.pres, 15);
            let h = a.normalise().unwrap();
            let d = a.depth();
            prop_assert_eq!(h.depth(), d);
            let (la, lh) = (a.leading_exponent().unwrap(), h.leading_exponent().unwrap());
            prop_assert!(la.is_multiple_of(lh));
            prop_assert!(lh.is_positive());
            let r = g.pres.relative_order(d);
            if r.is_zero() {
                prop_assert_eq!(lh, &la.abs());
            } else {
                prop_assert_eq!(lh, &la.gcd(r));
                prop_assert!(r.is_multiple_of(lh));
            }
            if g.pres.is_finite() {
                let below = series_gens(&g.pres, d + 1);
                let mut with_a = below.clone();
                with_a.push(a.clone());
                let mut with_h = below;
                with_h.push(h.clone());
                prop_assert_eq!(enumerate(&g.pres, &with_a), enumerate(&g.pres, &with_h));
            }
        }
    }

    #[test]
    fn power_by_relative_order_gets_deeper(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        for g in all_groups() {
            let a = random_nontrivial(&mut rng, &g.pres, 15);
            if let Some(Cardinal::Finite(r)) = a.relative_order() {
                prop_assert!(a.pow(&BigInt::from(r)).depth() > a.depth());
            }
        }
    }
}

#[test]
fn relative_order_matches_brute_force() {
    for g in finite_corpus() {
        for a in pcgauss::oracle::FiniteGroupTable::new(&g.pres, 4096).unwrap().elements() {
            let Some(Cardinal::Finite(r)) = a.relative_order() else {
                assert!(a.is_identity());
                continue;
            };
            // least k > 0 with a^k deeper than a
            let mut k = 1u32;
            let mut x = a.clone();
            while x.depth() == a.depth() {
                x = x.multiply(a).unwrap();
                k += 1;
            }
            assert_eq!(BigInt::from(r), BigInt::from(k), "{} {a}", g.name);
        }
    }
}

#[test]
fn finite_corpus_is_consistent() {
    // Every normal form is a distinct element and multiplication is a group law.
    for g in finite_corpus() {
        let table = pcgauss::oracle::FiniteGroupTable::new(&g.pres, 4096).unwrap();
        let all = table.elements();
        let whole = enumerate(&g.pres, &series_gens(&g.pres, 1));
        assert_eq!(whole.len(), all.len(), "{}", g.name);
        if all.len() <= 27 {
            for a in all {
                for b in all {
                    for c in all.iter().step_by(3) {
                        let l = a.multiply(b).unwrap().multiply(c).unwrap();
                        let r = a.multiply(&b.multiply(c).unwrap()).unwrap();
                        assert_eq!(l, r, "{}", g.name);
                    }
                }
            }
        }
    }
}

#[test]
fn normalise_regression_lead_four_mod_six() {
    let z6 = std::sync::Arc::new(pcgauss::PcPresentation::cyclic(6).unwrap());
    let a = Element::parse(&z6, "g1^4").unwrap();
    let h = a.normalise().unwrap();
    assert_eq!(exps_i64(&h), [2]);
    assert_eq!(enumerate(&z6, &[a]), enumerate(&z6, &[h]));
}
