
use std::collections::BTreeMap;

use num_bigint::BigInt;
use pcgauss::{load_presentation, PcPresentation, Tail};
use proptest::prelude::*;

/// Random structurally valid presentations (not necessarily consistent).
fn presentation_strategy() -> impl Strategy<Value = PcPresentation> {
    prop::collection::vec(prop_oneof![Just(0u32), 2u32..6], 1..=4).prop_flat_map(|orders| {
        let n = orders.len();
        let tails = prop::collection::vec(prop::collection::vec(-3i64..=3, n), n * n);
        let mask = prop::collection::vec(any::<bool>(), n * n);
        (Just(orders), tails, mask)
    })
    .prop_map(|(orders, tails, mask)| {
        let n = orders.len();
        let orders: Vec<BigInt> = orders.into_iter().map(BigInt::from).collect();
        let tail = |above: usize, raw: &[i64]| {
            let entries = (above + 1..=n)
                .filter_map(|k| {
                    let r = &orders[k - 1];
                    let e = BigInt::from(raw[k - 1]);
                    let e = if *r > BigInt::from(0) { ((e % r) + r) % r } else { e };
                    (e != BigInt::from(0)).then_some((k, e))
                })
                .collect();
            Tail::new(entries).unwrap()
        };
        let mut conj = BTreeMap::new();
        let mut inv = BTreeMap::new();
        let mut powers = BTreeMap::new();
        for i in 1..=n {
            for j in 1..i {
                if mask[(i - 1) * n + (j - 1)] {
                    conj.insert((i, j), tail(j, &tails[(i - 1) * n + (j - 1)]));
                    if orders[j - 1] == BigInt::from(0) {
                        inv.insert((i, j), tail(j, &tails[(j - 1) * n + (i - 1)]));
                    }
                }
            }
            if orders[i - 1] > BigInt::from(0) && mask[(i - 1) * n + (i - 1)] {
                powers.insert(i, tail(i, &tails[(i - 1) * n + (i - 1)]));
            }
        }
        PcPresentation::new(orders, conj, inv, powers).unwrap()
    })
}

proptest! {
    #[test]
    fn save_then_load_is_identity(p in presentation_strategy()) {
        let text = p.to_pcp_string();
        let back = load_presentation(text.as_bytes()).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_pcp_string(), text);
    }

    #[test]
    fn corrupted_files_never_yield_invalid_presentations(p in presentation_strategy(), cut in 0usize..200, junk in "[ 0-9a-z^#\\-]{0,6}") {
        // Splice junk into a valid file; anything accepted must still satisfy
        // the structural rules, which `new` re-checks on rebuild.
        let mut text = p.to_pcp_string();
        let at = cut.min(text.len());
        text.insert_str(at, &junk);
        if let Ok(q) = PcPresentation::parse(&text) {
            let rebuilt = PcPresentation::new(
                q.orders().to_vec(),
                q.conjugates().clone(),
                q.inv_conjugates().clone(),
                q.powers().clone(),
            );
            prop_assert!(rebuilt.is_ok());
            for ((i, j), t) in q.conjugates() {
                prop_assert!(j < i);
                prop_assert!(t.entries().iter().all(|(k, _)| k > j));
            }
        }
    }

    #[test]
    fn out_of_range_tail_index_rejected(n in 2usize..5, i in 2usize..5) {
        let i = i.min(n);
        let j = i - 1;
        let text = format!("pcp {n}\norders {}\nconj {i} {j} {j}^1\n", vec!["0"; n].join(" "));
        prop_assert!(PcPresentation::parse(&text).is_err());
    }
}
