mod common;

use common::*;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use pcgauss::oracle::{hermite_normal_form, mat_mul};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn matrix_strategy() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..=4, 0usize..=4).prop_flat_map(|(cols, rows)| {
        (Just(cols), prop::collection::vec(prop::collection::vec(-12i64..=12, cols), rows))
    })
}

fn big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

proptest! {
    #[test]
    fn hnf_is_reduced_echelon((cols, m) in matrix_strategy()) {
        let h = hermite_normal_form(&big(&m), cols);
        for (i, (row, &c)) in h.rows.iter().zip(&h.pivot_cols).enumerate() {
            prop_assert!(row[..c].iter().all(Zero::is_zero));
            prop_assert!(row[c] > BigInt::zero());
            for above in &h.rows[..i] {
                prop_assert!(above[c] >= BigInt::zero() && above[c] < row[c]);
            }
        }
        prop_assert!(h.pivot_cols.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn hnf_preserves_row_space((cols, m) in matrix_strategy()) {
        let m = big(&m);
        let h = hermite_normal_form(&m, cols);
        // H ⊆ rowspace(M): U * M reproduces H followed by zero rows.
        let um = mat_mul(&h.transform, &m, cols);
        prop_assert_eq!(&um[..h.rank()], &h.rows[..]);
        prop_assert!(um[h.rank()..].iter().all(|r| r.iter().all(Zero::is_zero)));
        // M ⊆ rowspace(H) by back-substitution.
        for row in &m {
            prop_assert!(h.contains(row));
        }
    }

    #[test]
    fn hnf_is_idempotent((cols, m) in matrix_strategy()) {
        let h = hermite_normal_form(&big(&m), cols);
        let again = hermite_normal_form(&h.rows, cols);
        prop_assert_eq!(again.rows, h.rows);
    }

    #[test]
    fn enumerated_subgroups_obey_lagrange(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        for g in finite_corpus() {
            let k = rng.gen_range(0..=2);
            let gens: Vec<_> = (0..k).map(|_| random_element(&mut rng, &g.pres, 0)).collect();
            let size = enumerate(&g.pres, &gens).len();
            let order = g.pres.group_order().finite().unwrap().clone();
            prop_assert!(BigInt::from(order).is_multiple_of(&BigInt::from(size)));
        }
    }
}
