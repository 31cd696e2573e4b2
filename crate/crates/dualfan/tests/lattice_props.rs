mod common;

use common::*;
use dualfan::lattice::{annihilator_lattice, cokernel, kernel_basis, snf, LatticeMap};
use dualfan::{Int, IntVec};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn smith_form_contract(a in int_matrix()) {
        prop_assert_eq!(check_snf(&a), Ok(()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn kernel_is_saturated(a in int_matrix()) {
        let cols = a[0].len();
        let lm = LatticeMap::from_rows(cols, a.clone()).unwrap();
        let k = kernel_basis(&lm);
        let kcols = k.columns();
        let rank = rank_q(&a.iter().map(|r| to_q(r)).collect::<Vec<_>>(), cols);
        prop_assert_eq!(kcols.len(), cols - rank);
        for c in &kcols {
            prop_assert!(lm.apply(c).unwrap().iter().all(|x| x.is_zero()));
        }
        if !kcols.is_empty() {
            // gcd of the maximal minors is 1 exactly when the basis is saturated
            let rows: Vec<IntVec> = kcols.clone();
            prop_assert_eq!(determinantal_divisor(&rows, rows.len()), Int::from(1));
        }
    }

    #[test]
    fn cokernel_order_is_determinant(a in (1usize..=5).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-9i64..=9, n), n))) {
        let rows: Vec<IntVec> = a.iter().map(|r| dualfan::ivec(r)).collect();
        let d = det_q(&rows);
        prop_assume!(!d.is_zero());
        let (free, g) = cokernel(&LatticeMap::from_rows(rows.len(), rows).unwrap());
        prop_assert_eq!(free, 0);
        prop_assert_eq!(g.order(), d.abs());
    }

    #[test]
    fn annihilator_index_is_group_order((n, phases) in phase_sets()) {
        let a = annihilator_lattice(&phases, n).unwrap();
        prop_assert!(a.is_square());
        let index = det_q(a.entries()).abs();
        prop_assert_eq!(index, Int::from(subgroup_order(&phases)));
        for g in &phases {
            for col in a.columns() {
                let v: dualfan::Rat = col.iter().zip(g).map(|(x, q)| dualfan::Rat::from_integer(x.clone()) * q).sum();
                prop_assert!(v.is_integer());
            }
        }
    }
}

#[test]
fn snf_of_known_matrices() {
    let s = snf(&LatticeMap::from_i64(2, &[&[2, 4], &[6, 8]]));
    assert_eq!(s.diagonal(), vec![Int::from(2), Int::from(4)]);
    // the degree-zero block of the quintic identification
    let m = LatticeMap::from_i64(4, &[&[4, -1, -1, -1], &[-1, 4, -1, -1], &[-1, -1, 4, -1], &[-1, -1, -1, 4]]);
    let d = snf(&m).diagonal();
    assert_eq!(d, [1, 5, 5, 5].map(Int::from).to_vec());
}
