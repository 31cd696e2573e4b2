mod common;

use common::*;
use dualfan::fans::{is_complete, is_smooth, product_fan, projective_space_fan, quotient_fan, validate_fan, Fan};
use dualfan::lattice::LatticeMap;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn smooth_complete_surfaces_pass_the_census(f in smooth_complete_2d()) {
        prop_assert!(validate_fan(&f).valid);
        prop_assert!(is_complete(&f));
        prop_assert!(is_smooth(&f));
        prop_assert_eq!(check_complete_census(&f), Ok(()));
    }

    #[test]
    fn products_pass_the_census(a in smooth_complete_2d(), b in smooth_complete_2d()) {
        prop_assume!(a.rays().len() + b.rays().len() <= 9);
        let f = product_fan(&a, &b);
        prop_assert!(is_complete(&f) && is_smooth(&f));
        prop_assert_eq!(check_complete_census(&f), Ok(()));
    }

    #[test]
    fn duality_is_symmetric((s, sp, _) in dual_pair()) {
        let a = dualfan::fans::is_dual_pair(&s, &sp).unwrap().verdict;
        let b = dualfan::fans::is_dual_pair(&sp, &s).unwrap().verdict;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn successful_quotients_are_fans(
        f in smooth_complete_2d(),
        q in prop::collection::vec(prop::collection::vec(-3i64..=3, 2), 2),
    ) {
        let rows: Vec<&[i64]> = q.iter().map(|r| r.as_slice()).collect();
        let q = LatticeMap::from_i64(2, &rows);
        if let Ok((g, data)) = quotient_fan(&f, &q) {
            prop_assert!(validate_fan(&g).valid);
            prop_assert_eq!(data.kernel_rank, 0);
        }
    }
}

#[test]
fn projective_spaces() {
    for n in 1..=6 {
        let f = projective_space_fan(n);
        assert!(is_complete(&f) && is_smooth(&f), "P^{n}");
        assert_eq!(f.max_cones().len(), n + 1);
        if n <= 4 {
            assert_eq!(check_complete_census(&f), Ok(()));
        }
    }
}

#[test]
fn non_complete_fan_is_flagged() {
    let f = Fan::new(2, dualfan::ivecs(&[&[1, 0], &[0, 1]]), vec![vec![0, 1]]).unwrap();
    assert!(!is_complete(&f));
}
