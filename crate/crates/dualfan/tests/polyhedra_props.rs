mod common;

use std::collections::BTreeSet;

use common::*;
use dualfan::fans::{is_complete, validate_fan};
use dualfan::polyhedra::{normal_fan, Cone, Polytope};
use dualfan::IntVec;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn dual_cone_matches_brute_force((n, gens) in cone_gens()) {
        prop_assert_eq!(check_dual_cone(&gens, n), Ok(()));
    }

    #[test]
    fn dual_of_dual_is_identity((n, gens) in cone_gens()) {
        prop_assert_eq!(check_dual_dual(&gens, n), Ok(()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lattice_points_match_grid_scan((n, pts) in polytope_points()) {
        prop_assert_eq!(check_lattice_points(&pts, n), Ok(()));
    }

    #[test]
    fn normal_fan_rays_are_facet_normals((n, pts) in polytope_points()) {
        let p = Polytope::from_points(n, &pts).unwrap();
        let facets = brute_facets(&pts, n);
        let interior = facets.iter().all(|(_, b)| *b < dualfan::Rat::from_integer(0.into()));
        prop_assume!(interior);
        let f = normal_fan(&p).unwrap();
        prop_assert!(validate_fan(&f).valid);
        prop_assert!(is_complete(&f));
        let want: BTreeSet<IntVec> = facets.iter().map(|(a, _)| primitive_q(a)).collect();
        let got: BTreeSet<IntVec> = f.rays().iter().cloned().collect();
        prop_assert_eq!(got, want);
    }
}

#[test]
fn simplicial_face_counts() {
    for d in 1..=4usize {
        let gens: Vec<IntVec> = (0..d)
            .map(|i| (0..d).map(|j| dualfan::Int::from(if i == j { 2 } else { (j > i) as i64 })).collect())
            .collect();
        let c = Cone::new(d, &gens).unwrap();
        assert_eq!(c.dim(), d);
        let faces = c.face_ray_sets().unwrap();
        for k in 0..=d {
            let count = faces.iter().filter(|(_, dim)| *dim == k).count();
            assert_eq!(count, subsets(d, k).len(), "k = {k}, d = {d}");
        }
    }
}
