//! Desk-scale inputs shared by tests, the acceptance run and the CLI.

use crate::lattice::LatticeMap;
use crate::mirrors::{BHKInput, GiventalInput};
use crate::polyhedra::Cone;
use crate::toric_lg::ToricDivisor;
use crate::fans::{product_fan, projective_space_fan};
use crate::{ivec, ivecs, rat, IntVec, RatVec};

/// Cone over the reflexive triangle `(-1,-1), (2,-1), (-1,2)` at height 1,
/// with its unique splitting.
pub fn p2_anticanonical_cone() -> (Cone, Vec<IntVec>) {
    let k = Cone::new(3, &ivecs(&[&[-1, -1, 1], &[2, -1, 1], &[-1, 2, 1]])).unwrap();
    (k, vec![ivec(&[0, 0, 1])])
}

/// Cayley cone of the two segments of the square: generated by
/// `(+-1, 0, 1, 0)` and `(0, +-1, 0, 1)`, split by the last two unit vectors.
pub fn square_cayley_cone() -> (Cone, Vec<IntVec>) {
    let k = Cone::new(
        4,
        &ivecs(&[&[1, 0, 1, 0], &[-1, 0, 1, 0], &[0, 1, 0, 1], &[0, -1, 0, 1]]),
    )
    .unwrap();
    (k, ivecs(&[&[0, 0, 1, 0], &[0, 0, 0, 1]]))
}

/// `2` on the diagonal and `1` just below it, cyclically: the exponent
/// matrix of `x1^2 x2 + x2^2 x3 + x3^2 x4 + x4^2 x1`. Determinant 15.
pub fn loop_matrix() -> LatticeMap {
    LatticeMap::from_i64(
        4,
        &[&[2, 0, 0, 1], &[1, 2, 0, 0], &[0, 1, 2, 0], &[0, 0, 1, 2]],
    )
}

/// BHK inputs with trivial, full and (where one exists) intermediate `Q`.
pub fn bhk_suite() -> Vec<(String, BHKInput)> {
    let mut out = Vec::new();
    let mut push = |name: &str, p: &LatticeMap, q: Vec<RatVec>| {
        out.push((name.to_string(), BHKInput::new(p.clone(), q).unwrap()));
    };
    let full = |p: &LatticeMap| -> Vec<RatVec> { p.inverse_rational().unwrap() };
    let id = LatticeMap::identity(3);
    push("identity3/trivial", &id, vec![]);
    push("identity3/full", &id, full(&id));
    let d3 = LatticeMap::from_i64(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]]);
    push("diag333/trivial", &d3, vec![]);
    push("diag333/full", &d3, full(&d3));
    push("diag333/diagonal", &d3, vec![vec![rat(1, 3), rat(1, 3), rat(1, 3)]]);
    let two = LatticeMap::from_i64(2, &[&[2, 1], &[1, 2]]);
    push("2x2/trivial", &two, vec![]);
    push("2x2/full", &two, full(&two));
    let lp = loop_matrix();
    push("loop4/trivial", &lp, vec![]);
    push("loop4/full", &lp, full(&lp));
    // S_P is cyclic of order 15; five times its generator spans the subgroup of order 3
    let s_p = crate::mirrors::phase_symmetries(&lp).unwrap();
    let gen = match s_p.generators() {
        crate::lattice::GroupGenerators::Phases(g) => g[0].clone(),
        crate::lattice::GroupGenerators::Classes(_) => unreachable!("phase symmetries carry phases"),
    };
    let five: RatVec = gen.iter().map(|x| x * crate::Rat::from_integer(5.into())).collect();
    push("loop4/order3", &lp, vec![crate::lattice::normalize_phase(&five)]);
    out
}

/// `(P^1, O(2))`, `(P^2, O(3))` and `(P^1 x P^1, O(2,0) + O(0,2))`.
pub fn givental_suite() -> Vec<(String, GiventalInput)> {
    let p1 = projective_space_fan(1);
    let p2 = projective_space_fan(2);
    let sq = product_fan(&p1, &p1);
    vec![
        (
            "P1/O(2)".into(),
            GiventalInput::new(p1, vec![ToricDivisor::from_i64(&[1, 1])], None).unwrap(),
        ),
        (
            "P2/O(3)".into(),
            GiventalInput::new(p2, vec![ToricDivisor::from_i64(&[1, 1, 1])], None).unwrap(),
        ),
        (
            "P1xP1/O(2,0)+O(0,2)".into(),
            GiventalInput::new(
                sq,
                vec![ToricDivisor::from_i64(&[1, 1, 0, 0]), ToricDivisor::from_i64(&[0, 0, 1, 1])],
                None,
            )
            .unwrap(),
        ),
    ]
}
