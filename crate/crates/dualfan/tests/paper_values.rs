mod common;

use std::collections::BTreeSet;

use common::*;
use dualfan::fixtures::{bhk_suite, givental_suite, p2_anticanonical_cone, square_cayley_cone};
use dualfan::mirrors::{bb_mirror_pair, bhk_pair, givental_mirror, hori_vafa_mirror, quintic_pipeline};
use dualfan::poly::ParamPoly;
use dualfan::{ivec, Int, IntVec};
use num_traits::{Signed, Zero};

/// All exponent vectors of degree `d` monomials in `k` variables.
fn monomials(k: usize, d: i64) -> BTreeSet<IntVec> {
    let mut out = BTreeSet::new();
    let mut e = vec![0i64; k];
    loop {
        if e.iter().sum::<i64>() == d {
            out.insert(ivec(&e));
        }
        let mut i = 0;
        while i < k {
            e[i] += 1;
            if e[i] <= d {
                break;
            }
            e[i] = 0;
            i += 1;
        }
        if i == k {
            return out;
        }
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

fn as_monomials(report: &dualfan::mirrors::MirrorReport, xs: &[IntVec]) -> BTreeSet<IntVec> {
    let l = report.matrix("exponents").unwrap();
    xs.iter().map(|x| l.apply(x).unwrap()).collect()
}

#[test]
fn quintic_sections_are_the_degree_five_monomials() {
    let r = quintic_pipeline().unwrap();
    let all = monomials(5, 5);
    assert_eq!(all.len() as u64, binomial(9, 4));
    assert_eq!(all.len(), 126);
    assert_eq!(as_monomials(&r, &r.xi), all);
}

#[test]
fn quintic_mirror_generators_are_the_invariant_monomials() {
    let r = quintic_pipeline().unwrap();
    // the phases force e_1 = e_2 = e_3 = e_4 mod 5
    let invariant: BTreeSet<IntVec> = monomials(5, 5)
        .into_iter()
        .filter(|e| (2..5).all(|i| ((&e[i] - &e[1]) % Int::from(5)).is_zero()))
        .collect();
    assert_eq!(invariant.len(), 6);
    assert_eq!(as_monomials(&r, r.sigma_prime.marked_generators()), invariant);
    let mut fermat: BTreeSet<IntVec> = (0..5)
        .map(|i| (0..5).map(|j| Int::from(if i == j { 5 } else { 0 })).collect())
        .collect();
    fermat.insert(ivec(&[1, 1, 1, 1, 1]));
    assert_eq!(invariant, fermat);
}

#[test]
fn quintic_bundle_fan_rays() {
    let r = quintic_pipeline().unwrap();
    let want = dualfan::ivecs(&[
        &[-1, -1, -1, -1, 1],
        &[1, 0, 0, 0, 1],
        &[0, 1, 0, 0, 1],
        &[0, 0, 1, 0, 1],
        &[0, 0, 0, 1, 1],
        &[0, 0, 0, 0, 1],
    ]);
    assert_eq!(r.sigma.rays(), want.as_slice());
    // every maximal cone omits exactly one lifted ray and keeps (0, 1)
    assert_eq!(r.sigma.max_cones().len(), 5);
    for c in r.sigma.max_cones() {
        assert_eq!(c.len(), 5);
        assert!(c.contains(&5));
    }
}

#[test]
fn quintic_character_quotient_is_five_torsion() {
    let r = quintic_pipeline().unwrap();
    let m = r.matrix("M'->M").unwrap().entries().to_vec();
    assert_eq!(det_q(&m), Int::from(125));
    // exponent 5: every adjugate entry is divisible by 125 / 5
    for i in 0..4 {
        for j in 0..4 {
            let minor: Vec<IntVec> = (0..4)
                .filter(|&a| a != i)
                .map(|a| (0..4).filter(|&b| b != j).map(|b| m[a][b].clone()).collect())
                .collect();
            assert!((det_q(&minor) % Int::from(25)).is_zero());
        }
    }
    assert_eq!(r.group("M/M'").unwrap().invariant_factors(), [5, 5, 5].map(Int::from));
}

#[test]
fn quintic_psi_family() {
    let r = quintic_pipeline().unwrap();
    let w = &r.potential("W").unwrap().terms;
    assert_eq!(w.len(), 6);
    let l = r.matrix("exponents").unwrap();
    for (x, c) in w {
        let e = l.apply(x).unwrap();
        if e == ivec(&[1, 1, 1, 1, 1]) {
            assert_eq!(*c, ParamPoly::monomial(Int::from(-5), "psi", 1));
        } else {
            assert_eq!(*c, ParamPoly::from_i64(1));
            assert_eq!(e.iter().filter(|x| !x.is_zero()).count(), 1);
        }
    }
    assert_eq!(r.inclusion.dropped, 120);
    assert!(r.inclusion_prime.is_isomorphism);
}

#[test]
fn bhk_examples() {
    for (name, inp) in bhk_suite() {
        let r = bhk_pair(&inp).unwrap();
        let p = inp.p.clone();
        let det = det_q(p.entries()).abs();
        let q = r.group("Q_P").unwrap().order();
        let qt = r.group("Q_P^t").unwrap().order();
        assert_eq!(q * qt, det, "{name}");
        assert_eq!(r.matrix("pairing").unwrap().entries(), p.entries(), "{name}");
        assert_eq!(Int::from(subgroup_order(&inp.q)), r.group("Q_P").unwrap().order(), "{name}");
    }
}

#[test]
fn batyrev_borisov_fixtures() {
    let (k, e) = p2_anticanonical_cone();
    let r = bb_mirror_pair(&k, None, &e, None, 3).unwrap();
    assert!(r.all_passed(), "{:?}", r.failed_checks());
    // the cubic: ten sections on one side, the three coordinates plus the vertical ray on the other
    assert_eq!(r.xi.len(), 10);
    assert_eq!(r.sigma.rays().len(), 4);
    assert!(r.passed("divisor_0_cartier") && r.passed("dual_divisor_0_cartier"));

    let (k, e) = square_cayley_cone();
    let r = bb_mirror_pair(&k, None, &e, None, 3).unwrap();
    assert!(r.all_passed(), "{:?}", r.failed_checks());
    for name in ["polar_is_hull_of_nablas", "support_is_dual_cone", "rays_are_vertices_and_splitting", "summand_partition"] {
        assert!(r.passed(name), "{name}");
    }
}

#[test]
fn givental_shape_and_signs() {
    for (name, inp) in givental_suite() {
        let r = givental_mirror(&inp).unwrap();
        let n = inp.fan.rank();
        for ray in r.sigma_prime.rays() {
            let tail = &ray[n..];
            assert_eq!(tail.iter().filter(|x| **x == Int::from(1)).count(), 1, "{name}");
            assert_eq!(tail.iter().filter(|x| x.is_zero()).count(), tail.len() - 1, "{name}");
        }
        assert!(r.inclusion_prime.is_isomorphism, "{name}");
    }
    let suite = givental_suite();
    let at_one = |p: &ParamPoly| -> i64 {
        let s: Int = p.terms().values().sum();
        i64::try_from(s).unwrap()
    };
    let p1 = &suite[0].1;
    let g = givental_mirror(p1).unwrap();
    let hv = hori_vafa_mirror(p1).unwrap();
    let mut gc: Vec<i64> = g.potential("W'_givental").unwrap().terms.iter().map(|(_, c)| at_one(c)).collect();
    gc.sort();
    assert_eq!(gc, vec![-1, -1, 1]);
    let hc: Vec<i64> = hv.potential("W'_hori_vafa").unwrap().terms.iter().map(|(_, c)| at_one(c)).collect();
    assert_eq!(hc, vec![-1, -1, -1]);
    let p2 = hori_vafa_mirror(&suite[1].1).unwrap();
    let c: Vec<i64> = p2.potential("W'_hori_vafa").unwrap().terms.iter().map(|(_, c)| at_one(c)).collect();
    assert_eq!(c, vec![-1; 4]);
}
