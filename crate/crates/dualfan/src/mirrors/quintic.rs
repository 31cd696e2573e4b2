//! The quintic threefold and its Greene-Plesser mirror.
//!
//! Coordinates: `N = Z^4` with `u_0 = -(e_1 + ... + e_4)` and `u_i = e_i`,
//! `N-bar = N + Z`, and `M-bar` has coordinates `x = (mu, k)`. The character
//! `x` is the Laurent monomial `Y^e` with `e_i = <x, (u_i, 1)>`, so `Xi` is the
//! set of degree 5 monomials.

use std::collections::BTreeSet;

use num_traits::Zero;

use super::{duality_detail, Checks, MirrorReport, NamedPotential};
use crate::fans::{is_dual_pair, quotient_fan, Fan};
use crate::lattice::{annihilator_lattice, cokernel, dot_rat, LatticeMap};
use crate::poly::ParamPoly;
use crate::toric_lg::{
    apply_specialization, auxiliary_lg_from_ci, auxiliary_lg_from_potential, base_change_check, lg_from_dual_fans,
    Specialization, ToricDivisor,
};
use crate::{ivec, rat, Error, Int, IntVec, RatVec, Result};

/// The fan of `P^4` with rays `u_0, ..., u_4` in that order.
pub fn quintic_base_fan() -> Fan {
    let mut rays = vec![ivec(&[-1, -1, -1, -1])];
    for i in 0..4 {
        let mut e = vec![0i64; 4];
        e[i] = 1;
        rays.push(ivec(&e));
    }
    let cones = (0..5)
        .map(|skip| (0..5).filter(|&i| i != skip).collect())
        .collect();
    Fan::new(4, rays, cones).expect("P^4 fan")
}

/// Generators of the `(Z/5)^3` action as phases on `Y_0, ..., Y_4`.
pub fn quintic_phases() -> Vec<RatVec> {
    (1..4)
        .map(|i| {
            let mut g = vec![rat(0, 1); 5];
            g[i] = rat(1, 5);
            g[4] = rat(4, 5);
            g
        })
        .collect()
}

/// Rows are the lifted rays `(u_i, 1)`: `e = L x`.
fn exponent_map() -> LatticeMap {
    let y = quintic_base_fan();
    let rows = y
        .rays()
        .iter()
        .map(|u| {
            let mut r = u.clone();
            r.push(Int::from(1));
            r
        })
        .collect();
    LatticeMap::from_rows(5, rows).unwrap()
}

/// `N-bar -> M-bar`, `u_i -> Y_i^5 / Y_0...Y_4` and `(0, 1) -> Y_0...Y_4`.
fn identification() -> LatticeMap {
    LatticeMap::from_i64(
        5,
        &[
            &[4, -1, -1, -1, 0],
            &[-1, 4, -1, -1, 0],
            &[-1, -1, 4, -1, 0],
            &[-1, -1, -1, 4, 0],
            &[0, 0, 0, 0, 1],
        ],
    )
}

fn is_fermat_or_product(e: &[Int]) -> Option<bool> {
    if e.iter().all(|x| *x == Int::from(1)) {
        Some(false)
    } else if e.iter().filter(|x| !x.is_zero()).count() == 1 {
        Some(true)
    } else {
        None
    }
}

pub fn quintic_pipeline() -> Result<MirrorReport> {
    let mut checks = Checks::default();
    let y = quintic_base_fan();
    let d = ToricDivisor::from_i64(&[1, 1, 1, 1, 1]);
    let (aux, _) = auxiliary_lg_from_ci(&y, std::slice::from_ref(&d))?;
    let sigma_x = aux.fan.clone();
    let l = exponent_map();

    let mut expected = l.entries().to_vec();
    expected.push(ivec(&[0, 0, 0, 0, 1]));
    checks.add(
        "sigma_x_rays",
        sigma_x.rays() == expected.as_slice(),
        format!("{} rays", sigma_x.rays().len()),
    );
    checks.add("xi_count", aux.xi_count() == 126, format!("|Xi| = {}", aux.xi_count()));

    let lt = l.transpose();
    let phases: Vec<RatVec> = quintic_phases()
        .iter()
        .map(|g| (0..5).map(|j| dot_rat(&lt.row(j)[..], g)).collect())
        .collect();
    let a = annihilator_lattice(&phases, 5)?;
    let (raw, q) = quotient_fan(&sigma_x, &a.transpose())?;
    let five = Int::from(5);
    checks.add(
        "quotient_group",
        q.group.invariant_factors() == [five.clone(), five.clone(), five.clone()],
        format!("N-bar' / N-bar = {}", q.group),
    );

    let phi = identification();
    let c_rows = phi
        .columns()
        .iter()
        .map(|col| crate::lattice::solve_integer(&a, col))
        .collect::<Option<Vec<IntVec>>>()
        .ok_or_else(|| Error::CheckFailed("identification does not land in the invariant characters".into()))?;
    let c = LatticeMap::from_columns(5, &c_rows)?;
    checks.add(
        "identification_unimodular",
        c.is_unimodular(),
        "N-bar maps onto the invariant characters",
    );
    let sigma_x_prime = raw.map_by(&c.transpose())?;

    let invariant: Vec<IntVec> = aux
        .exponents
        .iter()
        .filter(|x| phases.iter().all(|g| dot_rat(x, g).is_integer()))
        .cloned()
        .collect();
    checks.add("xi_prime_count", invariant.len() == 6, format!("|Xi'| = {}", invariant.len()));
    let marked: BTreeSet<&IntVec> = sigma_x_prime.marked_generators().iter().collect();
    checks.add(
        "sigma_x_prime_generators_invariant",
        marked == invariant.iter().collect(),
        "ray generators of Sigma_X' are the invariant degree 5 monomials",
    );

    let duality = is_dual_pair(&sigma_x, &sigma_x_prime)?;
    checks.add("dual_fans", duality.verdict, duality_detail(&duality));
    let lg = lg_from_dual_fans(&sigma_x, &sigma_x_prime)?;
    checks.add(
        "lg_potential_terms",
        lg.exponents.len() == 6,
        format!("{} terms", lg.exponents.len()),
    );

    let m_prime = LatticeMap::from_rows(4, (0..4).map(|i| phi.row(i)[..4].to_vec()).collect())?;
    let (free, tors) = cokernel(&m_prime);
    checks.add(
        "m_prime_cokernel",
        free == 0 && tors.invariant_factors() == [five.clone(), five.clone(), five],
        format!("M / M' = Z^{free} + {tors}"),
    );

    let inclusion = base_change_check(&aux, &sigma_x_prime);
    checks.add(
        "gamma_prime_into_gamma",
        inclusion.verdict && inclusion.dropped == 120,
        format!("{} kept, {} dropped", inclusion.surviving.len(), inclusion.dropped),
    );
    let phi_inv = phi.inverse_rational()?;
    let xi_prime: Vec<IntVec> = invariant
        .iter()
        .map(|x| {
            phi_inv
                .iter()
                .map(|row| {
                    let v = dot_rat(x, row);
                    v.is_integer().then(|| v.to_integer())
                })
                .collect::<Option<IntVec>>()
        })
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::CheckFailed("invariant monomial outside the image of N-bar".into()))?;
    let aux_prime = auxiliary_lg_from_potential(&sigma_x_prime, &xi_prime)?;
    let inclusion_prime = base_change_check(&aux_prime, &sigma_x);
    checks.add(
        "c_sigma_x_iso_gamma_prime",
        inclusion_prime.verdict && inclusion_prime.is_isomorphism,
        format!("{} of {} coordinates", inclusion_prime.surviving.len(), xi_prime.len()),
    );
    checks.add(
        "ray_bijection",
        raw.rays().len() == sigma_x.rays().len() && raw.max_cones() == sigma_x.max_cones(),
        "C(Sigma_X') = C(Sigma_X)",
    );

    let psi = ParamPoly::monomial(Int::from(-5), "psi", 1);
    let mut spec = Specialization::default();
    for x in &aux.exponents {
        let e = l.apply(x)?;
        let g = match is_fermat_or_product(&e) {
            Some(true) => ParamPoly::from_i64(1),
            Some(false) => psi.clone(),
            None => ParamPoly::zero(),
        };
        spec.assignment.insert(x.clone(), g);
    }
    let w = apply_specialization(&aux, &spec)?;
    let kept: BTreeSet<&IntVec> = inclusion.surviving.iter().map(|&i| &aux.exponents[i]).collect();
    let mut spec_prime = Specialization::default();
    for (x, n) in invariant.iter().zip(&xi_prime) {
        spec_prime.assignment.insert(n.clone(), spec.assignment[x].clone());
    }
    let w_prime = apply_specialization(&aux_prime, &spec_prime)?;
    let pulled: Vec<(IntVec, ParamPoly)> = w_prime
        .iter()
        .map(|(n, g)| (phi.apply(n).unwrap(), g.clone()))
        .collect();
    let factors = w.len() == 6
        && w.iter().all(|(x, _)| kept.contains(x))
        && pulled.iter().collect::<BTreeSet<_>>() == w.iter().collect::<BTreeSet<_>>();
    checks.add(
        "psi_specialization_factors",
        factors,
        "Y_0^5 + ... + Y_4^5 - 5 psi Y_0...Y_4 lives on the coordinates of C(Sigma_X)",
    );

    Ok(MirrorReport {
        pipeline: "quintic".into(),
        sigma: sigma_x,
        sigma_prime: sigma_x_prime,
        duality,
        xi: aux.exponents.clone(),
        xi_prime,
        inclusion,
        inclusion_prime,
        groups: vec![("N-bar'/N-bar".into(), q.group), ("M/M'".into(), tors)],
        matrices: vec![
            ("exponents".into(), l),
            ("invariant_characters".into(), a),
            ("identification".into(), phi),
            ("C".into(), c),
            ("M'->M".into(), m_prime),
        ],
        potentials: vec![
            NamedPotential {
                name: "W".into(),
                terms: w,
            },
            NamedPotential {
                name: "W'".into(),
                terms: w_prime,
            },
        ],
        checks: checks.0,
        notes: vec![
            "characters x = (mu, k) correspond to monomials Y^e with e_i = <x, (u_i, 1)>".into(),
            "Sigma_X' is placed in M-bar through u_i -> Y_i^5 / Y_0...Y_4, (0, 1) -> Y_0...Y_4".into(),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pipeline_passes() {
        let r = quintic_pipeline().unwrap();
        assert!(r.all_passed(), "{:?}", r.failed_checks());
        assert_eq!(r.xi.len(), 126);
        assert_eq!(r.xi_prime.len(), 6);
    }
}
