//! Givental and Hori-Vafa mirrors of a complete intersection in a smooth
//! complete toric variety `Y`, cut out by sections of basepoint-free line
//! bundles `L_a = O(D_a)`.
//!
//! `Sigma_X` is the fan of the split bundle in `N-bar = N_Y + Z^l`. The mirror
//! `X'` is the affine toric variety of the cone `K` spanned by the characters
//! `mu + e_a`, `mu` in the section polytope of `L_a`. The class group basis
//! `p_i` is the classes of the rays outside a maximal cone, so the map `s` of
//! the graph construction is the identity in that basis and the coefficient
//! of the `i`-th basis ray in `W'` is `-q_i^{-1}`.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use super::{duality_detail, Checks, MirrorReport, NamedPotential};
use crate::fans::{is_complete, is_dual_pair, is_smooth, validate_fan, Fan};
use crate::lattice::{dot, hnf, LatticeMap};
use crate::poly::ParamPoly;
use crate::polyhedra::Cone;
use crate::toric_lg::{
    apply_specialization, auxiliary_lg_from_ci, auxiliary_lg_from_potential, base_change_check, is_cartier,
    Specialization, ToricDivisor,
};
use crate::{Error, Int, IntVec, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GiventalInput {
    pub fan: Fan,
    pub bundles: Vec<ToricDivisor>,
    /// Rays whose divisor classes form the class-group basis.
    pub basis_rays: Option<Vec<usize>>,
}

fn is_basepoint_free(y: &Fan, d: &ToricDivisor) -> bool {
    let Some(cd) = is_cartier(y, d) else {
        return false;
    };
    cd.m.iter().all(|m| {
        y.rays()
            .iter()
            .zip(d.coeffs())
            .all(|(u, a)| !(a - dot(m, u)).is_negative())
    })
}

impl GiventalInput {
    pub fn new(fan: Fan, bundles: Vec<ToricDivisor>, basis_rays: Option<Vec<usize>>) -> Result<Self> {
        let v = validate_fan(&fan);
        if !v.valid {
            return Err(Error::Invalid(format!("base fan is invalid: {}", v.diagnostics.join("; "))));
        }
        if !is_complete(&fan) {
            return Err(Error::NotComplete);
        }
        if !is_smooth(&fan) {
            return Err(Error::Invalid("base fan is not smooth".into()));
        }
        if bundles.is_empty() {
            return Err(Error::Invalid("at least one bundle is required".into()));
        }
        let k = fan.rays().len();
        for (a, d) in bundles.iter().enumerate() {
            if d.coeffs().len() != k {
                return Err(Error::Dimension(format!("bundle {a} has {} coefficients for {k} rays", d.coeffs().len())));
            }
            if !is_basepoint_free(&fan, d) {
                return Err(Error::Invalid(format!("bundle {a} is not basepoint free")));
            }
        }
        let rest: IntVec = (0..k)
            .map(|r| Int::one() - bundles.iter().map(|d| &d.coeffs()[r]).sum::<Int>())
            .collect();
        if !is_basepoint_free(&fan, &ToricDivisor::new(rest)) {
            return Err(Error::Invalid(
                "anticanonical class minus the bundles is not basepoint free".into(),
            ));
        }
        if let Some(b) = &basis_rays {
            if class_coordinates(&fan, b).is_none() {
                return Err(Error::Invalid(format!("rays {b:?} do not give a class-group basis")));
            }
        }
        Ok(GiventalInput {
            fan,
            bundles,
            basis_rays,
        })
    }
}

/// Inverse of `[R | E_S]`, where `R` has the rays as rows and `E_S` is the
/// unit columns of the basis rays; exists iff the classes of the basis rays
/// form a basis of the class group. Row `n + i` holds the `i`-th class
/// coordinate of every `D_rho`.
fn class_coordinates(y: &Fan, basis: &[usize]) -> Option<LatticeMap> {
    let n = y.rank();
    let k = y.rays().len();
    if n + basis.len() != k || basis.iter().collect::<BTreeSet<_>>().len() != basis.len() || basis.iter().any(|&b| b >= k) {
        return None;
    }
    let rows: Vec<IntVec> = (0..k)
        .map(|r| {
            let mut row = y.rays()[r].clone();
            row.extend(basis.iter().map(|&b| Int::from((b == r) as i64)));
            row
        })
        .collect();
    LatticeMap::from_rows(k, rows).ok()?.inverse_unimodular().ok()
}

/// Rays outside the first maximal cone whose complement maps isomorphically
/// onto the class group.
pub fn splitting_basis(y: &Fan) -> Result<Vec<usize>> {
    let k = y.rays().len();
    for cone in y.max_cones() {
        let s: Vec<usize> = (0..k).filter(|i| !cone.contains(i)).collect();
        if class_coordinates(y, &s).is_some() {
            return Ok(s);
        }
    }
    Err(Error::CheckFailed("no torus fixed point gives a class-group basis".into()))
}

fn all_splitting_bases(y: &Fan) -> Vec<Vec<usize>> {
    let k = y.rays().len();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for cone in y.max_cones() {
        let s: Vec<usize> = (0..k).filter(|i| !cone.contains(i)).collect();
        if class_coordinates(y, &s).is_some() && !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Sign {
    Givental,
    HoriVafa,
}

fn w_prime(sigma_x: &Fan, base_rays: usize, basis: &[usize], sign: Sign) -> Specialization {
    let mut spec = Specialization::default();
    for (i, n) in sigma_x.rays().iter().enumerate() {
        let g = if i >= base_rays {
            match sign {
                Sign::Givental => ParamPoly::from_i64(1),
                Sign::HoriVafa => ParamPoly::from_i64(-1),
            }
        } else if let Some(j) = basis.iter().position(|&b| b == i) {
            ParamPoly::monomial(Int::from(-1), &format!("q{}", j + 1), -1)
        } else {
            ParamPoly::from_i64(-1)
        };
        spec.assignment.insert(n.clone(), g);
    }
    spec
}

fn build(inp: &GiventalInput, basis: &[usize], sign: Sign) -> Result<MirrorReport> {
    let y = &inp.fan;
    let n = y.rank();
    let rays = y.rays().len();
    let l = inp.bundles.len();
    let mut checks = Checks::default();
    let inv = class_coordinates(y, basis)
        .ok_or_else(|| Error::Invalid(format!("rays {basis:?} do not give a class-group basis")))?;
    let k = basis.len();
    let m_rows: Vec<IntVec> = (0..k).map(|i| inv.row(n + i).clone()).collect();
    let ell_rows: Vec<IntVec> = m_rows
        .iter()
        .map(|mi| {
            inp.bundles
                .iter()
                .map(|d| mi.iter().zip(d.coeffs()).map(|(a, b)| a * b).sum())
                .collect()
        })
        .collect();

    let (aux, _) = auxiliary_lg_from_ci(y, &inp.bundles)?;
    let sigma_x = aux.fan.clone();
    checks.add("sigma_x_valid", validate_fan(&sigma_x).valid, "split bundle fan");

    // [m | -l] U = 0 on the ray generators of Sigma_X
    let rel_rows: Vec<IntVec> = (0..k)
        .map(|i| {
            let mut row = m_rows[i].clone();
            row.extend(ell_rows[i].iter().map(|x| -x));
            row
        })
        .collect();
    let relations = LatticeMap::from_rows(rays + l, rel_rows)?.with_labels(
        Some((1..=k).map(|i| format!("q{i}")).collect()),
        Some(
            (0..rays)
                .map(|r| format!("w{r}"))
                .chain((0..l).map(|a| format!("v{a}")))
                .collect(),
        ),
    );
    let u = LatticeMap::from_rows(n + l, sigma_x.rays().to_vec())?;
    let kills = relations.mul(&u)?.entries().iter().flatten().all(|x| x.is_zero());
    checks.add("relations_kill_rays", kills, "sum_rho m_i,rho u_rho = 0 and l_ia = sum_rho m_i,rho alpha_rho,a");

    let cone = Cone::new(n + l, &aux.exponents)?;
    let sigma_x_prime = Fan::new(n + l, cone.rays().to_vec(), vec![(0..cone.rays().len()).collect()])?;
    let xi_set: BTreeSet<&IntVec> = aux.exponents.iter().collect();
    let shaped = sigma_x_prime.rays().iter().all(|r| {
        let tail = &r[n..];
        tail.iter().filter(|x| x.is_one()).count() == 1
            && tail.iter().all(|x| x.is_zero() || x.is_one())
            && xi_set.contains(r)
    });
    checks.add("sigma_x_prime_shape", shaped, "every ray is mu + e_a with mu in Delta_a");

    let duality = is_dual_pair(&sigma_x, &sigma_x_prime)?;
    checks.add("dual_fans", duality.verdict, duality_detail(&duality));

    let inclusion = base_change_check(&aux, &sigma_x_prime);
    checks.add(
        "c_sigma_prime_into_gamma",
        inclusion.verdict,
        format!("{} of {} coordinates kept", inclusion.surviving.len(), aux.xi_count()),
    );
    let xi_prime = sigma_x.rays().to_vec();
    let aux_prime = auxiliary_lg_from_potential(&sigma_x_prime, &xi_prime)?;
    let inclusion_prime = base_change_check(&aux_prime, &sigma_x);
    checks.add(
        "c_sigma_iso_gamma_prime",
        inclusion_prime.verdict && inclusion_prime.is_isomorphism,
        format!("{} of {} coordinates", inclusion_prime.surviving.len(), xi_prime.len()),
    );

    let giv = apply_specialization(&aux_prime, &w_prime(&sigma_x, rays, basis, Sign::Givental))?;
    let mut potentials = vec![NamedPotential {
        name: "W'_givental".into(),
        terms: giv.clone(),
    }];
    let mut notes = vec![
        format!("class-group basis: classes of rays {basis:?}"),
        "W' coefficients: +1 on bundle rays, -1 on base rays, -q_i^-1 on the i-th basis ray".to_string(),
    ];
    let pipeline = match sign {
        Sign::Givental => "givental",
        Sign::HoriVafa => {
            let hv = apply_specialization(&aux_prime, &w_prime(&sigma_x, rays, basis, Sign::HoriVafa))?;
            let flip = giv.len() == hv.len()
                && giv.iter().zip(&hv).enumerate().all(|(i, ((mg, cg), (mh, ch)))| {
                    let bundle = i >= rays;
                    mg == mh && if bundle { *ch == cg.neg() } else { ch == cg }
                });
            checks.add(
                "termwise_sign_flip",
                flip,
                "same exponents; coefficients agree on base rays and differ in sign on bundle rays",
            );
            notes.push(
                "Hori-Vafa coefficients: -1 on every ray and -q_i^-1 on the i-th basis ray; both potentials specialize the same Gamma' coordinates and differ in sign on the bundle terms only".into(),
            );
            potentials.push(NamedPotential {
                name: "W'_hori_vafa".into(),
                terms: hv,
            });
            "hori-vafa"
        }
    };

    Ok(MirrorReport {
        pipeline: pipeline.into(),
        sigma: sigma_x,
        sigma_prime: sigma_x_prime,
        duality,
        xi: aux.exponents.clone(),
        xi_prime,
        inclusion,
        inclusion_prime,
        groups: Vec::new(),
        matrices: vec![
            ("relations".into(), relations),
            ("m".into(), LatticeMap::from_rows(rays, m_rows)?),
            ("l".into(), LatticeMap::from_rows(l, ell_rows)?),
        ],
        potentials,
        checks: checks.0,
        notes,
    })
}

fn default_basis(inp: &GiventalInput) -> Result<Vec<usize>> {
    match &inp.basis_rays {
        Some(b) => Ok(b.clone()),
        None => splitting_basis(&inp.fan),
    }
}

pub fn givental_mirror(inp: &GiventalInput) -> Result<MirrorReport> {
    build(inp, &default_basis(inp)?, Sign::Givental)
}

pub fn givental_mirror_with_basis(inp: &GiventalInput, basis: &[usize]) -> Result<MirrorReport> {
    build(inp, basis, Sign::Givental)
}

pub fn hori_vafa_mirror(inp: &GiventalInput) -> Result<MirrorReport> {
    build(inp, &default_basis(inp)?, Sign::HoriVafa)
}

/// Basis-free summary of a Givental report: canonical fans, both exponent
/// sets, `W'` with every `q_i` set to 1, and the row lattice of the relation
/// matrix.
type Canonical = (
    (LatticeMap, Vec<Vec<usize>>),
    (LatticeMap, Vec<Vec<usize>>),
    Vec<IntVec>,
    Vec<IntVec>,
    Vec<(IntVec, Int)>,
    LatticeMap,
);

fn canonical(r: &MirrorReport) -> Canonical {
    let w = r
        .potential("W'_givental")
        .map(|p| {
            p.terms
                .iter()
                .map(|(m, c)| (m.clone(), c.terms().values().sum::<Int>()))
                .collect()
        })
        .unwrap_or_default();
    let rel = hnf(r.matrix("relations").expect("relations matrix")).0;
    let rel = LatticeMap::from_rows(rel.cols(), rel.entries().to_vec()).unwrap();
    (
        r.sigma.canonical_form(),
        r.sigma_prime.canonical_form(),
        r.xi.clone(),
        r.xi_prime.clone(),
        w,
        rel,
    )
}

/// Runs the construction for every class-group basis coming from a torus
/// fixed point and compares the basis-free summaries. Returns the verdict
/// and the number of bases tried.
pub fn givental_basis_independence(inp: &GiventalInput) -> Result<(bool, usize)> {
    let bases = all_splitting_bases(&inp.fan);
    let mut first: Option<Canonical> = None;
    let mut same = true;
    for b in &bases {
        let c = canonical(&build(inp, b, Sign::Givental)?);
        match &first {
            None => first = Some(c),
            Some(f) => same &= *f == c,
        }
    }
    Ok((same, bases.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fans::{product_fan, projective_space_fan};

    #[test]
    fn bases() {
        assert_eq!(splitting_basis(&projective_space_fan(1)).unwrap().len(), 1);
        assert_eq!(splitting_basis(&projective_space_fan(2)).unwrap(), vec![2]);
        let p1 = projective_space_fan(1);
        let sq = product_fan(&p1, &p1);
        let b = splitting_basis(&sq).unwrap();
        assert_eq!(b.len(), 2);
        assert!(b[0] < 2 && b[1] >= 2);
    }

    #[test]
    fn p1_o2_relation() {
        let inp = GiventalInput::new(projective_space_fan(1), vec![ToricDivisor::from_i64(&[1, 1])], None).unwrap();
        let r = givental_mirror(&inp).unwrap();
        assert!(r.all_passed(), "{:?}", r.failed_checks());
        // w0 w1 = q v^2
        assert_eq!(r.matrix("relations").unwrap().entries(), &[crate::ivec(&[1, 1, -2])]);
        assert_eq!(r.sigma_prime.rays().len(), 2);
    }

    #[test]
    fn rejects_non_basepoint_free() {
        let p1 = projective_space_fan(1);
        let err = GiventalInput::new(p1, vec![ToricDivisor::from_i64(&[-1, 0])], None).unwrap_err();
        assert!(err.to_string().contains("basepoint free"));
    }
}
