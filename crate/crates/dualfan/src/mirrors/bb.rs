//! Batyrev-Borisov duality for a reflexive Gorenstein cone `K` in `M-bar`
//! with dual complete splittings `E` of `K` and `E^v` of `K^v`.
//!
//! Coordinates: `T = [basis of M | e_1 .. e_r]` where `M = (E^v)^perp`.
//! A character `m` has coordinates `T^{-1} m` in `M + Z^r` and a cocharacter
//! `n` has coordinates `T^t n` in `N + Z^r`; in these coordinates
//! `e_i = (0, eps_i)` and `e^v_j = (0, eps_j)`.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::{duality_detail, Checks, MirrorReport, NamedPotential};
use crate::fans::{covers_cone, is_dual_pair, validate_fan, Fan};
use crate::lattice::{add_vec, dot, is_zero_vec, kernel_basis, solve_rational, LatticeMap};
use crate::poly::ParamPoly;
use crate::polyhedra::{lattice_points, minkowski_sum, normal_fan, polar, Cone, Polytope};
use crate::toric_lg::{
    auxiliary_lg_from_ci, auxiliary_lg_from_potential, base_change_check, is_cartier, section_polytope, AuxiliaryLG,
    ToricDivisor,
};
use crate::{Error, Int, IntVec, Rat, RatVec, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinCertificate {
    pub ell_dual: IntVec,
    pub height_bound_checked: usize,
    pub hilbert_generation_verified: bool,
    pub degree_one_points: usize,
}

/// `{x in K : f(x) = v}` for the given `(f, v)` pairs.
fn slice(k: &Cone, eqs: &[(&[Int], Int)]) -> Result<Polytope> {
    let mut hrep: Vec<(IntVec, Rat)> = k
        .facet_inequalities()
        .iter()
        .map(|a| (a.clone(), Rat::zero()))
        .collect();
    for e in k.equations() {
        hrep.push((e.clone(), Rat::zero()));
        hrep.push((e.iter().map(|x| -x).collect(), Rat::zero()));
    }
    for (f, v) in eqs {
        hrep.push((f.to_vec(), Rat::from_integer(-v)));
        hrep.push((f.iter().map(|x| -x).collect(), Rat::from_integer(v.clone())));
    }
    Polytope::from_hrep(k.rank(), &hrep)
}

fn unit(r: usize, i: usize) -> Vec<Int> {
    (0..r).map(|j| Int::from((i == j) as i64)).collect()
}

/// Bounded semi-decision: the unique functional with value 1 on every
/// primitive ray must be integral, and every lattice point of height at most
/// `height_bound` must be a sum of height-one points.
pub fn is_gorenstein(k: &Cone, height_bound: usize) -> Option<GorensteinCertificate> {
    if !k.is_full_dimensional() || !k.is_strongly_convex() || k.rank() == 0 {
        return None;
    }
    let a = LatticeMap::from_rows(k.rank(), k.rays().to_vec()).ok()?;
    let sol = solve_rational(&a, &vec![Rat::one(); k.rays().len()])?;
    if sol.iter().any(|x| !x.is_integer()) {
        return None;
    }
    let ell_dual: IntVec = sol.iter().map(|x| x.to_integer()).collect();
    let ones = lattice_points(&slice(k, &[(&ell_dual, Int::one())]).ok()?).ok()?;
    for h in 2..=height_bound {
        let level = lattice_points(&slice(k, &[(&ell_dual, Int::from(h))]).ok()?).ok()?;
        for x in &level {
            let split = ones.iter().any(|p| {
                let rest: IntVec = x.iter().zip(p).map(|(a, b)| a - b).collect();
                k.contains(&rest)
            });
            if !split {
                return None;
            }
        }
    }
    Some(GorensteinCertificate {
        ell_dual,
        height_bound_checked: height_bound,
        hilbert_generation_verified: true,
        degree_one_points: ones.len(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflexiveData {
    /// Degree functional of `K^v`, an element of `K`.
    pub ell: IntVec,
    /// Degree functional of `K`, an element of `K^v`.
    pub ell_dual: IntVec,
    pub index: Int,
    pub certificate: GorensteinCertificate,
    pub dual_certificate: GorensteinCertificate,
}

pub fn is_reflexive(k: &Cone, height_bound: usize) -> Option<ReflexiveData> {
    let certificate = is_gorenstein(k, height_bound)?;
    let dual_certificate = is_gorenstein(&k.dual(), height_bound)?;
    let ell = dual_certificate.ell_dual.clone();
    let ell_dual = certificate.ell_dual.clone();
    Some(ReflexiveData {
        index: dot(&ell, &ell_dual),
        ell,
        ell_dual,
        certificate,
        dual_certificate,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportPartition {
    pub support: Polytope,
    pub parts: Vec<Polytope>,
    /// Lattice points of the support, sorted.
    pub points: Vec<IntVec>,
    /// Part containing each lattice point.
    pub part_of: Vec<usize>,
}

/// The support `{k in K : l^v(k) = 1}` and its parts
/// `{k in K : e^v_i(k) = 1, e^v_j(k) = 0}`, with the partition assertions
/// checked.
pub fn support_partition(k: &Cone, ell_dual: &[Int], e_dual: &[IntVec]) -> Result<SupportPartition> {
    let r = e_dual.len();
    let sum = e_dual.iter().fold(vec![Int::zero(); k.rank()], |acc, e| add_vec(&acc, e));
    if sum != ell_dual {
        return Err(Error::Invalid("splitting does not sum to the degree functional".into()));
    }
    let support = slice(k, &[(ell_dual, Int::one())])?;
    let mut parts = Vec::with_capacity(r);
    for i in 0..r {
        let u = unit(r, i);
        let eqs: Vec<(&[Int], Int)> = e_dual.iter().zip(u).map(|(e, v)| (e.as_slice(), v)).collect();
        parts.push(slice(k, &eqs)?);
    }
    let points = lattice_points(&support)?;
    let mut part_of = Vec::with_capacity(points.len());
    for p in &points {
        let owners: Vec<usize> = (0..r).filter(|&i| parts[i].contains_int(p)).collect();
        if owners.len() != 1 {
            return Err(Error::CheckFailed(format!(
                "support partition: lattice point {p:?} lies in {} parts",
                owners.len()
            )));
        }
        part_of.push(owners[0]);
    }
    let verts: BTreeSet<&RatVec> = support.vertices().iter().collect();
    for (i, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::CheckFailed(format!("support partition: part {i} is empty")));
        }
        if part.vertices().iter().any(|v| !verts.contains(v)) {
            return Err(Error::CheckFailed(format!(
                "support partition: part {i} has a vertex that is not a vertex of the support"
            )));
        }
        let inside: Vec<RatVec> = support.vertices().iter().filter(|v| part.contains(v)).cloned().collect();
        if Polytope::from_points(k.rank(), &inside)? != *part {
            return Err(Error::CheckFailed(format!(
                "support partition: part {i} is not the hull of the support vertices it contains"
            )));
        }
    }
    Ok(SupportPartition {
        support,
        parts,
        points,
        part_of,
    })
}

/// All `(e^v_1, .., e^v_r)` with `e^v_i` a lattice point of
/// `{n in K^v : e_i(n) = 1, e_j(n) = 0}` and sum `l^v`, in lexicographic
/// order.
pub fn dual_splittings(k_dual: &Cone, ell_dual: &[Int], e: &[IntVec]) -> Result<Vec<Vec<IntVec>>> {
    let r = e.len();
    if r == 0 {
        return Err(Error::Invalid("empty splitting".into()));
    }
    let mut candidates = Vec::with_capacity(r);
    for i in 0..r {
        let u = unit(r, i);
        let eqs: Vec<(&[Int], Int)> = e.iter().zip(u).map(|(x, v)| (x.as_slice(), v)).collect();
        candidates.push(lattice_points(&slice(k_dual, &eqs)?)?);
    }
    let mut out = Vec::new();
    let mut chosen: Vec<IntVec> = Vec::new();
    fn rec(i: usize, cands: &[Vec<IntVec>], target: &[Int], chosen: &mut Vec<IntVec>, out: &mut Vec<Vec<IntVec>>) {
        let r = cands.len();
        if i + 1 == r {
            let sum = chosen.iter().fold(vec![Int::zero(); target.len()], |acc, x| add_vec(&acc, x));
            let last: IntVec = target.iter().zip(&sum).map(|(a, b)| a - b).collect();
            if cands[i].contains(&last) {
                chosen.push(last);
                out.push(chosen.clone());
                chosen.pop();
            }
            return;
        }
        for c in &cands[i] {
            chosen.push(c.clone());
            rec(i + 1, cands, target, chosen, out);
            chosen.pop();
        }
    }
    rec(0, &candidates, ell_dual, &mut chosen, &mut out);
    out.sort();
    if out.is_empty() {
        return Err(Error::CheckFailed("no dual splitting exists for this splitting".into()));
    }
    Ok(out)
}

/// Every way of writing `ell` as a sum of `r` lattice points of the support
/// puts exactly one summand in each part. Returns the number of
/// decompositions checked, or `None` when the enumeration is too large.
fn sum_partition_check(sp: &SupportPartition, ell: &[Int], r: usize) -> Option<(bool, usize)> {
    let k = sp.points.len();
    let mut size: f64 = 1.0;
    for i in 0..r {
        size *= (k + i) as f64 / (i + 1) as f64;
    }
    if size > 200_000.0 {
        return None;
    }
    let mut ok = true;
    let mut count = 0;
    let mut idx = vec![0usize; r];
    loop {
        let sum = idx.iter().fold(vec![Int::zero(); ell.len()], |acc, &i| add_vec(&acc, &sp.points[i]));
        if sum == ell {
            count += 1;
            let mut hits = vec![0usize; r];
            for &i in &idx {
                hits[sp.part_of[i]] += 1;
            }
            ok &= hits.iter().all(|&h| h == 1);
        }
        // next nondecreasing tuple
        let mut j = r;
        loop {
            if j == 0 {
                return Some((ok, count));
            }
            j -= 1;
            if idx[j] + 1 < k {
                let v = idx[j] + 1;
                for x in idx.iter_mut().skip(j) {
                    *x = v;
                }
                break;
            }
        }
    }
}

fn apply_rat(t: &LatticeMap, v: &[Rat]) -> RatVec {
    t.entries()
        .iter()
        .map(|row| row.iter().zip(v).map(|(a, x)| Rat::from_integer(a.clone()) * x).sum())
        .collect()
}

fn mutually_contained(a: &Polytope, b: &Polytope) -> bool {
    a.vertices().iter().all(|v| b.contains(v)) && b.vertices().iter().all(|v| a.contains(v))
}

/// One side of the construction: the base `Y`, its divisors and the bundle
/// fan in the dual of the lattice containing `k`.
struct Side {
    t: LatticeMap,
    sigma_x: Fan,
    aux: AuxiliaryLG,
}

#[allow(clippy::too_many_arguments)]
fn build_side(
    tag: &str,
    k: &Cone,
    k_dual: &Cone,
    ell: &[Int],
    ell_dual: &[Int],
    e: &[IntVec],
    e_dual: &[IntVec],
    checks: &mut Checks,
) -> Result<Side> {
    let n = k.rank();
    let r = e.len();
    let d = n - r;
    let dual_rows = LatticeMap::from_rows(n, e_dual.to_vec())?;
    let mut tcols = kernel_basis(&dual_rows).columns();
    tcols.extend(e.iter().cloned());
    let t = LatticeMap::from_columns(n, &tcols)?;
    if !checks.add(&format!("{tag}lattice_split"), t.is_unimodular(), "M-bar = M + Z E") {
        return Err(Error::CheckFailed(format!("{tag}lattice_split: E does not complement (E^v)^perp")));
    }
    let t_inv = t.inverse_unimodular()?;
    let tt = t.transpose();

    let mut delta_parts = Vec::with_capacity(r);
    for i in 0..r {
        let u = unit(r, i);
        let eqs: Vec<(&[Int], Int)> = e_dual.iter().zip(u).map(|(x, v)| (x.as_slice(), v)).collect();
        let part = slice(k, &eqs)?;
        let pts: Vec<RatVec> = part.vertices().iter().map(|v| apply_rat(&t_inv, v)[..d].to_vec()).collect();
        delta_parts.push(Polytope::from_points(d, &pts)?);
    }
    let mut nabla_parts = Vec::with_capacity(r);
    for j in 0..r {
        let u = unit(r, j);
        let eqs: Vec<(&[Int], Int)> = e.iter().zip(u).map(|(x, v)| (x.as_slice(), v)).collect();
        let part = slice(k_dual, &eqs)?;
        let pts: Vec<RatVec> = part.vertices().iter().map(|v| apply_rat(&tt, v)[..d].to_vec()).collect();
        nabla_parts.push(Polytope::from_points(d, &pts)?);
    }
    let mut delta = delta_parts[0].clone();
    for p in &delta_parts[1..] {
        delta = minkowski_sum(&delta, p)?;
    }
    let base = normal_fan(&delta)?;
    checks.add(&format!("{tag}base_fan_valid"), validate_fan(&base).valid, "normal fan of Delta");

    let nabla_hull = {
        let pts: Vec<RatVec> = nabla_parts.iter().flat_map(|p| p.vertices().to_vec()).collect();
        Polytope::from_points(d, &pts)?
    };
    let bn = match polar(&delta) {
        Ok(pd) => mutually_contained(&pd, &nabla_hull),
        Err(_) => false,
    };
    checks.add(&format!("{tag}polar_is_hull_of_nablas"), bn, "Delta* = conv(nabla_j)");

    let mut coeffs: Vec<IntVec> = vec![Vec::new(); r];
    let mut unique_owner = true;
    for u in base.rays() {
        let owners: Vec<usize> = (0..r).filter(|&i| nabla_parts[i].contains_int(u)).collect();
        unique_owner &= owners.len() == 1;
        for (i, c) in coeffs.iter_mut().enumerate() {
            c.push(Int::from(owners.contains(&i) as i64));
        }
    }
    checks.add(&format!("{tag}rays_in_one_nabla"), unique_owner, "each u_rho lies in exactly one nabla_i");
    let divisors: Vec<ToricDivisor> = coeffs.into_iter().map(ToricDivisor::new).collect();
    for (i, di) in divisors.iter().enumerate() {
        let cartier = is_cartier(&base, di).is_some();
        let same = section_polytope(&base, di).map(|p| p == delta_parts[i]).unwrap_or(false);
        checks.add(
            &format!("{tag}divisor_{i}_cartier"),
            cartier && same,
            format!("D_{i} Cartier: {cartier}; section polytope equals Delta_{i}: {same}"),
        );
    }

    let (aux_t, _) = auxiliary_lg_from_ci(&base, &divisors)?;
    let t_inv_t = t_inv.transpose();
    let sigma_x = aux_t.fan.map_by(&t_inv_t)?.without_marking();
    let nabla_tilde = slice(k_dual, &[(ell, Int::one())])?;
    let mut expected: BTreeSet<IntVec> = nabla_tilde
        .integral_vertices()
        .ok_or_else(|| Error::CheckFailed("support of the dual cone has a non-integral vertex".into()))?
        .into_iter()
        .collect();
    expected.extend(e_dual.iter().cloned());
    let got: BTreeSet<IntVec> = sigma_x.rays().iter().cloned().collect();
    checks.add(
        &format!("{tag}rays_are_vertices_and_splitting"),
        got == expected,
        format!("{} rays, {} expected", got.len(), expected.len()),
    );
    checks.add(&format!("{tag}support_is_dual_cone"), covers_cone(&sigma_x, k_dual), "|Sigma| = K^v");

    let delta_tilde = slice(k, &[(ell_dual, Int::one())])?;
    let xi = lattice_points(&delta_tilde)?;
    let from_ci: BTreeSet<IntVec> = aux_t.exponents.iter().map(|m| t.apply(m).unwrap()).collect();
    checks.add(
        &format!("{tag}sections_are_support_points"),
        from_ci == xi.iter().cloned().collect::<BTreeSet<_>>(),
        format!("{} sections, {} support points", from_ci.len(), xi.len()),
    );
    let aux = auxiliary_lg_from_potential(&sigma_x, &xi)?;
    Ok(Side { t, sigma_x, aux })
}

/// Full construction for `K` with splitting `E`; `E^v` defaults to the
/// lexicographically least dual splitting.
pub fn bb_mirror_pair(
    k: &Cone,
    ell_dual: Option<&[Int]>,
    e: &[IntVec],
    e_dual: Option<&[IntVec]>,
    height_bound: usize,
) -> Result<MirrorReport> {
    let n = k.rank();
    let mut checks = Checks::default();
    let mut notes = Vec::new();
    let refl = is_reflexive(k, height_bound)
        .ok_or_else(|| Error::CheckFailed(format!("cone is not reflexive Gorenstein up to height {height_bound}")))?;
    checks.add(
        "reflexive",
        true,
        format!(
            "l^v = {:?}, l = {:?}, index {}, height bound {height_bound}",
            refl.ell_dual, refl.ell, refl.index
        ),
    );
    if let Some(given) = ell_dual {
        if given != refl.ell_dual.as_slice() {
            return Err(Error::Invalid(format!(
                "given degree functional {given:?} differs from the certified {:?}",
                refl.ell_dual
            )));
        }
    }
    if e.iter().any(|x| x.len() != n) || e_dual.is_some_and(|s| s.iter().any(|x| x.len() != n)) {
        return Err(Error::Dimension(format!("splitting vectors must have length {n}")));
    }
    let sum = e.iter().fold(vec![Int::zero(); n], |acc, x| add_vec(&acc, x));
    let valid_e = sum == refl.ell
        && Int::from(e.len()) == refl.index
        && e.iter().all(|x| !is_zero_vec(x) && k.contains(x));
    if !valid_e {
        return Err(Error::Invalid("E is not a complete splitting of the cone".into()));
    }
    let k_dual = k.dual();
    let all = dual_splittings(&k_dual, &refl.ell_dual, e)?;
    let chosen: Vec<IntVec> = match e_dual {
        Some(s) => {
            if !all.iter().any(|x| x.as_slice() == s) {
                return Err(Error::Invalid("given dual splitting is not dual to E".into()));
            }
            s.to_vec()
        }
        None => {
            notes.push("dual splitting: lexicographically least of the enumerated choices".into());
            all[0].clone()
        }
    };
    notes.push(format!("{} dual splittings enumerated", all.len()));
    let r = e.len();

    for (tag, cone, ld, split, ell) in [
        ("", k, &refl.ell_dual, &chosen, &refl.ell),
        ("dual_", &k_dual, &refl.ell, &e.to_vec(), &refl.ell_dual),
    ] {
        match support_partition(cone, ld, split) {
            Ok(sp) => {
                checks.add(&format!("{tag}support_partition"), true, format!("{} lattice points", sp.points.len()));
                match sum_partition_check(&sp, ell, r) {
                    Some((ok, count)) => {
                        checks.add(&format!("{tag}summand_partition"), ok, format!("{count} decompositions"));
                    }
                    None => notes.push(format!("{tag}summand partition spot check skipped: too many decompositions")),
                }
            }
            Err(err) => {
                checks.add(&format!("{tag}support_partition"), false, err.to_string());
            }
        }
    }

    let x = build_side("", k, &k_dual, &refl.ell, &refl.ell_dual, e, &chosen, &mut checks)?;
    let xp = build_side("dual_", &k_dual, k, &refl.ell_dual, &refl.ell, &chosen, e, &mut checks)?;
    let duality = is_dual_pair(&x.sigma_x, &xp.sigma_x)?;
    checks.add("dual_fans", duality.verdict, duality_detail(&duality));
    let inclusion = base_change_check(&x.aux, &xp.sigma_x);
    checks.add(
        "base_change_gamma",
        inclusion.verdict,
        format!("{} of {} coordinates kept", inclusion.surviving.len(), x.aux.xi_count()),
    );
    let inclusion_prime = base_change_check(&xp.aux, &x.sigma_x);
    checks.add(
        "base_change_gamma_prime",
        inclusion_prime.verdict,
        format!("{} of {} coordinates kept", inclusion_prime.surviving.len(), xp.aux.xi_count()),
    );
    let lg = |s: &Fan| NamedPotential {
        name: String::new(),
        terms: s
            .marked_generators()
            .iter()
            .enumerate()
            .map(|(j, u)| (u.clone(), ParamPoly::monomial(Int::one(), &format!("c{j}"), 1)))
            .collect(),
    };
    let mut w = lg(&xp.sigma_x);
    w.name = "W(Sigma')".into();
    let mut w_prime = lg(&x.sigma_x);
    w_prime.name = "W(Sigma)".into();

    Ok(MirrorReport {
        pipeline: "bb".into(),
        duality,
        xi: x.aux.exponents.clone(),
        xi_prime: xp.aux.exponents.clone(),
        inclusion,
        inclusion_prime,
        groups: Vec::new(),
        matrices: vec![("T".into(), x.t), ("T'".into(), xp.t)],
        potentials: vec![w, w_prime],
        sigma: x.sigma_x,
        sigma_prime: xp.sigma_x,
        checks: checks.0,
        notes,
    })
}
