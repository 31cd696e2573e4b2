//! Torus-invariant divisors, bundle fans and Landau-Ginzburg data.
//!
//! Convention: the total space of a split bundle `O(-D_1) + ... + O(-D_c)`
//! has rays `(u_rho, a^1_rho, ..., a^c_rho)` and vertical rays `e_i` of the
//! `Z^c` summand, and the section polytope of `D` is
//! `{m : <m, u_rho> + a_rho >= 0}`. With this choice a character
//! `(mu, e_a)` is regular on the bundle fan exactly when `mu` lies in the
//! section polytope of `D_a`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};

use crate::fans::{is_complete, is_dual_pair, validate_fan, Fan};
use crate::lattice::{dot, is_primitive, is_zero_vec, primitive, snf, solve_integer, LatticeMap};
use crate::poly::ParamPoly;
use crate::polyhedra::{lattice_points, Polytope};
use crate::{Error, Int, IntVec, Rat, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ToricDivisor {
    coeffs: IntVec,
}

impl ToricDivisor {
    pub fn new(coeffs: IntVec) -> Self {
        ToricDivisor { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![Int::zero(); n])
    }

    /// `D_rho` for a single ray.
    pub fn prime(n: usize, rho: usize) -> Self {
        let mut c = vec![Int::zero(); n];
        c[rho] = Int::one();
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    fn check(&self, y: &Fan) -> Result<()> {
        if self.coeffs.len() != y.rays().len() {
            return Err(Error::Dimension(format!(
                "divisor has {} coefficients for {} rays",
                self.coeffs.len(),
                y.rays().len()
            )));
        }
        Ok(())
    }
}

/// One functional per maximal cone, in the fan's cone order, with
/// `<m_sigma, u_rho> = a_rho` on the rays of `sigma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartierData {
    pub m: Vec<IntVec>,
}

impl CartierData {
    pub fn holds_for(&self, y: &Fan, d: &ToricDivisor) -> Option<usize> {
        if self.m.len() != y.max_cones().len() {
            return Some(0);
        }
        y.max_cones().iter().zip(&self.m).position(|(cone, m)| {
            cone.iter().any(|&r| dot(m, &y.rays()[r]) != d.coeffs[r])
        })
    }
}

/// `m` pairs nonnegatively with every ray generator of `f`.
pub fn is_regular_character(m: &[Int], f: &Fan) -> bool {
    m.len() == f.rank() && f.rays().iter().all(|u| !dot(m, u).is_negative())
}

pub fn is_cartier(y: &Fan, d: &ToricDivisor) -> Option<CartierData> {
    d.check(y).ok()?;
    let mut m = Vec::new();
    for cone in y.max_cones() {
        let rows: Vec<IntVec> = cone.iter().map(|&r| y.rays()[r].clone()).collect();
        let rhs: IntVec = cone.iter().map(|&r| d.coeffs[r].clone()).collect();
        if rows.is_empty() {
            m.push(vec![Int::zero(); y.rank()]);
            continue;
        }
        let a = LatticeMap::from_rows(y.rank(), rows).unwrap();
        m.push(solve_integer(&a, &rhs)?);
    }
    Some(CartierData { m })
}

pub fn section_polytope(y: &Fan, d: &ToricDivisor) -> Result<Polytope> {
    d.check(y)?;
    if !is_complete(y) {
        return Err(Error::NotComplete);
    }
    let hrep: Vec<(IntVec, Rat)> = y
        .rays()
        .iter()
        .zip(&d.coeffs)
        .map(|(u, a)| (u.clone(), Rat::from_integer(a.clone())))
        .collect();
    Polytope::from_hrep(y.rank(), &hrep)
}

pub fn line_bundle_fan(y: &Fan, d: &ToricDivisor, cartier: &CartierData) -> Result<Fan> {
    split_bundle_fan(y, &[(d.clone(), cartier.clone())])
}

/// Fan of the total space: lifted rays in ray order, then the vertical rays;
/// one maximal cone per maximal cone of `y`, spanned by its lifted rays and
/// all vertical rays.
pub fn split_bundle_fan(y: &Fan, ds: &[(ToricDivisor, CartierData)]) -> Result<Fan> {
    let n = y.rank();
    let c = ds.len();
    for (d, cd) in ds {
        d.check(y)?;
        if let Some(bad) = cd.holds_for(y, d) {
            return Err(Error::NotCartier(bad));
        }
    }
    let mut rays: Vec<IntVec> = y
        .rays()
        .iter()
        .enumerate()
        .map(|(r, u)| {
            let mut v = u.clone();
            v.extend(ds.iter().map(|(d, _)| d.coeffs[r].clone()));
            v
        })
        .collect();
    let base = rays.len();
    for i in 0..c {
        let mut v = vec![Int::zero(); n + c];
        v[n + i] = Int::one();
        rays.push(v);
    }
    let cones: Vec<Vec<usize>> = y
        .max_cones()
        .iter()
        .map(|cone| cone.iter().copied().chain(base..base + c).collect())
        .collect();
    Fan::new(n + c, rays, cones)
}

/// Universal-coefficient potential `W = sum_m gamma_m chi^m` over `Xi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxiliaryLG {
    pub fan: Fan,
    pub exponents: Vec<IntVec>,
    /// Bundle summand each exponent came from, for complete-intersection data.
    pub summands: Vec<Option<usize>>,
}

impl AuxiliaryLG {
    pub fn xi_count(&self) -> usize {
        self.exponents.len()
    }

    pub fn index_of(&self, m: &[Int]) -> Option<usize> {
        self.exponents.iter().position(|e| e.as_slice() == m)
    }

    pub fn coordinate_name(&self, i: usize) -> String {
        format!("gamma_{i}")
    }
}

/// Auxiliary model of a split bundle: `Xi` is the union over summands `a`
/// of `{(mu, e_a) : mu in section_polytope(D_a)}`. Also returns the indices
/// of the vertical rays of the bundle fan.
pub fn auxiliary_lg_from_ci(y: &Fan, ds: &[ToricDivisor]) -> Result<(AuxiliaryLG, Vec<usize>)> {
    let mut with_data = Vec::new();
    for d in ds {
        d.check(y)?;
        let cd = is_cartier(y, d).ok_or_else(|| {
            let bad = (0..y.max_cones().len())
                .find(|&i| {
                    let single = Fan::new(y.rank(), y.rays().to_vec(), vec![y.max_cones()[i].clone()]).unwrap();
                    is_cartier(&single, d).is_none()
                })
                .unwrap_or(0);
            Error::NotCartier(bad)
        })?;
        with_data.push((d.clone(), cd));
    }
    let fan = split_bundle_fan(y, &with_data)?;
    let n = y.rank();
    let c = ds.len();
    let mut exponents = Vec::new();
    let mut summands = Vec::new();
    for (a, d) in ds.iter().enumerate() {
        for mu in lattice_points(&section_polytope(y, d)?)? {
            let mut m = mu;
            m.extend((0..c).map(|b| Int::from((a == b) as i64)));
            exponents.push(m);
            summands.push(Some(a));
        }
    }
    let vertical: Vec<usize> = (y.rays().len()..y.rays().len() + c).collect();
    debug_assert_eq!(fan.rank(), n + c);
    Ok((
        AuxiliaryLG {
            fan,
            exponents,
            summands,
        },
        vertical,
    ))
}

pub fn auxiliary_lg_from_potential(f: &Fan, exponents: &[IntVec]) -> Result<AuxiliaryLG> {
    let mut seen = BTreeSet::new();
    for m in exponents {
        if m.len() != f.rank() {
            return Err(Error::Dimension(format!(
                "exponent of length {} on a fan of rank {}",
                m.len(),
                f.rank()
            )));
        }
        if let Some(ray) = f.rays().iter().position(|u| dot(m, u).is_negative()) {
            return Err(Error::Irregular { m: m.clone(), ray });
        }
        if !seen.insert(m.clone()) {
            return Err(Error::Invalid(format!("exponent {m:?} listed twice")));
        }
    }
    Ok(AuxiliaryLG {
        fan: f.clone(),
        exponents: exponents.to_vec(),
        summands: vec![None; exponents.len()],
    })
}

/// `W(Sigma') = sum_j c_j chi^{u_j}` over the marked generators of `Sigma'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricLGModel {
    pub sigma: Fan,
    pub sigma_prime: Fan,
    pub exponents: Vec<IntVec>,
}

impl ToricLGModel {
    pub fn coefficient_name(&self, j: usize) -> String {
        format!("c_{j}")
    }
}

pub fn lg_from_dual_fans(s: &Fan, s_prime: &Fan) -> Result<ToricLGModel> {
    let report = is_dual_pair(s, s_prime)?;
    if let Some(w) = report.witness {
        return Err(Error::NotDual {
            dual_ray: w.dual_ray,
            ray: w.ray,
            pairing: w.pairing.to_string(),
        });
    }
    Ok(ToricLGModel {
        sigma: s.clone(),
        sigma_prime: s_prime.clone(),
        exponents: s_prime.marked_generators().to_vec(),
    })
}

/// Outcome of restricting the auxiliary potential to the coordinates of a
/// dual fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseChangeReport {
    pub verdict: bool,
    /// For each ray of the dual fan, the index in `Xi` of its marked generator.
    pub inclusion: Vec<Option<usize>>,
    /// Indices of surviving `gamma_m`, ascending.
    pub surviving: Vec<usize>,
    pub dropped: usize,
    /// First ray of the dual fan whose generator is not in `Xi`.
    pub witness_ray: Option<usize>,
    /// The inclusion hits every coordinate of `Gamma`.
    pub is_isomorphism: bool,
    /// Setting the dropped `gamma_m` to zero leaves exactly `W(Sigma')`.
    pub restriction_matches: bool,
}

pub fn base_change_check(aux: &AuxiliaryLG, s_prime: &Fan) -> BaseChangeReport {
    let rank_ok = s_prime.rank() == aux.fan.rank();
    let inclusion: Vec<Option<usize>> = s_prime
        .marked_generators()
        .iter()
        .map(|u| if rank_ok { aux.index_of(u) } else { None })
        .collect();
    let witness_ray = inclusion.iter().position(|i| i.is_none());
    let surviving: Vec<usize> = inclusion
        .iter()
        .flatten()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let restricted: BTreeSet<&IntVec> = surviving.iter().map(|&i| &aux.exponents[i]).collect();
    let target: BTreeSet<&IntVec> = s_prime.marked_generators().iter().collect();
    let restriction_matches = witness_ray.is_none() && restricted == target;
    BaseChangeReport {
        verdict: rank_ok && witness_ray.is_none() && restriction_matches,
        dropped: aux.exponents.len() - surviving.len(),
        is_isomorphism: witness_ray.is_none() && surviving.len() == aux.exponents.len(),
        inclusion,
        surviving,
        witness_ray,
        restriction_matches,
    }
}

/// Assignment `gamma_m -> g_m`, keyed by exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Specialization {
    pub assignment: BTreeMap<IntVec, ParamPoly>,
}

impl Specialization {
    pub fn constant(exponents: &[IntVec], c: i64) -> Self {
        Specialization {
            assignment: exponents.iter().map(|m| (m.clone(), ParamPoly::from_i64(c))).collect(),
        }
    }
}

/// Specialized potential as (exponent, coefficient) pairs in `Xi` order,
/// zero coefficients omitted.
pub fn apply_specialization(aux: &AuxiliaryLG, spec: &Specialization) -> Result<Vec<(IntVec, ParamPoly)>> {
    let domain: BTreeSet<&IntVec> = spec.assignment.keys().collect();
    let xi: BTreeSet<&IntVec> = aux.exponents.iter().collect();
    if domain != xi {
        let extra = domain.difference(&xi).count();
        let missing = xi.difference(&domain).count();
        return Err(Error::SpecializationDomain(format!(
            "{missing} exponents unassigned, {extra} assignments outside Xi"
        )));
    }
    Ok(aux
        .exponents
        .iter()
        .filter_map(|m| {
            let g = &spec.assignment[m];
            (!g.is_zero()).then(|| (m.clone(), g.clone()))
        })
        .collect())
}

/// Base fan and heights recovered from a split-bundle fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecoveredCI {
    pub base: Fan,
    pub divisors: Vec<ToricDivisor>,
    /// Unimodular change of basis sending the vertical rays to the last
    /// coordinate vectors.
    pub basis_change: LatticeMap,
}

fn vertical_basis_change(n: usize, verticals: &[IntVec]) -> Option<LatticeMap> {
    let c = verticals.len();
    let unit = |v: &IntVec| -> Option<usize> {
        let nz: Vec<usize> = (0..n).filter(|&i| !v[i].is_zero()).collect();
        (nz.len() == 1 && v[nz[0]].is_one()).then(|| nz[0])
    };
    let units: Option<Vec<usize>> = verticals.iter().map(unit).collect();
    let mut t = LatticeMap::zero(n, n).entries().to_vec();
    if let Some(units) = units.filter(|u| u.iter().collect::<BTreeSet<_>>().len() == c) {
        let rest: Vec<usize> = (0..n).filter(|i| !units.contains(i)).collect();
        for (row, &i) in rest.iter().chain(units.iter()).enumerate() {
            t[row][i] = Int::one();
        }
        return LatticeMap::from_rows(n, t).ok();
    }
    let v = LatticeMap::from_columns(n, verticals).ok()?;
    let s = snf(&v);
    if s.rank() != c || !s.torsion().is_empty() {
        return None;
    }
    // U V W = [I; 0], so diag(W, I) U sends v_i to e_i; then rotate the
    // first c coordinates to the end.
    let mut dw = LatticeMap::identity(n).entries().to_vec();
    for i in 0..c {
        for j in 0..c {
            dw[i][j] = s.v.get(i, j).clone();
        }
    }
    let t1 = LatticeMap::from_rows(n, dw).ok()?.mul(&s.u).ok()?;
    for (row, i) in (c..n).chain(0..c).enumerate() {
        t[row][i] = Int::one();
    }
    LatticeMap::from_rows(n, t).ok()?.mul(&t1).ok()
}

/// Inverse of [`split_bundle_fan`] for an explicit set of vertical rays.
pub fn recover_ci_data(f: &Fan, vertical: &[usize]) -> Option<RecoveredCI> {
    let n = f.rank();
    let c = vertical.len();
    let vset: BTreeSet<usize> = vertical.iter().copied().collect();
    if c == 0 || c >= n || vset.len() != c || vertical.iter().any(|&i| i >= f.rays().len()) {
        return None;
    }
    let verticals: Vec<IntVec> = vertical.iter().map(|&i| f.rays()[i].clone()).collect();
    let t = vertical_basis_change(n, &verticals)?;
    let b = n - c;
    let mut base_index = BTreeMap::new();
    let mut base_rays = Vec::new();
    let mut heights: Vec<IntVec> = vec![Vec::new(); c];
    for (i, r) in f.rays().iter().enumerate() {
        if vset.contains(&i) {
            continue;
        }
        let img = t.apply(r).ok()?;
        let u = img[..b].to_vec();
        if is_zero_vec(&u) || !is_primitive(&u) {
            return None;
        }
        base_index.insert(i, base_rays.len());
        base_rays.push(u);
        for (k, h) in heights.iter_mut().enumerate() {
            h.push(img[b + k].clone());
        }
    }
    let mut base_cones = Vec::new();
    for cone in f.max_cones() {
        if !vset.iter().all(|v| cone.contains(v)) {
            return None;
        }
        base_cones.push(cone.iter().filter_map(|i| base_index.get(i).copied()).collect());
    }
    let base = Fan::new(b, base_rays, base_cones).ok()?;
    if !validate_fan(&base).valid {
        return None;
    }
    let divisors: Vec<ToricDivisor> = heights.into_iter().map(ToricDivisor::new).collect();
    let data: Vec<(ToricDivisor, CartierData)> = divisors
        .iter()
        .map(|d| is_cartier(&base, d).map(|cd| (d.clone(), cd)))
        .collect::<Option<_>>()?;
    let rebuilt = split_bundle_fan(&base, &data).ok()?;
    // compare with f in the new coordinates, ray labels matched through T
    let mut label = Vec::with_capacity(f.rays().len());
    for (i, r) in f.rays().iter().enumerate() {
        let img = primitive(&t.apply(r).ok()?);
        let j = rebuilt.rays().iter().position(|x| *x == img)?;
        let expected = match base_index.get(&i) {
            Some(&k) => k,
            None => base_index.len() + vertical.iter().position(|&v| v == i)?,
        };
        if j != expected {
            return None;
        }
        label.push(j);
    }
    let mapped: BTreeSet<Vec<usize>> = f
        .max_cones()
        .iter()
        .map(|cone| {
            let mut s: Vec<usize> = cone.iter().map(|&i| label[i]).collect();
            s.sort();
            s
        })
        .collect();
    let target: BTreeSet<Vec<usize>> = rebuilt.max_cones().iter().cloned().collect();
    (mapped == target).then_some(RecoveredCI {
        base,
        divisors,
        basis_change: t,
    })
}

/// Searches vertical candidates by increasing size, lexicographically.
/// Limited to fans with at most 12 rays.
pub fn search_ci_data(f: &Fan) -> Result<Option<(Vec<usize>, RecoveredCI)>> {
    let k = f.rays().len();
    if k > 12 {
        return Err(Error::Invalid(format!(
            "exhaustive vertical search needs at most 12 rays, fan has {k}"
        )));
    }
    for c in 1..f.rank() {
        let mut subsets: Vec<Vec<usize>> = (0u32..(1 << k))
            .filter(|s| s.count_ones() as usize == c)
            .map(|s| (0..k).filter(|i| s & (1 << i) != 0).collect())
            .collect();
        subsets.sort();
        for s in subsets {
            if let Some(r) = recover_ci_data(f, &s) {
                return Ok(Some((s, r)));
            }
        }
    }
    Ok(None)
}
