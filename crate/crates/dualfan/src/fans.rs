//! Fans stored by their rays and maximal cones.
//!
//! Lower-dimensional cones are derived from the maximal ones. A fan may
//! carry marked generators: positive multiples of its primitive rays that
//! survive image constructions (for example the imprimitive images of the
//! orthant generators in the BHK construction).
//!
//! Dual-fan checks use ray generators only. Every cone is the nonnegative
//! span of its rays, so by bilinearity `<m, n> >= 0` on all of
//! `|Sigma'| x |Sigma|` holds exactly when it holds on every pair of ray
//! generators; rescaling a generator by a positive integer does not change
//! signs, so marked and primitive generators give the same verdict.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};

use crate::lattice::{cokernel, dot, hnf, is_primitive, is_zero_vec, primitive, snf, FiniteAbelianGroup, LatticeMap};
use crate::polyhedra::Cone;
use crate::{Error, Int, IntVec, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fan {
    rank: usize,
    rays: Vec<IntVec>,
    marked: Option<Vec<IntVec>>,
    max_cones: Vec<Vec<usize>>,
}

impl Fan {
    /// Fan from primitive rays and maximal cones given as ray-index sets.
    pub fn new(rank: usize, rays: Vec<IntVec>, max_cones: Vec<Vec<usize>>) -> Result<Fan> {
        for (i, r) in rays.iter().enumerate() {
            if r.len() != rank {
                return Err(Error::Dimension(format!(
                    "ray {i} has length {} in rank {rank}",
                    r.len()
                )));
            }
            if !is_primitive(r) {
                return Err(Error::Invalid(format!("ray {i} is not a primitive nonzero vector")));
            }
        }
        let distinct: BTreeSet<&IntVec> = rays.iter().collect();
        if distinct.len() != rays.len() {
            return Err(Error::Invalid("rays must be pairwise distinct".into()));
        }
        let mut cones: Vec<Vec<usize>> = Vec::new();
        for c in max_cones {
            let set: BTreeSet<usize> = c.into_iter().collect();
            if let Some(&bad) = set.iter().find(|&&i| i >= rays.len()) {
                return Err(Error::Invalid(format!("cone refers to missing ray {bad}")));
            }
            cones.push(set.into_iter().collect());
        }
        cones.sort();
        cones.dedup();
        Ok(Fan {
            rank,
            rays,
            marked: None,
            max_cones: cones,
        })
    }

    /// Attaches marked generators, each a positive multiple of its ray.
    pub fn with_marked(mut self, marked: Vec<IntVec>) -> Result<Fan> {
        if marked.len() != self.rays.len() {
            return Err(Error::Dimension("one marked generator per ray is required".into()));
        }
        for (i, (m, r)) in marked.iter().zip(&self.rays).enumerate() {
            if m.len() != self.rank || is_zero_vec(m) || primitive(m) != *r {
                return Err(Error::Invalid(format!(
                    "marked generator {i} is not a positive multiple of its ray"
                )));
            }
        }
        self.marked = Some(marked);
        Ok(self)
    }

    pub fn without_marking(mut self) -> Fan {
        self.marked = None;
        self
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[IntVec] {
        &self.rays
    }

    pub fn has_marking(&self) -> bool {
        self.marked.is_some()
    }

    /// Marked generators, defaulting to the primitive rays.
    pub fn marked_generators(&self) -> &[IntVec] {
        self.marked.as_deref().unwrap_or(&self.rays)
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    pub fn cone_from_indices(&self, idx: &[usize]) -> Cone {
        let gens: Vec<IntVec> = idx.iter().map(|&i| self.rays[i].clone()).collect();
        Cone::new(self.rank, &gens).expect("fan rays have the fan rank")
    }

    pub fn max_cone(&self, i: usize) -> Cone {
        self.cone_from_indices(&self.max_cones[i])
    }

    pub fn ray_index(&self, v: &[Int]) -> Option<usize> {
        let p = primitive(v);
        self.rays.iter().position(|r| *r == p)
    }

    /// All cones of the fan as sorted ray-index sets, with dimensions.
    /// Assumes listed rays are extremal in their cones (see
    /// [`validate_fan`]).
    pub fn cone_sets(&self) -> BTreeMap<Vec<usize>, usize> {
        let mut out = BTreeMap::new();
        for mc in &self.max_cones {
            let c = self.cone_from_indices(mc);
            let Ok(faces) = c.face_ray_sets() else {
                continue;
            };
            for (s, d) in faces {
                let idx: BTreeSet<usize> = s
                    .iter()
                    .filter_map(|&k| self.ray_index(&c.rays()[k]))
                    .collect();
                out.insert(idx.into_iter().collect(), d);
            }
        }
        out
    }

    /// Canonical form up to a change of lattice basis: the row-style Hermite
    /// form of the matrix whose columns are the marked generators, together
    /// with the maximal cones. Two fans with labeled rays are isomorphic by
    /// a lattice automorphism fixing the labels iff these agree.
    pub fn canonical_form(&self) -> (LatticeMap, Vec<Vec<usize>>) {
        let m = LatticeMap::from_columns(self.rank, self.marked_generators()).unwrap();
        (hnf(&m).0, self.max_cones.clone())
    }

    /// Applies a linear map to all rays and marked generators. The result
    /// is not validated.
    pub fn map_by(&self, q: &LatticeMap) -> Result<Fan> {
        if q.cols() != self.rank {
            return Err(Error::Dimension(format!(
                "map with {} columns applied to a fan of rank {}",
                q.cols(),
                self.rank
            )));
        }
        let mut rays = Vec::new();
        let mut marked = Vec::new();
        for (i, m) in self.marked_generators().iter().enumerate() {
            let img = q.apply(m)?;
            if is_zero_vec(&img) {
                return Err(Error::QuotientNotFan(format!("ray {i} maps to zero")));
            }
            rays.push(primitive(&img));
            marked.push(img);
        }
        for i in 0..rays.len() {
            for j in (i + 1)..rays.len() {
                if rays[i] == rays[j] {
                    return Err(Error::QuotientNotFan(format!(
                        "rays {i} and {j} map to the same ray"
                    )));
                }
            }
        }
        Fan::new(q.rows(), rays, self.max_cones.clone())?.with_marked(marked)
    }
}

/// Verdict and human-readable diagnostics from [`validate_fan`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanValidation {
    pub valid: bool,
    pub diagnostics: Vec<String>,
}

/// Checks strong convexity, that listed rays are extremal, and that any two
/// maximal cones meet in a common face.
pub fn validate_fan(f: &Fan) -> FanValidation {
    let mut diagnostics = Vec::new();
    let cones: Vec<Cone> = (0..f.max_cones.len()).map(|i| f.max_cone(i)).collect();
    for (i, c) in cones.iter().enumerate() {
        if !c.is_strongly_convex() {
            diagnostics.push(format!("cone {i} is not strongly convex"));
            continue;
        }
        for &r in &f.max_cones[i] {
            if !c.rays().contains(&f.rays[r]) {
                diagnostics.push(format!("ray {r} is not an extremal ray of cone {i}"));
            }
        }
    }
    for i in 0..cones.len() {
        for j in (i + 1)..cones.len() {
            let Ok(inter) = cones[i].intersection(&cones[j]) else {
                continue;
            };
            if !inter.is_face_of(&cones[i]) || !inter.is_face_of(&cones[j]) {
                diagnostics.push(format!(
                    "cones {i} and {j} intersect in a cone that is not a face of each"
                ));
            }
        }
    }
    FanValidation {
        valid: diagnostics.is_empty(),
        diagnostics,
    }
}

/// All `k`-dimensional cones of the fan.
pub fn k_cones(f: &Fan, k: usize) -> Vec<Cone> {
    let mut out: Vec<Cone> = f
        .cone_sets()
        .into_iter()
        .filter(|(_, d)| *d == k)
        .map(|(s, _)| f.cone_from_indices(&s))
        .collect();
    if k == 0 && out.is_empty() {
        out.push(Cone::zero(f.rank));
    }
    out.sort_by_key(|a| a.generators());
    out
}

/// Pairing witness: ray `dual_ray` of the second fan against ray `ray` of
/// the first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualWitness {
    pub dual_ray: usize,
    pub ray: usize,
    pub pairing: Int,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualFanReport {
    pub verdict: bool,
    pub witness: Option<DualWitness>,
}

/// `s` and `s_prime` are dual iff every ray generator of `s_prime` pairs
/// nonnegatively with every ray generator of `s`.
pub fn is_dual_pair(s: &Fan, s_prime: &Fan) -> Result<DualFanReport> {
    if s.rank != s_prime.rank {
        return Err(Error::Dimension(format!(
            "fans of rank {} and {} cannot be dual",
            s.rank, s_prime.rank
        )));
    }
    for (j, m) in s_prime.rays.iter().enumerate() {
        for (i, n) in s.rays.iter().enumerate() {
            let p = dot(m, n);
            if p.is_negative() {
                return Ok(DualFanReport {
                    verdict: false,
                    witness: Some(DualWitness {
                        dual_ray: j,
                        ray: i,
                        pairing: p,
                    }),
                });
            }
        }
    }
    Ok(DualFanReport {
        verdict: true,
        witness: None,
    })
}

/// Finite-group data of a quotient fan: the rank of `K = ker(q^t)` and the
/// torsion `G` of `coker(q^t)`, with class lifts in the source character
/// lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientData {
    pub kernel_rank: usize,
    pub group: FiniteAbelianGroup,
}

/// Image of a fan under `q`, verified to be a fan. Marked generators are
/// carried as images of marked generators.
pub fn quotient_fan(f: &Fan, q: &LatticeMap) -> Result<(Fan, QuotientData)> {
    let image = f.map_by(q)?;
    let v = validate_fan(&image);
    if !v.valid {
        return Err(Error::QuotientNotFan(v.diagnostics.join("; ")));
    }
    let qt = q.transpose();
    let kernel_rank = qt.cols() - qt.rank();
    let (_, group) = cokernel(&qt);
    Ok((image, QuotientData { kernel_rank, group }))
}

/// Facets of maximal cones (as ray-index sets) with the maximal cones that
/// contain them.
fn facet_census(f: &Fan) -> Option<BTreeMap<Vec<usize>, usize>> {
    let mut census: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for mc in &f.max_cones {
        let c = f.cone_from_indices(mc);
        if !c.is_full_dimensional() {
            return None;
        }
        for (s, d) in c.face_ray_sets().ok()? {
            if d + 1 == f.rank {
                let idx: Vec<usize> = s.iter().filter_map(|&k| f.ray_index(&c.rays()[k])).collect();
                *census.entry(idx).or_insert(0) += 1;
            }
        }
    }
    Some(census)
}

/// Support is the whole space: maximal cones are full dimensional and every
/// facet of a maximal cone lies in exactly two maximal cones.
pub fn is_complete(f: &Fan) -> bool {
    if f.max_cones.is_empty() {
        return false;
    }
    if f.rank == 0 {
        return true;
    }
    match facet_census(f) {
        Some(c) => c.values().all(|&n| n == 2),
        None => false,
    }
}

/// Support equals the convex cone `c`: maximal cones are full dimensional
/// and inside `c`, and each facet of a maximal cone is either shared by
/// exactly two maximal cones or lies on the boundary of `c`.
pub fn covers_cone(f: &Fan, c: &Cone) -> bool {
    if f.rank != c.rank() || f.max_cones.is_empty() || !c.is_full_dimensional() {
        return false;
    }
    if f.max_cones.iter().any(|mc| !c.contains_cone(&f.cone_from_indices(mc))) {
        return false;
    }
    let Some(census) = facet_census(f) else {
        return false;
    };
    census.iter().all(|(facet, &n)| {
        let on_boundary = c
            .facet_inequalities()
            .iter()
            .any(|a| facet.iter().all(|&r| dot(a, &f.rays[r]).is_zero()));
        if on_boundary {
            n == 1
        } else {
            n == 2
        }
    })
}

/// Every maximal cone is generated by part of a lattice basis.
pub fn is_smooth(f: &Fan) -> bool {
    f.max_cones.iter().all(|mc| {
        let gens: Vec<IntVec> = mc.iter().map(|&i| f.rays[i].clone()).collect();
        let m = LatticeMap::from_columns(f.rank, &gens).unwrap();
        let s = snf(&m);
        s.rank() == gens.len() && s.torsion().is_empty()
    })
}

/// Fan of projective `n`-space: rays `e_1..e_n, -(e_1+...+e_n)`, maximal
/// cones all `n`-subsets.
pub fn projective_space_fan(n: usize) -> Fan {
    assert!(n >= 1, "projective space needs n >= 1");
    let mut rays: Vec<IntVec> = (0..n)
        .map(|i| (0..n).map(|j| Int::from((i == j) as i64)).collect())
        .collect();
    rays.push(vec![Int::from(-1); n]);
    let cones: Vec<Vec<usize>> = (0..=n)
        .map(|skip| (0..=n).filter(|&i| i != skip).collect())
        .collect();
    Fan::new(n, rays, cones).unwrap()
}

/// The positive orthant with all its faces.
pub fn orthant_fan(n: usize) -> Fan {
    assert!(n >= 1, "orthant fan needs n >= 1");
    let rays: Vec<IntVec> = (0..n)
        .map(|i| (0..n).map(|j| Int::from((i == j) as i64)).collect())
        .collect();
    Fan::new(n, rays, vec![(0..n).collect()]).unwrap()
}

/// Product fan `Y1 x Y2` in `N1 + N2`.
pub fn product_fan(a: &Fan, b: &Fan) -> Fan {
    let n = a.rank + b.rank;
    let mut rays = Vec::new();
    for r in &a.rays {
        let mut v = r.clone();
        v.extend(std::iter::repeat_n(Int::zero(), b.rank));
        rays.push(v);
    }
    for r in &b.rays {
        let mut v = vec![Int::zero(); a.rank];
        v.extend(r.iter().cloned());
        rays.push(v);
    }
    let mut cones = Vec::new();
    for ca in &a.max_cones {
        for cb in &b.max_cones {
            let mut c = ca.clone();
            c.extend(cb.iter().map(|&j| j + a.rays.len()));
            cones.push(c);
        }
    }
    Fan::new(n, rays, cones).unwrap()
}

/// Lattice automorphisms `U` with `U(a) = b`: `U` sends the rays of `a`
/// bijectively onto the rays of `b` and maximal cones onto maximal cones.
/// Rays are unlabeled. Empty when the rays of `a` do not span.
pub fn isomorphisms(a: &Fan, b: &Fan) -> Vec<LatticeMap> {
    let n = a.rank;
    if n != b.rank || a.rays.len() != b.rays.len() || a.max_cones.len() != b.max_cones.len() {
        return Vec::new();
    }
    // greedy spanning subset of rays of a
    let mut basis: Vec<usize> = Vec::new();
    for i in 0..a.rays.len() {
        let mut trial: Vec<IntVec> = basis.iter().map(|&j| a.rays[j].clone()).collect();
        trial.push(a.rays[i].clone());
        if crate::lattice::rank(&trial) == trial.len() {
            basis.push(i);
        }
        if basis.len() == n {
            break;
        }
    }
    if basis.len() != n {
        return Vec::new();
    }
    let a_sel: Vec<IntVec> = basis.iter().map(|&i| a.rays[i].clone()).collect();
    let a_inv = LatticeMap::from_columns(n, &a_sel).unwrap().inverse_rational().unwrap();
    let target_cones: BTreeSet<Vec<usize>> = b.max_cones.iter().cloned().collect();
    let mut out = Vec::new();
    let mut choice: Vec<usize> = Vec::new();
    fn rec(
        k: usize,
        n: usize,
        choice: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if choice.len() == n {
            visit(choice);
            return;
        }
        for j in 0..k {
            if !choice.contains(&j) {
                choice.push(j);
                rec(k, n, choice, visit);
                choice.pop();
            }
        }
    }
    let mut visit = |ch: &[usize]| {
        // U = B_sel * A_sel^{-1}
        let mut rows = Vec::with_capacity(n);
        for r in 0..n {
            let mut row = Vec::with_capacity(n);
            for c in 0..n {
                let mut acc = crate::Rat::zero();
                for (k, &j) in ch.iter().enumerate() {
                    acc += crate::Rat::from_integer(b.rays[j][r].clone()) * &a_inv[k][c];
                }
                if !acc.is_integer() {
                    return;
                }
                row.push(acc.to_integer());
            }
            rows.push(row);
        }
        let u = LatticeMap::from_rows(n, rows).unwrap();
        if !u.is_unimodular() {
            return;
        }
        let mut perm = Vec::with_capacity(a.rays.len());
        for r in &a.rays {
            match b.rays.iter().position(|x| *x == u.apply(r).unwrap()) {
                Some(j) if !perm.contains(&j) => perm.push(j),
                _ => return,
            }
        }
        let mapped: BTreeSet<Vec<usize>> = a
            .max_cones
            .iter()
            .map(|c| {
                let mut s: Vec<usize> = c.iter().map(|&i| perm[i]).collect();
                s.sort();
                s
            })
            .collect();
        if mapped == target_cones && !out.contains(&u) {
            out.push(u);
        }
    };
    rec(b.rays.len(), n, &mut choice, &mut visit);
    out
}

/// An isomorphism `U` of `a` onto `b` whose inverse transpose carries
/// `a_dual` onto `b_dual`, if one exists.
pub fn dual_pair_isomorphism(a: &Fan, a_dual: &Fan, b: &Fan, b_dual: &Fan) -> Option<LatticeMap> {
    let duals = isomorphisms(a_dual, b_dual);
    isomorphisms(a, b).into_iter().find(|u| {
        let v = u.inverse_unimodular().unwrap().transpose();
        duals.contains(&v)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ivec, ivecs};

    #[test]
    fn projective_spaces() {
        let p4 = projective_space_fan(4);
        assert_eq!(p4.rays().len(), 5);
        assert_eq!(p4.max_cones().len(), 5);
        assert!(validate_fan(&p4).valid);
        assert_eq!(k_cones(&p4, 1).len(), 5);
        assert_eq!(k_cones(&p4, 0).len(), 1);
        let p2 = projective_space_fan(2);
        assert!(is_complete(&p2) && is_smooth(&p2));
        assert!(is_complete(&projective_space_fan(1)));
    }

    #[test]
    fn orthant_predicates() {
        let o = orthant_fan(2);
        assert!(!is_complete(&o));
        assert!(is_smooth(&o));
        assert_eq!(k_cones(&o, 1).len(), 2);
    }

    #[test]
    fn overlapping_cones_are_invalid() {
        let f = Fan::new(2, ivecs(&[&[1, 0], &[1, 1], &[0, 1], &[1, 2]]), vec![vec![0, 1], vec![3, 0]]).unwrap();
        let v = validate_fan(&f);
        assert!(!v.valid);
        assert!(v.diagnostics[0].contains("cones 0 and 1"));
    }

    #[test]
    fn non_smooth_cone() {
        let f = Fan::new(2, ivecs(&[&[1, 0], &[1, 2]]), vec![vec![0, 1]]).unwrap();
        assert!(!is_smooth(&f));
    }

    #[test]
    fn duality_and_witness() {
        let o = orthant_fan(2);
        assert!(is_dual_pair(&o, &o).unwrap().verdict);
        let a = Fan::new(1, vec![ivec(&[1])], vec![vec![0]]).unwrap();
        let b = Fan::new(1, vec![ivec(&[-1])], vec![vec![0]]).unwrap();
        let r = is_dual_pair(&a, &b).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.witness.unwrap().pairing, Int::from(-1));
        assert!(is_dual_pair(&a, &o).is_err());
    }

    #[test]
    fn quotient_by_two() {
        let f = Fan::new(1, vec![ivec(&[1])], vec![vec![0]]).unwrap();
        let q = LatticeMap::from_i64(1, &[&[2]]);
        let (g, data) = quotient_fan(&f, &q).unwrap();
        assert_eq!(g.rays(), &[ivec(&[1])]);
        assert_eq!(g.marked_generators(), &[ivec(&[2])]);
        assert_eq!(data.group.invariant_factors(), &[Int::from(2)]);
        assert_eq!(data.kernel_rank, 0);
        let (same, d) = quotient_fan(&projective_space_fan(2), &LatticeMap::identity(2)).unwrap();
        assert_eq!(same.rays(), projective_space_fan(2).rays());
        assert!(d.group.is_trivial());
    }

    #[test]
    fn swapping_coordinates_is_an_isomorphism() {
        let p2 = projective_space_fan(2);
        let swapped = Fan::new(2, ivecs(&[&[0, 1], &[1, 0], &[-1, -1]]), vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let isos = isomorphisms(&p2, &swapped);
        assert_eq!(isos.len(), 6);
        assert!(isomorphisms(&p2, &orthant_fan(2)).is_empty());
    }

    #[test]
    fn product_of_lines() {
        let p1 = projective_space_fan(1);
        let sq = product_fan(&p1, &p1);
        assert!(is_complete(&sq) && is_smooth(&sq));
        assert_eq!(sq.max_cones().len(), 4);
    }
}
